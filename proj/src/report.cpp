#include "hankel/report.hpp"

#include <json.hpp>

#include <cstdio>
#include <sstream>

namespace hankel {

using json = nlohmann::ordered_json;

OutputFormat parse_format(const std::string& text) {
    if (text == "json") return OutputFormat::Json;
    if (text == "csv") return OutputFormat::Csv;
    if (text == "text") return OutputFormat::Text;
    throw ConfigError("unknown format: " + text + " (expected json|csv|text)");
}

ClassKind parse_class(const std::string& text) {
    if (text == "s" || text == "starlike") return ClassKind::Starlike;
    if (text == "k" || text == "convex") return ClassKind::Convex;
    if (text == "r" || text == "bt" || text == "bounded-turning") return ClassKind::BoundedTurning;
    if (text == "m" || text == "harmonic-m") return ClassKind::HarmonicM;
    throw ConfigError("unknown class: " + text + " (expected s|k|r|harmonic-m)");
}

std::vector<Rational> parse_alpha_grid(const std::string& text) {
    const auto c1 = text.find(':');
    const auto c2 = text.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw ConfigError("alpha grid must be start:stop:step");
    const Rational start = parse_rational(text.substr(0, c1));
    const Rational stop = parse_rational(text.substr(c1 + 1, c2 - c1 - 1));
    const Rational step = parse_rational(text.substr(c2 + 1));
    if (step <= 0) throw ConfigError("alpha grid step must be positive");
    std::vector<Rational> grid;
    for (Rational a = start; a <= stop; a += step) {
        if (a >= 1) break;
        grid.push_back(a);
    }
    return grid;
}

std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string csv_row(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += csv_quote(fields[i]);
    }
    out += '\n';
    return out;
}

// ---- identities ------------------------------------------------------------

std::string identities_report(const std::vector<IdentityReport>& reports, OutputFormat fmt) {
    std::ostringstream os;
    switch (fmt) {
        case OutputFormat::Json:
            for (const auto& r : reports) {
                json row = {{"name", r.name},
                            {"holds", r.holds},
                            {"residual_term_count", r.residual_term_count()}};
                os << row.dump() << '\n';
            }
            break;
        case OutputFormat::Csv:
            os << csv_row({"name", "holds", "residual_term_count"});
            for (const auto& r : reports)
                os << csv_row({r.name, r.holds ? "true" : "false",
                               std::to_string(r.residual_term_count())});
            break;
        case OutputFormat::Text:
            for (const auto& r : reports) {
                os << (r.holds ? "  ok  " : (r.erratum ? "ERRATUM" : " FAIL "));
                os << "  " << r.name << "\n        " << r.note << '\n';
                if (!r.holds) os << "        residual: " << r.residual_string() << '\n';
            }
            break;
    }
    return os.str();
}

// ---- bounds ----------------------------------------------------------------

std::string bounds_report(const std::vector<BoundResult>& rows, OutputFormat fmt) {
    std::ostringstream os;
    switch (fmt) {
        case OutputFormat::Json: {
            json arr = json::array();
            for (const auto& b : rows) {
                arr.push_back({{"class", class_name(b.cls.kind)},
                               {"alpha", to_double(b.cls.alpha)},
                               {"alpha_exact", to_fraction_string(b.cls.alpha)},
                               {"functional", b.functional.name()},
                               {"bound", b.value},
                               {"bound_exact", b.exact_string()},
                               {"source", b.source}});
            }
            os << arr.dump(2) << '\n';
            break;
        }
        case OutputFormat::Csv:
            os << csv_row({"class", "alpha", "alpha_exact", "functional", "bound", "bound_exact",
                           "source"});
            for (const auto& b : rows)
                os << csv_row({class_name(b.cls.kind), format_real(to_double(b.cls.alpha)),
                               to_fraction_string(b.cls.alpha), b.functional.name(),
                               format_real(b.value), b.exact_string(), b.source});
            break;
        case OutputFormat::Text:
            for (const auto& b : rows) {
                os << class_name(b.cls.kind) << "  alpha=" << to_fraction_string(b.cls.alpha)
                   << "  " << b.functional.name() << " <= " << format_real(b.value);
                if (b.exact) os << " = " << b.exact_string();
                os << "  [" << b.source << "]\n";
            }
            break;
    }
    return os.str();
}

// ---- search ----------------------------------------------------------------

namespace {

std::string measure_string(const HerglotzMeasure& m) {
    std::string out;
    for (std::size_t i = 0; i < m.atoms().size(); ++i) {
        if (i) out += ';';
        out += format_real(m.atoms()[i].weight) + "@" + format_real(m.atoms()[i].angle);
    }
    return out;
}

json search_row_json(const SearchReport& r) {
    json jp = json::array();
    for (const Complex& c : r.best_p.p) jp.push_back({c.real(), c.imag()});
    json jm = json::array();
    for (const Atom& a : r.best_measure.atoms())
        jm.push_back({{"weight", a.weight}, {"angle", a.angle}});
    return {{"class", class_name(r.config.cls.kind)},
            {"alpha", to_double(r.config.cls.alpha)},
            {"alpha_exact", to_fraction_string(r.config.cls.alpha)},
            {"functional", r.config.functional.name()},
            {"restarts", r.config.restarts},
            {"atoms", r.config.atoms},
            {"refine_iters", r.config.refine_iters},
            {"seed", r.config.seed},
            {"tol", r.config.tol},
            {"pin_rotation", r.config.pin_rotation},
            {"best_magnitude", r.best_magnitude},
            {"bound", r.bound.value},
            {"bound_exact", r.bound.exact_string()},
            {"gap", r.gap},
            {"evaluations", r.evaluations},
            {"best_restart", r.best_restart},
            {"best_p", jp},
            {"best_measure", jm}};
}

}  // namespace

std::string search_report(const std::vector<SearchReport>& rows, OutputFormat fmt) {
    std::ostringstream os;
    switch (fmt) {
        case OutputFormat::Json: {
            if (rows.size() == 1) {
                os << search_row_json(rows[0]).dump(2) << '\n';
            } else {
                json arr = json::array();
                for (const auto& r : rows) arr.push_back(search_row_json(r));
                os << arr.dump(2) << '\n';
            }
            break;
        }
        case OutputFormat::Csv: {
            os << csv_row({"class", "alpha", "alpha_exact", "functional", "restarts", "atoms",
                           "refine_iters", "seed", "best_magnitude", "bound", "bound_exact",
                           "gap", "evaluations", "best_restart", "measure"});
            for (const auto& r : rows) {
                os << csv_row({class_name(r.config.cls.kind),
                               format_real(to_double(r.config.cls.alpha)),
                               to_fraction_string(r.config.cls.alpha),
                               r.config.functional.name(), std::to_string(r.config.restarts),
                               std::to_string(r.config.atoms),
                               std::to_string(r.config.refine_iters),
                               std::to_string(r.config.seed), format_real(r.best_magnitude),
                               format_real(r.bound.value), r.bound.exact_string(),
                               format_real(r.gap), std::to_string(r.evaluations),
                               std::to_string(r.best_restart), measure_string(r.best_measure)});
            }
            break;
        }
        case OutputFormat::Text:
            for (const auto& r : rows) {
                os << class_name(r.config.cls.kind)
                   << "  alpha=" << to_fraction_string(r.config.cls.alpha) << "  "
                   << r.config.functional.name() << ": best=" << format_real(r.best_magnitude)
                   << "  bound=" << format_real(r.bound.value);
                if (r.bound.exact) os << " (" << r.bound.exact_string() << ")";
                os << "  gap=" << format_real(r.gap) << (r.respects_bound() ? "" : "  VIOLATION")
                   << '\n';
            }
            break;
    }
    return os.str();
}

// ---- lemma suite -----------------------------------------------------------

std::string lemma_report(const LemmaSuiteReport& rep, std::uint64_t seed, double tol,
                         OutputFormat fmt) {
    const bool pass = rep.all_within(tol);
    std::ostringstream os;
    switch (fmt) {
        case OutputFormat::Json: {
            json row = {{"samples", rep.samples},
                        {"seed", seed},
                        {"max_abs_residual", rep.max_r1},
                        {"max_product_residual", rep.max_r2},
                        {"max_mu_residual", rep.max_r3},
                        {"max_witness_roundtrip", rep.max_roundtrip},
                        {"max_witness_excess", rep.max_witness_excess},
                        {"min_toeplitz_eig", rep.min_toeplitz_eig},
                        {"tolerance", tol},
                        {"pass", pass}};
            if (!pass) row["worst_sample_seed"] = rep.worst_sample_seed;
            os << row.dump(2) << '\n';
            break;
        }
        case OutputFormat::Csv:
            os << csv_row({"samples", "seed", "max_abs_residual", "max_product_residual",
                           "max_mu_residual", "max_witness_roundtrip", "max_witness_excess",
                           "min_toeplitz_eig", "pass"});
            os << csv_row({std::to_string(rep.samples), std::to_string(seed),
                           format_real(rep.max_r1), format_real(rep.max_r2),
                           format_real(rep.max_r3), format_real(rep.max_roundtrip),
                           format_real(rep.max_witness_excess),
                           format_real(rep.min_toeplitz_eig), pass ? "true" : "false"});
            break;
        case OutputFormat::Text:
            os << "samples                " << rep.samples << '\n'
               << "max |p_n|-2            " << format_real(rep.max_r1) << '\n'
               << "max |p_n-p_k p_(n-k)|-2  " << format_real(rep.max_r2) << '\n'
               << "max |p_n-mu p_k p_(n-k)|-2 " << format_real(rep.max_r3) << '\n'
               << "max witness round-trip " << format_real(rep.max_roundtrip) << '\n'
               << "max witness excess     " << format_real(rep.max_witness_excess) << '\n'
               << "min toeplitz eigenvalue " << format_real(rep.min_toeplitz_eig) << '\n'
               << (pass ? "PASS" : "FAIL") << '\n';
            if (!pass) os << "worst sample stream seed: " << rep.worst_sample_seed << '\n';
            break;
    }
    return os.str();
}

}  // namespace hankel
