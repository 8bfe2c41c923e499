#include "hankel/search.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <thread>

#include "hankel/nelder_mead.hpp"
#include "hankel/rng.hpp"

namespace hankel {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void validate_config(const SearchConfig& c) {
    c.cls.validate();
    if (c.restarts < 1) throw ConfigError("restarts must be >= 1");
    if (c.atoms < 1) throw ConfigError("atoms must be >= 1");
    if (c.refine_iters < 0) throw ConfigError("refine-iters must be >= 0");
    if (!(c.tol > 0)) throw ConfigError("tol must be positive");
}

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("HANKEL_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(std::clamp(hw, 1u, 8u));
}

/// Parameter vector layout: atoms softmax logits, then the free atom angles
/// (all of them, or all but the pinned first one).
struct Encoding {
    int atoms;
    bool pin;

    std::size_t dimension() const {
        return static_cast<std::size_t>(atoms) + static_cast<std::size_t>(atoms - (pin ? 1 : 0));
    }

    HerglotzMeasure decode(const std::vector<double>& params) const {
        const std::size_t m = static_cast<std::size_t>(atoms);
        double max_logit = params[0];
        for (std::size_t i = 1; i < m; ++i) max_logit = std::max(max_logit, params[i]);
        std::vector<Atom> atoms_out(m);
        double sum = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            atoms_out[i].weight = std::exp(params[i] - max_logit);
            sum += atoms_out[i].weight;
        }
        for (auto& a : atoms_out) a.weight /= sum;
        std::size_t j = m;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == 0 && pin)
                atoms_out[i].angle = 0.0;
            else
                atoms_out[i].angle = params[j++];
        }
        return HerglotzMeasure(std::move(atoms_out));
    }

    std::vector<double> encode(const HerglotzMeasure& measure) const {
        const auto& as = measure.atoms();
        std::vector<double> params;
        params.reserve(dimension());
        // Rotation invariance of the functionals lets us rotate the measure
        // so the first atom sits at angle 0 before pinning.
        const double base = pin ? as[0].angle : 0.0;
        for (const Atom& a : as) params.push_back(std::log(std::max(a.weight, 1e-12)));
        for (std::size_t i = 0; i < as.size(); ++i) {
            if (i == 0 && pin) continue;
            params.push_back(as[i].angle - base);
        }
        return params;
    }
};

struct RestartOutcome {
    double magnitude = -1.0;
    std::vector<double> params;
    std::size_t evaluations = 0;
};

}  // namespace

void SearchConfig::validate() const { validate_config(*this); }

SearchReport maximize(const SearchConfig& config) {
    config.validate();
    const BoundResult bound = bound_for(config.cls, config.functional);

    const Encoding enc{config.atoms, config.pin_rotation};
    const std::size_t order = required_coeff_order(config.cls, config.functional);
    const ClassSpec cls = config.cls;
    const Functional functional = config.functional;

    const auto objective = [&](const std::vector<double>& params) {
        const HerglotzMeasure m = enc.decode(params);
        const CaratheodoryCoeffs p = coeffs_from_measure(m, order);
        return -evaluate_functional(cls, functional, p).magnitude;
    };

    const auto run_restart = [&](int r) {
        RestartOutcome out;
        const HerglotzMeasure start =
            sample_measure(derive_stream(config.seed, static_cast<std::uint64_t>(r)),
                           static_cast<std::size_t>(config.atoms));
        std::vector<double> params = enc.encode(start);
        if (config.refine_iters == 0) {
            out.magnitude = -objective(params);
            out.params = std::move(params);
            out.evaluations = 1;
            return out;
        }
        // Coarse descent followed by a restarted fine pass from the incumbent;
        // both stay inside this restart so the best-of-R reduction is
        // monotone in R.
        const auto coarse = nelder_mead(objective, std::move(params), 0.35,
                                        static_cast<std::size_t>(config.refine_iters));
        const auto fine = nelder_mead(objective, coarse.x, 0.02,
                                      static_cast<std::size_t>(config.refine_iters) / 2);
        out.magnitude = -fine.value;
        out.params = fine.x;
        out.evaluations = coarse.evaluations + fine.evaluations;
        return out;
    };

    std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(config.restarts));
    const int threads = std::min(resolve_threads(config.threads), config.restarts);
    if (threads <= 1) {
        for (int r = 0; r < config.restarts; ++r) outcomes[static_cast<std::size_t>(r)] = run_restart(r);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                for (;;) {
                    const int r = next.fetch_add(1);
                    if (r >= config.restarts) return;
                    outcomes[static_cast<std::size_t>(r)] = run_restart(r);
                }
            });
        }
        for (auto& th : pool) th.join();
    }

    // Deterministic reduction: maximum magnitude, ties to the lowest index.
    std::size_t best = 0;
    std::size_t evals = 0;
    for (std::size_t r = 0; r < outcomes.size(); ++r) {
        evals += outcomes[r].evaluations;
        if (outcomes[r].magnitude > outcomes[best].magnitude) best = r;
    }

    const HerglotzMeasure best_measure = enc.decode(outcomes[best].params);
    const CaratheodoryCoeffs best_p = coeffs_from_measure(best_measure, order);
    const double best_magnitude = outcomes[best].magnitude;

    return SearchReport{
        config,
        best_magnitude,
        best_measure,
        best_p,
        bound,
        bound.value - best_magnitude,
        evals,
        static_cast<int>(best),
    };
}

std::vector<SearchReport> alpha_sweep(ClassKind kind, const Functional& functional,
                                      const std::vector<Rational>& alpha_grid,
                                      const SearchConfig& base) {
    std::vector<SearchReport> rows;
    rows.reserve(alpha_grid.size());
    for (const Rational& alpha : alpha_grid) {
        SearchConfig cfg = base;
        cfg.cls = ClassSpec{kind, alpha};
        cfg.functional = functional;
        rows.push_back(maximize(cfg));
    }
    return rows;
}

}  // namespace hankel
