#include "hankel/poly.hpp"

#include <sstream>

namespace hankel {

void Poly::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0)
            it = terms_.erase(it);
        else
            ++it;
    }
}

Poly Poly::operator-() const {
    Poly out(syms_);
    for (const auto& [e, c] : terms_) out.terms_[e] = -c;
    return out;
}

Poly Poly::operator+(const Poly& rhs) const {
    check_universe(rhs);
    Poly out(syms_);
    out.terms_ = terms_;
    for (const auto& [e, c] : rhs.terms_) out.terms_[e] += c;
    out.prune();
    return out;
}

Poly Poly::operator-(const Poly& rhs) const { return *this + (-rhs); }

Poly Poly::operator*(const Poly& rhs) const {
    check_universe(rhs);
    Poly out(syms_);
    const std::size_t n = syms_->size();
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            Exponents e(n);
            for (std::size_t i = 0; i < n; ++i) e[i] = static_cast<std::uint8_t>(ea[i] + eb[i]);
            out.terms_[e] += ca * cb;
        }
    }
    out.prune();
    return out;
}

Poly Poly::scale(const Rational& c) const {
    Poly out(syms_);
    if (c == 0) return out;
    for (const auto& [e, v] : terms_) out.terms_[e] = v * c;
    return out;
}

Poly Poly::pow(unsigned n) const {
    Poly out = Poly::constant(syms_, 1);
    for (unsigned i = 0; i < n; ++i) out = out * *this;
    return out;
}

Poly Poly::substitute(const std::string& name, const Poly& value) const {
    check_universe(value);
    const std::size_t k = syms_->index(name);
    Poly out = Poly::zero(syms_);
    for (const auto& [e, c] : terms_) {
        Exponents rest = e;
        const unsigned power = rest[k];
        rest[k] = 0;
        Poly term(syms_);
        term.terms_[rest] = c;
        if (power > 0) term = term * value.pow(power);
        out += term;
    }
    return out;
}

Rational Poly::eval(const std::vector<Rational>& point) const {
    if (point.size() != syms_->size()) throw SymbolMismatch("evaluation point arity mismatch");
    Rational acc = 0;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (unsigned k = 0; k < e[i]; ++k) t *= point[i];
        acc += t;
    }
    return acc;
}

unsigned Poly::total_degree() const {
    unsigned deg = 0;
    for (const auto& [e, c] : terms_) {
        unsigned d = 0;
        for (auto x : e) d += x;
        if (d > deg) deg = d;
    }
    return deg;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << (c >= 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        Rational a = abs(c);
        std::vector<std::string> factors;
        bool any_sym = false;
        for (auto x : e)
            if (x) any_sym = true;
        if (a != 1 || !any_sym) factors.push_back(to_fraction_string(a));
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (!e[i]) continue;
            std::string f = syms_->name(i);
            if (e[i] > 1) f += "^" + std::to_string(static_cast<unsigned>(e[i]));
            factors.push_back(f);
        }
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i) os << "*";
            os << factors[i];
        }
    }
    return os.str();
}

}  // namespace hankel
