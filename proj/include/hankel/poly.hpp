#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hankel/errors.hpp"
#include "hankel/rational.hpp"

namespace hankel {

/// Ordered, immutable symbol universe shared by the polynomials built over it.
class SymbolSet {
  public:
    explicit SymbolSet(std::vector<std::string> names) : names_(std::move(names)) {}

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }

    std::size_t index(const std::string& name) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return i;
        throw SymbolMismatch("unknown symbol: " + name);
    }

    bool operator==(const SymbolSet& other) const { return names_ == other.names_; }

  private:
    std::vector<std::string> names_;
};

using SymbolsPtr = std::shared_ptr<const SymbolSet>;

inline SymbolsPtr make_symbols(std::vector<std::string> names) {
    return std::make_shared<const SymbolSet>(std::move(names));
}

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are keyed by exponent vectors over the owning SymbolSet and kept in
/// canonical (lexicographic) order; zero coefficients are never stored, so
/// `is_zero` and `operator==` are structural. All ring operations are exact.
class Poly {
  public:
    using Exponents = std::vector<std::uint8_t>;
    using TermMap = std::map<Exponents, Rational>;

    static Poly zero(SymbolsPtr syms) { return Poly(std::move(syms)); }

    static Poly constant(SymbolsPtr syms, const Rational& c) {
        Poly p(std::move(syms));
        if (c != 0) p.terms_[Exponents(p.syms_->size(), 0)] = c;
        return p;
    }

    static Poly var(SymbolsPtr syms, const std::string& name, unsigned power = 1) {
        Poly p(std::move(syms));
        Exponents e(p.syms_->size(), 0);
        e[p.syms_->index(name)] = static_cast<std::uint8_t>(power);
        p.terms_[e] = 1;
        return p;
    }

    Poly operator-() const;
    Poly operator+(const Poly& rhs) const;
    Poly operator-(const Poly& rhs) const;
    Poly operator*(const Poly& rhs) const;
    Poly& operator+=(const Poly& rhs) { return *this = *this + rhs; }
    Poly& operator-=(const Poly& rhs) { return *this = *this - rhs; }
    Poly& operator*=(const Poly& rhs) { return *this = *this * rhs; }

    Poly scale(const Rational& c) const;
    Poly pow(unsigned n) const;

    /// Replaces one symbol by a polynomial over the same universe.
    Poly substitute(const std::string& name, const Poly& value) const;

    /// Exact evaluation; `point` is indexed by symbol position.
    Rational eval(const std::vector<Rational>& point) const;

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    unsigned total_degree() const;

    bool operator==(const Poly& rhs) const {
        check_universe(rhs);
        return terms_ == rhs.terms_;
    }
    bool operator!=(const Poly& rhs) const { return !(*this == rhs); }

    /// Human-readable term list, e.g. "-1/576*p1^2*p2^2 + ...".
    std::string str() const;

    const TermMap& terms() const { return terms_; }
    const SymbolsPtr& symbols() const { return syms_; }

  private:
    explicit Poly(SymbolsPtr syms) : syms_(std::move(syms)) {}

    void check_universe(const Poly& other) const {
        if (syms_ == other.syms_) return;
        if (syms_ && other.syms_ && *syms_ == *other.syms_) return;
        throw SymbolMismatch("polynomials built over different symbol universes");
    }

    void prune();

    SymbolsPtr syms_;
    TermMap terms_;
};

inline Poly operator*(const Rational& c, const Poly& p) { return p.scale(c); }

}  // namespace hankel
