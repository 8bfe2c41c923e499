#pragma once

#include <span>
#include <string>

#include "hankel/coeffs.hpp"

namespace hankel {

struct FunctionalValue {
    Complex value;
    double magnitude;  // |value|
};

/// Which coefficient functional a search or bound refers to. `order` is the
/// Zalcman index and is meaningful for Jn only.
enum class FunctionalKind { H31, H31HPart, H31GPart, J2, J3, Jn };

struct Functional {
    FunctionalKind kind = FunctionalKind::H31;
    int order = 0;  // n for Jn

    std::string name() const;
    static Functional parse(const std::string& text);  // "h31", "h31-h", "jn:4", ...
};

/// Hankel determinant H_{q,n} of the 1-based coefficient sequence a (a[0] is
/// a_1). Requires entries a_n .. a_{n+2(q-1)}; the normalization a_1 = 1 is
/// the caller's business, so co-analytic sequences with a_1 = 0 work too.
FunctionalValue hankel(std::size_t q, std::size_t n, std::span<const Complex> a);

/// Zalcman functional J_n = a_n^2 - a_{2n-1}, n >= 2.
FunctionalValue zalcman(std::size_t n, std::span<const Complex> a);

/// The closed-form p-space expansion of H_{3,1} for the given class
/// (prefactors 1/144, 1/8640, 1/2160; the HarmonicM case evaluates the
/// analytic-part expansion, which coincides with the convex one). Agrees
/// with hankel(3, 1, <class map>) to rounding.
FunctionalValue h31_expansion(const ClassSpec& cls, const CaratheodoryCoeffs& p);

/// p-space expansion of H_{3,1} of the co-analytic part of a harmonic-m map:
/// (1/540)(1-alpha) { -2(1-alpha)^2 p1^3 - 9 [p3 - (1-alpha) p1 p2] }.
FunctionalValue harmonic_g_h31_expansion(double alpha, const CaratheodoryCoeffs& p);

/// Dispatch used by the search: evaluates the requested functional on the
/// class coefficient map. Throws UnsupportedFunctional for combinations with
/// no closed-form bound in scope.
FunctionalValue evaluate_functional(const ClassSpec& cls, const Functional& f,
                                    const CaratheodoryCoeffs& p);

/// Number of Caratheodory coefficients evaluate_functional needs.
std::size_t required_coeff_order(const ClassSpec& cls, const Functional& f);

}  // namespace hankel
