#pragma once

#include <array>
#include <string>
#include <vector>

#include "hankel/caratheodory.hpp"
#include "hankel/rational.hpp"

namespace hankel {

enum class ClassKind { Starlike, Convex, BoundedTurning, HarmonicM };

std::string class_name(ClassKind kind);

/// Function class plus its order. Valid orders:
///   Starlike, BoundedTurning : 0 <= alpha < 1
///   Convex, HarmonicM        : -1/2 <= alpha < 1
struct ClassSpec {
    ClassKind kind = ClassKind::Starlike;
    Rational alpha = 0;

    double alpha_d() const { return to_double(alpha); }
    void validate() const;  // throws AlphaOutOfRange
};

/// Normalized Taylor coefficients a_1 = 1, a_2..a_5.
struct CoeffVector {
    std::array<Complex, 5> a{Complex(1.0), Complex(0.0), Complex(0.0), Complex(0.0),
                             Complex(0.0)};

    /// 1-based access: at(k) == a_k.
    const Complex& at(std::size_t k) const {
        if (k < 1 || k > 5) throw IndexOutOfRange("coefficient index out of range");
        return a[k - 1];
    }

    std::vector<Complex> sequence() const { return {a.begin(), a.end()}; }
};

/// Harmonic map coefficients: analytic part h and co-analytic part g with
/// b_1 = 0 and (k+1) b_{k+1} = k a_k.
struct HarmonicCoeffVector {
    CoeffVector h;
    std::array<Complex, 5> b{};  // b[0] = b_1 = 0

    std::vector<Complex> g_sequence() const { return {b.begin(), b.end()}; }
};

CoeffVector starlike_coeffs(double alpha, const CaratheodoryCoeffs& p);
CoeffVector convex_coeffs(double alpha, const CaratheodoryCoeffs& p);
CoeffVector bounded_turning_coeffs(double alpha, const CaratheodoryCoeffs& p);
HarmonicCoeffVector harmonic_m_coeffs(double alpha, const CaratheodoryCoeffs& p);

/// c_1 = 1 and c_{k+1} = (1-alpha) p_k / (k+1) out to c_len; the bounded
/// turning relation holds for every k, which lets J_n reach past a_5.
std::vector<Complex> bounded_turning_sequence(double alpha, const CaratheodoryCoeffs& p,
                                              std::size_t len);

}  // namespace hankel
