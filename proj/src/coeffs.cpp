#include "hankel/coeffs.hpp"

namespace hankel {

std::string class_name(ClassKind kind) {
    switch (kind) {
        case ClassKind::Starlike: return "starlike";
        case ClassKind::Convex: return "convex";
        case ClassKind::BoundedTurning: return "bounded-turning";
        case ClassKind::HarmonicM: return "harmonic-m";
    }
    return "?";
}

void ClassSpec::validate() const {
    const Rational lo = (kind == ClassKind::Convex || kind == ClassKind::HarmonicM)
                            ? Rational(-1, 2)
                            : Rational(0);
    if (alpha < lo || alpha >= 1)
        throw AlphaOutOfRange("alpha " + to_fraction_string(alpha) + " outside [" +
                              to_fraction_string(lo) + ", 1) for class " + class_name(kind));
}

namespace {

void check_alpha(double alpha, double lo, const char* cls) {
    if (!(alpha >= lo && alpha < 1.0))
        throw AlphaOutOfRange(std::string("alpha out of range for ") + cls);
}

void check_order(const CaratheodoryCoeffs& p, std::size_t need) {
    if (p.order() < need)
        throw InsufficientCoefficients("coefficient map needs p_1..p_" + std::to_string(need));
}

// The four-row system expressing a_2..a_5 of a starlike-type function through
// the Caratheodory coefficients. Shared by the convex and harmonic maps,
// which rescale it, so no range check here.
CoeffVector starlike_system(double u, const CaratheodoryCoeffs& p) {
    const Complex p1 = p.at(1), p2 = p.at(2), p3 = p.at(3), p4 = p.at(4);
    CoeffVector v;
    v.a[1] = u * p1;
    v.a[2] = 0.5 * u * (u * p1 * p1 + p2);
    v.a[3] = u / 6.0 * (u * u * p1 * p1 * p1 + 3.0 * u * p1 * p2 + 2.0 * p3);
    v.a[4] = u / 24.0 *
             (u * u * u * p1 * p1 * p1 * p1 + 6.0 * u * u * p1 * p1 * p2 + 8.0 * u * p1 * p3 +
              3.0 * u * p2 * p2 + 6.0 * p4);
    return v;
}

}  // namespace

CoeffVector starlike_coeffs(double alpha, const CaratheodoryCoeffs& p) {
    check_alpha(alpha, 0.0, "starlike");
    check_order(p, 4);
    return starlike_system(1.0 - alpha, p);
}

CoeffVector convex_coeffs(double alpha, const CaratheodoryCoeffs& p) {
    check_alpha(alpha, -0.5, "convex");
    check_order(p, 4);
    CoeffVector v = starlike_system(1.0 - alpha, p);
    for (std::size_t k = 2; k <= 5; ++k) v.a[k - 1] /= static_cast<double>(k);
    return v;
}

CoeffVector bounded_turning_coeffs(double alpha, const CaratheodoryCoeffs& p) {
    check_alpha(alpha, 0.0, "bounded-turning");
    check_order(p, 4);
    const double u = 1.0 - alpha;
    CoeffVector v;
    for (std::size_t k = 1; k <= 4; ++k) v.a[k] = u * p.at(k) / static_cast<double>(k + 1);
    return v;
}

HarmonicCoeffVector harmonic_m_coeffs(double alpha, const CaratheodoryCoeffs& p) {
    check_alpha(alpha, -0.5, "harmonic-m");
    HarmonicCoeffVector out;
    out.h = convex_coeffs(alpha, p);
    out.b[0] = 0.0;
    for (std::size_t k = 1; k <= 4; ++k)
        out.b[k] = static_cast<double>(k) / static_cast<double>(k + 1) * out.h.at(k);
    return out;
}

std::vector<Complex> bounded_turning_sequence(double alpha, const CaratheodoryCoeffs& p,
                                              std::size_t len) {
    check_alpha(alpha, 0.0, "bounded-turning");
    if (len < 1) throw Error("sequence length must be >= 1");
    check_order(p, len - 1);
    const double u = 1.0 - alpha;
    std::vector<Complex> c(len);
    c[0] = 1.0;
    for (std::size_t k = 1; k < len; ++k) c[k] = u * p.at(k) / static_cast<double>(k + 1);
    return c;
}

}  // namespace hankel
