#include "hankel/functionals.hpp"

#include <cmath>
#include <vector>

namespace hankel {

std::string Functional::name() const {
    switch (kind) {
        case FunctionalKind::H31: return "h31";
        case FunctionalKind::H31HPart: return "h31-h";
        case FunctionalKind::H31GPart: return "h31-g";
        case FunctionalKind::J2: return "j2";
        case FunctionalKind::J3: return "j3";
        case FunctionalKind::Jn: return "jn:" + std::to_string(order);
    }
    return "?";
}

Functional Functional::parse(const std::string& text) {
    if (text == "h31") return {FunctionalKind::H31, 0};
    if (text == "h31-h") return {FunctionalKind::H31HPart, 0};
    if (text == "h31-g") return {FunctionalKind::H31GPart, 0};
    if (text == "j2") return {FunctionalKind::J2, 2};
    if (text == "j3") return {FunctionalKind::J3, 3};
    if (text.rfind("jn:", 0) == 0) {
        int n = 0;
        try {
            n = std::stoi(text.substr(3));
        } catch (...) {
            throw ConfigError("bad functional: " + text);
        }
        if (n < 2) throw ConfigError("jn order must be >= 2");
        return {FunctionalKind::Jn, n};
    }
    throw ConfigError("unknown functional: " + text + " (expected h31|h31-h|h31-g|j2|j3|jn:<n>)");
}

namespace {

Complex det(const std::vector<std::vector<Complex>>& m) {
    const std::size_t q = m.size();
    if (q == 1) return m[0][0];
    Complex acc(0.0);
    double sign = 1.0;
    for (std::size_t col = 0; col < q; ++col) {
        std::vector<std::vector<Complex>> minor(q - 1, std::vector<Complex>(q - 1));
        for (std::size_t i = 1; i < q; ++i) {
            std::size_t jj = 0;
            for (std::size_t j = 0; j < q; ++j) {
                if (j == col) continue;
                minor[i - 1][jj++] = m[i][j];
            }
        }
        acc += sign * m[0][col] * det(minor);
        sign = -sign;
    }
    return acc;
}

FunctionalValue wrap(Complex v) { return {v, std::abs(v)}; }

}  // namespace

FunctionalValue hankel(std::size_t q, std::size_t n, std::span<const Complex> a) {
    if (q < 1 || n < 1) throw Error("hankel: q and n must be positive");
    const std::size_t top = n + 2 * (q - 1);
    if (a.size() < top)
        throw InsufficientCoefficients("hankel(" + std::to_string(q) + "," + std::to_string(n) +
                                       ") needs a_1..a_" + std::to_string(top));
    std::vector<std::vector<Complex>> m(q, std::vector<Complex>(q));
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j) m[i][j] = a[n + i + j - 1];
    return wrap(det(m));
}

FunctionalValue zalcman(std::size_t n, std::span<const Complex> a) {
    if (n < 2) throw Error("zalcman: n must be >= 2");
    if (a.size() < 2 * n - 1)
        throw InsufficientCoefficients("zalcman(" + std::to_string(n) + ") needs a_1..a_" +
                                       std::to_string(2 * n - 1));
    const Complex an = a[n - 1];
    return wrap(an * an - a[2 * n - 2]);
}

FunctionalValue h31_expansion(const ClassSpec& cls, const CaratheodoryCoeffs& p) {
    cls.validate();
    if (p.order() < 4) throw InsufficientCoefficients("h31_expansion needs p_1..p_4");
    const double u = 1.0 - cls.alpha_d();
    const Complex p1 = p.at(1), p2 = p.at(2), p3 = p.at(3), p4 = p.at(4);
    const Complex p1_2 = p1 * p1, p1_3 = p1_2 * p1, p1_4 = p1_3 * p1, p1_6 = p1_4 * p1_2;

    switch (cls.kind) {
        case ClassKind::Starlike:
            return wrap(u * u / 144.0 *
                        (-std::pow(u, 4) * p1_6 + 3.0 * std::pow(u, 3) * p1_4 * p2 +
                         8.0 * u * u * p1_3 * p3 - 9.0 * u * u * p1_2 * p2 * p2 -
                         18.0 * u * p1_2 * p4 + 24.0 * u * p1 * p2 * p3 - 9.0 * u * p2 * p2 * p2 +
                         18.0 * p2 * p4 - 16.0 * p3 * p3));
        case ClassKind::Convex:
        case ClassKind::HarmonicM:
            return wrap(u * u / 8640.0 *
                        (-std::pow(u, 4) * p1_6 + 6.0 * std::pow(u, 3) * p1_4 * p2 +
                         12.0 * u * u * p1_3 * p3 - 21.0 * u * u * p1_2 * p2 * p2 -
                         36.0 * u * p1_2 * p4 + 36.0 * u * p1 * p2 * p3 - 4.0 * u * p2 * p2 * p2 +
                         72.0 * p2 * p4 - 60.0 * p3 * p3));
        case ClassKind::BoundedTurning:
            return wrap(u * u / 2160.0 *
                        (u * (-108.0 * p1_2 * p4 + 180.0 * p1 * p2 * p3 - 80.0 * p2 * p2 * p2) +
                         144.0 * p2 * p4 - 135.0 * p3 * p3));
    }
    throw Error("unreachable");
}

FunctionalValue harmonic_g_h31_expansion(double alpha, const CaratheodoryCoeffs& p) {
    if (!(alpha >= -0.5 && alpha < 1.0)) throw AlphaOutOfRange("alpha out of range for harmonic-m");
    if (p.order() < 3) throw InsufficientCoefficients("g-part expansion needs p_1..p_3");
    const double u = 1.0 - alpha;
    const Complex p1 = p.at(1), p2 = p.at(2), p3 = p.at(3);
    return wrap(u / 540.0 * (-2.0 * u * u * p1 * p1 * p1 - 9.0 * (p3 - u * p1 * p2)));
}

FunctionalValue evaluate_functional(const ClassSpec& cls, const Functional& f,
                                    const CaratheodoryCoeffs& p) {
    const double alpha = cls.alpha_d();
    const bool harmonic = cls.kind == ClassKind::HarmonicM;
    switch (f.kind) {
        case FunctionalKind::H31: {
            if (harmonic)
                throw UnsupportedFunctional("harmonic-m needs h31-h or h31-g");
            CoeffVector v = cls.kind == ClassKind::Starlike ? starlike_coeffs(alpha, p)
                            : cls.kind == ClassKind::Convex ? convex_coeffs(alpha, p)
                                                            : bounded_turning_coeffs(alpha, p);
            return hankel(3, 1, v.sequence());
        }
        case FunctionalKind::H31HPart: {
            if (!harmonic) throw UnsupportedFunctional("h31-h applies to harmonic-m only");
            return hankel(3, 1, harmonic_m_coeffs(alpha, p).h.sequence());
        }
        case FunctionalKind::H31GPart: {
            if (!harmonic) throw UnsupportedFunctional("h31-g applies to harmonic-m only");
            return hankel(3, 1, harmonic_m_coeffs(alpha, p).g_sequence());
        }
        case FunctionalKind::J2:
        case FunctionalKind::J3:
        case FunctionalKind::Jn: {
            const int n = f.kind == FunctionalKind::J2 ? 2 : f.kind == FunctionalKind::J3 ? 3 : f.order;
            if (n < 2) throw UnsupportedFunctional("zalcman order must be >= 2");
            switch (cls.kind) {
                case ClassKind::Starlike:
                    if (n > 3) throw UnsupportedFunctional("jn with n > 3 needs bounded-turning");
                    return zalcman(n, starlike_coeffs(alpha, p).sequence());
                case ClassKind::Convex:
                    if (n > 3) throw UnsupportedFunctional("jn with n > 3 needs bounded-turning");
                    return zalcman(n, convex_coeffs(alpha, p).sequence());
                case ClassKind::BoundedTurning:
                    return zalcman(n, bounded_turning_sequence(alpha, p, 2 * n - 1));
                case ClassKind::HarmonicM:
                    throw UnsupportedFunctional("zalcman functionals are out of scope for harmonic-m");
            }
        }
    }
    throw Error("unreachable");
}

std::size_t required_coeff_order(const ClassSpec& cls, const Functional& f) {
    if (cls.kind == ClassKind::BoundedTurning && f.kind == FunctionalKind::Jn)
        return std::max<std::size_t>(4, 2 * static_cast<std::size_t>(f.order) - 2);
    return 4;
}

}  // namespace hankel
