#include "hankel/bounds.hpp"

#include <cmath>

namespace hankel {

namespace {

void require_range(const Rational& alpha, const Rational& lo, const char* what) {
    if (alpha < lo || alpha >= 1)
        throw AlphaOutOfRange(std::string(what) + ": alpha " + to_fraction_string(alpha) +
                              " outside [" + to_fraction_string(lo) + ", 1)");
}

BoundResult exact_result(ClassSpec cls, Functional f, Rational v, std::string source) {
    BoundResult r;
    r.cls = std::move(cls);
    r.functional = f;
    r.value = to_double(v);
    r.exact = std::move(v);
    r.source = std::move(source);
    return r;
}

BoundResult real_result(ClassSpec cls, Functional f, double v, std::string source) {
    BoundResult r;
    r.cls = std::move(cls);
    r.functional = f;
    r.value = v;
    r.source = std::move(source);
    return r;
}

Rational abs_rational(const Rational& q) { return q < 0 ? Rational(-q) : q; }

}  // namespace

std::vector<BoundResult> bound_h31(const ClassSpec& cls) {
    const Rational& a = cls.alpha;
    const Rational u = 1 - a;
    switch (cls.kind) {
        case ClassKind::Starlike: {
            require_range(a, 0, "starlike h31 bound");
            return {exact_result(cls, {FunctionalKind::H31, 0}, u * u * (18 - a) / 18,
                                 "starlike-h31")};
        }
        case ClassKind::Convex: {
            require_range(a, 0, "convex h31 bound");
            return {exact_result(cls, {FunctionalKind::H31, 0}, u * u * (49 - 16 * a) / 540,
                                 "convex-h31")};
        }
        case ClassKind::BoundedTurning: {
            require_range(a, 0, "bounded-turning h31 bound");
            const Rational kink = abs_rational(1 - 4 * a);
            return {exact_result(cls, {FunctionalKind::H31, 0},
                                 u * u * (36 - 20 * a + 5 * kink) / 60, "bounded-turning-h31")};
        }
        case ClassKind::HarmonicM: {
            require_range(a, Rational(-1, 2), "harmonic-m h31 bounds");
            const Rational h = u * u * (15 * a * a - 34 * a + 52) / 540;
            const Rational g = u / 30;
            return {exact_result(cls, {FunctionalKind::H31HPart, 0}, h, "harmonic-h31-h"),
                    exact_result(cls, {FunctionalKind::H31GPart, 0}, g, "harmonic-h31-g")};
        }
    }
    throw Error("unreachable");
}

BoundResult bound_zalcman(const ClassSpec& cls, int n) {
    const Rational& a = cls.alpha;
    const Rational u = 1 - a;
    const Functional f = n == 2   ? Functional{FunctionalKind::J2, 2}
                         : n == 3 ? Functional{FunctionalKind::J3, 3}
                                  : Functional{FunctionalKind::Jn, n};
    if (n < 2) throw UnsupportedFunctional("zalcman bound needs n >= 2");
    switch (cls.kind) {
        case ClassKind::Starlike:
            require_range(a, 0, "starlike zalcman bound");
            if (n == 2) return exact_result(cls, f, u, "starlike-j2");
            if (n == 3) return exact_result(cls, f, u * (8 - 7 * a) / 2, "starlike-j3");
            throw UnsupportedFunctional("starlike zalcman bound covers n in {2,3}");
        case ClassKind::Convex:
            require_range(a, Rational(-1, 2), "convex zalcman bound");
            if (n == 2) return exact_result(cls, f, u / 3, "convex-j2");
            if (n == 3) return exact_result(cls, f, u * (127 - 109 * a) / 360, "convex-j3");
            throw UnsupportedFunctional("convex zalcman bound covers n in {2,3}");
        case ClassKind::BoundedTurning:
            require_range(a, 0, "bounded-turning zalcman bound");
            return exact_result(cls, f, 2 * u / (2 * n - 1), "bounded-turning-jn");
        case ClassKind::HarmonicM:
            throw UnsupportedFunctional("zalcman bounds are out of scope for harmonic-m");
    }
    throw Error("unreachable");
}

BoundResult bound_for(const ClassSpec& cls, const Functional& f) {
    switch (f.kind) {
        case FunctionalKind::H31:
            if (cls.kind == ClassKind::HarmonicM)
                throw UnsupportedFunctional("harmonic-m needs h31-h or h31-g");
            return bound_h31(cls)[0];
        case FunctionalKind::H31HPart:
            if (cls.kind != ClassKind::HarmonicM)
                throw UnsupportedFunctional("h31-h applies to harmonic-m only");
            return bound_h31(cls)[0];
        case FunctionalKind::H31GPart:
            if (cls.kind != ClassKind::HarmonicM)
                throw UnsupportedFunctional("h31-g applies to harmonic-m only");
            return bound_h31(cls)[1];
        case FunctionalKind::J2: return bound_zalcman(cls, 2);
        case FunctionalKind::J3: return bound_zalcman(cls, 3);
        case FunctionalKind::Jn: return bound_zalcman(cls, f.order);
    }
    throw Error("unreachable");
}

std::vector<BoundResult> reference_bounds(ReferenceSet which, const Rational& alpha) {
    const auto spec = [](ClassKind k, const Rational& a) { return ClassSpec{k, a}; };
    const Functional h31{FunctionalKind::H31, 0};
    switch (which) {
        case ReferenceSet::A: {
            const double s3 = std::sqrt(3.0), s5 = std::sqrt(5.0);
            return {
                exact_result(spec(ClassKind::Starlike, 0), h31, 16, "reference-a"),
                real_result(spec(ClassKind::Convex, 0), h31, (32.0 + 33.0 * s3) / (72.0 * s3),
                            "reference-a"),
                real_result(spec(ClassKind::BoundedTurning, 0), h31,
                            (2736.0 * s3 + 675.0 * s5) / (4860.0 * s3), "reference-a"),
            };
        }
        case ReferenceSet::B:
            return {
                exact_result(spec(ClassKind::Starlike, 0), h31, 1, "reference-b"),
                exact_result(spec(ClassKind::Convex, 0), h31, Rational(49, 540), "reference-b"),
                exact_result(spec(ClassKind::BoundedTurning, 0), h31, Rational(41, 60),
                             "reference-b"),
            };
        case ReferenceSet::C: {
            const double s15 = std::sqrt(15.0);
            return {
                real_result(spec(ClassKind::Convex, Rational(-1, 2)), h31,
                            (180.0 + 69.0 * s15) / (32.0 * s15), "reference-c"),
                exact_result(spec(ClassKind::BoundedTurning, 0), h31, Rational(439, 540),
                             "reference-c"),
            };
        }
        case ReferenceSet::D: {
            if (alpha < 0 || alpha > Rational(1, 4))
                throw AlphaOutOfRange("reference-d curve is defined for 0 <= alpha <= 1/4");
            const double ad = to_double(alpha);
            const double u = 1.0 - ad;
            const double v = u * u / 3.0 *
                             (8.0 * u / 9.0 + 0.25 * std::pow((5.0 - 4.0 * ad) / 3.0, 1.5) +
                              0.8);
            return {real_result(spec(ClassKind::BoundedTurning, alpha), h31, v, "reference-d")};
        }
    }
    throw Error("unreachable");
}

ChiMax chi_max(const Rational& alpha) {
    if (alpha < Rational(-1, 2) || alpha >= 1)
        throw AlphaOutOfRange("chi_max needs -1/2 <= alpha < 1");
    const Rational q = abs_rational(8 * alpha * alpha - 16 * alpha - 1);

    const auto chi = [&](const Rational& c) { return q * c * c * c - 18 * c * c + 72; };

    std::vector<Rational> candidates = {Rational(0), Rational(2)};
    if (q > 6) {  // interior stationary point 12/q lies in (0, 2)
        candidates.push_back(Rational(12) / q);
    }
    Rational best_c = candidates[0];
    Rational best_v = chi(best_c);
    for (const Rational& c : candidates) {
        const Rational v = chi(c);
        if (v > best_v) {
            best_v = v;
            best_c = c;
        }
    }
    return ChiMax{to_double(best_v), to_double(best_c)};
}

}  // namespace hankel
