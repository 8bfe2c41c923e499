#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hankel/functionals.hpp"

namespace hankel {

/// A closed-form upper bound together with its provenance tag. `exact` is
/// set whenever the formula is rational in alpha; reference constants
/// involving surds carry only the double value.
struct BoundResult {
    ClassSpec cls;
    Functional functional;
    std::optional<Rational> exact;
    double value = 0.0;
    std::string source;

    std::string exact_string() const { return exact ? to_fraction_string(*exact) : ""; }
};

/// H_{3,1} bound(s) for the class. Analytic classes yield one entry;
/// HarmonicM yields the analytic-part and co-analytic-part bounds (in that
/// order). Convex is restricted to 0 <= alpha < 1, the hypothesis under
/// which its closed form is established; the harmonic-m analytic part covers
/// the extension down to -1/2.
std::vector<BoundResult> bound_h31(const ClassSpec& cls);

/// Zalcman bound. Starlike/Convex support n in {2, 3}; BoundedTurning any
/// n >= 2.
BoundResult bound_zalcman(const ClassSpec& cls, int n);

/// Single bound for (class, functional); the comparison target of a search.
BoundResult bound_for(const ClassSpec& cls, const Functional& f);

enum class ReferenceSet { A, B, C, D };

/// Literature constants for comparison tables. D is a curve in alpha,
/// valid on 0 <= alpha <= 1/4.
std::vector<BoundResult> reference_bounds(ReferenceSet which, const Rational& alpha = 0);

/// Maximum over [0, 2] of chi(c) = |8a^2-16a-1| c^3 - 18 c^2 + 72, taken
/// over the candidate set {0, 2, interior stationary point}; ties resolve to
/// the smaller c. Equals 72 on the whole valid range -1/2 <= alpha < 1,
/// which is what pins the co-analytic H_{3,1} bound (1-alpha)/30.
struct ChiMax {
    double max_value;
    double argmax_c;
};

ChiMax chi_max(const Rational& alpha);

}  // namespace hankel
