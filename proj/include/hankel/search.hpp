#pragma once

#include <cstdint>
#include <vector>

#include "hankel/bounds.hpp"

namespace hankel {

/// Multistart configuration. Each restart draws its own measure from
/// (seed, restart index) and refines it with derivative-free simplex descent
/// on the negated functional magnitude, so reports are deterministic for a
/// fixed config regardless of thread count.
struct SearchConfig {
    ClassSpec cls;
    Functional functional;
    int restarts = 200;
    int atoms = 4;
    int refine_iters = 500;
    std::uint64_t seed = 1;
    double tol = 1e-9;
    /// |H31| and |Jn| are rotation invariant, so the first atom angle is
    /// pinned to 0 by default; disable to validate that exploit.
    bool pin_rotation = true;
    /// 0 = use HANKEL_THREADS or hardware concurrency.
    int threads = 0;

    void validate() const;
};

struct SearchReport {
    SearchConfig config;
    double best_magnitude = 0.0;
    HerglotzMeasure best_measure;
    CaratheodoryCoeffs best_p;
    BoundResult bound;
    double gap = 0.0;  // bound - best_magnitude; >= -tol unless something is wrong
    std::size_t evaluations = 0;
    int best_restart = -1;

    bool respects_bound() const { return gap >= -config.tol; }
};

SearchReport maximize(const SearchConfig& config);

/// One report per grid value, rows ordered as given. Grid values must lie in
/// the class's valid range.
std::vector<SearchReport> alpha_sweep(ClassKind kind, const Functional& functional,
                                      const std::vector<Rational>& alpha_grid,
                                      const SearchConfig& base);

}  // namespace hankel
