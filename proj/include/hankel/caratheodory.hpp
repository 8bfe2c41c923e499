#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "hankel/errors.hpp"

namespace hankel {

using Complex = std::complex<double>;

struct Atom {
    double weight;
    double angle;  // radians, reduced to [0, 2*pi)
};

/// Finite atomic probability measure on the unit circle. Generates members
/// of the Caratheodory class through p_n = 2 * sum_j w_j exp(i n theta_j);
/// every sequence produced this way is feasible by construction.
class HerglotzMeasure {
  public:
    /// Validates the invariants: at least one atom, nonnegative weights
    /// summing to 1 within 1e-14. Angles are reduced modulo 2*pi.
    explicit HerglotzMeasure(std::vector<Atom> atoms);

    const std::vector<Atom>& atoms() const { return atoms_; }
    std::size_t size() const { return atoms_.size(); }

    static constexpr double kWeightSumTol = 1e-14;

  private:
    std::vector<Atom> atoms_;
};

/// Truncated Caratheodory coefficient sequence p_1..p_N (p_0 == 2 implicit).
struct CaratheodoryCoeffs {
    std::vector<Complex> p;

    std::size_t order() const { return p.size(); }

    /// 1-based access: at(n) == p_n.
    const Complex& at(std::size_t n) const {
        if (n < 1 || n > p.size()) throw IndexOutOfRange("coefficient index out of range");
        return p[n - 1];
    }
};

CaratheodoryCoeffs coeffs_from_measure(const HerglotzMeasure& measure, std::size_t N);

/// Smallest eigenvalue of the (N+1)x(N+1) Hermitian Toeplitz matrix with
/// first row (2, p_1, ..., p_N).
double toeplitz_min_eigenvalue(const CaratheodoryCoeffs& coeffs);

/// Caratheodory-Toeplitz criterion with tolerance -1e-10 on the smallest
/// eigenvalue.
bool is_feasible(const CaratheodoryCoeffs& coeffs);

constexpr double kFeasibilityTol = 1e-10;

/// Witness pair for the (p1, x, z) parametrization of a feasible triple:
///   2 p2 = p1^2 + (4 - p1^2) x
///   4 p3 = p1^3 + 2 p1 (4 - p1^2) x - p1 (4 - p1^2) x^2
///               + 2 (4 - p1^2) (1 - |x|^2) z
/// Conventions: if 4 - p1^2 vanishes the parametrization collapses and the
/// witness is returned degenerate with x = z = 0; if |x| = 1 the z equation
/// is vacuous and z = 0 is returned.
struct Lemma4Witness {
    Complex x;
    Complex z;
    bool degenerate = false;
};

Lemma4Witness lemma4_witness(Complex p1, Complex p2, Complex p3);

/// Inverse direction, used by round-trip checks: rebuilds (p2, p3) from
/// (p1, x, z).
std::pair<Complex, Complex> lemma4_reconstruct(Complex p1, const Lemma4Witness& w);

/// Residuals of the classical coefficient estimates, each <= 0 up to
/// rounding for feasible sequences:
///   r1 = |p_n| - 2
///   r2 = |p_n - p_k p_{n-k}| - 2
///   r3 = |p_n - mu p_k p_{n-k}| - 2
struct LemmaResiduals {
    double r1;
    double r2;
    double r3;
};

LemmaResiduals lemma_residuals(const CaratheodoryCoeffs& coeffs, std::size_t n, std::size_t k,
                               double mu);

/// Deterministic measure sampler: weights from the flat simplex via sorted
/// uniform spacings, angles uniform on [0, 2*pi).
HerglotzMeasure sample_measure(std::uint64_t rng_seed, std::size_t n_atoms);

/// Monte-Carlo sweep over sampled measures exercising the coefficient
/// estimates and the witness round-trip; backs the `lemmas` CLI command.
struct LemmaSuiteReport {
    std::size_t samples = 0;
    double max_r1 = -2.0;
    double max_r2 = -2.0;
    double max_r3 = -2.0;
    double max_roundtrip = 0.0;
    double max_witness_excess = 0.0;  // max over samples of max(|x|-1, |z|-1)
    double min_toeplitz_eig = 0.0;
    std::uint64_t worst_sample_seed = 0;

    bool all_within(double tol) const {
        return max_r1 <= tol && max_r2 <= tol && max_r3 <= tol && max_roundtrip <= tol &&
               max_witness_excess <= tol && min_toeplitz_eig >= -kFeasibilityTol;
    }
};

LemmaSuiteReport run_lemma_suite(std::size_t samples, std::uint64_t seed);

}  // namespace hankel
