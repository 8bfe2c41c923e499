#include "hankel/caratheodory.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hankel/rng.hpp"

namespace hankel {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double reduce_angle(double a) {
    double r = std::fmod(a, kTwoPi);
    if (r < 0) r += kTwoPi;
    return r;
}
}  // namespace

HerglotzMeasure::HerglotzMeasure(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
    if (atoms_.empty()) throw Error("HerglotzMeasure needs at least one atom");
    double sum = 0.0;
    for (auto& a : atoms_) {
        if (!(a.weight >= 0.0)) throw Error("HerglotzMeasure weights must be nonnegative");
        a.angle = reduce_angle(a.angle);
        sum += a.weight;
    }
    if (std::abs(sum - 1.0) > kWeightSumTol)
        throw Error("HerglotzMeasure weights must sum to 1");
}

CaratheodoryCoeffs coeffs_from_measure(const HerglotzMeasure& measure, std::size_t N) {
    if (N < 1) throw Error("coefficient order must be >= 1");
    CaratheodoryCoeffs out;
    out.p.assign(N, Complex(0.0, 0.0));
    for (const Atom& a : measure.atoms()) {
        const Complex w = std::polar(a.weight, a.angle);
        Complex pw = w;  // weight * e^{i n theta} accumulated by multiplication
        const Complex rot = std::polar(1.0, a.angle);
        for (std::size_t n = 0; n < N; ++n) {
            out.p[n] += 2.0 * pw;
            pw *= rot;
        }
    }
    return out;
}

double toeplitz_min_eigenvalue(const CaratheodoryCoeffs& coeffs) {
    const std::size_t N = coeffs.order();
    Eigen::MatrixXcd T(N + 1, N + 1);
    for (std::size_t i = 0; i <= N; ++i) {
        for (std::size_t j = 0; j <= N; ++j) {
            if (i == j)
                T(i, j) = 2.0;
            else if (j > i)
                T(i, j) = coeffs.p[j - i - 1];
            else
                T(i, j) = std::conj(coeffs.p[i - j - 1]);
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(T, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

bool is_feasible(const CaratheodoryCoeffs& coeffs) {
    return toeplitz_min_eigenvalue(coeffs) >= -kFeasibilityTol;
}

namespace {
constexpr double kDegenerateTol = 1e-9;   // on |4 - p1^2|
constexpr double kBoundaryTol = 1e-10;    // on 1 - |x|^2
}  // namespace

Lemma4Witness lemma4_witness(Complex p1, Complex p2, Complex p3) {
    CaratheodoryCoeffs triple;
    triple.p = {p1, p2, p3};
    if (!is_feasible(triple)) throw InfeasibleInput("lemma4_witness: triple is not feasible");

    const Complex A = 4.0 - p1 * p1;
    Lemma4Witness w;
    if (std::abs(A) <= kDegenerateTol) {
        w.degenerate = true;
        return w;  // x = z = 0; p2, p3 are forced by p1
    }
    w.x = (2.0 * p2 - p1 * p1) / A;
    const double slack = 1.0 - std::norm(w.x);
    if (slack <= kBoundaryTol) return w;  // z unconstrained, returned as 0

    const Complex numerator = 4.0 * p3 - p1 * p1 * p1 - 2.0 * p1 * A * w.x + p1 * A * w.x * w.x;
    w.z = numerator / (2.0 * A * slack);
    // Division noise can push a feasible witness infinitesimally outside the
    // disk; projecting back changes the reconstruction by at most that noise.
    const double zmag = std::abs(w.z);
    if (zmag > 1.0) w.z /= zmag;
    return w;
}

std::pair<Complex, Complex> lemma4_reconstruct(Complex p1, const Lemma4Witness& w) {
    const Complex A = 4.0 - p1 * p1;
    const Complex p2 = (p1 * p1 + A * w.x) / 2.0;
    const Complex p3 = (p1 * p1 * p1 + 2.0 * p1 * A * w.x - p1 * A * w.x * w.x +
                        2.0 * A * (1.0 - std::norm(w.x)) * w.z) /
                       4.0;
    return {p2, p3};
}

LemmaResiduals lemma_residuals(const CaratheodoryCoeffs& coeffs, std::size_t n, std::size_t k,
                               double mu) {
    if (n > coeffs.order()) throw IndexOutOfRange("lemma_residuals: n exceeds coefficient order");
    if (k < 1 || k >= n) throw IndexOutOfRange("lemma_residuals: need 1 <= k < n");
    if (mu < 0.0 || mu > 1.0) throw Error("lemma_residuals: mu must lie in [0,1]");
    const Complex pn = coeffs.at(n);
    const Complex prod = coeffs.at(k) * coeffs.at(n - k);
    return LemmaResiduals{
        std::abs(pn) - 2.0,
        std::abs(pn - prod) - 2.0,
        std::abs(pn - mu * prod) - 2.0,
    };
}

HerglotzMeasure sample_measure(std::uint64_t rng_seed, std::size_t n_atoms) {
    if (n_atoms < 1) throw Error("sample_measure: need at least one atom");
    Rng rng(rng_seed);
    std::vector<double> cuts;
    cuts.reserve(n_atoms + 1);
    cuts.push_back(0.0);
    for (std::size_t i = 0; i + 1 < n_atoms; ++i) cuts.push_back(rng.uniform());
    cuts.push_back(1.0);
    std::sort(cuts.begin(), cuts.end());

    std::vector<Atom> atoms(n_atoms);
    for (std::size_t i = 0; i < n_atoms; ++i) atoms[i].weight = cuts[i + 1] - cuts[i];
    // Renormalize away the last-bit rounding of the spacings.
    double sum = 0.0;
    for (auto& a : atoms) sum += a.weight;
    for (auto& a : atoms) a.weight /= sum;
    for (auto& a : atoms) a.angle = rng.uniform(0.0, kTwoPi);
    return HerglotzMeasure(std::move(atoms));
}

LemmaSuiteReport run_lemma_suite(std::size_t samples, std::uint64_t seed) {
    LemmaSuiteReport rep;
    rep.samples = samples;
    rep.min_toeplitz_eig = std::numeric_limits<double>::infinity();
    double worst = -std::numeric_limits<double>::infinity();

    for (std::size_t s = 0; s < samples; ++s) {
        const std::uint64_t stream = derive_stream(seed, s);
        const std::size_t m = 1 + (s % 5);
        const HerglotzMeasure measure = sample_measure(stream, m);
        const CaratheodoryCoeffs coeffs = coeffs_from_measure(measure, 4);

        Rng mu_rng(derive_stream(stream, 0x6d75));
        double local = -std::numeric_limits<double>::infinity();
        for (std::size_t n = 2; n <= 4; ++n) {
            for (std::size_t k = 1; k < n; ++k) {
                for (double mu : {0.0, 1.0, mu_rng.uniform()}) {
                    const LemmaResiduals r = lemma_residuals(coeffs, n, k, mu);
                    rep.max_r1 = std::max(rep.max_r1, r.r1);
                    rep.max_r2 = std::max(rep.max_r2, r.r2);
                    rep.max_r3 = std::max(rep.max_r3, r.r3);
                    local = std::max({local, r.r1, r.r2, r.r3});
                }
            }
        }

        const double eig = toeplitz_min_eigenvalue(coeffs);
        rep.min_toeplitz_eig = std::min(rep.min_toeplitz_eig, eig);

        const Lemma4Witness w = lemma4_witness(coeffs.at(1), coeffs.at(2), coeffs.at(3));
        double excess = std::max(std::abs(w.x) - 1.0, std::abs(w.z) - 1.0);
        rep.max_witness_excess = std::max(rep.max_witness_excess, excess);
        if (!w.degenerate) {
            const auto [p2r, p3r] = lemma4_reconstruct(coeffs.at(1), w);
            const double err =
                std::max(std::abs(p2r - coeffs.at(2)), std::abs(p3r - coeffs.at(3)));
            rep.max_roundtrip = std::max(rep.max_roundtrip, err);
            local = std::max(local, err);
        }
        local = std::max(local, excess);
        if (local > worst) {
            worst = local;
            rep.worst_sample_seed = stream;
        }
    }
    return rep;
}

}  // namespace hankel
