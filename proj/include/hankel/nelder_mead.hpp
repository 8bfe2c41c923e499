#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <vector>

namespace hankel {

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0.0;
    std::size_t evaluations = 0;
};

/// Classical Nelder-Mead downhill simplex (reflection 1, expansion 2,
/// contraction 1/2, shrink 1/2) with a deterministic axis-aligned initial
/// simplex. `iters` counts main-loop iterations; the returned point is the
/// best vertex ever seen, so the result never regresses below the start.
inline NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                                    std::vector<double> x0, double step, std::size_t iters) {
    const std::size_t n = x0.size();
    NelderMeadResult out;
    out.x = x0;
    if (n == 0) {
        out.value = f(x0);
        out.evaluations = 1;
        return out;
    }

    std::vector<std::vector<double>> pts(n + 1, x0);
    for (std::size_t i = 0; i < n; ++i) pts[i + 1][i] += step;
    std::vector<double> fv(n + 1);
    std::size_t evals = 0;
    for (std::size_t i = 0; i <= n; ++i) {
        fv[i] = f(pts[i]);
        ++evals;
    }

    std::vector<std::size_t> order(n + 1);
    const auto sort_simplex = [&] {
        for (std::size_t i = 0; i <= n; ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
    };

    for (std::size_t it = 0; it < iters; ++it) {
        sort_simplex();
        const std::size_t best = order[0], worst = order[n], second_worst = order[n - 1];
        if (fv[worst] - fv[best] < 1e-15) break;

        std::vector<double> centroid(n, 0.0);
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == worst) continue;
            for (std::size_t d = 0; d < n; ++d) centroid[d] += pts[i][d];
        }
        for (double& c : centroid) c /= static_cast<double>(n);

        const auto blend = [&](double t) {
            std::vector<double> p(n);
            for (std::size_t d = 0; d < n; ++d)
                p[d] = centroid[d] + t * (centroid[d] - pts[worst][d]);
            return p;
        };

        std::vector<double> refl = blend(1.0);
        const double f_refl = f(refl);
        ++evals;
        if (f_refl < fv[order[0]]) {
            std::vector<double> expa = blend(2.0);
            const double f_expa = f(expa);
            ++evals;
            if (f_expa < f_refl) {
                pts[worst] = std::move(expa);
                fv[worst] = f_expa;
            } else {
                pts[worst] = std::move(refl);
                fv[worst] = f_refl;
            }
            continue;
        }
        if (f_refl < fv[second_worst]) {
            pts[worst] = std::move(refl);
            fv[worst] = f_refl;
            continue;
        }
        const bool outside = f_refl < fv[worst];
        std::vector<double> contr = blend(outside ? 0.5 : -0.5);
        const double f_contr = f(contr);
        ++evals;
        if (f_contr < (outside ? f_refl : fv[worst])) {
            pts[worst] = std::move(contr);
            fv[worst] = f_contr;
            continue;
        }
        for (std::size_t i = 0; i <= n; ++i) {  // shrink toward the best vertex
            if (i == best) continue;
            for (std::size_t d = 0; d < n; ++d)
                pts[i][d] = pts[best][d] + 0.5 * (pts[i][d] - pts[best][d]);
            fv[i] = f(pts[i]);
            ++evals;
        }
    }

    sort_simplex();
    out.x = pts[order[0]];
    out.value = fv[order[0]];
    out.evaluations = evals;
    return out;
}

}  // namespace hankel
