#include "nnpca/heuristics.hpp"

#include <cmath>
#include <limits>

#include "nnpca/spectral.hpp"

namespace nnpca {

namespace {

// One monotone trajectory of the shifted projected power iteration.
FeasiblePoint ascend(const Mat& w, const Vec& x0, double shift, int max_iters,
                     double value_tol, std::vector<double>* trace) {
    Vec x = x0;
    double val = quadratic_form(w, x);
    if (trace) trace->push_back(val);
    for (int k = 0; k < max_iters; ++k) {
        Vec y = (w * x + shift * x).cwiseMax(0.0);
        const double norm = y.norm();
        if (norm == 0.0) break;  // dead direction; keep the current point
        x = y / norm;
        const double next = quadratic_form(w, x);
        if (trace) trace->push_back(next);
        if (std::abs(next - val) <= value_tol * std::max(1.0, std::abs(next))) {
            val = next;
            break;
        }
        val = next;
    }
    return FeasiblePoint{x, val};
}

} // namespace

FeasiblePoint truncated_top_eigenvector(const Mat& w) {
    const EigenPair ep = eigh(w);
    const int n = static_cast<int>(w.rows());
    Vec v = ep.vectors.col(n - 1);
    const double pos = v.cwiseMax(0.0).norm();
    const double neg = (-v).cwiseMax(0.0).norm();
    if (neg > pos) v = -v;
    Vec x = v.cwiseMax(0.0);
    const double norm = x.norm();
    if (norm == 0.0)
        throw NumericFailure("truncated_top_eigenvector: degenerate eigenvector");
    x /= norm;
    return FeasiblePoint{x, quadratic_form(w, x)};
}

FeasiblePoint local_ascent(const Mat& w, const AscentConfig& cfg, SeedSpec seed,
                           std::vector<std::vector<double>>* traces) {
    if (!(cfg.shift > 0.0)) throw InvalidParameter("local_ascent: shift must be > 0");
    const int n = static_cast<int>(w.rows());

    const Vec spectrum = eigvalsh(w);
    double shift = cfg.shift;
    if (spectrum[n - 1] >= shift) shift = spectrum[n - 1] + 0.1;
    if (spectrum[0] < -shift) shift = -spectrum[0] + 0.1;

    if (traces) traces->clear();
    std::vector<double>* trace = nullptr;

    auto run = [&](const Vec& x0) {
        if (traces) {
            traces->emplace_back();
            trace = &traces->back();
        }
        return ascend(w, x0, shift, cfg.max_iters, cfg.value_tol, trace);
    };

    FeasiblePoint best = run(truncated_top_eigenvector(w).x);
    Rng rng(seed);
    Vec x0(n);
    for (int rs = 0; rs < cfg.restarts; ++rs) {
        for (int i = 0; i < n; ++i) x0[i] = std::abs(rng.gaussian());
        const double norm = x0.norm();
        if (norm == 0.0) continue;
        x0 /= norm;
        const FeasiblePoint cand = run(x0);
        if (cand.value > best.value) best = cand;
    }
    return best;
}

FeasiblePoint lambda_plus_bruteforce(const Mat& w, int grid_points) {
    const int n = static_cast<int>(w.rows());
    if (n > 6) throw InvalidParameter("lambda_plus_bruteforce: n must be <= 6");
    if (grid_points < 50 && n > 1)
        throw InvalidParameter("lambda_plus_bruteforce: need >= 50 grid points per angle");

    if (n == 1) {
        Vec x(1);
        x[0] = 1.0;
        return FeasiblePoint{x, w(0, 0)};
    }

    // x(theta) = (cos t1, sin t1 cos t2, ..., sin t1 ... sin t_{n-1}) with all
    // angles in [0, pi/2] sweeps the positive orthant of the sphere.
    const int dims = n - 1;
    std::vector<int> idx(dims, 0);
    Vec x(n), best_x = Vec::Zero(n);
    double best = -std::numeric_limits<double>::infinity();
    const double step = (M_PI / 2) / (grid_points - 1);
    for (;;) {
        double sines = 1.0;
        for (int d = 0; d < dims; ++d) {
            const double t = idx[d] * step;
            x[d] = sines * std::cos(t);
            sines *= std::sin(t);
        }
        x[dims] = sines;
        const double val = quadratic_form(w, x);
        if (val > best) {
            best = val;
            best_x = x;
        }
        int d = dims - 1;
        while (d >= 0 && ++idx[d] == grid_points) idx[d--] = 0;
        if (d < 0) break;
    }

    // Monotone polish: psd shift guarantees each step does not decrease the
    // objective, and the iteration stays in the feasible set.
    const Vec spectrum = eigvalsh(w);
    const double shift = std::max(std::abs(spectrum[0]), std::abs(spectrum[n - 1])) + 0.1;
    const FeasiblePoint polished = ascend(w, best_x, shift, 5000, 1e-14, nullptr);
    return polished.value >= best ? polished : FeasiblePoint{best_x, best};
}

} // namespace nnpca
