#include "nnpca/witness.hpp"

#include <cmath>

#include "nnpca/ensembles.hpp"
#include "nnpca/spectral.hpp"

namespace nnpca {

namespace {

int witness_rank(double delta, int n) {
    const int r = static_cast<int>(std::lround(delta * n));
    if (r < 1 || r > n)
        throw InvalidParameter("witness: round(delta * n) must lie in [1, n]");
    return r;
}

} // namespace

Mat build_witness(const Mat& p, double alpha, double delta, int n) {
    if (p.rows() != n || p.cols() != n)
        throw InvalidParameter("build_witness: projector dimension mismatch");
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw InvalidParameter("build_witness: alpha must lie in [0, 1]");
    const int r = witness_rank(delta, n);
    Mat x = ((1.0 - alpha) / r) * p;
    x.array() += alpha / n;
    return x;
}

double minimal_alpha(const Mat& p, double delta) {
    const int n = static_cast<int>(p.rows());
    const int r = witness_rank(delta, n);
    // projector_entry_stats rejects non-projector inputs and reports the
    // most negative off-diagonal entry.
    const ProjectorStats st = projector_entry_stats(p, static_cast<double>(r) / n);
    const double p0 = std::max(0.0, -st.min_offdiag_signed);
    if (p0 == 0.0) return 0.0;
    const double delta_eff = static_cast<double>(r) / n;
    return p0 / (delta_eff + p0);
}

WitnessReport witness_value(const Mat& w, double delta) {
    const int n = static_cast<int>(w.rows());
    const int r = witness_rank(delta, n);

    const EigenPair ep = eigh(w);
    const Mat p = top_projector(ep, r);

    double min_off = n > 1 ? p(0, 1) : 0.0;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            if (i != j && p(i, j) < min_off) min_off = p(i, j);

    WitnessReport rep;
    rep.n = n;
    rep.delta = delta;
    rep.r = r;
    rep.p_max_neg = std::max(0.0, -min_off);
    const double delta_eff = static_cast<double>(r) / n;
    rep.alpha_min = rep.p_max_neg == 0.0 ? 0.0 : rep.p_max_neg / (delta_eff + rep.p_max_neg);
    rep.top_mean = ep.values.tail(r).sum() / r;
    rep.ones_term = w.sum() / n;
    // <X, W> split by linearity: (1-a)/r <P, W> + a/n 1^T W 1. The first
    // inner product is evaluated directly rather than through the eigenvalue
    // sum so the reported value is the witness's actual objective.
    const double pw = (p.array() * w.array()).sum();
    rep.value = (1.0 - rep.alpha_min) * pw / r + rep.alpha_min * rep.ones_term;
    return rep;
}

std::vector<WitnessReport> witness_scaling_experiment(const std::vector<int>& n_list,
                                                      double delta, int trials,
                                                      std::uint64_t master_seed) {
    if (trials < 1) throw InvalidParameter("witness_scaling_experiment: trials must be >= 1");
    std::vector<WitnessReport> out;
    out.reserve(n_list.size() * static_cast<std::size_t>(trials));
    for (std::size_t level = 0; level < n_list.size(); ++level) {
        const int n = n_list[level];
        witness_rank(delta, n);  // validate before sampling
        for (int t = 0; t < trials; ++t) {
            const std::uint64_t index = static_cast<std::uint64_t>(level) * trials + t;
            const Mat w = sample_goe(n, SeedSpec{master_seed, index});
            WitnessReport rep = witness_value(w, delta);
            rep.trial = t;
            rep.seed = index;
            out.push_back(rep);
        }
    }
    return out;
}

} // namespace nnpca
