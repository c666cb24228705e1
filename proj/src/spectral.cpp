#include "nnpca/spectral.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>

namespace nnpca {

namespace {

void require_finite(const Mat& m, const char* who) {
    if (!m.allFinite()) throw NumericFailure(std::string(who) + ": non-finite entries");
}

// Flip each column so its largest-magnitude coordinate is positive. On exact
// magnitude ties the lowest index wins.
void fix_signs(Mat& vectors) {
    for (int j = 0; j < vectors.cols(); ++j) {
        int arg = 0;
        double best = -1.0;
        for (int i = 0; i < vectors.rows(); ++i) {
            const double a = std::abs(vectors(i, j));
            if (a > best) {
                best = a;
                arg = i;
            }
        }
        if (vectors(arg, j) < 0.0) vectors.col(j) = -vectors.col(j);
    }
}

} // namespace

EigenPair eigh(const Mat& m) {
    require_finite(m, "eigh");
    const int n = static_cast<int>(m.rows());
    EigenPair out;
    out.vectors = m;  // dsyevd overwrites the input with the eigenvectors
    out.values = Vec(n);
    const int info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'L', n,
                                    out.vectors.data(), n, out.values.data());
    if (info != 0) throw NumericFailure("eigh: dsyevd failed, info=" + std::to_string(info));
    fix_signs(out.vectors);
    return out;
}

Vec eigvalsh(const Mat& m) {
    require_finite(m, "eigvalsh");
    const int n = static_cast<int>(m.rows());
    Mat work = m;
    Vec values(n);
    const int info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'N', 'L', n,
                                    work.data(), n, values.data());
    if (info != 0) throw NumericFailure("eigvalsh: dsyevd failed, info=" + std::to_string(info));
    return values;
}

Mat top_projector(const EigenPair& ep, int r) {
    const int n = static_cast<int>(ep.values.size());
    if (r < 1 || r > n) throw InvalidParameter("top_projector: r out of range");
    // Rank update keeps the result exactly symmetric.
    Mat p = Mat::Zero(n, n);
    p.selfadjointView<Eigen::Lower>().rankUpdate(ep.vectors.rightCols(r));
    p.triangularView<Eigen::StrictlyUpper>() = p.transpose();
    return p;
}

Mat top_projector(const Mat& m, int r) {
    return top_projector(eigh(m), r);
}

ProjectorStats projector_entry_stats(const Mat& p, double delta) {
    const int n = static_cast<int>(p.rows());
    // Projector check: idempotence and symmetry to 1e-6.
    const double scale = std::max(1.0, p.cwiseAbs().maxCoeff());
    if (symmetry_gap(p) > 1e-6 * scale ||
        ((p * p) - p).cwiseAbs().maxCoeff() > 1e-6 * std::max(1.0, scale))
        throw ContractViolation("projector_entry_stats: input is not a projector");
    ProjectorStats st{0.0, 0.0, 0.0};
    double min_off = n > 1 ? p(0, 1) : 0.0;
    for (int j = 0; j < n; ++j) {
        st.max_diag_dev = std::max(st.max_diag_dev, std::abs(p(j, j) - delta));
        for (int i = 0; i < n; ++i) {
            if (i == j) continue;
            st.max_offdiag = std::max(st.max_offdiag, std::abs(p(i, j)));
            min_off = std::min(min_off, p(i, j));
        }
    }
    st.min_offdiag_signed = min_off;
    return st;
}

double semicircle_cdf(double x) {
    if (x <= -2.0) return 0.0;
    if (x >= 2.0) return 1.0;
    return 0.5 + x * std::sqrt(4.0 - x * x) / (4.0 * M_PI) + std::asin(0.5 * x) / M_PI;
}

double semicircle_ks(const std::vector<double>& values) {
    if (values.empty()) throw InvalidParameter("semicircle_ks: empty value list");
    std::vector<double> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    double ks = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double f = semicircle_cdf(sorted[i]);
        ks = std::max(ks, f - static_cast<double>(i) / n);
        ks = std::max(ks, static_cast<double>(i + 1) / n - f);
    }
    return ks;
}

int numerical_rank(const Mat& m, double abs_tol) {
    if (!(abs_tol > 0.0)) throw InvalidParameter("numerical_rank: abs_tol must be > 0");
    const Vec values = eigvalsh(m);
    int rank = 0;
    for (int i = 0; i < values.size(); ++i)
        if (values[i] > abs_tol) ++rank;
    return rank;
}

double quadratic_form(const Mat& m, const Vec& x) {
    if (m.rows() != x.size()) throw InvalidParameter("quadratic_form: dimension mismatch");
    return x.dot(m * x);
}

} // namespace nnpca
