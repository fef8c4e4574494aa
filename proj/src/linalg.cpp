#include "charvar/linalg.hpp"

namespace charvar {

namespace {

RankResult rank_from_singular_values(const RealVector& sv, const RankPolicy& policy) {
    RankResult r;
    r.singular_values.assign(sv.data(), sv.data() + sv.size());
    if (sv.size() == 0) return r;
    r.sigma_max = sv(0);
    // The floor also absorbs pure-roundoff matrices (sigma_max itself at
    // noise level), not just exact zeros.
    const double cutoff = std::max(policy.rel_tol * r.sigma_max, policy.abs_floor);
    Index rank = 0;
    while (rank < sv.size() && sv(rank) > cutoff) ++rank;
    r.rank = rank;
    if (rank > 0) r.smallest_kept = sv(rank - 1);
    if (rank < sv.size()) r.largest_dropped = sv(rank);
    if (rank > 0 && r.largest_dropped > 0) {
        r.gap_ratio = r.smallest_kept / r.largest_dropped;
        r.gap_warning = r.gap_ratio < policy.gap_warn_ratio;
    }
    return r;
}

} // namespace

RankResult numeric_rank(const Matrix& a, const RankPolicy& policy) {
    if (a.rows() == 0 || a.cols() == 0) return RankResult{};
    Eigen::JacobiSVD<Matrix> svd(a);
    return rank_from_singular_values(svd.singularValues(), policy);
}

KernelResult kernel_and_cokernel(const Matrix& a, const RankPolicy& policy) {
    KernelResult out;
    if (a.rows() == 0 || a.cols() == 0) {
        out.kernel = Matrix::Identity(a.cols(), a.cols());
        out.cokernel = Matrix::Identity(a.rows(), a.rows());
        return out;
    }
    Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    out.rank = rank_from_singular_values(svd.singularValues(), policy);
    const Index r = out.rank.rank;
    out.kernel = svd.matrixV().rightCols(a.cols() - r);
    out.cokernel = svd.matrixU().rightCols(a.rows() - r);
    return out;
}

Matrix column_space_basis(const Matrix& a, const RankPolicy& policy) {
    if (a.rows() == 0 || a.cols() == 0) return Matrix(a.rows(), 0);
    Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeFullU);
    const RankResult r = rank_from_singular_values(svd.singularValues(), policy);
    return svd.matrixU().leftCols(r.rank);
}

Matrix orthogonal_complement_within(const Matrix& v, const Matrix& w,
                                    const RankPolicy& policy) {
    if (v.cols() == 0) return v;
    if (w.cols() == 0) return v;
    const Matrix overlap = w.adjoint() * v; // w-cols x v-cols
    const KernelResult k = kernel_and_cokernel(overlap, policy);
    Matrix basis = v * k.kernel;
    // Re-orthonormalize (v orthonormal implies basis already is, up to
    // roundoff; a thin QR keeps it clean).
    if (basis.cols() > 0) {
        Eigen::HouseholderQR<Matrix> qr(basis);
        Matrix q = qr.householderQ() * Matrix::Identity(basis.rows(), basis.cols());
        basis = q;
    }
    return basis;
}

} // namespace charvar
