#pragma once

#include <vector>

#include "charvar/types.hpp"

namespace charvar {

/// Rank cutoff policy: singular values above rel_tol * sigma_max are kept
/// (abs_floor applies when sigma_max = 0).  Decisions whose kept/dropped
/// gap ratio falls below gap_warn_ratio are flagged.
struct RankPolicy {
    double rel_tol = 1e-9;
    double abs_floor = 1e-12;
    double gap_warn_ratio = 1e6;
};

struct RankResult {
    Index rank = 0;
    double sigma_max = 0;
    double smallest_kept = 0;   // 0 when rank = 0
    double largest_dropped = 0; // 0 when nothing was dropped
    double gap_ratio = std::numeric_limits<double>::infinity();
    bool gap_warning = false;
    std::vector<double> singular_values;
};

/// Rank of a dense complex matrix by SVD under the policy.  An empty
/// matrix has rank 0 and no diagnostics.
RankResult numeric_rank(const Matrix& a, const RankPolicy& policy = {});

/// Orthonormal basis of the (right) kernel: the right singular vectors for
/// the singular values the policy drops.  Columns of the result.
struct KernelResult {
    RankResult rank;
    Matrix kernel;   // cols x (cols - rank)
    Matrix cokernel; // rows x (rows - rank), orthonormal complement of the column space
};

KernelResult kernel_and_cokernel(const Matrix& a, const RankPolicy& policy = {});

/// Orthonormal basis (columns) of the column span of a, under the policy.
Matrix column_space_basis(const Matrix& a, const RankPolicy& policy = {});

/// Orthonormal basis of  span(v) ∩ ker(w^H ·)  given orthonormal columns v:
/// the part of span(v) Hermitian-orthogonal to span(w).  Used to pick
/// cohomology representatives inside a cocycle space.
Matrix orthogonal_complement_within(const Matrix& v, const Matrix& w,
                                    const RankPolicy& policy = {});

} // namespace charvar
