#pragma once

#include <string>
#include <vector>

#include "charvar/types.hpp"

namespace charvar {

enum class GroupKind { GL, SL, PSL };

/// Which complex matrix group the representation lands in.
struct GroupSpec {
    GroupKind kind = GroupKind::SL;
    int n = 2;

    int lie_dim() const { return kind == GroupKind::GL ? n * n : n * n - 1; }
    int center_dim() const { return kind == GroupKind::GL ? 1 : 0; }

    /// Number of elements of the centre of the matrix group itself:
    /// n for SL(n) (n-th roots of unity), 1 for PSL(n); 0 marks the
    /// continuous centre of GL(n).
    int center_order() const;

    std::string to_string() const;

    /// Parses "SL(2,C)", "GL(3,C)", "PSL(2,C)".  Throws std::invalid_argument.
    static GroupSpec parse(const std::string& text);

    friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

/// Fixed ordered basis of the Lie algebra of a GroupSpec, with coordinate
/// maps and adjoint operators.
///
/// Basis order:
///   SL(n)/PSL(n), n = 2:   the Pauli matrices (sigma1, sigma2, sigma3);
///   SL(n)/PSL(n), n >= 3:  off-diagonal elementary matrices E_ij in
///                          row-major order, then the diagonal differences
///                          E_kk - E_{k+1,k+1} for k = 0..n-2;
///   GL(n):                 the identity (spanning the centre) first,
///                          followed by the SL(n) basis.
class LieBasis {
  public:
    explicit LieBasis(GroupSpec spec);

    const GroupSpec& spec() const { return spec_; }
    int dim() const { return static_cast<int>(matrices_.size()); }
    const std::vector<Matrix>& matrices() const { return matrices_; }

    /// Coordinates of a Lie-algebra element in the fixed basis.
    Vector coordinates(const Matrix& X) const;
    Matrix from_coordinates(const Vector& v) const;

    /// Matrix of Ad_g : X -> g X g^-1 in the fixed basis.  Throws
    /// std::invalid_argument on a singular g.
    Matrix adjoint(const Matrix& g) const;

    /// Gram matrix of the invariant trace form B(X, Y) = tr(XY); complex
    /// symmetric and nondegenerate on gl_n and sl_n.
    const Matrix& trace_form() const { return gram_; }

  private:
    GroupSpec spec_;
    std::vector<Matrix> matrices_;
    Matrix basis_columns_; // n^2 x dim, column j = vec(B_j)
    Eigen::ColPivHouseholderQR<Matrix> coordinate_solver_;
    Matrix gram_;
};

/// List of Lie-algebra basis matrices for a spec (see LieBasis for the
/// order).  Throws std::invalid_argument when n < 2.
std::vector<Matrix> lie_basis(const GroupSpec& spec);

/// One-shot adjoint operator; prefer a cached LieBasis in loops.
Matrix adjoint_operator(const Matrix& g, const GroupSpec& spec);

} // namespace charvar
