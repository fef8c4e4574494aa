#pragma once

#include <memory>
#include <string>
#include <vector>

#include "charvar/group.hpp"
#include "charvar/group_ring.hpp"
#include "charvar/presentation.hpp"
#include "charvar/schreier.hpp"
#include "charvar/types.hpp"
#include "charvar/word.hpp"

namespace charvar {

/// A point of the representation variety: a presentation, a group spec and
/// one matrix per generator.  For PSL the matrices are unit-determinant
/// representatives; relator images may land anywhere in the centre.
class Representation {
  public:
    Representation(Presentation presentation, GroupSpec spec, std::vector<Matrix> images);

    const Presentation& presentation() const { return presentation_; }
    const GroupSpec& spec() const { return spec_; }
    const std::vector<Matrix>& images() const { return images_; }
    const Matrix& image(int generator) const {
        return images_[static_cast<std::size_t>(generator)];
    }
    const LieBasis& basis() const { return *basis_; }
    int lie_dim() const { return basis_->dim(); }

    /// Conjugates every image by g.
    Representation conjugated(const Matrix& g) const;

  private:
    Presentation presentation_;
    GroupSpec spec_;
    std::vector<Matrix> images_;
    std::shared_ptr<const LieBasis> basis_;
};

/// Product of generator images along the word; the identity word gives the
/// identity matrix.
Matrix evaluate_word(const Representation& rep, const FreeWord& w);

/// Adjoint operator of the image of a word, in the fixed Lie-algebra basis.
Matrix adjoint_of_word(const Representation& rep, const FreeWord& w);

/// Ad extended linearly over the group ring:
/// sum of coefficient * Ad(phi(word)) over the terms.
Matrix evaluate_group_ring(const Representation& rep, const GroupRingElement& u);

/// Thrown when an operation requires a representation that fails
/// validate_representation.  The CLI maps this to exit code 2.
class ValidationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct RelatorResidual {
    int relator = 0;
    double residual = 0; // Frobenius distance to the identity / nearest centre element
};

struct ValidationReport {
    bool ok = false;
    std::vector<RelatorResidual> residuals;
    double max_residual = 0;
    double max_det_residual = 0; // |det - 1| over images (SL/PSL only)
    std::string message;         // empty when ok
};

/// Checks that every image is invertible (det = 1 for SL/PSL within tol)
/// and that every relator image equals the identity (GL/SL) or the nearest
/// centre element zeta*I with zeta^n = 1 (PSL), all within tol.
ValidationReport validate_representation(const Representation& rep, double tol = 1e-9);

/// Restriction of a representation to an index-2 subgroup: one image per
/// Schreier generator, on the rewritten presentation.
Representation restrict_representation(const Representation& rep,
                                       const SubgroupPresentation& sub);

} // namespace charvar
