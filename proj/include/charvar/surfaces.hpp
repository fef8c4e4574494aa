#pragma once

#include <optional>
#include <vector>

#include "charvar/cohomology.hpp"
#include "charvar/representation.hpp"
#include "charvar/surface_kind.hpp"

namespace charvar {

/// Standard one-relator surface-group presentations:
///   orientable genus g:  generators a1, b1, ..., ag, bg with relator
///                        prod_i  a_i b_i a_i^-1 b_i^-1;
///   non-orientable, h cross-caps:  generators x1, ..., xh with relator
///                        prod_i  x_i^2.
Presentation canonical_presentation(const SurfaceKind& kind);

/// Recognizers for the canonical shapes (relator compared letter by letter).
bool is_canonical_orientable(const Presentation& p);
bool is_canonical_nonorientable(const Presentation& p);

/// A 1-cocycle given by its values on the generators, as coordinate vectors
/// in the fixed Lie-algebra basis.
struct Cocycle {
    std::vector<Vector> values;

    Vector stacked() const;
    static Cocycle from_stacked(const Vector& v, int generator_count);
};

struct ClosedFormH02 {
    Matrix h0_basis; // m x b0, orthonormal
    Matrix h2_basis; // m x b2, orthonormal
};

/// For a representation of the canonical non-orientable surface group:
/// H0 is the joint kernel of Ad(phi(x_i)) - I and H2 the joint kernel of
/// Ad(phi(x_i)) + I.  Throws std::invalid_argument on other presentations.
ClosedFormH02 h0_h2_closed_form(const Representation& rep, const RankPolicy& policy = {});

struct CoverReport {
    int h0_cover = 0;
    int h2_cover = 0; // = h0_cover by the degree-0/degree-2 duality on the cover
    int h1_cover = 0; // from the cover's Euler characteristic
    int h0_base = 0;
    int h2_base = 0;
    bool decomposition_ok = false; // h0_cover == h0_base + h2_base
};

/// Invariants of the orientation double cover of a non-orientable surface
/// representation, computed over the generating set {x_i x_j} of the
/// index-2 kernel; second cohomology of the cover comes from duality, not
/// from the rewritten presentation.
CoverReport orientation_double_cover(const Representation& rep, const RankPolicy& policy = {});

/// Cup-product pairing of two cocycles on a canonical orientable one-relator
/// surface representation, evaluated on the fundamental 2-cycle built from
/// the relator (prefix cells plus per-inverse-letter corrections).  The
/// overall scale of the form is a fixed convention of this representative.
/// Throws std::invalid_argument when an input fails the cocycle residual
/// check.
Complex cup_pairing(const Representation& rep, const Cocycle& alpha, const Cocycle& beta,
                    double cocycle_tol = 1e-8);

/// Pairing value together with the cancellation scale: the absolute-value
/// sum over the 2-cycle's cells.  Numerical residual checks are relative to
/// the magnitude, since the value itself can be a small difference of large
/// cell contributions.
struct PairingEvaluation {
    Complex value;
    double magnitude = 0;
};

PairingEvaluation cup_pairing_detailed(const Representation& rep, const Cocycle& alpha,
                                       const Cocycle& beta, double cocycle_tol = 1e-8);

struct CupGram {
    Matrix h1_basis; // (d*m) x b1 stacked representatives
    Matrix gram;     // pairing values on the representatives
    RankResult rank;
};

/// Gram matrix of the pairing on first-cohomology representatives.
CupGram cup_pairing_gram(const Representation& rep, const RankPolicy& policy = {});

/// Values of the extended cocycle on the given subgroup generators
/// (a cocycle of the subgroup representation whose images are the
/// evaluated embedding words).
Cocycle restrict_cocycle(const Representation& rep, const Cocycle& gamma,
                         const std::vector<FreeWord>& embedding);

struct LagrangianReport {
    int b1_base = 0;
    int h1_cover = 0;
    bool half_dimension_ok = false; // b1_base == h1_cover / 2
    CoverReport cover;

    bool embedding_checked = false;
    double isotropy_residual = 0;          // max |pairing| over restricted basis pairs
    double isotropy_scale = 1;             // max |pairing| over the cover's own basis
    double restricted_cocycle_residual = 0;
};

/// Dimension-level Lagrangian check for a canonical non-orientable surface
/// representation; when `embedding` supplies words for the canonical
/// genus-(h-1) generators of the orientation cover, additionally restricts
/// a basis of the base's first cohomology and reports the isotropy
/// residual of the cover pairing on it.
LagrangianReport lagrangian_check(const Representation& rep,
                                  const std::vector<FreeWord>& embedding = {},
                                  const RankPolicy& policy = {});

} // namespace charvar
