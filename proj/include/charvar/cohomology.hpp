#pragma once

#include <optional>

#include "charvar/linalg.hpp"
#include "charvar/representation.hpp"

namespace charvar {

/// The dual complex  g -> g^X -> g^R  of the presentation's free resolution,
/// assembled at a representation.  d1 stacks the blocks Ad(phi(x_i)) - I
/// vertically; d2 has block (j, i) equal to the group-ring evaluation of the
/// i-th Fox derivative of the j-th relator.  d2 * d1 = 0 whenever the
/// representation validates.
struct CochainComplex {
    Matrix d1; // (d*m) x m
    Matrix d2; // (q*m) x (d*m)
    RankPolicy tolerance;
    int generator_count = 0;
    int relator_count = 0;
    int lie_dim = 0;
};

/// Builds the complex; throws ValidationError when the representation does
/// not validate at the policy's relative tolerance.
CochainComplex build_complex(const Representation& rep, const RankPolicy& policy = {});

/// How the reported b2 is to be read.
enum class B2Status {
    exact_single_relator, // q <= 1: coker(d2) is the second cohomology
    exact_duality,        // surfaces module: derived from b2 = b0 on an orientable cover
    coker_bound           // q > 1: b2 is only an upper bound for the second cohomology
};

const char* to_string(B2Status s);

struct CohomologyReport {
    int b0 = 0;
    int b1 = 0;
    int b2 = 0;
    B2Status b2_status = B2Status::exact_single_relator;
    Index rank_d1 = 0;
    Index rank_d2 = 0;
    int z1_dim = 0;
    RankResult d1_decision;
    RankResult d2_decision;
    Matrix h0_basis; // m x b0, orthonormal columns fixed by every Ad(phi(x_i))
    Matrix z1_basis; // (d*m) x z1_dim, orthonormal cocycle columns
    Matrix h2_basis; // (q*m) x b2, orthonormal complement of the image of d2
    RankPolicy policy;
    int generator_count = 0;
    int relator_count = 0;
    int lie_dim = 0;

    bool any_gap_warning() const { return d1_decision.gap_warning || d2_decision.gap_warning; }
};

/// Ranks and dimensions of the complex:
///   b0 = m - rank d1,  dim Z1 = d*m - rank d2,  b1 = dim Z1 - rank d1,
///   b2 = q*m - rank d2  (exact for q <= 1, an upper bound otherwise).
CohomologyReport cohomology_report(const Representation& rep, const RankPolicy& policy = {});

/// Same, from a prebuilt complex.
CohomologyReport cohomology_report(const CochainComplex& complex);

/// Note on the rank of d2: for a single relator the dimension of the
/// invariant Hom-space of the relation module is implied (rank + b2 = m);
/// for q > 1 only the bound q*m is available.
struct RelationModuleNote {
    Index rank_d2 = 0;
    int relator_count = 0;
    int lie_dim = 0;
    std::optional<int> implied_hom_dim; // set when q == 1 (and 0 when q == 0)
    int hom_dim_bound = 0;              // q*m
};

RelationModuleNote relation_module_report(const Representation& rep, const RankPolicy& policy = {});

/// Evaluates the cocycle extension of stacked generator values on a word,
/// by the rule  gamma(uv) = gamma(u) + Ad(phi(u)) gamma(v).
Vector cocycle_evaluate(const Representation& rep, const Vector& stacked_values,
                        const FreeWord& w);

/// Max over relators of |gamma~(r)| for a stacked candidate cocycle.
double cocycle_relator_residual(const Representation& rep, const Vector& stacked_values);

/// Stacked coboundary of a Lie-algebra vector: ((Ad(phi(x_i)) - I) xi)_i.
Vector coboundary(const Representation& rep, const Vector& xi);

/// Orthonormal representatives of the first cohomology inside the cocycle
/// space: the part of Z1 Hermitian-orthogonal to the coboundaries.
Matrix h1_representatives(const Representation& rep, const CohomologyReport& report);

} // namespace charvar
