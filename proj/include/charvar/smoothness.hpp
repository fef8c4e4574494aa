#pragma once

#include <optional>
#include <string>
#include <vector>

#include "charvar/cohomology.hpp"
#include "charvar/representation.hpp"
#include "charvar/surface_kind.hpp"

namespace charvar {

/// Outcome of the complete-reducibility test: the associative algebra
/// generated by the adjoint images together with the spectrum of its trace
/// form.  Nondegenerate trace form on the algebra is equivalent to complete
/// reducibility in characteristic zero.
struct ReductivityCertificate {
    bool reductive = false;
    int algebra_dim = 0;
    RankResult gram_decision;
};

/// True iff b0 equals the centre dimension: the stabiliser's Lie algebra is
/// no bigger than that of the centre.
bool is_simple(const Representation& rep, const RankPolicy& policy = {});

ReductivityCertificate is_reductive(const Representation& rep, const RankPolicy& policy = {});

/// Projective stabiliser of an SL(2)/PSL(2) representation: solutions [g]
/// of g A_i g^-1 = eps_i A_i over sign vectors eps (only +1 signs for SL).
/// `order` counts group elements for SL(2) and projective classes for
/// PSL(2); when some solution space has dimension > 1 the stabiliser is
/// positive-dimensional and `order` is absent.
struct ProjectiveStabilizer {
    std::optional<int> order;
    int positive_dimension = 0;       // stabiliser dimension when order is absent
    std::vector<Matrix> elements;     // one representative per counted element/class
};

ProjectiveStabilizer projective_stabilizer(const Representation& rep,
                                           const RankPolicy& policy = {});

enum class Good { yes, no, dim_only };
enum class SmoothVerdict { smooth, not_determined };

const char* to_string(Good g);
const char* to_string(SmoothVerdict v);

struct Classification {
    bool simple = false;
    bool reductive = false;
    bool irreducible = false; // simple and reductive
    int stabilizer_dim = 0;   // = b0 of the cohomology report
    std::optional<int> projective_stabilizer_order; // SL(2)/PSL(2) only
    Good good = Good::no;
    SmoothVerdict smooth_verdict = SmoothVerdict::not_determined;
    std::string reason;
    ReductivityCertificate reductivity;
};

/// Assembles the flags.  The smooth verdict is one-sided: `smooth` only
/// when the unconditional sufficient condition holds (no relators, or a
/// single relator whose semisimple second cohomology vanishes); otherwise
/// `not_determined` with the reason.  Singularity is never claimed here.
Classification classify(const Representation& rep, const CohomologyReport& cohomology,
                        const RankPolicy& policy = {});
Classification classify(const Representation& rep, const RankPolicy& policy = {});

/// Dimension of the smooth locus of the character variety for surface
/// groups:  (2g-2) dim G + 2 dim Z(g)  for orientable genus g > 1, and
/// (h-2) dim G + dim Z(G)  for non-orientable h > 2 cross-caps.
/// Throws std::invalid_argument outside those ranges.
int expected_dimension(const GroupSpec& spec, const SurfaceKind& surface);

/// One factor of a one-parameter matrix template: a constant, or
/// exp(i*pi*t*M) for a fixed matrix M.
struct FamilyFactor {
    bool exponential = false;
    Matrix matrix;

    Matrix value(double t) const;
};

/// A one-parameter family of representations on a fixed presentation:
/// per-generator products of constant and exponential factors, sampled on
/// an explicit grid.
struct FamilySpec {
    Presentation presentation;
    GroupSpec spec;
    std::vector<std::vector<FamilyFactor>> generator_factors;
    std::vector<double> grid;

    Representation at(double t) const;
};

struct FamilySample {
    double t = 0;
    int b0 = 0;
    int b1 = 0;
    int b2 = 0;
    bool simple = false;
    bool reductive = false;
    bool jump = false; // some Betti number differs from the grid mode
    bool gap_warning = false;
    std::optional<int> projective_stabilizer_order;
};

struct FamilyScan {
    std::vector<FamilySample> samples;
    std::vector<double> jump_parameters;
    int mode_b0 = 0, mode_b1 = 0, mode_b2 = 0;
};

/// Cohomology and classification along the grid, plus the jump report: the
/// samples whose Betti numbers differ from the grid mode.  A sample that
/// fails validation aborts with ValidationError naming its t.
FamilyScan scan_family(const FamilySpec& family, const RankPolicy& policy = {});

} // namespace charvar
