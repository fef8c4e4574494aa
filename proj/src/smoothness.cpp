#include "charvar/smoothness.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

namespace charvar {

const char* to_string(Good g) {
    switch (g) {
        case Good::yes: return "yes";
        case Good::no: return "no";
        case Good::dim_only: return "dim_only";
    }
    return "?";
}

const char* to_string(SmoothVerdict v) {
    return v == SmoothVerdict::smooth ? "smooth" : "not_determined";
}

bool is_simple(const Representation& rep, const RankPolicy& policy) {
    return cohomology_report(rep, policy).b0 == rep.spec().center_dim();
}

namespace {

Vector matrix_as_vector(const Matrix& m) {
    return Eigen::Map<const Vector>(m.data(), m.size());
}

} // namespace

ReductivityCertificate is_reductive(const Representation& rep, const RankPolicy& policy) {
    const ValidationReport v = validate_representation(rep, policy.rel_tol);
    if (!v.ok) throw ValidationError("invalid representation: " + v.message);

    const int m = rep.lie_dim();
    const Index dim2 = static_cast<Index>(m) * m;

    // Adjoint images of generators and inverses.
    std::vector<Matrix> gens;
    for (int i = 0; i < rep.presentation().generator_count(); ++i) {
        const Matrix ad = rep.basis().adjoint(rep.image(i));
        gens.push_back(ad);
        gens.push_back(ad.inverse());
    }

    // Grow the associative span from the identity: orthonormal basis in
    // End(g) under the Hermitian Frobenius product, multiplied by the
    // generators until it stabilizes.
    std::vector<Matrix> basis;     // the algebra elements
    Matrix basis_vectors(dim2, 0); // orthonormal coordinates, one column each
    auto try_insert = [&](const Matrix& candidate) {
        Vector w = matrix_as_vector(candidate);
        const double scale = w.norm();
        if (!(scale > 0)) return false;
        Vector r = w - basis_vectors * (basis_vectors.adjoint() * w);
        r -= basis_vectors * (basis_vectors.adjoint() * r); // second pass
        if (r.norm() <= 1e-10 * scale) return false;
        r /= r.norm();
        basis_vectors.conservativeResize(Eigen::NoChange, basis_vectors.cols() + 1);
        basis_vectors.col(basis_vectors.cols() - 1) = r;
        basis.push_back(candidate);
        return true;
    };

    try_insert(Matrix::Identity(m, m));
    std::size_t frontier_begin = 0;
    int rounds = 0;
    while (frontier_begin < basis.size()) {
        if (++rounds > m * m + 1)
            throw std::runtime_error("is_reductive: span failed to stabilize");
        const std::size_t frontier_end = basis.size();
        for (std::size_t k = frontier_begin; k < frontier_end; ++k)
            for (const Matrix& g : gens) try_insert(g * basis[k]);
        frontier_begin = frontier_end;
    }

    const int dim_a = static_cast<int>(basis.size());
    Matrix gram(dim_a, dim_a);
    for (int i = 0; i < dim_a; ++i)
        for (int j = 0; j <= i; ++j)
            gram(i, j) = gram(j, i) =
                (basis[static_cast<std::size_t>(i)] * basis[static_cast<std::size_t>(j)]).trace();

    ReductivityCertificate cert;
    cert.algebra_dim = dim_a;
    cert.gram_decision = numeric_rank(gram, policy);
    cert.reductive = cert.gram_decision.rank == dim_a;
    return cert;
}

ProjectiveStabilizer projective_stabilizer(const Representation& rep,
                                           const RankPolicy& policy) {
    const GroupSpec& spec = rep.spec();
    if (spec.n != 2 || spec.kind == GroupKind::GL)
        throw std::invalid_argument("projective_stabilizer: SL(2)/PSL(2) only");
    const int d = rep.presentation().generator_count();
    if (d > 16) throw std::invalid_argument("projective_stabilizer: more than 16 generators");

    const bool psl = spec.kind == GroupKind::PSL;
    const std::uint32_t sign_vectors = psl ? (1u << d) : 1u;

    ProjectiveStabilizer result;
    int count = 0;
    for (std::uint32_t bits = 0; bits < sign_vectors; ++bits) {
        // Rows of the stacked system  vec(g A_i - eps_i A_i g) = 0 .
        Matrix system(4 * d, 4);
        for (int i = 0; i < d; ++i) {
            const Matrix& a = rep.image(i);
            const double eps = (bits >> i) & 1u ? -1.0 : 1.0;
            // vec is column-major: vec(gA) = (A^T (x) I) vec g,
            // vec(Ag) = (I (x) A) vec g.
            Matrix block = Matrix::Zero(4, 4);
            for (int col = 0; col < 2; ++col)
                for (int row = 0; row < 2; ++row)
                    for (int k = 0; k < 2; ++k) {
                        block(col * 2 + row, k * 2 + row) += a(k, col);       // (A^T (x) I)
                        block(col * 2 + row, col * 2 + k) -= eps * a(row, k); // eps (I (x) A)
                    }
            system.middleRows(4 * i, 4) = block;
        }
        const KernelResult k = kernel_and_cokernel(system, policy);
        const Index nullity = 4 - k.rank.rank;
        if (nullity == 0) continue;
        if (nullity > 1) {
            // A positive-dimensional solution set; the stabiliser has
            // dimension nullity - 1 as a projective variety.
            result.positive_dimension =
                std::max(result.positive_dimension, static_cast<int>(nullity) - 1);
            continue;
        }
        Matrix g(2, 2);
        g << k.kernel(0, 0), k.kernel(2, 0), k.kernel(1, 0), k.kernel(3, 0);
        const Complex det = g.determinant();
        if (std::abs(det) <= policy.rel_tol) continue; // only a singular solution
        g /= std::sqrt(det);
        if (psl) {
            result.elements.push_back(g);
            count += 1;
        } else {
            // Group elements in the line span{g}: lambda g with
            // det(lambda g) = 1, i.e. lambda = +-1 after normalization.
            result.elements.push_back(g);
            result.elements.push_back(-g);
            count += 2;
        }
    }
    if (result.positive_dimension == 0) result.order = count;
    return result;
}

Classification classify(const Representation& rep, const CohomologyReport& cohomology,
                        const RankPolicy& policy) {
    Classification c;
    const GroupSpec& spec = rep.spec();
    c.stabilizer_dim = cohomology.b0;
    c.simple = cohomology.b0 == spec.center_dim();
    c.reductivity = is_reductive(rep, policy);
    c.reductive = c.reductivity.reductive;
    c.irreducible = c.simple && c.reductive;

    const bool stabilizer_order_known = spec.n == 2 && spec.kind != GroupKind::GL &&
                                        rep.presentation().generator_count() <= 16;
    if (stabilizer_order_known) {
        const ProjectiveStabilizer stab = projective_stabilizer(rep, policy);
        c.projective_stabilizer_order = stab.order;
    }

    if (!c.reductive || c.stabilizer_dim > spec.center_dim()) {
        c.good = Good::no;
    } else if (c.projective_stabilizer_order.has_value()) {
        const int center_order = spec.kind == GroupKind::SL ? 2 : 1;
        c.good = *c.projective_stabilizer_order == center_order ? Good::yes : Good::no;
    } else {
        c.good = Good::dim_only;
    }

    const int q = cohomology.relator_count;
    if (q == 0) {
        c.smooth_verdict = SmoothVerdict::smooth;
        c.reason = "free presentation: no relators constrain the representation variety";
    } else if (q == 1) {
        // The centre coefficients form a trivial module, so their b2 does
        // not depend on the representation: one copy of the centre when the
        // relator's exponent sums all vanish, nothing otherwise.
        int b2_central = 0;
        if (spec.center_dim() > 0) {
            const FreeWord& r = rep.presentation().relators[0];
            bool balanced = true;
            for (int i = 0; i < rep.presentation().generator_count(); ++i)
                balanced = balanced && r.exponent_sum(i) == 0;
            b2_central = balanced ? spec.center_dim() : 0;
        }
        const int b2_semisimple = cohomology.b2 - b2_central;
        if (b2_semisimple <= 0) {
            c.smooth_verdict = SmoothVerdict::smooth;
            c.reason = "single relator and the semisimple part of b2 vanishes";
        } else {
            c.smooth_verdict = SmoothVerdict::not_determined;
            c.reason = "nonzero semisimple b2: minimality along deformations not established "
                       "(scan a family for Betti jumps)";
        }
    } else {
        c.smooth_verdict = SmoothVerdict::not_determined;
        c.reason = "multiple relators: b2 is only an upper bound (cokernel of d2)";
    }
    return c;
}

Classification classify(const Representation& rep, const RankPolicy& policy) {
    return classify(rep, cohomology_report(rep, policy), policy);
}

int expected_dimension(const GroupSpec& spec, const SurfaceKind& surface) {
    const int dim_g = spec.lie_dim();
    const int dim_z = spec.center_dim();
    if (surface.orientable) {
        if (surface.genus_or_crosscaps <= 1)
            throw std::invalid_argument("expected_dimension: formula requires genus g > 1");
        return (2 * surface.genus_or_crosscaps - 2) * dim_g + 2 * dim_z;
    }
    if (surface.genus_or_crosscaps <= 2)
        throw std::invalid_argument("expected_dimension: formula requires h > 2 cross-caps");
    return (surface.genus_or_crosscaps - 2) * dim_g + dim_z;
}

Matrix FamilyFactor::value(double t) const {
    if (!exponential) return matrix;
    return (Complex(0, M_PI * t) * matrix).exp();
}

Representation FamilySpec::at(double t) const {
    std::vector<Matrix> images;
    images.reserve(generator_factors.size());
    for (const auto& factors : generator_factors) {
        Matrix g = Matrix::Identity(spec.n, spec.n);
        for (const FamilyFactor& f : factors) g *= f.value(t);
        images.push_back(g);
    }
    return Representation(presentation, spec, std::move(images));
}

FamilyScan scan_family(const FamilySpec& family, const RankPolicy& policy) {
    FamilyScan scan;
    for (double t : family.grid) {
        const Representation rep = [&] {
            try {
                return family.at(t);
            } catch (const std::exception& e) {
                throw ValidationError("family sample t = " + std::to_string(t) + ": " + e.what());
            }
        }();
        const ValidationReport v = validate_representation(rep, policy.rel_tol);
        if (!v.ok)
            throw ValidationError("family sample t = " + std::to_string(t) +
                                  " does not validate: " + v.message);
        const CohomologyReport report = cohomology_report(rep, policy);
        const Classification cls = classify(rep, report, policy);
        FamilySample sample;
        sample.t = t;
        sample.b0 = report.b0;
        sample.b1 = report.b1;
        sample.b2 = report.b2;
        sample.simple = cls.simple;
        sample.reductive = cls.reductive;
        sample.gap_warning = report.any_gap_warning();
        sample.projective_stabilizer_order = cls.projective_stabilizer_order;
        scan.samples.push_back(sample);
    }

    auto mode_of = [&](auto pick) {
        std::map<int, int> counts;
        for (const FamilySample& s : scan.samples) ++counts[pick(s)];
        int best = 0, best_count = -1;
        for (const auto& [value, count] : counts)
            if (count > best_count) {
                best = value;
                best_count = count;
            }
        return best;
    };
    if (!scan.samples.empty()) {
        scan.mode_b0 = mode_of([](const FamilySample& s) { return s.b0; });
        scan.mode_b1 = mode_of([](const FamilySample& s) { return s.b1; });
        scan.mode_b2 = mode_of([](const FamilySample& s) { return s.b2; });
        for (FamilySample& s : scan.samples) {
            s.jump = s.b0 != scan.mode_b0 || s.b1 != scan.mode_b1 || s.b2 != scan.mode_b2;
            if (s.jump) scan.jump_parameters.push_back(s.t);
        }
    }
    return scan;
}

} // namespace charvar
