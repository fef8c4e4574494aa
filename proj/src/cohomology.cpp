#include "charvar/cohomology.hpp"

#include "charvar/fox.hpp"

namespace charvar {

const char* to_string(B2Status s) {
    switch (s) {
        case B2Status::exact_single_relator: return "exact_single_relator";
        case B2Status::exact_duality: return "exact_duality";
        case B2Status::coker_bound: return "coker_bound";
    }
    return "?";
}

CochainComplex build_complex(const Representation& rep, const RankPolicy& policy) {
    const ValidationReport v = validate_representation(rep, policy.rel_tol);
    if (!v.ok) throw ValidationError("invalid representation: " + v.message);

    const int d = rep.presentation().generator_count();
    const int q = rep.presentation().relator_count();
    const int m = rep.lie_dim();

    CochainComplex complex;
    complex.tolerance = policy;
    complex.generator_count = d;
    complex.relator_count = q;
    complex.lie_dim = m;

    complex.d1.resize(static_cast<Index>(d) * m, m);
    for (int i = 0; i < d; ++i)
        complex.d1.middleRows(static_cast<Index>(i) * m, m) =
            rep.basis().adjoint(rep.image(i)) - Matrix::Identity(m, m);

    complex.d2.resize(static_cast<Index>(q) * m, static_cast<Index>(d) * m);
    for (int j = 0; j < q; ++j) {
        const FreeWord& r = rep.presentation().relators[static_cast<std::size_t>(j)];
        for (int i = 0; i < d; ++i)
            complex.d2.block(static_cast<Index>(j) * m, static_cast<Index>(i) * m, m, m) =
                evaluate_group_ring(rep, fox_derivative(r, i, d));
    }
    return complex;
}

CohomologyReport cohomology_report(const CochainComplex& complex) {
    const int d = complex.generator_count;
    const int q = complex.relator_count;
    const int m = complex.lie_dim;

    CohomologyReport report;
    report.policy = complex.tolerance;
    report.generator_count = d;
    report.relator_count = q;
    report.lie_dim = m;

    const KernelResult k1 = kernel_and_cokernel(complex.d1, complex.tolerance);
    const KernelResult k2 = kernel_and_cokernel(complex.d2, complex.tolerance);
    report.d1_decision = k1.rank;
    report.d2_decision = k2.rank;
    report.rank_d1 = k1.rank.rank;
    report.rank_d2 = k2.rank.rank;

    report.b0 = m - static_cast<int>(report.rank_d1);
    report.z1_dim = d * m - static_cast<int>(report.rank_d2);
    report.b1 = report.z1_dim - static_cast<int>(report.rank_d1);
    report.b2 = q * m - static_cast<int>(report.rank_d2);
    report.b2_status = q > 1 ? B2Status::coker_bound : B2Status::exact_single_relator;

    report.h0_basis = k1.kernel;
    report.z1_basis = k2.kernel;
    report.h2_basis = k2.cokernel;
    return report;
}

CohomologyReport cohomology_report(const Representation& rep, const RankPolicy& policy) {
    return cohomology_report(build_complex(rep, policy));
}

RelationModuleNote relation_module_report(const Representation& rep, const RankPolicy& policy) {
    const CohomologyReport report = cohomology_report(rep, policy);
    RelationModuleNote note;
    note.rank_d2 = report.rank_d2;
    note.relator_count = report.relator_count;
    note.lie_dim = report.lie_dim;
    note.hom_dim_bound = report.relator_count * report.lie_dim;
    if (report.relator_count == 0)
        note.implied_hom_dim = 0;
    else if (report.relator_count == 1)
        note.implied_hom_dim = static_cast<int>(report.rank_d2) + report.b2;
    return note;
}

Vector cocycle_evaluate(const Representation& rep, const Vector& stacked_values,
                        const FreeWord& w) {
    const int m = rep.lie_dim();
    const int d = rep.presentation().generator_count();
    if (stacked_values.size() != static_cast<Index>(d) * m)
        throw std::invalid_argument("cocycle_evaluate: value vector size mismatch");
    if (w.max_generator() >= d)
        throw std::invalid_argument("cocycle_evaluate: word uses out-of-range generator");

    std::vector<Matrix> ad(static_cast<std::size_t>(d)), ad_inv(static_cast<std::size_t>(d));
    std::vector<bool> cached(static_cast<std::size_t>(d), false);
    Vector value = Vector::Zero(m);
    Matrix prefix_ad = Matrix::Identity(m, m);
    for (const Syllable& letter : word_letters(w)) {
        const std::size_t i = static_cast<std::size_t>(letter.generator);
        if (!cached[i]) {
            ad[i] = rep.basis().adjoint(rep.image(letter.generator));
            ad_inv[i] = ad[i].inverse();
            cached[i] = true;
        }
        const Vector gamma_i =
            stacked_values.segment(static_cast<Index>(letter.generator) * m, m);
        if (letter.exponent > 0) {
            value += prefix_ad * gamma_i;
            prefix_ad *= ad[i];
        } else {
            prefix_ad *= ad_inv[i];
            value -= prefix_ad * gamma_i;
        }
    }
    return value;
}

double cocycle_relator_residual(const Representation& rep, const Vector& stacked_values) {
    double worst = 0;
    for (const FreeWord& r : rep.presentation().relators)
        worst = std::max(worst, cocycle_evaluate(rep, stacked_values, r).norm());
    return worst;
}

Vector coboundary(const Representation& rep, const Vector& xi) {
    const int d = rep.presentation().generator_count();
    const int m = rep.lie_dim();
    Vector out(static_cast<Index>(d) * m);
    for (int i = 0; i < d; ++i)
        out.segment(static_cast<Index>(i) * m, m) =
            rep.basis().adjoint(rep.image(i)) * xi - xi;
    return out;
}

Matrix h1_representatives(const Representation& rep, const CohomologyReport& report) {
    const int d = report.generator_count;
    const int m = report.lie_dim;
    Matrix b1(static_cast<Index>(d) * m, m);
    for (int j = 0; j < m; ++j) b1.col(j) = coboundary(rep, Vector::Unit(m, j));
    const Matrix b1_basis = column_space_basis(b1, report.policy);
    return orthogonal_complement_within(report.z1_basis, b1_basis, report.policy);
}

} // namespace charvar
