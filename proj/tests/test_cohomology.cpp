#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "charvar/cohomology.hpp"
#include "charvar/rep_random.hpp"
#include "fixtures.hpp"

using namespace charvar;
using namespace charvar::fixtures;

TEST_CASE("Klein bottle with Pauli images: the full complex") {
    const Representation rep = klein_pauli();
    const CochainComplex complex = build_complex(rep);

    // Frozen blocks: Ad(i s1) = diag(1,-1,-1), Ad(i s2) = diag(-1,1,-1);
    // d2 blocks are I + Ad(i s1) = diag(2,0,0) and Ad(-I)(I + Ad(i s2)) =
    // diag(0,2,0).
    Matrix d1 = Matrix::Zero(6, 3);
    d1(1, 1) = -2;
    d1(2, 2) = -2;
    d1(3, 0) = -2;
    d1(5, 2) = -2;
    CHECK((complex.d1 - d1).norm() < 1e-13);

    Matrix d2 = Matrix::Zero(3, 6);
    d2(0, 0) = 2;
    d2(1, 4) = 2;
    CHECK((complex.d2 - d2).norm() < 1e-13);

    CHECK((complex.d2 * complex.d1).norm() < 1e-12);

    const CohomologyReport report = cohomology_report(complex);
    CHECK(report.rank_d1 == 3);
    CHECK(report.rank_d2 == 2);
    CHECK(report.b0 == 0);
    CHECK(report.b1 == 1);
    CHECK(report.b2 == 1);
    CHECK(report.z1_dim == 4);
    CHECK(report.b2_status == B2Status::exact_single_relator);
    CHECK_FALSE(report.any_gap_warning());

    // H2 basis is proportional to sigma3 (third coordinate).
    REQUIRE(report.h2_basis.cols() == 1);
    const Vector h2 = report.h2_basis.col(0);
    CHECK(std::abs(std::abs(h2(2)) - 1.0) < 1e-10);
    CHECK(std::abs(h2(0)) < 1e-10);
    CHECK(std::abs(h2(1)) < 1e-10);

    // Every reported cocycle satisfies the relator condition.
    for (Index c = 0; c < report.z1_basis.cols(); ++c)
        CHECK(cocycle_relator_residual(rep, report.z1_basis.col(c)) < 1e-8);

    // Every reported fixed vector really is fixed by every generator.
    for (Index c = 0; c < report.h0_basis.cols(); ++c)
        for (int i = 0; i < 2; ++i)
            CHECK((rep.basis().adjoint(rep.image(i)) * report.h0_basis.col(c) -
                   report.h0_basis.col(c))
                      .norm() < 1e-8);

    // Euler identity for a single relator: b0 - b1 + b2 = (2 - d) m.
    CHECK(report.b0 - report.b1 + report.b2 == (2 - 2) * 3);
}

TEST_CASE("diagonal Klein bottle (A.2 data)") {
    const Representation rep = klein_diagonal();
    const CohomologyReport report = cohomology_report(rep);
    CHECK(report.b0 == 1);
    CHECK(report.b1 == 1);
    CHECK(report.b2 == 0);
    REQUIRE(report.h0_basis.cols() == 1);
    const Vector h0 = report.h0_basis.col(0);
    CHECK(std::abs(std::abs(h0(2)) - 1.0) < 1e-10);
    CHECK(std::abs(h0(0)) < 1e-10);
    CHECK(std::abs(h0(1)) < 1e-10);

    const RelationModuleNote note = relation_module_report(rep);
    CHECK(note.rank_d2 == 3);
    REQUIRE(note.implied_hom_dim.has_value());
    CHECK(*note.implied_hom_dim == 3); // = dim sl2
}

TEST_CASE("rank theorem note for the Pauli Klein bottle") {
    const RelationModuleNote note = relation_module_report(klein_pauli());
    CHECK(note.rank_d2 == 2);
    REQUIRE(note.implied_hom_dim.has_value());
    CHECK(*note.implied_hom_dim == 3);
    CHECK(note.hom_dim_bound == 3);
}

TEST_CASE("trivial representation of the Klein bottle group") {
    const Presentation p = canonical_presentation(SurfaceKind::non_orientable(2));
    const Representation rep(p, GroupSpec{GroupKind::SL, 2}, {identity2(), identity2()});
    const CochainComplex complex = build_complex(rep);
    CHECK(complex.d1.norm() < 1e-14);
    // d2 blocks are eps(d_i r) * I = 2I for both generators.
    Matrix expected(3, 6);
    expected << 2 * Matrix::Identity(3, 3), 2 * Matrix::Identity(3, 3);
    CHECK((complex.d2 - expected).norm() < 1e-13);

    const CohomologyReport report = cohomology_report(complex);
    CHECK(report.b0 == 3);
    CHECK(report.b1 == 3);
    CHECK(report.b2 == 0);
}

TEST_CASE("free group: no relators") {
    Presentation p;
    p.generator_names = {"x1", "x2"};
    const Complex i(0, 1);
    const Representation rep(p, GroupSpec{GroupKind::SL, 2},
                             {i * sigma1(), i * sigma2()});
    const CohomologyReport report = cohomology_report(rep);
    CHECK(report.relator_count == 0);
    CHECK(report.b2 == 0);
    CHECK(report.rank_d2 == 0);
    CHECK(report.z1_dim == 6);
    CHECK(report.b1 == 6 - static_cast<int>(report.rank_d1));
    CHECK(report.z1_basis.cols() == 6);

    const RelationModuleNote note = relation_module_report(rep);
    CHECK(note.rank_d2 == 0);
    REQUIRE(note.implied_hom_dim.has_value());
    CHECK(*note.implied_hom_dim == 0);
}

TEST_CASE("build_complex rejects invalid representations") {
    const Presentation p = canonical_presentation(SurfaceKind::non_orientable(2));
    const Representation bad(p, GroupSpec{GroupKind::SL, 2},
                             {identity2(), Complex(0, 1) * sigma1()});
    CHECK_THROWS_AS((void)build_complex(bad), ValidationError);
}

TEST_CASE("coboundaries are cocycles and die on relators") {
    const Representation rep = klein_diagonal();
    for (int j = 0; j < 3; ++j) {
        const Vector b = coboundary(rep, Vector::Unit(3, j));
        CHECK(cocycle_relator_residual(rep, b) < 1e-12);
        // gamma~(w) for the coboundary of xi equals Ad(phi(w)) xi - xi.
        const FreeWord w =
            FreeWord::generator(0) * FreeWord::generator(1, -1) * FreeWord::generator(0, 2);
        const Vector lhs = cocycle_evaluate(rep, b, w);
        const Vector rhs =
            adjoint_of_word(rep, w) * Vector::Unit(3, j) - Vector::Unit(3, j);
        CHECK((lhs - rhs).norm() < 1e-12);
    }
}

TEST_CASE("h1 representatives are cocycles modulo coboundaries") {
    const Representation rep = klein_pauli();
    const CohomologyReport report = cohomology_report(rep);
    const Matrix h1 = h1_representatives(rep, report);
    CHECK(h1.cols() == report.b1);
    for (Index c = 0; c < h1.cols(); ++c) {
        CHECK(cocycle_relator_residual(rep, h1.col(c)) < 1e-9);
        for (int j = 0; j < 3; ++j) {
            const Vector b = coboundary(rep, Vector::Unit(3, j));
            CHECK(std::abs((b.adjoint() * h1.col(c)).value()) < 1e-9 * b.norm());
        }
    }
}

TEST_CASE("conjugation invariance of the reported dimensions") {
    for (std::uint64_t seed : {11ull, 12ull}) {
        const Representation rep = random_surface_representation(
            GroupSpec{GroupKind::SL, 2}, SurfaceKind::non_orientable(3), seed);
        const CohomologyReport before = cohomology_report(rep);
        const Matrix g = random_group_element(GroupSpec{GroupKind::SL, 2}, seed + 1000);
        const CohomologyReport after = cohomology_report(rep.conjugated(g));
        CHECK(before.b0 == after.b0);
        CHECK(before.b1 == after.b1);
        CHECK(before.b2 == after.b2);
    }
}
