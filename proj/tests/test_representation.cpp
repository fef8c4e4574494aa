#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "charvar/fox.hpp"
#include "charvar/rep_random.hpp"
#include "charvar/representation.hpp"
#include "fixtures.hpp"

using namespace charvar;
using namespace charvar::fixtures;

TEST_CASE("word evaluation") {
    const Representation rep = klein_pauli();
    CHECK((evaluate_word(rep, FreeWord::identity()) - identity2()).norm() == 0);

    // relator x1^2 x2^2 evaluates to (i s1)^2 (i s2)^2 = (-I)(-I) = I
    const Matrix r = evaluate_word(rep, rep.presentation().relators[0]);
    CHECK((r - identity2()).norm() < 1e-14);

    // inverse letters
    const FreeWord w = FreeWord::generator(0) * FreeWord::generator(1, -1);
    const Matrix expected = rep.image(0) * rep.image(1).inverse();
    CHECK((evaluate_word(rep, w) - expected).norm() < 1e-14);
}

TEST_CASE("A.4 relator lands in the centre") {
    const Representation rep = crosscap3_psl();
    const Matrix r = evaluate_word(rep, rep.presentation().relators[0]);
    CHECK((r + identity2()).norm() < 1e-14); // equals -I
}

TEST_CASE("group ring evaluation") {
    const Representation rep = klein_pauli();
    const int m = rep.lie_dim();

    CHECK((evaluate_group_ring(rep, GroupRingElement::one()) - Matrix::Identity(m, m)).norm() <
          1e-14);

    GroupRingElement x1_minus_1(FreeWord::generator(0));
    x1_minus_1 -= GroupRingElement::one();
    const Matrix expected = rep.basis().adjoint(rep.image(0)) - Matrix::Identity(m, m);
    CHECK((evaluate_group_ring(rep, x1_minus_1) - expected).norm() < 1e-13);
}

TEST_CASE("fundamental identity transports to operators") {
    // evaluate(w - 1) = sum_i evaluate(d_i w) (Ad(phi(x_i)) - I)
    const Representation rep = klein_pauli();
    const int d = rep.presentation().generator_count();
    const int m = rep.lie_dim();
    const FreeWord words[] = {
        rep.presentation().relators[0],
        FreeWord::generator(0) * FreeWord::generator(1, -2) * FreeWord::generator(0, 3),
        FreeWord::generator(1, -1) * FreeWord::generator(0, 2) * FreeWord::generator(1, 2),
    };
    for (const FreeWord& w : words) {
        GroupRingElement w_minus_1(w);
        w_minus_1 -= GroupRingElement::one();
        const Matrix lhs = evaluate_group_ring(rep, w_minus_1);
        Matrix rhs = Matrix::Zero(m, m);
        for (int i = 0; i < d; ++i)
            rhs += evaluate_group_ring(rep, fox_derivative(w, i, d)) *
                   (rep.basis().adjoint(rep.image(i)) - Matrix::Identity(m, m));
        CHECK((lhs - rhs).norm() < 1e-12);
    }
}

TEST_CASE("validation accepts the golden inputs") {
    CHECK(validate_representation(klein_pauli()).ok);
    CHECK(validate_representation(klein_diagonal()).ok);
    CHECK(validate_representation(crosscap3_psl()).ok);
    CHECK(validate_representation(quaternion_genus2()).ok);
    for (const RelatorResidual& r : validate_representation(klein_pauli()).residuals)
        CHECK(r.residual < 1e-15);
}

TEST_CASE("validation rejects a broken assignment") {
    // x1 -> I, x2 -> i sigma1 on the Klein bottle: relator image is -I.
    const Presentation p = canonical_presentation(SurfaceKind::non_orientable(2));
    const Representation rep(p, GroupSpec{GroupKind::SL, 2},
                             {identity2(), Complex(0, 1) * sigma1()});
    const ValidationReport report = validate_representation(rep);
    CHECK_FALSE(report.ok);
    CHECK(report.max_residual == doctest::Approx(2.0 * std::sqrt(2.0)));
}

TEST_CASE("the A.4 images only validate projectively") {
    const Representation psl = crosscap3_psl();
    CHECK(validate_representation(psl).ok);
    const Representation sl(psl.presentation(), GroupSpec{GroupKind::SL, 2}, psl.images());
    CHECK_FALSE(validate_representation(sl).ok);
}

TEST_CASE("restriction to the orientation kernel") {
    const Representation rep = klein_pauli();
    const SubgroupPresentation sub =
        index2_subgroup(rep.presentation(), std::vector<int>(2, 1));
    const Representation restricted = restrict_representation(rep, sub);
    REQUIRE(restricted.images().size() == 3);
    const Complex i(0, 1);
    // order: x2 x1^-1, x1^2, x1 x2
    CHECK((restricted.image(0) - (-i) * sigma3()).norm() < 1e-14);
    CHECK((restricted.image(1) + identity2()).norm() < 1e-14);
    CHECK((restricted.image(2) - (-i) * sigma3()).norm() < 1e-14);
    CHECK(validate_representation(restricted).ok);
}

TEST_CASE("random surface representations validate and are deterministic") {
    const GroupSpec sl2{GroupKind::SL, 2};
    const GroupSpec gl2{GroupKind::GL, 2};

    for (std::uint64_t seed : {1ull, 2ull, 42ull}) {
        const Representation n3 =
            random_surface_representation(sl2, SurfaceKind::non_orientable(3), seed);
        CHECK(validate_representation(n3).ok);
        const Representation g2 =
            random_surface_representation(sl2, SurfaceKind::orientable_genus(2), seed);
        CHECK(validate_representation(g2).ok);
        const Representation gl_h4 =
            random_surface_representation(gl2, SurfaceKind::non_orientable(4), seed);
        CHECK(validate_representation(gl_h4).ok);
        const Representation gl_g1 =
            random_surface_representation(gl2, SurfaceKind::orientable_genus(1), seed);
        CHECK(validate_representation(gl_g1).ok);
    }

    const Representation a =
        random_surface_representation(sl2, SurfaceKind::non_orientable(3), 7);
    const Representation b =
        random_surface_representation(sl2, SurfaceKind::non_orientable(3), 7);
    for (std::size_t k = 0; k < a.images().size(); ++k)
        CHECK((a.images()[k] - b.images()[k]).norm() == 0);

    CHECK_THROWS_AS((void)random_surface_representation(GroupSpec{GroupKind::PSL, 2},
                                                        SurfaceKind::non_orientable(3), 1),
                    std::invalid_argument);
}
