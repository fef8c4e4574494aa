#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "charvar/linalg.hpp"

using namespace charvar;

TEST_CASE("identity and zero") {
    const RankResult id = numeric_rank(Matrix::Identity(3, 3));
    CHECK(id.rank == 3);
    CHECK(id.largest_dropped == 0);
    CHECK_FALSE(id.gap_warning);
    CHECK(std::isinf(id.gap_ratio));

    const RankResult zero = numeric_rank(Matrix::Zero(4, 2));
    CHECK(zero.rank == 0);
    CHECK_FALSE(zero.gap_warning);

    CHECK(numeric_rank(Matrix(0, 5)).rank == 0);
    CHECK(numeric_rank(Matrix(5, 0)).rank == 0);
}

TEST_CASE("frozen singular values of the Klein-bottle d1") {
    // d1 for x1 -> i sigma1, x2 -> i sigma2 stacks diag(0,-2,-2) and
    // diag(-2,0,-2); the squared singular values are 4, 4, 8.
    Matrix d1 = Matrix::Zero(6, 3);
    d1(1, 1) = -2;
    d1(2, 2) = -2;
    d1(3, 0) = -2;
    d1(5, 2) = -2;
    const RankResult r = numeric_rank(d1);
    CHECK(r.rank == 3);
    REQUIRE(r.singular_values.size() == 3);
    CHECK(r.singular_values[0] == doctest::Approx(2.0 * std::sqrt(2.0)));
    CHECK(r.singular_values[1] == doctest::Approx(2.0));
    CHECK(r.singular_values[2] == doctest::Approx(2.0));
}

TEST_CASE("cutoff policy and gap warnings") {
    Matrix a = Matrix::Zero(3, 3);
    a(0, 0) = 1;
    a(1, 1) = 1e-5;
    a(2, 2) = 1e-10;
    const RankResult r = numeric_rank(a);
    CHECK(r.rank == 2);
    CHECK(r.smallest_kept == doctest::Approx(1e-5));
    CHECK(r.largest_dropped == doctest::Approx(1e-10));
    CHECK(r.gap_ratio == doctest::Approx(1e5));
    CHECK(r.gap_warning); // ratio below 1e6

    a(2, 2) = 1e-13;
    const RankResult clean = numeric_rank(a);
    CHECK(clean.rank == 2);
    CHECK_FALSE(clean.gap_warning);

    RankPolicy loose;
    loose.rel_tol = 1e-4;
    CHECK(numeric_rank(a, loose).rank == 1);
}

TEST_CASE("kernel and cokernel bases") {
    Matrix a = Matrix::Zero(3, 4);
    a(0, 0) = 2;
    a(1, 1) = 3;
    const KernelResult k = kernel_and_cokernel(a);
    CHECK(k.rank.rank == 2);
    REQUIRE(k.kernel.cols() == 2);
    REQUIRE(k.cokernel.cols() == 1);
    CHECK((a * k.kernel).norm() < 1e-12);
    CHECK((k.cokernel.adjoint() * a).norm() < 1e-12);
    CHECK((k.kernel.adjoint() * k.kernel - Matrix::Identity(2, 2)).norm() < 1e-12);

    const KernelResult empty = kernel_and_cokernel(Matrix(0, 3));
    CHECK(empty.kernel.cols() == 3);
    CHECK((empty.kernel - Matrix::Identity(3, 3)).norm() == 0);
}

TEST_CASE("span complement") {
    // v spans the xy-plane, w the x-axis; the complement within is the y-axis.
    Matrix v = Matrix::Zero(3, 2);
    v(0, 0) = 1;
    v(1, 1) = 1;
    Matrix w = Matrix::Zero(3, 1);
    w(0, 0) = 1;
    const Matrix c = orthogonal_complement_within(v, w);
    REQUIRE(c.cols() == 1);
    CHECK(std::abs(c(1, 0)) == doctest::Approx(1.0));
    CHECK(std::abs(c(0, 0)) < 1e-12);
    CHECK(std::abs(c(2, 0)) < 1e-12);
}
