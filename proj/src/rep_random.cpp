#include "charvar/rep_random.hpp"

#include <random>
#include <stdexcept>

#include "charvar/surfaces.hpp"

namespace charvar {

namespace {

// Deterministic uniform/normal draws built directly on the mt19937_64
// stream, so corpora are identical across standard libraries.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Complex standard_complex_normal(std::mt19937_64& rng) {
    const double u1 = std::max(uniform01(rng), 1e-300);
    const double u2 = uniform01(rng);
    const double r = std::sqrt(-2.0 * std::log(u1));
    return Complex(r * std::cos(2.0 * M_PI * u2), r * std::sin(2.0 * M_PI * u2));
}

Matrix gaussian_matrix(int n, std::mt19937_64& rng) {
    Matrix m(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) m(i, j) = standard_complex_normal(rng);
    return m;
}

Matrix draw_group_matrix(const GroupSpec& spec, std::mt19937_64& rng) {
    for (int attempt = 0; attempt < 256; ++attempt) {
        Matrix g = gaussian_matrix(spec.n, rng);
        const Complex det = g.determinant();
        if (std::abs(det) < 1e-3) continue;
        if (spec.kind != GroupKind::GL) g /= std::sqrt(det);
        Eigen::JacobiSVD<Matrix> svd(g);
        const double cond = svd.singularValues()(0) / svd.singularValues()(spec.n - 1);
        if (cond > 50.0) continue;
        return g;
    }
    throw std::runtime_error("draw_group_matrix: retries exhausted");
}

Matrix commutator(const Matrix& a, const Matrix& b) {
    return a * b * a.inverse() * b.inverse();
}

/// Solves [a, b] = K for a generic unimodular K: picks a with
/// tr(a^-1 K) = tr(a^-1), so that a^-1 K is conjugate to a^-1, then takes b
/// as the change of basis between the two.
bool solve_commutator_pair(const GroupSpec& spec, const Matrix& K, std::mt19937_64& rng,
                           Matrix& a_out, Matrix& b_out) {
    const Matrix I = Matrix::Identity(2, 2);
    if ((K - I).norm() < 1e-12) {
        // Commuting pair: b a polynomial in a.
        const Matrix a = draw_group_matrix(spec, rng);
        Matrix b = a + 2.0 * I;
        const Complex det = b.determinant();
        if (std::abs(det) < 1e-6) return false;
        if (spec.kind != GroupKind::GL) b /= std::sqrt(det);
        a_out = a;
        b_out = b;
        return true;
    }

    const Matrix M = K - I;
    // Basis direction with the best overlap against the trace constraint.
    Matrix N = Matrix::Zero(2, 2);
    Complex nm = 0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            Matrix e = Matrix::Zero(2, 2);
            e(i, j) = 1;
            const Complex overlap = (e * M).trace();
            if (std::abs(overlap) > std::abs(nm)) {
                nm = overlap;
                N = e;
            }
        }
    if (std::abs(nm) < 1e-12) return false;

    Matrix c = gaussian_matrix(2, rng);
    c -= ((c * M).trace() / nm) * N; // now tr(cK) = tr(c)
    const Complex det_c = c.determinant();
    if (std::abs(det_c) < 1e-6) return false;
    if (spec.kind != GroupKind::GL) c /= std::sqrt(det_c);

    const Matrix X = c * K; // same trace and determinant as c
    Eigen::ComplexEigenSolver<Matrix> ec(c), ex(X);
    if (ec.info() != Eigen::Success || ex.info() != Eigen::Success) return false;
    const Vector lc = ec.eigenvalues(), lx = ex.eigenvalues();
    const double scale = std::max(lc.cwiseAbs().maxCoeff(), 1e-12);
    if (std::abs(lc(0) - lc(1)) < 1e-6 * scale) return false; // parabolic or central draw

    Matrix vx = ex.eigenvectors();
    if (std::abs(lx(0) - lc(0)) > std::abs(lx(1) - lc(0))) {
        vx.col(0).swap(vx.col(1));
    }
    Matrix b = vx * ec.eigenvectors().inverse();
    const Complex det_b = b.determinant();
    if (std::abs(det_b) < 1e-8) return false;
    if (spec.kind != GroupKind::GL) b /= std::sqrt(det_b);

    const Matrix a = c.inverse();
    if ((commutator(a, b) - K).norm() > 1e-8 * std::max(1.0, K.norm())) return false;
    a_out = a;
    b_out = b;
    return true;
}

/// Principal square root of a 2x2 invertible matrix via eigendecomposition;
/// the -I branch is pinned to i*sigma3.  Returns false for (numerically)
/// defective arguments.
bool matrix_sqrt_2x2(const GroupSpec& spec, const Matrix& C, Matrix& root_out) {
    const Matrix I = Matrix::Identity(2, 2);
    if ((C - I).norm() < 1e-12) {
        root_out = I;
        return true;
    }
    if ((C + I).norm() < 1e-12) {
        Matrix r(2, 2);
        r << Complex(0, 1), 0, 0, Complex(0, -1); // i*sigma3, unit determinant
        root_out = r;
        return true;
    }
    Eigen::ComplexEigenSolver<Matrix> es(C);
    if (es.info() != Eigen::Success) return false;
    const Vector lambda = es.eigenvalues();
    const double scale = std::max(lambda.cwiseAbs().maxCoeff(), 1e-12);
    if (std::abs(lambda(0) - lambda(1)) < 1e-10 * scale) {
        // Scalar (handled for GL) or defective.
        if ((C - lambda(0) * I).norm() < 1e-10 * scale) {
            root_out = std::sqrt(lambda(0)) * I;
            return true;
        }
        return false;
    }
    const Matrix P = es.eigenvectors();
    Vector s(2);
    s(0) = std::sqrt(lambda(0));
    s(1) = spec.kind != GroupKind::GL ? Complex(1.0) / s(0) : std::sqrt(lambda(1));
    root_out = P * s.asDiagonal() * P.inverse();
    return (root_out * root_out - C).norm() < 1e-8 * std::max(1.0, C.norm());
}

} // namespace

Representation random_surface_representation(const GroupSpec& spec, const SurfaceKind& surface,
                                             std::uint64_t seed) {
    if (spec.n != 2 || spec.kind == GroupKind::PSL)
        throw std::invalid_argument(
            "random_surface_representation: SL(2,C) or GL(2,C) only");
    if (surface.orientable && surface.genus_or_crosscaps < 1)
        throw std::invalid_argument("random_surface_representation: genus must be >= 1");
    if (!surface.orientable && surface.genus_or_crosscaps < 2)
        throw std::invalid_argument("random_surface_representation: need h >= 2");

    std::mt19937_64 rng(seed);
    const Presentation presentation = canonical_presentation(surface);
    const Matrix I = Matrix::Identity(2, 2);

    for (int attempt = 0; attempt < 1024; ++attempt) {
        std::vector<Matrix> images;
        if (surface.orientable) {
            const int g = surface.genus_or_crosscaps;
            Matrix product = I;
            for (int i = 0; i < g - 1; ++i) {
                const Matrix a = draw_group_matrix(spec, rng);
                const Matrix b = draw_group_matrix(spec, rng);
                images.push_back(a);
                images.push_back(b);
                product *= commutator(a, b);
            }
            Matrix a, b;
            if (!solve_commutator_pair(spec, product.inverse(), rng, a, b)) continue;
            images.push_back(a);
            images.push_back(b);
        } else {
            const int h = surface.genus_or_crosscaps;
            Matrix product = I;
            for (int i = 0; i < h - 1; ++i) {
                const Matrix x = draw_group_matrix(spec, rng);
                images.push_back(x);
                product *= x * x;
            }
            Matrix root;
            if (!matrix_sqrt_2x2(spec, product.inverse(), root)) continue;
            images.push_back(root);
        }
        Representation rep(presentation, spec, std::move(images));
        if (validate_representation(rep).ok) return rep;
    }
    throw std::runtime_error("random_surface_representation: retries exhausted");
}

Matrix random_group_element(const GroupSpec& spec, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return draw_group_matrix(spec, rng);
}

} // namespace charvar
