#pragma once

// Shared golden inputs for the test suites: the worked SL(2)/PSL(2)
// representations on small surface groups that the suites check against.

#include "charvar/representation.hpp"
#include "charvar/surfaces.hpp"

namespace charvar::fixtures {

inline Matrix sigma1() {
    Matrix s(2, 2);
    s << 0, 1, 1, 0;
    return s;
}

inline Matrix sigma2() {
    Matrix s(2, 2);
    s << 0, Complex(0, -1), Complex(0, 1), 0;
    return s;
}

inline Matrix sigma3() {
    Matrix s(2, 2);
    s << 1, 0, 0, -1;
    return s;
}

inline Complex zeta8() { return std::polar(1.0, M_PI / 4); }

inline Matrix identity2() { return Matrix::Identity(2, 2); }

/// Klein bottle group <x1, x2 | x1^2 x2^2> with x1 -> i sigma1,
/// x2 -> i sigma2 in SL(2,C).
inline Representation klein_pauli() {
    const Presentation p = canonical_presentation(SurfaceKind::non_orientable(2));
    const Complex i(0, 1);
    return Representation(p, GroupSpec{GroupKind::SL, 2}, {i * sigma1(), i * sigma2()});
}

/// Same group with the diagonal eighth-root images x1 -> diag(z, 1/z),
/// x2 -> diag(1/z, z), z = exp(i pi/4).
inline Representation klein_diagonal() {
    const Presentation p = canonical_presentation(SurfaceKind::non_orientable(2));
    Matrix a(2, 2), b(2, 2);
    a << zeta8(), 0, 0, 1.0 / zeta8();
    b << 1.0 / zeta8(), 0, 0, zeta8();
    return Representation(p, GroupSpec{GroupKind::SL, 2}, {a, b});
}

/// Three-cross-cap group <x1,x2,x3 | x1^2 x2^2 x3^2> into PSL(2,C) with the
/// diagonal/antidiagonal eighth-root images.
inline Representation crosscap3_psl() {
    const Presentation p = canonical_presentation(SurfaceKind::non_orientable(3));
    Matrix a(2, 2), b(2, 2), c(2, 2);
    a << zeta8(), 0, 0, 1.0 / zeta8();
    b << 1.0 / zeta8(), 0, 0, zeta8();
    c << 0, -zeta8(), 1.0 / zeta8(), 0;
    return Representation(p, GroupSpec{GroupKind::PSL, 2}, {a, b, c});
}

/// Genus-2 orientable surface group with the quaternion-type images
/// (i sigma1, i sigma2, i sigma1, i sigma2); the commutators are both -I.
inline Representation quaternion_genus2() {
    const Presentation p = canonical_presentation(SurfaceKind::orientable_genus(2));
    const Complex i(0, 1);
    return Representation(p, GroupSpec{GroupKind::SL, 2},
                          {i * sigma1(), i * sigma2(), i * sigma1(), i * sigma2()});
}

/// Free group on one generator with a unipotent SL(2,C) image.
inline Representation unipotent_f1() {
    Presentation p;
    p.generator_names = {"x1"};
    Matrix u(2, 2);
    u << 1, 1, 0, 1;
    return Representation(p, GroupSpec{GroupKind::SL, 2}, {u});
}

} // namespace charvar::fixtures
