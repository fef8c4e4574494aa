#pragma once

#include <cstdint>

#include "charvar/representation.hpp"
#include "charvar/surface_kind.hpp"

namespace charvar {

/// Deterministic generator of valid surface-group representations into
/// SL(2,C) or GL(2,C); the test corpora are built from this.
///
/// Orientable genus g: the first g-1 handle pairs are random; the last pair
/// is solved so the product of commutators is the identity.  Non-orientable
/// h cross-caps: x_1..x_{h-1} are random and x_h is a matrix square root of
/// the inverse of the product of their squares (2x2 eigendecomposition,
/// with iI*sigma3-type handling of the -I branch); draws that admit no
/// square root are rejected and retried.
Representation random_surface_representation(const GroupSpec& spec, const SurfaceKind& surface,
                                             std::uint64_t seed);

/// A random well-conditioned element of the group (det 1 for SL/PSL), from
/// the same deterministic stream.  Used by the conjugation-invariance
/// suites.
Matrix random_group_element(const GroupSpec& spec, std::uint64_t seed);

} // namespace charvar
