#pragma once

#include "charvar/group_ring.hpp"
#include "charvar/word.hpp"

namespace charvar {

/// Fox derivative of a word with respect to the generator of the given
/// index.  The derivation satisfies d(x_j) = delta_ij, d(uv) = d(u) + u d(v)
/// for group elements, and hence d(x^-1) = -x^-1 on the matching generator.
/// `generator_count` bounds valid indices; pass the ambient presentation's
/// generator count.
GroupRingElement fox_derivative(const FreeWord& w, int index, int generator_count);

/// The identity  w - 1 = sum_i d_i(w) (x_i - 1)  in the group ring, used as
/// an exact self-check.  Returns the difference of the two sides.
GroupRingElement fox_fundamental_identity_defect(const FreeWord& w, int generator_count);

} // namespace charvar
