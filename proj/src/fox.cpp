#include "charvar/fox.hpp"

#include <stdexcept>

namespace charvar {

namespace {

/// Derivative of a single syllable x^e with respect to x:
///   e > 0:  1 + x + ... + x^(e-1)
///   e < 0:  -(x^-1 + x^-2 + ... + x^e)
GroupRingElement syllable_derivative(int generator, std::int64_t exponent) {
    GroupRingElement d;
    if (exponent > 0) {
        for (std::int64_t k = 0; k < exponent; ++k)
            d.add_term(FreeWord::generator(generator, k), 1);
    } else {
        for (std::int64_t k = -1; k >= exponent; --k)
            d.add_term(FreeWord::generator(generator, k), -1);
    }
    return d;
}

} // namespace

GroupRingElement fox_derivative(const FreeWord& w, int index, int generator_count) {
    if (index < 0 || index >= generator_count)
        throw std::out_of_range("fox_derivative: generator index out of range");
    if (w.max_generator() >= generator_count)
        throw std::out_of_range("fox_derivative: word uses out-of-range generator");

    GroupRingElement d;
    FreeWord prefix;
    for (const Syllable& s : w.syllables()) {
        if (s.generator == index)
            d += GroupRingElement(prefix) * syllable_derivative(s.generator, s.exponent);
        prefix *= FreeWord::generator(s.generator, s.exponent);
    }
    return d;
}

GroupRingElement fox_fundamental_identity_defect(const FreeWord& w, int generator_count) {
    GroupRingElement lhs(w);
    lhs -= GroupRingElement::one();
    GroupRingElement rhs;
    for (int i = 0; i < generator_count; ++i) {
        GroupRingElement xi_minus_1(FreeWord::generator(i));
        xi_minus_1 -= GroupRingElement::one();
        rhs += fox_derivative(w, i, generator_count) * xi_minus_1;
    }
    return lhs - rhs;
}

} // namespace charvar
