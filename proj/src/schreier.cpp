#include "charvar/schreier.hpp"

#include <stdexcept>

namespace charvar {

int SubgroupPresentation::word_parity(const FreeWord& w) const {
    std::int64_t total = 0;
    for (const Syllable& s : w.syllables())
        total += s.exponent * parity[static_cast<std::size_t>(s.generator)];
    return static_cast<int>(((total % 2) + 2) % 2);
}

FreeWord SubgroupPresentation::rewrite(const FreeWord& w, int start_coset) const {
    FreeWord out;
    int coset = start_coset;
    for (const Syllable& letter : word_letters(w)) {
        const int i = letter.generator;
        const int p = parity[static_cast<std::size_t>(i)];
        if (letter.exponent > 0) {
            const int sg = rewriting_table[static_cast<std::size_t>(coset)]
                                          [static_cast<std::size_t>(i)];
            if (sg >= 0) out *= FreeWord::generator(sg);
            coset ^= p;
        } else {
            coset ^= p;
            const int sg = rewriting_table[static_cast<std::size_t>(coset)]
                                          [static_cast<std::size_t>(i)];
            if (sg >= 0) out *= FreeWord::generator(sg, -1);
        }
    }
    return out;
}

FreeWord SubgroupPresentation::expand(const FreeWord& schreier_word) const {
    FreeWord out;
    for (const Syllable& s : schreier_word.syllables()) {
        const FreeWord& g = schreier_generators[static_cast<std::size_t>(s.generator)];
        FreeWord piece = s.exponent > 0 ? g : g.inverse();
        for (std::int64_t k = 0; k < std::llabs(s.exponent); ++k) out *= piece;
    }
    return out;
}

Presentation SubgroupPresentation::as_presentation() const {
    Presentation p;
    for (int k = 0; k < schreier_count(); ++k)
        p.generator_names.push_back("s" + std::to_string(k));
    p.relators = relators;
    return p;
}

SubgroupPresentation index2_subgroup(const Presentation& p, const std::vector<int>& parity) {
    p.validate();
    const int d = p.generator_count();
    if (static_cast<int>(parity.size()) != d)
        throw std::invalid_argument("parity vector length must match generator count");
    for (int v : parity)
        if (v != 0 && v != 1)
            throw std::invalid_argument("parity entries must be 0 or 1");

    int odd = -1;
    for (int i = 0; i < d; ++i)
        if (parity[static_cast<std::size_t>(i)] == 1) {
            odd = i;
            break;
        }
    if (odd < 0)
        throw std::invalid_argument("index2_subgroup: all-even parity vector gives the whole group");

    SubgroupPresentation sub;
    sub.parity = parity;
    for (const FreeWord& r : p.relators)
        if (sub.word_parity(r) != 0)
            throw std::invalid_argument(
                "index2_subgroup: relator has odd parity; the parity map is ill-defined");

    // Coset representatives: rep_0 = e, rep_1 = c (first odd generator).
    const FreeWord c = FreeWord::generator(odd);
    const std::array<FreeWord, 2> rep = {FreeWord::identity(), c};

    sub.rewriting_table[0].assign(static_cast<std::size_t>(d), -1);
    sub.rewriting_table[1].assign(static_cast<std::size_t>(d), -1);
    for (int s = 0; s < 2; ++s) {
        for (int i = 0; i < d; ++i) {
            const int target = s ^ parity[static_cast<std::size_t>(i)];
            const FreeWord g = rep[static_cast<std::size_t>(s)] * FreeWord::generator(i) *
                               rep[static_cast<std::size_t>(target)].inverse();
            if (g.is_identity()) continue; // the Schreier condition: skip s = e, x = c
            sub.rewriting_table[static_cast<std::size_t>(s)][static_cast<std::size_t>(i)] =
                sub.schreier_count();
            sub.schreier_generators.push_back(g);
        }
    }

    for (const FreeWord& r : p.relators)
        for (int s = 0; s < 2; ++s) sub.relators.push_back(sub.rewrite(r, s));

    return sub;
}

} // namespace charvar
