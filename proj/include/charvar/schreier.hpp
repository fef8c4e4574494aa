#pragma once

#include <array>
#include <string>
#include <vector>

#include "charvar/presentation.hpp"
#include "charvar/word.hpp"

namespace charvar {

/// Presentation of an index-2 subgroup produced by Reidemeister-Schreier
/// rewriting with coset representatives {e, c}, where c is the first
/// generator of odd parity.
struct SubgroupPresentation {
    /// 0/1 per ambient generator; defines the kernel of the parity map.
    std::vector<int> parity;
    /// One word in the ambient generators per Schreier generator
    /// (2d - 1 of them for d ambient generators).
    std::vector<FreeWord> schreier_generators;
    /// Rewritten relators over the Schreier alphabet, one per ambient
    /// relator per coset (2q total, possibly redundant).
    std::vector<FreeWord> relators;
    /// rewriting_table[coset][ambient generator] = index into
    /// schreier_generators, or -1 when the Schreier generator is trivial.
    std::array<std::vector<int>, 2> rewriting_table;

    int schreier_count() const { return static_cast<int>(schreier_generators.size()); }

    /// Parity (0/1) of an ambient word under this parity vector.
    int word_parity(const FreeWord& w) const;

    /// Rewrites an even-parity ambient word as a word in the Schreier
    /// generators, starting from the given coset.
    FreeWord rewrite(const FreeWord& w, int start_coset = 0) const;

    /// Expands a word over the Schreier alphabet back to ambient letters.
    FreeWord expand(const FreeWord& schreier_word) const;

    /// Generator names s0, s1, ... for printing, or derived from ambient
    /// names as the expansion words.
    Presentation as_presentation() const;
};

/// Runs index-2 Reidemeister-Schreier rewriting.  Requires at least one
/// odd-parity generator and even total parity for every relator; throws
/// std::invalid_argument otherwise.
SubgroupPresentation index2_subgroup(const Presentation& p, const std::vector<int>& parity);

} // namespace charvar
