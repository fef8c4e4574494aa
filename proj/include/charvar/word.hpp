#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace charvar {

/// One run of equal letters: generator index (0-based) raised to a nonzero
/// exponent.
struct Syllable {
    int generator = 0;
    std::int64_t exponent = 0;

    friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

/// A freely reduced word in the generators of a free group, stored
/// run-length encoded.  Adjacent syllables always carry distinct generator
/// indices and no exponent is zero; the empty word is the identity.
class FreeWord {
  public:
    FreeWord() = default;

    /// Builds a word from arbitrary syllables, freely reducing as needed.
    explicit FreeWord(std::vector<Syllable> syllables);

    static FreeWord identity() { return FreeWord{}; }

    /// Single-generator word x_i^e (e may be negative; e = 0 gives the
    /// identity).
    static FreeWord generator(int index, std::int64_t exponent = 1);

    const std::vector<Syllable>& syllables() const { return syllables_; }
    bool is_identity() const { return syllables_.empty(); }

    /// Number of letters, counting multiplicity: sum of |exponent|.
    std::int64_t length() const;

    /// Sum of exponents of generator `index`.
    std::int64_t exponent_sum(int index) const;

    /// Largest generator index appearing, or -1 for the identity word.
    int max_generator() const;

    FreeWord inverse() const;

    friend FreeWord operator*(const FreeWord& u, const FreeWord& v);
    FreeWord& operator*=(const FreeWord& v);

    friend bool operator==(const FreeWord&, const FreeWord&) = default;
    friend std::strong_ordering operator<=>(const FreeWord& a, const FreeWord& b);

    /// Renders the word using the supplied generator names, e.g.
    /// "x1 x2^-1"; the identity renders as "1".
    std::string to_string(const std::vector<std::string>& names) const;

  private:
    void append_syllable(int generator, std::int64_t exponent);

    std::vector<Syllable> syllables_;
};

FreeWord word_multiply(const FreeWord& u, const FreeWord& v);
FreeWord word_invert(const FreeWord& u);

/// Conjugate s * w * s^-1.
FreeWord word_conjugate(const FreeWord& s, const FreeWord& w);

/// Expands a word into single letters (generator, +1/-1).
std::vector<Syllable> word_letters(const FreeWord& w);

} // namespace charvar
