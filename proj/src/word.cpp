#include "charvar/word.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace charvar {

FreeWord::FreeWord(std::vector<Syllable> syllables) {
    syllables_.reserve(syllables.size());
    for (const Syllable& s : syllables) append_syllable(s.generator, s.exponent);
}

FreeWord FreeWord::generator(int index, std::int64_t exponent) {
    if (index < 0) throw std::invalid_argument("generator index must be nonnegative");
    FreeWord w;
    w.append_syllable(index, exponent);
    return w;
}

void FreeWord::append_syllable(int generator, std::int64_t exponent) {
    if (exponent == 0) return;
    if (!syllables_.empty() && syllables_.back().generator == generator) {
        syllables_.back().exponent += exponent;
        if (syllables_.back().exponent == 0) syllables_.pop_back();
        return;
    }
    syllables_.push_back({generator, exponent});
}

std::int64_t FreeWord::length() const {
    std::int64_t n = 0;
    for (const Syllable& s : syllables_) n += std::llabs(s.exponent);
    return n;
}

std::int64_t FreeWord::exponent_sum(int index) const {
    std::int64_t n = 0;
    for (const Syllable& s : syllables_)
        if (s.generator == index) n += s.exponent;
    return n;
}

int FreeWord::max_generator() const {
    int m = -1;
    for (const Syllable& s : syllables_) m = std::max(m, s.generator);
    return m;
}

FreeWord FreeWord::inverse() const {
    FreeWord w;
    w.syllables_.reserve(syllables_.size());
    for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it)
        w.syllables_.push_back({it->generator, -it->exponent});
    return w;
}

FreeWord& FreeWord::operator*=(const FreeWord& v) {
    for (const Syllable& s : v.syllables_) append_syllable(s.generator, s.exponent);
    return *this;
}

FreeWord operator*(const FreeWord& u, const FreeWord& v) {
    FreeWord w = u;
    w *= v;
    return w;
}

std::strong_ordering operator<=>(const FreeWord& a, const FreeWord& b) {
    return a.syllables_ <=> b.syllables_;
}

std::string FreeWord::to_string(const std::vector<std::string>& names) const {
    if (syllables_.empty()) return "1";
    std::string out;
    for (const Syllable& s : syllables_) {
        if (!out.empty()) out += ' ';
        if (s.generator < static_cast<int>(names.size()))
            out += names[static_cast<std::size_t>(s.generator)];
        else
            out += "g" + std::to_string(s.generator);
        if (s.exponent != 1) out += "^" + std::to_string(s.exponent);
    }
    return out;
}

FreeWord word_multiply(const FreeWord& u, const FreeWord& v) { return u * v; }

FreeWord word_invert(const FreeWord& u) { return u.inverse(); }

FreeWord word_conjugate(const FreeWord& s, const FreeWord& w) { return s * w * s.inverse(); }

std::vector<Syllable> word_letters(const FreeWord& w) {
    std::vector<Syllable> letters;
    letters.reserve(static_cast<std::size_t>(w.length()));
    for (const Syllable& s : w.syllables()) {
        const std::int64_t sign = s.exponent > 0 ? 1 : -1;
        for (std::int64_t k = 0; k < std::llabs(s.exponent); ++k)
            letters.push_back({s.generator, sign});
    }
    return letters;
}

} // namespace charvar
