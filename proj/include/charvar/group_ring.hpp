#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "charvar/word.hpp"

namespace charvar {

/// An element of the integral group ring of a free group: a finite integer
/// combination of freely reduced words.  Zero coefficients are never stored.
class GroupRingElement {
  public:
    GroupRingElement() = default;
    explicit GroupRingElement(const FreeWord& w, std::int64_t coefficient = 1);

    static GroupRingElement zero() { return GroupRingElement{}; }
    static GroupRingElement one() { return GroupRingElement(FreeWord::identity()); }

    const std::map<FreeWord, std::int64_t>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    std::int64_t coefficient(const FreeWord& w) const;

    GroupRingElement& operator+=(const GroupRingElement& other);
    GroupRingElement& operator-=(const GroupRingElement& other);
    friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b);
    friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b);
    friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
    friend GroupRingElement operator*(std::int64_t c, const GroupRingElement& a);

    friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

    std::string to_string(const std::vector<std::string>& names) const;

    void add_term(const FreeWord& w, std::int64_t coefficient);

  private:
    std::map<FreeWord, std::int64_t> terms_;
};

/// Sum of coefficients; a ring homomorphism onto the integers.
std::int64_t augmentation(const GroupRingElement& u);

} // namespace charvar
