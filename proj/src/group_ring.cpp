#include "charvar/group_ring.hpp"

namespace charvar {

GroupRingElement::GroupRingElement(const FreeWord& w, std::int64_t coefficient) {
    add_term(w, coefficient);
}

std::int64_t GroupRingElement::coefficient(const FreeWord& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? 0 : it->second;
}

void GroupRingElement::add_term(const FreeWord& w, std::int64_t coefficient) {
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& other) {
    for (const auto& [w, c] : other.terms_) add_term(w, c);
    return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& other) {
    for (const auto& [w, c] : other.terms_) add_term(w, -c);
    return *this;
}

GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) {
    a += b;
    return a;
}

GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) {
    a -= b;
    return a;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
    GroupRingElement p;
    for (const auto& [u, cu] : a.terms_)
        for (const auto& [v, cv] : b.terms_) p.add_term(u * v, cu * cv);
    return p;
}

GroupRingElement operator*(std::int64_t c, const GroupRingElement& a) {
    GroupRingElement p;
    for (const auto& [w, cw] : a.terms_) p.add_term(w, c * cw);
    return p;
}

std::string GroupRingElement::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : terms_) {
        if (!out.empty()) out += c >= 0 ? " + " : " - ";
        else if (c < 0) out += "-";
        const std::int64_t a = c >= 0 ? c : -c;
        if (a != 1) out += std::to_string(a) + "*";
        out += w.to_string(names);
    }
    return out;
}

std::int64_t augmentation(const GroupRingElement& u) {
    std::int64_t s = 0;
    for (const auto& [w, c] : u.terms()) s += c;
    return s;
}

} // namespace charvar
