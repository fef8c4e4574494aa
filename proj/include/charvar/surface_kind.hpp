#pragma once

#include <stdexcept>

namespace charvar {

/// A closed surface: orientable of genus g >= 1, or non-orientable made of
/// h >= 2 cross-caps.
struct SurfaceKind {
    bool orientable = true;
    int genus_or_crosscaps = 1;

    static SurfaceKind orientable_genus(int g) {
        if (g < 1) throw std::invalid_argument("orientable genus must be >= 1");
        return {true, g};
    }
    static SurfaceKind non_orientable(int h) {
        if (h < 2) throw std::invalid_argument("cross-cap count must be >= 2");
        return {false, h};
    }

    int euler_characteristic() const {
        return orientable ? 2 - 2 * genus_or_crosscaps : 2 - genus_or_crosscaps;
    }
};

} // namespace charvar
