#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "charvar/presentation.hpp"
#include "charvar/representation.hpp"
#include "charvar/smoothness.hpp"
#include "charvar/surfaces.hpp"

namespace charvar {

/// Parsed contents of one analysis input file.  A file carries a group, a
/// presentation and per-generator matrices, plus optional family, cocycle
/// and embedding sections.  Statements:
///
///   gens <name> ...
///   rel <word>
///   group SL(2,C) | GL(n,C) | PSL(2,C)
///   mat <gen> = [[a, b], [c, d]]
///   mat <gen> = CONST [[...]] * EXPI pi*t [[...]] * ...
///   param t list <v1> <v2> ...
///   param t from <a> to <b> steps <n>
///   cocycle <1|2> <gen> = [c1, c2, ...]
///   embed <word>
///
/// Complex literals are `re`, `imi` or `re+imi` (e.g. 0+1i, -1i, 0.7071);
/// sections may appear in any order; unknown statements are hard errors.
struct InputFile {
    Presentation presentation;
    std::optional<GroupSpec> group;
    std::map<int, std::vector<FamilyFactor>> matrices; // per generator index
    std::optional<std::vector<double>> grid;
    std::map<int, std::vector<Complex>> cocycles[2];
    std::vector<FreeWord> embeddings;

    bool has_family_factors() const;

    /// Builds the constant representation.  Throws ParseError-style
    /// std::invalid_argument when the file lacks a group, a matrix is
    /// missing/mis-sized, or a matrix is parameter-dependent.
    Representation make_representation() const;

    /// Builds the one-parameter family; requires a `param` grid.
    FamilySpec make_family() const;

    /// Assembles cocycle k (1 or 2) against a representation; unspecified
    /// generators default to zero vectors.
    Cocycle make_cocycle(int k, const Representation& rep) const;

    bool has_cocycle(int k) const;
};

InputFile parse_input_file(const std::string& text);
InputFile parse_input_path(const std::string& path);

/// Complex literal parser shared with the matrix grammar; `where` seeds the
/// error message.  Accepts `re`, `imi`, `re+imi` with decimal doubles.
Complex parse_complex_literal(std::string_view text, int line, int column);

} // namespace charvar
