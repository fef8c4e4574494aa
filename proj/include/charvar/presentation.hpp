#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "charvar/word.hpp"

namespace charvar {

/// Error with source position, thrown by the text parsers.
class ParseError : public std::runtime_error {
  public:
    ParseError(std::string message, int line, int column)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

  private:
    int line_;
    int column_;
};

/// A finitely presented group: named generators and freely reduced relators.
/// The relator list may be empty (free group).
struct Presentation {
    std::vector<std::string> generator_names;
    std::vector<FreeWord> relators;

    int generator_count() const { return static_cast<int>(generator_names.size()); }
    int relator_count() const { return static_cast<int>(relators.size()); }

    /// Index of a named generator, or -1.
    int generator_index(std::string_view name) const;

    /// Throws std::invalid_argument if names collide or a relator uses an
    /// out-of-range generator.
    void validate() const;
};

/// Parses the presentation text format:
///
///   gens <name> <name> ...     -- declares generators, in order
///   rel <word>                 -- zero or more relator lines
///
/// where <word> is whitespace-separated tokens `<name>` or `<name>^<int>`
/// with a nonzero integer exponent.  '#' starts a comment; blank lines are
/// ignored.  Relators are returned freely reduced.
Presentation parse_presentation(std::string_view text);

/// Parses a single word over the given presentation's generators, e.g.
/// "x1^2 x2^-1".  `line`/`column_base` locate error reports.
FreeWord parse_word(std::string_view text, const Presentation& p, int line = 0,
                    int column_base = 1);

} // namespace charvar
