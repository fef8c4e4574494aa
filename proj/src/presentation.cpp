#include "charvar/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

namespace charvar {

namespace {

bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

struct Token {
    std::string text;
    int column; // 1-based
};

std::vector<Token> split_tokens(std::string_view text, int column_base) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        tokens.push_back({std::string(text.substr(i, j - i)),
                          column_base + static_cast<int>(i)});
        i = j;
    }
    return tokens;
}

FreeWord word_from_tokens(const std::vector<Token>& tokens, std::size_t first,
                          const Presentation& p, int line) {
    std::vector<Syllable> syllables;
    for (std::size_t k = first; k < tokens.size(); ++k) {
        const Token& tok = tokens[k];
        std::string_view t = tok.text;
        std::string name;
        std::int64_t exponent = 1;
        const std::size_t caret = t.find('^');
        if (caret != std::string_view::npos) {
            name = std::string(t.substr(0, caret));
            const std::string_view e = t.substr(caret + 1);
            const char* begin = e.data();
            const char* end = e.data() + e.size();
            auto [ptr, ec] = std::from_chars(begin, end, exponent);
            if (ec != std::errc{} || ptr != end)
                throw ParseError("bad exponent in token '" + std::string(t) + "'", line,
                                 tok.column);
            if (exponent == 0)
                throw ParseError("zero exponent in token '" + std::string(t) + "'", line,
                                 tok.column);
        } else {
            name = std::string(t);
        }
        if (name.empty() || !std::all_of(name.begin(), name.end(), is_name_char))
            throw ParseError("bad generator token '" + std::string(t) + "'", line,
                             tok.column);
        const int index = p.generator_index(name);
        if (index < 0)
            throw ParseError("unknown generator '" + name + "'", line, tok.column);
        syllables.push_back({index, exponent});
    }
    return FreeWord(std::move(syllables));
}

} // namespace

int Presentation::generator_index(std::string_view name) const {
    for (std::size_t i = 0; i < generator_names.size(); ++i)
        if (generator_names[i] == name) return static_cast<int>(i);
    return -1;
}

void Presentation::validate() const {
    std::set<std::string> seen;
    for (const std::string& n : generator_names)
        if (!seen.insert(n).second)
            throw std::invalid_argument("duplicate generator name '" + n + "'");
    for (const FreeWord& r : relators)
        if (r.max_generator() >= generator_count())
            throw std::invalid_argument("relator uses out-of-range generator index");
}

FreeWord parse_word(std::string_view text, const Presentation& p, int line,
                    int column_base) {
    return word_from_tokens(split_tokens(text, column_base), 0, p, line);
}

Presentation parse_presentation(std::string_view text_in) {
    // Strip '#' comments, then let ';' separate statements like a newline.
    std::string text;
    text.reserve(text_in.size());
    bool in_comment = false;
    for (char c : text_in) {
        if (c == '\n') in_comment = false;
        else if (c == '#') in_comment = true;
        if (in_comment) continue;
        text += (c == ';') ? '\n' : c;
    }

    Presentation p;
    bool saw_gens = false;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = std::string_view(text).substr(
            pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        ++line_no;
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

        const std::size_t hash = line.find('#');
        if (hash != std::string_view::npos) line = line.substr(0, hash);
        const std::vector<Token> tokens = split_tokens(line, 1);
        if (tokens.empty()) continue;

        const std::string& head = tokens[0].text;
        if (head == "gens") {
            if (saw_gens)
                throw ParseError("duplicate 'gens' statement", line_no, tokens[0].column);
            if (tokens.size() < 2)
                throw ParseError("'gens' needs at least one name", line_no,
                                 tokens[0].column);
            for (std::size_t k = 1; k < tokens.size(); ++k) {
                const std::string& name = tokens[k].text;
                if (!std::all_of(name.begin(), name.end(), is_name_char) ||
                    std::isdigit(static_cast<unsigned char>(name[0])))
                    throw ParseError("bad generator name '" + name + "'", line_no,
                                     tokens[k].column);
                if (p.generator_index(name) >= 0)
                    throw ParseError("duplicate generator name '" + name + "'", line_no,
                                     tokens[k].column);
                p.generator_names.push_back(name);
            }
            saw_gens = true;
        } else if (head == "rel") {
            if (!saw_gens)
                throw ParseError("'rel' before 'gens'", line_no, tokens[0].column);
            p.relators.push_back(word_from_tokens(tokens, 1, p, line_no));
        } else {
            throw ParseError("unknown statement '" + head + "'", line_no,
                             tokens[0].column);
        }
    }
    if (!saw_gens) throw ParseError("missing 'gens' statement", line_no, 1);
    return p;
}

} // namespace charvar
