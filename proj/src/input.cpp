#include "charvar/input.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace charvar {

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;
    int line = 0;
    int column_base = 1;

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool at_end() {
        skip_space();
        return pos >= text.size();
    }
    char peek() {
        skip_space();
        return pos < text.size() ? text[pos] : '\0';
    }
    int column() const { return column_base + static_cast<int>(pos); }
    void expect(char c) {
        skip_space();
        if (pos >= text.size() || text[pos] != c)
            throw ParseError(std::string("expected '") + c + "'", line, column());
        ++pos;
    }
    bool try_consume(char c) {
        skip_space();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    std::string word() {
        skip_space();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        return std::string(text.substr(start, pos - start));
    }
};

double parse_double_at(Cursor& c) {
    c.skip_space();
    const char* begin = c.text.data() + c.pos;
    const char* end = c.text.data() + c.text.size();
    double value = 0;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{})
        throw ParseError("expected a number", c.line, c.column());
    c.pos += static_cast<std::size_t>(ptr - begin);
    return value;
}

Complex parse_complex_at(Cursor& c) {
    const int col = c.column();
    const double first = parse_double_at(c);
    if (c.pos < c.text.size() && c.text[c.pos] == 'i') {
        ++c.pos;
        return Complex(0, first);
    }
    if (c.pos < c.text.size() && (c.text[c.pos] == '+' || c.text[c.pos] == '-')) {
        // from_chars takes a leading '-' but not '+'
        if (c.text[c.pos] == '+') ++c.pos;
        const double second = parse_double_at(c);
        if (c.pos < c.text.size() && c.text[c.pos] == 'i') {
            ++c.pos;
            return Complex(first, second);
        }
        throw ParseError("expected imaginary part ending in 'i'", c.line, col);
    }
    return Complex(first, 0);
}

Matrix parse_matrix_at(Cursor& c) {
    c.expect('[');
    std::vector<std::vector<Complex>> rows;
    while (true) {
        c.expect('[');
        std::vector<Complex> row;
        if (c.peek() != ']') {
            row.push_back(parse_complex_at(c));
            while (c.try_consume(',')) row.push_back(parse_complex_at(c));
        }
        c.expect(']');
        rows.push_back(std::move(row));
        if (!c.try_consume(',')) break;
    }
    c.expect(']');
    const std::size_t n = rows.size();
    for (const auto& row : rows)
        if (row.size() != n)
            throw ParseError("matrix is not square", c.line, c.column());
    Matrix m(static_cast<Index>(n), static_cast<Index>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(static_cast<Index>(i), static_cast<Index>(j)) = rows[i][j];
    return m;
}

std::vector<FamilyFactor> parse_factors_at(Cursor& c) {
    std::vector<FamilyFactor> factors;
    while (true) {
        c.skip_space();
        FamilyFactor f;
        if (c.peek() == '[') {
            f.exponential = false;
            f.matrix = parse_matrix_at(c);
        } else {
            const int col = c.column();
            const std::string keyword = c.word();
            if (keyword == "CONST") {
                f.exponential = false;
                f.matrix = parse_matrix_at(c);
            } else if (keyword == "EXPI") {
                c.skip_space();
                // literal phase token: pi*t
                const std::string pi = c.word();
                bool ok = pi == "pi";
                ok = ok && c.try_consume('*');
                ok = ok && c.word() == "t";
                if (!ok)
                    throw ParseError("EXPI factor must be written 'EXPI pi*t [[...]]'",
                                     c.line, col);
                f.exponential = true;
                f.matrix = parse_matrix_at(c);
            } else {
                throw ParseError("expected a matrix, CONST or EXPI factor", c.line, col);
            }
        }
        factors.push_back(std::move(f));
        if (!c.try_consume('*')) break;
    }
    if (!c.at_end())
        throw ParseError("trailing input after matrix factors", c.line, c.column());
    return factors;
}

struct Line {
    int number;
    std::string text;
};

std::vector<Line> split_lines(const std::string& text_in) {
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
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        lines.push_back({number, line});
    }
    return lines;
}

std::string head_keyword(const std::string& line, std::size_t& after) {
    std::size_t i = 0;
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    after = i;
    return line.substr(start, i - start);
}

} // namespace

Complex parse_complex_literal(std::string_view text, int line, int column) {
    Cursor c{text, 0, line, column};
    const Complex value = parse_complex_at(c);
    if (!c.at_end()) throw ParseError("trailing input after complex literal", line, column);
    return value;
}

bool InputFile::has_family_factors() const {
    for (const auto& [gen, factors] : matrices)
        for (const FamilyFactor& f : factors)
            if (f.exponential) return true;
    return false;
}

namespace {

void require_matrices(const InputFile& in) {
    if (!in.group) throw std::invalid_argument("input file is missing a 'group' statement");
    const int n = in.group->n;
    for (int i = 0; i < in.presentation.generator_count(); ++i) {
        auto it = in.matrices.find(i);
        if (it == in.matrices.end())
            throw std::invalid_argument("no matrix given for generator '" +
                                        in.presentation.generator_names[static_cast<std::size_t>(i)] +
                                        "'");
        for (const FamilyFactor& f : it->second)
            if (f.matrix.rows() != n || f.matrix.cols() != n)
                throw std::invalid_argument("matrix for generator '" +
                                            in.presentation.generator_names[static_cast<std::size_t>(i)] +
                                            "' is not " + std::to_string(n) + "x" +
                                            std::to_string(n));
    }
}

} // namespace

Representation InputFile::make_representation() const {
    require_matrices(*this);
    if (has_family_factors())
        throw std::invalid_argument(
            "file declares a one-parameter family; use the scan command");
    std::vector<Matrix> images;
    for (int i = 0; i < presentation.generator_count(); ++i) {
        Matrix g = Matrix::Identity(group->n, group->n);
        for (const FamilyFactor& f : matrices.at(i)) g *= f.matrix;
        images.push_back(std::move(g));
    }
    return Representation(presentation, *group, std::move(images));
}

FamilySpec InputFile::make_family() const {
    require_matrices(*this);
    if (!grid) throw std::invalid_argument("scan needs a 'param t ...' statement");
    FamilySpec family;
    family.presentation = presentation;
    family.spec = *group;
    for (int i = 0; i < presentation.generator_count(); ++i)
        family.generator_factors.push_back(matrices.at(i));
    family.grid = *grid;
    return family;
}

bool InputFile::has_cocycle(int k) const { return !cocycles[k - 1].empty(); }

Cocycle InputFile::make_cocycle(int k, const Representation& rep) const {
    const auto& table = cocycles[k - 1];
    const int m = rep.lie_dim();
    Cocycle c;
    for (int i = 0; i < rep.presentation().generator_count(); ++i) {
        auto it = table.find(i);
        if (it == table.end()) {
            c.values.push_back(Vector::Zero(m));
            continue;
        }
        if (static_cast<int>(it->second.size()) != m)
            throw std::invalid_argument("cocycle vector for generator '" +
                                        rep.presentation().generator_names[static_cast<std::size_t>(i)] +
                                        "' must have " + std::to_string(m) + " coordinates");
        Vector v(m);
        for (int j = 0; j < m; ++j) v(j) = it->second[static_cast<std::size_t>(j)];
        c.values.push_back(std::move(v));
    }
    return c;
}

InputFile parse_input_file(const std::string& text) {
    InputFile in;
    const std::vector<Line> lines = split_lines(text);

    // Pass 1: the generator declaration (sections are order independent,
    // but everything else resolves names against it).
    bool saw_gens = false;
    for (const Line& line : lines) {
        std::size_t after = 0;
        if (head_keyword(line.text, after) != "gens") continue;
        if (saw_gens) throw ParseError("duplicate 'gens' statement", line.number, 1);
        saw_gens = true;
        Cursor c{std::string_view(line.text).substr(after), 0, line.number,
                 static_cast<int>(after) + 1};
        while (!c.at_end()) {
            const int col = c.column();
            const std::string name = c.word();
            if (name.empty() || std::isdigit(static_cast<unsigned char>(name[0])))
                throw ParseError("bad generator name", line.number, col);
            if (in.presentation.generator_index(name) >= 0)
                throw ParseError("duplicate generator name '" + name + "'", line.number, col);
            in.presentation.generator_names.push_back(name);
        }
        if (in.presentation.generator_names.empty())
            throw ParseError("'gens' needs at least one name", line.number, 1);
    }
    if (!saw_gens) throw ParseError("missing 'gens' statement", lines.empty() ? 1 : lines.back().number, 1);

    // Pass 2: everything else.
    for (const Line& line : lines) {
        std::size_t after = 0;
        const std::string head = head_keyword(line.text, after);
        if (head.empty() || head == "gens") continue;
        const std::string_view rest = std::string_view(line.text).substr(after);
        const int column_base = static_cast<int>(after) + 1;

        if (head == "rel") {
            in.presentation.relators.push_back(
                parse_word(rest, in.presentation, line.number, column_base));
        } else if (head == "group") {
            if (in.group) throw ParseError("duplicate 'group' statement", line.number, 1);
            try {
                in.group = GroupSpec::parse(std::string(rest));
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what(), line.number, column_base);
            }
        } else if (head == "mat") {
            Cursor c{rest, 0, line.number, column_base};
            const int col = c.column();
            const std::string name = c.word();
            const int gen = in.presentation.generator_index(name);
            if (gen < 0)
                throw ParseError("unknown generator '" + name + "'", line.number, col);
            if (in.matrices.count(gen))
                throw ParseError("duplicate matrix for generator '" + name + "'",
                                 line.number, col);
            c.expect('=');
            in.matrices[gen] = parse_factors_at(c);
        } else if (head == "param") {
            if (in.grid) throw ParseError("duplicate 'param' statement", line.number, 1);
            Cursor c{rest, 0, line.number, column_base};
            if (c.word() != "t")
                throw ParseError("only a parameter named 't' is supported", line.number,
                                 column_base);
            const std::string mode = c.word();
            std::vector<double> grid;
            if (mode == "list") {
                while (!c.at_end()) grid.push_back(parse_double_at(c));
                if (grid.empty())
                    throw ParseError("'param t list' needs at least one value", line.number,
                                     column_base);
            } else if (mode == "from") {
                const double a = parse_double_at(c);
                if (c.word() != "to")
                    throw ParseError("expected 'to'", line.number, c.column());
                const double b = parse_double_at(c);
                if (c.word() != "steps")
                    throw ParseError("expected 'steps'", line.number, c.column());
                const double steps_value = parse_double_at(c);
                const int steps = static_cast<int>(steps_value);
                if (steps < 1 || steps != steps_value)
                    throw ParseError("'steps' must be a positive integer", line.number,
                                     c.column());
                if (!c.at_end())
                    throw ParseError("trailing input after 'param'", line.number, c.column());
                if (steps == 1) {
                    grid.push_back(a);
                } else {
                    for (int k = 0; k < steps; ++k)
                        grid.push_back(a + (b - a) * k / (steps - 1));
                }
            } else {
                throw ParseError("expected 'list' or 'from' after 'param t'", line.number,
                                 column_base);
            }
            in.grid = std::move(grid);
        } else if (head == "cocycle") {
            Cursor c{rest, 0, line.number, column_base};
            const double which_value = parse_double_at(c);
            const int which = static_cast<int>(which_value);
            if (which != which_value || which < 1 || which > 2)
                throw ParseError("cocycle index must be 1 or 2", line.number, column_base);
            const int col = c.column();
            const std::string name = c.word();
            const int gen = in.presentation.generator_index(name);
            if (gen < 0)
                throw ParseError("unknown generator '" + name + "'", line.number, col);
            auto& table = in.cocycles[which - 1];
            if (table.count(gen))
                throw ParseError("duplicate cocycle entry for generator '" + name + "'",
                                 line.number, col);
            c.expect('=');
            c.expect('[');
            std::vector<Complex> entries;
            if (c.peek() != ']') {
                entries.push_back(parse_complex_at(c));
                while (c.try_consume(',')) entries.push_back(parse_complex_at(c));
            }
            c.expect(']');
            if (!c.at_end())
                throw ParseError("trailing input after cocycle vector", line.number,
                                 c.column());
            table[gen] = std::move(entries);
        } else if (head == "embed") {
            in.embeddings.push_back(parse_word(rest, in.presentation, line.number, column_base));
        } else {
            throw ParseError("unknown statement '" + head + "'", line.number, 1);
        }
    }
    return in;
}

InputFile parse_input_path(const std::string& path) {
    std::ifstream file(path);
    if (!file)
        throw std::runtime_error("cannot open input file '" + path + "'");
    std::stringstream buffer;
    buffer << file.rdbuf();
    return parse_input_file(buffer.str());
}

} // namespace charvar
