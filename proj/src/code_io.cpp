#include "lcd4/code_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace lcd4 {
namespace {

struct LineReader {
    std::istream& in;
    int line_no = 0;

    bool next(std::string& out) {
        if (!std::getline(in, out)) return false;
        ++line_no;
        if (!out.empty() && out.back() == '\r') out.pop_back();
        return true;
    }
};

struct Token {
    std::string text;
    int col = 0;  // 1-based start position
};

std::vector<Token> split_line(const std::string& line) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < line.size()) {
        if (line[i] == ' ' || line[i] == '\t') {
            ++i;
            continue;
        }
        size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return out;
}

int parse_count(const Token& t, int line, const char* what) {
    if (t.text.empty() || t.text.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError(std::string("expected ") + what + ", got '" + t.text + "'",
                         line, t.col);
    long v = 0;
    for (char c : t.text) {
        v = v * 10 + (c - '0');
        if (v > 1000000) throw ParseError(std::string(what) + " is unreasonably large", line, t.col);
    }
    return static_cast<int>(v);
}

GF4Matrix read_matrix_impl(LineReader& reader) {
    std::string line;
    std::vector<Token> header;
    // The header is the first non-blank line.
    for (;;) {
        if (!reader.next(line))
            throw ParseError("unexpected end of input: missing header line",
                             reader.line_no + 1, 1);
        header = split_line(line);
        if (!header.empty()) break;
    }
    if (header.size() != 2)
        throw ParseError("header must be '<cols> <rows>'", reader.line_no,
                         header.size() > 2 ? header[2].col : 1);
    int cols = parse_count(header[0], reader.line_no, "column count");
    int rows = parse_count(header[1], reader.line_no, "row count");
    if (cols < 1)
        throw ParseError("column count must be positive", reader.line_no, header[0].col);

    GF4Matrix m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        if (!reader.next(line))
            throw ParseError("unexpected end of input: expected " +
                                 std::to_string(rows) + " rows, found " + std::to_string(r),
                             reader.line_no + 1, 1);
        std::vector<Token> toks = split_line(line);
        if (static_cast<int>(toks.size()) != cols) {
            int col = toks.size() > static_cast<size_t>(cols)
                          ? toks[static_cast<size_t>(cols)].col
                          : static_cast<int>(line.size()) + 1;
            throw ParseError("expected " + std::to_string(cols) + " symbols, found " +
                                 std::to_string(toks.size()),
                             reader.line_no, col);
        }
        for (int c = 0; c < cols; ++c) {
            const Token& t = toks[static_cast<size_t>(c)];
            std::optional<GF4Scalar> s =
                t.text.size() == 1 ? gf4_from_char(t.text[0]) : std::nullopt;
            if (!s)
                throw ParseError("invalid symbol '" + t.text + "' (want 0, 1, w or W)",
                                 reader.line_no, t.col);
            m.at(r, c) = *s;
        }
    }
    return m;
}

void reject_trailing(LineReader& reader) {
    std::string line;
    while (reader.next(line)) {
        std::vector<Token> toks = split_line(line);
        if (!toks.empty())
            throw ParseError("trailing content after matrix", reader.line_no, toks[0].col);
    }
}

}  // namespace

ParseError::ParseError(const std::string& what, int line, int col)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(col) + ": " + what),
      line_(line),
      col_(col) {}

GF4Matrix read_matrix(std::istream& in) {
    LineReader reader{in};
    return read_matrix_impl(reader);
}

GF4Matrix parse_matrix(const std::string& text) {
    std::istringstream in(text);
    LineReader reader{in};
    GF4Matrix m = read_matrix_impl(reader);
    reject_trailing(reader);
    return m;
}

void write_matrix(std::ostream& out, const GF4Matrix& m) {
    out << m.cols() << ' ' << m.rows() << '\n';
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) {
            if (c) out << ' ';
            out << to_char(m.at(r, c));
        }
        out << '\n';
    }
}

LinearCode read_code(std::istream& in) {
    GF4Matrix m = read_matrix(in);
    if (m.rows() == 0) return LinearCode::zero(m.cols());
    return LinearCode::from_generator(m);
}

void write_code(std::ostream& out, const LinearCode& c) {
    write_matrix(out, c.generator());
}

LinearCode read_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    LineReader reader{in};
    GF4Matrix m = read_matrix_impl(reader);
    reject_trailing(reader);
    if (m.rows() == 0) return LinearCode::zero(m.cols());
    return LinearCode::from_generator(m);
}

}  // namespace lcd4
