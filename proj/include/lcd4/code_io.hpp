#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "lcd4/gf4.hpp"
#include "lcd4/linear_code.hpp"

namespace lcd4 {

// Malformed textual input, annotated with a 1-based line and column.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line, int col);

    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_;
    int col_;
};

// Text format shared by code files and raw matrix blocks: a header line
// "<cols> <rows>" followed by <rows> lines of <cols> symbols from {0,1,w,W}
// separated by spaces.  For a code file the header reads as "n k".
//
// The stream reader consumes exactly one block and leaves the rest of the
// stream untouched; parse_matrix rejects trailing content.
GF4Matrix read_matrix(std::istream& in);
GF4Matrix parse_matrix(const std::string& text);
void write_matrix(std::ostream& out, const GF4Matrix& m);

LinearCode read_code(std::istream& in);
void write_code(std::ostream& out, const LinearCode& c);

// Whole-file read; throws ParseError for format problems and
// std::runtime_error when the file cannot be opened.
LinearCode read_code_file(const std::string& path);

}  // namespace lcd4
