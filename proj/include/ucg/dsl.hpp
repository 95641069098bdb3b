#pragma once

/**
 * @file dsl.hpp
 * @brief Line-oriented semiring definition files (`.sr`).
 *
 *     # comment
 *     semiring <name>
 *     elements <tok> <tok> ...
 *     zero <tok>
 *     one <tok>
 *     add:
 *     <n rows of n tokens>
 *     mul:
 *     <n rows of n tokens>
 *
 * Row i, column j holds op(elem_i, elem_j). A token is any run of
 * non-whitespace characters other than `#`. LF and CRLF line endings are
 * both accepted.
 */

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ucg/semiring.hpp"

namespace ucg::dsl {

struct SemiringDocument {
    std::string name;
    std::vector<std::string> element_names;
    std::string zero_name;
    std::string one_name;
    std::vector<std::vector<std::string>> add_rows;
    std::vector<std::vector<std::string>> mul_rows;

    bool operator==(const SemiringDocument&) const = default;
};

enum class ParseErrorKind {
    lexical,
    syntax,
    unknown_token,
    duplicate_element,
    missing_section,
    row_length,
    row_count,
};

std::string_view kind_name(ParseErrorKind k);

class ParseError : public std::runtime_error {
public:
    ParseError(ParseErrorKind kind, std::size_t line, std::size_t column, const std::string& what);

    ParseErrorKind kind() const noexcept { return kind_; }
    /// 1-based; 0 when the error concerns the document as a whole.
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    ParseErrorKind kind_;
    std::size_t line_;
    std::size_t column_;
};

SemiringDocument parse(std::string_view text);
std::string serialize(const SemiringTable& s);
/// Assigns indices in element_names order. Does not validate axioms.
SemiringTable to_table(const SemiringDocument& doc);

}  // namespace ucg::dsl
