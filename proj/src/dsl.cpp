#include "ucg/dsl.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <unordered_map>

#include "ucg/errors.hpp"

namespace ucg::dsl {

std::string_view kind_name(ParseErrorKind k) {
    switch (k) {
        case ParseErrorKind::lexical: return "lexical error";
        case ParseErrorKind::syntax: return "syntax error";
        case ParseErrorKind::unknown_token: return "unknown token";
        case ParseErrorKind::duplicate_element: return "duplicate element";
        case ParseErrorKind::missing_section: return "missing section";
        case ParseErrorKind::row_length: return "row length mismatch";
        case ParseErrorKind::row_count: return "row count mismatch";
    }
    return "error";
}

namespace {

std::string format_message(ParseErrorKind kind, std::size_t line, std::size_t column,
                           const std::string& what) {
    std::string out;
    if (line > 0) {
        out += "line " + std::to_string(line);
        if (column > 0) out += ", column " + std::to_string(column);
        out += ": ";
    }
    out += std::string(kind_name(kind)) + ": " + what;
    return out;
}

}  // namespace

ParseError::ParseError(ParseErrorKind kind, std::size_t line, std::size_t column,
                       const std::string& what)
    : std::runtime_error(format_message(kind, line, column, what)),
      kind_(kind),
      line_(line),
      column_(column) {}

namespace {

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based byte column
};

// Length of the UTF-8 sequence starting at s[i], or 0 if malformed.
std::size_t utf8_sequence_length(std::string_view s, std::size_t i) {
    const auto b0 = static_cast<unsigned char>(s[i]);
    std::size_t len = 0;
    unsigned char lo = 0x80, hi = 0xBF;
    if (b0 < 0x80) return 1;
    if (b0 >= 0xC2 && b0 <= 0xDF) len = 2;
    else if (b0 >= 0xE0 && b0 <= 0xEF) {
        len = 3;
        if (b0 == 0xE0) lo = 0xA0;
        if (b0 == 0xED) hi = 0x9F;
    } else if (b0 >= 0xF0 && b0 <= 0xF4) {
        len = 4;
        if (b0 == 0xF0) lo = 0x90;
        if (b0 == 0xF4) hi = 0x8F;
    } else {
        return 0;
    }
    if (i + len > s.size()) return 0;
    for (std::size_t k = 1; k < len; ++k) {
        const auto b = static_cast<unsigned char>(s[i + k]);
        const unsigned char l = k == 1 ? lo : 0x80, h = k == 1 ? hi : 0xBF;
        if (b < l || b > h) return 0;
    }
    return len;
}

std::vector<Token> tokenize(std::string_view line, std::size_t lineno) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        const char c = line[i];
        if (c == '#') break;
        if (c == ' ' || c == '\t') {
            ++i;
            continue;
        }
        const std::size_t start = i;
        while (i < line.size()) {
            const char d = line[i];
            if (d == ' ' || d == '\t' || d == '#') break;
            const auto u = static_cast<unsigned char>(d);
            if (u < 0x20 || u == 0x7F)
                throw ParseError(ParseErrorKind::lexical, lineno, i + 1, "control character in input");
            const std::size_t len = utf8_sequence_length(line, i);
            if (len == 0)
                throw ParseError(ParseErrorKind::lexical, lineno, i + 1, "invalid UTF-8 sequence");
            i += len;
        }
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

enum Section { kName, kElements, kZero, kOne, kAdd, kMul, kSectionCount };

constexpr std::array<std::string_view, kSectionCount> kSectionNames = {
    "semiring", "elements", "zero", "one", "add:", "mul:"};

std::optional<Section> directive(std::string_view word) {
    for (std::size_t i = 0; i < kSectionNames.size(); ++i)
        if (kSectionNames[i] == word) return static_cast<Section>(i);
    return std::nullopt;
}

}  // namespace

SemiringDocument parse(std::string_view text) {
    SemiringDocument doc;
    std::array<std::size_t, kSectionCount> seen_at{};  // line of each directive, 0 = absent
    std::unordered_map<std::string_view, std::size_t> index;
    std::vector<std::vector<std::string>>* rows = nullptr;  // block being filled
    std::size_t rows_started_at = 0;
    std::string_view rows_label;

    auto check_known = [&](const Token& t, std::size_t lineno) {
        if (!index.contains(t.text))
            throw ParseError(ParseErrorKind::unknown_token, lineno, t.column,
                             "'" + std::string(t.text) + "' is not a declared element");
    };

    std::size_t lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        ++lineno;
        const bool last = end == text.size();
        pos = end + 1;

        const std::vector<Token> toks = tokenize(line, lineno);
        if (toks.empty()) {
            if (last) break;
            continue;
        }

        if (rows != nullptr) {
            const std::size_t n = doc.element_names.size();
            if (directive(toks.front().text) && !index.contains(toks.front().text))
                throw ParseError(ParseErrorKind::row_count, lineno, toks.front().column,
                                 std::string(rows_label) + " table has " + std::to_string(rows->size()) +
                                     " rows, expected " + std::to_string(n));
            if (toks.size() != n)
                throw ParseError(ParseErrorKind::row_length, lineno, toks.front().column,
                                 std::string(rows_label) + " row has " + std::to_string(toks.size()) +
                                     " entries, expected " + std::to_string(n));
            std::vector<std::string> row;
            for (const auto& t : toks) {
                check_known(t, lineno);
                row.emplace_back(t.text);
            }
            rows->push_back(std::move(row));
            if (rows->size() == n) rows = nullptr;
            if (last) break;
            continue;
        }

        const auto sec = directive(toks.front().text);
        if (!sec && rows_started_at != 0 && index.contains(toks.front().text))
            throw ParseError(ParseErrorKind::row_count, lineno, toks.front().column,
                             "extra row after the " + std::string(rows_label) + " table");
        if (!sec)
            throw ParseError(ParseErrorKind::syntax, lineno, toks.front().column,
                             "unknown directive '" + std::string(toks.front().text) + "'");
        if (seen_at[*sec] != 0)
            throw ParseError(ParseErrorKind::syntax, lineno, toks.front().column,
                             "duplicate '" + std::string(kSectionNames[*sec]) + "' section (first on line " +
                                 std::to_string(seen_at[*sec]) + ")");
        seen_at[*sec] = lineno;

        auto expect_args = [&](std::size_t count) {
            if (toks.size() != count + 1)
                throw ParseError(ParseErrorKind::syntax, lineno, toks.front().column,
                                 "'" + std::string(kSectionNames[*sec]) + "' takes " + std::to_string(count) +
                                     (count == 1 ? " argument" : " arguments"));
        };

        switch (*sec) {
            case kName:
                expect_args(1);
                doc.name = toks[1].text;
                break;
            case kElements:
                if (toks.size() < 2)
                    throw ParseError(ParseErrorKind::syntax, lineno, toks.front().column,
                                     "'elements' needs at least one element");
                for (std::size_t i = 1; i < toks.size(); ++i) {
                    if (index.contains(toks[i].text))
                        throw ParseError(ParseErrorKind::duplicate_element, lineno, toks[i].column,
                                         "element '" + std::string(toks[i].text) + "' declared twice");
                    index.emplace(toks[i].text, i - 1);
                    doc.element_names.emplace_back(toks[i].text);
                }
                break;
            case kZero:
                expect_args(1);
                doc.zero_name = toks[1].text;
                break;
            case kOne:
                expect_args(1);
                doc.one_name = toks[1].text;
                break;
            case kAdd:
            case kMul:
                expect_args(0);
                if (seen_at[kElements] == 0)
                    throw ParseError(ParseErrorKind::syntax, lineno, toks.front().column,
                                     "'elements' must precede the operation tables");
                rows = *sec == kAdd ? &doc.add_rows : &doc.mul_rows;
                rows_label = *sec == kAdd ? "add" : "mul";
                rows_started_at = lineno;
                break;
            default:
                break;
        }
        if (last) break;
    }

    if (rows != nullptr)
        throw ParseError(ParseErrorKind::row_count, rows_started_at, 0,
                         std::string(rows_label) + " table has " + std::to_string(rows->size()) +
                             " rows, expected " + std::to_string(doc.element_names.size()));
    for (std::size_t i = 0; i < kSectionCount; ++i)
        if (seen_at[i] == 0)
            throw ParseError(ParseErrorKind::missing_section, 0, 0,
                             "no '" + std::string(kSectionNames[i]) + "' section");

    if (!index.contains(doc.zero_name))
        throw ParseError(ParseErrorKind::unknown_token, seen_at[kZero], 0,
                         "zero '" + doc.zero_name + "' is not a declared element");
    if (!index.contains(doc.one_name))
        throw ParseError(ParseErrorKind::unknown_token, seen_at[kOne], 0,
                         "one '" + doc.one_name + "' is not a declared element");
    return doc;
}

namespace {

bool is_token(std::string_view s) {
    if (s.empty()) return false;
    return std::none_of(s.begin(), s.end(), [](char c) {
        const auto u = static_cast<unsigned char>(c);
        return c == '#' || c == ' ' || c == '\t' || u < 0x20 || u == 0x7F;
    });
}

}  // namespace

std::string serialize(const SemiringTable& s) {
    require_valid(s);
    std::string name = s.name;
    for (char& c : name)
        if (!is_token(std::string_view(&c, 1))) c = '_';
    if (name.empty()) name = "unnamed";
    for (const auto& e : s.elems)
        if (!is_token(e)) throw StructuralError("element name '" + e + "' is not a valid token");

    const std::size_t n = s.size();
    std::string out = "semiring " + name + "\nelements";
    for (const auto& e : s.elems) out += " " + e;
    out += "\nzero " + s.elems[s.zero] + "\none " + s.elems[s.one] + "\n";
    auto emit = [&](std::string_view label, const std::vector<Elem>& table) {
        out += label;
        out += '\n';
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (j) out += ' ';
                out += s.elems[table[i * n + j]];
            }
            out += '\n';
        }
    };
    emit("add:", s.add_table);
    emit("mul:", s.mul_table);
    return out;
}

SemiringTable to_table(const SemiringDocument& doc) {
    SemiringTable s;
    s.name = doc.name;
    s.elems = doc.element_names;
    std::unordered_map<std::string_view, Elem> index;
    for (std::size_t i = 0; i < s.elems.size(); ++i) index.emplace(s.elems[i], static_cast<Elem>(i));
    auto lookup = [&](const std::string& tok) {
        auto it = index.find(tok);
        if (it == index.end()) throw StructuralError("unknown element '" + tok + "'");
        return it->second;
    };
    s.zero = lookup(doc.zero_name);
    s.one = lookup(doc.one_name);
    auto flatten = [&](const std::vector<std::vector<std::string>>& rows) {
        std::vector<Elem> out;
        for (const auto& row : rows)
            for (const auto& tok : row) out.push_back(lookup(tok));
        return out;
    };
    s.add_table = flatten(doc.add_rows);
    s.mul_table = flatten(doc.mul_rows);
    return s;
}

}  // namespace ucg::dsl
