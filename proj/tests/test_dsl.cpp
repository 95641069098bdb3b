#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "ucg/dsl.hpp"
#include "ucg/errors.hpp"

using namespace ucg;
using dsl::ParseErrorKind;

namespace {

const char* kBoolean = R"(# two-element Boolean semiring
semiring B
elements 0 1
zero 0
one 1
add:
0 1
1 1
mul:
0 0
0 1
)";

dsl::ParseError parse_error(std::string_view text) {
    try {
        dsl::parse(text);
    } catch (const dsl::ParseError& e) {
        return e;
    }
    FAIL("document parsed without error");
    return dsl::ParseError(ParseErrorKind::syntax, 0, 0, "unreachable");
}

}  // namespace

TEST_CASE("parse a well-formed document") {
    const auto doc = dsl::parse(kBoolean);
    CHECK(doc.name == "B");
    CHECK(doc.element_names == std::vector<std::string>{"0", "1"});
    CHECK(doc.add_rows.size() == 2);
    const auto s = dsl::to_table(doc);
    CHECK(s.add_table == builtin::boolean().add_table);
    CHECK(s.mul_table == builtin::boolean().mul_table);
    CHECK(validate(s).empty());
}

TEST_CASE("comments, blank lines, CRLF and extra spaces are accepted") {
    std::string text = "semiring  B   # name\r\n\r\nelements 0\t1\r\nzero 0\r\none 1\r\nadd:\r\n 0 1 \r\n1 1\r\n"
                       "# between tables\r\nmul:\r\n0 0\r\n0 1\r\n";
    const auto s = dsl::to_table(dsl::parse(text));
    CHECK(s.add_table == builtin::boolean().add_table);
    CHECK(s.mul_table == builtin::boolean().mul_table);
}

TEST_CASE("to_table . parse . serialize is the identity on every builtin") {
    auto all = builtin::catalogue();
    all.push_back(builtin::product(builtin::bool_x2(), builtin::zmod(2)));
    for (const auto& s : all) {
        CAPTURE(s.name);
        const std::string text = dsl::serialize(s);
        const auto back = dsl::to_table(dsl::parse(text));
        CHECK(back.elems == s.elems);
        CHECK(back.zero == s.zero);
        CHECK(back.one == s.one);
        CHECK(back.add_table == s.add_table);
        CHECK(back.mul_table == s.mul_table);
        CHECK(dsl::serialize(back) == text);  // fixpoint
    }
}

TEST_CASE("round trip over every valid table of order at most 3") {
    for (const auto& s : oracle::small_semirings()) {
        CAPTURE(s.name);
        const auto back = dsl::to_table(dsl::parse(dsl::serialize(s)));
        CHECK(back.add_table == s.add_table);
        CHECK(back.mul_table == s.mul_table);
    }
}

TEST_CASE("serialize refuses invalid tables") {
    SemiringTable s = builtin::trunc(2);
    s.mul_table[8] = 1;
    CHECK_THROWS_AS(dsl::serialize(s), StructuralError);
}

TEST_CASE("lexical errors") {
    auto e = parse_error("semiring B\nelements 0 \x01 1\n");
    CHECK(e.kind() == ParseErrorKind::lexical);
    CHECK(e.line() == 2);
    CHECK(e.column() == 12);
    e = parse_error("semiring \xff\n");
    CHECK(e.kind() == ParseErrorKind::lexical);
    CHECK(e.line() == 1);
}

TEST_CASE("syntax errors") {
    auto e = parse_error("semiring B\nfrobnicate 1\n");
    CHECK(e.kind() == ParseErrorKind::syntax);
    CHECK(e.line() == 2);
    e = parse_error("semiring B\nsemiring C\n");
    CHECK(e.kind() == ParseErrorKind::syntax);
    CHECK(e.line() == 2);
    e = parse_error("semiring B\nadd:\n0 1\n");
    CHECK(e.kind() == ParseErrorKind::syntax);  // tables before elements
    e = parse_error("semiring\n");
    CHECK(e.kind() == ParseErrorKind::syntax);
}

TEST_CASE("unknown tokens") {
    std::string text = kBoolean;
    text.replace(text.find("1 1\nmul"), 3, "1 2");
    auto e = parse_error(text);
    CHECK(e.kind() == ParseErrorKind::unknown_token);
    CHECK(e.line() == 8);
    CHECK(e.column() == 3);
    e = parse_error("semiring B\nelements 0 1\nzero z\none 1\nadd:\n0 1\n1 1\nmul:\n0 0\n0 1\n");
    CHECK(e.kind() == ParseErrorKind::unknown_token);
    CHECK(e.line() == 3);
}

TEST_CASE("duplicate elements") {
    auto e = parse_error("semiring B\nelements 0 1 0\n");
    CHECK(e.kind() == ParseErrorKind::duplicate_element);
    CHECK(e.line() == 2);
    CHECK(e.column() == 14);
}

TEST_CASE("missing sections") {
    auto e = parse_error("semiring B\nelements 0 1\nzero 0\none 1\nadd:\n0 1\n1 1\n");
    CHECK(e.kind() == ParseErrorKind::missing_section);
    e = parse_error("elements 0 1\nzero 0\none 1\nadd:\n0 1\n1 1\nmul:\n0 0\n0 1\n");
    CHECK(e.kind() == ParseErrorKind::missing_section);
}

TEST_CASE("row shape errors") {
    auto e = parse_error("semiring B\nelements 0 1\nzero 0\none 1\nadd:\n0 1 1\n1 1\nmul:\n0 0\n0 1\n");
    CHECK(e.kind() == ParseErrorKind::row_length);
    CHECK(e.line() == 6);
    e = parse_error("semiring B\nelements 0 1\nzero 0\none 1\nadd:\n0 1\nmul:\n0 0\n0 1\n");
    CHECK(e.kind() == ParseErrorKind::row_count);
    e = parse_error("semiring B\nelements 0 1\nzero 0\none 1\nadd:\n0 1\n1 1\nmul:\n0 0\n0 1\n1 1\n");
    CHECK(e.kind() == ParseErrorKind::row_count);
}

TEST_CASE("error messages carry position and kind") {
    const auto e = parse_error("semiring B\nelements 0 1 0\n");
    const std::string what = e.what();
    CHECK(what.find("line 2") != std::string::npos);
    CHECK(what.find(std::string(dsl::kind_name(ParseErrorKind::duplicate_element))) != std::string::npos);
}

TEST_CASE("parsed but invalid semirings are caught by validate") {
    const char* broken = "semiring broken\nelements 0 1 2\nzero 0\none 1\nadd:\n0 1 2\n1 2 2\n2 2 2\nmul:\n"
                         "0 0 0\n0 1 2\n0 2 1\n";
    const auto s = dsl::to_table(dsl::parse(broken));
    const auto v = validate(s);
    CHECK_FALSE(v.empty());
}
