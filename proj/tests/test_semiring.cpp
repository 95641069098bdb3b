#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "ucg/errors.hpp"
#include "ucg/semiring.hpp"

using namespace ucg;

namespace {

Elem idx(const SemiringTable& s, std::string_view name) {
    auto e = s.find(name);
    REQUIRE(e.has_value());
    return *e;
}

bool witness_breaks(const SemiringTable& s, const AxiomViolation& v) {
    const auto& w = v.witness;
    switch (v.axiom) {
        case Axiom::add_associative: return s.plus(s.plus(w[0], w[1]), w[2]) != s.plus(w[0], s.plus(w[1], w[2]));
        case Axiom::add_commutative: return s.plus(w[0], w[1]) != s.plus(w[1], w[0]);
        case Axiom::add_identity: return s.plus(s.zero, w[0]) != w[0] || s.plus(w[0], s.zero) != w[0];
        case Axiom::mul_associative:
            return s.times(s.times(w[0], w[1]), w[2]) != s.times(w[0], s.times(w[1], w[2]));
        case Axiom::mul_identity: return s.times(s.one, w[0]) != w[0] || s.times(w[0], s.one) != w[0];
        case Axiom::left_distributive:
            return s.times(w[0], s.plus(w[1], w[2])) != s.plus(s.times(w[0], w[1]), s.times(w[0], w[2]));
        case Axiom::right_distributive:
            return s.times(s.plus(w[0], w[1]), w[2]) != s.plus(s.times(w[0], w[2]), s.times(w[1], w[2]));
        case Axiom::zero_annihilates: return s.times(w[0], w[1]) != s.zero;
    }
    return false;
}

}  // namespace

TEST_CASE("every catalogue entry satisfies the axioms") {
    for (const auto& s : builtin::catalogue()) {
        CAPTURE(s.name);
        CHECK(validate(s).empty());
        CHECK(oracle::satisfies_axioms(s));
    }
}

TEST_CASE("validate agrees with the reference axiom check on all small tables") {
    std::size_t valid = 0;
    for (const auto& s : oracle::small_candidates()) {
        CAPTURE(s.name);
        const auto v = validate(s);
        CHECK(v.empty() == oracle::satisfies_axioms(s));
        for (const auto& violation : v) CHECK(witness_breaks(s, violation));
        valid += v.empty();
    }
    CHECK(valid == oracle::small_semirings().size());
    CHECK(valid >= 3);
}

TEST_CASE("validate reports every violation") {
    SemiringTable s = builtin::trunc(2);
    s.mul_table[2 * 3 + 2] = 1;  // 2*2 = 1
    const auto v = validate(s);
    REQUIRE(!v.empty());
    bool left = false;
    for (const auto& x : v) {
        CHECK(witness_breaks(s, x));
        left = left || x.axiom == Axiom::left_distributive;
    }
    CHECK(left);
    CHECK(v.size() > 1);
    CHECK_THROWS_AS(require_valid(s), StructuralError);
    CHECK(v.front().describe(s).find("violates") != std::string::npos);
}

TEST_CASE("malformed tables are structural errors") {
    SemiringTable s = builtin::boolean();
    s.add_table.pop_back();
    CHECK_THROWS_AS(validate(s), StructuralError);
    s = builtin::boolean();
    s.mul_table[3] = 7;
    CHECK_THROWS_AS(validate(s), StructuralError);
    s = builtin::boolean();
    s.one = 2;
    CHECK_THROWS_AS(validate(s), StructuralError);
    CHECK_THROWS_AS(validate(SemiringTable{}), StructuralError);
}

TEST_CASE("profiles of the builtins") {
    const auto b = profile(builtin::boolean());
    CHECK(b.commutative);
    CHECK(b.entire);
    CHECK(b.antinegative);
    CHECK_FALSE(b.additively_cancellative);
    CHECK(b.units_closed_under_addition);
    CHECK(b.one_index_period == std::pair<std::uint64_t, std::uint64_t>{1, 2});

    const auto z = profile(builtin::zmod(5));
    CHECK(z.entire);
    CHECK_FALSE(z.antinegative);
    CHECK(z.additively_cancellative);
    CHECK_FALSE(z.units_closed_under_addition);
    CHECK(z.one_index_period == std::pair<std::uint64_t, std::uint64_t>{1, 6});

    for (unsigned r = 1; r <= 4; ++r) {
        const auto p = profile(builtin::example_bounds(r));
        CAPTURE(r);
        CHECK(p.one_index_period == std::pair<std::uint64_t, std::uint64_t>{r, r + 1});
        CHECK(p.antinegative);
        CHECK(p.entire);
        CHECK(p.units_closed_under_addition == (r == 1));
    }
    CHECK(profile(builtin::trunc(3)).one_index_period == std::pair<std::uint64_t, std::uint64_t>{3, 4});

    const auto x2 = profile(builtin::bool_x2());
    CHECK_FALSE(x2.entire);  // x*x = 0
    CHECK(x2.antinegative);
    CHECK_FALSE(profile(builtin::zmod(6)).entire);
}

TEST_CASE("units and inverses") {
    const auto z = builtin::zmod(5);
    const auto u = units(z);
    CHECK(u.members == std::vector<Elem>{1, 2, 3, 4});
    for (Elem a : u.members) CHECK(z.times(a, *u.inverse[a]) == z.one);
    CHECK(units(builtin::zmod(6)).members == std::vector<Elem>{1, 5});
    CHECK(units(builtin::boolean()).size() == 1);
    CHECK(units(builtin::example_bounds(2)).size() == 1);
    CHECK(units(builtin::bool_x2()).size() == 1);
    const auto t = builtin::zmod(1);
    CHECK(units(t).size() == 1);  // 0 = 1
}

TEST_CASE("unit set matches the brute-force definition and is a group") {
    auto all = builtin::catalogue();
    for (auto& s : oracle::small_semirings()) all.push_back(s);
    for (const auto& s : all) {
        CAPTURE(s.name);
        const auto u = units(s);
        CHECK(u.members == oracle::brute_units(s));
        for (Elem a : u.members) {
            CHECK(u.contains(*u.inverse[a]));
            for (Elem b : u.members) CHECK(u.contains(s.times(a, b)));
        }
    }
}

TEST_CASE("product semiring units are pairs of units") {
    const auto bs = builtin::catalogue();
    for (std::size_t i = 0; i < bs.size(); i += 3)
        for (std::size_t j = 1; j < bs.size(); j += 4) {
            if (bs[i].size() * bs[j].size() > 64) continue;
            const auto p = builtin::product(bs[i], bs[j]);
            CAPTURE(p.name);
            CHECK(validate(p).empty());
            CHECK(units(p).size() == units(bs[i]).size() * units(bs[j]).size());
            const auto pp = profile(p);
            CHECK(pp.commutative == (profile(bs[i]).commutative && profile(bs[j]).commutative));
        }
}

TEST_CASE("finite antinegative semirings with more than one element are never additively cancellative") {
    auto all = builtin::catalogue();
    for (auto& s : oracle::small_semirings()) all.push_back(s);
    for (const auto& s : all) {
        const auto p = profile(s);
        if (s.size() > 1 && p.antinegative) {
            CAPTURE(s.name);
            CHECK_FALSE(p.additively_cancellative);
        }
    }
}

TEST_CASE("example_bounds layout") {
    const auto s = builtin::example_bounds(2);
    CHECK(s.size() == 5);
    const Elem one = idx(s, "1"), two = idx(s, "2"), x = idx(s, "x"), x1 = idx(s, "1+x");
    CHECK(s.plus(x, x) == x);
    CHECK(s.times(x, x) == x);
    CHECK(s.plus(x1, one) == two);  // 2 + x collapses to r = 2
    CHECK(s.plus(two, x) == two);
    CHECK(s.times(x1, x1) == x1);  // 1 + 3x = 1 + x
    CHECK(s.plus(one, x) == x1);
}

TEST_CASE("bool_x2 arithmetic") {
    const auto s = builtin::bool_x2();
    const Elem x = idx(s, "x"), one = idx(s, "1"), ox = idx(s, "1+x");
    CHECK(s.times(x, x) == s.zero);
    CHECK(s.plus(one, x) == ox);
    CHECK(s.times(ox, ox) == ox);
    CHECK(s.plus(one, one) == one);
}

TEST_CASE("builtin spec grammar") {
    CHECK(builtin::from_spec("boolean") == builtin::boolean());
    CHECK(builtin::from_spec("trunc:4") == builtin::trunc(4));
    CHECK(builtin::from_spec("bounds:2") == builtin::example_bounds(2));
    CHECK(builtin::from_spec("boolx2") == builtin::bool_x2());
    CHECK(builtin::from_spec("zmod:7") == builtin::zmod(7));
    const auto p = builtin::from_spec("product:boolean,zmod:3");
    CHECK(p == builtin::product(builtin::boolean(), builtin::zmod(3)));
    CHECK(builtin::from_spec("product:product:boolean,boolean,trunc:2").size() == 12);
    for (const char* bad : {"", "bool", "trunc:0", "trunc:", "zmod:-1", "bounds:x", "product:boolean", "boolean,"})
        CHECK_THROWS_AS(builtin::from_spec(bad), InvalidParameter);
}

TEST_CASE("multiples") {
    const auto s = builtin::trunc(3);
    CHECK(multiple(s, 0, s.one) == s.zero);
    CHECK(multiple(s, 2, s.one) == 2);
    CHECK(multiple(s, 10, s.one) == 3);
}

TEST_CASE("patching 1+1 = 0 into the Boolean table gives GF(2), which is a semiring") {
    SemiringTable s = builtin::boolean();
    s.add_table[3] = 0;
    CHECK(validate(s).empty());
    CHECK(oracle::satisfies_axioms(s));
    CHECK(s.add_table == builtin::zmod(2).add_table);
    CHECK(s.mul_table == builtin::zmod(2).mul_table);
    CHECK_FALSE(profile(s).antinegative);
}
