#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "ucg/errors.hpp"
#include "ucg/matrix.hpp"

using namespace ucg;

namespace {

std::vector<VertexId> ids(const MatrixSemiring& ms, const std::vector<Matrix>& v) {
    std::vector<VertexId> out;
    for (const auto& m : v) out.push_back(ms.encode(m));
    return out;
}

std::uint64_t factorial(std::size_t k) {
    std::uint64_t f = 1;
    for (std::size_t i = 2; i <= k; ++i) f *= i;
    return f;
}

std::uint64_t power(std::uint64_t b, std::size_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

}  // namespace

TEST_CASE("vertex ids are base-|S| row-major with entry (0,0) most significant") {
    const auto s = builtin::example_bounds(1);  // 3 elements
    const MatrixSemiring ms(s, 2);
    CHECK(ms.cardinality() == 81);
    Matrix m = ms.zero();
    m.entries = {1, 0, 0, 2};
    CHECK(ms.encode(m) == 1 * 27 + 2);
    for (VertexId id = 0; id < 81; ++id) {
        CHECK(ms.encode(ms.decode(id)) == id);
        CHECK(ms.decode(id).entries == oracle::decode(id, 3, 2));
    }
    CHECK(ms.label(m) == "[[1,0],[0,x]]");
}

TEST_CASE("permutation matrices put a one at (i, sigma(i))") {
    const auto s = builtin::boolean();
    const MatrixSemiring ms(s, 3);
    const auto sigma = cycle_power(3, 1);
    CHECK(sigma == std::vector<std::size_t>{1, 2, 0});
    CHECK(cycle_power(3, 3) == std::vector<std::size_t>{0, 1, 2});
    const Matrix p = ms.perm_matrix(sigma);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(p.at(i, j) == (j == sigma[i] ? s.one : s.zero));
    CHECK(ms.mul(p, ms.transpose(p)) == ms.identity());
    Matrix sum = ms.zero();
    for (std::size_t c = 1; c <= 3; ++c) sum = ms.add(sum, ms.perm_matrix(cycle_power(3, c)));
    CHECK(sum == ms.constant(s.one));
    CHECK(permutations(3).size() == 6);
    CHECK(permutations(3).front() == std::vector<std::size_t>{0, 1, 2});
    const std::vector<std::size_t> bad{0, 0, 1};
    CHECK_THROWS_AS(ms.perm_matrix(bad), std::invalid_argument);
}

TEST_CASE("M_k(S) satisfies the semiring axioms on sampled triples") {
    std::mt19937_64 rng(20261019);
    auto bases = builtin::catalogue();
    for (auto& s : oracle::small_semirings()) bases.push_back(s);
    for (const auto& s : bases) {
        for (std::size_t k : {2, 3}) {
            const MatrixSemiring ms(s, k);
            std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(s.size() - 1));
            auto random_matrix = [&] {
                Matrix m = ms.zero();
                for (auto& e : m.entries) e = pick(rng);
                return m;
            };
            CAPTURE(s.name);
            CAPTURE(k);
            for (int t = 0; t < 20; ++t) {
                const Matrix a = random_matrix(), b = random_matrix(), c = random_matrix();
                CHECK(ms.add(ms.add(a, b), c) == ms.add(a, ms.add(b, c)));
                CHECK(ms.add(a, b) == ms.add(b, a));
                CHECK(ms.add(a, ms.zero()) == a);
                CHECK(ms.mul(ms.mul(a, b), c) == ms.mul(a, ms.mul(b, c)));
                CHECK(ms.mul(a, ms.identity()) == a);
                CHECK(ms.mul(ms.identity(), a) == a);
                CHECK(ms.mul(a, ms.add(b, c)) == ms.add(ms.mul(a, b), ms.mul(a, c)));
                CHECK(ms.mul(ms.add(a, b), c) == ms.add(ms.mul(a, c), ms.mul(b, c)));
                CHECK(ms.mul(a, ms.zero()) == ms.zero());
                CHECK(ms.mul(a, b).entries == oracle::multiply(s, k, a.entries, b.entries));
            }
        }
    }
}

TEST_CASE("orthogonal decompositions of one") {
    const auto b = builtin::boolean();
    CHECK(orth_decompositions(b, 1).size() == 1);
    CHECK(orth_decompositions(b, 2).empty());
    const auto bb = builtin::product(b, b);
    const auto two = orth_decompositions(bb, 2);
    REQUIRE(two.size() == 1);  // {(1,0), (0,1)}
    CHECK(two.front().parts.size() == 2);
    const auto z6 = orth_decompositions(builtin::zmod(6), 2);
    REQUIRE(z6.size() == 1);
    CHECK(z6.front().parts == std::vector<Elem>{3, 4});
    CHECK(orth_decompositions(builtin::zmod(1), 1).size() == 1);
}

TEST_CASE("decomposition units equal brute-force units") {
    struct Case {
        SemiringTable s;
        std::size_t k;
    };
    std::vector<Case> cases{{builtin::boolean(), 2},          {builtin::boolean(), 3},
                            {builtin::example_bounds(1), 2}, {builtin::example_bounds(2), 2},
                            {builtin::trunc(3), 2},          {builtin::bool_x2(), 2},
                            {builtin::product(builtin::boolean(), builtin::boolean()), 2},
                            {builtin::zmod(1), 3}};
    for (const auto& s : oracle::small_semirings()) {
        const auto p = profile(s);
        if (p.commutative && p.antinegative) cases.push_back({s, 2});
    }
    for (const auto& c : cases) {
        CAPTURE(c.s.name);
        CAPTURE(c.k);
        const MatrixSemiring ms(c.s, c.k);
        const auto t1 = matrix_units_theorem1(c.s, c.k);
        const auto bf = matrix_units_brute_force(c.s, c.k);
        CHECK(t1.provenance == UnitProvenance::theorem1);
        CHECK(ids(ms, t1.elements) == ids(ms, bf.elements));
        CHECK(ids(ms, t1.elements) == oracle::brute_matrix_units(c.s, c.k));
        for (std::size_t i = 0; i < t1.size(); ++i) {
            CHECK(ms.mul(t1.elements[i], t1.inverses[i]) == ms.identity());
            CHECK(ms.mul(t1.inverses[i], t1.elements[i]) == ms.identity());
        }
        const auto p = profile(c.s);
        if (p.entire && c.s.size() > 1)
            CHECK(t1.size() == factorial(c.k) * power(units(c.s).size(), c.k));
    }
}

TEST_CASE("units of M_2(Z_5) by brute force") {
    const auto s = builtin::zmod(5);
    CHECK_THROWS_AS(matrix_units_theorem1(s, 2), HypothesisViolation);
    const auto u = matrix_units(s, 2);
    CHECK(u.provenance == UnitProvenance::brute_force);
    CHECK(u.size() == 480);  // |GL_2(F_5)| = (25-1)(25-5)
    const MatrixSemiring ms(s, 2);
    CHECK(ids(ms, u.elements) == oracle::brute_matrix_units(s, 2));
}

TEST_CASE("unit group is closed under products and inverses") {
    for (const auto& s : {builtin::boolean(), builtin::example_bounds(1), builtin::zmod(3)}) {
        const MatrixSemiring ms(s, 2);
        const auto u = matrix_units(s, 2);
        std::set<VertexId> members;
        for (const auto& m : u.elements) members.insert(ms.encode(m));
        for (const auto& a : u.elements) {
            for (const auto& b : u.elements) CHECK(members.contains(ms.encode(ms.mul(a, b))));
        }
        for (const auto& inv : u.inverses) CHECK(members.contains(ms.encode(inv)));
    }
}

TEST_CASE("is_invertible") {
    const auto s = builtin::boolean();
    const MatrixSemiring ms(s, 2);
    const Matrix p = ms.perm_matrix(cycle_power(2, 1));
    const auto inv = is_invertible(s, p);
    REQUIRE(inv.has_value());
    CHECK(*inv == ms.transpose(p));
    CHECK_FALSE(is_invertible(s, ms.constant(s.one)).has_value());
    CHECK_FALSE(is_invertible(s, ms.zero()).has_value());
}

TEST_CASE("guards and dimension checks") {
    CHECK_THROWS_AS(matrix_units_brute_force(builtin::zmod(7), 3), GuardExceeded);
    CHECK_THROWS_AS(MatrixSemiring(builtin::zmod(7), 6).cardinality(), GuardExceeded);
    CHECK_THROWS_AS(MatrixSemiring(builtin::boolean(), 0), std::invalid_argument);
    const MatrixSemiring m2(builtin::boolean(), 2);
    const MatrixSemiring m3(builtin::boolean(), 3);
    CHECK_THROWS_AS(m2.add(m2.zero(), m3.zero()), std::invalid_argument);
}
