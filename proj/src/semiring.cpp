#include "ucg/semiring.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "ucg/errors.hpp"

namespace ucg {

std::optional<Elem> SemiringTable::find(std::string_view name) const {
    for (std::size_t i = 0; i < elems.size(); ++i)
        if (elems[i] == name) return static_cast<Elem>(i);
    return std::nullopt;
}

std::string_view axiom_name(Axiom a) {
    switch (a) {
        case Axiom::add_associative: return "addition is associative";
        case Axiom::add_commutative: return "addition is commutative";
        case Axiom::add_identity: return "zero is the additive identity";
        case Axiom::mul_associative: return "multiplication is associative";
        case Axiom::mul_identity: return "one is the multiplicative identity";
        case Axiom::left_distributive: return "left distributivity";
        case Axiom::right_distributive: return "right distributivity";
        case Axiom::zero_annihilates: return "zero annihilates";
    }
    return "unknown axiom";
}

std::string AxiomViolation::describe(const SemiringTable& s) const {
    std::ostringstream os;
    os << "violates " << axiom_name(axiom) << " at (";
    for (std::size_t i = 0; i < witness.size(); ++i) {
        if (i) os << ", ";
        os << (witness[i] < s.size() ? s.elems[witness[i]] : std::to_string(witness[i]));
    }
    os << ")";
    return os.str();
}

namespace {

void check_structure(const SemiringTable& s) {
    const std::size_t n = s.size();
    if (n == 0) throw StructuralError("semiring must have at least one element");
    if (s.add_table.size() != n * n)
        throw StructuralError("addition table has " + std::to_string(s.add_table.size()) +
                              " entries, expected " + std::to_string(n * n));
    if (s.mul_table.size() != n * n)
        throw StructuralError("multiplication table has " + std::to_string(s.mul_table.size()) +
                              " entries, expected " + std::to_string(n * n));
    if (s.zero >= n) throw StructuralError("zero index out of range");
    if (s.one >= n) throw StructuralError("one index out of range");
    auto in_range = [n](Elem e) { return e < n; };
    if (!std::all_of(s.add_table.begin(), s.add_table.end(), in_range))
        throw StructuralError("addition table entry out of range");
    if (!std::all_of(s.mul_table.begin(), s.mul_table.end(), in_range))
        throw StructuralError("multiplication table entry out of range");
}

}  // namespace

std::vector<AxiomViolation> validate(const SemiringTable& s) {
    check_structure(s);
    const auto n = static_cast<Elem>(s.size());
    std::vector<AxiomViolation> out;
    auto report = [&out](Axiom a, std::vector<Elem> w) { out.push_back({a, std::move(w)}); };

    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            for (Elem c = 0; c < n; ++c)
                if (s.plus(s.plus(a, b), c) != s.plus(a, s.plus(b, c)))
                    report(Axiom::add_associative, {a, b, c});
    for (Elem a = 0; a < n; ++a)
        for (Elem b = a + 1; b < n; ++b)
            if (s.plus(a, b) != s.plus(b, a)) report(Axiom::add_commutative, {a, b});
    for (Elem a = 0; a < n; ++a)
        if (s.plus(s.zero, a) != a || s.plus(a, s.zero) != a) report(Axiom::add_identity, {a});

    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            for (Elem c = 0; c < n; ++c)
                if (s.times(s.times(a, b), c) != s.times(a, s.times(b, c)))
                    report(Axiom::mul_associative, {a, b, c});
    for (Elem a = 0; a < n; ++a)
        if (s.times(s.one, a) != a || s.times(a, s.one) != a) report(Axiom::mul_identity, {a});

    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            for (Elem c = 0; c < n; ++c) {
                if (s.times(a, s.plus(b, c)) != s.plus(s.times(a, b), s.times(a, c)))
                    report(Axiom::left_distributive, {a, b, c});
                if (s.times(s.plus(a, b), c) != s.plus(s.times(a, c), s.times(b, c)))
                    report(Axiom::right_distributive, {a, b, c});
            }

    for (Elem a = 0; a < n; ++a) {
        if (s.times(s.zero, a) != s.zero) report(Axiom::zero_annihilates, {s.zero, a});
        if (a != s.zero && s.times(a, s.zero) != s.zero)
            report(Axiom::zero_annihilates, {a, s.zero});
    }
    return out;
}

void require_valid(const SemiringTable& s) {
    auto v = validate(s);
    if (!v.empty())
        throw StructuralError("semiring '" + s.name + "' " + v.front().describe(s));
}

Elem multiple(const SemiringTable& s, std::uint64_t c, Elem a) {
    Elem acc = s.zero;
    for (std::uint64_t i = 0; i < c; ++i) acc = s.plus(acc, a);
    return acc;
}

UnitSet units(const SemiringTable& s) {
    const auto n = static_cast<Elem>(s.size());
    UnitSet u;
    u.inverse.assign(n, std::nullopt);
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            if (s.times(a, b) == s.one && s.times(b, a) == s.one) {
                u.inverse[a] = b;
                u.members.push_back(a);
                break;
            }
    return u;
}

SemiringProfile profile(const SemiringTable& s) {
    const auto n = static_cast<Elem>(s.size());
    SemiringProfile p;
    p.commutative = p.entire = p.antinegative = p.additively_cancellative = true;
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) {
            if (s.times(a, b) != s.times(b, a)) p.commutative = false;
            if (s.times(a, b) == s.zero && a != s.zero && b != s.zero) p.entire = false;
            if (s.plus(a, b) == s.zero && (a != s.zero || b != s.zero)) p.antinegative = false;
        }
    for (Elem x = 0; x < n && p.additively_cancellative; ++x) {
        std::vector<bool> seen(n, false);
        for (Elem y = 0; y < n; ++y) {
            Elem t = s.plus(x, y);
            if (seen[t]) {
                p.additively_cancellative = false;
                break;
            }
            seen[t] = true;
        }
    }

    const UnitSet us = units(s);
    p.units_closed_under_addition = true;
    for (Elem u : us.members)
        for (Elem v : us.members)
            if (!us.contains(s.plus(u, v))) p.units_closed_under_addition = false;

    // i*1 for i = 1, 2, ...; the first repeated value fixes (m, n).
    std::vector<std::uint64_t> first_seen(n, 0);
    Elem cur = s.one;
    for (std::uint64_t i = 1;; ++i) {
        if (first_seen[cur] != 0) {
            p.one_index_period = {first_seen[cur], i};
            break;
        }
        first_seen[cur] = i;
        cur = s.plus(cur, s.one);
    }
    return p;
}

namespace builtin {

namespace {

SemiringTable from_ops(std::string name, std::vector<std::string> elems, Elem zero, Elem one,
                       auto&& add, auto&& mul) {
    SemiringTable s;
    s.name = std::move(name);
    s.elems = std::move(elems);
    s.zero = zero;
    s.one = one;
    const auto n = static_cast<Elem>(s.elems.size());
    s.add_table.resize(std::size_t{n} * n);
    s.mul_table.resize(std::size_t{n} * n);
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) {
            s.add_table[a * n + b] = add(a, b);
            s.mul_table[a * n + b] = mul(a, b);
        }
    return s;
}

std::vector<std::string> numerals(unsigned upto) {
    std::vector<std::string> out;
    for (unsigned i = 0; i <= upto; ++i) out.push_back(std::to_string(i));
    return out;
}

}  // namespace

SemiringTable boolean() {
    return from_ops(
        "boolean", {"0", "1"}, 0, 1, [](Elem a, Elem b) { return a | b; },
        [](Elem a, Elem b) { return a & b; });
}

SemiringTable trunc(unsigned n) {
    if (n == 0) throw InvalidParameter("trunc: n must be positive");
    return from_ops(
        "trunc:" + std::to_string(n), numerals(n), 0, 1,
        [n](Elem a, Elem b) { return std::min<Elem>(a + b, n); },
        [n](Elem a, Elem b) { return static_cast<Elem>(std::min<std::uint64_t>(std::uint64_t{a} * b, n)); });
}

SemiringTable example_bounds(unsigned r) {
    if (r == 0) throw InvalidParameter("bounds: r must be positive");
    // An element is c + f*x with c in 0..r, f in {0,1}; any c >= r collapses
    // to the absorbing element r. Indices: 0..r for plain c, then r+1+c for c+x.
    struct Parts {
        std::uint64_t c;
        bool x;
    };
    auto decode = [r](Elem e) { return e <= r ? Parts{e, false} : Parts{e - r - 1, true}; };
    auto encode = [r](std::uint64_t c, bool x) -> Elem {
        if (c >= r) return r;
        return x ? static_cast<Elem>(r + 1 + c) : static_cast<Elem>(c);
    };
    std::vector<std::string> names = numerals(r);
    names.emplace_back("x");
    for (unsigned c = 1; c < r; ++c) names.push_back(std::to_string(c) + "+x");
    return from_ops(
        "bounds:" + std::to_string(r), std::move(names), 0, 1,
        [=](Elem a, Elem b) {
            auto p = decode(a), q = decode(b);
            return encode(p.c + q.c, p.x || q.x);
        },
        [=](Elem a, Elem b) {
            auto p = decode(a), q = decode(b);
            // (c + f x)(d + g x) = cd + (cg + df + fg) x, using x*x = x and x+x = x
            bool x = (p.c * q.x + q.c * p.x + (p.x && q.x)) > 0;
            return encode(p.c * q.c, x);
        });
}

SemiringTable bool_x2() {
    // Index = a + 2b for a + b x with a, b in {0,1}.
    return from_ops(
        "boolx2", {"0", "1", "x", "1+x"}, 0, 1, [](Elem p, Elem q) { return p | q; },
        [](Elem p, Elem q) {
            Elem a = p & 1, b = p >> 1, c = q & 1, d = q >> 1;
            return (a & c) | (((a & d) | (b & c)) << 1);
        });
}

SemiringTable zmod(unsigned n) {
    if (n == 0) throw InvalidParameter("zmod: n must be positive");
    return from_ops(
        "zmod:" + std::to_string(n), numerals(n - 1), 0, n == 1 ? 0 : 1,
        [n](Elem a, Elem b) { return (a + b) % n; },
        [n](Elem a, Elem b) { return static_cast<Elem>(std::uint64_t{a} * b % n); });
}

SemiringTable product(const SemiringTable& s, const SemiringTable& t) {
    const auto m = static_cast<Elem>(t.size());
    std::vector<std::string> names;
    for (const auto& a : s.elems)
        for (const auto& b : t.elems) names.push_back("(" + a + "," + b + ")");
    return from_ops(
        "product:" + s.name + "," + t.name, std::move(names), s.zero * m + t.zero,
        s.one * m + t.one,
        [&](Elem p, Elem q) { return s.plus(p / m, q / m) * m + t.plus(p % m, q % m); },
        [&](Elem p, Elem q) { return s.times(p / m, q / m) * m + t.times(p % m, q % m); });
}

namespace {

unsigned parse_param(std::string_view& rest, std::string_view what) {
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
    if (ec != std::errc{} || ptr == rest.data())
        throw InvalidParameter(std::string(what) + ": expected a positive integer");
    rest.remove_prefix(static_cast<std::size_t>(ptr - rest.data()));
    return value;
}

bool consume(std::string_view& rest, std::string_view prefix) {
    if (!rest.starts_with(prefix)) return false;
    rest.remove_prefix(prefix.size());
    return true;
}

SemiringTable parse_spec(std::string_view& rest) {
    if (consume(rest, "boolean")) return boolean();
    if (consume(rest, "boolx2")) return bool_x2();
    if (consume(rest, "trunc:")) return trunc(parse_param(rest, "trunc"));
    if (consume(rest, "bounds:")) return example_bounds(parse_param(rest, "bounds"));
    if (consume(rest, "zmod:")) return zmod(parse_param(rest, "zmod"));
    if (consume(rest, "product:")) {
        SemiringTable left = parse_spec(rest);
        if (!consume(rest, ","))
            throw InvalidParameter("product: expected ',' between the two factors");
        SemiringTable right = parse_spec(rest);
        return product(left, right);
    }
    throw InvalidParameter("unknown builtin spec '" + std::string(rest) + "'");
}

}  // namespace

SemiringTable from_spec(std::string_view spec) {
    std::string_view rest = spec;
    SemiringTable s = parse_spec(rest);
    if (!rest.empty())
        throw InvalidParameter("trailing characters in builtin spec: '" + std::string(rest) + "'");
    return s;
}

std::vector<SemiringTable> catalogue() {
    std::vector<SemiringTable> out;
    out.push_back(boolean());
    out.push_back(bool_x2());
    for (unsigned n = 1; n <= 5; ++n) out.push_back(trunc(n));
    for (unsigned r = 1; r <= 4; ++r) out.push_back(example_bounds(r));
    for (unsigned n = 1; n <= 7; ++n) out.push_back(zmod(n));
    out.push_back(product(boolean(), boolean()));
    out.push_back(product(boolean(), zmod(3)));
    out.push_back(product(trunc(2), example_bounds(1)));
    return out;
}

}  // namespace builtin

}  // namespace ucg
