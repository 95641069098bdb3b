#include "ucg/theorems.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "ucg/errors.hpp"
#include "ucg/export.hpp"

namespace ucg {

std::string_view to_string(HypothesisStatus s) {
    switch (s) {
        case HypothesisStatus::applies: return "applies";
        case HypothesisStatus::fails: return "fails";
        case HypothesisStatus::vacuous: return "vacuous";
    }
    return "?";
}

std::string_view to_string(Relation r) {
    switch (r) {
        case Relation::le: return "<=";
        case Relation::ge: return ">=";
        case Relation::eq: return "==";
    }
    return "?";
}

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::skipped: return "skipped";
    }
    return "?";
}

std::string_view to_string(WitnessKind k) {
    switch (k) {
        case WitnessKind::independent_set: return "independent_set";
        case WitnessKind::clique: return "clique";
        case WitnessKind::path: return "path";
    }
    return "?";
}

bool verify(WitnessSet& w, const CayleyGraph& g) {
    std::vector<Vertex> vs;
    bool in_range = !w.members.empty() || w.kind != WitnessKind::path;
    for (VertexId id : w.members) {
        if (id >= g.vcount()) in_range = false;
        vs.push_back(static_cast<Vertex>(id));
    }
    if (!in_range) return w.verified = false;
    switch (w.kind) {
        case WitnessKind::independent_set: w.verified = is_independent(g, vs); break;
        case WitnessKind::clique: w.verified = is_clique(g, vs); break;
        case WitnessKind::path: w.verified = is_path(g, vs); break;
    }
    return w.verified;
}

namespace {

Hypothesis applies(std::string reason = {}) { return {HypothesisStatus::applies, std::move(reason)}; }
Hypothesis fails(std::string reason) { return {HypothesisStatus::fails, std::move(reason)}; }
Hypothesis vacuous(std::string reason) { return {HypothesisStatus::vacuous, std::move(reason)}; }

bool holds(Relation r, ExtNat computed, ExtNat bound) {
    switch (r) {
        case Relation::le: return computed <= bound;
        case Relation::ge: return computed >= bound;
        case Relation::eq: return computed == bound;
    }
    return false;
}

Clause clause(std::string id, Hypothesis h, Relation rel, std::string expr, ExtNat bound, ExtNat computed,
              std::string detail = {}) {
    Clause c{std::move(id), std::move(h), rel, std::move(expr), bound, computed, Verdict::skipped, std::move(detail)};
    if (c.hypothesis.status == HypothesisStatus::applies)
        c.verdict = holds(rel, computed, bound) ? Verdict::pass : Verdict::fail;
    return c;
}

void finalize(CheckReport& r) {
    if (r.clauses.empty()) throw std::logic_error("report without clauses");
    const Clause& head = r.clauses.front();
    r.hypothesis = head.hypothesis;
    r.bound_expr = head.bound_expr;
    r.bound_value = head.bound_value;
    r.computed_value = head.computed_value;
    const bool any_fail = std::any_of(r.clauses.begin(), r.clauses.end(),
                                      [](const Clause& c) { return c.verdict == Verdict::fail; });
    if (any_fail) r.verdict = Verdict::fail;
    else if (head.verdict == Verdict::pass) r.verdict = Verdict::pass;
    else r.verdict = Verdict::skipped;
}

// A failed witness verification always fails the report.
void add_witness(CheckReport& r, WitnessSet w, const CayleyGraph& g, const std::string& clause_id) {
    if (!verify(w, g)) {
        r.clauses.push_back(clause(clause_id, applies("witness re-verified against adjacency"), Relation::eq,
                                   "witness property holds", ExtNat(1), ExtNat(0), w.note));
    }
    r.witnesses.push_back(std::move(w));
}

ExtNat to_ext(const BigInt& v) {
    if (v < 0) return ExtNat(0);
    return ExtNat(static_cast<std::uint64_t>(v));
}

std::string str(const BigInt& v) { return v.str(); }

std::string period_text(const SemiringProfile& p) {
    return "(m, n) = (" + std::to_string(p.one_index_period.first) + ", " +
           std::to_string(p.one_index_period.second) + ")";
}

}  // namespace

Hypothesis cancellative_antiring_hypothesis(const SemiringTable& s, const SemiringProfile& p) {
    if (s.size() == 1) return applies("one-element semiring: entire, antinegative and additively cancellative");
    if (!p.antinegative) return fails("S is not antinegative");
    if (p.additively_cancellative)
        throw std::logic_error("finite antinegative additively cancellative semiring with more than one element");
    return vacuous("S is antinegative with |S| > 1, so not additively cancellative; no finite nontrivial "
                   "semiring satisfies this hypothesis");
}

Elem gamma_element(const SemiringTable& s) {
    const SemiringProfile p = profile(s);
    const UnitSet us = units(s);
    Elem gamma = s.zero;
    for (Elem u : us.members) gamma = s.plus(gamma, multiple(s, p.one_index_period.second - 1, u));
    return gamma;
}

CheckReport check_diam_base(const SemiringTable& s, const CheckOptions&) {
    CheckReport r;
    r.theorem = "diamS";
    const CayleyGraph g = base_graph(s);
    const SemiringProfile p = profile(s);
    const UnitSet us = units(s);
    const bool connected = is_connected(g);
    const Eccentric ecc = diameter_witness(g);
    const std::uint64_t n = p.one_index_period.second;

    const Hypothesis disconnected = fails("Gamma(S) is disconnected");
    Clause c1 = clause("diamS.1", connected ? applies("m*1 = n*1 with " + period_text(p)) : disconnected,
                       Relation::le, "2(n-1)|S*|", ExtNat(2 * (n - 1) * us.size()), ecc.length);
    Clause c2 = clause("diamS.2",
                       !connected                      ? disconnected
                       : p.units_closed_under_addition ? applies("S* is closed under addition")
                                                       : fails("S* is not closed under addition"),
                       Relation::le, "2", ExtNat(2), ecc.length);

    // A path from x and from y to x + gamma = y + gamma, for every x, y.
    const Elem gamma = gamma_element(s);
    std::set<Elem> shifted;
    for (Elem x = 0; x < s.size(); ++x) shifted.insert(s.plus(x, gamma));
    // For rings gamma can be 0 (zmod:5), so the common target only exists for antirings.
    const Hypothesis target_h = !connected        ? disconnected
                                : p.antinegative ? applies("connected antiring, " + period_text(p))
                                                 : fails("S is not antinegative");
    Clause c3 = clause("diamS.common_target", target_h, Relation::eq, "|{x + gamma}| = 1", ExtNat(1),
                       ExtNat(shifted.size()),
                       "gamma = " + s.elems[gamma] + ", " + std::to_string(shifted.size()) + " distinct x + gamma");

    Clause head = c2.hypothesis.status == HypothesisStatus::applies && c2.bound_value <= c1.bound_value ? c2 : c1;
    head.id = "diamS";
    if (connected) head.hypothesis = applies("Gamma(S) is connected");
    r.clauses = {head, c1, c2, c3};
    if (connected && ecc.length.is_finite()) {
        WitnessSet w{WitnessKind::path, {}, "shortest path between a diametral pair"};
        for (Vertex v : shortest_path(g, ecc.from, ecc.to)) w.members.push_back(v);
        add_witness(r, std::move(w), g, "diamS.witness");
    }
    finalize(r);
    return r;
}

WitnessSet diam_path_witness(const SemiringTable& s, std::size_t k, const Matrix& a, const Matrix& b) {
    const MatrixSemiring ms(s, k);
    WitnessSet w{WitnessKind::path, {}, {}};
    if (a == b) {
        w.members = {ms.encode(a)};
        w.note = "A = B";
        return w;
    }
    if (!is_connected(base_graph(s))) throw HypothesisViolation("Gamma(S) is disconnected");
    const SemiringProfile p = profile(s);
    const UnitSet us = units(s);

    std::vector<Matrix> forward{a}, backward{b};
    auto step = [&](std::vector<Matrix>& walk, const Matrix& delta) {
        Matrix next = ms.add(walk.back(), delta);
        if (next != walk.back()) walk.push_back(std::move(next));
    };

    if (p.units_closed_under_addition) {
        std::vector<Elem> u(k * k), v(k * k);
        for (std::size_t e = 0; e < k * k; ++e) {
            bool found = false;
            for (Elem x : us.members) {
                for (Elem y : us.members)
                    if (s.plus(a.entries[e], x) == s.plus(b.entries[e], y)) {
                        u[e] = x;
                        v[e] = y;
                        found = true;
                        break;
                    }
                if (found) break;
            }
            if (!found)
                throw HypothesisViolation("no units u, v with a + u = b + v at entry " + std::to_string(e));
        }
        for (std::size_t c = 1; c <= k; ++c) {
            const auto sigma = cycle_power(k, c);
            const Matrix perm = ms.perm_matrix(sigma);
            std::vector<Elem> du(k), dv(k);
            for (std::size_t i = 0; i < k; ++i) {
                du[i] = u[i * k + sigma[i]];
                dv[i] = v[i * k + sigma[i]];
            }
            step(forward, ms.mul(ms.diag(du), perm));
            step(backward, ms.mul(ms.diag(dv), perm));
        }
        w.note = "per-entry unit corrections along powers of the full cycle";
    } else {
        const Elem gamma = gamma_element(s);
        for (std::size_t e = 0; e < k * k; ++e)
            if (s.plus(a.entries[e], gamma) != s.plus(b.entries[e], gamma))
                throw HypothesisViolation("a + gamma differs from b + gamma at entry " + std::to_string(e) +
                                          " (gamma = " + s.elems[gamma] + ")");
        std::vector<Elem> steps;
        for (Elem unit : us.members)
            for (std::uint64_t t = 1; t < p.one_index_period.second; ++t) steps.push_back(unit);
        for (std::size_t c = 1; c <= k; ++c) {
            const Matrix perm = ms.perm_matrix(cycle_power(k, c));
            for (Elem unit : steps) {
                const Matrix delta = ms.scale(unit, perm);
                step(forward, delta);
                step(backward, delta);
            }
        }
        w.note = "unit steps summing to gamma = " + s.elems[gamma] + " along powers of the full cycle";
    }
    if (forward.back() != backward.back()) throw std::logic_error("path witness halves do not meet");
    for (const Matrix& m : forward) w.members.push_back(ms.encode(m));
    for (std::size_t i = backward.size() - 1; i-- > 0;) w.members.push_back(ms.encode(backward[i]));
    return w;
}

CheckReport check_diam_matrix(const SemiringTable& s, std::size_t k, const CheckOptions& opts) {
    if (k < 2) throw std::invalid_argument("matrix checks need k >= 2");
    CheckReport r;
    r.theorem = "diammatS";
    const CayleyGraph gb = base_graph(s);
    if (!is_connected(gb)) {
        r.clauses = {clause("diammatS", fails("Gamma(S) is disconnected"), Relation::le, "2k(n-1)|S*|", ExtNat(0),
                            ExtNat::infinity())};
        finalize(r);
        return r;
    }
    const SemiringProfile p = profile(s);
    const UnitSet us = units(s);
    const MatrixSemiring ms(s, k);
    const MatrixUnitSet mu = matrix_units(s, k, opts.units);
    const CayleyGraph g = matrix_graph(s, k, mu, opts.guards.max_vertices);
    const Eccentric ecc = diameter_witness(g);
    const ExtNat base_diam = diameter(gb);
    const std::uint64_t n = p.one_index_period.second;

    Clause c1 = clause("diammatS.1", applies("m*1 = n*1 with " + period_text(p)), Relation::le, "2k(n-1)|S*|",
                       ExtNat(2 * k * (n - 1) * us.size()), ecc.length);
    Clause c2 = clause("diammatS.2",
                       p.units_closed_under_addition ? applies("S* is closed under addition")
                                                     : fails("S* is not closed under addition"),
                       Relation::le, "2k", ExtNat(2 * k), ecc.length);
    Clause c3 = clause("diammatS.lower",
                       p.entire && p.antinegative ? applies("S is an entire antiring")
                                                  : fails("S is not an entire antiring"),
                       Relation::ge, "k diam(Gamma(S))", ExtNat(k * base_diam.value()), ecc.length);
    const Clause& used = c2.hypothesis.status == HypothesisStatus::applies ? c2 : c1;
    Clause head = used;
    head.id = "diammatS";
    head.hypothesis = applies("Gamma(S) is connected and k >= 2");
    r.clauses = {head, c1, c2, c3};

    try {
        WitnessSet w = diam_path_witness(s, k, ms.decode(ecc.from), ms.decode(ecc.to));
        w.note += "; diametral pair " + ms.label(ms.decode(ecc.from)) + " to " + ms.label(ms.decode(ecc.to));
        const bool ok = verify(w, g);
        Clause cw = clause("diammatS.witness", applies("constructed from " + used.id), Relation::le,
                           used.bound_expr, used.bound_value, ExtNat(w.members.size() - 1),
                           ok ? "every hop is an edge" : "a hop is not an edge");
        if (!ok) cw.verdict = Verdict::fail;
        r.clauses.push_back(cw);
        r.witnesses.push_back(std::move(w));
    } catch (const HypothesisViolation& e) {
        r.clauses.push_back(clause("diammatS.witness", fails(e.what()), Relation::le, used.bound_expr,
                                   used.bound_value, ExtNat(0)));
    }
    finalize(r);
    return r;
}

CheckReport check_girth_matrix(const SemiringTable& s, std::size_t k, const CheckOptions& opts) {
    if (k < 2) throw std::invalid_argument("matrix checks need k >= 2");
    CheckReport r;
    r.theorem = "girth";
    const SemiringProfile p = profile(s);
    if (s.size() == 1) {
        const Hypothesis trivial = fails("one-element semiring: 0 = 1 and Gamma(M_k(S)) is a single vertex");
        r.clauses = {clause("girth", trivial, Relation::le, "4", ExtNat(4), ExtNat::infinity()),
                     clause("girth.1", trivial, Relation::eq, "3", ExtNat(3), ExtNat::infinity()),
                     clause("girth.2", trivial, Relation::eq, "4", ExtNat(4), ExtNat::infinity())};
        finalize(r);
        return r;
    }
    const UnitSet us = units(s);
    const MatrixSemiring ms(s, k);
    const MatrixUnitSet mu = matrix_units(s, k, opts.units);
    const CayleyGraph g = matrix_graph(s, k, mu, opts.guards.max_vertices);
    const std::vector<Vertex> cycle = shortest_cycle(g);
    const ExtNat computed = cycle.empty() ? ExtNat::infinity() : ExtNat(cycle.size());

    std::optional<std::pair<Elem, Elem>> sum_pair;  // (u, u+v)
    std::string pair_text;
    for (Elem u : us.members)
        for (Elem v : us.members) {
            const Elem w = s.plus(u, v);
            if (!sum_pair && us.contains(w) && w != u && w != v) {
                sum_pair = {u, w};
                pair_text = s.elems[u] + " + " + s.elems[v] + " = " + s.elems[w];
            }
        }

    Clause head = clause("girth", applies("k >= 2 and S nontrivial"), Relation::le, "4", ExtNat(4), computed);
    Clause c1 = clause("girth.1",
                       sum_pair ? applies("units " + pair_text)
                                : fails("no units u, v with u + v a unit other than u and v"),
                       Relation::eq, "3", ExtNat(3), computed);
    Hypothesis h2 = cancellative_antiring_hypothesis(s, p);
    if (h2.status == HypothesisStatus::applies && sum_pair) h2 = fails("case (1) applies");
    Clause c2 = clause("girth.2", h2, Relation::eq, "4", ExtNat(4), computed);
    r.clauses = {head, c1, c2};

    const Matrix perm = ms.perm_matrix(cycle_power(k, 1));
    const Matrix zero = ms.zero(), id = ms.identity();
    add_witness(r,
                {WitnessKind::path,
                 {ms.encode(perm), ms.encode(zero), ms.encode(id), ms.encode(ms.add(id, perm)), ms.encode(perm)},
                 "4-cycle P ~ 0 ~ I ~ I+P ~ P"},
                g, "girth.four_cycle");
    if (sum_pair) {
        add_witness(r,
                    {WitnessKind::clique,
                     {ms.encode(zero), ms.encode(ms.scale(sum_pair->first, id)),
                      ms.encode(ms.scale(sum_pair->second, id))},
                     "triangle 0, uI, (u+v)I"},
                    g, "girth.triangle");
    }
    if (!cycle.empty()) {
        WitnessSet w{WitnessKind::path, {}, "shortest cycle found by BFS"};
        for (Vertex v : cycle) w.members.push_back(v);
        w.members.push_back(cycle.front());
        add_witness(r, std::move(w), g, "girth.shortest_cycle");
    }
    finalize(r);
    return r;
}

CheckReport check_clique(const SemiringTable& s, std::size_t k, const CheckOptions& opts) {
    if (k < 2) throw std::invalid_argument("matrix checks need k >= 2");
    CheckReport r;
    r.theorem = "clique";
    const SemiringProfile p = profile(s);
    const CayleyGraph gb = base_graph(s);
    const auto base_clique = maximum_clique(gb, opts.guards.max_clique_vertices);
    if (!base_clique) throw GuardExceeded("clique guard exceeded for Gamma(S)");
    const MatrixSemiring ms(s, k);
    const MatrixUnitSet mu = matrix_units(s, k, opts.units);
    const CayleyGraph g = matrix_graph(s, k, mu, opts.guards.max_vertices);
    const auto clique = maximum_clique(g, opts.guards.max_clique_vertices);
    if (!clique)
        throw GuardExceeded("Gamma(M_k(S)) has " + std::to_string(g.vcount()) + " vertices, over the clique guard " +
                            std::to_string(opts.guards.max_clique_vertices));
    const ExtNat base_omega(base_clique->size()), omega(clique->size());

    Clause head = clause("clique", applies("k >= 2"), Relation::ge, "omega(Gamma(S))", base_omega, omega,
                         omega > base_omega ? "strict inequality" : "equality");
    Clause eq = clause("clique.equality", cancellative_antiring_hypothesis(s, p), Relation::eq, "omega(Gamma(S))",
                       base_omega, omega);
    r.clauses = {head, eq};

    WitnessSet lifted{WitnessKind::clique, {}, "lifted clique {wI : w in a maximum clique of Gamma(S)}"};
    for (Vertex w : *base_clique) lifted.members.push_back(ms.encode(ms.scale(w, ms.identity())));
    add_witness(r, std::move(lifted), g, "clique.lifted");
    WitnessSet best{WitnessKind::clique, {}, "maximum clique of Gamma(M_k(S))"};
    for (Vertex v : *clique) best.members.push_back(v);
    add_witness(r, std::move(best), g, "clique.maximum");
    finalize(r);
    return r;
}

BigInt binomial(unsigned n, unsigned r) {
    if (r > n) return 0;
    BigInt out = 1;
    for (unsigned i = 1; i <= r; ++i) out = out * (n - r + i) / i;
    return out;
}

BigInt zero_line_count(std::uint64_t order, unsigned k) {
    const BigInt s = order;
    BigInt no_zero_lines = 0;
    for (unsigned i = 0; i <= k; ++i) {
        BigInt term = binomial(k, i) * boost::multiprecision::pow(BigInt(boost::multiprecision::pow(s, k - i) - 1), k);
        no_zero_lines += (i % 2 == 0) ? term : BigInt(-term);
    }
    return boost::multiprecision::pow(s, k * k) - no_zero_lines;
}

IndependenceWitness independence_lower_witness(const SemiringTable& s, std::size_t k, const CayleyGraph* g) {
    const SemiringProfile p = profile(s);
    if (!p.entire || !p.antinegative) throw HypothesisViolation("independence witness needs a finite entire antiring");
    const MatrixSemiring ms(s, k);
    const UnitSet us = units(s);
    const std::uint64_t total = ms.cardinality();
    IndependenceWitness out;
    std::set<VertexId> members;

    for (VertexId id = 0; id < total; ++id) {
        const Matrix m = ms.decode(id);
        bool zero_line = false;
        for (std::size_t i = 0; i < k && !zero_line; ++i) {
            bool row = true, col = true;
            for (std::size_t j = 0; j < k; ++j) {
                row = row && m.at(i, j) == s.zero;
                col = col && m.at(j, i) == s.zero;
            }
            zero_line = row || col;
        }
        if (zero_line) members.insert(id);
    }
    out.w0_enumerated = members.size();

    // W_i: sums of 2i terms D_j P_{sigma^{c_j}} over distinct cycle powers c_j.
    std::vector<Matrix> powers;
    for (std::size_t c = 1; c <= k; ++c) powers.push_back(ms.perm_matrix(cycle_power(k, c)));
    for (std::size_t terms = 2; terms <= k; terms += 2) {
        std::vector<bool> pick(k, false);
        std::fill(pick.end() - static_cast<std::ptrdiff_t>(terms), pick.end(), true);
        do {
            std::vector<std::size_t> chosen;
            for (std::size_t c = 0; c < k; ++c)
                if (pick[c]) chosen.push_back(c);
            // Every assignment of unit diagonals to the chosen powers.
            const std::size_t slots = terms * k;
            std::vector<std::size_t> digit(slots, 0);
            while (true) {
                Matrix sum = ms.zero();
                for (std::size_t t = 0; t < terms; ++t) {
                    std::vector<Elem> d(k);
                    for (std::size_t i = 0; i < k; ++i) d[i] = us.members[digit[t * k + i]];
                    sum = ms.add(sum, ms.mul(ms.diag(d), powers[chosen[t]]));
                }
                if (members.insert(ms.encode(sum)).second) ++out.wi_distinct;
                std::size_t i = 0;
                while (i < slots && ++digit[i] == us.size()) digit[i++] = 0;
                if (i == slots) break;
            }
        } while (std::next_permutation(pick.begin(), pick.end()));
    }

    const BigInt units_pow = boost::multiprecision::pow(BigInt(us.size()), 2 * static_cast<unsigned>(k));
    out.w0_formula = zero_line_count(s.size(), static_cast<unsigned>(k));
    out.wi_summation = 0;
    for (unsigned i = 1; 2 * i <= k; ++i)
        out.wi_summation += binomial(static_cast<unsigned>(k), 2 * i) * boost::multiprecision::pow(units_pow, i);
    out.wi_closed_form = (boost::multiprecision::pow(BigInt(1 + units_pow), static_cast<unsigned>(k)) +
                          boost::multiprecision::pow(BigInt(1 - units_pow), static_cast<unsigned>(k))) /
                             2 -
                         1;

    out.set = {WitnessKind::independent_set, {members.begin(), members.end()},
               "W_0 (zero row or column) plus sums over distinct powers of the full cycle"};
    if (g) verify(out.set, *g);
    return out;
}

CheckReport check_independence(const SemiringTable& s, std::size_t k, const CheckOptions& opts) {
    if (k < 2) throw std::invalid_argument("matrix checks need k >= 2");
    CheckReport r;
    r.theorem = "independence";
    const SemiringProfile p = profile(s);
    Hypothesis h = applies("S is a finite entire antiring");
    if (s.size() == 1)
        h = vacuous("one-element semiring: the sets W_i and the k!|S*|^k units all collapse onto the zero matrix");
    else if (!p.entire || !p.antinegative)
        h = fails("S is not an entire antiring");
    if (h.status != HypothesisStatus::applies) {
        r.clauses = {clause("independence", h, Relation::ge, "|W_0| + sum C(k,2i)|S*|^(2ik)", ExtNat(0), ExtNat(0)),
                     clause("independence.upper", h, Relation::le, "|S|^(k^2) - k!|S*|^k", ExtNat(0), ExtNat(0))};
        finalize(r);
        return r;
    }

    const UnitSet us = units(s);
    const MatrixSemiring ms(s, k);
    const MatrixUnitSet mu = matrix_units(s, k, opts.units);
    const CayleyGraph g = matrix_graph(s, k, mu, opts.guards.max_vertices);
    const auto mis = maximum_independent_set(g, opts.guards.max_alpha_vertices);
    if (!mis)
        throw GuardExceeded("Gamma(M_k(S)) has " + std::to_string(g.vcount()) +
                            " vertices, over the independence guard " + std::to_string(opts.guards.max_alpha_vertices));
    const ExtNat alpha(mis->size());
    IndependenceWitness iw = independence_lower_witness(s, k, &g);

    const BigInt lower = iw.w0_formula + iw.wi_summation;
    const BigInt lower_printed = iw.w0_formula + iw.wi_closed_form;
    Clause head = clause("independence", h, Relation::ge, "|W_0| + sum_i C(k,2i)|S*|^(2ik)", to_ext(lower), alpha,
                         "|W_0| = " + str(iw.w0_formula) + ", W_i terms = " + str(iw.wi_summation));
    Clause cw = clause("independence.witness", h, Relation::ge, "|W|", ExtNat(iw.set.members.size()), alpha,
                       iw.set.verified ? "W verified independent" : "W is not independent");
    if (!iw.set.verified) cw.verdict = Verdict::fail;
    Clause cform = clause("independence.closed_form", h, Relation::ge,
                          "|W_0| + ((1+|S*|^(2k))^k + (1-|S*|^(2k))^k)/2 - 1", to_ext(lower_printed), alpha,
                          iw.wi_closed_form == iw.wi_summation
                              ? "closed form agrees with the term-by-term sum"
                              : "closed form " + str(iw.wi_closed_form) + " disagrees with the term-by-term sum " +
                                    str(iw.wi_summation));
    Clause cw0 = clause("independence.w0", h, Relation::eq, "inclusion-exclusion count of W_0", to_ext(iw.w0_formula),
                        ExtNat(iw.w0_enumerated), "enumerated " + std::to_string(iw.w0_enumerated));

    BigInt fact = 1;
    for (unsigned i = 2; i <= k; ++i) fact *= i;
    const BigInt upper = boost::multiprecision::pow(BigInt(s.size()), static_cast<unsigned>(k * k)) -
                         fact * boost::multiprecision::pow(BigInt(us.size()), static_cast<unsigned>(k));
    Clause cup = clause("independence.upper", cancellative_antiring_hypothesis(s, p), Relation::le,
                        "|S|^(k^2) - k!|S*|^k", to_ext(upper), alpha);

    // Independent sets through v lie in v plus its non-neighbours; the rest
    // avoid v and obey the bound n' - e'/Delta' on Gamma - v.
    Vertex v = static_cast<Vertex>(iw.set.members.front());
    for (VertexId m : iw.set.members)
        if (g.degree(static_cast<Vertex>(m)) > g.degree(v)) v = static_cast<Vertex>(m);
    std::vector<Vertex> rest;
    for (Vertex x = 0; x < g.vcount(); ++x)
        if (x != v) rest.push_back(x);
    const CayleyGraph h2 = induced_subgraph(g, rest);
    std::uint64_t max_deg = 0;
    for (Vertex x = 0; x < h2.vcount(); ++x) max_deg = std::max<std::uint64_t>(max_deg, h2.degree(x));
    const std::uint64_t through_v = g.vcount() - g.degree(v);
    std::uint64_t avoiding_v = h2.vcount();
    std::string kwok_text = "edgeless after deleting v";
    if (max_deg > 0) {
        const Rational kb = kwok_bound(h2.vcount(), h2.edge_count(), max_deg);
        avoiding_v = static_cast<std::uint64_t>(kb.floor());
        kwok_text = "n' = " + std::to_string(h2.vcount()) + ", e' = " + std::to_string(h2.edge_count()) +
                    ", Delta' = " + std::to_string(max_deg) + ", n' - e'/Delta' = " + std::to_string(kb.num) +
                    (kb.den == 1 ? "" : "/" + std::to_string(kb.den));
    }
    Clause ckwok = clause("independence.kwok", applies("v = " + g.name(v) + " of maximum degree in W"), Relation::le,
                          "max(1 + non-neighbours of v, floor(n' - e'/Delta'))",
                          ExtNat(std::max(through_v, avoiding_v)), alpha, kwok_text);

    r.clauses = {head, cw, cform, cw0, cup, ckwok};
    r.witnesses.push_back(std::move(iw.set));
    WitnessSet best{WitnessKind::independent_set, {mis->begin(), mis->end()}, "maximum independent set"};
    add_witness(r, std::move(best), g, "independence.maximum");
    finalize(r);
    return r;
}

CayleyGraph nat_window_graph(std::size_t k, unsigned bound, std::uint64_t max_vertices) {
    if (k == 0) throw std::invalid_argument("window dimension must be positive");
    if (bound == 0) throw std::invalid_argument("window bound must be positive");
    const std::uint64_t base = std::uint64_t{bound} + 1;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k * k; ++i) {
        if (total > max_vertices / base + 1) throw GuardExceeded("window exceeds the vertex guard");
        total *= base;
    }
    if (total > max_vertices)
        throw GuardExceeded("window with " + std::to_string(total) + " vertices exceeds the vertex guard");

    // N_0* = {1}, so the units of M_k(N_0) are the permutation matrices.
    std::vector<std::vector<std::size_t>> unit_positions;  // entry indices set to 1
    for (const auto& sigma : permutations(k)) {
        std::vector<std::size_t> pos;
        for (std::size_t i = 0; i < k; ++i) pos.push_back(i * k + sigma[i]);
        unit_positions.push_back(std::move(pos));
    }
    std::vector<std::uint64_t> place(k * k);  // base^(k*k-1-idx)
    for (std::size_t i = k * k, w = 1; i-- > 0; w *= base) place[i] = w;

    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<std::uint64_t> digits(k * k);
    for (std::uint64_t x = 0; x < total; ++x) {
        std::uint64_t rem = x;
        for (std::size_t i = k * k; i-- > 0;) {
            digits[i] = rem % base;
            rem /= base;
        }
        for (const auto& pos : unit_positions) {
            bool inside = std::all_of(pos.begin(), pos.end(), [&](std::size_t e) { return digits[e] < bound; });
            if (!inside) continue;
            std::uint64_t y = x;
            for (std::size_t e : pos) y += place[e];
            edges.emplace_back(static_cast<Vertex>(x), static_cast<Vertex>(y));
        }
    }
    CayleyGraph g = CayleyGraph::from_edges(total, edges);
    g.label = [k, base](Vertex v) {
        std::vector<std::uint64_t> d(k * k);
        std::uint64_t rem = v;
        for (std::size_t i = k * k; i-- > 0;) {
            d[i] = rem % base;
            rem /= base;
        }
        std::string out = "[";
        for (std::size_t i = 0; i < k; ++i) {
            out += i ? ",[" : "[";
            for (std::size_t j = 0; j < k; ++j) out += (j ? "," : "") + std::to_string(d[i * k + j]);
            out += ']';
        }
        return out + "]";
    };
    return g;
}

CheckReport check_nat_window_girth(std::size_t k, unsigned bound, const CheckOptions& opts) {
    CheckReport r;
    r.theorem = "natwindow";
    if (k < 2) {
        r.clauses = {clause("natwindow", fails("k >= 2 required"), Relation::eq, "4", ExtNat(4), ExtNat::infinity())};
        finalize(r);
        return r;
    }
    const CayleyGraph g = nat_window_graph(k, bound, opts.guards.max_vertices);
    const ExtNat gval = girth(g);
    const std::uint64_t triangles = count_triangles(g);
    const Hypothesis h = applies("N_0 is an entire additively cancellative antiring, N_0* = {1}, 1 + 1 = 2 is not a unit");
    r.clauses = {clause("natwindow", h, Relation::eq, "4", ExtNat(4), gval, "girth of the induced window graph"),
                 clause("natwindow.triangles", h, Relation::eq, "0", ExtNat(0), ExtNat(triangles),
                        "exhaustive triangle count")};

    const std::uint64_t base = std::uint64_t{bound} + 1;
    auto encode = [&](const std::vector<std::uint64_t>& entries) {
        VertexId id = 0;
        for (auto e : entries) id = id * base + e;
        return id;
    };
    std::vector<std::uint64_t> zero(k * k, 0), id(k * k, 0), perm(k * k, 0), sum(k * k, 0);
    const auto sigma = cycle_power(k, 1);
    for (std::size_t i = 0; i < k; ++i) {
        id[i * k + i] = 1;
        perm[i * k + sigma[i]] = 1;
    }
    for (std::size_t e = 0; e < k * k; ++e) sum[e] = id[e] + perm[e];
    add_witness(r,
                {WitnessKind::path,
                 {encode(perm), encode(zero), encode(id), encode(sum), encode(perm)},
                 "4-cycle P ~ 0 ~ I ~ I+P ~ P"},
                g, "natwindow.four_cycle");
    finalize(r);
    return r;
}

std::vector<CheckReport> check_all(const SemiringTable& s, std::size_t k, const CheckOptions& opts) {
    return {check_diam_base(s, opts), check_diam_matrix(s, k, opts), check_girth_matrix(s, k, opts),
            check_clique(s, k, opts), check_independence(s, k, opts)};
}

nlohmann::json to_json(const CheckReport& r) {
    auto hyp = [](const Hypothesis& h) {
        return nlohmann::json{{"status", to_string(h.status)}, {"reason", h.reason}};
    };
    nlohmann::json clauses = nlohmann::json::array();
    for (const Clause& c : r.clauses) {
        clauses.push_back({{"id", c.id},
                           {"hypothesis", hyp(c.hypothesis)},
                           {"relation", to_string(c.relation)},
                           {"expr", c.bound_expr},
                           {"bound", to_json(c.bound_value)},
                           {"computed", to_json(c.computed_value)},
                           {"verdict", to_string(c.verdict)},
                           {"detail", c.detail}});
    }
    nlohmann::json witnesses = nlohmann::json::array();
    for (const WitnessSet& w : r.witnesses)
        witnesses.push_back(
            {{"kind", to_string(w.kind)}, {"members", w.members}, {"note", w.note}, {"verified", w.verified}});
    return {{"theorem", r.theorem},
            {"hypothesis", hyp(r.hypothesis)},
            {"bound", {{"expr", r.bound_expr}, {"value", to_json(r.bound_value)}, {"clauses", clauses}}},
            {"computed", to_json(r.computed_value)},
            {"verdict", to_string(r.verdict)},
            {"witnesses", witnesses}};
}

}  // namespace ucg
