#pragma once

/**
 * @file theorems.hpp
 * @brief Machine checks of the diameter, girth, clique and independence
 * bounds for Gamma(S) and Gamma(M_k(S)), with the explicit witnesses their
 * proofs construct.
 *
 * Every check returns a CheckReport made of clauses. A clause pairs a
 * hypothesis (applies / fails / vacuous) with one relation between a bound
 * and a computed value. Vacuous marks hypotheses that no finite nontrivial
 * semiring satisfies (entire additively cancellative antirings); those
 * clauses never pass silently.
 */

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "ucg/graph.hpp"
#include "ucg/matrix.hpp"
#include "ucg/semiring.hpp"

namespace ucg {

using BigInt = boost::multiprecision::cpp_int;

enum class HypothesisStatus { applies, fails, vacuous };
enum class Relation { le, ge, eq };
enum class Verdict { pass, fail, skipped };

std::string_view to_string(HypothesisStatus s);
std::string_view to_string(Relation r);
std::string_view to_string(Verdict v);

struct Hypothesis {
    HypothesisStatus status = HypothesisStatus::fails;
    std::string reason;
};

enum class WitnessKind { independent_set, clique, path };

std::string_view to_string(WitnessKind k);

/// Vertices use the vertex-id encoding of the graph they belong to. A path
/// whose last member equals its first is a closed walk (cycle witness).
struct WitnessSet {
    WitnessKind kind = WitnessKind::path;
    std::vector<VertexId> members;
    std::string note;
    bool verified = false;
};

/// Checks the witness property against `g` and records the result.
bool verify(WitnessSet& w, const CayleyGraph& g);

struct Clause {
    std::string id;
    Hypothesis hypothesis;
    Relation relation = Relation::le;  // computed <relation> bound
    std::string bound_expr;
    ExtNat bound_value{0};
    ExtNat computed_value{0};
    Verdict verdict = Verdict::skipped;
    std::string detail;
};

struct CheckReport {
    std::string theorem;
    Hypothesis hypothesis;
    std::string bound_expr;
    ExtNat bound_value{0};
    ExtNat computed_value{0};
    Verdict verdict = Verdict::skipped;
    std::vector<WitnessSet> witnesses;
    /// clauses.front() is the headline clause mirrored in the fields above.
    std::vector<Clause> clauses;
};

struct CheckOptions {
    GraphGuards guards;
    UnitOptions units;
};

/// Status of "S is an entire additively cancellative antiring" for a finite
/// S: applies only to the one-element semiring, vacuous for every other
/// antinegative S (a finite cancellative zero-sum-free semiring has one
/// element), fails otherwise.
Hypothesis cancellative_antiring_hypothesis(const SemiringTable& s, const SemiringProfile& p);

/// sum over u in S* of (n-1)u, with (m, n) the minimal index period of one.
Elem gamma_element(const SemiringTable& s);

CheckReport check_diam_base(const SemiringTable& s, const CheckOptions& opts = {});
CheckReport check_diam_matrix(const SemiringTable& s, std::size_t k, const CheckOptions& opts = {});

/// The explicit A -> ... -> B walk built from powers of the full cycle
/// (0 1 ... k-1): per-entry unit corrections when S* is closed under
/// addition, otherwise steps of the units summing to gamma_element(s).
/// Consecutive repeats are dropped. Throws HypothesisViolation when Gamma(S)
/// is disconnected or the needed identities fail. The result is unverified;
/// call verify() against the graph.
WitnessSet diam_path_witness(const SemiringTable& s, std::size_t k, const Matrix& a, const Matrix& b);

CheckReport check_girth_matrix(const SemiringTable& s, std::size_t k, const CheckOptions& opts = {});
CheckReport check_clique(const SemiringTable& s, std::size_t k, const CheckOptions& opts = {});

struct IndependenceWitness {
    WitnessSet set;
    std::uint64_t w0_enumerated = 0;  // matrices with a zero row or column
    std::uint64_t wi_distinct = 0;    // members outside W_0
    BigInt w0_formula;                // |S|^(k^2) - inclusion-exclusion count
    BigInt wi_summation;              // sum_i C(k,2i) |S*|^(2ik)
    BigInt wi_closed_form;            // ((1+|S*|^(2k))^k + (1-|S*|^(2k))^k)/2 - 1
};

/// Builds W = W_0 ∪ W_1 ∪ ... ∪ W_{k/2}. Requires a finite entire antiring
/// (HypothesisViolation otherwise). Independence is verified against `g`
/// when it is given.
IndependenceWitness independence_lower_witness(const SemiringTable& s, std::size_t k,
                                               const CayleyGraph* g = nullptr);

BigInt binomial(unsigned n, unsigned r);
/// |S|^(k^2) - sum_{i=0..k} C(k,i) (-1)^i (|S|^(k-i) - 1)^k
BigInt zero_line_count(std::uint64_t order, unsigned k);

CheckReport check_independence(const SemiringTable& s, std::size_t k, const CheckOptions& opts = {});

/// Induced subgraph of Gamma(M_k(N_0)) on matrices with entries in 0..bound.
/// Vertex ids are base-(bound+1) row-major.
CayleyGraph nat_window_graph(std::size_t k, unsigned bound,
                             std::uint64_t max_vertices = GraphGuards{}.max_vertices);
/// Girth evidence on the window: the 4-cycle P ~ 0 ~ I ~ I+P ~ P, no
/// triangles, girth 4.
CheckReport check_nat_window_girth(std::size_t k, unsigned bound, const CheckOptions& opts = {});

/// Every check that applies to (s, k): diamS, diammatS, girth, clique,
/// independence, in that order.
std::vector<CheckReport> check_all(const SemiringTable& s, std::size_t k, const CheckOptions& opts = {});

/// {theorem, hypothesis, bound, computed, verdict, witnesses}.
nlohmann::json to_json(const CheckReport& r);

}  // namespace ucg
