#pragma once

/**
 * @file graph.hpp
 * @brief Unitary Cayley graphs and their exact invariants.
 *
 * x ~ y iff x != y and x + u = y or y + u = x for some unit u. For matrix
 * semirings vertices are the vertex ids of matrix.hpp.
 */

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ucg/matrix.hpp"
#include "ucg/semiring.hpp"

namespace ucg {

/// A natural number or infinity. Infinity compares greater than every value.
class ExtNat {
public:
    constexpr ExtNat() = default;
    constexpr explicit ExtNat(std::uint64_t v) : value_(v), finite_(true) {}
    static constexpr ExtNat infinity() { return ExtNat{}; }

    constexpr bool is_finite() const noexcept { return finite_; }
    constexpr bool is_infinite() const noexcept { return !finite_; }
    /// Precondition: is_finite().
    constexpr std::uint64_t value() const noexcept { return value_; }

    constexpr bool operator==(const ExtNat& o) const noexcept {
        return finite_ == o.finite_ && (!finite_ || value_ == o.value_);
    }
    constexpr std::strong_ordering operator<=>(const ExtNat& o) const noexcept {
        if (finite_ != o.finite_) return finite_ ? std::strong_ordering::less : std::strong_ordering::greater;
        if (!finite_) return std::strong_ordering::equal;
        return value_ <=> o.value_;
    }

    /// Decimal value, or "inf".
    std::string to_string() const;

private:
    std::uint64_t value_ = 0;
    bool finite_ = false;
};

using Vertex = std::uint32_t;

struct GraphGuards {
    std::uint64_t max_vertices = std::uint64_t{1} << 20;
    std::uint64_t max_clique_vertices = std::uint64_t{1} << 14;
    std::uint64_t max_alpha_vertices = std::uint64_t{1} << 10;
};

/// Simple undirected graph stored as sorted neighbour lists.
struct CayleyGraph {
    std::vector<std::vector<Vertex>> adjacency;
    /// Printable name of a vertex; defaults to its number.
    std::function<std::string(Vertex)> label;
    /// Set when translations act transitively (S additively a group), so
    /// every vertex has the same eccentricity.
    bool vertex_transitive = false;

    std::size_t vcount() const noexcept { return adjacency.size(); }
    std::size_t degree(Vertex v) const { return adjacency[v].size(); }
    std::size_t edge_count() const;
    bool adjacent(Vertex u, Vertex v) const;
    std::string name(Vertex v) const;

    /// Builds a simple graph from an edge list; loops and repeats are dropped.
    static CayleyGraph from_edges(std::size_t vcount, std::span<const std::pair<Vertex, Vertex>> edges);
};

/// Connects x and add(x, u) for every vertex x and connection element u.
/// O(vcount * |units|). Throws GuardExceeded when vcount > max_vertices.
CayleyGraph build_graph(std::uint64_t vcount, std::span<const VertexId> units,
                        const std::function<VertexId(VertexId, VertexId)>& add,
                        std::uint64_t max_vertices = GraphGuards{}.max_vertices);

/// Gamma(S).
CayleyGraph base_graph(const SemiringTable& s);
/// Gamma(M_k(S)) for a precomputed unit set. `s` must outlive the graph's
/// label hook.
CayleyGraph matrix_graph(const SemiringTable& s, std::size_t k, const MatrixUnitSet& units,
                         std::uint64_t max_vertices = GraphGuards{}.max_vertices);

CayleyGraph induced_subgraph(const CayleyGraph& g, std::span<const Vertex> vertices);
CayleyGraph complement(const CayleyGraph& g);

/// BFS distances from `source`; nullopt marks unreachable vertices.
std::vector<std::optional<std::uint32_t>> bfs_distances(const CayleyGraph& g, Vertex source);
ExtNat distance(const CayleyGraph& g, Vertex x, Vertex y);
/// A shortest x-y path (both endpoints included), or empty if none.
std::vector<Vertex> shortest_path(const CayleyGraph& g, Vertex x, Vertex y);

struct Eccentric {
    ExtNat length;
    Vertex from = 0;
    Vertex to = 0;
};

/// Maximum distance over all pairs plus one pair realising it.
Eccentric diameter_witness(const CayleyGraph& g);
ExtNat diameter(const CayleyGraph& g);
bool is_connected(const CayleyGraph& g);

/// Shortest cycle via BFS from every vertex.
ExtNat girth(const CayleyGraph& g);
/// A shortest cycle as a vertex sequence (first vertex not repeated), or
/// empty for a forest.
std::vector<Vertex> shortest_cycle(const CayleyGraph& g);
std::uint64_t count_triangles(const CayleyGraph& g);

/// Exact maximum clique by branch and bound with a greedy colouring bound.
/// nullopt when vcount exceeds `guard`.
std::optional<std::vector<Vertex>> maximum_clique(const CayleyGraph& g,
                                                  std::uint64_t guard = GraphGuards{}.max_clique_vertices);
/// Maximum clique of the complement. nullopt when vcount exceeds `guard`.
std::optional<std::vector<Vertex>> maximum_independent_set(
    const CayleyGraph& g, std::uint64_t guard = GraphGuards{}.max_alpha_vertices);

bool is_clique(const CayleyGraph& g, std::span<const Vertex> vs);
bool is_independent(const CayleyGraph& g, std::span<const Vertex> vs);
bool is_path(const CayleyGraph& g, std::span<const Vertex> vs);

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    bool operator==(const Rational&) const = default;
    /// Largest integer <= num/den.
    std::int64_t floor() const;
};

/// n - e/Delta, reduced. Throws std::invalid_argument when max_degree == 0.
Rational kwok_bound(std::uint64_t nvertices, std::uint64_t nedges, std::uint64_t max_degree);

enum class SolveStatus { not_requested, skipped, solved };

struct Count {
    SolveStatus status = SolveStatus::not_requested;
    std::uint64_t value = 0;
};

struct InvariantSelection {
    bool diameter = true;
    bool girth = true;
    bool omega = true;
    bool alpha = true;
};

struct InvariantReport {
    bool connected = false;
    std::optional<ExtNat> diameter;  // nullopt = not requested
    std::optional<ExtNat> girth;
    Count omega;
    Count alpha;
    std::uint64_t degree_min = 0;
    std::uint64_t degree_max = 0;
    bool regular = false;
};

InvariantReport compute_invariants(const CayleyGraph& g, const InvariantSelection& sel = {},
                                   const GraphGuards& guards = {});

}  // namespace ucg
