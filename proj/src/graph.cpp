#include "ucg/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "ucg/errors.hpp"

namespace ucg {

std::string ExtNat::to_string() const { return finite_ ? std::to_string(value_) : "inf"; }

std::size_t CayleyGraph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& nb : adjacency) twice += nb.size();
    return twice / 2;
}

bool CayleyGraph::adjacent(Vertex u, Vertex v) const {
    const auto& nb = adjacency[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::string CayleyGraph::name(Vertex v) const { return label ? label(v) : std::to_string(v); }

CayleyGraph CayleyGraph::from_edges(std::size_t vcount, std::span<const std::pair<Vertex, Vertex>> edges) {
    CayleyGraph g;
    g.adjacency.resize(vcount);
    for (auto [u, v] : edges) {
        if (u >= vcount || v >= vcount) throw std::out_of_range("edge endpoint out of range");
        if (u == v) continue;
        g.adjacency[u].push_back(v);
        g.adjacency[v].push_back(u);
    }
    for (auto& nb : g.adjacency) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
    return g;
}

CayleyGraph build_graph(std::uint64_t vcount, std::span<const VertexId> units,
                        const std::function<VertexId(VertexId, VertexId)>& add, std::uint64_t max_vertices) {
    if (vcount > max_vertices || vcount > std::numeric_limits<Vertex>::max())
        throw GuardExceeded("graph with " + std::to_string(vcount) + " vertices exceeds vertex guard " +
                            std::to_string(max_vertices));
    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(vcount * units.size());
    for (VertexId x = 0; x < vcount; ++x)
        for (VertexId u : units) {
            const VertexId y = add(x, u);
            if (y >= vcount) throw std::out_of_range("addition left the vertex set");
            if (y != x) edges.emplace_back(static_cast<Vertex>(x), static_cast<Vertex>(y));
        }
    return CayleyGraph::from_edges(vcount, edges);
}

namespace {

bool additive_group(const SemiringTable& s) {
    for (Elem a = 0; a < s.size(); ++a) {
        bool has_negative = false;
        for (Elem b = 0; b < s.size() && !has_negative; ++b) has_negative = s.plus(a, b) == s.zero;
        if (!has_negative) return false;
    }
    return true;
}

}  // namespace

CayleyGraph base_graph(const SemiringTable& s) {
    const UnitSet us = units(s);
    std::vector<VertexId> ids(us.members.begin(), us.members.end());
    CayleyGraph g = build_graph(s.size(), ids, [&s](VertexId x, VertexId u) {
        return s.plus(static_cast<Elem>(x), static_cast<Elem>(u));
    });
    g.label = [names = s.elems](Vertex v) { return names[v]; };
    g.vertex_transitive = additive_group(s);
    return g;
}

CayleyGraph matrix_graph(const SemiringTable& s, std::size_t k, const MatrixUnitSet& units,
                         std::uint64_t max_vertices) {
    const MatrixSemiring ms(s, k);
    const std::uint64_t total = ms.cardinality();
    if (total > max_vertices)
        throw GuardExceeded("M_" + std::to_string(k) + "(" + s.name + ") has " + std::to_string(total) +
                            " vertices, exceeding vertex guard " + std::to_string(max_vertices));
    std::vector<VertexId> ids;
    std::vector<std::vector<Elem>> unit_digits;
    for (const Matrix& u : units.elements) {
        ids.push_back(ms.encode(u));
        unit_digits.push_back(u.entries);
    }
    // Vertex ids are visited in increasing order, so decode each x once.
    VertexId cached = std::numeric_limits<VertexId>::max();
    Matrix x_mat;
    std::size_t unit_index = 0;
    const VertexId n = s.size();
    CayleyGraph g = build_graph(total, ids, [&](VertexId x, VertexId) {
        if (x != cached) {
            cached = x;
            x_mat = ms.decode(x);
            unit_index = 0;
        }
        const auto& ud = unit_digits[unit_index++];
        VertexId y = 0;
        for (std::size_t i = 0; i < ud.size(); ++i) y = y * n + s.plus(x_mat.entries[i], ud[i]);
        return y;
    }, max_vertices);
    g.label = [s, k](Vertex v) {
        const MatrixSemiring m(s, k);
        return m.label(m.decode(v));
    };
    g.vertex_transitive = additive_group(s);
    return g;
}

CayleyGraph induced_subgraph(const CayleyGraph& g, std::span<const Vertex> vertices) {
    std::vector<std::int64_t> pos(g.vcount(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) pos[vertices[i]] = static_cast<std::int64_t>(i);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (Vertex w : g.adjacency[vertices[i]])
            if (pos[w] > static_cast<std::int64_t>(i))
                edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(pos[w]));
    CayleyGraph h = CayleyGraph::from_edges(vertices.size(), edges);
    if (g.label) {
        std::vector<Vertex> original(vertices.begin(), vertices.end());
        h.label = [label = g.label, original](Vertex v) { return label(original[v]); };
    }
    return h;
}

CayleyGraph complement(const CayleyGraph& g) {
    CayleyGraph h;
    h.label = g.label;
    h.adjacency.resize(g.vcount());
    for (Vertex v = 0; v < g.vcount(); ++v) {
        auto it = g.adjacency[v].begin();
        for (Vertex w = 0; w < g.vcount(); ++w) {
            while (it != g.adjacency[v].end() && *it < w) ++it;
            if (w != v && (it == g.adjacency[v].end() || *it != w)) h.adjacency[v].push_back(w);
        }
    }
    return h;
}

namespace {

constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

std::vector<std::uint32_t> bfs_raw(const CayleyGraph& g, Vertex source, std::vector<Vertex>* parent = nullptr) {
    std::vector<std::uint32_t> dist(g.vcount(), kUnreached);
    if (parent) parent->assign(g.vcount(), source);
    std::vector<Vertex> queue{source};
    dist[source] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex v = queue[head];
        for (Vertex w : g.adjacency[v])
            if (dist[w] == kUnreached) {
                dist[w] = dist[v] + 1;
                if (parent) (*parent)[w] = v;
                queue.push_back(w);
            }
    }
    return dist;
}

}  // namespace

std::vector<std::optional<std::uint32_t>> bfs_distances(const CayleyGraph& g, Vertex source) {
    std::vector<std::optional<std::uint32_t>> out;
    for (std::uint32_t d : bfs_raw(g, source)) out.push_back(d == kUnreached ? std::nullopt : std::optional(d));
    return out;
}

ExtNat distance(const CayleyGraph& g, Vertex x, Vertex y) {
    const auto d = bfs_raw(g, x)[y];
    return d == kUnreached ? ExtNat::infinity() : ExtNat(d);
}

std::vector<Vertex> shortest_path(const CayleyGraph& g, Vertex x, Vertex y) {
    std::vector<Vertex> parent;
    const auto dist = bfs_raw(g, x, &parent);
    if (dist[y] == kUnreached) return {};
    std::vector<Vertex> path{y};
    while (path.back() != x) path.push_back(parent[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

Eccentric diameter_witness(const CayleyGraph& g) {
    Eccentric best{ExtNat(0), 0, 0};
    const Vertex roots = g.vertex_transitive ? std::min<Vertex>(1, static_cast<Vertex>(g.vcount()))
                                             : static_cast<Vertex>(g.vcount());
    for (Vertex v = 0; v < roots; ++v) {
        const auto dist = bfs_raw(g, v);
        for (Vertex w = 0; w < g.vcount(); ++w) {
            if (dist[w] == kUnreached) return {ExtNat::infinity(), v, w};
            if (ExtNat(dist[w]) > best.length) best = {ExtNat(dist[w]), v, w};
        }
    }
    return best;
}

ExtNat diameter(const CayleyGraph& g) { return diameter_witness(g).length; }

bool is_connected(const CayleyGraph& g) {
    if (g.vcount() == 0) return true;
    const auto dist = bfs_raw(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](std::uint32_t d) { return d == kUnreached; });
}

std::vector<Vertex> shortest_cycle(const CayleyGraph& g) {
    // Every non-tree edge (v, w) of a BFS tree closes a walk of length
    // dist[v] + dist[w] + 1 through the root. Rooted on a shortest cycle that
    // walk is the cycle itself, so the minimum over simple walks is the girth.
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    std::vector<Vertex> best_cycle;
    std::vector<std::uint32_t> dist(g.vcount(), kUnreached);
    std::vector<Vertex> parent(g.vcount());
    std::vector<Vertex> queue;
    for (Vertex root = 0; root < g.vcount() && best > 3; ++root) {
        std::fill(dist.begin(), dist.end(), kUnreached);
        queue.assign(1, root);
        dist[root] = 0;
        parent[root] = root;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const Vertex v = queue[head];
            if (2 * std::uint64_t{dist[v]} + 1 >= best) break;
            for (Vertex w : g.adjacency[v]) {
                if (dist[w] == kUnreached) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                } else if (parent[v] != w) {
                    const std::uint64_t len = std::uint64_t{dist[v]} + dist[w] + 1;
                    if (len < best) {
                        std::vector<Vertex> left{v}, right{w};
                        while (left.back() != root) left.push_back(parent[left.back()]);
                        while (right.back() != root) right.push_back(parent[right.back()]);
                        std::reverse(left.begin(), left.end());
                        right.pop_back();  // root already in left
                        left.insert(left.end(), right.begin(), right.end());
                        // Shared prefixes mean a shorter cycle exists from another root.
                        std::vector<Vertex> sorted = left;
                        std::sort(sorted.begin(), sorted.end());
                        if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) {
                            best = len;
                            best_cycle = std::move(left);
                        }
                    }
                }
            }
        }
    }
    return best_cycle;
}

ExtNat girth(const CayleyGraph& g) {
    const auto c = shortest_cycle(g);
    return c.empty() ? ExtNat::infinity() : ExtNat(c.size());
}

std::uint64_t count_triangles(const CayleyGraph& g) {
    std::uint64_t count = 0;
    for (Vertex u = 0; u < g.vcount(); ++u)
        for (Vertex v : g.adjacency[u]) {
            if (v <= u) continue;
            // |N(u) ∩ N(v)| restricted to w > v
            const auto& a = g.adjacency[u];
            const auto& b = g.adjacency[v];
            auto ia = std::upper_bound(a.begin(), a.end(), v);
            auto ib = std::upper_bound(b.begin(), b.end(), v);
            while (ia != a.end() && ib != b.end()) {
                if (*ia < *ib) ++ia;
                else if (*ib < *ia) ++ib;
                else {
                    ++count;
                    ++ia;
                    ++ib;
                }
            }
        }
    return count;
}

namespace {

class Bitset {
public:
    explicit Bitset(std::size_t n = 0) : words_((n + 63) / 64, 0) {}
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return words_[i >> 6] >> (i & 63) & 1; }
    bool any() const {
        return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
    }
    /// Index of the lowest set bit; precondition any().
    std::size_t first() const {
        for (std::size_t i = 0;; ++i)
            if (words_[i]) return i * 64 + static_cast<std::size_t>(__builtin_ctzll(words_[i]));
    }
    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    void subtract(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    }

private:
    std::vector<std::uint64_t> words_;
};

// Maximum clique by branch and bound (Tomita-style greedy colouring bound on
// bitsets). Vertices are renumbered by descending degree.
class CliqueSolver {
public:
    explicit CliqueSolver(const CayleyGraph& g) : order_(g.vcount()), adj_(g.vcount(), Bitset(g.vcount())) {
        std::iota(order_.begin(), order_.end(), Vertex{0});
        std::stable_sort(order_.begin(), order_.end(),
                         [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
        std::vector<Vertex> pos(g.vcount());
        for (std::size_t i = 0; i < order_.size(); ++i) pos[order_[i]] = static_cast<Vertex>(i);
        for (Vertex v = 0; v < g.vcount(); ++v)
            for (Vertex w : g.adjacency[v]) adj_[pos[v]].set(pos[w]);
    }

    std::vector<Vertex> solve() {
        const std::size_t n = order_.size();
        if (n == 0) return {};
        Bitset all(n);
        for (std::size_t i = 0; i < n; ++i) all.set(i);
        std::vector<std::size_t> current;
        expand(current, all);
        std::vector<Vertex> out;
        for (std::size_t v : best_) out.push_back(order_[v]);
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    void expand(std::vector<std::size_t>& current, Bitset candidates) {
        std::vector<std::size_t> verts;
        std::vector<std::size_t> colours;
        Bitset uncoloured = candidates;
        std::size_t colour = 0;
        while (uncoloured.any()) {
            ++colour;
            Bitset q = uncoloured;
            while (q.any()) {
                const std::size_t v = q.first();
                q.reset(v);
                q.subtract(adj_[v]);
                uncoloured.reset(v);
                verts.push_back(v);
                colours.push_back(colour);
            }
        }
        for (std::size_t i = verts.size(); i-- > 0;) {
            if (current.size() + colours[i] <= best_.size()) return;
            const std::size_t v = verts[i];
            current.push_back(v);
            Bitset next = candidates;
            next &= adj_[v];
            if (next.any()) expand(current, next);
            else if (current.size() > best_.size()) best_ = current;
            current.pop_back();
            candidates.reset(v);
        }
    }

    std::vector<Vertex> order_;
    std::vector<Bitset> adj_;
    std::vector<std::size_t> best_;
};

}  // namespace

std::optional<std::vector<Vertex>> maximum_clique(const CayleyGraph& g, std::uint64_t guard) {
    if (g.vcount() > guard) return std::nullopt;
    return CliqueSolver(g).solve();
}

std::optional<std::vector<Vertex>> maximum_independent_set(const CayleyGraph& g, std::uint64_t guard) {
    if (g.vcount() > guard) return std::nullopt;
    return CliqueSolver(complement(g)).solve();
}

bool is_clique(const CayleyGraph& g, std::span<const Vertex> vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (!g.adjacent(vs[i], vs[j])) return false;
    return true;
}

bool is_independent(const CayleyGraph& g, std::span<const Vertex> vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (vs[i] == vs[j] || g.adjacent(vs[i], vs[j])) return false;
    return true;
}

bool is_path(const CayleyGraph& g, std::span<const Vertex> vs) {
    for (std::size_t i = 0; i + 1 < vs.size(); ++i)
        if (!g.adjacent(vs[i], vs[i + 1])) return false;
    return !vs.empty();
}

std::int64_t Rational::floor() const {
    std::int64_t q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
    return q;
}

Rational kwok_bound(std::uint64_t nvertices, std::uint64_t nedges, std::uint64_t max_degree) {
    if (max_degree == 0) throw std::invalid_argument("kwok_bound: maximum degree must be positive");
    auto num = static_cast<std::int64_t>(nvertices * max_degree) - static_cast<std::int64_t>(nedges);
    auto den = static_cast<std::int64_t>(max_degree);
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    return {num / g, den / g};
}

InvariantReport compute_invariants(const CayleyGraph& g, const InvariantSelection& sel, const GraphGuards& guards) {
    InvariantReport r;
    r.connected = is_connected(g);
    if (g.vcount() > 0) {
        r.degree_min = r.degree_max = g.degree(0);
        for (Vertex v = 0; v < g.vcount(); ++v) {
            r.degree_min = std::min<std::uint64_t>(r.degree_min, g.degree(v));
            r.degree_max = std::max<std::uint64_t>(r.degree_max, g.degree(v));
        }
    }
    r.regular = r.degree_min == r.degree_max;
    if (sel.diameter) r.diameter = r.connected ? diameter(g) : ExtNat::infinity();
    if (sel.girth) r.girth = girth(g);
    auto solve = [](std::optional<std::vector<Vertex>> res) {
        return res ? Count{SolveStatus::solved, res->size()} : Count{SolveStatus::skipped, 0};
    };
    if (sel.omega) r.omega = solve(maximum_clique(g, guards.max_clique_vertices));
    if (sel.alpha) r.alpha = solve(maximum_independent_set(g, guards.max_alpha_vertices));
    return r;
}

}  // namespace ucg
