#include "ucg/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_set>
#include <utility>

#include "ucg/errors.hpp"

namespace ucg {

std::size_t MatrixHash::operator()(const Matrix& m) const noexcept {
    std::size_t h = m.k;
    for (Elem e : m.entries) h = h * 1099511628211ULL ^ (e + 0x9e3779b97f4a7c15ULL);
    return h;
}

MatrixSemiring::MatrixSemiring(const SemiringTable& base, std::size_t k) : base_(&base), k_(k) {
    if (k == 0) throw std::invalid_argument("matrix dimension must be positive");
}

std::uint64_t MatrixSemiring::cardinality() const {
    const std::uint64_t n = base_->size();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k_ * k_; ++i) {
        if (n != 0 && total > UINT64_MAX / n)
            throw GuardExceeded("|S|^(k^2) does not fit in 64 bits");
        total *= n;
    }
    return total;
}

void MatrixSemiring::check(const Matrix& m) const {
    if (m.k != k_ || m.entries.size() != k_ * k_)
        throw std::invalid_argument("matrix dimension mismatch: expected " + std::to_string(k_) + "x" +
                                    std::to_string(k_));
}

Matrix MatrixSemiring::zero() const { return constant(base_->zero); }

Matrix MatrixSemiring::constant(Elem a) const { return Matrix{k_, std::vector<Elem>(k_ * k_, a)}; }

Matrix MatrixSemiring::identity() const {
    Matrix m = zero();
    for (std::size_t i = 0; i < k_; ++i) m.at(i, i) = base_->one;
    return m;
}

Matrix MatrixSemiring::e_ij(std::size_t i, std::size_t j) const {
    if (i >= k_ || j >= k_) throw std::invalid_argument("e_ij: index out of range");
    Matrix m = zero();
    m.at(i, j) = base_->one;
    return m;
}

Matrix MatrixSemiring::perm_matrix(std::span<const std::size_t> sigma) const {
    if (sigma.size() != k_) throw std::invalid_argument("perm_matrix: permutation has wrong length");
    std::vector<bool> hit(k_, false);
    Matrix m = zero();
    for (std::size_t i = 0; i < k_; ++i) {
        if (sigma[i] >= k_ || hit[sigma[i]])
            throw std::invalid_argument("perm_matrix: not a permutation");
        hit[sigma[i]] = true;
        m.at(i, sigma[i]) = base_->one;
    }
    return m;
}

Matrix MatrixSemiring::diag(std::span<const Elem> d) const {
    if (d.size() != k_) throw std::invalid_argument("diag: wrong number of entries");
    Matrix m = zero();
    for (std::size_t i = 0; i < k_; ++i) {
        if (d[i] >= base_->size()) throw std::invalid_argument("diag: entry out of range");
        m.at(i, i) = d[i];
    }
    return m;
}

Matrix MatrixSemiring::scale(Elem a, const Matrix& m) const {
    check(m);
    Matrix out = m;
    for (Elem& e : out.entries) e = base_->times(a, e);
    return out;
}

Matrix MatrixSemiring::add(const Matrix& a, const Matrix& b) const {
    check(a);
    check(b);
    Matrix out{k_, std::vector<Elem>(k_ * k_)};
    for (std::size_t i = 0; i < out.entries.size(); ++i)
        out.entries[i] = base_->plus(a.entries[i], b.entries[i]);
    return out;
}

Matrix MatrixSemiring::mul(const Matrix& a, const Matrix& b) const {
    check(a);
    check(b);
    const SemiringTable& s = *base_;
    Matrix out = zero();
    for (std::size_t i = 0; i < k_; ++i)
        for (std::size_t j = 0; j < k_; ++j) {
            Elem acc = s.zero;
            for (std::size_t t = 0; t < k_; ++t) acc = s.plus(acc, s.times(a.at(i, t), b.at(t, j)));
            out.at(i, j) = acc;
        }
    return out;
}

Matrix MatrixSemiring::transpose(const Matrix& a) const {
    check(a);
    Matrix out = a;
    for (std::size_t i = 0; i < k_; ++i)
        for (std::size_t j = 0; j < k_; ++j) out.at(i, j) = a.at(j, i);
    return out;
}

VertexId MatrixSemiring::encode(const Matrix& m) const {
    check(m);
    const VertexId n = base_->size();
    VertexId id = 0;
    for (Elem e : m.entries) id = id * n + e;
    return id;
}

Matrix MatrixSemiring::decode(VertexId id) const {
    const VertexId n = base_->size();
    Matrix m{k_, std::vector<Elem>(k_ * k_)};
    for (std::size_t i = m.entries.size(); i-- > 0;) {
        m.entries[i] = static_cast<Elem>(id % n);
        id /= n;
    }
    return m;
}

std::string MatrixSemiring::label(const Matrix& m) const {
    check(m);
    std::string out = "[";
    for (std::size_t i = 0; i < k_; ++i) {
        out += i ? ",[" : "[";
        for (std::size_t j = 0; j < k_; ++j) {
            if (j) out += ',';
            out += base_->elems[m.at(i, j)];
        }
        out += ']';
    }
    return out + "]";
}

std::vector<std::size_t> cycle_power(std::size_t k, std::size_t power) {
    std::vector<std::size_t> sigma(k);
    for (std::size_t i = 0; i < k; ++i) sigma[i] = (i + power) % k;
    return sigma;
}

std::vector<std::vector<std::size_t>> permutations(std::size_t k) {
    std::vector<std::size_t> p(k);
    std::iota(p.begin(), p.end(), std::size_t{0});
    std::vector<std::vector<std::size_t>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::vector<OrthDecomposition> orth_decompositions(const SemiringTable& s, std::size_t r) {
    if (r == 0) throw std::invalid_argument("orth_decompositions: r must be positive");
    if (r == 1) return {OrthDecomposition{{s.one}}};

    const auto n = static_cast<Elem>(s.size());
    std::vector<OrthDecomposition> out;
    std::vector<Elem> parts;
    auto orthogonal = [&](Elem a, Elem b) { return s.times(a, b) == s.zero && s.times(b, a) == s.zero; };
    auto extend = [&](auto&& self, Elem from, Elem sum) -> void {
        if (parts.size() == r) {
            if (sum == s.one) out.push_back({parts});
            return;
        }
        for (Elem a = from; a < n; ++a) {
            if (a == s.zero) continue;
            if (!parts.empty() && parts.back() == a && !orthogonal(a, a)) continue;
            if (!std::all_of(parts.begin(), parts.end(), [&](Elem b) { return orthogonal(a, b); }))
                continue;
            parts.push_back(a);
            self(self, a, s.plus(sum, a));
            parts.pop_back();
        }
    };
    extend(extend, 0, s.zero);
    return out;
}

namespace {

MatrixUnitSet finish(const MatrixSemiring& ms, std::vector<std::pair<Matrix, Matrix>> pairs,
                     UnitProvenance provenance) {
    std::sort(pairs.begin(), pairs.end(),
              [&](const auto& a, const auto& b) { return ms.encode(a.first) < ms.encode(b.first); });
    pairs.erase(std::unique(pairs.begin(), pairs.end(),
                            [](const auto& a, const auto& b) { return a.first == b.first; }),
                pairs.end());
    const Matrix id = ms.identity();
    MatrixUnitSet out;
    out.provenance = provenance;
    for (auto& [u, v] : pairs) {
        if (ms.mul(u, v) != id || ms.mul(v, u) != id)
            throw std::logic_error("unit enumeration produced a non-inverse pair for " + ms.label(u));
        out.elements.push_back(std::move(u));
        out.inverses.push_back(std::move(v));
    }
    return out;
}

// Calls f(d) for every d in units^k.
template <class F>
void for_each_unit_diagonal(const UnitSet& us, std::size_t k, F&& f) {
    std::vector<std::size_t> digit(k, 0);
    std::vector<Elem> d(k, us.members.front());
    while (true) {
        f(std::as_const(d));
        std::size_t i = 0;
        while (i < k && ++digit[i] == us.size()) {
            digit[i] = 0;
            d[i] = us.members[0];
            ++i;
        }
        if (i == k) return;
        d[i] = us.members[digit[i]];
    }
}

}  // namespace

MatrixUnitSet matrix_units_theorem1(const SemiringTable& s, std::size_t k) {
    const SemiringProfile p = profile(s);
    if (!p.commutative || !p.antinegative)
        throw HypothesisViolation("diagonal-permutation unit enumeration needs a commutative antiring");
    const MatrixSemiring ms(s, k);
    const UnitSet us = units(s);
    const auto perms = permutations(k);
    std::vector<Matrix> pmats;
    for (const auto& sigma : perms) pmats.push_back(ms.perm_matrix(sigma));

    // Orthogonal decompositions of size r+1 shrink to size r in an antiring
    // (merge two parts), so the first empty size ends the search. Entire
    // semirings have no orthogonal pairs of nonzero elements at all.
    std::vector<std::pair<Matrix, Matrix>> pairs;
    const std::size_t max_r = p.entire ? 1 : perms.size();
    for (std::size_t r = 1; r <= max_r; ++r) {
        const auto decomps = orth_decompositions(s, r);
        if (decomps.empty()) break;
        for (const auto& dec : decomps) {
            // Injective assignments parts[i] -> permutation chosen[i].
            std::vector<std::size_t> chosen;
            std::vector<bool> used(perms.size(), false);
            auto assign = [&](auto&& self) -> void {
                if (chosen.size() == r) {
                    Matrix sum = ms.zero(), sum_t = ms.zero();
                    for (std::size_t i = 0; i < r; ++i) {
                        sum = ms.add(sum, ms.scale(dec.parts[i], pmats[chosen[i]]));
                        sum_t = ms.add(sum_t, ms.scale(dec.parts[i], ms.transpose(pmats[chosen[i]])));
                    }
                    for_each_unit_diagonal(us, k, [&](const std::vector<Elem>& d) {
                        std::vector<Elem> dinv(k);
                        for (std::size_t i = 0; i < k; ++i) dinv[i] = *us.inverse[d[i]];
                        pairs.emplace_back(ms.mul(ms.diag(d), sum), ms.mul(sum_t, ms.diag(dinv)));
                    });
                    return;
                }
                for (std::size_t q = 0; q < perms.size(); ++q) {
                    if (used[q]) continue;
                    used[q] = true;
                    chosen.push_back(q);
                    self(self);
                    chosen.pop_back();
                    used[q] = false;
                }
            };
            assign(assign);
        }
    }
    return finish(ms, std::move(pairs), UnitProvenance::theorem1);
}

MatrixUnitSet matrix_units_brute_force(const SemiringTable& s, std::size_t k, std::uint64_t guard) {
    const MatrixSemiring ms(s, k);
    const std::uint64_t total = ms.cardinality();
    if (total > guard)
        throw GuardExceeded("brute-force unit search over " + std::to_string(total) +
                            " matrices exceeds guard " + std::to_string(guard));
    std::vector<Matrix> all;
    all.reserve(total);
    for (VertexId id = 0; id < total; ++id) all.push_back(ms.decode(id));
    const Matrix id = ms.identity();
    std::vector<std::pair<Matrix, Matrix>> pairs;
    for (const Matrix& a : all)
        for (const Matrix& b : all)
            if (ms.mul(a, b) == id && ms.mul(b, a) == id) {
                pairs.emplace_back(a, b);
                break;
            }
    return finish(ms, std::move(pairs), UnitProvenance::brute_force);
}

MatrixUnitSet matrix_units(const SemiringTable& s, std::size_t k, const UnitOptions& opts) {
    const SemiringProfile p = profile(s);
    if (opts.prefer_theorem1 && p.commutative && p.antinegative) return matrix_units_theorem1(s, k);
    return matrix_units_brute_force(s, k, opts.brute_force_guard);
}

std::optional<Matrix> is_invertible(const SemiringTable& s, const Matrix& a, const UnitOptions& opts) {
    const MatrixSemiring ms(s, a.k);
    const MatrixUnitSet us = matrix_units(s, a.k, opts);
    const VertexId target = ms.encode(a);
    auto it = std::lower_bound(us.elements.begin(), us.elements.end(), target,
                               [&](const Matrix& m, VertexId t) { return ms.encode(m) < t; });
    if (it == us.elements.end() || *it != a) return std::nullopt;
    return us.inverses[static_cast<std::size_t>(it - us.elements.begin())];
}

}  // namespace ucg
