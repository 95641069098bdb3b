#pragma once

/**
 * @file matrix.hpp
 * @brief The matrix semiring M_k(S) over a finite SemiringTable.
 *
 * Vertex-id encoding (stable, used by every graph export): a matrix is the
 * base-|S| integer whose digits are its entries in row-major order, entry
 * (0,0) being the most significant digit.
 */

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ucg/semiring.hpp"

namespace ucg {

using VertexId = std::uint64_t;

struct Matrix {
    std::size_t k = 0;
    std::vector<Elem> entries;  // row-major k*k

    Elem at(std::size_t i, std::size_t j) const { return entries[i * k + j]; }
    Elem& at(std::size_t i, std::size_t j) { return entries[i * k + j]; }

    bool operator==(const Matrix&) const = default;
    auto operator<=>(const Matrix&) const = default;
};

struct MatrixHash {
    std::size_t operator()(const Matrix& m) const noexcept;
};

/// Arithmetic in M_k(S). Holds a reference to the base table, which must
/// outlive it.
class MatrixSemiring {
public:
    MatrixSemiring(const SemiringTable& base, std::size_t k);

    const SemiringTable& base() const noexcept { return *base_; }
    std::size_t dim() const noexcept { return k_; }
    /// |S|^(k*k); throws GuardExceeded if it does not fit in 64 bits.
    std::uint64_t cardinality() const;

    Matrix zero() const;
    Matrix identity() const;
    /// 1 at (i, j), zero elsewhere. 0-based.
    Matrix e_ij(std::size_t i, std::size_t j) const;
    /// (P)_{i,sigma(i)} = 1. `sigma` is a 0-based permutation of 0..k-1.
    Matrix perm_matrix(std::span<const std::size_t> sigma) const;
    Matrix diag(std::span<const Elem> d) const;
    /// Every entry equal to `a`.
    Matrix constant(Elem a) const;
    /// a * M, entrywise left scalar multiple.
    Matrix scale(Elem a, const Matrix& m) const;

    Matrix add(const Matrix& a, const Matrix& b) const;
    Matrix mul(const Matrix& a, const Matrix& b) const;
    Matrix transpose(const Matrix& a) const;

    VertexId encode(const Matrix& m) const;
    Matrix decode(VertexId id) const;
    std::string label(const Matrix& m) const;

private:
    void check(const Matrix& m) const;

    const SemiringTable* base_;
    std::size_t k_;
};

/// The full cycle (0 1 ... k-1) raised to `power`, as a 0-based map.
std::vector<std::size_t> cycle_power(std::size_t k, std::size_t power);

/// All permutations of 0..k-1 in lexicographic order.
std::vector<std::vector<std::size_t>> permutations(std::size_t k);

struct OrthDecomposition {
    std::vector<Elem> parts;  // sorted ascending

    bool operator==(const OrthDecomposition&) const = default;
};

/// All r-multisets of nonzero elements, pairwise products zero, summing to
/// one. r = 1 always yields {one}.
std::vector<OrthDecomposition> orth_decompositions(const SemiringTable& s, std::size_t r);

enum class UnitProvenance { theorem1, brute_force };

struct MatrixUnitSet {
    std::vector<Matrix> elements;  // sorted by vertex id
    std::vector<Matrix> inverses;  // parallel to elements
    UnitProvenance provenance = UnitProvenance::brute_force;

    std::size_t size() const noexcept { return elements.size(); }
};

struct UnitOptions {
    /// Brute force only runs when |S|^(k*k) is at most this.
    std::uint64_t brute_force_guard = std::uint64_t{1} << 16;
    /// Take the matrix_units_theorem1 route whenever the base is a
    /// commutative antiring.
    bool prefer_theorem1 = true;
};

/// Units of M_k(S) as D * sum(a_sigma P_sigma), D an invertible diagonal and
/// the a_sigma an orthogonal decomposition of one. Requires a commutative
/// antiring; throws HypothesisViolation otherwise.
MatrixUnitSet matrix_units_theorem1(const SemiringTable& s, std::size_t k);
/// Units of M_k(S) by exhaustive pair search. Throws GuardExceeded.
MatrixUnitSet matrix_units_brute_force(const SemiringTable& s, std::size_t k,
                                       std::uint64_t guard = std::uint64_t{1} << 16);
MatrixUnitSet matrix_units(const SemiringTable& s, std::size_t k, const UnitOptions& opts = {});

/// The inverse of `a` if it is a unit, else nullopt.
std::optional<Matrix> is_invertible(const SemiringTable& s, const Matrix& a,
                                    const UnitOptions& opts = {});

}  // namespace ucg
