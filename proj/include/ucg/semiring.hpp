#pragma once

/**
 * @file semiring.hpp
 * @brief Finite semirings given by operation tables.
 *
 * Elements are dense indices 0..n-1. Names are carried along only so the
 * definition format and exports can print them; all arithmetic is a table
 * lookup.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ucg {

using Elem = std::uint32_t;

struct SemiringTable {
    std::string name;
    std::vector<std::string> elems;
    Elem zero = 0;
    Elem one = 0;
    std::vector<Elem> add_table;  // row-major n*n
    std::vector<Elem> mul_table;  // row-major n*n

    std::size_t size() const noexcept { return elems.size(); }
    Elem plus(Elem a, Elem b) const noexcept { return add_table[a * size() + b]; }
    Elem times(Elem a, Elem b) const noexcept { return mul_table[a * size() + b]; }

    /// Index of the element called `name`, if any.
    std::optional<Elem> find(std::string_view name) const;

    bool operator==(const SemiringTable&) const = default;
};

enum class Axiom {
    add_associative,
    add_commutative,
    add_identity,
    mul_associative,
    mul_identity,
    left_distributive,
    right_distributive,
    zero_annihilates,
};

std::string_view axiom_name(Axiom a);

struct AxiomViolation {
    Axiom axiom;
    std::vector<Elem> witness;

    std::string describe(const SemiringTable& s) const;
    bool operator==(const AxiomViolation&) const = default;
};

/// Checks the structure first (throws StructuralError on bad dimensions or
/// indices), then scans every axiom exhaustively. Returns all violations.
std::vector<AxiomViolation> validate(const SemiringTable& s);

/// Throws StructuralError unless validate(s) is empty.
void require_valid(const SemiringTable& s);

struct SemiringProfile {
    bool commutative = false;
    bool entire = false;
    bool antinegative = false;
    bool additively_cancellative = false;
    bool units_closed_under_addition = false;
    /// Minimal (m, n), m < n, with m*1 == n*1: minimal n first, then m.
    std::pair<std::uint64_t, std::uint64_t> one_index_period{1, 2};

    bool operator==(const SemiringProfile&) const = default;
};

SemiringProfile profile(const SemiringTable& s);

/// The group of units S* with its inverse map.
struct UnitSet {
    std::vector<Elem> members;              // ascending
    std::vector<std::optional<Elem>> inverse;  // indexed by element

    bool contains(Elem a) const { return inverse[a].has_value(); }
    std::size_t size() const noexcept { return members.size(); }
};

UnitSet units(const SemiringTable& s);

/// c*a, i.e. a added to itself c times (0*a = zero).
Elem multiple(const SemiringTable& s, std::uint64_t c, Elem a);

namespace builtin {

SemiringTable boolean();
/// {0..n} with min-truncated addition and multiplication.
SemiringTable trunc(unsigned n);
/// {0,1,..,r, x, 1+x, .., (r-1)+x} with x+x = x*x = x and r absorbing.
SemiringTable example_bounds(unsigned r);
/// The Boolean semiring with x adjoined, x*x = 0.
SemiringTable bool_x2();
SemiringTable zmod(unsigned n);
SemiringTable product(const SemiringTable& s, const SemiringTable& t);

/// Parses `boolean | trunc:<n> | bounds:<r> | boolx2 | zmod:<n> |
/// product:<spec>,<spec>`. Throws InvalidParameter.
SemiringTable from_spec(std::string_view spec);

/// Every builtin used by the test and acceptance suites, small parameters.
std::vector<SemiringTable> catalogue();

}  // namespace builtin

}  // namespace ucg
