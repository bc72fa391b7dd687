#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wdl/element_set.hpp"

namespace wdl {

using UnaryRows = std::vector<std::pair<std::string, std::string>>;

/// Textual description of a finite bounded lattice by its cover relation,
/// optionally carrying unary tables as (input, output) rows.
struct LatticeSpec {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> covers;  // (lower, upper)
  std::optional<UnaryRows> delta;
  std::optional<UnaryRows> nabla;

  friend bool operator==(const LatticeSpec&, const LatticeSpec&) = default;
};

inline constexpr std::size_t kDefaultLatticeCap = 64;

/// Finite bounded lattice with the full order matrix and eagerly computed
/// meet/join tables. Immutable once built.
class BoundedLattice {
 public:
  /// Validates `leq` as a bounded lattice order and tabulates meet/join.
  /// Throws NotAPoset, NotBounded or NotALattice.
  static BoundedLattice from_order(std::vector<std::string> names,
                                   std::vector<std::vector<bool>> leq,
                                   std::size_t cap = kDefaultLatticeCap);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(Elem e) const { return names_.at(e); }
  /// Throws UnknownElement.
  Elem index(const std::string& name) const;
  std::optional<Elem> find(const std::string& name) const;

  bool leq(Elem a, Elem b) const { return leq_[a * size() + b]; }
  bool lt(Elem a, Elem b) const { return a != b && leq(a, b); }
  Elem meet(Elem a, Elem b) const { return meet_[a * size() + b]; }
  Elem join(Elem a, Elem b) const { return join_[a * size() + b]; }
  Elem bottom() const noexcept { return bottom_; }
  Elem top() const noexcept { return top_; }

  ElementSet all() const { return ElementSet::full(size()); }
  /// Transitive reduction of the order, sorted by (lower, upper) index.
  std::vector<std::pair<Elem, Elem>> covers() const;
  /// Elements covering bottom.
  ElementSet atoms() const;
  LatticeSpec to_spec() const;

  friend bool operator==(const BoundedLattice&, const BoundedLattice&) = default;

 private:
  BoundedLattice() = default;

  std::vector<std::string> names_;
  std::vector<bool> leq_;
  std::vector<Elem> meet_;
  std::vector<Elem> join_;
  Elem bottom_ = 0;
  Elem top_ = 0;
};

/// Builds a lattice from covers (reflexive-transitive closure).
/// Throws InvalidSpec, UnknownElement, SizeCapExceeded, NotAPoset,
/// NotBounded, NotALattice.
BoundedLattice build_lattice(const LatticeSpec& spec,
                             std::size_t cap = kDefaultLatticeCap);

bool is_distributive(const BoundedLattice& lattice);
/// First (x, y, z) with x∧(y∨z) ≠ (x∧y)∨(x∧z), if any.
std::optional<std::vector<Elem>> distributivity_witness(const BoundedLattice& lattice);

BoundedLattice dualize(const BoundedLattice& lattice);

/// Componentwise order on n-tuples; names are "(x,y,...)" for n ≥ 2.
BoundedLattice direct_power(const BoundedLattice& lattice, std::size_t exponent,
                            std::size_t cap = kDefaultLatticeCap);

/// {x | a ≤ x}.
ElementSet up_set(const BoundedLattice& lattice, Elem a);
ElementSet down_set(const BoundedLattice& lattice, Elem a);

/// Chain 0 < 1 < ... < n-1 with names "0", "c1", ..., "1" (n ≥ 2), or "0" for n = 1.
BoundedLattice chain(std::size_t n);

}  // namespace wdl
