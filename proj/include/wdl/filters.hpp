#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wdl/dicomplement.hpp"
#include "wdl/element_set.hpp"
#include "wdl/law_report.hpp"
#include "wdl/lattice.hpp"

namespace wdl {

/// Filters are plain element sets over the base lattice; `is_filter` holds.
using Filter = ElementSet;

/// "{a,1}" with members in index order.
std::string format_set(const BoundedLattice& lattice, const ElementSet& set);

/// Nonempty, contains top, upward closed, closed under ∧.
bool is_filter(const BoundedLattice& lattice, const ElementSet& set);

/// [X): close X under ∧, then upward. Throws EmptyGenerator, BaseMismatch.
Filter filter_generated(const BoundedLattice& lattice, const ElementSet& generators);

/// {x | ∃g∈G, f∈F, g∧f ≤ x}. Throws BaseMismatch unless both are filters of `lattice`.
Filter filter_join(const BoundedLattice& lattice, const Filter& f, const Filter& g);

inline constexpr std::size_t kDefaultFilterCap = 24;

/// Every filter, by size then bitmask. Throws SizeCapExceeded.
std::vector<Filter> all_filters(const BoundedLattice& lattice, std::size_t cap = kDefaultFilterCap);

/// X★ = {a | ∀x∈X, x^Δ ≤ a}. Any subset is accepted.
Filter star(const Dicomplementation& d, const ElementSet& x);
/// X⁺ = {x | ∀a∈X, x ∨ a = 1}.
ElementSet plus(const BoundedLattice& lattice, const ElementSet& x);
/// {x ∈ S̄(L) | ∀g∈G, g^Δ ≤ x}. Throws NotInSkeleton unless G ⊆ S̄(L).
ElementSet star_bar(const Dicomplementation& d, const ElementSet& g);

/// F(L) under inclusion, materialized as a lattice whose element i is
/// `filters()[i]`, together with ★ and, where it stays inside F(L), ⁺.
class FilterLattice {
 public:
  FilterLattice(const Dicomplementation& d, std::size_t cap = kDefaultFilterCap);

  const BoundedLattice& base() const noexcept { return d_.base(); }
  const Dicomplementation& source() const noexcept { return d_; }
  const std::vector<Filter>& filters() const noexcept { return filters_; }
  const BoundedLattice& lattice() const noexcept { return lattice_; }
  std::size_t size() const noexcept { return filters_.size(); }

  std::optional<Elem> index_of(const ElementSet& f) const;
  /// Throws NotAFilter.
  Elem at(const ElementSet& f) const;

  /// Present when Δ is.
  const std::optional<UnaryTable>& star_table() const noexcept { return star_; }
  /// Present when F⁺ is a filter for every F (always, for distributive L).
  const std::optional<UnaryTable>& plus_table() const noexcept { return plus_; }

 private:
  Dicomplementation d_;
  std::vector<Filter> filters_;
  BoundedLattice lattice_;
  std::optional<UnaryTable> star_;
  std::optional<UnaryTable> plus_;
};

inline FilterLattice enumerate_filters(const Dicomplementation& d,
                                       std::size_t cap = kDefaultFilterCap) {
  return FilterLattice(d, cap);
}

struct FilterAlgebra {
  FilterLattice filters;
  /// F(L) with ★ as its ∇ table.
  Dicomplementation algebra;
  LawReport laws;
};

/// (F(L); ∩, ∨, ★, {1}, L) as a dual weakly complemented lattice, with the
/// closure lemma, the dense filters and the skeleton ortholattice checked.
/// Law ids: "1'", "2'", "3'", "STAR-filter", "STAR-antitone", "STAR-extensive",
/// "STAR-triple", "STAR-closure-monotone", "STAR-closure-idempotent",
/// "STAR-top", "STAR-bottom", "STAR-generated", "STAR-sqcap-closed",
/// "JOIN-generated", "FL-D-..." (dense filters), "SF-join", "SF-O-..." (skeleton).
/// Throws MissingUnary.
FilterAlgebra filter_lattice_dual_wcl(const Dicomplementation& d,
                                      std::size_t cap = kDefaultFilterCap);

/// (★): x ∨ y = 1 ⇒ x^Δ ≤ y. The first failing pair, if any.
std::optional<std::pair<Elem, Elem>> condition_star_witness(const Dicomplementation& d);
inline bool condition_star_holds(const Dicomplementation& d) {
  return !condition_star_witness(d).has_value();
}

/// For distributive L: F⁺ is a filter and the pseudocomplement of F in F(L),
/// and F(L) is distributive; when (★) also holds, F★ = F⁺.
/// Law ids: "PC-plus-filter", "PC-pseudocomplement", "PC-distributive", "PC-star-plus".
LawReport pseudocomplement_checks(const Dicomplementation& d,
                                  std::size_t cap = kDefaultFilterCap);

/// η: a ↦ [a) as a dual isomorphism onto the principal filters, and
/// Λ(L) = {[a)★} as an ortholattice dually isomorphic to S̄(L).
/// Law ids: "ETA-join", "ETA-meet", "ETA-delta", "ETA-injective", "ETA-onto",
/// "ETA-antitone", "LAMBDA-skeleton", "LAMBDA-bijection", "LAMBDA-sqcap",
/// "LAMBDA-ortho".
LawReport principal_dual_iso(const Dicomplementation& d, std::size_t cap = kDefaultFilterCap);

}  // namespace wdl
