#pragma once

#include "wdl/sfilters.hpp"

namespace wdl {

enum class FilterUniverse {
  Lattice,   // filters of L
  Skeleton,  // filters of (S̄(L); ⊓̄, ∨)
};

struct FilterClassification {
  Filter filter;
  FilterUniverse universe = FilterUniverse::Lattice;
  bool is_prime = false;    // x ∨ y ∈ F ⇒ x ∈ F or y ∈ F
  bool is_primary = false;  // x ∈ F or x^Δ ∈ F
  bool is_maximal = false;  // maximal among the proper filters of the universe
  bool is_proper = false;   // 0 ∉ F
};

/// Quantifiers range over the chosen universe. Throws UniverseMismatch when
/// `f` is not a filter of that universe.
FilterClassification classify(const Dicomplementation& d, const ElementSet& f, FilterUniverse universe,
                              std::size_t cap = kDefaultFilterCap);

/// The spectral statements over every filter of L, of S̄(L) and every S-filter.
/// Ids: "P5-prime-primary", "P5-prime-s-maximal", "P5-primary-s-maximal",
/// "T5-1", "T5-2", "T5-3", "P5-max-correspondence", "P5-primary-trace",
/// "P5-extend", "R5-principal-maximal", "R5-s-principal-maximal" (a ∈ S̄(L)),
/// "R5-s-principal-maximal-all" (a finding when it fails).
LawReport verify_spectral_theorems(const Dicomplementation& d, std::size_t cap = kDefaultFilterCap);

/// A proper primary S-filter containing `f`. Extends trace(f) one skeleton
/// element at a time, always trying the smallest index first, up to a maximal
/// skeleton filter E, and returns F_E. When F_E is not primary (possible when
/// S̄(L) is not distributive), returns the first proper primary S-filter
/// containing `f` in size-then-bitmask order.
/// Throws NotProper, NotSFilter, NoPrimaryExtension.
SFilter extend_to_primary(const Dicomplementation& d, const SFilter& f,
                          std::size_t cap = kDefaultFilterCap);

}  // namespace wdl
