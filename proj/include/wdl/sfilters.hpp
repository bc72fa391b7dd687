#pragma once

#include <string>
#include <vector>

#include "wdl/filters.hpp"

namespace wdl {

/// An S-filter is a filter closed under ⊓̄.
using SFilter = Filter;

struct SConditions {
  bool dagger = false;          // x, y ∈ F ⇒ x ⊓̄ y ∈ F
  bool ddagger = false;         // F = F_G for G = F ∩ S̄(L), G a skeleton filter
  bool dagger_ddagger = false;  // F is the up-closure of some skeleton filter
  std::vector<std::string> dagger_witness;  // first (x, y) breaking (†)

  bool agree() const noexcept { return dagger == ddagger && ddagger == dagger_ddagger; }
};

/// Evaluates the three conditions independently. Throws NotAFilter.
SConditions s_conditions(const Dicomplementation& d, const Filter& f);

bool is_s_filter(const Dicomplementation& d, const ElementSet& f);

/// A filter of (S̄(L); ⊓̄, ∨): contains 1, upward closed inside S̄(L), closed under ⊓̄.
bool is_skeleton_filter(const Dicomplementation& d, const ElementSet& g);

/// Filters of S̄(L), by size then bitmask. Throws SizeCapExceeded.
std::vector<ElementSet> skeleton_filters(const Dicomplementation& d,
                                         std::size_t cap = kDefaultFilterCap);

/// F_G = {x | x^ΔΔ ∈ G}. Throws NotASkeletonFilter.
SFilter f_from_skeleton_filter(const Dicomplementation& d, const ElementSet& g);

/// F ∩ S̄(L).
ElementSet trace(const Dicomplementation& d, const ElementSet& f);

/// S[X): close X under ⊓̄, then upward. Throws EmptyGenerator.
SFilter s_filter_generated(const Dicomplementation& d, const ElementSet& generators);
/// F ⊻ G = S[F ∪ G). Throws NotSFilter.
SFilter s_join(const Dicomplementation& d, const SFilter& f, const SFilter& g);
/// S[a) = [a^ΔΔ).
SFilter s_principal(const Dicomplementation& d, Elem a);

/// SF(L), by size then bitmask.
std::vector<SFilter> enumerate_s_filters(const Dicomplementation& d,
                                         std::size_t cap = kDefaultFilterCap);

/// Laws of S[·) and ⊻. Ids: "SP-formula", "SP-bounds", "SP-complement-join",
/// "SP-complement-meet", "SP-meet" (a, b ∈ S̄(L)), "SP-meet-all" (a finding
/// when it fails), "SP-join", "SP-antitone", "SP-fixed", "SG-monotone", "SF-closed".
LawReport s_generation_checks(const Dicomplementation& d, std::size_t cap = kDefaultFilterCap);

/// φ: G ↦ F_G from F(S̄(L)) to SF(L). Ids: "PHI-injective", "PHI-order",
/// "PHI-image", "PHI-trace", "PHI-star", "PHI-closed", "TRACE-roundtrip",
/// "S-equivalence".
LawReport phi_iso_check(const Dicomplementation& d, std::size_t cap = kDefaultFilterCap);

/// SF_p(L) = {S[a)} with ∩, ⊻ and S[a)⊥ = S[a^Δ), against S̄(L). Ids:
/// "SFP-well-defined", "SFP-meet-closed", "SFP-join-closed", "SFP-join-lub",
/// "SFP-complement-meet", "SFP-complement-join", "SFP-involutive",
/// "SFP-antitone", "SFP-bijection", "SFP-hom-join", "SFP-hom-meet".
LawReport s_principal_ortholattice(const Dicomplementation& d);

}  // namespace wdl
