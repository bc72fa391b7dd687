#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wdl/sfilters.hpp"

namespace wdl {

/// A binary relation on {0, ..., n-1}.
class Relation {
 public:
  explicit Relation(std::size_t n) : n_(n), bits_(n * n, false) {}

  std::size_t universe() const noexcept { return n_; }
  bool contains(Elem x, Elem y) const { return bits_[x * n_ + y]; }
  void insert(Elem x, Elem y) { bits_[x * n_ + y] = true; }
  bool subset_of(const Relation& other) const;
  std::size_t size() const;

  /// {(x, z) | ∃y, (x, y) ∈ this, (y, z) ∈ other}.
  Relation compose(const Relation& other) const;

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::size_t n_;
  std::vector<bool> bits_;
};

/// An equivalence relation on the carrier, kept as a class index per
/// element. Class indices are normalized to first-occurrence order, so equal
/// partitions compare equal.
class Congruence {
 public:
  /// Throws MalformedPartition.
  static Congruence from_classes(std::vector<Elem> class_of);
  /// Blocks must be disjoint and cover {0..n-1}. Throws MalformedPartition.
  static Congruence from_blocks(std::size_t n, const std::vector<std::vector<Elem>>& blocks);
  /// Throws MalformedPartition unless `r` is an equivalence.
  static Congruence from_relation(const Relation& r);
  static Congruence diagonal(std::size_t n);
  static Congruence full(std::size_t n);

  std::size_t universe() const noexcept { return class_of_.size(); }
  const std::vector<Elem>& class_of() const noexcept { return class_of_; }
  bool related(Elem x, Elem y) const { return class_of_[x] == class_of_[y]; }
  std::size_t block_count() const noexcept { return block_count_; }
  /// Blocks ordered by least member.
  std::vector<ElementSet> blocks() const;
  ElementSet block_of(Elem x) const;
  Relation relation() const;

  /// θ ⊆ ψ as relations.
  bool refines(const Congruence& other) const;
  bool is_diagonal() const noexcept { return block_count_ == universe(); }
  bool is_full() const noexcept { return block_count_ <= 1; }

  friend bool operator==(const Congruence& a, const Congruence& b) { return a.class_of_ == b.class_of_; }

 private:
  Congruence() = default;

  std::vector<Elem> class_of_;
  std::size_t block_count_ = 0;
};

/// Blocks in set notation, concatenated: "{0,u}{v,a}{b,1}".
std::string format_partition(const BoundedLattice& lattice, const Congruence& c);
/// Blocks as element names, in block order.
std::vector<std::vector<std::string>> block_names(const BoundedLattice& lattice, const Congruence& c);
/// Parses blocks of names. Throws UnknownElement, MalformedPartition.
Congruence partition_from_names(const BoundedLattice& lattice,
                                const std::vector<std::vector<std::string>>& blocks);

struct CompatibilityViolation {
  std::string operation;  // "meet", "join" or "delta"
  std::vector<std::string> witness;  // x, y[, z]
};

/// First related pair (x, y), x < y, that some translation separates:
/// x∧z, then x∨z for ascending z, then x^Δ. Δ is skipped when absent.
std::optional<CompatibilityViolation> congruence_violation(const Dicomplementation& d, const Congruence& c);
inline bool is_congruence(const Dicomplementation& d, const Congruence& c) {
  return !congruence_violation(d, c).has_value();
}

/// Φ = {(a, b) | a^Δ = b^Δ}. Throws MissingUnary.
Congruence determination_congruence(const Dicomplementation& d);

/// θ_F = {(x, y) | ∃u∈F, x ∨ u^Δ = y ∨ u^Δ}. Throws NotDistributive, NotSFilter.
Congruence theta_from_filter(const Dicomplementation& d, const SFilter& f);

/// Least congruence containing (a, b).
Congruence principal_congruence(const Dicomplementation& d, Elem a, Elem b);
/// Transitive closure of the union.
Congruence congruence_join(const Congruence& a, const Congruence& b);
Congruence congruence_meet(const Congruence& a, const Congruence& b);

/// [1]_θ.
ElementSet cokernel(const BoundedLattice& lattice, const Congruence& c);

inline constexpr std::size_t kDefaultCongruenceCap = 12;

/// Con(L): the diagonal, the principal congruences and all their joins,
/// ordered by number of related pairs, then by class vector. Throws SizeCapExceeded.
std::vector<Congruence> enumerate_congruences(const Dicomplementation& d,
                                              std::size_t cap = kDefaultCongruenceCap);

/// θ_F ∨ Ψ = θ_F ∘ Ψ ∘ θ_F for every S-filter F and Ψ ∈ Con(L). Id "T6-join".
/// Empty for non-distributive L.
LawReport join_formula_check(const Dicomplementation& d, std::size_t cap = kDefaultCongruenceCap);
/// θ_F ∘ θ_G = θ_G ∘ θ_F for all S-filters. Id "T6-permute". Empty for non-distributive L.
LawReport permutability_check(const Dicomplementation& d, std::size_t cap = kDefaultCongruenceCap);

struct StructureReport {
  bool distributive = false;
  bool regular = false;
  bool simple = false;
  bool subdirectly_irreducible = false;
  bool phi_is_diagonal = false;
  LawReport laws;
};

/// Regularity, simplicity and subdirect irreducibility with the statements
/// relating them to Φ and SF(L). Throws MissingUnary, SizeCapExceeded.
///
/// Always: "CON-valid", "CON-distributive", "R6-cokernel-sfilter",
/// "R6-cokernel-generated", "R6-full", "T6-phi-congruence" (finding),
/// "T6-phi-skeleton", "T6-phi-zero-upper", "T6-phi-zero-class" (finding),
/// "T6-regular-converse", "T6-regular" (finding), "B-sdi".
/// When |S̄(L)| = 2: "R6-two-skeleton" (finding).
/// When Φ is a congruence: "T6-regular-forward".
/// When Φ = Δ: "T6-trivial-cokernel".
/// Distributive L: "T6-theta-congruence", "T6-theta-cokernel",
/// "T6-theta-least", "T6-theta-order", and when also Φ = Δ:
/// "T6-intersection", "T6-iso", "T6-sdi", "T6-simple".
StructureReport structure_checks(const Dicomplementation& d, std::size_t cap = kDefaultCongruenceCap);

}  // namespace wdl
