#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "wdl/element_set.hpp"
#include "wdl/law_report.hpp"
#include "wdl/lattice.hpp"

namespace wdl {

/// A unary operation given by its value on every element index.
using UnaryTable = std::vector<Elem>;

/// A bounded lattice carrying a weak complementation Δ, a dual weak
/// complementation ∇, or both. The Δ-only reduct is a weakly complemented
/// lattice (WCL), the ∇-only reduct a dual WCL.
class Dicomplementation {
 public:
  /// Wraps tables without checking the axioms. Table sizes and ranges are
  /// still checked (InvalidSpec). Used for mutation tests and for reports
  /// that must describe invalid inputs instead of throwing.
  static Dicomplementation unchecked(BoundedLattice base, std::optional<UnaryTable> delta,
                                     std::optional<UnaryTable> nabla);

  const BoundedLattice& base() const noexcept { return *base_; }
  std::size_t size() const noexcept { return base_->size(); }

  bool has_delta() const noexcept { return delta_.has_value(); }
  bool has_nabla() const noexcept { return nabla_.has_value(); }
  const std::optional<UnaryTable>& delta_table() const noexcept { return delta_; }
  const std::optional<UnaryTable>& nabla_table() const noexcept { return nabla_; }

  /// Throw MissingUnary when the table is absent.
  Elem delta(Elem x) const;
  Elem nabla(Elem x) const;

  /// x^ΔΔ, the interior operator.
  Elem interior(Elem x) const { return delta(delta(x)); }
  /// x^∇∇, the closure operator.
  Elem closure(Elem x) const { return nabla(nabla(x)); }

  /// (x^∇ ∧ y^∇)^∇
  Elem sqcup(Elem x, Elem y) const;
  /// (x^Δ ∨ y^Δ)^Δ
  Elem sqcap_bar(Elem x, Elem y) const;
  /// (x ∨ y)^ΔΔ
  Elem under_sqcup(Elem x, Elem y) const;

  /// Keeps only the Δ table (the WCL reduct).
  Dicomplementation delta_reduct() const;
  Dicomplementation nabla_reduct() const;

  friend bool operator==(const Dicomplementation& a, const Dicomplementation& b) {
    return *a.base_ == *b.base_ && a.delta_ == b.delta_ && a.nabla_ == b.nabla_;
  }

 private:
  Dicomplementation() = default;

  std::shared_ptr<const BoundedLattice> base_;
  std::optional<UnaryTable> delta_;
  std::optional<UnaryTable> nabla_;
};

/// Attaches tables and checks every instance of the axioms
/// (1)–(3) for Δ, (1′)–(3′) for ∇ and x^∇ ≤ x^Δ when both are present.
/// Throws AxiomViolation naming the first falsifying instance, or
/// MissingUnary when neither table is given.
Dicomplementation attach(BoundedLattice base, std::optional<UnaryTable> delta,
                         std::optional<UnaryTable> nabla);

/// Tables given as (input, output) name rows; every element must appear once.
Dicomplementation attach_rows(BoundedLattice base, const std::optional<UnaryRows>& delta,
                              const std::optional<UnaryRows>& nabla);

/// Axiom outcomes with ids "1", "2", "3", "1'", "2'", "3'", "9'b".
LawReport axiom_report(const Dicomplementation& d);

/// a^Δ = 1 for a ≠ 1, 1^Δ = 0; a^∇ = 0 for a ≠ 0, 0^∇ = 1.
Dicomplementation trivial_dicomplementation(const BoundedLattice& base);

/// The complement of each element when `base` is Boolean.
std::optional<UnaryTable> boolean_complement(const BoundedLattice& base);
/// Δ = ∇ = complement. Throws NotBoolean.
Dicomplementation boolean_dicomplementation(const BoundedLattice& base);

struct DerivedOps {
  std::optional<Elem> sqcup;
  std::optional<Elem> sqcap_bar;
  std::optional<Elem> under_sqcup;
};

/// All derived operations computable from the tables present.
DerivedOps derived_ops(const Dicomplementation& d, Elem x, Elem y);

/// Fixed points of x ↦ x^∇∇. Throws MissingUnary.
ElementSet skeleton(const Dicomplementation& d);
/// Fixed points of x ↦ x^ΔΔ. Throws MissingUnary.
ElementSet dual_skeleton(const Dicomplementation& d);

enum class SkeletonSide {
  Closed,    // (S(L); ∧, ⊔, ∇)
  Interior,  // (S̄(L); ⊓̄, ∨, Δ)
};

/// Ortholattice carried by a skeleton. Operations are indexed by the base
/// lattice's element indices and are only meaningful on `carrier()`.
class SkeletonAlgebra {
 public:
  SkeletonAlgebra(const Dicomplementation& d, SkeletonSide side);

  SkeletonSide side() const noexcept { return side_; }
  const BoundedLattice& base() const noexcept { return *base_; }
  const ElementSet& carrier() const noexcept { return carrier_; }

  bool leq(Elem a, Elem b) const { return base_->leq(a, b); }
  Elem meet(Elem a, Elem b) const { return meet_[a * base_->size() + b]; }
  Elem join(Elem a, Elem b) const { return join_[a * base_->size() + b]; }
  Elem complement(Elem a) const { return complement_[a]; }
  Elem bottom() const noexcept { return base_->bottom(); }
  Elem top() const noexcept { return base_->top(); }

  /// The carrier as a lattice in its own right (names kept, order restricted).
  BoundedLattice as_lattice() const;

 private:
  SkeletonSide side_;
  std::shared_ptr<const BoundedLattice> base_;
  ElementSet carrier_;
  std::vector<Elem> meet_;
  std::vector<Elem> join_;
  std::vector<Elem> complement_;
};

/// Lattice and orthocomplement laws evaluated with the algebra's own operations.
LawReport ortholattice_report(const SkeletonAlgebra& algebra);

/// Builds the algebra and validates it; throws OrtholawViolation (which can
/// only happen on an invalid input dicomplementation) or MissingUnary.
SkeletonAlgebra skeleton_algebra(const Dicomplementation& d, SkeletonSide side);

/// D(L) = {x | x^∇ = 0}; throws MissingUnary.
ElementSet dense_set(const Dicomplementation& d);
/// D̄(L) = {x | x^Δ = 1}; throws MissingUnary.
ElementSet codense_set(const Dicomplementation& d);

struct NearlatticeReport {
  std::optional<ElementSet> dense;
  std::optional<ElementSet> codense;
  bool dense_has_least = false;
  bool codense_has_greatest = false;
  LawReport laws;
};

/// Checks the (dual) nearlattice structure of the dense and codense sets
/// for whichever tables are present.
NearlatticeReport nearlattice_check(const Dicomplementation& d);

/// Exhaustively evaluates the standard identities of weak dicomplementations
/// and the monotonicity remarks on the derived operations. Law ids:
/// "P2.2-4".."P2.2-9", "P2.2-4'".."P2.2-9'a", "P2.2-9'b", "R2.3-1i".."R2.3-6ii",
/// "CL-delta", "CL-nabla", "IDEM-delta", "IDEM-nabla".
LawReport check_identities(const Dicomplementation& d);

enum class EnumerationSide { Delta, Nabla, Both };

inline constexpr std::size_t kDefaultEnumerationCap = 6;

/// Every table satisfying the requested axioms, in lexicographic order of
/// the table (Δ first, then ∇ for `Both`). Throws SizeCapExceeded.
std::vector<Dicomplementation> enumerate_dicomplementations(
    const BoundedLattice& base, EnumerationSide side,
    std::size_t cap = kDefaultEnumerationCap);

}  // namespace wdl
