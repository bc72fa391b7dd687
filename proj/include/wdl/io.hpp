#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "wdl/dicomplement.hpp"
#include "wdl/lattice.hpp"

namespace wdl {

/// Parses the line-oriented lattice format:
///
///   # comment
///   elements: 0 u v a b 1
///   cover: 0 u
///   delta: a b
///   nabla: a 0
///
/// Throws SyntaxError, DuplicateDeclaration, UnknownElementInCover.
LatticeSpec parse(std::string_view text);

/// Inverse of parse: elements, covers, delta rows, nabla rows, in that order.
std::string serialize(const LatticeSpec& spec);

/// Builds the lattice and attaches whichever tables the spec carries.
/// Throws MissingUnary if the spec has no tables.
Dicomplementation load_dicomplementation(const LatticeSpec& spec,
                                         std::size_t cap = kDefaultLatticeCap);

/// Names accepted by builtin(): L6, L7, B2, B4, B8, L6-trivial and
/// chain-<n>-trivial for n ≥ 1.
std::vector<std::string> builtin_names();
Dicomplementation builtin(const std::string& name);
LatticeSpec builtin_spec(const std::string& name);

/// The bare lattices of the L6 and L7 examples.
BoundedLattice l6_lattice();
BoundedLattice l7_lattice();
/// The five-element diamond.
BoundedLattice m3_lattice();
/// The five-element pentagon.
BoundedLattice n5_lattice();

}  // namespace wdl
