#pragma once

#include <string>

#include "wdl/dicomplement.hpp"
#include "wdl/error.hpp"

namespace wdl::detail {

inline void require_universe(const BoundedLattice& l, const ElementSet& s) {
  if (s.universe() != l.size()) {
    throw Error(ErrorKind::BaseMismatch, "set over a universe of size " +
                                             std::to_string(s.universe()) + ", expected " +
                                             std::to_string(l.size()));
  }
}

inline void require_delta(const Dicomplementation& d) {
  if (!d.has_delta()) throw Error(ErrorKind::MissingUnary, "operation needs a delta table");
}

}  // namespace wdl::detail
