#include "wdl/lattice.hpp"

#include <algorithm>
#include <unordered_map>

#include "wdl/error.hpp"

namespace wdl {

namespace {

void check_cap(std::size_t n, std::size_t cap) {
  const std::size_t limit = std::min(cap, kMaxCarrier);
  if (n > limit) {
    throw Error(ErrorKind::SizeCapExceeded, std::to_string(n) + " elements exceed cap " +
                                                std::to_string(limit));
  }
}

}  // namespace

BoundedLattice BoundedLattice::from_order(std::vector<std::string> names,
                                          std::vector<std::vector<bool>> leq,
                                          std::size_t cap) {
  const std::size_t n = names.size();
  check_cap(n, cap);
  if (leq.size() != n) throw Error(ErrorKind::InvalidSpec, "order matrix has wrong size");
  for (const auto& row : leq) {
    if (row.size() != n) throw Error(ErrorKind::InvalidSpec, "order matrix has wrong size");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!leq[i][i]) throw Error(ErrorKind::NotAPoset, "order is not reflexive at " + names[i]);
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && leq[i][j] && leq[j][i]) {
        throw Error(ErrorKind::NotAPoset, "antisymmetry fails for " + names[i] + ", " + names[j]);
      }
      for (std::size_t k = 0; k < n; ++k) {
        if (leq[i][j] && leq[j][k] && !leq[i][k]) {
          throw Error(ErrorKind::NotAPoset, "transitivity fails at " + names[i] + " <= " +
                                                names[j] + " <= " + names[k]);
        }
      }
    }
  }

  BoundedLattice l;
  l.names_ = std::move(names);
  l.leq_.assign(n * n, false);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) l.leq_[i * n + j] = leq[i][j];

  std::optional<Elem> bottom;
  std::optional<Elem> top;
  for (Elem i = 0; i < n; ++i) {
    bool below_all = true;
    bool above_all = true;
    for (Elem j = 0; j < n; ++j) {
      below_all = below_all && leq[i][j];
      above_all = above_all && leq[j][i];
    }
    if (below_all) bottom = i;
    if (above_all) top = i;
  }
  if (!bottom) throw Error(ErrorKind::NotBounded, "no least element");
  if (!top) throw Error(ErrorKind::NotBounded, "no greatest element");
  l.bottom_ = *bottom;
  l.top_ = *top;

  l.meet_.assign(n * n, 0);
  l.join_.assign(n * n, 0);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      std::optional<Elem> glb;
      std::optional<Elem> lub;
      for (Elem c = 0; c < n; ++c) {
        if (leq[c][a] && leq[c][b]) {
          bool greatest = true;
          for (Elem d = 0; d < n && greatest; ++d) {
            if (leq[d][a] && leq[d][b] && !leq[d][c]) greatest = false;
          }
          if (greatest) glb = c;
        }
        if (leq[a][c] && leq[b][c]) {
          bool least = true;
          for (Elem d = 0; d < n && least; ++d) {
            if (leq[a][d] && leq[b][d] && !leq[c][d]) least = false;
          }
          if (least) lub = c;
        }
      }
      if (!glb) {
        throw Error(ErrorKind::NotALattice,
                    "no meet for " + l.names_[a] + ", " + l.names_[b]);
      }
      if (!lub) {
        throw Error(ErrorKind::NotALattice,
                    "no join for " + l.names_[a] + ", " + l.names_[b]);
      }
      l.meet_[a * n + b] = *glb;
      l.join_[a * n + b] = *lub;
    }
  }
  return l;
}

Elem BoundedLattice::index(const std::string& name) const {
  if (auto e = find(name)) return *e;
  throw Error(ErrorKind::UnknownElement, "'" + name + "'");
}

std::optional<Elem> BoundedLattice::find(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<Elem>(it - names_.begin());
}

std::vector<std::pair<Elem, Elem>> BoundedLattice::covers() const {
  std::vector<std::pair<Elem, Elem>> out;
  const auto n = static_cast<Elem>(size());
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (!lt(a, b)) continue;
      bool cover = true;
      for (Elem c = 0; c < n && cover; ++c) {
        if (lt(a, c) && lt(c, b)) cover = false;
      }
      if (cover) out.emplace_back(a, b);
    }
  }
  return out;
}

ElementSet BoundedLattice::atoms() const {
  ElementSet out(size());
  for (auto [lo, hi] : covers()) {
    if (lo == bottom_) out.insert(hi);
  }
  return out;
}

LatticeSpec BoundedLattice::to_spec() const {
  LatticeSpec spec;
  spec.elements = names_;
  for (auto [lo, hi] : covers()) spec.covers.emplace_back(names_[lo], names_[hi]);
  return spec;
}

BoundedLattice build_lattice(const LatticeSpec& spec, std::size_t cap) {
  const std::size_t n = spec.elements.size();
  check_cap(n, cap);
  std::unordered_map<std::string, Elem> index;
  for (Elem i = 0; i < n; ++i) {
    if (!index.emplace(spec.elements[i], i).second) {
      throw Error(ErrorKind::InvalidSpec, "duplicate element '" + spec.elements[i] + "'");
    }
  }
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) leq[i][i] = true;
  for (const auto& [lo, hi] : spec.covers) {
    auto a = index.find(lo);
    auto b = index.find(hi);
    if (a == index.end()) throw Error(ErrorKind::UnknownElement, "'" + lo + "' in cover");
    if (b == index.end()) throw Error(ErrorKind::UnknownElement, "'" + hi + "' in cover");
    if (a->second == b->second) {
      throw Error(ErrorKind::NotAPoset, "cover " + lo + " < " + hi + " is a loop");
    }
    leq[a->second][b->second] = true;
  }
  // Warshall closure.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (leq[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (leq[k][j]) leq[i][j] = true;
  return BoundedLattice::from_order(spec.elements, std::move(leq), cap);
}

std::optional<std::vector<Elem>> distributivity_witness(const BoundedLattice& l) {
  const auto n = static_cast<Elem>(l.size());
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z)))
          return std::vector<Elem>{x, y, z};
  return std::nullopt;
}

bool is_distributive(const BoundedLattice& l) { return !distributivity_witness(l); }

BoundedLattice dualize(const BoundedLattice& l) {
  const std::size_t n = l.size();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) leq[a][b] = l.leq(b, a);
  return BoundedLattice::from_order(l.names(), std::move(leq));
}

BoundedLattice direct_power(const BoundedLattice& l, std::size_t exponent, std::size_t cap) {
  if (exponent == 0) throw Error(ErrorKind::InvalidSpec, "exponent must be positive");
  const std::size_t base = l.size();
  const std::size_t limit = std::min(cap, kMaxCarrier);
  std::size_t total = 1;
  for (std::size_t i = 0; i < exponent && total <= limit; ++i) total *= base;
  check_cap(total, cap);

  // Tuple k has coordinate i equal to digit i (most significant first) in base |L|.
  auto coord = [&](std::size_t k, std::size_t i) {
    std::size_t shift = exponent - 1 - i;
    for (std::size_t s = 0; s < shift; ++s) k /= base;
    return static_cast<Elem>(k % base);
  };
  std::vector<std::string> names(total);
  for (std::size_t k = 0; k < total; ++k) {
    if (exponent == 1) {
      names[k] = l.name(static_cast<Elem>(k));
      continue;
    }
    std::string s = "(";
    for (std::size_t i = 0; i < exponent; ++i) {
      if (i) s += ",";
      s += l.name(coord(k, i));
    }
    names[k] = s + ")";
  }
  std::vector<std::vector<bool>> leq(total, std::vector<bool>(total, true));
  for (std::size_t a = 0; a < total; ++a)
    for (std::size_t b = 0; b < total; ++b)
      for (std::size_t i = 0; i < exponent && leq[a][b]; ++i)
        leq[a][b] = l.leq(coord(a, i), coord(b, i));
  return BoundedLattice::from_order(std::move(names), std::move(leq), cap);
}

ElementSet up_set(const BoundedLattice& l, Elem a) {
  if (a >= l.size()) throw Error(ErrorKind::UnknownElement, "index " + std::to_string(a));
  ElementSet out(l.size());
  for (Elem x = 0; x < l.size(); ++x)
    if (l.leq(a, x)) out.insert(x);
  return out;
}

ElementSet down_set(const BoundedLattice& l, Elem a) {
  if (a >= l.size()) throw Error(ErrorKind::UnknownElement, "index " + std::to_string(a));
  ElementSet out(l.size());
  for (Elem x = 0; x < l.size(); ++x)
    if (l.leq(x, a)) out.insert(x);
  return out;
}

BoundedLattice chain(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidSpec, "chain needs at least one element");
  LatticeSpec spec;
  if (n == 1) {
    spec.elements = {"0"};
  } else {
    spec.elements.push_back("0");
    for (std::size_t i = 1; i + 1 < n; ++i) spec.elements.push_back("c" + std::to_string(i));
    spec.elements.push_back("1");
    for (std::size_t i = 0; i + 1 < n; ++i)
      spec.covers.emplace_back(spec.elements[i], spec.elements[i + 1]);
  }
  return build_lattice(spec);
}

}  // namespace wdl
