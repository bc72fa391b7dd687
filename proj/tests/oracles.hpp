#pragma once

// Brute-force reference computations used only by the tests. Nothing here
// calls into the library's algorithms beyond reading lattice tables, so the
// checks stay independent of the code paths they verify.

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "wdl/dicomplement.hpp"
#include "wdl/lattice.hpp"

namespace oracle {

using wdl::BoundedLattice;
using wdl::Elem;
using Matrix = std::vector<std::vector<bool>>;

/// Order relation by depth-first reachability over the cover pairs.
inline Matrix reachability(std::size_t n, const std::vector<std::pair<Elem, Elem>>& covers) {
  Matrix le(n, std::vector<bool>(n, false));
  for (Elem s = 0; s < n; ++s) {
    std::vector<Elem> stack{s};
    while (!stack.empty()) {
      Elem x = stack.back();
      stack.pop_back();
      if (le[s][x]) continue;
      le[s][x] = true;
      for (auto [lo, hi] : covers)
        if (lo == x) stack.push_back(hi);
    }
  }
  return le;
}

/// Lattices on {0..n-1} up to isomorphism, as order matrices with 0 the
/// bottom and n-1 the top. Middle elements are labelled along a linear
/// extension; duplicates are removed by canonical form over permutations.
inline std::vector<Matrix> all_lattice_orders(std::size_t n) {
  std::vector<Matrix> out;
  if (n == 0) return out;
  if (n == 1) return {Matrix{{true}}};
  const std::size_t m = n - 2;
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) slots.emplace_back(i, j);

  auto full = [&](const std::vector<std::vector<bool>>& mid) {
    Matrix le(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
      le[0][i] = true;
      le[i][n - 1] = true;
      le[i][i] = true;
    }
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (mid[i][j]) le[i + 1][j + 1] = true;
    return le;
  };
  auto is_lattice = [&](const Matrix& le) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        int glbs = 0, lubs = 0;
        for (std::size_t c = 0; c < n; ++c) {
          if (le[c][a] && le[c][b]) {
            bool g = true;
            for (std::size_t d = 0; d < n; ++d)
              if (le[d][a] && le[d][b] && !le[d][c]) g = false;
            glbs += g;
          }
          if (le[a][c] && le[b][c]) {
            bool l = true;
            for (std::size_t d = 0; d < n; ++d)
              if (le[a][d] && le[b][d] && !le[c][d]) l = false;
            lubs += l;
          }
        }
        if (glbs != 1 || lubs != 1) return false;
      }
    return true;
  };
  std::set<std::vector<bool>> seen;
  for (std::size_t mask = 0; mask < (std::size_t{1} << slots.size()); ++mask) {
    std::vector<std::vector<bool>> mid(m, std::vector<bool>(m, false));
    for (std::size_t i = 0; i < m; ++i) mid[i][i] = true;
    for (std::size_t s = 0; s < slots.size(); ++s)
      if ((mask >> s) & 1U) mid[slots[s].first][slots[s].second] = true;
    bool transitive = true;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < m; ++k)
          if (mid[i][j] && mid[j][k] && !mid[i][k]) transitive = false;
    if (!transitive) continue;
    const Matrix le = full(mid);
    if (!is_lattice(le)) continue;
    std::vector<std::size_t> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<bool> best;
    do {
      std::vector<bool> key;
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) key.push_back(mid[perm[i]][perm[j]]);
      if (best.empty() || key < best) best = key;
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (seen.insert(best).second) out.push_back(le);
  }
  return out;
}

/// Names "0", "e1", ..., "1" for a lattice of size n.
inline std::vector<std::string> default_names(std::size_t n) {
  if (n == 1) return {"0"};
  std::vector<std::string> names{"0"};
  for (std::size_t i = 1; i + 1 < n; ++i) names.push_back("e" + std::to_string(i));
  names.push_back("1");
  return names;
}

inline std::vector<BoundedLattice> all_lattices(std::size_t n) {
  std::vector<BoundedLattice> out;
  for (auto& le : all_lattice_orders(n))
    out.push_back(BoundedLattice::from_order(default_names(n), le));
  return out;
}

inline std::vector<BoundedLattice> all_lattices_up_to(std::size_t n) {
  std::vector<BoundedLattice> out;
  for (std::size_t k = 1; k <= n; ++k)
    for (auto& l : all_lattices(k)) out.push_back(std::move(l));
  return out;
}

/// Distributivity by the M3/N5 criterion: a lattice is distributive iff it
/// has no five-element sublattice isomorphic to the diamond or pentagon.
inline bool has_m3_or_n5(const BoundedLattice& l) {
  const auto n = static_cast<Elem>(l.size());
  for (Elem lo = 0; lo < n; ++lo)
    for (Elem hi = 0; hi < n; ++hi) {
      if (!l.lt(lo, hi)) continue;
      for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
          for (Elem c = 0; c < n; ++c) {
            std::set<Elem> s{lo, hi, a, b, c};
            if (s.size() != 5) continue;
            auto sub = [&](Elem x, Elem y) {
              return l.meet(x, y) == lo && l.join(x, y) == hi;
            };
            // M3: three pairwise incomparable elements with common meet/join.
            if (a < b && b < c && sub(a, b) && sub(b, c) && sub(a, c)) return true;
            // N5: a < b, c incomparable to both, a∧c = b∧c = lo, a∨c = b∨c = hi.
            if (l.lt(a, b) && sub(a, c) && sub(b, c)) return true;
          }
    }
  return false;
}

/// All set partitions of {0..n-1} as class-of vectors (restricted growth strings).
inline std::vector<std::vector<Elem>> all_partitions(std::size_t n) {
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> cls(n, 0);
  std::function<void(std::size_t, Elem)> rec = [&](std::size_t i, Elem used) {
    if (i == n) {
      out.push_back(cls);
      return;
    }
    for (Elem c = 0; c <= used; ++c) {
      cls[i] = c;
      rec(i + 1, std::max<Elem>(used, c + 1));
    }
  };
  if (n == 0) return {{}};
  cls[0] = 0;
  rec(1, 1);
  return out;
}

/// Congruences of the Δ-reduct by scanning every partition.
inline std::vector<std::vector<Elem>> congruences_by_partition_scan(
    const wdl::Dicomplementation& d) {
  const auto& l = d.base();
  const auto n = static_cast<Elem>(l.size());
  std::vector<std::vector<Elem>> out;
  for (const auto& cls : all_partitions(n)) {
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x)
      for (Elem y = 0; y < n && ok; ++y) {
        if (cls[x] != cls[y]) continue;
        if (d.has_delta() && cls[d.delta(x)] != cls[d.delta(y)]) ok = false;
        for (Elem z = 0; z < n && ok; ++z)
          if (cls[l.meet(x, z)] != cls[l.meet(y, z)] || cls[l.join(x, z)] != cls[l.join(y, z)])
            ok = false;
      }
    if (ok) out.push_back(cls);
  }
  return out;
}

/// Filters by direct test of the definition on every subset.
inline std::vector<std::uint64_t> filters_by_definition(const BoundedLattice& l) {
  const auto n = static_cast<Elem>(l.size());
  std::vector<std::uint64_t> out;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
    auto in = [&](Elem x) { return (s >> x) & 1U; };
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x)
      for (Elem y = 0; y < n && ok; ++y) {
        if (in(x) && l.leq(x, y) && !in(y)) ok = false;
        if (in(x) && in(y) && !in(l.meet(x, y))) ok = false;
      }
    if (ok) out.push_back(s);
  }
  return out;
}

}  // namespace oracle

namespace oracle {

inline bool is_weak_complementation(const BoundedLattice& l, const std::vector<Elem>& t) {
  const auto n = static_cast<Elem>(l.size());
  for (Elem x = 0; x < n; ++x) {
    if (!l.leq(t[t[x]], x)) return false;
    for (Elem y = 0; y < n; ++y) {
      if (l.leq(x, y) && !l.leq(t[y], t[x])) return false;
      if (l.join(l.meet(x, y), l.meet(x, t[y])) != x) return false;
    }
  }
  return true;
}

inline bool is_dual_weak_complementation(const BoundedLattice& l, const std::vector<Elem>& t) {
  const auto n = static_cast<Elem>(l.size());
  for (Elem x = 0; x < n; ++x) {
    if (!l.leq(x, t[t[x]])) return false;
    for (Elem y = 0; y < n; ++y) {
      if (l.leq(x, y) && !l.leq(t[y], t[x])) return false;
      if (l.meet(l.join(x, y), l.join(x, t[y])) != x) return false;
    }
  }
  return true;
}

/// Every total table on the carrier, in lexicographic order.
inline std::vector<std::vector<Elem>> all_tables(std::size_t n) {
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> t(n, 0);
  while (true) {
    out.push_back(t);
    std::size_t i = n;
    while (i > 0 && t[i - 1] + 1 == n) t[--i] = 0;
    if (i == 0) break;
    ++t[i - 1];
  }
  return out;
}

}  // namespace oracle
