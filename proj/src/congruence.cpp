#include "wdl/congruence.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "detail/require.hpp"
#include "wdl/error.hpp"

namespace wdl {

namespace {

using detail::require_delta;

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), Elem{0}); }

  Elem find(Elem x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(Elem a, Elem b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }
  std::vector<Elem> classes() {
    std::vector<Elem> out(parent_.size());
    for (Elem x = 0; x < parent_.size(); ++x) out[x] = find(x);
    return out;
  }

 private:
  std::vector<Elem> parent_;
};

// Closes the union-find partition under the lattice translations and Δ.
Congruence close_under_operations(const Dicomplementation& d, UnionFind& uf) {
  const auto& l = d.base();
  const auto n = static_cast<Elem>(l.size());
  for (bool changed = true; changed;) {
    changed = false;
    for (Elem x = 0; x < n; ++x)
      for (Elem y = x + 1; y < n; ++y) {
        if (uf.find(x) != uf.find(y)) continue;
        for (Elem z = 0; z < n; ++z) {
          changed |= uf.unite(l.meet(x, z), l.meet(y, z));
          changed |= uf.unite(l.join(x, z), l.join(y, z));
        }
        if (d.has_delta()) changed |= uf.unite(d.delta(x), d.delta(y));
      }
  }
  return Congruence::from_classes(uf.classes());
}

std::size_t pair_count(const Congruence& c) {
  std::size_t total = 0;
  for (const auto& b : c.blocks()) total += b.size() * b.size();
  return total;
}

std::vector<std::string> when_false(bool ok, std::vector<std::string> w) {
  return ok ? std::vector<std::string>{} : std::move(w);
}

// Minimal elements of `sets` other than `bottom`, under `below`.
template <typename T, typename Below>
std::vector<T> atoms_of(const std::vector<T>& sets, const T& bottom, Below&& below) {
  std::vector<T> out;
  for (const auto& s : sets) {
    if (s == bottom) continue;
    const bool minimal = std::none_of(sets.begin(), sets.end(), [&](const T& t) {
      return t != bottom && t != s && below(t, s);
    });
    if (minimal) out.push_back(s);
  }
  return out;
}

}  // namespace

bool Relation::subset_of(const Relation& other) const {
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] && !other.bits_[i]) return false;
  return true;
}

std::size_t Relation::size() const { return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true)); }

Relation Relation::compose(const Relation& other) const {
  Relation out(n_);
  for (Elem x = 0; x < n_; ++x)
    for (Elem y = 0; y < n_; ++y) {
      if (!contains(x, y)) continue;
      for (Elem z = 0; z < n_; ++z)
        if (other.contains(y, z)) out.insert(x, z);
    }
  return out;
}

Congruence Congruence::from_classes(std::vector<Elem> class_of) {
  std::vector<Elem> renumber(class_of.size() + 1, static_cast<Elem>(-1));
  Elem next = 0;
  for (Elem& c : class_of) {
    if (c >= class_of.size()) throw Error(ErrorKind::MalformedPartition, "class index out of range");
    if (renumber[c] == static_cast<Elem>(-1)) renumber[c] = next++;
    c = renumber[c];
  }
  Congruence out;
  out.class_of_ = std::move(class_of);
  out.block_count_ = next;
  return out;
}

Congruence Congruence::from_blocks(std::size_t n, const std::vector<std::vector<Elem>>& blocks) {
  std::vector<Elem> cls(n, static_cast<Elem>(-1));
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw Error(ErrorKind::MalformedPartition, "empty block");
    for (Elem x : blocks[b]) {
      if (x >= n) throw Error(ErrorKind::MalformedPartition, "block element out of range");
      if (cls[x] != static_cast<Elem>(-1)) {
        throw Error(ErrorKind::MalformedPartition, "element " + std::to_string(x) + " in two blocks");
      }
      cls[x] = static_cast<Elem>(b);
    }
  }
  for (Elem x = 0; x < n; ++x)
    if (cls[x] == static_cast<Elem>(-1)) {
      throw Error(ErrorKind::MalformedPartition, "element " + std::to_string(x) + " in no block");
    }
  return from_classes(std::move(cls));
}

Congruence Congruence::from_relation(const Relation& r) {
  const std::size_t n = r.universe();
  std::vector<Elem> cls(n);
  for (Elem x = 0; x < n; ++x) {
    if (!r.contains(x, x)) throw Error(ErrorKind::MalformedPartition, "relation is not reflexive");
    Elem rep = x;
    for (Elem y = 0; y < x; ++y)
      if (r.contains(x, y)) {
        rep = cls[y];
        break;
      }
    cls[x] = rep;
  }
  auto out = from_classes(cls);
  if (out.relation() != r) throw Error(ErrorKind::MalformedPartition, "relation is not an equivalence");
  return out;
}

Congruence Congruence::diagonal(std::size_t n) {
  std::vector<Elem> cls(n);
  std::iota(cls.begin(), cls.end(), Elem{0});
  return from_classes(std::move(cls));
}

Congruence Congruence::full(std::size_t n) { return from_classes(std::vector<Elem>(n, 0)); }

std::vector<ElementSet> Congruence::blocks() const {
  std::vector<ElementSet> out(block_count_, ElementSet(universe()));
  for (Elem x = 0; x < universe(); ++x) out[class_of_[x]].insert(x);
  return out;
}

ElementSet Congruence::block_of(Elem x) const {
  ElementSet out(universe());
  for (Elem y = 0; y < universe(); ++y)
    if (related(x, y)) out.insert(y);
  return out;
}

Relation Congruence::relation() const {
  Relation r(universe());
  for (Elem x = 0; x < universe(); ++x)
    for (Elem y = 0; y < universe(); ++y)
      if (related(x, y)) r.insert(x, y);
  return r;
}

bool Congruence::refines(const Congruence& other) const {
  for (Elem x = 0; x < universe(); ++x)
    for (Elem y = x + 1; y < universe(); ++y)
      if (related(x, y) && !other.related(x, y)) return false;
  return true;
}

std::string format_partition(const BoundedLattice& l, const Congruence& c) {
  std::string out;
  for (const auto& b : c.blocks()) out += format_set(l, b);
  return out;
}

std::vector<std::vector<std::string>> block_names(const BoundedLattice& l, const Congruence& c) {
  std::vector<std::vector<std::string>> out;
  for (const auto& b : c.blocks()) {
    out.emplace_back();
    b.for_each([&](Elem x) { out.back().push_back(l.name(x)); });
  }
  return out;
}

Congruence partition_from_names(const BoundedLattice& l, const std::vector<std::vector<std::string>>& blocks) {
  std::vector<std::vector<Elem>> idx;
  for (const auto& b : blocks) {
    idx.emplace_back();
    for (const auto& name : b) idx.back().push_back(l.index(name));
  }
  return Congruence::from_blocks(l.size(), idx);
}

std::optional<CompatibilityViolation> congruence_violation(const Dicomplementation& d, const Congruence& c) {
  const auto& l = d.base();
  if (c.universe() != l.size()) throw Error(ErrorKind::MalformedPartition, "partition over a different carrier");
  const auto n = static_cast<Elem>(l.size());
  for (Elem x = 0; x < n; ++x)
    for (Elem y = x + 1; y < n; ++y) {
      if (!c.related(x, y)) continue;
      for (Elem z = 0; z < n; ++z) {
        if (!c.related(l.meet(x, z), l.meet(y, z)))
          return CompatibilityViolation{"meet", {l.name(x), l.name(y), l.name(z)}};
        if (!c.related(l.join(x, z), l.join(y, z)))
          return CompatibilityViolation{"join", {l.name(x), l.name(y), l.name(z)}};
      }
      if (d.has_delta() && !c.related(d.delta(x), d.delta(y)))
        return CompatibilityViolation{"delta", {l.name(x), l.name(y)}};
    }
  return std::nullopt;
}

Congruence determination_congruence(const Dicomplementation& d) {
  require_delta(d);
  std::vector<Elem> cls(d.size());
  for (Elem x = 0; x < d.size(); ++x) cls[x] = d.delta(x);
  return Congruence::from_classes(std::move(cls));
}

Congruence theta_from_filter(const Dicomplementation& d, const SFilter& f) {
  require_delta(d);
  const auto& l = d.base();
  if (!is_distributive(l)) throw Error(ErrorKind::NotDistributive, "theta_F needs a distributive lattice");
  if (!is_s_filter(d, f)) throw Error(ErrorKind::NotSFilter, format_set(l, f) + " is not an S-filter");
  const auto n = static_cast<Elem>(l.size());
  Relation r(n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem u : f.elements())
        if (l.join(x, d.delta(u)) == l.join(y, d.delta(u))) {
          r.insert(x, y);
          break;
        }
  return Congruence::from_relation(r);
}

Congruence principal_congruence(const Dicomplementation& d, Elem a, Elem b) {
  UnionFind uf(d.size());
  uf.unite(a, b);
  return close_under_operations(d, uf);
}

Congruence congruence_join(const Congruence& a, const Congruence& b) {
  const auto n = static_cast<Elem>(a.universe());
  UnionFind uf(n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = x + 1; y < n; ++y)
      if (a.related(x, y) || b.related(x, y)) uf.unite(x, y);
  return Congruence::from_classes(uf.classes());
}

Congruence congruence_meet(const Congruence& a, const Congruence& b) {
  const auto n = a.universe();
  std::vector<Elem> cls(n);
  for (Elem x = 0; x < n; ++x) cls[x] = static_cast<Elem>(a.class_of()[x] * n + b.class_of()[x]);
  // Class indices only need to be distinct; squash them below n.
  std::vector<Elem> squashed(n);
  std::vector<Elem> seen;
  for (Elem x = 0; x < n; ++x) {
    auto it = std::find(seen.begin(), seen.end(), cls[x]);
    if (it == seen.end()) {
      seen.push_back(cls[x]);
      it = seen.end() - 1;
    }
    squashed[x] = static_cast<Elem>(it - seen.begin());
  }
  return Congruence::from_classes(std::move(squashed));
}

ElementSet cokernel(const BoundedLattice& l, const Congruence& c) { return c.block_of(l.top()); }

std::vector<Congruence> enumerate_congruences(const Dicomplementation& d, std::size_t cap) {
  const auto& l = d.base();
  if (l.size() > cap) {
    throw Error(ErrorKind::SizeCapExceeded, "congruence enumeration over " + std::to_string(l.size()) +
                                                " elements exceeds cap " + std::to_string(cap));
  }
  const auto n = static_cast<Elem>(l.size());
  std::set<std::vector<Elem>> seen;
  std::vector<Congruence> all;
  auto add = [&](const Congruence& c) {
    if (seen.insert(c.class_of()).second) all.push_back(c);
  };
  add(Congruence::diagonal(n));
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b) add(principal_congruence(d, a, b));
  for (std::size_t done = 0; done < all.size(); ++done)
    for (std::size_t j = 0; j <= done; ++j) add(congruence_join(all[done], all[j]));

  std::sort(all.begin(), all.end(), [](const Congruence& a, const Congruence& b) {
    const auto pa = pair_count(a);
    const auto pb = pair_count(b);
    if (pa != pb) return pa < pb;
    return a.class_of() < b.class_of();
  });
  return all;
}

LawReport join_formula_check(const Dicomplementation& d, std::size_t cap) {
  LawReport report;
  const auto& l = d.base();
  if (!is_distributive(l)) return report;
  const auto con = enumerate_congruences(d, cap);
  std::vector<std::string> w;
  for (const auto& f : enumerate_s_filters(d)) {
    const auto theta = theta_from_filter(d, f);
    const auto t = theta.relation();
    for (const auto& psi : con) {
      if (!w.empty()) break;
      if (congruence_join(theta, psi).relation() != t.compose(psi.relation()).compose(t))
        w = {format_set(l, f), format_partition(l, psi)};
    }
  }
  report.check("T6-join", std::move(w));
  return report;
}

LawReport permutability_check(const Dicomplementation& d, std::size_t cap) {
  LawReport report;
  const auto& l = d.base();
  if (!is_distributive(l)) return report;
  (void)cap;
  const auto sf = enumerate_s_filters(d);
  std::vector<Relation> thetas;
  for (const auto& f : sf) thetas.push_back(theta_from_filter(d, f).relation());
  std::vector<std::string> w;
  for (std::size_t i = 0; i < sf.size() && w.empty(); ++i)
    for (std::size_t j = i + 1; j < sf.size() && w.empty(); ++j)
      if (thetas[i].compose(thetas[j]) != thetas[j].compose(thetas[i]))
        w = {format_set(l, sf[i]), format_set(l, sf[j])};
  report.check("T6-permute", std::move(w));
  return report;
}

StructureReport structure_checks(const Dicomplementation& d, std::size_t cap) {
  require_delta(d);
  StructureReport out;
  auto& report = out.laws;
  const auto& l = d.base();
  const auto n = static_cast<Elem>(l.size());
  const auto con = enumerate_congruences(d, cap);
  const auto sf = enumerate_s_filters(d);
  const auto sbar = dual_skeleton(d);
  const auto diag = Congruence::diagonal(n);
  const auto phi = determination_congruence(d);
  const auto one = ElementSet::of(n, {l.top()});
  const auto zero_only = ElementSet::of(n, {l.bottom()});
  auto pname = [&](const Congruence& c) { return format_partition(l, c); };
  auto scan = [&](auto&& holds) {
    for (const auto& c : con)
      if (!holds(c)) return std::vector<std::string>{pname(c)};
    return std::vector<std::string>{};
  };
  auto in_sf = [&](const ElementSet& s) { return std::find(sf.begin(), sf.end(), s) != sf.end(); };

  out.distributive = is_distributive(l);
  out.phi_is_diagonal = phi == diag;

  report.check("CON-valid", scan([&](const auto& c) { return is_congruence(d, c); }));
  {
    std::vector<std::string> w;
    for (const auto& a : con)
      for (const auto& b : con)
        for (const auto& c : con) {
          if (!w.empty()) break;
          if (congruence_meet(a, congruence_join(b, c)) != congruence_join(congruence_meet(a, b), congruence_meet(a, c)))
            w = {pname(a), pname(b), pname(c)};
        }
    report.check("CON-distributive", std::move(w));
  }
  report.check("R6-cokernel-sfilter", scan([&](const auto& c) { return in_sf(cokernel(l, c)); }));
  report.check("R6-cokernel-generated", scan([&](const auto& c) {
                 const auto k = cokernel(l, c);
                 return s_filter_generated(d, k & sbar) == k;
               }));
  report.check("R6-full", scan([&](const auto& c) { return !c.related(l.bottom(), l.top()) || c.is_full(); }));
  if (sbar.size() == 2) {
    auto w = scan([&](const auto& c) {
      return c.is_full() || (c.block_of(l.bottom()) == zero_only && cokernel(l, c) == one);
    });
    if (w.empty()) {
      report.pass("R6-two-skeleton");
    } else {
      report.finding("R6-two-skeleton", std::move(w),
                     "a congruence other than L² whose 0-class or 1-class is not a singleton although S̄(L) = {0,1}");
    }
  }

  const bool phi_congruence = is_congruence(d, phi);
  if (phi_congruence) {
    report.pass("T6-phi-congruence");
  } else {
    report.finding("T6-phi-congruence", {pname(phi)}, "equal Δ-images are not preserved by the lattice translations");
  }
  auto diagonal_on_skeleton = [&](const Congruence& c) {
    for (Elem x : sbar.elements())
      for (Elem y : sbar.elements())
        if (x != y && c.related(x, y)) return false;
    return true;
  };
  report.check("T6-phi-skeleton", diagonal_on_skeleton(phi)
                                      ? scan([&](const auto& c) { return !diagonal_on_skeleton(c) || c.refines(phi); })
                                      : std::vector<std::string>{pname(phi)});
  report.check("T6-phi-zero-upper", scan([&](const auto& c) {
                 return c.block_of(l.bottom()) != zero_only || c.refines(phi);
               }));
  if (phi.block_of(l.bottom()) == zero_only) {
    report.pass("T6-phi-zero-class");
  } else {
    report.finding("T6-phi-zero-class", {format_set(l, phi.block_of(l.bottom()))},
                   "[0]_Φ is the set of x with x^Δ = 1, which need not be {0}");
  }

  out.regular = true;
  for (const auto& a : con)
    for (const auto& b : con) {
      if (a == b) continue;
      const auto ba = a.blocks();
      for (const auto& blk : b.blocks())
        if (std::find(ba.begin(), ba.end(), blk) != ba.end()) out.regular = false;
    }
  report.check("T6-regular-converse", when_false(!out.phi_is_diagonal || out.regular, {pname(phi)}));
  if (phi_congruence) {
    report.check("T6-regular-forward", when_false(!out.regular || out.phi_is_diagonal, {pname(phi)}));
  }
  if (out.regular == out.phi_is_diagonal) {
    report.pass("T6-regular");
  } else {
    report.finding("T6-regular", {pname(phi)}, "regular although Φ is not the diagonal");
  }
  if (out.phi_is_diagonal) {
    report.check("T6-trivial-cokernel", scan([&](const auto& c) { return (cokernel(l, c) == one) == (c == diag); }));
  }

  // Subdirect irreducibility by the intersection criterion and by atoms of Con(L).
  const bool nontrivial = n >= 2;
  auto monolith = Congruence::full(n);
  for (const auto& c : con)
    if (c != diag) monolith = congruence_meet(monolith, c);
  out.subdirectly_irreducible = nontrivial && monolith != diag;
  out.simple = nontrivial && con.size() == 2;
  const auto con_atoms = atoms_of(con, diag, [](const Congruence& a, const Congruence& b) { return a.refines(b); });
  report.check("B-sdi", when_false(out.subdirectly_irreducible == (nontrivial && con_atoms.size() == 1 &&
                                                                   std::all_of(con.begin(), con.end(), [&](const auto& c) {
                                                                     return c == diag || con_atoms[0].refines(c);
                                                                   })),
                                   {pname(monolith)}));

  if (!out.distributive) return out;

  std::vector<Congruence> thetas;
  for (const auto& f : sf) thetas.push_back(theta_from_filter(d, f));
  auto sname = [&](std::size_t i) { return format_set(l, sf[i]); };
  auto scan_sf = [&](auto&& holds) {
    for (std::size_t i = 0; i < sf.size(); ++i)
      if (!holds(i)) return std::vector<std::string>{sname(i)};
    return std::vector<std::string>{};
  };
  report.check("T6-theta-congruence", scan_sf([&](auto i) { return is_congruence(d, thetas[i]); }));
  report.check("T6-theta-cokernel", scan_sf([&](auto i) { return cokernel(l, thetas[i]) == sf[i]; }));
  report.check("T6-theta-least", scan_sf([&](auto i) {
                 return std::all_of(con.begin(), con.end(), [&](const auto& c) {
                   return !sf[i].subset_of(cokernel(l, c)) || thetas[i].refines(c);
                 });
               }));
  report.check("T6-theta-order", scan_sf([&](auto i) {
                 for (std::size_t j = 0; j < sf.size(); ++j)
                   if (sf[i].subset_of(sf[j]) != thetas[i].refines(thetas[j])) return false;
                 return true;
               }));

  if (!out.phi_is_diagonal) return out;

  {
    auto theta_meet = Congruence::full(n);
    for (std::size_t i = 0; i < sf.size(); ++i)
      if (sf[i] != one) theta_meet = congruence_meet(theta_meet, thetas[i]);
    report.check("T6-intersection", when_false(theta_meet == monolith, {pname(theta_meet), pname(monolith)}));
  }
  {
    std::set<std::vector<Elem>> image;
    for (const auto& t : thetas) image.insert(t.class_of());
    std::set<std::vector<Elem>> all;
    for (const auto& c : con) all.insert(c.class_of());
    report.check("T6-iso", when_false(image == all && image.size() == sf.size(), {}));
  }
  const auto sf_atoms = atoms_of(sf, one, [](const ElementSet& a, const ElementSet& b) { return a.subset_of(b); });
  const bool unique_atom = sf_atoms.size() == 1 && std::all_of(sf.begin(), sf.end(), [&](const auto& f) {
                             return f == one || sf_atoms[0].subset_of(f);
                           });
  report.check("T6-sdi", when_false(out.subdirectly_irreducible == unique_atom, {}));
  report.check("T6-simple", when_false(out.simple == (sf.size() == 2), {}));
  return out;
}

}  // namespace wdl
