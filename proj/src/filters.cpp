#include "wdl/filters.hpp"

#include <algorithm>

#include "detail/require.hpp"
#include "detail/scan.hpp"
#include "wdl/error.hpp"

namespace wdl {

namespace {

using detail::require_delta;
using detail::require_universe;

std::vector<std::uint64_t> up_masks(const BoundedLattice& l) {
  std::vector<std::uint64_t> out(l.size());
  for (Elem a = 0; a < l.size(); ++a) out[a] = up_set(l, a).bits();
  return out;
}

// Subsets used to probe statements about arbitrary X: all of them on small
// carriers, otherwise the empty set, singletons and pairs.
std::vector<ElementSet> probe_subsets(const BoundedLattice& l) {
  const std::size_t n = l.size();
  std::vector<ElementSet> out;
  if (n <= 10) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) out.emplace_back(n, m);
    return out;
  }
  out.emplace_back(n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = x; y < n; ++y) out.push_back(ElementSet::of(n, {x, y}));
  return out;
}

BoundedLattice inclusion_lattice(const BoundedLattice& base, const std::vector<Filter>& filters) {
  const std::size_t k = filters.size();
  std::vector<std::string> names;
  names.reserve(k);
  for (const auto& f : filters) names.push_back(format_set(base, f));
  std::vector<std::vector<bool>> leq(k, std::vector<bool>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) leq[i][j] = filters[i].subset_of(filters[j]);
  return BoundedLattice::from_order(std::move(names), std::move(leq), kMaxCarrier);
}

}  // namespace

std::string format_set(const BoundedLattice& lattice, const ElementSet& set) {
  std::string out = "{";
  bool first = true;
  set.for_each([&](Elem e) {
    if (!first) out += ',';
    out += lattice.name(e);
    first = false;
  });
  return out + "}";
}

bool is_filter(const BoundedLattice& l, const ElementSet& s) {
  if (s.universe() != l.size() || s.empty() || !s.contains(l.top())) return false;
  for (Elem x : s.elements()) {
    if (!up_set(l, x).subset_of(s)) return false;
    for (Elem y : s.elements())
      if (!s.contains(l.meet(x, y))) return false;
  }
  return true;
}

Filter filter_generated(const BoundedLattice& l, const ElementSet& generators) {
  require_universe(l, generators);
  if (generators.empty()) throw Error(ErrorKind::EmptyGenerator, "[X) needs a nonempty X");
  Elem m = l.top();
  generators.for_each([&](Elem x) { m = l.meet(m, x); });
  return up_set(l, m);
}

Filter filter_join(const BoundedLattice& l, const Filter& f, const Filter& g) {
  if (!is_filter(l, f) || !is_filter(l, g)) {
    throw Error(ErrorKind::BaseMismatch, "filter join of sets that are not filters of the base");
  }
  ElementSet out(l.size());
  for (Elem x : f.elements())
    for (Elem y : g.elements()) out = out | up_set(l, l.meet(x, y));
  return out;
}

std::vector<Filter> all_filters(const BoundedLattice& l, std::size_t cap) {
  const std::size_t n = l.size();
  if (n > cap) {
    throw Error(ErrorKind::SizeCapExceeded, "filter enumeration over " + std::to_string(n) +
                                                " elements exceeds cap " + std::to_string(cap));
  }
  const auto up = up_masks(l);
  std::vector<Elem> others;
  for (Elem e = 0; e < n; ++e)
    if (e != l.top()) others.push_back(e);

  std::vector<Filter> out;
  const std::uint64_t top_bit = std::uint64_t{1} << l.top();
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << others.size()); ++m) {
    std::uint64_t bits = top_bit;
    for (std::size_t i = 0; i < others.size(); ++i)
      if ((m >> i) & 1U) bits |= std::uint64_t{1} << others[i];
    const ElementSet s(n, bits);
    bool ok = true;
    s.for_each([&](Elem x) { ok = ok && (up[x] & ~bits) == 0; });
    if (!ok) continue;
    const auto elems = s.elements();
    for (std::size_t i = 0; ok && i < elems.size(); ++i)
      for (std::size_t j = i + 1; ok && j < elems.size(); ++j)
        ok = s.contains(l.meet(elems[i], elems[j]));
    if (ok) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return canonical_less(a, b); });
  return out;
}

Filter star(const Dicomplementation& d, const ElementSet& x) {
  const auto& l = d.base();
  require_universe(l, x);
  require_delta(d);
  ElementSet out = l.all();
  x.for_each([&](Elem e) { out = out & up_set(l, d.delta(e)); });
  return out;
}

ElementSet plus(const BoundedLattice& l, const ElementSet& x) {
  require_universe(l, x);
  ElementSet out(l.size());
  for (Elem y = 0; y < l.size(); ++y) {
    bool ok = true;
    x.for_each([&](Elem a) { ok = ok && l.join(y, a) == l.top(); });
    if (ok) out.insert(y);
  }
  return out;
}

ElementSet star_bar(const Dicomplementation& d, const ElementSet& g) {
  const auto& l = d.base();
  require_universe(l, g);
  const ElementSet sbar = dual_skeleton(d);
  if (!g.subset_of(sbar)) {
    throw Error(ErrorKind::NotInSkeleton, format_set(l, g.minus(sbar)) + " outside the skeleton");
  }
  return star(d, g) & sbar;
}

FilterLattice::FilterLattice(const Dicomplementation& d, std::size_t cap)
    : d_(d), filters_(all_filters(d.base(), cap)), lattice_(inclusion_lattice(d.base(), filters_)) {
  const auto& l = d_.base();
  if (d_.has_delta()) {
    UnaryTable t;
    for (const auto& f : filters_) {
      const auto i = index_of(star(d_, f));
      if (!i) break;
      t.push_back(*i);
    }
    if (t.size() == filters_.size()) star_ = std::move(t);
  }
  UnaryTable t;
  for (const auto& f : filters_) {
    const auto i = index_of(plus(l, f));
    if (!i) break;
    t.push_back(*i);
  }
  if (t.size() == filters_.size()) plus_ = std::move(t);
}

std::optional<Elem> FilterLattice::index_of(const ElementSet& f) const {
  const auto it = std::lower_bound(filters_.begin(), filters_.end(), f,
                                   [](const auto& a, const auto& b) { return canonical_less(a, b); });
  if (it == filters_.end() || *it != f) return std::nullopt;
  return static_cast<Elem>(it - filters_.begin());
}

Elem FilterLattice::at(const ElementSet& f) const {
  if (auto i = index_of(f)) return *i;
  throw Error(ErrorKind::NotAFilter, format_set(base(), f) + " is not a filter");
}

FilterAlgebra filter_lattice_dual_wcl(const Dicomplementation& d, std::size_t cap) {
  require_delta(d);
  FilterLattice fl(d, cap);
  const auto& l = d.base();
  if (!fl.star_table()) {
    for (const auto& f : fl.filters()) {
      const auto s = star(d, f);
      if (!is_filter(l, s)) {
        throw Error(ErrorKind::NotAFilter, format_set(l, f) + " has star " + format_set(l, s) +
                                               ", which is not a filter");
      }
    }
  }
  auto algebra = Dicomplementation::unchecked(fl.lattice(), std::nullopt, fl.star_table());
  LawReport report = axiom_report(algebra);

  const auto& fs = fl.filters();
  const auto& F = fl.lattice();
  const std::size_t k = fs.size();
  auto fname = [&](std::size_t i) { return F.name(static_cast<Elem>(i)); };
  auto st = [&](std::size_t i) { return static_cast<std::size_t>(algebra.nabla(static_cast<Elem>(i))); };
  auto sub = [&](std::size_t i, std::size_t j) { return fs[i].subset_of(fs[j]); };

  {
    std::vector<std::string> w;
    for (const auto& x : probe_subsets(l)) {
      if (!is_filter(l, star(d, x))) {
        w = {format_set(l, x)};
        break;
      }
    }
    report.check("STAR-filter", std::move(w));
  }
  report.check("STAR-antitone", detail::witness2(k, fname, [&](auto i, auto j) {
                 return !sub(i, j) || sub(st(j), st(i));
               }));
  report.check("STAR-extensive", detail::witness1(k, fname, [&](auto i) { return sub(i, st(st(i))); }));
  report.check("STAR-triple", detail::witness1(k, fname, [&](auto i) { return st(st(st(i))) == st(i); }));
  report.check("STAR-closure-monotone", detail::witness2(k, fname, [&](auto i, auto j) {
                 return !sub(i, j) || sub(st(st(i)), st(st(j)));
               }));
  report.check("STAR-closure-idempotent", detail::witness1(k, fname, [&](auto i) {
                 return st(st(st(st(i)))) == st(st(i));
               }));
  report.check("STAR-top", fs[st(F.top())] == ElementSet::of(l.size(), {l.top()})
                               ? std::vector<std::string>{}
                               : std::vector<std::string>{fname(F.top())});
  report.check("STAR-bottom", fs[st(F.bottom())] == l.all() ? std::vector<std::string>{}
                                                            : std::vector<std::string>{fname(F.bottom())});
  {
    std::vector<std::string> w;
    for (const auto& x : probe_subsets(l)) {
      if (!x.empty() && star(d, filter_generated(l, x)) != star(d, x)) {
        w = {format_set(l, x)};
        break;
      }
    }
    report.check("STAR-generated", std::move(w));
  }
  report.check("STAR-sqcap-closed", detail::witness1(k, fname, [&](auto i) {
                 const auto& s = fs[st(i)];
                 for (Elem x : s.elements())
                   for (Elem y : s.elements())
                     if (!s.contains(d.sqcap_bar(x, y))) return false;
                 return true;
               }));
  report.check("JOIN-generated", detail::witness2(k, fname, [&](auto i, auto j) {
                 const auto joined = filter_join(l, fs[i], fs[j]);
                 return joined == filter_generated(l, fs[i] | fs[j]) &&
                        joined == fs[F.join(static_cast<Elem>(i), static_cast<Elem>(j))];
               }));

  report.append(nearlattice_check(algebra).laws, "FL-");

  const SkeletonAlgebra skel(algebra, SkeletonSide::Closed);
  {
    std::vector<std::string> w;
    const auto members = skel.carrier().elements();
    for (Elem i : members) {
      for (Elem j : members) {
        const auto expect = fl.at(star(d, star(d, filter_join(l, fs[i], fs[j]))));
        if (w.empty() && skel.join(i, j) != expect) w = {F.name(i), F.name(j)};
      }
    }
    report.check("SF-join", std::move(w));
  }
  report.append(ortholattice_report(skel), "SF-");
  return FilterAlgebra{std::move(fl), std::move(algebra), std::move(report)};
}

std::optional<std::pair<Elem, Elem>> condition_star_witness(const Dicomplementation& d) {
  require_delta(d);
  const auto& l = d.base();
  for (Elem x = 0; x < l.size(); ++x)
    for (Elem y = 0; y < l.size(); ++y)
      if (l.join(x, y) == l.top() && !l.leq(d.delta(x), y)) return std::pair{x, y};
  return std::nullopt;
}

LawReport pseudocomplement_checks(const Dicomplementation& d, std::size_t cap) {
  LawReport report;
  const auto& l = d.base();
  if (!is_distributive(l)) return report;
  const auto fs = all_filters(l, cap);
  const std::size_t k = fs.size();
  const auto one = ElementSet::of(l.size(), {l.top()});
  auto fname = [&](std::size_t i) { return format_set(l, fs[i]); };

  report.check("PC-plus-filter", detail::witness1(k, fname, [&](auto i) { return is_filter(l, plus(l, fs[i])); }));
  report.check("PC-pseudocomplement", detail::witness1(k, fname, [&](auto i) {
                 const auto p = plus(l, fs[i]);
                 if ((fs[i] & p) != one) return false;
                 return std::all_of(fs.begin(), fs.end(), [&](const Filter& g) {
                   return (fs[i] & g) != one || g.subset_of(p);
                 });
               }));
  const FilterLattice fl(d, cap);
  const auto dw = distributivity_witness(fl.lattice());
  std::vector<std::string> w;
  if (dw) {
    for (Elem e : *dw) w.push_back(fl.lattice().name(e));
  }
  report.check("PC-distributive", std::move(w));
  if (d.has_delta() && condition_star_holds(d)) {
    report.check("PC-star-plus", detail::witness1(k, fname, [&](auto i) {
                   return star(d, fs[i]) == plus(l, fs[i]);
                 }));
  }
  return report;
}

LawReport principal_dual_iso(const Dicomplementation& d, std::size_t cap) {
  require_delta(d);
  LawReport report;
  const auto& l = d.base();
  const std::size_t n = l.size();
  const auto fa = filter_lattice_dual_wcl(d, cap);
  const auto& fl = fa.filters;
  auto name = [&](std::size_t x) { return l.name(static_cast<Elem>(x)); };
  auto eta = [&](std::size_t a) { return up_set(l, static_cast<Elem>(a)); };
  auto E = [](std::size_t x) { return static_cast<Elem>(x); };

  report.check("ETA-join", detail::witness2(n, name, [&](auto a, auto b) {
                 return eta(l.join(E(a), E(b))) == (eta(a) & eta(b));
               }));
  report.check("ETA-meet", detail::witness2(n, name, [&](auto a, auto b) {
                 return eta(l.meet(E(a), E(b))) == filter_join(l, eta(a), eta(b));
               }));
  report.check("ETA-delta", detail::witness1(n, name, [&](auto a) {
                 return eta(d.delta(E(a))) == star(d, eta(a));
               }));
  report.check("ETA-injective", detail::witness2(n, name, [&](auto a, auto b) {
                 return a == b || eta(a) != eta(b);
               }));
  report.check("ETA-antitone", detail::witness2(n, name, [&](auto a, auto b) {
                 return l.leq(E(a), E(b)) == eta(b).subset_of(eta(a));
               }));
  {
    std::vector<std::string> w;
    for (const auto& f : fl.filters()) {
      bool hit = false;
      for (Elem a = 0; a < n && !hit; ++a) hit = eta(a) == f;
      if (!hit) {
        w = {format_set(l, f)};
        break;
      }
    }
    report.check("ETA-onto", std::move(w));
  }

  const auto& F = fl.lattice();
  ElementSet lambda(F.size());
  for (Elem a = 0; a < n; ++a) lambda.insert(fl.at(star(d, eta(a))));
  const auto fskel = skeleton(fa.algebra);
  report.check("LAMBDA-skeleton", lambda == fskel ? std::vector<std::string>{}
                                                  : std::vector<std::string>{format_set(F, lambda)});

  const auto sbar = dual_skeleton(d);
  ElementSet image(F.size());
  sbar.for_each([&](Elem a) { image.insert(fl.at(eta(a))); });
  report.check("LAMBDA-bijection", image == lambda && image.size() == sbar.size()
                                       ? std::vector<std::string>{}
                                       : std::vector<std::string>{format_set(F, image)});
  {
    std::vector<std::string> w;
    const auto members = sbar.elements();
    for (Elem a : members) {
      for (Elem b : members) {
        const Elem lhs = fl.at(eta(d.sqcap_bar(a, b)));
        const Elem rhs = fa.algebra.sqcup(fl.at(eta(a)), fl.at(eta(b)));
        if (w.empty() && lhs != rhs) w = {l.name(a), l.name(b)};
      }
    }
    report.check("LAMBDA-sqcap", std::move(w));
  }
  const auto ortho = ortholattice_report(SkeletonAlgebra(fa.algebra, SkeletonSide::Closed));
  std::vector<std::string> w;
  for (const auto& r : ortho.results())
    if (r.status == LawStatus::Fail && w.empty()) w = {r.id};
  report.check("LAMBDA-ortho", std::move(w));
  return report;
}

}  // namespace wdl
