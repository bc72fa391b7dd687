#include "wdl/sfilters.hpp"

#include <algorithm>

#include "detail/require.hpp"
#include "detail/scan.hpp"
#include "wdl/error.hpp"

namespace wdl {

namespace {

using detail::require_delta;
using detail::require_universe;

void sort_canonical(std::vector<ElementSet>& sets) {
  std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) { return canonical_less(a, b); });
}

ElementSet up_closure(const BoundedLattice& l, const ElementSet& s) {
  ElementSet out(l.size());
  s.for_each([&](Elem x) { out = out | up_set(l, x); });
  return out;
}

ElementSet preimage_of_interior(const Dicomplementation& d, const ElementSet& g) {
  ElementSet out(d.size());
  for (Elem x = 0; x < d.size(); ++x)
    if (g.contains(d.interior(x))) out.insert(x);
  return out;
}

std::vector<std::string> dagger_witness(const Dicomplementation& d, const ElementSet& f) {
  const auto& l = d.base();
  for (Elem x : f.elements())
    for (Elem y : f.elements())
      if (!f.contains(d.sqcap_bar(x, y))) return {l.name(x), l.name(y)};
  return {};
}

std::vector<std::string> no_witness(bool ok, std::vector<std::string> w) {
  return ok ? std::vector<std::string>{} : std::move(w);
}

}  // namespace

bool is_skeleton_filter(const Dicomplementation& d, const ElementSet& g) {
  const auto& l = d.base();
  if (g.universe() != l.size()) return false;
  const ElementSet sbar = dual_skeleton(d);
  if (!g.subset_of(sbar) || !g.contains(l.top())) return false;
  for (Elem x : g.elements()) {
    if (!(up_set(l, x) & sbar).subset_of(g)) return false;
    for (Elem y : g.elements())
      if (!g.contains(d.sqcap_bar(x, y))) return false;
  }
  return true;
}

std::vector<ElementSet> skeleton_filters(const Dicomplementation& d, std::size_t cap) {
  const auto& l = d.base();
  if (l.size() > cap) {
    throw Error(ErrorKind::SizeCapExceeded, "skeleton filter enumeration over " +
                                                std::to_string(l.size()) + " elements exceeds cap " +
                                                std::to_string(cap));
  }
  auto rest = dual_skeleton(d);
  rest.erase(l.top());
  const auto others = rest.elements();
  std::vector<ElementSet> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << others.size()); ++m) {
    ElementSet g = ElementSet::of(l.size(), {l.top()});
    for (std::size_t i = 0; i < others.size(); ++i)
      if ((m >> i) & 1U) g.insert(others[i]);
    if (is_skeleton_filter(d, g)) out.push_back(g);
  }
  sort_canonical(out);
  return out;
}

SConditions s_conditions(const Dicomplementation& d, const Filter& f) {
  require_delta(d);
  const auto& l = d.base();
  if (!is_filter(l, f)) throw Error(ErrorKind::NotAFilter, format_set(l, f) + " is not a filter");
  SConditions out;
  out.dagger_witness = dagger_witness(d, f);
  out.dagger = out.dagger_witness.empty();

  const auto g = trace(d, f);
  out.ddagger = is_skeleton_filter(d, g) && preimage_of_interior(d, g) == f;

  for (const auto& base : skeleton_filters(d, l.size())) {
    if (up_closure(l, base) == f) {
      out.dagger_ddagger = true;
      break;
    }
  }
  return out;
}

bool is_s_filter(const Dicomplementation& d, const ElementSet& f) {
  require_delta(d);
  return is_filter(d.base(), f) && dagger_witness(d, f).empty();
}

SFilter f_from_skeleton_filter(const Dicomplementation& d, const ElementSet& g) {
  require_delta(d);
  require_universe(d.base(), g);
  if (!is_skeleton_filter(d, g)) {
    throw Error(ErrorKind::NotASkeletonFilter, format_set(d.base(), g) + " is not a filter of the skeleton");
  }
  return preimage_of_interior(d, g);
}

ElementSet trace(const Dicomplementation& d, const ElementSet& f) {
  require_universe(d.base(), f);
  return f & dual_skeleton(d);
}

SFilter s_filter_generated(const Dicomplementation& d, const ElementSet& generators) {
  require_delta(d);
  const auto& l = d.base();
  require_universe(l, generators);
  if (generators.empty()) throw Error(ErrorKind::EmptyGenerator, "S[X) needs a nonempty X");
  ElementSet closed = generators;
  for (bool grew = true; grew;) {
    grew = false;
    for (Elem x : closed.elements())
      for (Elem y : closed.elements()) {
        const Elem z = d.sqcap_bar(x, y);
        if (!closed.contains(z)) {
          closed.insert(z);
          grew = true;
        }
      }
  }
  return up_closure(l, closed);
}

SFilter s_join(const Dicomplementation& d, const SFilter& f, const SFilter& g) {
  for (const auto* s : {&f, &g}) {
    if (!is_s_filter(d, *s)) throw Error(ErrorKind::NotSFilter, format_set(d.base(), *s) + " is not an S-filter");
  }
  return s_filter_generated(d, f | g);
}

SFilter s_principal(const Dicomplementation& d, Elem a) {
  require_delta(d);
  return up_set(d.base(), d.interior(a));
}

std::vector<SFilter> enumerate_s_filters(const Dicomplementation& d, std::size_t cap) {
  require_delta(d);
  std::vector<SFilter> out;
  for (const auto& f : all_filters(d.base(), cap))
    if (dagger_witness(d, f).empty()) out.push_back(f);
  return out;
}

LawReport s_generation_checks(const Dicomplementation& d, std::size_t cap) {
  require_delta(d);
  LawReport report;
  const auto& l = d.base();
  const std::size_t n = l.size();
  const auto one = ElementSet::of(n, {l.top()});
  auto name = [&](std::size_t x) { return l.name(static_cast<Elem>(x)); };
  auto S = [&](std::size_t a) { return s_principal(d, static_cast<Elem>(a)); };
  auto E = [](std::size_t x) { return static_cast<Elem>(x); };

  report.check("SP-formula", detail::witness1(n, name, [&](auto a) {
                 return S(a) == s_filter_generated(d, ElementSet::of(n, {E(a)}));
               }));
  report.check("SP-bounds", no_witness(S(l.bottom()) == l.all() && S(l.top()) == one, {"0", "1"}));
  report.check("SP-complement-join", detail::witness1(n, name, [&](auto a) {
                 return s_join(d, S(a), S(d.delta(E(a)))) == l.all();
               }));
  report.check("SP-complement-meet", detail::witness1(n, name, [&](auto a) {
                 return (S(a) & S(d.delta(E(a)))) == one;
               }));
  const auto sbar = dual_skeleton(d);
  auto meet_law = [&](auto a, auto b) { return (S(a) & S(b)) == S(d.under_sqcup(E(a), E(b))); };
  report.check("SP-meet", detail::witness2(n, name, [&](auto a, auto b) {
                 return !sbar.contains(E(a)) || !sbar.contains(E(b)) || meet_law(a, b);
               }));
  if (auto w = detail::witness2(n, name, meet_law); w.empty()) {
    report.pass("SP-meet-all");
  } else {
    report.finding("SP-meet-all", std::move(w),
                   "S[a) ∩ S[b) = [a^ΔΔ ∨ b^ΔΔ), which can differ from S[a ⊔̲ b) outside the skeleton");
  }
  report.check("SP-join", detail::witness2(n, name, [&](auto a, auto b) {
                 return s_join(d, S(a), S(b)) == S(d.sqcap_bar(E(a), E(b)));
               }));
  report.check("SP-antitone", detail::witness2(n, name, [&](auto a, auto b) {
                 return !l.leq(E(a), E(b)) || S(b).subset_of(S(a));
               }));
  report.check("SP-fixed", detail::witness1(n, name, [&](auto a) {
                 return (S(a) == up_set(l, E(a))) == sbar.contains(E(a));
               }));

  const auto fs = all_filters(l, cap);
  std::vector<std::string> w;
  for (const auto& x : fs) {
    const auto base = s_filter_generated(d, x);
    for (Elem a = 0; a < n && w.empty(); ++a) {
      auto bigger = x;
      bigger.insert(a);
      if (!base.subset_of(s_filter_generated(d, bigger))) w = {format_set(l, x), l.name(a)};
    }
  }
  report.check("SG-monotone", std::move(w));

  const auto sf = enumerate_s_filters(d, cap);
  w.clear();
  for (const auto& f : sf)
    for (const auto& g : sf) {
      if (!w.empty()) break;
      const bool meet_ok = std::find(sf.begin(), sf.end(), f & g) != sf.end();
      const bool join_ok = std::find(sf.begin(), sf.end(), s_join(d, f, g)) != sf.end();
      if (!meet_ok || !join_ok) w = {format_set(l, f), format_set(l, g)};
    }
  report.check("SF-closed", std::move(w));
  return report;
}

LawReport phi_iso_check(const Dicomplementation& d, std::size_t cap) {
  require_delta(d);
  LawReport report;
  const auto& l = d.base();
  const auto gs = skeleton_filters(d, cap);
  const auto sf = enumerate_s_filters(d, cap);
  const auto fs = all_filters(l, cap);
  std::vector<SFilter> phi;
  for (const auto& g : gs) phi.push_back(f_from_skeleton_filter(d, g));
  const std::size_t k = gs.size();
  auto gname = [&](std::size_t i) { return format_set(l, gs[i]); };

  report.check("PHI-injective", detail::witness2(k, gname, [&](auto i, auto j) {
                 return i == j || phi[i] != phi[j];
               }));
  report.check("PHI-order", detail::witness2(k, gname, [&](auto i, auto j) {
                 return gs[i].subset_of(gs[j]) == phi[i].subset_of(phi[j]);
               }));
  auto image = phi;
  sort_canonical(image);
  {
    std::vector<std::string> w;
    for (const auto& f : sf)
      if (w.empty() && std::find(image.begin(), image.end(), f) == image.end()) w = {format_set(l, f)};
    for (const auto& f : image)
      if (w.empty() && std::find(sf.begin(), sf.end(), f) == sf.end()) w = {format_set(l, f)};
    report.check("PHI-image", std::move(w));
  }
  report.check("PHI-trace", detail::witness1(k, gname, [&](auto i) { return trace(d, phi[i]) == gs[i]; }));
  report.check("PHI-star", detail::witness1(k, gname, [&](auto i) {
                 return f_from_skeleton_filter(d, star_bar(d, gs[i])) == star(d, phi[i]);
               }));
  report.check("PHI-closed", detail::witness1(k, gname, [&](auto i) {
                 const bool g_closed = star_bar(d, star_bar(d, gs[i])) == gs[i];
                 const bool f_closed = star(d, star(d, phi[i])) == phi[i];
                 return g_closed == f_closed;
               }));
  report.check("TRACE-roundtrip", detail::witness1(sf.size(), [&](auto i) { return format_set(l, sf[i]); },
                                                   [&](auto i) {
                                                     const auto t = trace(d, sf[i]);
                                                     return is_skeleton_filter(d, t) &&
                                                            f_from_skeleton_filter(d, t) == sf[i];
                                                   }));
  report.check("S-equivalence", detail::witness1(fs.size(), [&](auto i) { return format_set(l, fs[i]); },
                                                 [&](auto i) { return s_conditions(d, fs[i]).agree(); }));
  return report;
}

LawReport s_principal_ortholattice(const Dicomplementation& d) {
  require_delta(d);
  LawReport report;
  const auto& l = d.base();
  const std::size_t n = l.size();
  const auto one = ElementSet::of(n, {l.top()});
  auto name = [&](std::size_t x) { return l.name(static_cast<Elem>(x)); };
  auto E = [](std::size_t x) { return static_cast<Elem>(x); };
  auto S = [&](std::size_t a) { return s_principal(d, E(a)); };
  auto perp = [&](std::size_t a) { return S(d.delta(E(a))); };

  std::vector<SFilter> members;
  for (Elem a = 0; a < n; ++a) members.push_back(S(a));
  sort_canonical(members);
  members.erase(std::unique(members.begin(), members.end()), members.end());
  auto member = [&](const ElementSet& s) { return std::find(members.begin(), members.end(), s) != members.end(); };

  report.check("SFP-well-defined", detail::witness2(n, name, [&](auto a, auto b) {
                 return S(a) != S(b) || perp(a) == perp(b);
               }));
  report.check("SFP-meet-closed", detail::witness2(n, name, [&](auto a, auto b) { return member(S(a) & S(b)); }));
  report.check("SFP-join-closed", detail::witness2(n, name, [&](auto a, auto b) {
                 return member(s_join(d, S(a), S(b)));
               }));
  report.check("SFP-join-lub", detail::witness2(n, name, [&](auto a, auto b) {
                 const auto j = s_join(d, S(a), S(b));
                 if (!S(a).subset_of(j) || !S(b).subset_of(j)) return false;
                 return std::all_of(members.begin(), members.end(), [&](const auto& r) {
                   return !(S(a).subset_of(r) && S(b).subset_of(r)) || j.subset_of(r);
                 });
               }));
  report.check("SFP-complement-meet", detail::witness1(n, name, [&](auto a) { return (S(a) & perp(a)) == one; }));
  report.check("SFP-complement-join", detail::witness1(n, name, [&](auto a) {
                 return s_join(d, S(a), perp(a)) == l.all();
               }));
  report.check("SFP-involutive", detail::witness1(n, name, [&](auto a) {
                 return S(d.delta(d.delta(E(a)))) == S(a);
               }));
  report.check("SFP-antitone", detail::witness2(n, name, [&](auto a, auto b) {
                 return !S(a).subset_of(S(b)) || perp(b).subset_of(perp(a));
               }));

  const auto sbar = dual_skeleton(d).elements();
  std::vector<SFilter> image;
  for (Elem a : sbar) image.push_back(S(a));
  sort_canonical(image);
  const bool injective = std::adjacent_find(image.begin(), image.end()) == image.end();
  report.check("SFP-bijection", no_witness(injective && image == members, {format_set(l, dual_skeleton(d))}));

  std::vector<std::string> wj, wm;
  for (Elem a : sbar)
    for (Elem b : sbar) {
      if (wj.empty() && S(l.join(a, b)) != (S(a) & S(b))) wj = {l.name(a), l.name(b)};
      if (wm.empty() && S(d.sqcap_bar(a, b)) != s_join(d, S(a), S(b))) wm = {l.name(a), l.name(b)};
    }
  report.check("SFP-hom-join", std::move(wj));
  report.check("SFP-hom-meet", std::move(wm));
  return report;
}

}  // namespace wdl
