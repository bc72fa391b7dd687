#include "wdl/spectra.hpp"

#include <algorithm>

#include "detail/require.hpp"
#include "detail/scan.hpp"
#include "wdl/error.hpp"

namespace wdl {

namespace {

using detail::require_delta;

bool maximal_among(const std::vector<ElementSet>& universe, const ElementSet& f, Elem bottom) {
  if (f.contains(bottom)) return false;
  return std::none_of(universe.begin(), universe.end(), [&](const ElementSet& g) {
    return !g.contains(bottom) && f.strict_subset_of(g);
  });
}

bool prime_over(const Dicomplementation& d, const ElementSet& carrier, const ElementSet& f) {
  const auto& l = d.base();
  for (Elem x : carrier.elements())
    for (Elem y : carrier.elements())
      if (f.contains(l.join(x, y)) && !f.contains(x) && !f.contains(y)) return false;
  return true;
}

bool primary_over(const Dicomplementation& d, const ElementSet& carrier, const ElementSet& f) {
  for (Elem x : carrier.elements())
    if (!f.contains(x) && !f.contains(d.delta(x))) return false;
  return true;
}

// Atoms of S̄(L) under the order of L.
ElementSet skeleton_atoms(const Dicomplementation& d) {
  const auto& l = d.base();
  const auto sbar = dual_skeleton(d);
  ElementSet out(l.size());
  for (Elem a : sbar.elements()) {
    if (a == l.bottom()) continue;
    bool covers_bottom = true;
    for (Elem b : sbar.elements())
      if (b != l.bottom() && l.lt(b, a)) covers_bottom = false;
    if (covers_bottom) out.insert(a);
  }
  return out;
}

}  // namespace

FilterClassification classify(const Dicomplementation& d, const ElementSet& f, FilterUniverse universe,
                              std::size_t cap) {
  require_delta(d);
  const auto& l = d.base();
  const bool on_lattice = universe == FilterUniverse::Lattice;
  if (on_lattice ? !is_filter(l, f) : !is_skeleton_filter(d, f)) {
    throw Error(ErrorKind::UniverseMismatch,
                format_set(l, f) + (on_lattice ? " is not a filter of L" : " is not a filter of the skeleton"));
  }
  const ElementSet carrier = on_lattice ? l.all() : dual_skeleton(d);
  FilterClassification out;
  out.filter = f;
  out.universe = universe;
  out.is_proper = !f.contains(l.bottom());
  out.is_prime = prime_over(d, carrier, f);
  out.is_primary = primary_over(d, carrier, f);
  out.is_maximal = maximal_among(on_lattice ? all_filters(l, cap) : skeleton_filters(d, cap), f, l.bottom());
  return out;
}

SFilter extend_to_primary(const Dicomplementation& d, const SFilter& f, std::size_t cap) {
  require_delta(d);
  const auto& l = d.base();
  if (!is_s_filter(d, f)) throw Error(ErrorKind::NotSFilter, format_set(l, f) + " is not an S-filter");
  if (f.contains(l.bottom())) throw Error(ErrorKind::NotProper, format_set(l, f) + " contains 0");

  const auto sbar = dual_skeleton(d).elements();
  ElementSet e = trace(d, f);
  for (bool grew = true; grew;) {
    grew = false;
    for (Elem s : sbar) {
      if (e.contains(s)) continue;
      auto bigger = e;
      bigger.insert(s);
      const auto candidate = trace(d, s_filter_generated(d, bigger));
      if (!candidate.contains(l.bottom())) {
        e = candidate;
        grew = true;
        break;
      }
    }
  }
  const auto greedy = f_from_skeleton_filter(d, e);
  if (primary_over(d, l.all(), greedy)) return greedy;

  for (const auto& g : enumerate_s_filters(d, cap))
    if (f.subset_of(g) && !g.contains(l.bottom()) && primary_over(d, l.all(), g)) return g;
  throw Error(ErrorKind::NoPrimaryExtension, format_set(l, f) + " lies in no proper primary S-filter");
}

LawReport verify_spectral_theorems(const Dicomplementation& d, std::size_t cap) {
  require_delta(d);
  LawReport report;
  const auto& l = d.base();
  const Elem zero = l.bottom();
  const auto fs = all_filters(l, cap);
  const auto gs = skeleton_filters(d, cap);
  const auto sf = enumerate_s_filters(d, cap);
  const auto all = l.all();
  const auto sbar = dual_skeleton(d);
  auto proper = [&](const ElementSet& s) { return !s.contains(zero); };

  auto scan = [&](const std::vector<ElementSet>& sets, auto&& holds) {
    for (const auto& s : sets)
      if (!holds(s)) return std::vector<std::string>{format_set(l, s)};
    return std::vector<std::string>{};
  };

  report.check("P5-prime-primary", scan(fs, [&](const auto& f) {
                 return !prime_over(d, all, f) || primary_over(d, all, f);
               }));
  report.check("P5-prime-s-maximal", scan(sf, [&](const auto& f) {
                 return !proper(f) || !prime_over(d, all, f) || maximal_among(sf, f, zero);
               }));
  report.check("P5-primary-s-maximal", scan(sf, [&](const auto& f) {
                 return !proper(f) || !primary_over(d, all, f) || maximal_among(sf, f, zero);
               }));
  report.check("T5-1", scan(gs, [&](const auto& g) { return primary_over(d, sbar, g) == prime_over(d, sbar, g); }));
  report.check("T5-2", scan(gs, [&](const auto& g) {
                 return !proper(g) || !primary_over(d, sbar, g) || maximal_among(gs, g, zero);
               }));
  report.check("T5-3", scan(fs, [&](const auto& f) { return !maximal_among(fs, f, zero) || primary_over(d, all, f); }));
  report.check("P5-max-correspondence", scan(gs, [&](const auto& g) {
                 return maximal_among(gs, g, zero) == maximal_among(sf, f_from_skeleton_filter(d, g), zero);
               }));
  report.check("P5-primary-trace", scan(sf, [&](const auto& f) {
                 return primary_over(d, all, f) == prime_over(d, sbar, trace(d, f));
               }));
  {
    std::vector<std::string> w;
    for (const auto& f : sf) {
      if (!proper(f) || !w.empty()) continue;
      try {
        const auto g = extend_to_primary(d, f, cap);
        if (!f.subset_of(g) || !proper(g) || !primary_over(d, all, g) || !is_s_filter(d, g)) w = {format_set(l, f)};
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NoPrimaryExtension) throw;
        w = {format_set(l, f)};
      }
    }
    report.check("P5-extend", std::move(w));
  }

  const auto n = l.size();
  auto name = [&](std::size_t x) { return l.name(static_cast<Elem>(x)); };
  const auto atoms = l.atoms();
  report.check("R5-principal-maximal", detail::witness1(n, name, [&](auto a) {
                 return maximal_among(fs, up_set(l, static_cast<Elem>(a)), zero) == atoms.contains(static_cast<Elem>(a));
               }));
  const auto satoms = skeleton_atoms(d);
  auto remark = [&](auto a) {
    return maximal_among(sf, s_principal(d, static_cast<Elem>(a)), zero) == satoms.contains(static_cast<Elem>(a));
  };
  report.check("R5-s-principal-maximal", detail::witness1(n, name, [&](auto a) {
                 return !sbar.contains(static_cast<Elem>(a)) || remark(a);
               }));
  if (auto w = detail::witness1(n, name, remark); w.empty()) {
    report.pass("R5-s-principal-maximal-all");
  } else {
    report.finding("R5-s-principal-maximal-all", std::move(w),
                   "S[a) = S[a^ΔΔ), so S[a) is maximal when a^ΔΔ is an atom of the skeleton even if a is not in it");
  }
  return report;
}

}  // namespace wdl
