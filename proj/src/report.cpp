#include "wdl/report.hpp"

#include <sstream>

namespace wdl {

namespace {

ElementSet named(const BoundedLattice& l, std::initializer_list<const char*> names) {
  ElementSet s(l.size());
  for (const char* n : names) s.insert(l.index(n));
  return s;
}

std::vector<std::string> when_false(bool ok, std::vector<std::string> w) {
  return ok ? std::vector<std::string>{} : std::move(w);
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

void l6_claims(const Dicomplementation& d, LawReport& report) {
  const auto& l = d.base();
  const auto f2 = named(l, {"a", "1"});
  const auto f3 = named(l, {"b", "1"});
  const auto f4 = named(l, {"u", "a", "1"});
  const auto f5 = named(l, {"v", "a", "b", "1"});

  {
    const std::vector<ElementSet> expected{named(l, {"1"}), f2, f3, f4, f5, l.all()};
    const auto got = all_filters(l);
    report.check("EX-L6-filters", when_false(got == expected, {}));
  }
  {
    const Elem a = l.index("a");
    const Elem b = l.index("b");
    const Elem m = d.sqcap_bar(a, b);
    report.check("EX-L6-F5-not-sfilter",
                 when_false(f5.contains(a) && f5.contains(b) && m == l.bottom() && !f5.contains(m), {l.name(m)}));
  }
  const auto c2 = s_conditions(d, f2);
  if (c2.dagger) {
    report.pass("EX-L6-F2-dagger");
    report.pass("EX-L6-F2-sfilter");
  } else {
    report.finding("EX-L6-F2-dagger", c2.dagger_witness, "a ⊓̄ a = a^ΔΔ = u is not in {a,1}");
    report.finding("EX-L6-F2-sfilter", c2.dagger_witness, "{a,1} is not closed under ⊓̄");
  }
  report.check("EX-L6-F3-dagger", s_conditions(d, f3).dagger_witness);
  report.check("EX-L6-F4-dagger", s_conditions(d, f4).dagger_witness);
  report.check("EX-L6-F3-sfilter", when_false(is_s_filter(d, f3), {format_set(l, f3)}));
  report.check("EX-L6-join", when_false(filter_join(l, f2, f3) == f5, {format_set(l, filter_join(l, f2, f3))}));
  {
    const auto got = star(d, up_set(l, l.index("a")));
    report.check("EX-L6-star", when_false(got == up_set(l, l.index("b")), {format_set(l, got)}));
  }
  {
    const auto c = classify(d, f3, FilterUniverse::Lattice);
    report.check("EX-L6-F3-primary-not-maximal", when_false(c.is_primary && !c.is_maximal, {format_set(l, f3)}));
  }
  {
    const auto p1 = partition_from_names(l, {{"0", "u"}, {"v", "a"}, {"b", "1"}});
    const auto p2 = partition_from_names(l, {{"0", "v", "b"}, {"u", "a", "1"}});
    report.check("EX-L6-congruences", when_false(is_congruence(d, p1) && is_congruence(d, p2), {}));
    const auto t4 = theta_from_filter(d, f4);
    report.check("EX-L6-theta-F4", when_false(t4 == p2, {format_partition(l, t4)}));
  }
}

void l7_claims(const Dicomplementation& d, LawReport& report) {
  const auto& l = d.base();
  const Elem w = l.index("w");
  report.check("EX-L7-w", when_false(d.delta(w) == l.top() && d.nabla(w) == l.bottom(),
                                     {l.name(d.delta(w)), l.name(d.nabla(w))}));
  report.check("EX-L7-covers", when_false(l.covers().size() == 9, {std::to_string(l.covers().size())}));
}

}  // namespace

LawReport example_claims(const std::string& subject, const Dicomplementation& d) {
  LawReport report;
  if (subject == "L6") l6_claims(d, report);
  if (subject == "L7") l7_claims(d, report);
  return report;
}

std::vector<ReportSection> verify_all(const Dicomplementation& d, const std::string& subject, Caps caps) {
  std::vector<ReportSection> out;
  out.push_back({"axioms", axiom_report(d)});
  out.push_back({"identities", check_identities(d)});
  {
    LawReport r;
    if (d.has_nabla()) r.append(ortholattice_report(skeleton_algebra(d, SkeletonSide::Closed)), "S-");
    if (d.has_delta()) r.append(ortholattice_report(skeleton_algebra(d, SkeletonSide::Interior)), "Sbar-");
    out.push_back({"skeletons", std::move(r)});
  }
  out.push_back({"nearlattice", nearlattice_check(d).laws});
  if (!d.has_delta()) return out;

  {
    LawReport r = filter_lattice_dual_wcl(d, caps.filters).laws;
    r.append(pseudocomplement_checks(d, caps.filters));
    r.append(principal_dual_iso(d, caps.filters));
    out.push_back({"filters", std::move(r)});
  }
  {
    LawReport r = s_generation_checks(d, caps.filters);
    r.append(phi_iso_check(d, caps.filters));
    r.append(s_principal_ortholattice(d));
    out.push_back({"sfilters", std::move(r)});
  }
  out.push_back({"spectra", verify_spectral_theorems(d, caps.filters)});
  {
    LawReport r = structure_checks(d, caps.congruences).laws;
    r.append(join_formula_check(d, caps.congruences));
    r.append(permutability_check(d, caps.congruences));
    out.push_back({"congruences", std::move(r)});
  }
  if (auto ex = example_claims(subject, d); ex.size() > 0) out.push_back({"examples", std::move(ex)});
  return out;
}

nlohmann::json to_json(const LawReport& report) {
  auto out = nlohmann::json::array();
  for (const auto& r : report.results()) {
    nlohmann::json j{{"id", r.id}, {"status", std::string(to_string(r.status))}, {"witness", r.witness}};
    if (!r.note.empty()) j["note"] = r.note;
    out.push_back(std::move(j));
  }
  return out;
}

nlohmann::json to_json(const std::string& subject, const std::vector<ReportSection>& sections) {
  nlohmann::json out{{"subject", subject}, {"sections", nlohmann::json::array()}};
  std::size_t counts[3] = {0, 0, 0};
  for (const auto& s : sections) {
    out["sections"].push_back({{"name", s.name}, {"laws", to_json(s.laws)}});
    counts[0] += s.laws.count(LawStatus::Pass);
    counts[1] += s.laws.count(LawStatus::Fail);
    counts[2] += s.laws.count(LawStatus::Finding);
  }
  out["summary"] = {{"pass", counts[0]}, {"fail", counts[1]}, {"finding", counts[2]}};
  return out;
}

std::string to_text(const LawReport& report) {
  std::ostringstream os;
  for (const auto& r : report.results()) {
    os << to_string(r.status) << ' ' << r.id;
    if (!r.witness.empty()) {
      os << " (";
      for (std::size_t i = 0; i < r.witness.size(); ++i) os << (i ? ", " : "") << r.witness[i];
      os << ')';
    }
    if (!r.note.empty()) os << ": " << r.note;
    os << '\n';
  }
  return os.str();
}

std::string to_dot(const Dicomplementation& d, const std::string& graph_name) {
  const auto& l = d.base();
  const auto s = d.has_nabla() ? skeleton(d) : ElementSet(l.size());
  const auto sbar = d.has_delta() ? dual_skeleton(d) : ElementSet(l.size());
  std::ostringstream os;
  os << "digraph " << quoted(graph_name) << " {\n  rankdir=BT;\n  node [shape=circle];\n  edge [arrowhead=none];\n";
  for (Elem x = 0; x < l.size(); ++x) {
    os << "  " << quoted(l.name(x));
    if (s.contains(x) && sbar.contains(x)) {
      os << " [shape=doublecircle]";
    } else if (sbar.contains(x)) {
      os << " [shape=box]";
    } else if (s.contains(x)) {
      os << " [shape=diamond]";
    }
    os << ";\n";
  }
  for (const auto& [lo, hi] : l.covers()) os << "  " << quoted(l.name(lo)) << " -> " << quoted(l.name(hi)) << ";\n";
  os << "}\n";
  return os.str();
}

nlohmann::json sets_json(const BoundedLattice& l, const std::vector<ElementSet>& sets) {
  auto out = nlohmann::json::array();
  for (const auto& s : sets) {
    auto names = nlohmann::json::array();
    s.for_each([&](Elem x) { names.push_back(l.name(x)); });
    out.push_back(std::move(names));
  }
  return out;
}

nlohmann::json partition_json(const BoundedLattice& l, const Congruence& c) { return block_names(l, c); }

}  // namespace wdl
