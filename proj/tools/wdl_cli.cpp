#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "wdl/error.hpp"
#include "wdl/io.hpp"
#include "wdl/report.hpp"

using namespace wdl;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitLawFailure = 1;
constexpr int kExitInputError = 2;

struct Input {
  std::string file;
  std::string builtin;
  bool json = false;
  std::size_t max_size = 0;
  std::string side = "delta";
};

std::string subject_of(const Input& in) {
  return in.builtin.empty() ? std::filesystem::path(in.file).stem().string() : in.builtin;
}

LatticeSpec read_spec(const Input& in) {
  if (!in.builtin.empty()) return builtin_spec(in.builtin);
  std::ifstream f(in.file);
  if (!f) throw Error(ErrorKind::InvalidSpec, "cannot read " + in.file);
  std::ostringstream text;
  text << f.rdbuf();
  return parse(text.str());
}

Dicomplementation load(const Input& in) {
  if (!in.builtin.empty()) return builtin(in.builtin);
  return load_dicomplementation(read_spec(in), in.max_size ? in.max_size : kDefaultLatticeCap);
}

Caps caps_of(const Input& in) {
  Caps caps;
  if (in.max_size) caps.filters = caps.congruences = in.max_size;
  return caps;
}

std::size_t filter_cap(const Input& in) { return caps_of(in).filters; }

int exit_for(const LawReport& r) { return r.all_pass() ? kExitOk : kExitLawFailure; }

json table_json(const BoundedLattice& l, const UnaryTable& t) {
  json out = json::object();
  for (Elem x = 0; x < l.size(); ++x) out[l.name(x)] = l.name(t[x]);
  return out;
}

void print_sets(std::ostream& os, const BoundedLattice& l, const std::vector<ElementSet>& sets) {
  for (const auto& s : sets) os << format_set(l, s) << '\n';
}

int emit(const Input& in, json j, const LawReport& laws, const std::string& text) {
  if (in.json) {
    j["laws"] = to_json(laws);
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << text << to_text(laws);
  }
  return exit_for(laws);
}

int cmd_validate(const Input& in) {
  const auto subject = subject_of(in);
  try {
    const auto d = load(in);
    const auto& l = d.base();
    const auto laws = axiom_report(d);
    json j{{"subject", subject},
           {"size", l.size()},
           {"distributive", is_distributive(l)},
           {"delta", d.has_delta()},
           {"nabla", d.has_nabla()},
           {"valid", true}};
    std::ostringstream os;
    os << subject << ": " << l.size() << " elements, " << (is_distributive(l) ? "distributive" : "not distributive")
       << (d.has_delta() ? ", delta" : "") << (d.has_nabla() ? ", nabla" : "") << '\n';
    return emit(in, std::move(j), laws, os.str());
  } catch (const AxiomViolation& e) {
    if (in.json) {
      std::cout << json{{"subject", subject}, {"valid", false}, {"axiom", e.axiom()}, {"witness", e.witness()}}.dump(2)
                << '\n';
    } else {
      std::cout << subject << ": axiom " << e.axiom() << " fails at";
      for (const auto& w : e.witness()) std::cout << ' ' << w;
      std::cout << '\n';
    }
    return kExitLawFailure;
  }
}

int cmd_laws(const Input& in) {
  const auto d = load(in);
  return emit(in, {{"subject", subject_of(in)}}, check_identities(d), "");
}

int cmd_filters(const Input& in) {
  const auto d = load(in);
  const auto& l = d.base();
  const auto algebra = filter_lattice_dual_wcl(d, filter_cap(in));
  const auto& fl = algebra.filters;
  LawReport laws = algebra.laws;
  laws.append(pseudocomplement_checks(d, filter_cap(in)));
  laws.append(principal_dual_iso(d, filter_cap(in)));

  json j{{"subject", subject_of(in)}, {"filters", sets_json(l, fl.filters())}};
  std::ostringstream os;
  print_sets(os, l, fl.filters());
  if (fl.star_table()) {
    json star = json::array();
    for (Elem i = 0; i < fl.size(); ++i) {
      const auto& image = fl.filters()[(*fl.star_table())[i]];
      star.push_back({{"filter", sets_json(l, {fl.filters()[i]})[0]}, {"star", sets_json(l, {image})[0]}});
      os << "star " << format_set(l, fl.filters()[i]) << " = " << format_set(l, image) << '\n';
    }
    j["star"] = std::move(star);
  }
  return emit(in, std::move(j), laws, os.str());
}

int cmd_sfilters(const Input& in) {
  const auto d = load(in);
  const auto& l = d.base();
  const auto cap = filter_cap(in);
  const auto sf = enumerate_s_filters(d, cap);
  const auto gs = skeleton_filters(d, cap);
  LawReport laws = s_generation_checks(d, cap);
  laws.append(phi_iso_check(d, cap));
  laws.append(s_principal_ortholattice(d));

  json j{{"subject", subject_of(in)}, {"s_filters", sets_json(l, sf)}, {"skeleton_filters", sets_json(l, gs)}};
  std::ostringstream os;
  os << "S-filters:\n";
  print_sets(os, l, sf);
  json phi = json::array();
  for (const auto& g : gs) {
    const auto f = f_from_skeleton_filter(d, g);
    phi.push_back({{"skeleton_filter", sets_json(l, {g})[0]}, {"s_filter", sets_json(l, {f})[0]}});
    os << "phi " << format_set(l, g) << " = " << format_set(l, f) << '\n';
  }
  j["phi"] = std::move(phi);
  json conds = json::array();
  for (const auto& f : all_filters(l, cap)) {
    const auto c = s_conditions(d, f);
    conds.push_back({{"filter", sets_json(l, {f})[0]},
                     {"dagger", c.dagger},
                     {"ddagger", c.ddagger},
                     {"dagger_ddagger", c.dagger_ddagger},
                     {"witness", c.dagger_witness}});
  }
  j["conditions"] = std::move(conds);
  return emit(in, std::move(j), laws, os.str());
}

json classification_json(const BoundedLattice& l, const FilterClassification& c) {
  return {{"filter", sets_json(l, {c.filter})[0]},
          {"proper", c.is_proper},
          {"prime", c.is_prime},
          {"primary", c.is_primary},
          {"maximal", c.is_maximal}};
}

int cmd_spectra(const Input& in) {
  const auto d = load(in);
  const auto& l = d.base();
  const auto cap = filter_cap(in);
  json j{{"subject", subject_of(in)}, {"lattice", json::array()}, {"skeleton", json::array()}};
  std::ostringstream os;
  auto row = [&](const FilterClassification& c) {
    os << format_set(l, c.filter) << (c.is_proper ? " proper" : "") << (c.is_prime ? " prime" : "")
       << (c.is_primary ? " primary" : "") << (c.is_maximal ? " maximal" : "") << '\n';
  };
  os << "filters of L:\n";
  for (const auto& f : all_filters(l, cap)) {
    const auto c = classify(d, f, FilterUniverse::Lattice, cap);
    j["lattice"].push_back(classification_json(l, c));
    row(c);
  }
  os << "filters of the dual skeleton:\n";
  for (const auto& g : skeleton_filters(d, cap)) {
    const auto c = classify(d, g, FilterUniverse::Skeleton, cap);
    j["skeleton"].push_back(classification_json(l, c));
    row(c);
  }
  return emit(in, std::move(j), verify_spectral_theorems(d, cap), os.str());
}

int cmd_congruences(const Input& in) {
  const auto d = load(in);
  const auto& l = d.base();
  const auto cap = caps_of(in).congruences;
  const auto con = enumerate_congruences(d, cap);
  auto structure = structure_checks(d, cap);
  LawReport laws = structure.laws;
  laws.append(join_formula_check(d, cap));
  laws.append(permutability_check(d, cap));

  json j{{"subject", subject_of(in)},
         {"congruences", json::array()},
         {"cokernels", json::array()},
         {"phi", partition_json(l, determination_congruence(d))},
         {"distributive", structure.distributive},
         {"regular", structure.regular},
         {"simple", structure.simple},
         {"subdirectly_irreducible", structure.subdirectly_irreducible}};
  std::ostringstream os;
  for (const auto& c : con) {
    j["congruences"].push_back(partition_json(l, c));
    j["cokernels"].push_back(sets_json(l, {cokernel(l, c)})[0]);
    os << format_partition(l, c) << " cokernel " << format_set(l, cokernel(l, c)) << '\n';
  }
  os << "phi " << format_partition(l, determination_congruence(d)) << '\n'
     << "regular " << structure.regular << ", simple " << structure.simple << ", subdirectly irreducible "
     << structure.subdirectly_irreducible << '\n';
  return emit(in, std::move(j), laws, os.str());
}

int cmd_verify_all(const Input& in) {
  const auto d = load(in);
  const auto subject = subject_of(in);
  const auto sections = verify_all(d, subject, caps_of(in));
  bool ok = true;
  for (const auto& s : sections) ok = ok && s.laws.all_pass();
  if (in.json) {
    std::cout << to_json(subject, sections).dump(2) << '\n';
  } else {
    std::size_t counts[3] = {0, 0, 0};
    for (const auto& s : sections) {
      std::cout << "[" << s.name << "]\n" << to_text(s.laws);
      counts[0] += s.laws.count(LawStatus::Pass);
      counts[1] += s.laws.count(LawStatus::Fail);
      counts[2] += s.laws.count(LawStatus::Finding);
    }
    std::cout << subject << ": " << counts[0] << " pass, " << counts[1] << " fail, " << counts[2] << " finding\n";
  }
  return ok ? kExitOk : kExitLawFailure;
}

int cmd_export_dot(const Input& in) {
  const auto dot = to_dot(load(in), subject_of(in));
  if (in.json) {
    std::cout << json{{"subject", subject_of(in)}, {"dot", dot}}.dump(2) << '\n';
  } else {
    std::cout << dot;
  }
  return kExitOk;
}

int cmd_enumerate(const Input& in) {
  auto spec = read_spec(in);
  spec.delta.reset();
  spec.nabla.reset();
  const auto l = build_lattice(spec);
  const auto side = in.side == "nabla" ? EnumerationSide::Nabla
                    : in.side == "both" ? EnumerationSide::Both
                                        : EnumerationSide::Delta;
  const auto all = enumerate_dicomplementations(l, side, in.max_size ? in.max_size : kDefaultEnumerationCap);
  json list = json::array();
  for (const auto& d : all) {
    json entry = json::object();
    if (d.has_delta()) entry["delta"] = table_json(l, *d.delta_table());
    if (d.has_nabla()) entry["nabla"] = table_json(l, *d.nabla_table());
    list.push_back(std::move(entry));
  }
  if (in.json) {
    std::cout << json{{"subject", subject_of(in)}, {"side", in.side}, {"count", all.size()}, {"tables", list}}.dump(2)
              << '\n';
  } else {
    for (const auto& entry : list) std::cout << entry.dump() << '\n';
    std::cout << all.size() << " tables\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weakly dicomplemented lattices: filters, S-filters, spectra and congruences"};
  app.require_subcommand(1);
  Input in;

  auto add_input = [&](CLI::App* sub) {
    auto* file = sub->add_option("--file", in.file, "Lattice file")->check(CLI::ExistingFile);
    auto* b = sub->add_option("--builtin", in.builtin, "Builtin instance name");
    file->excludes(b);
    b->excludes(file);
    sub->add_flag("--json", in.json, "Machine-readable output");
    sub->add_option("--max-size", in.max_size, "Enumeration cap");
    return sub;
  };

  std::vector<std::pair<CLI::App*, int (*)(const Input&)>> commands{
      {add_input(app.add_subcommand("validate", "Check the axioms")), cmd_validate},
      {add_input(app.add_subcommand("laws", "Evaluate the standard identities")), cmd_laws},
      {add_input(app.add_subcommand("filters", "Filter lattice with star")), cmd_filters},
      {add_input(app.add_subcommand("sfilters", "S-filters and the skeleton correspondence")), cmd_sfilters},
      {add_input(app.add_subcommand("spectra", "Prime, primary and maximal filters")), cmd_spectra},
      {add_input(app.add_subcommand("congruences", "Congruence lattice and structure")), cmd_congruences},
      {add_input(app.add_subcommand("verify-all", "Every law suite")), cmd_verify_all},
      {add_input(app.add_subcommand("export-dot", "Hasse diagram in DOT")), cmd_export_dot},
  };
  auto* enumerate = add_input(app.add_subcommand("enumerate", "All weak (dual) complementations of a lattice"));
  enumerate->add_option("--side", in.side, "delta, nabla or both")
      ->check(CLI::IsMember({"delta", "nabla", "both"}));
  commands.emplace_back(enumerate, cmd_enumerate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }
  if (in.file.empty() && in.builtin.empty()) {
    std::cerr << "one of --file or --builtin is required\n";
    return kExitInputError;
  }

  try {
    for (const auto& [sub, run] : commands)
      if (sub->parsed()) return run(in);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}
