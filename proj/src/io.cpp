#include "wdl/io.hpp"

#include <set>
#include <sstream>

#include "wdl/error.hpp"

namespace wdl {

namespace {

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

constexpr std::string_view kL6 = R"(# L6: distributive WDL with tables (T2)
elements: 0 u v a b 1
cover: 0 u
cover: 0 v
cover: u a
cover: v a
cover: v b
cover: a 1
cover: b 1
delta: 0 1
delta: u b
delta: v 1
delta: a b
delta: b u
delta: 1 0
nabla: 0 1
nabla: u v
nabla: v u
nabla: a 0
nabla: b 0
nabla: 1 0
)";

constexpr std::string_view kL7 = R"(# L7: non-distributive WDL with tables (T1)
elements: 0 u v a b w 1
cover: 0 u
cover: 0 w
cover: 0 v
cover: u a
cover: w a
cover: w b
cover: v b
cover: a 1
cover: b 1
delta: 0 1
delta: u 1
delta: v 1
delta: a b
delta: b a
delta: w 1
delta: 1 0
nabla: 0 1
nabla: u v
nabla: v u
nabla: a 0
nabla: b 0
nabla: w 0
nabla: 1 0
)";

LatticeSpec strip_tables(LatticeSpec spec) {
  spec.delta.reset();
  spec.nabla.reset();
  return spec;
}

LatticeSpec with_tables(const Dicomplementation& d) {
  LatticeSpec spec = d.base().to_spec();
  const auto& l = d.base();
  if (d.has_delta()) {
    spec.delta.emplace();
    for (Elem x = 0; x < l.size(); ++x) spec.delta->emplace_back(l.name(x), l.name(d.delta(x)));
  }
  if (d.has_nabla()) {
    spec.nabla.emplace();
    for (Elem x = 0; x < l.size(); ++x) spec.nabla->emplace_back(l.name(x), l.name(d.nabla(x)));
  }
  return spec;
}

std::optional<std::size_t> chain_length(const std::string& name) {
  const std::string prefix = "chain-";
  const std::string suffix = "-trivial";
  if (name.size() <= prefix.size() + suffix.size()) return std::nullopt;
  if (name.compare(0, prefix.size(), prefix) != 0) return std::nullopt;
  if (name.compare(name.size() - suffix.size(), suffix.size(), suffix) != 0) return std::nullopt;
  const std::string digits = name.substr(prefix.size(), name.size() - prefix.size() - suffix.size());
  if (digits.empty() || digits.size() > 2 ||
      digits.find_first_not_of("0123456789") != std::string::npos) {
    return std::nullopt;
  }
  const auto n = std::stoul(digits);
  if (n == 0 || n > kMaxCarrier) return std::nullopt;
  return n;
}

}  // namespace

LatticeSpec parse(std::string_view text) {
  LatticeSpec spec;
  bool have_elements = false;
  std::set<std::pair<std::string, std::string>> seen_covers;
  std::set<std::string> seen_delta;
  std::set<std::string> seen_nabla;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (split_ws(line).empty()) continue;

    const auto colon = line.find(':');
    if (colon == std::string_view::npos) throw SyntaxError(line_no, "expected 'key: values'");
    const auto key_tokens = split_ws(line.substr(0, colon));
    if (key_tokens.size() != 1) throw SyntaxError(line_no, "malformed key");
    const std::string& key = key_tokens.front();
    const auto values = split_ws(line.substr(colon + 1));

    if (key == "elements") {
      if (have_elements) throw Error(ErrorKind::DuplicateDeclaration, "second 'elements' line");
      if (values.empty()) throw SyntaxError(line_no, "no elements declared");
      std::set<std::string> unique(values.begin(), values.end());
      if (unique.size() != values.size()) {
        throw Error(ErrorKind::DuplicateDeclaration, "element declared twice");
      }
      spec.elements = values;
      have_elements = true;
    } else if (key == "cover" || key == "delta" || key == "nabla") {
      if (values.size() != 2) throw SyntaxError(line_no, "'" + key + "' takes two elements");
      if (key == "cover") {
        if (!seen_covers.emplace(values[0], values[1]).second) {
          throw Error(ErrorKind::DuplicateDeclaration,
                      "cover " + values[0] + " " + values[1] + " declared twice");
        }
        spec.covers.emplace_back(values[0], values[1]);
      } else {
        auto& seen = key == "delta" ? seen_delta : seen_nabla;
        auto& rows = key == "delta" ? spec.delta : spec.nabla;
        if (!seen.insert(values[0]).second) {
          throw Error(ErrorKind::DuplicateDeclaration, key + " row for '" + values[0] + "'");
        }
        if (!rows) rows.emplace();
        rows->emplace_back(values[0], values[1]);
      }
    } else {
      throw SyntaxError(line_no, "unknown declaration '" + key + "'");
    }
  }
  if (!have_elements) throw SyntaxError(line_no, "no 'elements' declaration");

  const std::set<std::string> declared(spec.elements.begin(), spec.elements.end());
  for (const auto& [lo, hi] : spec.covers) {
    for (const auto* e : {&lo, &hi}) {
      if (!declared.count(*e)) {
        throw Error(ErrorKind::UnknownElementInCover, "'" + *e + "' is not declared");
      }
    }
  }
  return spec;
}

std::string serialize(const LatticeSpec& spec) {
  std::ostringstream out;
  out << "elements:";
  for (const auto& e : spec.elements) out << ' ' << e;
  out << '\n';
  for (const auto& [lo, hi] : spec.covers) out << "cover: " << lo << ' ' << hi << '\n';
  if (spec.delta)
    for (const auto& [x, y] : *spec.delta) out << "delta: " << x << ' ' << y << '\n';
  if (spec.nabla)
    for (const auto& [x, y] : *spec.nabla) out << "nabla: " << x << ' ' << y << '\n';
  return out.str();
}

Dicomplementation load_dicomplementation(const LatticeSpec& spec, std::size_t cap) {
  return attach_rows(build_lattice(spec, cap), spec.delta, spec.nabla);
}

std::vector<std::string> builtin_names() {
  return {"L6", "L7", "B2", "B4", "B8", "L6-trivial", "chain-2-trivial", "chain-3-trivial"};
}

LatticeSpec builtin_spec(const std::string& name) {
  if (name == "L6") return parse(kL6);
  if (name == "L7") return parse(kL7);
  return with_tables(builtin(name));
}

Dicomplementation builtin(const std::string& name) {
  if (name == "L6") return load_dicomplementation(parse(kL6));
  if (name == "L7") return load_dicomplementation(parse(kL7));
  if (name == "B2") return boolean_dicomplementation(chain(2));
  if (name == "B4") return boolean_dicomplementation(direct_power(chain(2), 2));
  if (name == "B8") return boolean_dicomplementation(direct_power(chain(2), 3));
  if (name == "L6-trivial") return trivial_dicomplementation(l6_lattice());
  if (auto n = chain_length(name)) return trivial_dicomplementation(chain(*n));
  throw Error(ErrorKind::UnknownBuiltin, "'" + name + "'");
}

BoundedLattice l6_lattice() { return build_lattice(strip_tables(parse(kL6))); }
BoundedLattice l7_lattice() { return build_lattice(strip_tables(parse(kL7))); }

BoundedLattice m3_lattice() {
  return build_lattice(parse("elements: 0 a b c 1\n"
                             "cover: 0 a\ncover: 0 b\ncover: 0 c\n"
                             "cover: a 1\ncover: b 1\ncover: c 1\n"));
}

BoundedLattice n5_lattice() {
  return build_lattice(parse("elements: 0 a b c 1\n"
                             "cover: 0 a\ncover: a b\ncover: b 1\n"
                             "cover: 0 c\ncover: c 1\n"));
}

}  // namespace wdl
