#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "wdl/congruence.hpp"
#include "wdl/spectra.hpp"

namespace wdl {

struct ReportSection {
  std::string name;
  LawReport laws;
};

struct Caps {
  std::size_t filters = kDefaultFilterCap;
  std::size_t congruences = kDefaultCongruenceCap;
};

/// Every law suite that applies to `d`, in a fixed order: axioms,
/// identities, skeletons, nearlattice, then (with Δ) filters, sfilters,
/// spectra, congruences, and the worked-example claims when `subject`
/// names a builtin that has them.
std::vector<ReportSection> verify_all(const Dicomplementation& d, const std::string& subject, Caps caps = {});

/// Claims made about the worked examples L6 and L7, checked on `d`.
/// Empty for other subjects. Ids start with "EX-".
LawReport example_claims(const std::string& subject, const Dicomplementation& d);

/// {"id", "status", "witness", "note"} per law, in report order.
nlohmann::json to_json(const LawReport& report);
/// {"subject", "sections": [{"name", "laws"}], "summary": {"pass", "fail", "finding"}}.
nlohmann::json to_json(const std::string& subject, const std::vector<ReportSection>& sections);

/// Plain text: one law per line.
std::string to_text(const LawReport& report);

/// Hasse diagram of the covers, bottom to top. Elements of S̄(L) only are
/// boxes, of S(L) only diamonds, of both double circles.
std::string to_dot(const Dicomplementation& d, const std::string& graph_name);

/// Filters as arrays of element names.
nlohmann::json sets_json(const BoundedLattice& lattice, const std::vector<ElementSet>& sets);
nlohmann::json partition_json(const BoundedLattice& lattice, const Congruence& c);

}  // namespace wdl
