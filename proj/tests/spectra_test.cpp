#include <algorithm>

#include "corpus.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "wdl/error.hpp"
#include "wdl/io.hpp"
#include "wdl/spectra.hpp"

using namespace wdl;

namespace {

ElementSet set_of(const BoundedLattice& l, std::initializer_list<const char*> names) {
  ElementSet s(l.size());
  for (const char* n : names) s.insert(l.index(n));
  return s;
}

template <typename Fn>
ErrorKind kind_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no exception");
  return ErrorKind::SyntaxError;
}

}  // namespace

TEST_CASE("classification of the filters of L6") {
  const auto d = builtin("L6");
  const auto& l = d.base();

  const auto f3 = classify(d, set_of(l, {"b", "1"}), FilterUniverse::Lattice);
  CHECK(f3.is_primary);
  CHECK_FALSE(f3.is_maximal);
  CHECK(f3.is_proper);

  const auto f2 = classify(d, set_of(l, {"a", "1"}), FilterUniverse::Lattice);
  CHECK_FALSE(f2.is_primary);
  CHECK_FALSE(f2.is_prime);
  // u ∉ F2 and u^Δ = b ∉ F2.
  CHECK(l.name(d.delta(l.index("u"))) == "b");

  const auto f4 = classify(d, set_of(l, {"u", "a", "1"}), FilterUniverse::Lattice);
  CHECK(f4.is_maximal);
  CHECK(f4.is_primary);

  std::vector<std::string> maximal;
  for (const auto& f : all_filters(l)) {
    const auto c = classify(d, f, FilterUniverse::Lattice);
    if (c.is_maximal) {
      maximal.push_back(format_set(l, f));
      CHECK(c.is_primary);
    }
  }
  CHECK(maximal == std::vector<std::string>{"{u,a,1}", "{v,a,b,1}"});

  const auto whole = classify(d, l.all(), FilterUniverse::Lattice);
  CHECK_FALSE(whole.is_proper);
  CHECK_FALSE(whole.is_maximal);
  CHECK(whole.is_primary);
}

TEST_CASE("classification on the skeleton") {
  const auto d = builtin("L6");
  const auto& l = d.base();
  const auto e1 = classify(d, set_of(l, {"u", "1"}), FilterUniverse::Skeleton);
  CHECK(e1.is_primary);
  CHECK(e1.is_prime);
  CHECK(e1.is_maximal);
  CHECK(kind_of([&] { classify(d, set_of(l, {"u", "a", "1"}), FilterUniverse::Skeleton); }) ==
        ErrorKind::UniverseMismatch);
  CHECK(kind_of([&] { classify(d, set_of(l, {"a"}), FilterUniverse::Lattice); }) == ErrorKind::UniverseMismatch);

  std::vector<std::string> maximal_s;
  const auto sf = enumerate_s_filters(d);
  for (const auto& f : sf) {
    if (f.contains(l.bottom())) continue;
    const bool maximal = std::none_of(sf.begin(), sf.end(), [&](const auto& g) {
      return !g.contains(l.bottom()) && f.strict_subset_of(g);
    });
    if (maximal) maximal_s.push_back(format_set(l, f));
  }
  CHECK(maximal_s == std::vector<std::string>{"{b,1}", "{u,a,1}"});
  CHECK(s_principal(d, l.index("u")) == set_of(l, {"u", "a", "1"}));
  CHECK(s_principal(d, l.index("b")) == set_of(l, {"b", "1"}));
}

TEST_CASE("extension to a primary S-filter") {
  const auto d = builtin("L6");
  const auto& l = d.base();
  CHECK(extend_to_primary(d, set_of(l, {"1"})) == set_of(l, {"u", "a", "1"}));
  CHECK(extend_to_primary(d, set_of(l, {"b", "1"})) == set_of(l, {"b", "1"}));
  CHECK(extend_to_primary(d, set_of(l, {"u", "a", "1"})) == set_of(l, {"u", "a", "1"}));
  CHECK(kind_of([&] { extend_to_primary(d, l.all()); }) == ErrorKind::NotProper);
  CHECK(kind_of([&] { extend_to_primary(d, set_of(l, {"a", "1"})); }) == ErrorKind::NotSFilter);
}

TEST_CASE("spectral theorems on L6") {
  const auto d = builtin("L6");
  const auto r = verify_spectral_theorems(d);
  CHECK(r.size() == 12);
  for (const auto& res : r.results()) {
    INFO(res.id);
    CHECK(res.status != LawStatus::Fail);
  }
  // S[a) = S[u) is maximal although a is not in the skeleton.
  const auto* remark = r.find("R5-s-principal-maximal-all");
  REQUIRE(remark != nullptr);
  CHECK(remark->status == LawStatus::Finding);
  CHECK(remark->witness == std::vector<std::string>{"a"});
  CHECK(r.passed("R5-s-principal-maximal"));
}

TEST_CASE("classification agrees with direct evaluation on the corpus") {
  for (const auto& inst : corpus::all()) {
    INFO(inst.name);
    const auto& d = inst.d;
    const auto& l = d.base();
    const auto n = static_cast<Elem>(l.size());
    std::vector<ElementSet> filters;
    for (auto bits : oracle::filters_by_definition(l)) filters.emplace_back(n, bits);
    for (const auto& f : filters) {
      bool prime = true;
      bool primary = true;
      for (Elem x = 0; x < n; ++x) {
        if (!f.contains(x) && !f.contains(d.delta(x))) primary = false;
        for (Elem y = 0; y < n; ++y)
          if (f.contains(l.join(x, y)) && !f.contains(x) && !f.contains(y)) prime = false;
      }
      bool maximal = !f.contains(l.bottom());
      for (const auto& g : filters)
        if (!g.contains(l.bottom()) && f.strict_subset_of(g)) maximal = false;
      const auto c = classify(d, f, FilterUniverse::Lattice);
      CHECK(c.is_prime == prime);
      CHECK(c.is_primary == primary);
      CHECK(c.is_maximal == maximal);
      if (c.is_prime && c.is_proper) CHECK(c.is_primary);
    }
    for (const auto& g : skeleton_filters(d)) {
      const auto c = classify(d, g, FilterUniverse::Skeleton);
      CHECK(c.is_primary == c.is_prime);
      if (c.is_primary && c.is_proper) CHECK(c.is_maximal);
    }
    for (const auto& f : enumerate_s_filters(d)) {
      if (f.contains(l.bottom())) continue;
      const auto g = extend_to_primary(d, f);
      CHECK(f.subset_of(g));
      CHECK(classify(d, g, FilterUniverse::Lattice).is_primary);
      CHECK(is_s_filter(d, g));
    }
    for (Elem a = 0; a < n; ++a) {
      const auto c = classify(d, up_set(l, a), FilterUniverse::Lattice);
      CHECK(c.is_maximal == l.atoms().contains(a));
    }
    const auto r = verify_spectral_theorems(d);
    for (const auto& res : r.results()) {
      INFO(res.id);
      CHECK(res.status != LawStatus::Fail);
    }
  }
}
