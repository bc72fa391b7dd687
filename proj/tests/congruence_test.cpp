#include <algorithm>
#include <set>

#include "corpus.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "wdl/congruence.hpp"
#include "wdl/error.hpp"
#include "wdl/io.hpp"

using namespace wdl;

namespace {

using Blocks = std::vector<std::vector<std::string>>;

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

void check_no_failures(const std::string& name, const LawReport& report) {
  for (const auto& res : report.results()) {
    INFO(name << " " << res.id);
    CHECK(res.status != LawStatus::Fail);
  }
}

}  // namespace

TEST_CASE("partitions of L6") {
  const auto d = builtin("L6");
  const auto& l = d.base();
  CHECK(is_congruence(d, partition_from_names(l, Blocks{{"0", "u"}, {"v", "a"}, {"b", "1"}})));
  CHECK(is_congruence(d, partition_from_names(l, Blocks{{"0", "v", "b"}, {"u", "a", "1"}})));
  const auto bad = partition_from_names(l, Blocks{{"0", "a"}, {"u"}, {"v"}, {"b"}, {"1"}});
  CHECK_FALSE(is_congruence(d, bad));
  const auto v = congruence_violation(d, bad);
  REQUIRE(v.has_value());
  CHECK(v->witness.front() == "0");
  CHECK(v->witness[1] == "a");
}

TEST_CASE("malformed partitions") {
  const auto d = builtin("L6");
  const auto& l = d.base();
  CHECK(kind_of([&] { partition_from_names(l, Blocks{{"0", "u"}, {"u", "v", "a", "b", "1"}}); }) ==
        ErrorKind::MalformedPartition);
  CHECK(kind_of([&] { partition_from_names(l, Blocks{{"0", "u"}, {"v"}}); }) == ErrorKind::MalformedPartition);
  CHECK(kind_of([&] { partition_from_names(l, Blocks{{"0", "zz"}}); }) == ErrorKind::UnknownElement);
  Relation r(3);
  r.insert(0, 0);
  r.insert(1, 1);
  r.insert(2, 2);
  r.insert(0, 1);
  CHECK(kind_of([&] { Congruence::from_relation(r); }) == ErrorKind::MalformedPartition);
  r.insert(1, 0);
  CHECK(Congruence::from_relation(r).block_count() == 2);
}

TEST_CASE("determination congruence") {
  const auto l6 = builtin("L6");
  CHECK(block_names(l6.base(), determination_congruence(l6)) == Blocks{{"0", "v"}, {"u", "a"}, {"b"}, {"1"}});
  const auto b4 = builtin("B4");
  CHECK(determination_congruence(b4).is_diagonal());
  const auto triv = builtin("L6-trivial");
  CHECK(block_names(triv.base(), determination_congruence(triv)) == Blocks{{"0", "u", "v", "a", "b"}, {"1"}});
}

TEST_CASE("theta of S-filters on L6") {
  const auto d = builtin("L6");
  const auto& l = d.base();
  CHECK(block_names(l, theta_from_filter(d, set_of(l, {"b", "1"}))) == Blocks{{"0", "u"}, {"v", "a"}, {"b", "1"}});
  CHECK(block_names(l, theta_from_filter(d, set_of(l, {"u", "a", "1"}))) == Blocks{{"0", "v", "b"}, {"u", "a", "1"}});
  CHECK(theta_from_filter(d, set_of(l, {"1"})).is_diagonal());
  CHECK(theta_from_filter(d, l.all()).is_full());
  CHECK(kind_of([&] { theta_from_filter(d, set_of(l, {"a", "1"})); }) == ErrorKind::NotSFilter);
  const auto l7 = builtin("L7");
  CHECK(kind_of([&] { theta_from_filter(l7, l7.base().all()); }) == ErrorKind::NotDistributive);
}

TEST_CASE("principal congruences and Con(L6)") {
  const auto d = builtin("L6");
  const auto& l = d.base();
  CHECK(principal_congruence(d, l.bottom(), l.top()).is_full());
  const auto con = enumerate_congruences(d);
  CHECK(con.size() == 6);
  CHECK(con.front().is_diagonal());
  CHECK(con.back().is_full());
  std::set<std::vector<Elem>> got;
  for (const auto& c : con) got.insert(c.class_of());
  std::set<std::vector<Elem>> want;
  for (const auto& cls : oracle::congruences_by_partition_scan(d)) want.insert(Congruence::from_classes(cls).class_of());
  CHECK(got == want);
}

TEST_CASE("structure of the named examples") {
  const auto l6 = structure_checks(builtin("L6"));
  CHECK(l6.distributive);
  CHECK_FALSE(l6.regular);
  CHECK_FALSE(l6.phi_is_diagonal);
  const auto* zero = l6.laws.find("T6-phi-zero-class");
  REQUIRE(zero != nullptr);
  CHECK(zero->status == LawStatus::Finding);
  CHECK(zero->witness == std::vector<std::string>{"{0,v}"});

  const auto b4 = structure_checks(builtin("B4"));
  CHECK(b4.regular);
  CHECK(b4.phi_is_diagonal);
  CHECK_FALSE(b4.simple);
  CHECK_FALSE(b4.subdirectly_irreducible);

  const auto c2 = structure_checks(builtin("chain-2-trivial"));
  CHECK(c2.simple);
  CHECK(c2.subdirectly_irreducible);
}

TEST_CASE("two-element skeleton remark on the 3-chain") {
  const auto d = builtin("chain-3-trivial");
  const auto& l = d.base();
  CHECK(is_congruence(d, Congruence::from_blocks(3, {{l.bottom(), 1}, {l.top()}})));
  const auto report = structure_checks(d);
  const auto* r = report.laws.find("R6-two-skeleton");
  REQUIRE(r != nullptr);
  CHECK(r->status == LawStatus::Finding);
}

TEST_CASE("join formula and permutability") {
  const auto d = builtin("L6");
  CHECK(join_formula_check(d).all_pass());
  CHECK(permutability_check(d).all_pass());
  CHECK(join_formula_check(builtin("L7")).size() == 0);
}

TEST_CASE("corpus: congruences against the partition scan and the structure laws") {
  for (const auto& inst : corpus::all()) {
    INFO(inst.name);
    std::set<std::vector<Elem>> got;
    for (const auto& c : enumerate_congruences(inst.d)) got.insert(c.class_of());
    std::set<std::vector<Elem>> want;
    for (const auto& cls : oracle::congruences_by_partition_scan(inst.d))
      want.insert(Congruence::from_classes(cls).class_of());
    CHECK(got == want);
    check_no_failures(inst.name, structure_checks(inst.d).laws);
    check_no_failures(inst.name, join_formula_check(inst.d));
    check_no_failures(inst.name, permutability_check(inst.d));
  }
}
