#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "wdl/dicomplement.hpp"
#include "wdl/error.hpp"
#include "wdl/io.hpp"

using namespace wdl;

namespace {

UnaryTable table(const BoundedLattice& l, std::initializer_list<const char*> values) {
  UnaryTable t;
  for (const char* v : values) t.push_back(l.index(v));
  return t;
}

ElementSet set_of(const BoundedLattice& l, std::initializer_list<const char*> names) {
  ElementSet s(l.size());
  for (const char* n : names) s.insert(l.index(n));
  return s;
}

}  // namespace

TEST_CASE("the example tables are valid weak dicomplementations") {
  const auto l6 = builtin("L6");
  CHECK(l6.has_delta());
  CHECK(l6.has_nabla());
  const auto l7 = builtin("L7");
  const auto& b7 = l7.base();
  CHECK(b7.name(l7.delta(b7.index("w"))) == "1");
  CHECK(b7.name(l7.nabla(b7.index("w"))) == "0");
  const auto& b6 = l6.base();
  CHECK(b6.name(l6.nabla(b6.index("a"))) == "0");
  CHECK(b6.name(l6.nabla(b6.index("u"))) == "v");
  CHECK(axiom_report(l6).all_pass());
  CHECK(axiom_report(l7).all_pass());
}

TEST_CASE("attach reports the first falsifying instance") {
  const auto l = l6_lattice();
  // Every element to 1: only x^ΔΔ ≤ x fails, first at x = 0.
  try {
    attach(l, UnaryTable(6, l.top()), std::nullopt);
    FAIL("expected AxiomViolation");
  } catch (const AxiomViolation& e) {
    CHECK(e.axiom() == "1");
    CHECK(e.witness() == std::vector<std::string>{"0"});
  }
  CHECK_THROWS_AS(attach(l, std::nullopt, std::nullopt), Error);
  CHECK_THROWS_AS(attach(l, UnaryTable(3, 0), std::nullopt), Error);
  // ∇ above Δ somewhere: the T2 tables swapped.
  const auto d = table(l, {"1", "b", "1", "b", "u", "0"});
  const auto n = table(l, {"1", "v", "u", "0", "0", "0"});
  CHECK_NOTHROW(attach(l, d, n));
  try {
    attach(l, UnaryTable(6, l.top()), n);
    FAIL("expected AxiomViolation");
  } catch (const AxiomViolation& e) {
    CHECK(e.axiom() == "1");
  }
}

TEST_CASE("trivial dicomplementation") {
  const auto two = trivial_dicomplementation(chain(2));
  CHECK(two.delta(0) == 1);
  CHECK(two.delta(1) == 0);
  CHECK(two.nabla(0) == 1);
  CHECK(two.nabla(1) == 0);

  const auto l6 = trivial_dicomplementation(l6_lattice());
  const auto& l = l6.base();
  CHECK(l.name(l6.delta(l.index("u"))) == "1");
  CHECK(l6 != builtin("L6"));

  const auto one = trivial_dicomplementation(chain(1));
  CHECK(one.delta(0) == 0);
  CHECK(one.nabla(0) == 0);
}

TEST_CASE("boolean dicomplementation") {
  const auto sq = boolean_dicomplementation(direct_power(chain(2), 2));
  const auto& l = sq.base();
  const Elem p = l.index("(0,1)");
  const Elem q = l.index("(1,0)");
  CHECK(sq.delta(p) == q);
  CHECK(sq.delta(q) == p);
  CHECK(sq.delta(l.bottom()) == l.top());
  CHECK(sq.nabla(l.top()) == l.bottom());

  // On the cube the complement flips every coordinate of the tuple name.
  const auto cube = boolean_dicomplementation(direct_power(chain(2), 3));
  const auto& c = cube.base();
  for (Elem x = 0; x < c.size(); ++x) {
    std::string flipped = c.name(x);
    for (char& ch : flipped) {
      if (ch == '0') ch = '1';
      else if (ch == '1') ch = '0';
    }
    CHECK(c.name(cube.delta(x)) == flipped);
    CHECK(cube.nabla(x) == cube.delta(x));
  }

  try {
    boolean_dicomplementation(l6_lattice());
    FAIL("expected NotBoolean");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotBoolean);
  }
  CHECK_FALSE(boolean_complement(m3_lattice()).has_value());
}

TEST_CASE("derived operations") {
  const auto l6 = builtin("L6");
  const auto& b6 = l6.base();
  CHECK(l6.sqcap_bar(b6.index("a"), b6.index("b")) == b6.bottom());
  const auto l7 = builtin("L7");
  const auto& b7 = l7.base();
  CHECK(l7.sqcap_bar(b7.index("a"), b7.index("b")) == b7.bottom());
  CHECK(l7.interior(b7.index("w")) == b7.bottom());

  for (const auto& d : {l6, l7, builtin("B8"), builtin("L6-trivial")}) {
    for (Elem x = 0; x < d.size(); ++x) {
      CHECK(d.sqcap_bar(x, x) == d.interior(x));
      CHECK(d.sqcup(x, x) == d.closure(x));
      const auto ops = derived_ops(d, x, x);
      CHECK(ops.sqcup == d.closure(x));
      CHECK(ops.under_sqcup == d.interior(x));
    }
  }
  const auto wcl = l6.delta_reduct();
  CHECK_THROWS_AS(wcl.sqcup(0, 0), Error);
  CHECK_FALSE(derived_ops(wcl, 0, 1).sqcup.has_value());
  CHECK(derived_ops(wcl, 0, 1).sqcap_bar.has_value());
}

TEST_CASE("skeletons") {
  const auto l6 = builtin("L6");
  CHECK(dual_skeleton(l6) == set_of(l6.base(), {"0", "u", "b", "1"}));
  const auto l7 = builtin("L7");
  CHECK(dual_skeleton(l7) == set_of(l7.base(), {"0", "a", "b", "1"}));
  const auto b8 = builtin("B8");
  CHECK(skeleton(b8).is_full());
  CHECK(dual_skeleton(b8).is_full());
  CHECK_THROWS_AS(skeleton(l6.delta_reduct()), Error);
  for (const auto& d : {l6, l7, b8, builtin("chain-3-trivial")}) {
    CHECK(skeleton(d).contains(d.base().bottom()));
    CHECK(skeleton(d).contains(d.base().top()));
    CHECK(dual_skeleton(d).contains(d.base().bottom()));
    CHECK(dual_skeleton(d).contains(d.base().top()));
  }
}

TEST_CASE("skeleton algebras are ortholattices") {
  const auto l6 = builtin("L6");
  const auto& l = l6.base();
  const auto alg = skeleton_algebra(l6, SkeletonSide::Interior);
  CHECK(alg.carrier() == set_of(l, {"0", "u", "b", "1"}));
  const Elem u = l.index("u");
  const Elem b = l.index("b");
  CHECK(alg.join(u, b) == l.top());
  CHECK(alg.meet(u, b) == l.bottom());
  CHECK(alg.complement(u) == b);
  CHECK(alg.complement(b) == u);
  CHECK(alg.as_lattice().size() == 4);

  const auto l7 = builtin("L7");
  const auto alg7 = skeleton_algebra(l7, SkeletonSide::Interior);
  CHECK(l7.base().name(alg7.complement(l7.base().index("a"))) == "b");
  CHECK(l7.base().name(alg7.complement(l7.base().index("b"))) == "a");

  const auto two = skeleton_algebra(builtin("chain-2-trivial"), SkeletonSide::Closed);
  CHECK(two.carrier().size() == 2);
  CHECK(two.complement(0) == 1);

  for (const auto& d : {l6, l7, builtin("B8"), builtin("L6-trivial")}) {
    CHECK(ortholattice_report(SkeletonAlgebra(d, SkeletonSide::Closed)).all_pass());
    CHECK(ortholattice_report(SkeletonAlgebra(d, SkeletonSide::Interior)).all_pass());
  }
}

TEST_CASE("dense and codense sets") {
  const auto l6 = builtin("L6");
  const auto& l = l6.base();
  CHECK(dense_set(l6) == set_of(l, {"a", "b", "1"}));
  CHECK(codense_set(l6) == set_of(l, {"0", "v"}));
  const auto rep = nearlattice_check(l6);
  CHECK(rep.laws.all_pass());
  CHECK_FALSE(rep.dense_has_least);
  CHECK(rep.codense_has_greatest);

  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& base : oracle::all_lattices(n)) {
      const auto t = trivial_dicomplementation(base);
      auto expect_dense = base.all();
      auto expect_codense = base.all();
      if (n > 1) {
        expect_dense.erase(base.bottom());
        expect_codense.erase(base.top());
      }
      CHECK(dense_set(t) == expect_dense);
      CHECK(codense_set(t) == expect_codense);
      CHECK(nearlattice_check(t).laws.all_pass());
    }
  }
}

TEST_CASE("identities hold on the examples") {
  for (const char* name : {"L6", "L7", "B2", "B4", "B8", "L6-trivial", "chain-3-trivial"}) {
    INFO(name);
    const auto report = check_identities(builtin(name));
    CHECK(report.all_pass());
    CHECK(report.size() == 30);
  }
  CHECK(check_identities(builtin("L6").delta_reduct()).size() == 15);
}

TEST_CASE("a corrupted weak complementation falsifies an identity") {
  const auto l = l6_lattice();
  // T2 with u^Δ and v^Δ swapped.
  const auto corrupt = Dicomplementation::unchecked(
      l, table(l, {"1", "1", "b", "b", "u", "0"}), std::nullopt);
  CHECK_FALSE(axiom_report(corrupt).all_pass());
  const auto report = check_identities(corrupt);
  const auto it = std::find_if(report.results().begin(), report.results().end(),
                               [](const LawResult& r) { return r.status == LawStatus::Fail; });
  REQUIRE(it != report.results().end());
  CHECK(it->id == "P2.2-4");
  CHECK(it->witness == std::vector<std::string>{"v", "b"});
}

TEST_CASE("enumeration of weak complementations") {
  CHECK(enumerate_dicomplementations(chain(2), EnumerationSide::Delta).size() == 1);
  const auto one = enumerate_dicomplementations(chain(1), EnumerationSide::Both);
  REQUIRE(one.size() == 1);
  CHECK(one[0].delta(0) == 0);

  const auto l6 = l6_lattice();
  const auto all = enumerate_dicomplementations(l6, EnumerationSide::Delta);
  CHECK(all.size() == 3);
  const auto t2 = *builtin("L6").delta_table();
  const auto triv = *trivial_dicomplementation(l6).delta_table();
  auto has = [&](const UnaryTable& t) {
    return std::any_of(all.begin(), all.end(), [&](const auto& d) { return *d.delta_table() == t; });
  };
  CHECK(has(t2));
  CHECK(has(triv));
  CHECK(enumerate_dicomplementations(l6, EnumerationSide::Nabla).size() == 3);
  CHECK(enumerate_dicomplementations(l6, EnumerationSide::Both).size() == 9);
  CHECK_THROWS_AS(enumerate_dicomplementations(l7_lattice(), EnumerationSide::Delta), Error);
}

TEST_CASE("enumeration matches brute force over every table") {
  auto corpus = oracle::all_lattices_up_to(5);
  corpus.push_back(l6_lattice());
  for (const auto& l : corpus) {
    std::vector<UnaryTable> deltas, nablas;
    for (const auto& t : oracle::all_tables(l.size())) {
      if (oracle::is_weak_complementation(l, t)) deltas.push_back(t);
      if (oracle::is_dual_weak_complementation(l, t)) nablas.push_back(t);
    }
    const auto ed = enumerate_dicomplementations(l, EnumerationSide::Delta);
    const auto en = enumerate_dicomplementations(l, EnumerationSide::Nabla);
    REQUIRE(ed.size() == deltas.size());
    REQUIRE(en.size() == nablas.size());
    for (std::size_t i = 0; i < ed.size(); ++i) CHECK(*ed[i].delta_table() == deltas[i]);
    for (std::size_t i = 0; i < en.size(); ++i) CHECK(*en[i].nabla_table() == nablas[i]);
    // Round trip through validation.
    for (const auto& d : enumerate_dicomplementations(l, EnumerationSide::Both)) {
      CHECK_NOTHROW(attach(d.base(), d.delta_table(), d.nabla_table()));
    }
  }
}

TEST_CASE("closure and interior operators on every enumerated dicomplementation") {
  for (const auto& l : oracle::all_lattices_up_to(5)) {
    for (const auto& d : enumerate_dicomplementations(l, EnumerationSide::Both)) {
      const auto n = static_cast<Elem>(l.size());
      for (Elem x = 0; x < n; ++x) {
        CHECK(d.delta(d.delta(d.delta(x))) == d.delta(x));
        CHECK(d.nabla(d.nabla(d.nabla(x))) == d.nabla(x));
        CHECK(l.join(x, d.delta(x)) == l.top());
        CHECK(l.meet(x, d.nabla(x)) == l.bottom());
      }
      CHECK(check_identities(d).all_pass());
      CHECK(ortholattice_report(SkeletonAlgebra(d, SkeletonSide::Closed)).all_pass());
      CHECK(ortholattice_report(SkeletonAlgebra(d, SkeletonSide::Interior)).all_pass());
      CHECK(nearlattice_check(d).laws.all_pass());
    }
  }
}
