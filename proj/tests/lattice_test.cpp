#include "doctest.h"
#include "oracles.hpp"
#include "wdl/error.hpp"
#include "wdl/io.hpp"
#include "wdl/lattice.hpp"

using namespace wdl;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an exception");
  return ErrorKind::InvalidSpec;
}

LatticeSpec spec_of(std::string_view text) { return parse(text); }

}  // namespace

TEST_CASE("L6 builds with the expected meets and joins") {
  const auto l = l6_lattice();
  CHECK(l.size() == 6);
  CHECK(l.name(l.meet(l.index("a"), l.index("b"))) == "v");
  CHECK(l.name(l.join(l.index("u"), l.index("v"))) == "a");
  CHECK(l.name(l.bottom()) == "0");
  CHECK(l.name(l.top()) == "1");
  CHECK(l.covers().size() == 7);
}

TEST_CASE("L7 builds with the expected meets and joins") {
  const auto l = l7_lattice();
  CHECK(l.size() == 7);
  CHECK(l.name(l.meet(l.index("a"), l.index("b"))) == "w");
  CHECK(l.name(l.join(l.index("u"), l.index("v"))) == "1");
  CHECK(l.covers().size() == 9);
}

TEST_CASE("single element lattice has bottom equal to top") {
  const auto l = build_lattice(spec_of("elements: e\n"));
  CHECK(l.size() == 1);
  CHECK(l.bottom() == l.top());
  CHECK(l.name(l.top()) == "e");
}

TEST_CASE("build_lattice rejects malformed orders") {
  CHECK(kind_of([] { build_lattice(spec_of("elements: 0 a 1\ncover: 0 a\ncover: a 0\ncover: a 1\n")); }) ==
        ErrorKind::NotAPoset);
  CHECK(kind_of([] { build_lattice(spec_of("elements: 0 a\ncover: a a\n")); }) == ErrorKind::NotAPoset);
  CHECK(kind_of([] { build_lattice(spec_of("elements: 0 a b\ncover: 0 a\ncover: 0 b\n")); }) ==
        ErrorKind::NotBounded);
  CHECK(kind_of([] {
          build_lattice(spec_of("elements: 0 a b c d 1\n"
                                "cover: 0 a\ncover: 0 b\ncover: a c\ncover: a d\n"
                                "cover: b c\ncover: b d\ncover: c 1\ncover: d 1\n"));
        }) == ErrorKind::NotALattice);
  LatticeSpec dup;
  dup.elements = {"0", "0"};
  CHECK(kind_of([&] { build_lattice(dup); }) == ErrorKind::InvalidSpec);
  LatticeSpec unknown;
  unknown.elements = {"0", "1"};
  unknown.covers = {{"0", "x"}};
  CHECK(kind_of([&] { build_lattice(unknown); }) == ErrorKind::UnknownElement);
  CHECK(kind_of([] { build_lattice(chain(5).to_spec(), 4); }) == ErrorKind::SizeCapExceeded);
  CHECK(kind_of([] { build_lattice(LatticeSpec{}); }) == ErrorKind::NotBounded);
}

TEST_CASE("distributivity") {
  CHECK(is_distributive(l6_lattice()));
  CHECK_FALSE(is_distributive(m3_lattice()));
  CHECK_FALSE(is_distributive(n5_lattice()));
  // Frozen from the exhaustive triple scan; the M3/N5 criterion agrees.
  CHECK_FALSE(is_distributive(l7_lattice()));
  CHECK(oracle::has_m3_or_n5(l7_lattice()));
  const auto w = distributivity_witness(l7_lattice());
  REQUIRE(w.has_value());
  CHECK(w->size() == 3);
}

TEST_CASE("distributivity agrees with the M3/N5 criterion on all small lattices") {
  for (std::size_t n = 1; n <= 7; ++n)
    for (const auto& l : oracle::all_lattices(n))
      CHECK(is_distributive(l) == !oracle::has_m3_or_n5(l));
}

TEST_CASE("the lattice generator yields the known counts") {
  // Unlabelled lattices on 1..7 elements.
  const std::vector<std::size_t> expected{1, 1, 1, 2, 5, 15, 53};
  for (std::size_t n = 1; n <= 7; ++n) CHECK(oracle::all_lattices(n).size() == expected[n - 1]);
}

TEST_CASE("dualize") {
  const auto c = build_lattice(spec_of("elements: 0 m 1\ncover: 0 m\ncover: m 1\n"));
  const auto d = dualize(c);
  CHECK(d.name(d.bottom()) == "1");
  CHECK(d.name(d.top()) == "0");
  CHECK(d.leq(d.index("1"), d.index("m")));

  const auto one = chain(1);
  CHECK(dualize(one) == one);

  const auto l6 = l6_lattice();
  const auto l6d = dualize(l6);
  CHECK(dualize(l6d) == l6);
  // Up-sets of the original are down-sets of the dual.
  for (Elem a = 0; a < l6.size(); ++a) CHECK(up_set(l6, a) == down_set(l6d, a));
}

TEST_CASE("direct_power") {
  const auto two = chain(2);
  const auto sq = direct_power(two, 2);
  CHECK(sq.size() == 4);
  CHECK(sq.atoms().size() == 2);
  CHECK(is_distributive(sq));

  const auto l6 = l6_lattice();
  CHECK(direct_power(l6, 1) == l6);

  const auto cube = direct_power(two, 3);
  CHECK(cube.size() == 8);
  CHECK(is_distributive(cube));
  CHECK(cube.name(cube.bottom()) == "(0,0,0)");
  CHECK(cube.name(cube.top()) == "(1,1,1)");

  CHECK(kind_of([&] { direct_power(l6, 3); }) == ErrorKind::SizeCapExceeded);
  CHECK(kind_of([&] { direct_power(l6, 0); }) == ErrorKind::InvalidSpec);
}

TEST_CASE("up_set") {
  const auto l = l6_lattice();
  CHECK(up_set(l, l.index("a")) == ElementSet::of(6, {l.index("a"), l.index("1")}));
  CHECK(up_set(l, l.top()) == ElementSet::of(6, {l.top()}));
  CHECK(up_set(l, l.bottom()).is_full());
  CHECK(kind_of([&] { up_set(l, 17); }) == ErrorKind::UnknownElement);
  CHECK(kind_of([&] { l.index("zz"); }) == ErrorKind::UnknownElement);
}

TEST_CASE("lattice invariants hold on every small lattice and power") {
  std::vector<BoundedLattice> corpus = oracle::all_lattices_up_to(6);
  corpus.push_back(direct_power(chain(3), 2));
  corpus.push_back(direct_power(m3_lattice(), 2));
  for (const auto& l : corpus) {
    const auto n = static_cast<Elem>(l.size());
    for (Elem a = 0; a < n; ++a) {
      CHECK(l.leq(l.bottom(), a));
      CHECK(l.leq(a, l.top()));
      for (Elem b = 0; b < n; ++b) {
        const Elem m = l.meet(a, b);
        const Elem j = l.join(a, b);
        CHECK((l.leq(m, a) && l.leq(m, b) && l.leq(a, j) && l.leq(b, j)));
        for (Elem c = 0; c < n; ++c) {
          if (l.leq(c, a) && l.leq(c, b)) CHECK(l.leq(c, m));
          if (l.leq(a, c) && l.leq(b, c)) CHECK(l.leq(j, c));
        }
      }
    }
    // Re-extracted covers reproduce the order.
    const auto le = oracle::reachability(n, l.covers());
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) CHECK(le[a][b] == l.leq(a, b));
    CHECK(build_lattice(l.to_spec()) == l);
    CHECK(dualize(dualize(l)) == l);
  }
}
