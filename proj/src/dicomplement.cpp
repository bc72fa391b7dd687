#include "wdl/dicomplement.hpp"

#include <functional>

#include "wdl/error.hpp"

namespace wdl {

namespace {

std::vector<std::string> names_of(const BoundedLattice& l, std::initializer_list<Elem> elems) {
  std::vector<std::string> out;
  for (Elem e : elems) out.push_back(l.name(e));
  return out;
}

void check_table(const BoundedLattice& l, const std::optional<UnaryTable>& t, const char* what) {
  if (!t) return;
  if (t->size() != l.size()) {
    throw Error(ErrorKind::InvalidSpec, std::string(what) + " table is not total");
  }
  for (Elem v : *t) {
    if (v >= l.size()) throw Error(ErrorKind::InvalidSpec, std::string(what) + " value out of range");
  }
}

// First violation of the Δ axioms, as (axiom id, witness).
std::optional<std::pair<std::string, std::vector<std::string>>> first_delta_violation(
    const BoundedLattice& l, const UnaryTable& t) {
  const auto n = static_cast<Elem>(l.size());
  for (Elem x = 0; x < n; ++x)
    if (!l.leq(t[t[x]], x)) return std::pair{"1", names_of(l, {x})};
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (l.leq(x, y) && !l.leq(t[y], t[x])) return std::pair{"2", names_of(l, {x, y})};
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (l.join(l.meet(x, y), l.meet(x, t[y])) != x) return std::pair{"3", names_of(l, {x, y})};
  return std::nullopt;
}

std::optional<std::pair<std::string, std::vector<std::string>>> first_nabla_violation(
    const BoundedLattice& l, const UnaryTable& t) {
  const auto n = static_cast<Elem>(l.size());
  for (Elem x = 0; x < n; ++x)
    if (!l.leq(x, t[t[x]])) return std::pair{"1'", names_of(l, {x})};
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (l.leq(x, y) && !l.leq(t[y], t[x])) return std::pair{"2'", names_of(l, {x, y})};
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (l.meet(l.join(x, y), l.join(x, t[y])) != x) return std::pair{"3'", names_of(l, {x, y})};
  return std::nullopt;
}

std::optional<std::vector<std::string>> first_compat_violation(const BoundedLattice& l,
                                                               const UnaryTable& delta,
                                                               const UnaryTable& nabla) {
  for (Elem x = 0; x < l.size(); ++x)
    if (!l.leq(nabla[x], delta[x])) return names_of(l, {x});
  return std::nullopt;
}

void require(bool present, const char* what) {
  if (!present) throw Error(ErrorKind::MissingUnary, std::string(what) + " table is absent");
}

}  // namespace

Dicomplementation Dicomplementation::unchecked(BoundedLattice base,
                                               std::optional<UnaryTable> delta,
                                               std::optional<UnaryTable> nabla) {
  check_table(base, delta, "delta");
  check_table(base, nabla, "nabla");
  Dicomplementation d;
  d.base_ = std::make_shared<const BoundedLattice>(std::move(base));
  d.delta_ = std::move(delta);
  d.nabla_ = std::move(nabla);
  return d;
}

Elem Dicomplementation::delta(Elem x) const {
  require(has_delta(), "delta");
  return (*delta_)[x];
}

Elem Dicomplementation::nabla(Elem x) const {
  require(has_nabla(), "nabla");
  return (*nabla_)[x];
}

Elem Dicomplementation::sqcup(Elem x, Elem y) const {
  return nabla(base_->meet(nabla(x), nabla(y)));
}

Elem Dicomplementation::sqcap_bar(Elem x, Elem y) const {
  return delta(base_->join(delta(x), delta(y)));
}

Elem Dicomplementation::under_sqcup(Elem x, Elem y) const {
  return interior(base_->join(x, y));
}

Dicomplementation Dicomplementation::delta_reduct() const {
  require(has_delta(), "delta");
  Dicomplementation d = *this;
  d.nabla_.reset();
  return d;
}

Dicomplementation Dicomplementation::nabla_reduct() const {
  require(has_nabla(), "nabla");
  Dicomplementation d = *this;
  d.delta_.reset();
  return d;
}

Dicomplementation attach(BoundedLattice base, std::optional<UnaryTable> delta,
                         std::optional<UnaryTable> nabla) {
  if (!delta && !nabla) throw Error(ErrorKind::MissingUnary, "neither delta nor nabla given");
  auto d = Dicomplementation::unchecked(std::move(base), std::move(delta), std::move(nabla));
  const auto& l = d.base();
  if (d.has_delta()) {
    if (auto v = first_delta_violation(l, *d.delta_table())) throw AxiomViolation(v->first, v->second);
  }
  if (d.has_nabla()) {
    if (auto v = first_nabla_violation(l, *d.nabla_table())) throw AxiomViolation(v->first, v->second);
  }
  if (d.has_delta() && d.has_nabla()) {
    if (auto w = first_compat_violation(l, *d.delta_table(), *d.nabla_table())) {
      throw AxiomViolation("9'b", *w);
    }
  }
  return d;
}

namespace {

std::optional<UnaryTable> rows_to_table(const BoundedLattice& l,
                                        const std::optional<UnaryRows>& rows, const char* what) {
  if (!rows) return std::nullopt;
  UnaryTable t(l.size(), 0);
  std::vector<bool> seen(l.size(), false);
  for (const auto& [in, out] : *rows) {
    const Elem x = l.index(in);
    if (seen[x]) {
      throw Error(ErrorKind::DuplicateDeclaration, std::string(what) + " row for '" + in + "'");
    }
    seen[x] = true;
    t[x] = l.index(out);
  }
  for (Elem x = 0; x < l.size(); ++x) {
    if (!seen[x]) {
      throw Error(ErrorKind::InvalidSpec,
                  std::string(what) + " table has no row for '" + l.name(x) + "'");
    }
  }
  return t;
}

}  // namespace

Dicomplementation attach_rows(BoundedLattice base, const std::optional<UnaryRows>& delta,
                              const std::optional<UnaryRows>& nabla) {
  auto dt = rows_to_table(base, delta, "delta");
  auto nt = rows_to_table(base, nabla, "nabla");
  return attach(std::move(base), std::move(dt), std::move(nt));
}

LawReport axiom_report(const Dicomplementation& d) {
  LawReport report;
  const auto& l = d.base();
  const auto n = static_cast<Elem>(l.size());
  auto scan1 = [&](const std::string& id, auto&& holds) {
    std::vector<std::string> w;
    for (Elem x = 0; x < n && w.empty(); ++x)
      if (!holds(x)) w = names_of(l, {x});
    report.check(id, std::move(w));
  };
  auto scan2 = [&](const std::string& id, auto&& holds) {
    std::vector<std::string> w;
    for (Elem x = 0; x < n && w.empty(); ++x)
      for (Elem y = 0; y < n && w.empty(); ++y)
        if (!holds(x, y)) w = names_of(l, {x, y});
    report.check(id, std::move(w));
  };
  if (d.has_delta()) {
    scan1("1", [&](Elem x) { return l.leq(d.interior(x), x); });
    scan2("2", [&](Elem x, Elem y) { return !l.leq(x, y) || l.leq(d.delta(y), d.delta(x)); });
    scan2("3", [&](Elem x, Elem y) {
      return l.join(l.meet(x, y), l.meet(x, d.delta(y))) == x;
    });
  }
  if (d.has_nabla()) {
    scan1("1'", [&](Elem x) { return l.leq(x, d.closure(x)); });
    scan2("2'", [&](Elem x, Elem y) { return !l.leq(x, y) || l.leq(d.nabla(y), d.nabla(x)); });
    scan2("3'", [&](Elem x, Elem y) {
      return l.meet(l.join(x, y), l.join(x, d.nabla(y))) == x;
    });
  }
  if (d.has_delta() && d.has_nabla()) {
    scan1("9'b", [&](Elem x) { return l.leq(d.nabla(x), d.delta(x)); });
  }
  return report;
}

Dicomplementation trivial_dicomplementation(const BoundedLattice& base) {
  const auto n = static_cast<Elem>(base.size());
  UnaryTable delta(n), nabla(n);
  for (Elem x = 0; x < n; ++x) {
    // On the one-element lattice 0 = 1 and both maps are the identity.
    delta[x] = x == base.top() ? base.bottom() : base.top();
    nabla[x] = x == base.bottom() ? base.top() : base.bottom();
  }
  return attach(base, std::move(delta), std::move(nabla));
}

std::optional<UnaryTable> boolean_complement(const BoundedLattice& base) {
  if (!is_distributive(base)) return std::nullopt;
  const auto n = static_cast<Elem>(base.size());
  UnaryTable comp(n);
  for (Elem x = 0; x < n; ++x) {
    std::optional<Elem> found;
    for (Elem y = 0; y < n && !found; ++y) {
      if (base.join(x, y) == base.top() && base.meet(x, y) == base.bottom()) found = y;
    }
    if (!found) return std::nullopt;
    comp[x] = *found;
  }
  return comp;
}

Dicomplementation boolean_dicomplementation(const BoundedLattice& base) {
  auto comp = boolean_complement(base);
  if (!comp) {
    if (!is_distributive(base)) throw Error(ErrorKind::NotBoolean, "lattice is not distributive");
    throw Error(ErrorKind::NotBoolean, "some element has no complement");
  }
  return attach(base, *comp, *comp);
}

DerivedOps derived_ops(const Dicomplementation& d, Elem x, Elem y) {
  DerivedOps ops;
  if (d.has_nabla()) ops.sqcup = d.sqcup(x, y);
  if (d.has_delta()) {
    ops.sqcap_bar = d.sqcap_bar(x, y);
    ops.under_sqcup = d.under_sqcup(x, y);
  }
  return ops;
}

ElementSet skeleton(const Dicomplementation& d) {
  require(d.has_nabla(), "nabla");
  ElementSet s(d.size());
  for (Elem x = 0; x < d.size(); ++x)
    if (d.closure(x) == x) s.insert(x);
  return s;
}

ElementSet dual_skeleton(const Dicomplementation& d) {
  require(d.has_delta(), "delta");
  ElementSet s(d.size());
  for (Elem x = 0; x < d.size(); ++x)
    if (d.interior(x) == x) s.insert(x);
  return s;
}

SkeletonAlgebra::SkeletonAlgebra(const Dicomplementation& d, SkeletonSide side)
    : side_(side),
      base_(std::make_shared<const BoundedLattice>(d.base())),
      carrier_(side == SkeletonSide::Closed ? skeleton(d) : dual_skeleton(d)) {
  const auto n = static_cast<Elem>(d.size());
  meet_.assign(static_cast<std::size_t>(n) * n, 0);
  join_.assign(static_cast<std::size_t>(n) * n, 0);
  complement_.assign(n, 0);
  for (Elem a = 0; a < n; ++a) {
    complement_[a] = side == SkeletonSide::Closed ? d.nabla(a) : d.delta(a);
    for (Elem b = 0; b < n; ++b) {
      if (side == SkeletonSide::Closed) {
        meet_[a * n + b] = base_->meet(a, b);
        join_[a * n + b] = d.sqcup(a, b);
      } else {
        meet_[a * n + b] = d.sqcap_bar(a, b);
        join_[a * n + b] = base_->join(a, b);
      }
    }
  }
}

BoundedLattice SkeletonAlgebra::as_lattice() const {
  const auto elems = carrier_.elements();
  std::vector<std::string> names;
  std::vector<std::vector<bool>> leq(elems.size(), std::vector<bool>(elems.size()));
  for (std::size_t i = 0; i < elems.size(); ++i) {
    names.push_back(base_->name(elems[i]));
    for (std::size_t j = 0; j < elems.size(); ++j) leq[i][j] = base_->leq(elems[i], elems[j]);
  }
  return BoundedLattice::from_order(std::move(names), std::move(leq));
}

LawReport ortholattice_report(const SkeletonAlgebra& alg) {
  LawReport report;
  const auto& l = alg.base();
  const auto elems = alg.carrier().elements();
  const auto& c = alg.carrier();

  auto scan1 = [&](const std::string& id, auto&& holds) {
    std::vector<std::string> w;
    for (Elem a : elems)
      if (w.empty() && !holds(a)) w = names_of(l, {a});
    report.check(id, std::move(w));
  };
  auto scan2 = [&](const std::string& id, auto&& holds) {
    std::vector<std::string> w;
    for (Elem a : elems)
      for (Elem b : elems)
        if (w.empty() && !holds(a, b)) w = names_of(l, {a, b});
    report.check(id, std::move(w));
  };

  report.check("O-bounds", c.contains(alg.bottom()) && c.contains(alg.top())
                               ? std::vector<std::string>{}
                               : std::vector<std::string>{l.name(alg.bottom()), l.name(alg.top())});
  scan2("O-closed", [&](Elem a, Elem b) {
    return c.contains(alg.meet(a, b)) && c.contains(alg.join(a, b)) &&
           c.contains(alg.complement(a));
  });
  scan2("O-meet-glb", [&](Elem a, Elem b) {
    const Elem m = alg.meet(a, b);
    if (!c.contains(m) || !alg.leq(m, a) || !alg.leq(m, b)) return false;
    for (Elem z : elems)
      if (alg.leq(z, a) && alg.leq(z, b) && !alg.leq(z, m)) return false;
    return true;
  });
  scan2("O-join-lub", [&](Elem a, Elem b) {
    const Elem j = alg.join(a, b);
    if (!c.contains(j) || !alg.leq(a, j) || !alg.leq(b, j)) return false;
    for (Elem z : elems)
      if (alg.leq(a, z) && alg.leq(b, z) && !alg.leq(j, z)) return false;
    return true;
  });
  scan2("O-antitone", [&](Elem a, Elem b) {
    return !alg.leq(a, b) || alg.leq(alg.complement(b), alg.complement(a));
  });
  scan1("O-involutive", [&](Elem a) { return alg.complement(alg.complement(a)) == a; });
  scan1("O-join-complement", [&](Elem a) { return alg.join(a, alg.complement(a)) == alg.top(); });
  scan1("O-meet-complement",
        [&](Elem a) { return alg.meet(a, alg.complement(a)) == alg.bottom(); });
  return report;
}

SkeletonAlgebra skeleton_algebra(const Dicomplementation& d, SkeletonSide side) {
  SkeletonAlgebra alg(d, side);
  const auto report = ortholattice_report(alg);
  for (const auto& r : report.results()) {
    if (r.status == LawStatus::Fail) {
      std::string msg = r.id + " fails at";
      for (const auto& w : r.witness) msg += " " + w;
      throw Error(ErrorKind::OrtholawViolation, msg);
    }
  }
  return alg;
}

ElementSet dense_set(const Dicomplementation& d) {
  require(d.has_nabla(), "nabla");
  ElementSet s(d.size());
  for (Elem x = 0; x < d.size(); ++x)
    if (d.nabla(x) == d.base().bottom()) s.insert(x);
  return s;
}

ElementSet codense_set(const Dicomplementation& d) {
  require(d.has_delta(), "delta");
  ElementSet s(d.size());
  for (Elem x = 0; x < d.size(); ++x)
    if (d.delta(x) == d.base().top()) s.insert(x);
  return s;
}

namespace {

// Checks that `set` is an order filter closed under join and that each
// principal up-set inside it is a bounded (distributive, when asked)
// sublattice. With `dual` the roles of the order are swapped.
void near_laws(const BoundedLattice& l, const ElementSet& set, bool dual, const std::string& p,
               LawReport& report) {
  auto le = [&](Elem a, Elem b) { return dual ? l.leq(b, a) : l.leq(a, b); };
  auto up = [&](Elem a, Elem b) { return dual ? l.meet(a, b) : l.join(a, b); };
  auto down = [&](Elem a, Elem b) { return dual ? l.join(a, b) : l.meet(a, b); };
  const Elem extreme = dual ? l.bottom() : l.top();
  const auto elems = set.elements();
  const auto n = static_cast<Elem>(l.size());

  report.check(p + "i", set.contains(extreme) ? std::vector<std::string>{}
                                              : std::vector<std::string>{l.name(extreme)});
  std::vector<std::string> w;
  for (Elem x : elems)
    for (Elem y = 0; y < n; ++y)
      if (w.empty() && le(x, y) && !set.contains(y)) w = names_of(l, {x, y});
  report.check(p + "ii", std::move(w));
  w.clear();
  for (Elem x : elems)
    for (Elem y : elems)
      if (w.empty() && !set.contains(up(x, y))) w = names_of(l, {x, y});
  report.check(p + "iii", std::move(w));

  // Each [a) ⊆ set is a bounded lattice: bounded by a and the extreme,
  // closed under both operations.
  w.clear();
  for (Elem a : elems) {
    for (Elem x : elems)
      for (Elem y : elems) {
        if (!w.empty() || !le(a, x) || !le(a, y)) continue;
        const Elem m = down(x, y);
        const Elem j = up(x, y);
        if (!set.contains(m) || !le(a, m) || !set.contains(j) || !le(j, extreme)) {
          w = names_of(l, {a, x, y});
        }
      }
  }
  report.check(p + "near", std::move(w));

  if (is_distributive(l)) {
    w.clear();
    for (Elem a : elems)
      for (Elem x : elems)
        for (Elem y : elems)
          for (Elem z : elems) {
            if (!w.empty() || !le(a, x) || !le(a, y) || !le(a, z)) continue;
            if (down(x, up(y, z)) != up(down(x, y), down(x, z))) w = names_of(l, {a, x, y, z});
          }
    report.check(p + "distributive", std::move(w));
  }
}

}  // namespace

NearlatticeReport nearlattice_check(const Dicomplementation& d) {
  NearlatticeReport out;
  const auto& l = d.base();
  if (d.has_nabla()) {
    out.dense = dense_set(d);
    near_laws(l, *out.dense, false, "D-", out.laws);
    std::optional<Elem> least;
    for (Elem x : out.dense->elements()) {
      bool below_all = true;
      for (Elem y : out.dense->elements()) below_all = below_all && l.leq(x, y);
      if (below_all) least = x;
    }
    out.dense_has_least = least.has_value();
    if (least) {
      // With a least element the dense set is the principal filter it generates.
      out.laws.check("D-least-filter", *out.dense == up_set(l, *least)
                                           ? std::vector<std::string>{}
                                           : names_of(l, {*least}));
    }
  }
  if (d.has_delta()) {
    out.codense = codense_set(d);
    near_laws(l, *out.codense, true, "Dbar-", out.laws);
    std::optional<Elem> greatest;
    for (Elem x : out.codense->elements()) {
      bool above_all = true;
      for (Elem y : out.codense->elements()) above_all = above_all && l.leq(y, x);
      if (above_all) greatest = x;
    }
    out.codense_has_greatest = greatest.has_value();
    if (greatest) {
      out.laws.check("Dbar-greatest-ideal", *out.codense == down_set(l, *greatest)
                                                ? std::vector<std::string>{}
                                                : names_of(l, {*greatest}));
    }
  }
  return out;
}

LawReport check_identities(const Dicomplementation& d) {
  LawReport report;
  const auto& l = d.base();
  const auto n = static_cast<Elem>(l.size());
  const Elem zero = l.bottom();
  const Elem one = l.top();
  auto le = [&](Elem a, Elem b) { return l.leq(a, b); };
  auto meet = [&](Elem a, Elem b) { return l.meet(a, b); };
  auto join = [&](Elem a, Elem b) { return l.join(a, b); };

  auto scan1 = [&](const std::string& id, auto&& holds) {
    std::vector<std::string> w;
    for (Elem x = 0; x < n && w.empty(); ++x)
      if (!holds(x)) w = names_of(l, {x});
    report.check(id, std::move(w));
  };
  auto scan2 = [&](const std::string& id, auto&& holds) {
    std::vector<std::string> w;
    for (Elem x = 0; x < n && w.empty(); ++x)
      for (Elem y = 0; y < n && w.empty(); ++y)
        if (!holds(x, y)) w = names_of(l, {x, y});
    report.check(id, std::move(w));
  };
  auto scan3 = [&](const std::string& id, auto&& holds) {
    std::vector<std::string> w;
    for (Elem x = 0; x < n && w.empty(); ++x)
      for (Elem y = 0; y < n && w.empty(); ++y)
        for (Elem z = 0; z < n && w.empty(); ++z)
          if (!holds(x, y, z)) w = names_of(l, {x, y, z});
    report.check(id, std::move(w));
  };
  auto scan4 = [&](const std::string& id, auto&& holds) {
    std::vector<std::string> w;
    for (Elem x = 0; x < n && w.empty(); ++x)
      for (Elem y = 0; y < n && w.empty(); ++y)
        for (Elem a = 0; a < n && w.empty(); ++a)
          for (Elem b = 0; b < n && w.empty(); ++b)
            if (!holds(x, y, a, b)) w = names_of(l, {x, y, a, b});
    report.check(id, std::move(w));
  };

  if (d.has_delta()) {
    auto D = [&](Elem x) { return d.delta(x); };
    auto I = [&](Elem x) { return d.interior(x); };
    auto cap = [&](Elem x, Elem y) { return d.sqcap_bar(x, y); };
    scan2("P2.2-4", [&](Elem x, Elem y) { return D(meet(x, y)) == join(D(x), D(y)); });
    scan2("P2.2-5", [&](Elem x, Elem y) { return cap(x, y) == I(meet(x, y)); });
    scan2("P2.2-6", [&](Elem x, Elem y) { return le(D(x), y) == le(D(y), x); });
    scan2("P2.2-7", [&](Elem x, Elem y) { return !le(D(x), y) || join(y, x) == one; });
    scan2("P2.2-8", [&](Elem x, Elem y) { return meet(y, x) != zero || le(x, D(y)); });
    scan1("P2.2-9", [&](Elem x) { return join(x, D(x)) == one; });
    scan1("IDEM-delta", [&](Elem x) { return D(D(D(x))) == D(x); });
    scan2("CL-delta", [&](Elem x, Elem y) {
      return le(I(x), x) && (!le(x, y) || le(I(x), I(y))) && I(I(x)) == I(x);
    });
    scan2("R2.3-1i", [&](Elem x, Elem y) { return le(cap(x, y), meet(x, y)); });
    scan2("R2.3-1iia", [&](Elem x, Elem y) { return le(d.under_sqcup(x, y), join(x, y)); });
    scan3("R2.3-2ii", [&](Elem x, Elem y, Elem a) {
      // x ↦ x ⊓̄ a is isotone and preserves ⊓̄.
      return (!le(x, y) || le(cap(x, a), cap(y, a))) &&
             cap(cap(x, y), a) == cap(cap(x, a), cap(y, a));
    });
    scan2("R2.3-3i", [&](Elem x, Elem y) { return join(x, cap(x, y)) == x; });
    scan2("R2.3-3ii", [&](Elem x, Elem y) { return cap(x, join(x, y)) == I(x); });
    scan2("R2.3-5i", [&](Elem x, Elem y) {
      return cap(I(x), I(y)) == cap(I(x), y) && cap(I(x), y) == cap(x, y);
    });
    scan4("R2.3-6i", [&](Elem x, Elem y, Elem a, Elem b) {
      return !(le(x, y) && le(a, b)) || le(cap(x, a), cap(y, b));
    });
  }
  if (d.has_nabla()) {
    auto N = [&](Elem x) { return d.nabla(x); };
    auto C = [&](Elem x) { return d.closure(x); };
    auto cup = [&](Elem x, Elem y) { return d.sqcup(x, y); };
    scan2("P2.2-4'", [&](Elem x, Elem y) { return N(join(x, y)) == meet(N(x), N(y)); });
    scan2("P2.2-5'", [&](Elem x, Elem y) { return cup(x, y) == C(join(x, y)); });
    scan2("P2.2-6'", [&](Elem x, Elem y) { return le(y, N(x)) == le(x, N(y)); });
    scan2("P2.2-7'", [&](Elem x, Elem y) { return !le(y, N(x)) || meet(y, x) == zero; });
    scan2("P2.2-8'", [&](Elem x, Elem y) { return join(y, x) != one || le(N(y), x); });
    scan1("P2.2-9'a", [&](Elem x) { return meet(x, N(x)) == zero; });
    scan1("IDEM-nabla", [&](Elem x) { return N(N(N(x))) == N(x); });
    scan2("CL-nabla", [&](Elem x, Elem y) {
      return le(x, C(x)) && (!le(x, y) || le(C(x), C(y))) && C(C(x)) == C(x);
    });
    scan2("R2.3-1iib", [&](Elem x, Elem y) { return le(join(x, y), cup(x, y)); });
    scan3("R2.3-2i", [&](Elem x, Elem a, Elem b) {
      // a ↦ x ⊔ a is isotone and preserves ⊔.
      return (!le(a, b) || le(cup(x, a), cup(x, b))) &&
             cup(x, cup(a, b)) == cup(cup(x, a), cup(x, b));
    });
    scan2("R2.3-4i", [&](Elem x, Elem y) { return meet(x, cup(x, y)) == x; });
    scan2("R2.3-4ii", [&](Elem x, Elem y) { return cup(x, meet(x, y)) == C(x); });
    scan2("R2.3-5ii", [&](Elem x, Elem y) {
      return cup(C(x), C(y)) == cup(C(x), y) && cup(C(x), y) == cup(x, y);
    });
    scan4("R2.3-6ii", [&](Elem x, Elem y, Elem a, Elem b) {
      return !(le(x, y) && le(a, b)) || le(cup(x, a), cup(y, b));
    });
  }
  if (d.has_delta() && d.has_nabla()) {
    scan1("P2.2-9'b", [&](Elem x) { return le(d.nabla(x), d.delta(x)); });
  }
  return report;
}

namespace {

// Depth-first assignment of a unary table in element order with the cheap
// necessary conditions pruned early: antitonicity, then the double-map
// inequality. Complete tables are handed to `accept`.
void enumerate_tables(const BoundedLattice& l, bool interior,
                      const std::function<void(const UnaryTable&)>& accept) {
  const auto n = static_cast<Elem>(l.size());
  UnaryTable t(n, 0);
  std::vector<bool> assigned(n, false);
  // For Δ the double map lies below x; for ∇ above.
  auto double_ok = [&](Elem x, Elem xx) { return interior ? l.leq(xx, x) : l.leq(x, xx); };

  std::function<void(Elem)> rec = [&](Elem x) {
    if (x == n) {
      accept(t);
      return;
    }
    for (Elem v = 0; v < n; ++v) {
      bool ok = true;
      for (Elem y = 0; y < x && ok; ++y) {
        if (l.leq(x, y) && !l.leq(t[y], v)) ok = false;
        if (l.leq(y, x) && !l.leq(v, t[y])) ok = false;
      }
      if (!ok) continue;
      t[x] = v;
      assigned[x] = true;
      if (assigned[v] && !double_ok(x, t[v])) ok = false;
      for (Elem y = 0; y < x && ok; ++y) {
        if (t[y] == x && !double_ok(y, v)) ok = false;
      }
      if (ok) rec(x + 1);
      assigned[x] = false;
    }
  };
  rec(0);
}

}  // namespace

std::vector<Dicomplementation> enumerate_dicomplementations(const BoundedLattice& base,
                                                            EnumerationSide side,
                                                            std::size_t cap) {
  if (base.size() > cap) {
    throw Error(ErrorKind::SizeCapExceeded, std::to_string(base.size()) +
                                                " elements exceed enumeration cap " +
                                                std::to_string(cap));
  }
  std::vector<UnaryTable> deltas;
  std::vector<UnaryTable> nablas;
  if (side != EnumerationSide::Nabla) {
    enumerate_tables(base, true, [&](const UnaryTable& t) {
      if (!first_delta_violation(base, t)) deltas.push_back(t);
    });
  }
  if (side != EnumerationSide::Delta) {
    enumerate_tables(base, false, [&](const UnaryTable& t) {
      if (!first_nabla_violation(base, t)) nablas.push_back(t);
    });
  }
  std::vector<Dicomplementation> out;
  switch (side) {
    case EnumerationSide::Delta:
      for (auto& t : deltas) out.push_back(Dicomplementation::unchecked(base, t, std::nullopt));
      break;
    case EnumerationSide::Nabla:
      for (auto& t : nablas) out.push_back(Dicomplementation::unchecked(base, std::nullopt, t));
      break;
    case EnumerationSide::Both:
      for (auto& dt : deltas)
        for (auto& nt : nablas)
          if (!first_compat_violation(base, dt, nt))
            out.push_back(Dicomplementation::unchecked(base, dt, nt));
      break;
  }
  return out;
}

}  // namespace wdl
