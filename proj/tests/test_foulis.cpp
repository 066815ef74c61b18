#include <catch2/catch_amalgamated.hpp>

#include "omlgal/foulis.hpp"
#include "omlgal/io.hpp"
#include "omlgal/iso.hpp"
#include "support.hpp"

using namespace omlgal;

namespace {
EndoSemigroup& endo_b2() {
  static EndoSemigroup e = endo_semigroup(boolean_lattice(2));
  return e;
}
}  // namespace

TEST_CASE("endomorphism semigroups satisfy both axiom sets", "[foulis]") {
  for (const OmlPtr& l : {mo_lattice(0), boolean_lattice(2), mo_lattice(2)}) {
    EndoSemigroup e = endo_semigroup(l);
    CAPTURE(e.sg.name, e.sg.size());
    CHECK(check_foulis(e.sg).ok());
    CHECK(check_foulis_alt(e.sg).ok());
    CHECK(check_annihilator_law(e.sg).ok());
  }
  CHECK(endo_semigroup(boolean_lattice(0)).sg.size() == 1);
  CHECK(endo_semigroup(mo_lattice(0)).sg.size() == 2);
}

TEST_CASE("focus is the kernel effect", "[foulis]") {
  EndoSemigroup& e = endo_b2();
  for (int s = 0; s < e.sg.size(); ++s) {
    const GaloisMorphism& f = e.morphisms[s];
    GaloisMorphism focus = focus_of_endo(f);
    CHECK(e.sg.focus[s] == e.index_of(focus));
    // Closed form coincides with the kernel effect construction.
    CHECK(focus == effect(e.lattice, kernel(f).rep()));
    // Foci are self-adjoint idempotents.
    int fi = e.sg.focus[s];
    CHECK(e.sg.inv[fi] == fi);
    CHECK(e.sg.mul[fi][fi] == fi);
  }
}

TEST_CASE("fixture semigroup and corrupted tables", "[foulis]") {
  FoulisSemigroup good = load_foulis(testutil::fixture("endo2.fsg"));
  CHECK(check_foulis(good).ok());
  CHECK(check_foulis_alt(good).ok());

  SECTION("corrupt focus is rejected by both axiomatizations") {
    FoulisSemigroup bad = load_foulis(testutil::fixture("bad_focus.fsg"));
    ValidationReport r;
    CHECK(detail::foulis_tables_ok(bad, r));  // still well-formed tables
    CHECK_FALSE(check_foulis(bad).ok());
    CHECK_FALSE(check_foulis_alt(bad).ok());
  }
  SECTION("the two axiom sets agree on mutated multiplication tables") {
    for (int a = 0; a < good.size(); ++a)
      for (int b = 0; b < good.size(); ++b)
        for (int c = 0; c < good.size(); ++c) {
          FoulisSemigroup mut = testutil::with_mul(good, a, b, c);
          CHECK(check_foulis(mut).ok() == check_foulis_alt(mut).ok());
        }
  }
}

TEST_CASE("unit kernel lattice recovers the original lattice", "[foulis]") {
  for (const OmlPtr& l : {mo_lattice(0), boolean_lattice(2), mo_lattice(2)}) {
    EndoSemigroup e = endo_semigroup(l);
    KsLattice k = oml_of_foulis(e.sg);
    REQUIRE(k.report.ok());
    REQUIRE(k.lattice);
    CHECK(find_oml_iso(*k.lattice, *l).has_value());
  }
}

TEST_CASE("kernel lattices at self-adjoint idempotents", "[foulis]") {
  EndoSemigroup& e = endo_b2();
  for (int s = 0; s < e.sg.size(); ++s) {
    if (e.sg.inv[s] != s || e.sg.mul[s][s] != s) continue;
    KsLattice k = k_s_lattice(e.sg, s);
    CAPTURE(e.sg.elements[s]);
    CHECK(k.report.ok());
    REQUIRE(k.lattice);
    // The carrier lives under s and s itself is the top.
    for (std::size_t i = 0; i < k.carrier.size(); ++i) {
      CHECK(e.sg.mul[s][k.carrier[i]] == k.carrier[i]);
      CHECK(k.carrier[k.lattice->top()] == s);
    }
  }
  SECTION("local semigroups at idempotents satisfy the axioms") {
    for (int s = 0; s < e.sg.size(); ++s) {
      if (e.sg.inv[s] != s || e.sg.mul[s][s] != s) continue;
      FoulisSemigroup local = foulis_at(e.sg, s);
      CHECK(check_foulis(local).ok());
    }
    int bad = -1;
    for (int s = 0; s < e.sg.size() && bad < 0; ++s)
      if (e.sg.inv[s] != s || e.sg.mul[s][s] != s) bad = s;
    REQUIRE(bad >= 0);
    CHECK_THROWS_AS(foulis_at(e.sg, bad), std::invalid_argument);
  }
}

TEST_CASE("semigroup morphism checker", "[foulis]") {
  FoulisSemigroup e2 = load_foulis(testutil::fixture("endo2.fsg"));
  EndoSemigroup& eb2 = endo_b2();
  // 1 |-> identity, 0 |-> zero endo map is a morphism of involutive monoids
  // preserving the focus.
  std::vector<int> h(2);
  h[e2.unit] = eb2.sg.unit;
  h[e2.zero()] = eb2.sg.zero();
  CHECK(check_foulis_morphism(e2, eb2.sg, h).ok());
  // The constant-unit map preserves multiplication but not the focus.
  std::vector<int> bad = {eb2.sg.unit, eb2.sg.unit};
  CHECK_FALSE(check_foulis_morphism(e2, eb2.sg, bad).ok());
}

TEST_CASE("semigroup isomorphism search", "[foulis]") {
  FoulisSemigroup e2 = load_foulis(testutil::fixture("endo2.fsg"));
  FoulisSemigroup again = endo_semigroup(mo_lattice(0)).sg;
  auto iso = find_foulis_iso(e2, again);
  REQUIRE(iso.has_value());
  CHECK(check_foulis_morphism(e2, again, *iso).ok());
  CHECK_FALSE(find_foulis_iso(e2, endo_b2().sg).has_value());
}
