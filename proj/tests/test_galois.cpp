#include <catch2/catch_amalgamated.hpp>

#include "omlgal/galois.hpp"
#include "omlgal/iso.hpp"
#include "omlgal/oml.hpp"
#include "support.hpp"

using namespace omlgal;

namespace {
const OmlPtr& two() { return two_lattice(); }
OmlPtr b2() {
  static OmlPtr l = boolean_lattice(2);
  return l;
}
OmlPtr mo2() {
  static OmlPtr l = mo_lattice(2);
  return l;
}
}  // namespace

TEST_CASE("validating constructor derives the adjoint or rejects", "[galois]") {
  SECTION("a genuine antitone pair is accepted") {
    // two -> mo2 classifying p1.
    std::vector<int> lower = {mo2()->top(), mo2()->index("p1'")};
    auto f = GaloisMorphism::make(two(), mo2(), lower);
    REQUIRE(f.has_value());
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < mo2()->size(); ++y)
        CHECK(two()->leq(x, f->upper(y)) == mo2()->leq(y, f->lower(x)));
  }
  SECTION("tables that break the adjunction are rejected") {
    // Monotone (not antitone) assignment cannot have a Galois right adjoint.
    std::vector<int> lower = {mo2()->bottom(), mo2()->top()};
    ValidationReport rep;
    CHECK_FALSE(GaloisMorphism::make(two(), mo2(), lower, &rep).has_value());
    CHECK_FALSE(rep.ok());
  }
  SECTION("size and range errors are structural") {
    ValidationReport rep;
    CHECK_FALSE(GaloisMorphism::make(two(), mo2(), {0}, &rep).has_value());
    CHECK_FALSE(rep.structural.empty());
    CHECK_FALSE(GaloisMorphism::make(two(), mo2(), {0, 99}).has_value());
  }
}

TEST_CASE("composition, identity and dagger algebra", "[galois]") {
  GaloisMorphism f = classify(mo2(), mo2()->index("p1"));
  GaloisMorphism id2 = identity_morphism(two()), idm = identity_morphism(mo2());
  CHECK(compose(f, id2) == f);
  CHECK(compose(idm, f) == f);
  CHECK(dagger(dagger(f)) == f);
  CHECK(dagger(idm) == idm);

  GaloisMorphism g = effect(mo2(), mo2()->index("p2"));
  CHECK(dagger(compose(g, f)) == compose(dagger(f), dagger(g)));
  CHECK(is_zero_morphism(compose(zero_morphism(mo2(), mo2()), g)));
}

TEST_CASE("kernels", "[galois]") {
  int p1 = mo2()->index("p1");
  GaloisMorphism f = dagger(classify(mo2(), p1));  // mo2 -> 2, kernel rep p1'

  KernelSubobject k = kernel(f);
  CHECK(k.rep() == mo2()->oc(p1));
  CHECK(is_dagger_mono(k.embed));
  CHECK(is_zero_morphism(compose(f, k.embed)));

  SECTION("universal property, checked against the whole hom-set") {
    for (const OmlPtr& z : {two(), b2(), mo2()}) {
      HomSet hs = enumerate_hom(z, mo2());
      for (const auto& g : hs.morphisms) {
        if (!is_zero_morphism(compose(f, g))) continue;
        // g factors through k.embed by m = dagger(embed) o g, uniquely.
        GaloisMorphism m = compose(dagger(k.embed), g);
        CHECK(compose(k.embed, m) == g);
        HomSet med = enumerate_hom(z, k.down.lattice);
        int count = 0;
        for (const auto& h : med.morphisms)
          if (compose(k.embed, h) == g) ++count;
        CHECK(count == 1);
      }
    }
  }
  SECTION("kernel of a zero morphism is everything, of a mono is zero") {
    CHECK(kernel(zero_morphism(mo2(), b2())).rep() == mo2()->top());
    CHECK(kernel(identity_morphism(mo2())).rep() == mo2()->bottom());
  }
}

TEST_CASE("factorization through the image", "[galois]") {
  // Every morphism between these lattices factors as dagger-mono after zero-epi.
  for (const OmlPtr& src : {two(), b2(), mo2()})
    for (const OmlPtr& dst : {two(), b2(), mo2()}) {
      HomSet hs = enumerate_hom(src, dst);
      for (const auto& f : hs.morphisms) {
        Factorization fac = factorize(f);
        CHECK(compose(fac.image.embed, fac.e) == f);
        CHECK(is_dagger_mono(fac.image.embed));
        CHECK(is_zero_epi(fac.e));
        CHECK(is_zero_mono(fac.m));
        CHECK(is_zero_epi(fac.m));
        CHECK(compose(fac.m, fac.co) == fac.e);
        // The coimage is the image of the dagger.
        CHECK(fac.coimage.rep() == factorize(dagger(f)).image.rep());
      }
    }
}

TEST_CASE("effects", "[galois]") {
  for (int a = 0; a < mo2()->size(); ++a) {
    GaloisMorphism e = effect(mo2(), a);
    CHECK(dagger(e) == e);
    CHECK(compose(e, e) == e);
    for (int x = 0; x < mo2()->size(); ++x)
      CHECK(e.lower(x) == mo2()->join(mo2()->oc(a), mo2()->meet(a, mo2()->oc(x))));
  }
}

TEST_CASE("sasaki operations through effects", "[galois]") {
  const OmlPtr& l = mo2();
  for (int a = 0; a < l->size(); ++a)
    for (int b = 0; b < l->size(); ++b) {
      CHECK(l->sasaki_hook(a, b) == l->join(l->oc(a), l->meet(a, b)));
      CHECK(l->sasaki_and(a, b) == l->meet(b, l->join(l->oc(b), a)));
      // hook = inverse image along the effect, and-then = direct image.
      CHECK(inverse_image_rep(effect(l, a), b) == l->sasaki_hook(a, b));
      CHECK(direct_image_rep(effect(l, b), a) == l->sasaki_and(a, b));
    }
  SECTION("adjunction between the two") {
    for (int k = 0; k < l->size(); ++k)
      for (int m = 0; m < l->size(); ++m)
        for (int n = 0; n < l->size(); ++n)
          CHECK(l->leq(l->sasaki_and(k, m), n) == l->leq(k, l->sasaki_hook(m, n)));
  }
}

TEST_CASE("weakest precondition respects composition", "[galois]") {
  GaloisMorphism f = effect(mo2(), mo2()->index("p1"));
  GaloisMorphism g = dagger(classify(mo2(), mo2()->index("p2")));
  GaloisMorphism gf = compose(g, f);
  for (int y = 0; y < 2; ++y) CHECK(wp(gf, y) == wp(f, wp(g, y)));
  for (int y = 0; y < mo2()->size(); ++y) CHECK(wp(identity_morphism(mo2()), y) == y);
}

TEST_CASE("opclassifier", "[galois]") {
  const OmlPtr& l = mo2();
  SECTION("classify and unclassify are mutually inverse") {
    for (int a = 0; a < l->size(); ++a) {
      GaloisMorphism g = classify(l, a);
      CHECK(unclassify(g) == a);
      CHECK(kernel(dagger(g)).rep() == l->oc(a));
    }
    HomSet hs = enumerate_hom(two(), l);
    CHECK(hs.morphisms.size() == static_cast<std::size_t>(l->size()));
    for (const auto& g : hs.morphisms) CHECK(classify(l, unclassify(g)) == g);
  }
  SECTION("naturality against direct images") {
    HomSet hs = enumerate_hom(l, b2());
    for (const auto& f : hs.morphisms)
      for (int a = 0; a < l->size(); ++a)
        CHECK(classify(b2(), direct_image_rep(f, a)) == compose(f, classify(l, a)));
  }
}

TEST_CASE("biproducts", "[galois]") {
  Biproduct bp = biproduct(two(), b2());
  GaloisMorphism p1 = dagger(bp.kappa1), p2 = dagger(bp.kappa2);
  CHECK(compose(p1, bp.kappa1) == identity_morphism(two()));
  CHECK(compose(p2, bp.kappa2) == identity_morphism(b2()));
  CHECK(is_zero_morphism(compose(p2, bp.kappa1)));
  CHECK(is_zero_morphism(compose(p1, bp.kappa2)));

  SECTION("cotuple equations and uniqueness") {
    HomSet h1 = enumerate_hom(two(), mo2());
    HomSet h2 = enumerate_hom(b2(), mo2());
    HomSet hb = enumerate_hom(bp.lattice, mo2());
    for (const auto& f1 : h1.morphisms)
      for (const auto& f2 : h2.morphisms) {
        GaloisMorphism cot = cotuple(bp, f1, f2);
        CHECK(compose(cot, bp.kappa1) == f1);
        CHECK(compose(cot, bp.kappa2) == f2);
        int count = 0;
        for (const auto& h : hb.morphisms)
          if (compose(h, bp.kappa1) == f1 && compose(h, bp.kappa2) == f2) ++count;
        CHECK(count == 1);
      }
  }
  SECTION("2 (+) 2 is the four-element Boolean algebra") {
    CHECK(find_oml_iso(*biproduct(two(), two()).lattice, *b2()).has_value());
  }
  SECTION("mismatched components are rejected") {
    GaloisMorphism f = classify(mo2(), 0);
    CHECK_THROWS_AS(cotuple(bp, f, f), std::invalid_argument);
  }
}

TEST_CASE("free powerset construction", "[galois]") {
  const int n = 2;
  OmlPtr pa = boolean_lattice(n);
  const OmlPtr& x = mo2();
  SECTION("transposes are mutually inverse") {
    std::vector<int> g(n);
    for (g[0] = 0; g[0] < x->size(); ++g[0])
      for (g[1] = 0; g[1] < x->size(); ++g[1]) {
        GaloisMorphism f = transpose_up(pa, n, g, x);
        CHECK(transpose_down(f, n) == g);
      }
    HomSet hs = enumerate_hom(pa, x);
    CHECK(hs.morphisms.size() == static_cast<std::size_t>(x->size() * x->size()));
    for (const auto& f : hs.morphisms)
      CHECK(transpose_up(pa, n, transpose_down(f, n), x) == f);
  }
  SECTION("underlying action is contravariant composition with oc") {
    GaloisMorphism f = effect(x, x->index("p1"));
    std::vector<int> u = underlying_action(f);
    for (int v = 0; v < x->size(); ++v) CHECK(u[v] == x->oc(f.lower(v)));
  }
}

TEST_CASE("hom enumeration caps", "[galois]") {
  EnumLimits lim;
  lim.hom_cap = 3;
  SECTION("refusal when sampling is forbidden") {
    lim.allow_sampling = false;
    CHECK_THROWS_AS(enumerate_hom(mo2(), mo2(), lim), CapExceeded);
  }
  SECTION("truncation is reported when sampling is allowed") {
    HomSet hs = enumerate_hom(mo2(), mo2(), lim);
    CHECK_FALSE(hs.exhaustive);
    CHECK(hs.morphisms.size() <= 3);
  }
}
