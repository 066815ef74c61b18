#include <catch2/catch_amalgamated.hpp>

#include "omlgal/dagcat.hpp"
#include "omlgal/io.hpp"
#include "omlgal/iso.hpp"
#include "omlgal/karoubi.hpp"
#include "omlgal/rel.hpp"
#include "support.hpp"

using namespace omlgal;

namespace {
MaterializedRel& rel2() {
  static MaterializedRel m = materialize_rel(2);
  return m;
}
}  // namespace

TEST_CASE("plain envelope splits every idempotent", "[karoubi]") {
  MaterializedKaroubi k = karoubi_envelope(rel2().cat, false);
  CHECK(check_category_laws(k.cat).ok());
  CHECK_FALSE(k.cat.has_dagger());

  int idempotents = 0;
  for (int a = 0; a < static_cast<int>(k.cat.arrows.size()); ++a) {
    const auto& ar = k.cat.arrows[a];
    if (ar.src != ar.dst || k.cat.compose(a, a) != a) continue;
    ++idempotents;
    IdempotentSplitting s = split_idempotent(k, a);
    CHECK(k.cat.compose(s.m, s.e) == a);
    CHECK(k.cat.compose(s.e, s.m) == k.cat.identity[s.via_obj]);
  }
  CHECK(idempotents > 0);
  CHECK_THROWS_AS(split_idempotent(k, k.cat.hom[0][1].at(0)), std::invalid_argument);
}

TEST_CASE("embedding into the envelope is full and faithful", "[karoubi]") {
  const FinCategory& base = rel2().cat;
  MaterializedKaroubi k = karoubi_envelope(base, false);
  std::vector<int> obj_map(base.objects.size());
  for (std::size_t x = 0; x < base.objects.size(); ++x)
    obj_map[x] = k.object_of(static_cast<int>(x), base.identity[x]);
  std::vector<int> arrow_map(base.arrows.size());
  for (int a = 0; a < static_cast<int>(base.arrows.size()); ++a)
    arrow_map[a] = k.index_of(obj_map[base.arrows[a].src], obj_map[base.arrows[a].dst], a);
  CHECK(check_functor(base, k.cat, obj_map, arrow_map).ok());
  CHECK(check_functor_full(base, k.cat, obj_map, arrow_map).ok());
}

TEST_CASE("dagger envelope of relations is a dagger kernel category on PERs",
          "[karoubi]") {
  MaterializedKaroubi k = dagger_karoubi(rel2().cat);
  RunReport rep = check_dagger_kernel_category(k.cat);
  for (const auto& r : rep.results) {
    CAPTURE(r.name, r.witness);
    CHECK(r.pass);
  }

  SECTION("objects are exactly the pairs (set, PER on it)") {
    for (auto [x, e] : k.objs) {
      (void)x;
      CHECK(is_per(rel2().rels[e]));
    }
    std::size_t pers = 0;
    for (int x = 0; x <= 2; ++x)
      for (int e : rel2().cat.hom[x][x])
        if (is_per(rel2().rels[e])) ++pers;
    CHECK(k.objs.size() == pers);
  }
  SECTION("composite of an arrow with its kernel is the zero arrow") {
    for (int a = 0; a < static_cast<int>(k.cat.arrows.size()); ++a) {
      int kk = k.cat.kernel[a];
      auto z = k.cat.zero_arrow(k.cat.arrows[kk].src, k.cat.arrows[a].dst);
      REQUIRE(z.has_value());
      CHECK(k.cat.compose(a, kk) == *z);
    }
  }
}

TEST_CASE("kernel subobject category and the effect functor", "[karoubi]") {
  MaterializedKSub ks = ksub_category(rel2().cat);
  CHECK(check_category_laws(ks.cat).ok());
  MaterializedKaroubi env = dagger_karoubi(rel2().cat);
  EffectFunctor ef = effect_functor(rel2().cat, ks, env);
  CHECK(check_functor(ks.cat, env.cat, ef.obj_map, ef.arrow_map).ok());
  CHECK(check_functor_full(ks.cat, env.cat, ef.obj_map, ef.arrow_map).ok());
}

TEST_CASE("envelope of a semigroup seen as one-object category", "[karoubi]") {
  FoulisSemigroup sg = load_foulis(testutil::fixture("endo2.fsg"));
  FoulisEnvelope env = dagger_karoubi_of_foulis(sg);
  RunReport rep = check_dagger_kernel_category(env.cat);
  CHECK(rep.ok());
  // Objects are the self-adjoint idempotents: here 1 and 0.
  CHECK(env.obj_elem.size() == 2);
  CHECK(env.cat.zero_object == env.object_of(sg.zero()));
  LawResult gen = check_generator(env.cat, env.object_of(sg.unit));
  CHECK(gen.pass);
}
