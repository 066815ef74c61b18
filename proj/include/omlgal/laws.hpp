#pragma once

// Named law suites over a built-in corpus of small orthomodular lattices,
// finite relations and Foulis semigroups.  Each suite returns a RunReport;
// render_text turns reports into the deterministic output the CLI prints.

#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dagcat.hpp"
#include "foulis.hpp"
#include "galois.hpp"
#include "iso.hpp"
#include "karoubi.hpp"
#include "oml.hpp"
#include "rel.hpp"
#include "rng.hpp"

namespace omlgal {

struct SuiteConfig {
  std::uint64_t seed = 0;
  int max_size = kDefaultMaxLattice;  // cap on constructed lattice sizes
  std::size_t hom_cap = 20000;        // per-homset enumeration cap

  CheckCaps caps() const {
    CheckCaps c;
    c.seed = seed;
    return c;
  }
  EnumLimits limits() const {
    EnumLimits l;
    l.hom_cap = hom_cap;
    l.seed = seed;
    return l;
  }
};

namespace detail {

// Fold a ValidationReport into one law line.
inline void add_law(RunReport& rep, const std::string& name, const ValidationReport& v,
                    std::uint64_t checked = 0) {
  LawResult& r = rep.add(name);
  r.coverage.checked = checked;
  if (!v.ok()) {
    r.pass = false;
    r.witness = !v.structural.empty()
                    ? v.structural.front()
                    : v.violations.front().axiom + " at " + v.violations.front().witness;
  }
}

// Append another suite's results under a prefix.
inline void merge_suite(RunReport& rep, const std::string& prefix, const RunReport& sub) {
  for (LawResult r : sub.results) {
    r.name = prefix + r.name;
    rep.results.push_back(std::move(r));
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Built-in corpus

struct BuiltinCorpus {
  std::vector<std::string> names;
  std::vector<OmlPtr> lattices;

  const OmlPtr& at(const std::string& n) const {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == n) return lattices[i];
    throw std::invalid_argument("unknown corpus lattice: " + n);
  }
};

// The four lattices that materialize into a finite category: downset-closed
// and containing a one-element lattice.
inline BuiltinCorpus builtin_corpus() {
  return BuiltinCorpus{{"one", "two", "bool2", "mo2"},
                       {boolean_lattice(0), mo_lattice(0), boolean_lattice(2), mo_lattice(2)}};
}

// Hexagon ortholattice: 0 < a < b < 1 and 0 < b' < a' < 1.  A valid
// ortholattice on which orthomodularity fails, witnessed by the pair (a, b).
inline RawOML hexagon_raw() {
  RawOML raw;
  raw.elements = {"0", "a", "b", "bc", "ac", "1"};
  raw.leq = {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "bc"}, {"bc", "ac"}, {"ac", "1"}};
  raw.oc = {{"0", "1"}, {"1", "0"}, {"a", "ac"}, {"ac", "a"}, {"b", "bc"}, {"bc", "b"}};
  return raw;
}

// Glue bounded ortholattices at shared bottom "0" and top "1"; every other
// element keeps its block-local order and complement.  The sum is
// orthomodular exactly when every block is.
inline RawOML horizontal_sum(const std::vector<RawOML>& blocks) {
  RawOML raw;
  raw.elements = {"0", "1"};
  raw.leq.emplace_back("0", "1");
  raw.oc.emplace_back("0", "1");
  raw.oc.emplace_back("1", "0");
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    auto nm = [&](const std::string& id) {
      if (id == "0" || id == "1") return id;
      return "s" + std::to_string(k) + "." + id;
    };
    for (const auto& e : blocks[k].elements)
      if (e != "0" && e != "1") raw.elements.push_back(nm(e));
    for (const auto& [lo, hi] : blocks[k].leq) raw.leq.emplace_back(nm(lo), nm(hi));
    for (const auto& [x, y] : blocks[k].oc)
      if (x != "0" && x != "1") raw.oc.emplace_back(nm(x), nm(y));
    for (const auto& e : blocks[k].elements) {
      raw.leq.emplace_back("0", nm(e));
      raw.leq.emplace_back(nm(e), "1");
    }
  }
  return raw;
}

// A seeded horizontal sum of stock blocks.  `expect_oml` reports whether the
// result must be orthomodular (no hexagon block drawn).
inline RawOML random_ortholattice(Rng& rng, bool& expect_oml) {
  static const std::vector<RawOML> stock = [] {
    std::vector<RawOML> s;
    s.push_back(boolean_lattice(2)->raw());
    s.push_back(boolean_lattice(3)->raw());
    s.push_back(mo_lattice(2)->raw());
    s.push_back(mo_lattice(3)->raw());
    return s;
  }();
  const int count = 1 + static_cast<int>(rng.below(3));
  std::vector<RawOML> blocks;
  expect_oml = true;
  for (int i = 0; i < count; ++i) {
    if (rng.below(4) == 0) {
      blocks.push_back(hexagon_raw());
      expect_oml = false;
    } else {
      blocks.push_back(stock[rng.below(stock.size())]);
    }
  }
  return horizontal_sum(blocks);
}

// ---------------------------------------------------------------------------
// Suite: orthomodular lattices and the category of Galois morphisms

inline RunReport laws_omlatgal(const SuiteConfig& cfg = {}) {
  RunReport rep;
  rep.command = "laws omlatgal";
  rep.corpus =
      "one, two, bool2, mo2 materialized; bool3, mo3, hexagon and seeded sums for lattice laws";

  // Lattice-level instances: stock lattices plus seeded horizontal sums.
  std::vector<std::pair<RawOML, bool>> instances;  // (raw, expected orthomodular)
  instances.emplace_back(boolean_lattice(0)->raw(), true);
  instances.emplace_back(mo_lattice(0)->raw(), true);
  for (int n = 1; n <= 3; ++n) instances.emplace_back(boolean_lattice(n)->raw(), true);
  for (int n = 1; n <= 3; ++n) instances.emplace_back(mo_lattice(n)->raw(), true);
  instances.emplace_back(hexagon_raw(), false);
  Rng rng(cfg.seed);
  for (int i = 0; i < 12; ++i) {
    bool expect = true;
    RawOML raw = random_ortholattice(rng, expect);
    instances.emplace_back(std::move(raw), expect);
  }

  {
    LawResult& agree = rep.add("orthomodularity-verdicts-agree");
    LawResult& verdict = rep.add("orthomodularity-verdict");
    agree.coverage.checked = verdict.coverage.checked = instances.size();
    agree.coverage.seed = verdict.coverage.seed = cfg.seed;
    for (std::size_t i = 0; i < instances.size(); ++i) {
      ValidationReport v = check_orthomodular(instances[i].first);
      if (!v.structural.empty()) {
        verdict.pass = false;
        verdict.witness = "instance " + std::to_string(i) + ": " + v.structural.front();
        continue;
      }
      if (agree.pass && !orthomodular_conditions_agree(v)) {
        agree.pass = false;
        agree.witness = "instance " + std::to_string(i) + ": conditions disagree";
      }
      if (verdict.pass && v.ok() != instances[i].second) {
        verdict.pass = false;
        verdict.witness = "instance " + std::to_string(i) + ": expected " +
                          (instances[i].second ? "orthomodular" : "non-orthomodular");
      }
    }
  }

  // Lattices used for element-level laws.
  std::vector<OmlPtr> latt = {mo_lattice(0), boolean_lattice(2), boolean_lattice(3),
                              mo_lattice(2), mo_lattice(3)};

  {
    LawResult& r = rep.add("de-morgan");
    for (const auto& lp : latt) {
      const FiniteOML& l = *lp;
      for (int x = 0; x < l.size() && r.pass; ++x) {
        if (l.oc(l.oc(x)) != x) {
          r.pass = false;
          r.witness = l.id(x) + " in a " + std::to_string(l.size()) + "-element lattice";
          break;
        }
        for (int y = 0; y < l.size(); ++y) {
          ++r.coverage.checked;
          if (l.oc(l.meet(x, y)) != l.join(l.oc(x), l.oc(y))) {
            r.pass = false;
            r.witness = l.id(x) + ", " + l.id(y);
            break;
          }
        }
      }
    }
  }

  {
    LawResult& r = rep.add("sasaki-adjunction");
    for (const auto& lp : latt) {
      const FiniteOML& l = *lp;
      for (int k = 0; k < l.size() && r.pass; ++k)
        for (int m = 0; m < l.size() && r.pass; ++m)
          for (int n = 0; n < l.size(); ++n) {
            ++r.coverage.checked;
            if (l.leq(l.sasaki_and(k, m), n) != l.leq(k, l.sasaki_hook(m, n))) {
              r.pass = false;
              r.witness = l.id(k) + ", " + l.id(m) + ", " + l.id(n);
              break;
            }
          }
    }
  }

  {
    LawResult& r = rep.add("sasaki-via-effects");
    for (const auto& lp : latt) {
      const FiniteOML& l = *lp;
      for (int m = 0; m < l.size() && r.pass; ++m) {
        GaloisMorphism em = effect(lp, m);
        for (int n = 0; n < l.size(); ++n) {
          ++r.coverage.checked;
          if (inverse_image_rep(em, n) != l.sasaki_hook(m, n) ||
              direct_image_rep(em, n) != l.sasaki_and(n, m)) {
            r.pass = false;
            r.witness = l.id(m) + ", " + l.id(n);
            break;
          }
        }
      }
    }
  }

  {
    LawResult& r = rep.add("downset-lattices");
    for (const auto& lp : latt) {
      for (int a = 0; a < lp->size(); ++a) {
        ++r.coverage.checked;
        Downset d = downset_oml(lp, a);
        int below = 0;
        for (int u = 0; u < lp->size(); ++u)
          if (lp->leq(u, a)) ++below;
        if (d.lattice->size() != below) {
          r.pass = false;
          r.witness = "downset of " + lp->id(a) + " has the wrong carrier";
          break;
        }
        if (a == lp->top() && !same_lattice(*d.lattice, *lp)) {
          r.pass = false;
          r.witness = "downset of the top is not the ambient lattice";
          break;
        }
      }
      if (!r.pass) break;
    }
  }

  {
    LawResult& r = rep.add("boolean-closure");
    for (int n = 1; n <= 3; ++n) {
      OmlPtr b = boolean_lattice(n);
      for (int a = 0; a < b->size(); ++a) {
        ++r.coverage.checked;
        if (!is_boolean(*downset_oml(b, a).lattice)) {
          r.pass = false;
          r.witness = "downset " + b->id(a) + " in the " + std::to_string(n) + "-atom algebra";
        }
      }
    }
    for (int i = 1; i <= 2 && r.pass; ++i)
      for (int j = 1; j <= 2 && r.pass; ++j) {
        ++r.coverage.checked;
        if (!is_boolean(*biproduct(boolean_lattice(i), boolean_lattice(j)).lattice)) {
          r.pass = false;
          r.witness = "biproduct of the " + std::to_string(i) + "- and " + std::to_string(j) +
                      "-atom algebras";
        }
      }
  }

  // The materialized category and its conformance laws.
  BuiltinCorpus corp = builtin_corpus();
  MaterializedOmlatgal mat = materialize_omlatgal(corp.names, corp.lattices, cfg.limits());
  detail::merge_suite(rep, "", check_dagger_kernel_category(mat.cat, cfg.caps()));

  const int narr = static_cast<int>(mat.cat.arrows.size());

  {
    LawResult& r = rep.add("factorization");
    for (int i = 0; i < narr && r.pass; ++i) {
      ++r.coverage.checked;
      const GaloisMorphism& f = mat.morphisms[i];
      Factorization fac = factorize(f);
      if (compose(fac.image.embed, fac.e) != f || compose(fac.m, fac.co) != fac.e ||
          !is_dagger_mono(fac.image.embed) || !is_zero_epi(fac.e) || !is_zero_epi(fac.m) ||
          !is_zero_mono(fac.m)) {
        r.pass = false;
        r.witness = detail::arrow_str(mat.cat, i);
      }
    }
  }

  {
    LawResult& adj = rep.add("image-adjunction");
    LawResult& agr = rep.add("image-abstract-agreement");
    LawResult& dua = rep.add("image-duality");
    for (int i = 0; i < narr; ++i) {
      const GaloisMorphism& f = mat.morphisms[i];
      const FiniteOML& X = *f.src();
      const FiniteOML& Y = *f.dst();
      for (int a = 0; a < X.size(); ++a) {
        if (agr.pass) {
          ++agr.coverage.checked;
          if (abstract_direct_image_rep(f, a) != direct_image_rep(f, a)) {
            agr.pass = false;
            agr.witness = detail::arrow_str(mat.cat, i) + " at " + X.id(a);
          }
        }
        for (int b = 0; b < Y.size() && adj.pass; ++b) {
          ++adj.coverage.checked;
          if (Y.leq(direct_image_rep(f, a), b) != X.leq(a, inverse_image_rep(f, b))) {
            adj.pass = false;
            adj.witness = detail::arrow_str(mat.cat, i) + " at " + X.id(a) + ", " + Y.id(b);
          }
        }
      }
      for (int b = 0; b < Y.size(); ++b) {
        if (agr.pass) {
          ++agr.coverage.checked;
          if (abstract_inverse_image_rep(f, b) != inverse_image_rep(f, b)) {
            agr.pass = false;
            agr.witness = detail::arrow_str(mat.cat, i) + " at " + Y.id(b);
          }
        }
        if (dua.pass) {
          ++dua.coverage.checked;
          if (X.oc(inverse_image_rep(f, b)) != direct_image_rep(dagger(f), Y.oc(b))) {
            dua.pass = false;
            dua.witness = detail::arrow_str(mat.cat, i) + " at " + Y.id(b);
          }
        }
      }
    }
  }

  {
    LawResult& r = rep.add("weakest-precondition");
    for (int i = 0; i < narr && r.pass; ++i) {
      const GaloisMorphism& f = mat.morphisms[i];
      for (int y = 0; y < f.dst()->size(); ++y) {
        ++r.coverage.checked;
        if (wp(identity_morphism(f.dst()), y) != y) {
          r.pass = false;
          r.witness = "identity at " + f.dst()->id(y);
          break;
        }
      }
      for (int g : mat.cat.out_arrows[mat.cat.arrows[i].dst]) {
        const GaloisMorphism& gm = mat.morphisms[g];
        GaloisMorphism gf = compose(gm, f);
        for (int y = 0; y < gm.dst()->size(); ++y) {
          ++r.coverage.checked;
          if (wp(gf, y) != wp(f, wp(gm, y))) {
            r.pass = false;
            r.witness = detail::arrow_str(mat.cat, g) + " after " + detail::arrow_str(mat.cat, i);
            break;
          }
        }
        if (!r.pass) break;
      }
    }
  }

  {
    LawResult& r = rep.add("opclassifier-bijection");
    LawResult& nat = rep.add("opclassifier-naturality");
    for (std::size_t x = 0; x < corp.lattices.size(); ++x) {
      const OmlPtr& X = corp.lattices[x];
      for (int a = 0; a < X->size() && r.pass; ++a) {
        ++r.coverage.checked;
        if (unclassify(classify(X, a)) != a) {
          r.pass = false;
          r.witness = corp.names[x] + " at " + X->id(a);
        }
      }
      HomSet hs = enumerate_hom(two_lattice(), X, cfg.limits());
      if (static_cast<int>(hs.morphisms.size()) != X->size()) {
        r.pass = false;
        r.witness = corp.names[x] + ": hom from the opclassifier has the wrong size";
      }
      for (const auto& g : hs.morphisms) {
        ++r.coverage.checked;
        if (r.pass && classify(X, unclassify(g)) != g) {
          r.pass = false;
          r.witness = corp.names[x] + ": classify does not invert unclassify";
        }
      }
    }
    for (int i = 0; i < narr && nat.pass; ++i) {
      const GaloisMorphism& f = mat.morphisms[i];
      for (int a = 0; a < f.src()->size(); ++a) {
        ++nat.coverage.checked;
        if (classify(f.dst(), direct_image_rep(f, a)) != compose(f, classify(f.src(), a))) {
          nat.pass = false;
          nat.witness = detail::arrow_str(mat.cat, i) + " at " + f.src()->id(a);
          break;
        }
      }
    }
  }

  {
    LawResult& r = rep.add("biproduct-laws");
    LawResult& iso = rep.add("biproduct-of-opclassifiers");
    const OmlPtr two = mo_lattice(0);
    const OmlPtr b2 = boolean_lattice(2);
    const OmlPtr mo2 = mo_lattice(2);
    std::vector<std::pair<OmlPtr, OmlPtr>> pairs = {{two, two}, {two, b2}, {b2, mo2}};
    for (const auto& [L, R] : pairs) {
      Biproduct bp = biproduct(L, R);
      GaloisMorphism p1 = dagger(bp.kappa1), p2 = dagger(bp.kappa2);
      bool kap = is_dagger_mono(bp.kappa1) && is_dagger_mono(bp.kappa2) &&
                 compose(p1, bp.kappa1) == identity_morphism(L) &&
                 compose(p2, bp.kappa2) == identity_morphism(R) &&
                 is_zero_morphism(compose(p2, bp.kappa1)) &&
                 is_zero_morphism(compose(p1, bp.kappa2));
      ++r.coverage.checked;
      if (r.pass && !kap) {
        r.pass = false;
        r.witness = "coprojection laws on a " + std::to_string(bp.lattice->size()) +
                    "-element biproduct";
      }
      for (const OmlPtr& Z : {two, mo2}) {
        HomSet h1 = enumerate_hom(L, Z, cfg.limits());
        HomSet h2 = enumerate_hom(R, Z, cfg.limits());
        HomSet hb = enumerate_hom(bp.lattice, Z, cfg.limits());
        std::map<std::pair<std::vector<int>, std::vector<int>>, int> seen;
        for (std::size_t i = 0; i < hb.morphisms.size(); ++i)
          ++seen[{compose(hb.morphisms[i], bp.kappa1).lower_table(),
                  compose(hb.morphisms[i], bp.kappa2).lower_table()}];
        for (const auto& f1 : h1.morphisms)
          for (const auto& f2 : h2.morphisms) {
            ++r.coverage.checked;
            if (!r.pass) break;
            GaloisMorphism cot = cotuple(bp, f1, f2);
            if (compose(cot, bp.kappa1) != f1 || compose(cot, bp.kappa2) != f2) {
              r.pass = false;
              r.witness = "cotuple equations";
              break;
            }
            auto it = seen.find({f1.lower_table(), f2.lower_table()});
            if (it == seen.end() || it->second != 1) {
              r.pass = false;
              r.witness = "cotuple is not the unique mediating morphism";
              break;
            }
            GaloisMorphism tup = dagger(cot);
            if (compose(p1, tup) != dagger(f1) || compose(p2, tup) != dagger(f2)) {
              r.pass = false;
              r.witness = "tuple equations on the product side";
              break;
            }
          }
      }
    }
    iso.coverage.checked = 1;
    if (!find_oml_iso(*biproduct(two, two).lattice, *boolean_lattice(2))) {
      iso.pass = false;
      iso.witness = "two plus two is not the four-element Boolean algebra";
    }
  }

  {
    LawResult& r = rep.add("ksub-representation");
    for (std::size_t x = 0; x < corp.lattices.size(); ++x) {
      ++r.coverage.checked;
      KSubIsoResult ks = ksub_iso(corp.lattices[x], corp.lattices, cfg.limits());
      if (!ks.report.ok() && r.pass) {
        r.pass = false;
        r.witness = corp.names[x] + ": " +
                    (!ks.report.structural.empty() ? ks.report.structural.front()
                                                   : ks.report.violations.front().axiom);
      }
    }
  }

  {
    // The representation is natural: direct images match oc o lower, inverse
    // images match upper o oc, computed through genuine kernel classes.
    LawResult& r = rep.add("ksub-naturality");
    std::vector<KSubPoset> posets;
    std::vector<std::vector<int>> cls;  // [object][element] -> class
    for (std::size_t x = 0; x < corp.lattices.size() && r.pass; ++x) {
      posets.push_back(ksub_poset(mat.cat, static_cast<int>(x)));
      if (!posets.back().report.ok()) {
        r.pass = false;
        r.witness = corp.names[x] + ": kernel poset failed validation";
        break;
      }
      const OmlPtr& X = corp.lattices[x];
      std::vector<int> c(X->size(), -1);
      std::set<int> distinct;
      for (int a = 0; a < X->size(); ++a) {
        int e = mat.index_of(static_cast<int>(x), static_cast<int>(x), effect(X, X->oc(a)));
        c[a] = ksub_class_of(mat.cat, posets.back(), mat.cat.kernel[e]);
        distinct.insert(c[a]);
      }
      if (static_cast<int>(distinct.size()) != X->size() ||
          distinct.size() != posets.back().reps.size()) {
        r.pass = false;
        r.witness = corp.names[x] + ": elements and kernel classes do not biject";
        break;
      }
      cls.push_back(std::move(c));
    }
    for (int i = 0; i < narr && r.pass; ++i) {
      const int sx = mat.cat.arrows[i].src, dy = mat.cat.arrows[i].dst;
      const GaloisMorphism& f = mat.morphisms[i];
      for (int a = 0; a < f.src()->size() && r.pass; ++a) {
        ++r.coverage.checked;
        int img = abstract_image_arrow(mat.cat, i, posets[sx].reps[cls[sx][a]]);
        if (ksub_class_of(mat.cat, posets[dy], img) != cls[dy][direct_image_rep(f, a)]) {
          r.pass = false;
          r.witness = "direct image square at " + detail::arrow_str(mat.cat, i);
        }
      }
      for (int b = 0; b < f.dst()->size() && r.pass; ++b) {
        ++r.coverage.checked;
        int pull = abstract_pullback_arrow(mat.cat, i, posets[dy].reps[cls[dy][b]]);
        if (ksub_class_of(mat.cat, posets[sx], pull) != cls[sx][inverse_image_rep(f, b)]) {
          r.pass = false;
          r.witness = "inverse image square at " + detail::arrow_str(mat.cat, i);
        }
      }
    }
  }

  {
    LawResult& r = rep.add("free-adjunction-bijection");
    for (int n = 0; n <= 3; ++n) {
      OmlPtr pa = boolean_lattice(n);
      for (const OmlPtr& X : {mo_lattice(0), mo_lattice(2)}) {
        int total = 1;
        for (int i = 0; i < n; ++i) total *= X->size();
        std::vector<int> g(n, 0);
        for (int code = 0; code < total; ++code) {
          int c = code;
          for (int i = 0; i < n; ++i) {
            g[i] = c % X->size();
            c /= X->size();
          }
          ++r.coverage.checked;
          if (transpose_down(transpose_up(pa, n, g, X), n) != g) {
            r.pass = false;
            r.witness = "function code " + std::to_string(code) + " on " + std::to_string(n) +
                        " atoms";
            break;
          }
        }
        HomSet hs = enumerate_hom(pa, X, cfg.limits());
        if (static_cast<int>(hs.morphisms.size()) != total && r.pass) {
          r.pass = false;
          r.witness = "hom from the " + std::to_string(n) + "-atom powerset has the wrong size";
        }
        for (const auto& f : hs.morphisms) {
          ++r.coverage.checked;
          if (r.pass && transpose_up(pa, n, transpose_down(f, n), X) != f) {
            r.pass = false;
            r.witness = "transposed morphism on " + std::to_string(n) + " atoms";
          }
        }
        if (!r.pass) break;
      }
      if (!r.pass) break;
    }
  }

  {
    LawResult& r = rep.add("free-adjunction-triangles");
    // Counit after the powerset image of the unit is the identity.  The unit
    // sends an atom to its singleton; applying the powerset functor wraps
    // that value in a singleton again.
    for (int n = 1; n <= 2 && r.pass; ++n) {
      OmlPtr pa = boolean_lattice(n);
      OmlPtr pupa = boolean_lattice(pa->size());
      std::vector<int> eta(n);
      for (int a = 0; a < n; ++a) eta[a] = 1 << (1 << a);
      GaloisMorphism peta = transpose_up(pa, n, eta, pupa);
      std::vector<int> idf(pa->size());
      for (int i = 0; i < pa->size(); ++i) idf[i] = i;
      GaloisMorphism eps = transpose_up(pupa, pa->size(), idf, pa);
      ++r.coverage.checked;
      if (compose(eps, peta) != identity_morphism(pa)) {
        r.pass = false;
        r.witness = "counit triangle on " + std::to_string(n) + " atoms";
      }
    }
    // The underlying action of the counit splits the unit pointwise.
    for (const OmlPtr& X : {mo_lattice(0), boolean_lattice(2), mo_lattice(2)}) {
      if (!r.pass) break;
      OmlPtr pux = boolean_lattice(X->size());
      std::vector<int> idf(X->size());
      for (int i = 0; i < X->size(); ++i) idf[i] = i;
      GaloisMorphism eps = transpose_up(pux, X->size(), idf, X);
      std::vector<int> act = underlying_action(eps);
      for (int a = 0; a < X->size(); ++a) {
        ++r.coverage.checked;
        if (act[1 << a] != a) {
          r.pass = false;
          r.witness = "unit triangle at " + X->id(a);
          break;
        }
      }
    }
  }

  {
    LawResult& r = rep.add("underlying-functor");
    for (std::size_t x = 0; x < corp.lattices.size(); ++x) {
      const OmlPtr& X = corp.lattices[x];
      std::vector<int> act = underlying_action(identity_morphism(X));
      for (int a = 0; a < X->size(); ++a) {
        ++r.coverage.checked;
        if (act[a] != a) {
          r.pass = false;
          r.witness = "identity action on " + corp.names[x];
        }
      }
    }
    for (int i = 0; i < narr && r.pass; ++i) {
      std::vector<int> uf = underlying_action(mat.morphisms[i]);
      for (int g : mat.cat.out_arrows[mat.cat.arrows[i].dst]) {
        std::vector<int> ug = underlying_action(mat.morphisms[g]);
        std::vector<int> ugf = underlying_action(compose(mat.morphisms[g], mat.morphisms[i]));
        for (int a = 0; a < static_cast<int>(uf.size()); ++a) {
          ++r.coverage.checked;
          if (ugf[a] != ug[uf[a]]) {
            r.pass = false;
            r.witness = detail::arrow_str(mat.cat, g) + " after " + detail::arrow_str(mat.cat, i);
            break;
          }
        }
        if (!r.pass) break;
      }
    }
  }

  return rep;
}

// ---------------------------------------------------------------------------
// Suite: the category of finite sets and relations

inline RunReport laws_rel(const SuiteConfig& cfg = {}) {
  RunReport rep;
  rep.command = "laws rel";
  const int cap = cfg.max_size < 3 ? cfg.max_size : 3;
  rep.corpus = "sets of size 0.." + std::to_string(cap) + " with all relations";

  MaterializedRel mat = materialize_rel(cap);
  detail::merge_suite(rep, "", check_dagger_kernel_category(mat.cat, cfg.caps()));

  {
    LawResult gen = check_generator(mat.cat, 1, cfg.caps().max_pairs, cfg.seed);
    gen.name = "generator-singleton";
    rep.results.push_back(std::move(gen));
  }

  {
    LawResult& r = rep.add("ksub-powerset");
    for (int n = 0; n <= cap; ++n) {
      ++r.coverage.checked;
      KSubPoset p = ksub_poset(mat.cat, n);
      if (!p.report.ok() || !p.lattice || p.lattice->size() != (1 << n) ||
          !is_boolean(*p.lattice)) {
        r.pass = false;
        r.witness = "kernel poset of the " + std::to_string(n) + "-element set";
        break;
      }
    }
  }

  {
    LawResult& r = rep.add("graph-functor");
    for (int m = 0; m <= cap && r.pass; ++m) {
      std::vector<int> id(m);
      for (int i = 0; i < m; ++i) id[i] = i;
      ++r.coverage.checked;
      if (mat.index_of(graph(id, m)) != mat.cat.identity[m]) {
        r.pass = false;
        r.witness = "graph of the identity on " + std::to_string(m) + " elements";
        break;
      }
      for (int n = 0; n <= cap && r.pass; ++n) {
        int fn_count = 1;
        for (int i = 0; i < m; ++i) fn_count *= n;
        if (n == 0 && m > 0) fn_count = 0;
        for (int fc = 0; fc < fn_count && r.pass; ++fc) {
          std::vector<int> f(m);
          int c = fc;
          for (int i = 0; i < m; ++i) {
            f[i] = c % n;
            c /= n;
          }
          for (int k = 0; k <= cap && r.pass; ++k) {
            int gn_count = 1;
            for (int i = 0; i < n; ++i) gn_count *= k;
            if (k == 0 && n > 0) gn_count = 0;
            for (int gc = 0; gc < gn_count; ++gc) {
              std::vector<int> g(n);
              int d = gc;
              for (int i = 0; i < n; ++i) {
                g[i] = d % k;
                d /= k;
              }
              std::vector<int> gf(m);
              for (int i = 0; i < m; ++i) gf[i] = g[f[i]];
              ++r.coverage.checked;
              if (compose(graph(g, k), graph(f, n)) != graph(gf, k)) {
                r.pass = false;
                r.witness = "composite of function graphs " + std::to_string(m) + "->" +
                            std::to_string(n) + "->" + std::to_string(k);
                break;
              }
            }
          }
        }
      }
    }
  }

  return rep;
}

// ---------------------------------------------------------------------------
// Suite: Karoubi envelopes over the relation category

inline RunReport laws_karoubi(const SuiteConfig& cfg = {}) {
  RunReport rep;
  rep.command = "laws karoubi";
  rep.corpus = "envelopes of the relation category on sets of size 0..2";

  MaterializedRel base = materialize_rel(2);
  MaterializedKaroubi plain = karoubi_envelope(base.cat, false);
  detail::merge_suite(rep, "plain-", check_category_laws(plain.cat, cfg.caps()));

  {
    LawResult& r = rep.add("splitting-laws");
    LawResult& uniq = rep.add("splitting-unique-up-to-iso");
    const int narr = static_cast<int>(plain.cat.arrows.size());
    for (int a = 0; a < narr; ++a) {
      const auto& ar = plain.cat.arrows[a];
      if (ar.src != ar.dst || plain.cat.compose(a, a) != a) continue;
      ++r.coverage.checked;
      IdempotentSplitting sp = split_idempotent(plain, a);
      if (plain.cat.compose(sp.m, sp.e) != a ||
          plain.cat.compose(sp.e, sp.m) != plain.cat.identity[sp.via_obj]) {
        r.pass = false;
        r.witness = detail::arrow_str(plain.cat, a);
      }
      // Any two splittings are isomorphic through the canonical comparison.
      std::vector<std::pair<int, int>> splits;  // (e, m)
      const int nobj = static_cast<int>(plain.cat.objects.size());
      for (int v = 0; v < nobj; ++v)
        for (int e : plain.cat.hom[ar.src][v])
          for (int m : plain.cat.hom[v][ar.src])
            if (plain.cat.compose(m, e) == a &&
                plain.cat.compose(e, m) == plain.cat.identity[v])
              splits.emplace_back(e, m);
      for (const auto& [e1, m1] : splits)
        for (const auto& [e2, m2] : splits) {
          ++uniq.coverage.checked;
          int phi = plain.cat.compose(e2, m1);
          int psi = plain.cat.compose(e1, m2);
          int v1 = plain.cat.arrows[m1].src, v2 = plain.cat.arrows[m2].src;
          if (plain.cat.compose(psi, phi) != plain.cat.identity[v1] ||
              plain.cat.compose(phi, psi) != plain.cat.identity[v2] ||
              plain.cat.compose(m2, phi) != m1) {
            uniq.pass = false;
            uniq.witness = "splittings of " + detail::arrow_str(plain.cat, a);
          }
        }
      if (!uniq.pass || !r.pass) break;
    }
  }

  {
    LawResult& fun = rep.add("embedding-functor");
    LawResult& full = rep.add("embedding-full");
    LawResult& faith = rep.add("embedding-faithful");
    std::vector<int> obj_map(base.cat.objects.size());
    std::vector<int> arrow_map(base.cat.arrows.size());
    for (std::size_t x = 0; x < base.cat.objects.size(); ++x)
      obj_map[x] = plain.object_of(static_cast<int>(x), base.cat.identity[x]);
    for (std::size_t a = 0; a < base.cat.arrows.size(); ++a)
      arrow_map[a] = plain.index_of(obj_map[base.cat.arrows[a].src],
                                    obj_map[base.cat.arrows[a].dst], static_cast<int>(a));
    ValidationReport vf = check_functor(base.cat, plain.cat, obj_map, arrow_map);
    fun.coverage.checked = base.cat.arrows.size();
    if (!vf.ok()) {
      fun.pass = false;
      fun.witness = vf.structural.empty() ? vf.violations.front().axiom : vf.structural.front();
    }
    ValidationReport vfull = check_functor_full(base.cat, plain.cat, obj_map, arrow_map);
    full.coverage.checked = base.cat.objects.size() * base.cat.objects.size();
    if (!vfull.ok()) {
      full.pass = false;
      full.witness = vfull.violations.empty() ? "structural" : vfull.violations.front().witness;
    }
    std::set<int> image(arrow_map.begin(), arrow_map.end());
    faith.coverage.checked = arrow_map.size();
    if (image.size() != arrow_map.size()) {
      faith.pass = false;
      faith.witness = "two base relations share an envelope arrow";
    }
  }

  MaterializedKaroubi dk = dagger_karoubi(base.cat);
  detail::merge_suite(rep, "sa-", check_dagger_kernel_category(dk.cat, cfg.caps()));

  {
    LawResult& r = rep.add("per-objects");
    std::set<std::pair<int, int>> envelope_objects(dk.objs.begin(), dk.objs.end());
    std::set<std::pair<int, int>> pers;
    for (std::size_t a = 0; a < base.cat.arrows.size(); ++a) {
      const auto& ar = base.cat.arrows[a];
      if (ar.src == ar.dst && is_per(base.rels[a]))
        pers.insert({ar.src, static_cast<int>(a)});
    }
    r.coverage.checked = pers.size();
    if (envelope_objects != pers) {
      r.pass = false;
      r.witness = "objects are not exactly the partial equivalence relations";
    }
  }

  MaterializedKSub ks = ksub_category(base.cat);
  detail::merge_suite(rep, "ksubcat-", check_category_laws(ks.cat, cfg.caps()));

  {
    LawResult& fun = rep.add("effect-functor");
    LawResult& full = rep.add("effect-functor-full");
    EffectFunctor ef = effect_functor(base.cat, ks, dk);
    ValidationReport vf = check_functor(ks.cat, dk.cat, ef.obj_map, ef.arrow_map);
    fun.coverage.checked = ks.cat.arrows.size();
    if (!vf.ok()) {
      fun.pass = false;
      fun.witness = vf.structural.empty() ? vf.violations.front().axiom + " at " +
                                                vf.violations.front().witness
                                          : vf.structural.front();
    }
    ValidationReport vfull = check_functor_full(ks.cat, dk.cat, ef.obj_map, ef.arrow_map);
    full.coverage.checked = ks.cat.objects.size() * ks.cat.objects.size();
    if (!vfull.ok()) {
      full.pass = false;
      full.witness = vfull.violations.empty() ? "structural" : vfull.violations.front().witness;
    }
  }

  {
    // The embedding into the self-adjoint envelope preserves kernels on the
    // nose, so it induces an isomorphism of kernel-subobject lattices.
    LawResult& r = rep.add("induced-kernel-map");
    for (std::size_t x = 0; x < base.cat.objects.size() && r.pass; ++x) {
      KSubPoset pb = ksub_poset(base.cat, static_cast<int>(x));
      int ex = dk.object_of(static_cast<int>(x), base.cat.identity[x]);
      KSubPoset pe = ksub_poset(dk.cat, ex);
      if (!pb.report.ok() || !pe.report.ok() || pb.reps.size() != pe.reps.size()) {
        r.pass = false;
        r.witness = "kernel posets over object " + base.cat.objects[x];
        break;
      }
      std::vector<int> map(pb.reps.size(), -1);
      std::set<int> hit;
      for (std::size_t c = 0; c < pb.reps.size(); ++c) {
        int karr = pb.reps[c];
        int ksrc = base.cat.arrows[karr].src;
        int esrc = dk.object_of(ksrc, base.cat.identity[ksrc]);
        int earr = dk.index_of(esrc, ex, karr);
        map[c] = ksub_class_of(dk.cat, pe, earr);
        hit.insert(map[c]);
        ++r.coverage.checked;
      }
      if (hit.size() != pb.reps.size()) {
        r.pass = false;
        r.witness = "induced map is not injective over " + base.cat.objects[x];
        break;
      }
      ValidationReport hom = check_oml_hom(*pb.lattice, *pe.lattice, map);
      if (!hom.ok()) {
        r.pass = false;
        r.witness = "induced map is not a lattice homomorphism over " + base.cat.objects[x];
      }
    }
  }

  return rep;
}

// ---------------------------------------------------------------------------
// Suite: Foulis semigroups

inline RunReport laws_foulis(const SuiteConfig& cfg = {}) {
  RunReport rep;
  rep.command = "laws foulis";
  rep.corpus = "endomorphism semigroups of two, bool2, mo2 and their envelopes";

  struct Inst {
    std::string name;
    OmlPtr lattice;
    EndoSemigroup endo;
  };
  std::vector<Inst> insts;
  for (const auto& [nm, lp] : std::vector<std::pair<std::string, OmlPtr>>{
           {"two", mo_lattice(0)}, {"bool2", boolean_lattice(2)}, {"mo2", mo_lattice(2)}}) {
    insts.push_back({nm, lp, endo_semigroup(lp, cfg.limits())});
  }

  for (const auto& inst : insts) {
    const FoulisSemigroup& s = inst.endo.sg;
    const std::uint64_t n = static_cast<std::uint64_t>(s.size());
    detail::add_law(rep, "axioms-endo-" + inst.name, check_foulis(s), n * n);
    detail::add_law(rep, "alternative-axioms-endo-" + inst.name, check_foulis_alt(s), n * n);
    detail::add_law(rep, "annihilator-endo-" + inst.name, check_annihilator_law(s), n * n);
  }

  {
    // The two axiomatizations agree on arbitrary tables, not just valid ones:
    // seeded single-entry corruptions of a valid instance get one verdict.
    LawResult& r = rep.add("axiomatizations-agree");
    r.coverage.seed = cfg.seed;
    Rng rng(cfg.seed);
    const FoulisSemigroup& good = insts[1].endo.sg;
    for (int trial = 0; trial < 40; ++trial) {
      FoulisSemigroup m = good;
      const int n = m.size();
      const int kind = static_cast<int>(rng.below(3));
      const int a = static_cast<int>(rng.below(n));
      const int b = static_cast<int>(rng.below(n));
      int fresh = static_cast<int>(rng.below(n - 1));
      if (kind == 0) {
        if (fresh >= m.mul[a][b]) ++fresh;
        m.mul[a][b] = fresh;
      } else if (kind == 1) {
        if (fresh >= m.inv[a]) ++fresh;
        m.inv[a] = fresh;
      } else {
        if (fresh >= m.focus[a]) ++fresh;
        m.focus[a] = fresh;
      }
      ++r.coverage.checked;
      if (check_foulis(m).ok() != check_foulis_alt(m).ok()) {
        r.pass = false;
        r.witness = "mutant " + std::to_string(trial) + " splits the axiomatizations";
        break;
      }
    }
  }

  {
    LawResult& r = rep.add("focus-is-kernel-effect");
    for (const auto& inst : insts) {
      for (int e = 0; e < inst.endo.sg.size() && r.pass; ++e) {
        ++r.coverage.checked;
        const GaloisMorphism& f = inst.endo.morphisms[e];
        GaloisMorphism eff = effect(inst.lattice, kernel(f).rep());
        if (inst.endo.sg.focus[e] != inst.endo.index_of(eff)) {
          r.pass = false;
          r.witness = inst.name + " element " + std::to_string(e);
        }
      }
    }
  }

  {
    LawResult& r = rep.add("unit-lattice-round-trip");
    for (const auto& inst : insts) {
      ++r.coverage.checked;
      KsLattice kl = oml_of_foulis(inst.endo.sg);
      if (!kl.report.ok() || !kl.lattice || !find_oml_iso(*kl.lattice, *inst.lattice)) {
        r.pass = false;
        r.witness = inst.name + ": focus lattice is not the original lattice";
        break;
      }
    }
  }

  {
    LawResult& ks = rep.add("ks-lattices");
    LawResult& local = rep.add("local-foulis");
    for (const auto& inst : insts) {
      const FoulisSemigroup& s = inst.endo.sg;
      for (int e = 0; e < s.size(); ++e) {
        if (s.mul[e][e] != e || s.inv[e] != e) continue;  // self-adjoint idempotents only
        ++ks.coverage.checked;
        KsLattice kl = k_s_lattice(s, e);
        if (ks.pass && (!kl.report.ok() || !kl.lattice)) {
          ks.pass = false;
          ks.witness = inst.name + " at idempotent " + std::to_string(e);
        }
        ++local.coverage.checked;
        ValidationReport lv = check_foulis(foulis_at(s, e));
        if (local.pass && !lv.ok()) {
          local.pass = false;
          local.witness = inst.name + " at idempotent " + std::to_string(e);
        }
      }
    }
  }

  // The envelope of self-adjoint idempotents as a dagger kernel category.
  FoulisEnvelope env = dagger_karoubi_of_foulis(insts[1].endo.sg);
  detail::merge_suite(rep, "envelope-", check_dagger_kernel_category(env.cat, cfg.caps()));

  {
    LawResult gen =
        check_generator(env.cat, env.object_of(insts[1].endo.sg.unit), cfg.caps().max_pairs,
                        cfg.seed);
    gen.name = "envelope-generator";
    rep.results.push_back(std::move(gen));
  }

  {
    LawResult& r = rep.add("ks-matches-envelope");
    for (std::size_t ob = 0; ob < env.cat.objects.size() && r.pass; ++ob) {
      ++r.coverage.checked;
      KsLattice kl = k_s_lattice(insts[1].endo.sg, env.obj_elem[ob]);
      KSubPoset p = ksub_poset(env.cat, static_cast<int>(ob));
      if (!kl.report.ok() || !p.report.ok() || !kl.lattice || !p.lattice ||
          !find_oml_iso(*kl.lattice, *p.lattice)) {
        r.pass = false;
        r.witness = "object " + env.cat.objects[ob];
      }
    }
  }

  {
    LawResult& r = rep.add("morphism-checker");
    const FoulisSemigroup& a = insts[0].endo.sg;
    const FoulisSemigroup& b = insts[1].endo.sg;
    std::vector<int> h(a.size(), -1);
    h[a.unit] = b.unit;
    h[a.zero()] = b.zero();
    ++r.coverage.checked;
    if (!check_foulis_morphism(a, b, h).ok()) {
      r.pass = false;
      r.witness = "unit-and-zero morphism rejected";
    }
    std::vector<int> bad(a.size(), b.unit);
    ++r.coverage.checked;
    if (r.pass && check_foulis_morphism(a, b, bad).ok()) {
      r.pass = false;
      r.witness = "constant-unit map accepted";
    }
    if (r.pass) {
      // The induced map between envelopes is a functor that preserves the
      // dagger, the zero object and kernels elementwise.
      FoulisEnvelope ea = dagger_karoubi_of_foulis(a);
      std::vector<int> obj_map(ea.cat.objects.size());
      for (std::size_t i = 0; i < ea.cat.objects.size(); ++i)
        obj_map[i] = env.object_of(h[ea.obj_elem[i]]);
      std::vector<int> arrow_map(ea.cat.arrows.size());
      for (std::size_t i = 0; i < ea.cat.arrows.size(); ++i)
        arrow_map[i] = env.index_of(obj_map[ea.cat.arrows[i].src],
                                    obj_map[ea.cat.arrows[i].dst], h[ea.arrow_elem[i]]);
      ValidationReport vf = check_functor(ea.cat, env.cat, obj_map, arrow_map);
      ++r.coverage.checked;
      if (!vf.ok()) {
        r.pass = false;
        r.witness = "induced envelope functor breaks functoriality";
      }
      for (std::size_t i = 0; i < ea.cat.arrows.size() && r.pass; ++i) {
        ++r.coverage.checked;
        if (arrow_map[ea.cat.dagger[i]] != env.cat.dagger[arrow_map[i]] ||
            arrow_map[ea.cat.kernel[i]] != env.cat.kernel[arrow_map[i]]) {
          r.pass = false;
          r.witness = "induced envelope functor misses a dagger or kernel";
        }
      }
      if (r.pass && obj_map[ea.cat.zero_object] != env.cat.zero_object) {
        r.pass = false;
        r.witness = "induced envelope functor misses the zero object";
      }
      if (r.pass) {
        // The induced map between focus lattices is a lattice homomorphism.
        KsLattice ka = oml_of_foulis(a);
        KsLattice kb = oml_of_foulis(b);
        std::vector<int> lmap(ka.carrier.size());
        for (std::size_t i = 0; i < ka.carrier.size(); ++i) {
          int img = h[ka.carrier[i]];
          int at = -1;
          for (std::size_t j = 0; j < kb.carrier.size(); ++j)
            if (kb.carrier[j] == img) at = static_cast<int>(j);
          lmap[i] = at;
        }
        ValidationReport hv = check_oml_hom(*ka.lattice, *kb.lattice, lmap);
        ++r.coverage.checked;
        if (!hv.ok()) {
          r.pass = false;
          r.witness = "induced focus-lattice map is not a homomorphism";
        }
      }
    }
  }

  return rep;
}

// ---------------------------------------------------------------------------
// Suite: the kernel-subobject functor into the category of Galois morphisms

inline RunReport laws_ksubfunctor(const SuiteConfig& cfg = {}) {
  RunReport rep;
  rep.command = "laws ksubfunctor";
  rep.corpus = "materialized Galois category, relations on sets of size 0..3, "
               "self-adjoint envelope of relations on size 0..2";

  struct Subject {
    std::string tag;
    FinCategory cat;
  };
  std::vector<Subject> subjects;
  {
    BuiltinCorpus corp = builtin_corpus();
    subjects.push_back({"gal", materialize_omlatgal(corp.names, corp.lattices, cfg.limits()).cat});
    subjects.push_back({"rel", materialize_rel(3).cat});
    subjects.push_back({"env", dagger_karoubi(materialize_rel(2).cat).cat});
  }

  for (const auto& sub : subjects) {
    const FinCategory& c = sub.cat;
    const int nobj = static_cast<int>(c.objects.size());
    const int narr = static_cast<int>(c.arrows.size());

    std::vector<KSubPoset> posets;
    {
      LawResult& r = rep.add(sub.tag + "-ksub-lattices");
      for (int x = 0; x < nobj; ++x) {
        ++r.coverage.checked;
        posets.push_back(ksub_poset(c, x));
        if (r.pass && (!posets.back().report.ok() || !posets.back().lattice)) {
          r.pass = false;
          r.witness = "object " + c.objects[x];
        }
      }
      if (!r.pass) continue;
    }

    std::vector<GaloisMorphism> lifted;
    lifted.reserve(narr);
    {
      LawResult& r = rep.add(sub.tag + "-ksub-morphisms");
      bool built = true;
      for (int a = 0; a < narr; ++a) {
        ++r.coverage.checked;
        ValidationReport v;
        auto g = ksub_morphism(c, posets[c.arrows[a].src], posets[c.arrows[a].dst], a, &v);
        if (!g) {
          r.pass = false;
          r.witness = detail::arrow_str(c, a) + ": " +
                      (v.structural.empty() ? v.violations.front().axiom : v.structural.front());
          built = false;
          break;
        }
        lifted.push_back(std::move(*g));
      }
      if (!built) continue;
    }

    {
      LawResult& r = rep.add(sub.tag + "-ksub-identity");
      for (int x = 0; x < nobj; ++x) {
        ++r.coverage.checked;
        if (lifted[c.identity[x]] != identity_morphism(posets[x].lattice)) {
          r.pass = false;
          r.witness = "object " + c.objects[x];
          break;
        }
      }
    }

    {
      LawResult& r = rep.add(sub.tag + "-ksub-composition");
      for (int f = 0; f < narr && r.pass; ++f)
        for (int g : c.out_arrows[c.arrows[f].dst]) {
          ++r.coverage.checked;
          if (lifted[c.compose(g, f)] != compose(lifted[g], lifted[f])) {
            r.pass = false;
            r.witness = detail::arrow_str(c, g) + " after " + detail::arrow_str(c, f);
            break;
          }
        }
    }

    {
      LawResult& r = rep.add(sub.tag + "-ksub-dagger");
      for (int f = 0; f < narr; ++f) {
        ++r.coverage.checked;
        if (lifted[c.dagger[f]] != dagger(lifted[f])) {
          r.pass = false;
          r.witness = detail::arrow_str(c, f);
          break;
        }
      }
    }

    {
      LawResult& r = rep.add(sub.tag + "-ksub-zero");
      ++r.coverage.checked;
      if (posets[c.zero_object].lattice->size() != 1) {
        r.pass = false;
        r.witness = "kernel poset of the zero object is not trivial";
      }
      for (int x = 0; x < nobj && r.pass; ++x)
        for (int y = 0; y < nobj && r.pass; ++y) {
          ++r.coverage.checked;
          if (!is_zero_morphism(lifted[*c.zero_arrow(x, y)])) {
            r.pass = false;
            r.witness = "lift of the zero arrow " + c.objects[x] + " -> " + c.objects[y];
          }
        }
    }

    {
      LawResult& tri = rep.add(sub.tag + "-ksub-kernel-triangles");
      LawResult& iso = rep.add(sub.tag + "-ksub-downset-iso");
      std::set<int> kernels;
      for (int f = 0; f < narr; ++f) kernels.insert(c.kernel[f]);
      for (int k : kernels) {
        const int kx = c.arrows[k].src, xx = c.arrows[k].dst;
        const KSubPoset& pk = posets[kx];
        const KSubPoset& px = posets[xx];
        ++iso.coverage.checked;
        ValidationReport vi = ksub_of_kernel_iso(c, k, pk, px);
        if (iso.pass && !vi.ok()) {
          iso.pass = false;
          iso.witness = detail::arrow_str(c, k) + ": " +
                        (vi.structural.empty() ? vi.violations.front().axiom
                                               : vi.structural.front());
        }
        const GaloisMorphism& kk = lifted[k];
        int kcls = ksub_class_of(c, px, k);
        const FiniteOML& lx = *px.lattice;
        for (std::size_t n = 0; n < pk.reps.size() && tri.pass; ++n) {
          ++tri.coverage.checked;
          int comp = c.compose(k, pk.reps[n]);
          int expect = lx.oc(ksub_class_of(c, px, comp));
          if (kk.lower(static_cast<int>(n)) != expect) {
            tri.pass = false;
            tri.witness = "direct leg of " + detail::arrow_str(c, k);
          }
        }
        for (int m = 0; m < lx.size() && tri.pass; ++m) {
          ++tri.coverage.checked;
          int back = c.compose(k, pk.reps[kk.upper(m)]);
          if (ksub_class_of(c, px, back) != lx.meet(kcls, lx.oc(m))) {
            tri.pass = false;
            tri.witness = "inverse leg of " + detail::arrow_str(c, k);
          }
        }
        if (!tri.pass && !iso.pass) break;
      }
    }
  }

  return rep;
}

// ---------------------------------------------------------------------------
// Rendering

inline std::string render_text(const RunReport& rep) {
  std::ostringstream out;
  out << "== " << rep.command << " ==\n";
  if (!rep.corpus.empty()) out << "corpus: " << rep.corpus << "\n";
  for (const auto& r : rep.results) {
    out << "law " << r.name << ": " << (r.pass ? "PASS" : "FAIL");
    if (r.coverage.exhaustive) {
      out << " (exhaustive";
      if (r.coverage.checked > 0) out << ", " << r.coverage.checked << " checks";
      out << ")";
    } else {
      out << " (sampled " << r.coverage.checked << " checks, seed " << r.coverage.seed << ")";
    }
    if (!r.pass && !r.witness.empty()) out << " witness: " << r.witness;
    out << "\n";
  }
  out << "summary: " << (rep.ok() ? "PASS" : "FAIL") << " (" << rep.results.size()
      << " laws)\n";
  return out.str();
}

inline std::string render_text(const std::string& title, const ValidationReport& rep) {
  std::ostringstream out;
  out << "== " << title << " ==\n";
  constexpr std::size_t kMaxLines = 12;
  std::size_t shown = 0;
  for (const auto& msg : rep.structural) {
    if (shown++ >= kMaxLines) break;
    out << "structural error: " << msg << "\n";
  }
  for (const auto& v : rep.violations) {
    if (shown++ >= kMaxLines) break;
    out << "axiom " << v.axiom << ": FAIL at " << v.witness << "\n";
  }
  const std::size_t total = rep.structural.size() + rep.violations.size();
  if (total > kMaxLines) out << "... (" << (total - kMaxLines) << " more)\n";
  out << "summary: " << (rep.ok() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace omlgal
