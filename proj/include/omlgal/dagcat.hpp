#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "omlgal/galois.hpp"
#include "omlgal/iso.hpp"
#include "omlgal/oml.hpp"
#include "omlgal/report.hpp"
#include "omlgal/rng.hpp"

namespace omlgal {

// A finite category presented by explicit tables: objects, arrows with
// source/target, identities, composition, and (optionally) dagger, zero
// object and a kernel assignment.  Composition is function-backed so large
// instances need not materialize a dense table.
struct FinCategory {
  struct Arrow {
    std::string id;
    int src = -1, dst = -1;
  };

  std::string name;
  std::vector<std::string> objects;
  std::vector<Arrow> arrows;
  std::vector<int> identity;  // object -> arrow
  int zero_object = -1;       // -1 when absent
  std::vector<int> dagger;    // arrow -> arrow; empty when absent
  std::vector<int> kernel;    // arrow -> arrow; empty when absent
  std::function<int(int, int)> compose_raw;  // (g, f) with dst(f) == src(g)

  // Derived indexes; call finalize() after filling arrows.
  std::vector<std::vector<std::vector<int>>> hom;  // [src][dst] -> arrows
  std::vector<std::vector<int>> out_arrows;        // [src] -> arrows
  std::vector<std::vector<int>> in_arrows;         // [dst] -> arrows

  void finalize() {
    const int n = static_cast<int>(objects.size());
    hom.assign(n, std::vector<std::vector<int>>(n));
    out_arrows.assign(n, {});
    in_arrows.assign(n, {});
    for (int a = 0; a < static_cast<int>(arrows.size()); ++a) {
      hom[arrows[a].src][arrows[a].dst].push_back(a);
      out_arrows[arrows[a].src].push_back(a);
      in_arrows[arrows[a].dst].push_back(a);
    }
  }

  int compose(int g, int f) const {
    if (arrows[f].dst != arrows[g].src) throw std::invalid_argument("compose: not composable");
    return compose_raw(g, f);
  }

  bool has_dagger() const { return !dagger.empty(); }
  bool has_kernels() const { return !kernel.empty(); }

  // The zero arrow X -> Y through the zero object (requires singleton homs
  // through it; conformance checks that separately).
  std::optional<int> zero_arrow(int x, int y) const {
    if (zero_object < 0) return std::nullopt;
    if (hom[x][zero_object].size() != 1 || hom[zero_object][y].size() != 1) return std::nullopt;
    return compose_raw(hom[zero_object][y][0], hom[x][zero_object][0]);
  }
};

// Caps for the conformance checker; when a law's instance space exceeds its
// cap the instances are drawn by deterministic seeded sampling and the law
// result is flagged as sampled.
struct CheckCaps {
  std::uint64_t max_pairs = 4000000;
  std::uint64_t max_triples = 2000000;
  std::uint64_t max_universal = 4000000;
  std::uint64_t seed = 0;
};

namespace detail {

inline std::string arrow_str(const FinCategory& c, int a) {
  return c.arrows[a].id + ": " + c.objects[c.arrows[a].src] + " -> " +
         c.objects[c.arrows[a].dst];
}

inline std::uint64_t composable_pairs(const FinCategory& c) {
  std::uint64_t total = 0;
  for (std::size_t x = 0; x < c.objects.size(); ++x)
    total += static_cast<std::uint64_t>(c.in_arrows[x].size()) * c.out_arrows[x].size();
  return total;
}

}  // namespace detail

// Plain category laws: well-typed tables, unit laws, associativity.
inline RunReport check_category_laws(const FinCategory& c, const CheckCaps& caps = {}) {
  RunReport rep;
  rep.command = "check category";
  rep.corpus = c.name + " (" + std::to_string(c.objects.size()) + " objects, " +
               std::to_string(c.arrows.size()) + " arrows)";
  const int nobj = static_cast<int>(c.objects.size());
  const int narr = static_cast<int>(c.arrows.size());

  {  // Structural table checks.
    auto& r = rep.add("structure");
    r.coverage.checked = static_cast<std::uint64_t>(narr);
    if (static_cast<int>(c.identity.size()) != nobj) {
      r.pass = false;
      r.witness = "identity table size mismatch";
    }
    for (int x = 0; x < nobj && r.pass; ++x) {
      int i = c.identity[x];
      if (i < 0 || i >= narr || c.arrows[i].src != x || c.arrows[i].dst != x) {
        r.pass = false;
        r.witness = "identity of " + c.objects[x] + " is not an endo-arrow";
      }
    }
    if (!r.pass) return rep;  // later laws would read bad tables
  }

  {  // Identity laws (also exercises compose typing on every arrow).
    auto& r = rep.add("identity-laws");
    r.coverage.checked = static_cast<std::uint64_t>(narr);
    for (int f = 0; f < narr && r.pass; ++f) {
      int l = c.compose(c.identity[c.arrows[f].dst], f);
      int rr = c.compose(f, c.identity[c.arrows[f].src]);
      if (l != f || rr != f) {
        r.pass = false;
        r.witness = detail::arrow_str(c, f);
      }
    }
  }

  {  // Associativity.
    auto& r = rep.add("associativity");
    std::uint64_t total_triples = 0;
    for (int f = 0; f < narr; ++f)
      for (int g : c.out_arrows[c.arrows[f].dst])
        total_triples += c.out_arrows[c.arrows[g].dst].size();
    if (total_triples <= caps.max_triples) {
      std::uint64_t n = 0;
      for (int f = 0; f < narr && r.pass; ++f)
        for (int g : c.out_arrows[c.arrows[f].dst]) {
          if (!r.pass) break;
          int gf = c.compose_raw(g, f);
          for (int h : c.out_arrows[c.arrows[g].dst]) {
            ++n;
            if (c.compose_raw(h, gf) != c.compose_raw(c.compose_raw(h, g), f)) {
              r.pass = false;
              r.witness = "h=" + c.arrows[h].id + " g=" + c.arrows[g].id + " f=" + c.arrows[f].id;
              break;
            }
          }
        }
      r.coverage.checked = n;
    } else {
      Rng rng(caps.seed);
      r.coverage.exhaustive = false;
      r.coverage.seed = caps.seed;
      for (std::uint64_t s = 0; s < caps.max_triples && r.pass; ++s) {
        int f = static_cast<int>(rng.below(narr));
        const auto& outs_g = c.out_arrows[c.arrows[f].dst];
        if (outs_g.empty()) continue;
        int g = outs_g[rng.below(outs_g.size())];
        const auto& outs_h = c.out_arrows[c.arrows[g].dst];
        if (outs_h.empty()) continue;
        int h = outs_h[rng.below(outs_h.size())];
        ++r.coverage.checked;
        if (c.compose_raw(h, c.compose_raw(g, f)) !=
            c.compose_raw(c.compose_raw(h, g), f)) {
          r.pass = false;
          r.witness = "h=" + c.arrows[h].id + " g=" + c.arrows[g].id + " f=" + c.arrows[f].id;
        }
      }
    }
  }

  return rep;
}

// Full dagger-kernel-category conformance: category laws, dagger laws, zero
// object, and the kernel axioms including the universal property of every
// kernel against every candidate (exhaustively when within caps).
inline RunReport check_dagger_kernel_category(const FinCategory& c, const CheckCaps& caps = {}) {
  RunReport rep = check_category_laws(c, caps);
  rep.command = "check dkc";
  if (!rep.ok()) return rep;
  const int nobj = static_cast<int>(c.objects.size());
  const int narr = static_cast<int>(c.arrows.size());

  {  // Presence and typing of the dagger structure.
    auto& r = rep.add("dagger-structure");
    r.coverage.checked = static_cast<std::uint64_t>(narr);
    if (!c.has_dagger()) {
      r.pass = false;
      r.witness = "no dagger table";
    } else if (!c.has_kernels()) {
      r.pass = false;
      r.witness = "no kernel table";
    } else if (c.zero_object < 0 || c.zero_object >= nobj) {
      r.pass = false;
      r.witness = "no zero object";
    }
    for (int a = 0; a < narr && r.pass; ++a) {
      int d = c.dagger[a];
      if (d < 0 || d >= narr || c.arrows[d].src != c.arrows[a].dst ||
          c.arrows[d].dst != c.arrows[a].src) {
        r.pass = false;
        r.witness = "dagger of " + detail::arrow_str(c, a) + " badly typed";
      }
      if (r.pass) {
        int k = c.kernel[a];
        if (k < 0 || k >= narr || c.arrows[k].dst != c.arrows[a].src) {
          r.pass = false;
          r.witness = "kernel of " + detail::arrow_str(c, a) + " badly typed";
        }
      }
    }
    if (!r.pass) return rep;
  }

  {  // Dagger: involution and identity-on-objects.
    auto& r = rep.add("dagger-involution");
    r.coverage.checked = static_cast<std::uint64_t>(narr);
    for (int f = 0; f < narr && r.pass; ++f)
      if (c.dagger[c.dagger[f]] != f) {
        r.pass = false;
        r.witness = detail::arrow_str(c, f);
      }
    for (int x = 0; x < nobj && r.pass; ++x)
      if (c.dagger[c.identity[x]] != c.identity[x]) {
        r.pass = false;
        r.witness = "dagger(id_" + c.objects[x] + ") != id";
      }
  }

  {  // Dagger contravariance over composable pairs.
    auto& r = rep.add("dagger-contravariance");
    const std::uint64_t total_pairs = detail::composable_pairs(c);
    if (total_pairs <= caps.max_pairs) {
      std::uint64_t n = 0;
      for (int f = 0; f < narr && r.pass; ++f)
        for (int g : c.out_arrows[c.arrows[f].dst]) {
          ++n;
          if (c.dagger[c.compose_raw(g, f)] != c.compose_raw(c.dagger[f], c.dagger[g])) {
            r.pass = false;
            r.witness = "g=" + c.arrows[g].id + " f=" + c.arrows[f].id;
            break;
          }
        }
      r.coverage.checked = n;
    } else {
      Rng rng(caps.seed + 1);
      r.coverage.exhaustive = false;
      r.coverage.seed = caps.seed;
      for (std::uint64_t s = 0; s < caps.max_pairs && r.pass; ++s) {
        int f = static_cast<int>(rng.below(narr));
        const auto& outs = c.out_arrows[c.arrows[f].dst];
        if (outs.empty()) continue;
        int g = outs[rng.below(outs.size())];
        ++r.coverage.checked;
        if (c.dagger[c.compose_raw(g, f)] != c.compose_raw(c.dagger[f], c.dagger[g])) {
          r.pass = false;
          r.witness = "g=" + c.arrows[g].id + " f=" + c.arrows[f].id;
        }
      }
    }
  }

  {  // Zero object: exactly one arrow in and out of it, per object.
    auto& r = rep.add("zero-object");
    r.coverage.checked = static_cast<std::uint64_t>(nobj);
    for (int x = 0; x < nobj && r.pass; ++x) {
      if (c.hom[x][c.zero_object].size() != 1 || c.hom[c.zero_object][x].size() != 1) {
        r.pass = false;
        r.witness = "hom through zero not a singleton at " + c.objects[x];
      }
    }
    if (!r.pass) return rep;  // kernel laws need zero arrows
  }

  {  // Kernels are dagger monos:  dagger(k) o k = id.
    auto& r = rep.add("kernel-dagger-mono");
    r.coverage.checked = static_cast<std::uint64_t>(narr);
    for (int f = 0; f < narr && r.pass; ++f) {
      int k = c.kernel[f];
      if (c.compose_raw(c.dagger[k], k) != c.identity[c.arrows[k].src]) {
        r.pass = false;
        r.witness = "kernel of " + detail::arrow_str(c, f);
      }
    }
  }

  {  // f o ker(f) = 0.
    auto& r = rep.add("kernel-zero-composite");
    r.coverage.checked = static_cast<std::uint64_t>(narr);
    for (int f = 0; f < narr && r.pass; ++f) {
      int k = c.kernel[f];
      auto z = c.zero_arrow(c.arrows[k].src, c.arrows[f].dst);
      if (!z || c.compose_raw(f, k) != *z) {
        r.pass = false;
        r.witness = detail::arrow_str(c, f);
      }
    }
  }

  {  // Universal property: every g with f o g = 0 factors uniquely through ker(f).
     // For a fixed (f, Z) all mediating candidates h in hom(Z, K) are bucketed
     // by their composite k o h, so existence and uniqueness are lookups.
    auto& r = rep.add("kernel-universal");
    std::uint64_t estimated = 0;
    for (int f = 0; f < narr; ++f) {
      int k = c.kernel[f];
      for (int z = 0; z < nobj; ++z)
        estimated += c.hom[z][c.arrows[k].src].size() + c.hom[z][c.arrows[f].src].size();
    }
    auto process = [&](int f, int z) -> bool {
      int k = c.kernel[f];
      int kobj = c.arrows[k].src;
      int x = c.arrows[f].src;
      int y = c.arrows[f].dst;
      std::map<int, int> buckets;  // composite k o h -> multiplicity
      for (int h : c.hom[z][kobj]) {
        ++r.coverage.checked;
        ++buckets[c.compose_raw(k, h)];
      }
      auto zxy = c.zero_arrow(z, y);
      for (int g : c.hom[z][x]) {
        ++r.coverage.checked;
        if (c.compose_raw(f, g) != *zxy) continue;
        auto it = buckets.find(g);
        int count = it == buckets.end() ? 0 : it->second;
        if (count != 1) {
          r.pass = false;
          r.witness = std::string(count == 0 ? "no" : "non-unique") + " mediating arrow for g=" +
                      c.arrows[g].id + " against " + detail::arrow_str(c, f);
          return false;
        }
      }
      return true;
    };
    if (estimated <= caps.max_universal) {
      for (int f = 0; f < narr && r.pass; ++f)
        for (int z = 0; z < nobj && r.pass; ++z) process(f, z);
    } else {
      Rng rng(caps.seed + 2);
      r.coverage.exhaustive = false;
      r.coverage.seed = caps.seed;
      std::set<std::pair<int, int>> done;
      while (r.coverage.checked < caps.max_universal && r.pass &&
             done.size() < static_cast<std::size_t>(narr) * nobj) {
        int f = static_cast<int>(rng.below(narr));
        int z = static_cast<int>(rng.below(nobj));
        if (!done.insert({f, z}).second) continue;
        process(f, z);
      }
    }
  }

  return rep;
}

// Generator check: arrows out of `gen` jointly distinguish parallel arrows.
inline LawResult check_generator(const FinCategory& c, int gen,
                                 std::uint64_t max_pairs = 4000000, std::uint64_t seed = 0) {
  LawResult r{"generator " + c.objects[gen], true, {}, {}};
  const int nobj = static_cast<int>(c.objects.size());
  std::uint64_t total = 0;
  for (int x = 0; x < nobj; ++x)
    for (int y = 0; y < nobj; ++y)
      total += static_cast<std::uint64_t>(c.hom[x][y].size()) * c.hom[x][y].size();

  auto distinct_pair_ok = [&](int f, int g) {
    int x = c.arrows[f].src;
    for (int p : c.hom[gen][x])
      if (c.compose_raw(f, p) != c.compose_raw(g, p)) return true;
    return false;
  };

  if (total <= max_pairs) {
    for (int x = 0; x < nobj && r.pass; ++x)
      for (int y = 0; y < nobj && r.pass; ++y)
        for (int f : c.hom[x][y]) {
          for (int g : c.hom[x][y]) {
            if (f >= g) continue;
            ++r.coverage.checked;
            if (!distinct_pair_ok(f, g)) {
              r.pass = false;
              r.witness = c.arrows[f].id + " and " + c.arrows[g].id +
                          " agree on all arrows from " + c.objects[gen];
              break;
            }
          }
          if (!r.pass) break;
        }
  } else {
    Rng rng(seed + 3);
    r.coverage.exhaustive = false;
    r.coverage.seed = seed;
    const int narr = static_cast<int>(c.arrows.size());
    for (std::uint64_t s = 0; s < max_pairs && r.pass; ++s) {
      int f = static_cast<int>(rng.below(narr));
      const auto& par = c.hom[c.arrows[f].src][c.arrows[f].dst];
      int g = par[rng.below(par.size())];
      if (f == g) continue;
      ++r.coverage.checked;
      if (!distinct_pair_ok(f, g)) {
        r.pass = false;
        r.witness = c.arrows[f].id + " and " + c.arrows[g].id;
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Kernel subobjects of one object, with the factoring order, quotiented by
// mutual factoring.  Representatives are the lowest-index kernel arrows.

struct KSubPoset {
  int obj = -1;
  std::vector<int> reps;               // class -> canonical kernel arrow
  std::vector<std::vector<char>> leq;  // factoring order on classes
  std::vector<int> oc;                 // class -> class of ker(dagger(rep))
  OmlPtr lattice;                      // the poset as a validated OML
  ValidationReport report;             // violations found while building
};

namespace detail {

// Does arrow m factor through arrow n (both into the same object)?
inline bool factors_through(const FinCategory& c, int m, int n) {
  for (int phi : c.hom[c.arrows[m].src][c.arrows[n].src])
    if (c.compose_raw(n, phi) == m) return true;
  return false;
}

}  // namespace detail

inline KSubPoset ksub_poset(const FinCategory& c, int obj) {
  KSubPoset p;
  p.obj = obj;

  // Harvest kernels of all arrows out of obj.
  std::set<int> karrows;
  for (int f : c.out_arrows[obj]) karrows.insert(c.kernel[f]);

  // Group by mutual factoring; keep the lowest arrow index as rep.
  std::vector<int> all(karrows.begin(), karrows.end());
  std::vector<int> cls(all.size(), -1);
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (cls[i] != -1) continue;
    cls[i] = static_cast<int>(p.reps.size());
    p.reps.push_back(all[i]);
    for (std::size_t j = i + 1; j < all.size(); ++j)
      if (cls[j] == -1 && detail::factors_through(c, all[i], all[j]) &&
          detail::factors_through(c, all[j], all[i]))
        cls[j] = cls[i];
  }

  const int n = static_cast<int>(p.reps.size());
  p.leq.assign(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      p.leq[i][j] = detail::factors_through(c, p.reps[i], p.reps[j]) ? 1 : 0;

  auto class_of = [&](int arrow) -> int {
    for (int i = 0; i < n; ++i)
      if (detail::factors_through(c, arrow, p.reps[i]) &&
          detail::factors_through(c, p.reps[i], arrow))
        return i;
    return -1;
  };

  p.oc.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    p.oc[i] = class_of(c.kernel[c.dagger[p.reps[i]]]);
    if (p.oc[i] < 0)
      p.report.violation("ksub-oc-closure",
                         "ker(dagger(" + c.arrows[p.reps[i]].id + ")) is not a kernel class");
  }
  if (!p.report.ok()) return p;

  RawOML raw;
  for (int i = 0; i < n; ++i) raw.elements.push_back(c.arrows[p.reps[i]].id);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (p.leq[i][j]) raw.leq.emplace_back(raw.elements[i], raw.elements[j]);
  for (int i = 0; i < n; ++i) raw.oc.emplace_back(raw.elements[i], raw.elements[p.oc[i]]);
  p.lattice = build_oml(raw, &p.report);
  return p;
}

// Class of an arbitrary kernel arrow in a built poset.
inline int ksub_class_of(const FinCategory& c, const KSubPoset& p, int arrow) {
  for (int i = 0; i < static_cast<int>(p.reps.size()); ++i)
    if (detail::factors_through(c, arrow, p.reps[i]) &&
        detail::factors_through(c, p.reps[i], arrow))
      return i;
  return -1;
}

// Abstract pullback of kernel n along f:  ker(coker(n) o f), as a kernel
// arrow into src(f).  coker(n) = dagger(ker(dagger(n))).
inline int abstract_pullback_arrow(const FinCategory& c, int f, int n) {
  int coker_n = c.dagger[c.kernel[c.dagger[n]]];
  return c.kernel[c.compose(coker_n, f)];
}

// Abstract direct image of kernel m under f:  ker(coker(f o m)).
inline int abstract_image_arrow(const FinCategory& c, int f, int m) {
  int fm = c.compose(f, m);
  int coker_fm = c.dagger[c.kernel[c.dagger[fm]]];
  return c.kernel[coker_fm];
}

// The induced map on kernel-subobject lattices, as a Galois morphism:
//   lower(m) = oc(exists_f(m)),   upper(n) = f^{-1}(oc(n)).
// Built from the abstract operations and validated by the adjunction.
inline std::optional<GaloisMorphism> ksub_morphism(const FinCategory& c, const KSubPoset& px,
                                                   const KSubPoset& py, int f,
                                                   ValidationReport* report = nullptr) {
  std::vector<int> lower(px.reps.size());
  for (std::size_t i = 0; i < px.reps.size(); ++i) {
    int img = abstract_image_arrow(c, f, px.reps[i]);
    int cls = ksub_class_of(c, py, img);
    if (cls < 0) {
      if (report) report->violation("ksub-image-closure", c.arrows[px.reps[i]].id);
      return std::nullopt;
    }
    lower[i] = py.oc[cls];
  }
  auto m = GaloisMorphism::make(px.lattice, py.lattice, std::move(lower), report);
  if (!m) return std::nullopt;
  // The derived upper must match the abstract inverse image formula.
  for (std::size_t j = 0; j < py.reps.size(); ++j) {
    int pre = abstract_pullback_arrow(c, f, py.reps[py.oc[j]]);
    int cls = ksub_class_of(c, px, pre);
    if (cls != m->upper(static_cast<int>(j))) {
      if (report)
        report->violation("ksub-upper-formula",
                          "class " + c.arrows[py.reps[j]].id + " of " + detail::arrow_str(c, f));
      return std::nullopt;
    }
  }
  return m;
}

// The order isomorphism  KSub(K) = downset of [k] in KSub(X)  for a kernel
// k : K -> X, given by m |-> k o m with inverse n |-> dagger(k) o n.
inline ValidationReport ksub_of_kernel_iso(const FinCategory& c, int k, const KSubPoset& pk,
                                           const KSubPoset& px) {
  ValidationReport rep;
  const int kcls = ksub_class_of(c, px, k);
  if (kcls < 0) {
    rep.violation("ksub-kernel-class", "kernel arrow not classified");
    return rep;
  }
  std::vector<int> fwd(pk.reps.size(), -1);
  for (std::size_t i = 0; i < pk.reps.size(); ++i) {
    int img = c.compose(k, pk.reps[i]);
    fwd[i] = ksub_class_of(c, px, img);
    if (fwd[i] < 0 || !px.leq[fwd[i]][kcls]) {
      rep.violation("ksub-kernel-iso", "k o " + c.arrows[pk.reps[i]].id +
                                           " is not a kernel class below [k]");
      return rep;
    }
  }
  // Inverse on every class below [k].
  for (std::size_t j = 0; j < px.reps.size(); ++j) {
    if (!px.leq[j][kcls]) continue;
    int back = ksub_class_of(c, pk, c.compose(c.dagger[k], px.reps[j]));
    if (back < 0 || fwd[back] != static_cast<int>(j)) {
      rep.violation("ksub-kernel-iso", "dagger(k) o " + c.arrows[px.reps[j]].id +
                                           " does not invert the forward map");
      return rep;
    }
  }
  // Forward is injective and order-preserving both ways.
  for (std::size_t i = 0; i < pk.reps.size(); ++i)
    for (std::size_t j = 0; j < pk.reps.size(); ++j) {
      if ((pk.leq[i][j] != 0) != (px.leq[fwd[i]][fwd[j]] != 0))
        rep.violation("ksub-kernel-iso-order",
                      c.arrows[pk.reps[i]].id + " vs " + c.arrows[pk.reps[j]].id);
      if (i != j && fwd[i] == fwd[j])
        rep.violation("ksub-kernel-iso-injective",
                      c.arrows[pk.reps[i]].id + " vs " + c.arrows[pk.reps[j]].id);
    }
  return rep;
}

// ---------------------------------------------------------------------------
// Materialization of the category of orthomodular lattices and Galois
// connections on a finite corpus of objects.  Kernels are transported onto
// corpus objects along canonical lattice isomorphisms, so the corpus must be
// closed under downsets up to isomorphism and contain a one-element lattice.

struct MaterializedOmlatgal {
  FinCategory cat;
  std::vector<OmlPtr> lattices;
  std::vector<GaloisMorphism> morphisms;  // parallel to cat.arrows
  std::map<std::tuple<int, int, std::vector<int>>, int> arrow_index;

  int index_of(int src, int dst, const GaloisMorphism& m) const {
    auto it = arrow_index.find({src, dst, m.lower_table()});
    if (it == arrow_index.end()) throw std::logic_error("morphism not in materialized category");
    return it->second;
  }
};

inline MaterializedOmlatgal materialize_omlatgal(const std::vector<std::string>& names,
                                                 const std::vector<OmlPtr>& lattices,
                                                 EnumLimits lim = {}) {
  lim.allow_sampling = false;  // a partial category would be meaningless
  MaterializedOmlatgal m;
  m.lattices = lattices;
  m.cat.name = "omlatgal";
  m.cat.objects = names;
  const int n = static_cast<int>(lattices.size());

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      HomSet hs = enumerate_hom(lattices[i], lattices[j], lim);
      for (auto& f : hs.morphisms) {
        int idx = static_cast<int>(m.cat.arrows.size());
        m.cat.arrows.push_back({"f" + std::to_string(idx), i, j});
        m.arrow_index[{i, j, f.lower_table()}] = idx;
        m.morphisms.push_back(std::move(f));
      }
    }
  m.cat.finalize();

  m.cat.identity.resize(n);
  for (int i = 0; i < n; ++i)
    m.cat.identity[i] = m.index_of(i, i, identity_morphism(lattices[i]));

  m.cat.zero_object = -1;
  for (int i = 0; i < n; ++i)
    if (lattices[i]->size() == 1) {
      m.cat.zero_object = i;
      break;
    }
  if (m.cat.zero_object < 0) throw std::invalid_argument("corpus has no one-element lattice");

  const int narr = static_cast<int>(m.cat.arrows.size());
  m.cat.dagger.resize(narr);
  for (int a = 0; a < narr; ++a)
    m.cat.dagger[a] =
        m.index_of(m.cat.arrows[a].dst, m.cat.arrows[a].src, dagger(m.morphisms[a]));

  // Kernels: the downset embedding, transported along the lexicographically
  // least isomorphism from the first matching corpus object.
  m.cat.kernel.resize(narr);
  for (int a = 0; a < narr; ++a) {
    const auto& f = m.morphisms[a];
    const int srcobj = m.cat.arrows[a].src;
    KernelSubobject ks = kernel(f);
    int kobj = -1;
    for (int i = 0; i < n && kobj < 0; ++i) {
      auto iso = find_oml_iso(*lattices[i], *ks.down.lattice);
      if (!iso) continue;
      kobj = i;
      const auto& dl = ks.down.lattice;
      std::vector<int> lower(lattices[i]->size()), upper(dl->size());
      for (int cidx = 0; cidx < lattices[i]->size(); ++cidx)
        lower[cidx] = dl->oc((*iso)[cidx]);
      std::vector<int> inv(dl->size());
      for (int cidx = 0; cidx < dl->size(); ++cidx) inv[(*iso)[cidx]] = cidx;
      for (int u = 0; u < dl->size(); ++u) upper[u] = inv[dl->oc(u)];
      GaloisMorphism psi =
          GaloisMorphism::trusted(lattices[i], dl, std::move(lower), std::move(upper));
      m.cat.kernel[a] = m.index_of(kobj, srcobj, compose(ks.embed, psi));
    }
    if (kobj < 0) throw std::invalid_argument("corpus not closed under downsets: kernel of " +
                                              m.cat.arrows[a].id);
  }

  // Dense composition table.
  auto table = std::make_shared<std::vector<std::vector<int>>>(
      narr, std::vector<int>(narr, -1));
  for (int f = 0; f < narr; ++f)
    for (int g : m.cat.out_arrows[m.cat.arrows[f].dst]) {
      GaloisMorphism gf = compose(m.morphisms[g], m.morphisms[f]);
      (*table)[g][f] = m.index_of(m.cat.arrows[f].src, m.cat.arrows[g].dst, gf);
    }
  m.cat.compose_raw = [table](int g, int f) { return (*table)[g][f]; };
  return m;
}

}  // namespace omlgal
