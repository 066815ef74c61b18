#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "omlgal/oml.hpp"
#include "omlgal/report.hpp"
#include "omlgal/rng.hpp"

namespace omlgal {

// Limits for hom-set enumeration.
struct EnumLimits {
  std::size_t hom_cap = 20000;                // max morphisms kept
  std::uint64_t candidate_budget = 8000000;   // max tables examined exhaustively
  std::uint64_t sample_candidates = 200000;   // tables examined when sampling
  std::uint64_t seed = 0;
  bool allow_sampling = true;  // when false, exceeding a budget throws CapExceeded
};

// An antitone Galois connection between orthomodular lattices, stored as the
// lower table plus the derived upper adjoint:
//     x <= upper(y)   iff   y <= lower(x).
// The lower leg determines the upper one, so morphism equality is equality
// of source, target and lower table.
class GaloisMorphism {
 public:
  const OmlPtr& src() const { return src_; }
  const OmlPtr& dst() const { return dst_; }
  int lower(int x) const { return lower_[x]; }
  int upper(int y) const { return upper_[y]; }
  const std::vector<int>& lower_table() const { return lower_; }
  const std::vector<int>& upper_table() const { return upper_; }

  // Validating constructor: derives upper(y) = join{ x | y <= lower(x) } and
  // verifies the adjunction on every pair.
  static std::optional<GaloisMorphism> make(OmlPtr src, OmlPtr dst, std::vector<int> lower,
                                            ValidationReport* report = nullptr) {
    ValidationReport rep;
    if (!src || !dst) {
      rep.structural_error("null lattice");
    } else if (lower.size() != static_cast<std::size_t>(src->size())) {
      rep.structural_error("lower table size != source size");
    } else {
      for (int v : lower)
        if (v < 0 || v >= dst->size()) {
          rep.structural_error("lower table value out of range");
          break;
        }
    }
    if (!rep.structural.empty()) {
      if (report) *report = rep;
      return std::nullopt;
    }
    std::vector<int> upper(dst->size());
    for (int y = 0; y < dst->size(); ++y) {
      int u = src->bottom();
      for (int x = 0; x < src->size(); ++x)
        if (dst->leq(y, lower[x])) u = src->join(u, x);
      upper[y] = u;
    }
    for (int x = 0; x < src->size(); ++x)
      for (int y = 0; y < dst->size(); ++y)
        if (src->leq(x, upper[y]) != dst->leq(y, lower[x])) {
          rep.violation("galois-adjunction", "x=" + src->id(x) + ", y=" + dst->id(y));
          if (report) *report = rep;
          return std::nullopt;
        }
    if (report) *report = rep;
    return GaloisMorphism(std::move(src), std::move(dst), std::move(lower), std::move(upper));
  }

  // Internal constructor for tables already known to satisfy the adjunction
  // (identities, daggers, composites of validated morphisms).
  static GaloisMorphism trusted(OmlPtr src, OmlPtr dst, std::vector<int> lower,
                                std::vector<int> upper) {
    return GaloisMorphism(std::move(src), std::move(dst), std::move(lower), std::move(upper));
  }

  bool operator==(const GaloisMorphism& o) const {
    return same_lattice(*src_, *o.src_) && same_lattice(*dst_, *o.dst_) && lower_ == o.lower_;
  }
  bool operator!=(const GaloisMorphism& o) const { return !(*this == o); }

 private:
  GaloisMorphism(OmlPtr src, OmlPtr dst, std::vector<int> lower, std::vector<int> upper)
      : src_(std::move(src)), dst_(std::move(dst)), lower_(std::move(lower)),
        upper_(std::move(upper)) {}

  OmlPtr src_, dst_;
  std::vector<int> lower_, upper_;
};

// Identity: both legs are the orthocomplement.
inline GaloisMorphism identity_morphism(const OmlPtr& x) {
  std::vector<int> oc(x->size());
  for (int i = 0; i < x->size(); ++i) oc[i] = x->oc(i);
  std::vector<int> upper = oc;
  return GaloisMorphism::trusted(x, x, std::move(oc), std::move(upper));
}

// Zero morphism: both legs constantly top.
inline GaloisMorphism zero_morphism(const OmlPtr& x, const OmlPtr& y) {
  return GaloisMorphism::trusted(x, y, std::vector<int>(x->size(), y->top()),
                                 std::vector<int>(y->size(), x->top()));
}

// Composition: (g o f)_* = g_* o oc o f_*,  (g o f)^* = f^* o oc o g^*.
inline GaloisMorphism compose(const GaloisMorphism& g, const GaloisMorphism& f) {
  if (!same_lattice(*f.dst(), *g.src())) throw std::invalid_argument("compose: type mismatch");
  const FiniteOML& mid = *g.src();
  std::vector<int> lower(f.src()->size()), upper(g.dst()->size());
  for (int x = 0; x < f.src()->size(); ++x) lower[x] = g.lower(mid.oc(f.lower(x)));
  for (int y = 0; y < g.dst()->size(); ++y) upper[y] = f.upper(mid.oc(g.upper(y)));
  return GaloisMorphism::trusted(f.src(), g.dst(), std::move(lower), std::move(upper));
}

// Dagger: swap the two legs (and source with target).
inline GaloisMorphism dagger(const GaloisMorphism& f) {
  return GaloisMorphism::trusted(f.dst(), f.src(), f.upper_table(), f.lower_table());
}

inline bool is_zero_morphism(const GaloisMorphism& f) {
  for (int x = 0; x < f.src()->size(); ++x)
    if (f.lower(x) != f.dst()->top()) return false;
  return true;
}

// f is a dagger mono iff f^*(oc(f_*(x))) = oc(x) for every x.
inline bool is_dagger_mono(const GaloisMorphism& f) {
  const FiniteOML& x = *f.src();
  const FiniteOML& y = *f.dst();
  for (int a = 0; a < x.size(); ++a)
    if (f.upper(y.oc(f.lower(a))) != x.oc(a)) return false;
  return true;
}

// Zero-epi iff f_*(1) = 0; zero-mono iff f^*(1) = 0.
inline bool is_zero_epi(const GaloisMorphism& f) {
  return f.lower(f.src()->top()) == f.dst()->bottom();
}
inline bool is_zero_mono(const GaloisMorphism& f) {
  return f.upper(f.dst()->top()) == f.src()->bottom();
}

// A kernel-style subobject: the downset of an element with its canonical
// dagger-monic embedding  lower(u) = oc(u),  upper(x) = a ^ oc(x).
struct KernelSubobject {
  Downset down;
  GaloisMorphism embed;  // down.lattice -> ambient
  int rep() const { return down.rep; }
};

inline KernelSubobject embed_downset(const OmlPtr& amb, int a) {
  Downset d = downset_oml(amb, a);
  std::vector<int> lower(d.to_ambient.size()), upper(amb->size());
  for (std::size_t u = 0; u < d.to_ambient.size(); ++u)
    lower[u] = amb->oc(d.to_ambient[u]);
  for (int x = 0; x < amb->size(); ++x)
    upper[x] = d.from_ambient[amb->meet(a, amb->oc(x))];
  auto embed = GaloisMorphism::trusted(d.lattice, amb, std::move(lower), std::move(upper));
  return KernelSubobject{std::move(d), std::move(embed)};
}

// Kernel: the downset of f^*(1) with its embedding.
inline KernelSubobject kernel(const GaloisMorphism& f) {
  return embed_downset(f.src(), f.upper(f.dst()->top()));
}

// Cokernel: the projection Y -> downset(f_*(1)), equal to dagger(ker(dagger f)).
struct Cokernel {
  Downset down;
  GaloisMorphism proj;  // ambient -> down.lattice
};

inline Cokernel cokernel(const GaloisMorphism& f) {
  KernelSubobject k = embed_downset(f.dst(), f.lower(f.src()->top()));
  GaloisMorphism proj = dagger(k.embed);
  return Cokernel{std::move(k.down), std::move(proj)};
}

// Effect of an element: the self-adjoint idempotent embed o dagger(embed),
// with lower table x |-> oc(a) v (a ^ oc(x)).
inline GaloisMorphism effect(const OmlPtr& x, int a) {
  KernelSubobject k = embed_downset(x, a);
  return compose(k.embed, dagger(k.embed));
}

// Weakest precondition [f](y) = f^*(oc(y)).
inline int wp(const GaloisMorphism& f, int y) { return f.upper(f.dst()->oc(y)); }

// Kernel-image factorization  f = i o m o co  with e = m o co:
//   image      = downset(oc(f_*(1)))   (dagger mono i)
//   e : X -> image,      e_*(x) = f_*(x) ^ oc(f_*(1)),   e^* = f^* restricted
//   m : coim -> image,   zero-monic and zero-epic mediator
//   co = dagger of the embedding of downset(oc(f^*(1)))  (the coimage)
struct Factorization {
  KernelSubobject image;    // into dst
  KernelSubobject coimage;  // into src (its dagger is the epi part)
  GaloisMorphism e;         // src -> image.lattice
  GaloisMorphism m;         // coimage.lattice -> image.lattice
  GaloisMorphism co;        // src -> coimage.lattice
};

inline Factorization factorize(const GaloisMorphism& f) {
  const OmlPtr& X = f.src();
  const OmlPtr& Y = f.dst();
  const int b = Y->oc(f.lower(X->top()));   // image rep
  const int a = X->oc(f.upper(Y->top()));   // coimage rep
  KernelSubobject image = embed_downset(Y, b);
  KernelSubobject coim = embed_downset(X, a);

  std::vector<int> e_lower(X->size()), e_upper(image.down.to_ambient.size());
  for (int x = 0; x < X->size(); ++x)
    e_lower[x] = image.down.from_ambient[Y->meet(f.lower(x), b)];
  for (std::size_t v = 0; v < image.down.to_ambient.size(); ++v)
    e_upper[v] = f.upper(image.down.to_ambient[v]);
  GaloisMorphism e =
      GaloisMorphism::trusted(X, image.down.lattice, std::move(e_lower), std::move(e_upper));

  std::vector<int> m_lower(coim.down.to_ambient.size()), m_upper(image.down.to_ambient.size());
  for (std::size_t u = 0; u < coim.down.to_ambient.size(); ++u)
    m_lower[u] = image.down.from_ambient[Y->meet(f.lower(coim.down.to_ambient[u]), b)];
  for (std::size_t v = 0; v < image.down.to_ambient.size(); ++v)
    m_upper[v] = coim.down.from_ambient[X->meet(f.upper(image.down.to_ambient[v]), a)];
  GaloisMorphism m = GaloisMorphism::trusted(coim.down.lattice, image.down.lattice,
                                             std::move(m_lower), std::move(m_upper));
  GaloisMorphism co = dagger(coim.embed);
  return Factorization{std::move(image), std::move(coim), std::move(e), std::move(m),
                       std::move(co)};
}

// Direct and inverse images of downset subobjects, by the closed formulas.
inline int direct_image_rep(const GaloisMorphism& f, int a) {
  return f.dst()->oc(f.lower(a));
}
inline int inverse_image_rep(const GaloisMorphism& f, int b) {
  return f.upper(f.dst()->oc(b));
}

// The same images computed abstractly, using only kernels, daggers and
// composition:  exists_f(m) = ker(coker(f o m)),  f^{-1}(n) = ker(coker(n) o f).
inline int abstract_direct_image_rep(const GaloisMorphism& f, int a) {
  GaloisMorphism fm = compose(f, embed_downset(f.src(), a).embed);
  Cokernel c = cokernel(fm);
  return kernel(c.proj).rep();
}
inline int abstract_inverse_image_rep(const GaloisMorphism& f, int b) {
  Cokernel c = cokernel(embed_downset(f.dst(), b).embed);
  GaloisMorphism cf = compose(c.proj, f);
  // The kernel of c.proj o f lives in src(f); its rep is what we want.
  return kernel(cf).rep();
}

// The two-element lattice used as the opclassifier domain.
inline const OmlPtr& two_lattice() {
  static const OmlPtr two = mo_lattice(0);
  return two;
}

// classify(a): the morphism 2 -> X with lower (1, oc(a)); unclassify
// recovers a = oc(g_*(1)).  Its dagger has kernel downset(oc(a)).
inline GaloisMorphism classify(const OmlPtr& x, int a) {
  const OmlPtr& two = two_lattice();
  const int zero_i = two->bottom(), one_i = two->top();
  std::vector<int> lower(2), upper(x->size());
  lower[zero_i] = x->top();
  lower[one_i] = x->oc(a);
  for (int v = 0; v < x->size(); ++v) upper[v] = x->leq(v, x->oc(a)) ? one_i : zero_i;
  return GaloisMorphism::trusted(two, x, std::move(lower), std::move(upper));
}

inline int unclassify(const GaloisMorphism& g) {
  return g.dst()->oc(g.lower(g.src()->top()));
}

// Biproduct: componentwise order and orthocomplement on the product carrier.
struct Biproduct {
  OmlPtr lattice;
  OmlPtr left, right;
  std::vector<std::pair<int, int>> coords;  // product index -> component pair
  std::vector<std::vector<int>> at;         // [x1][x2] -> product index
  GaloisMorphism kappa1, kappa2;            // coprojections
};

inline Biproduct biproduct(const OmlPtr& x1, const OmlPtr& x2,
                           int max_size = kDefaultMaxLattice) {
  if (x1->size() * x2->size() > max_size) throw CapExceeded("biproduct exceeds size cap");
  RawOML raw;
  std::vector<std::pair<int, int>> coords;
  std::vector<std::vector<int>> at(x1->size(), std::vector<int>(x2->size(), -1));
  auto pid = [&](int a, int b) { return "(" + x1->id(a) + "," + x2->id(b) + ")"; };
  for (int a = 0; a < x1->size(); ++a)
    for (int b = 0; b < x2->size(); ++b) {
      at[a][b] = static_cast<int>(coords.size());
      coords.emplace_back(a, b);
      raw.elements.push_back(pid(a, b));
    }
  for (const auto& [a, b] : coords)
    for (const auto& [c, d] : coords)
      if (x1->leq(a, c) && x2->leq(b, d)) raw.leq.emplace_back(pid(a, b), pid(c, d));
  for (const auto& [a, b] : coords)
    raw.oc.emplace_back(pid(a, b), pid(x1->oc(a), x2->oc(b)));
  ValidationReport rep;
  OmlPtr lat = build_oml(raw, &rep);
  if (!lat) throw std::logic_error("biproduct of valid lattices failed validation");

  std::vector<int> k1_lower(x1->size()), k1_upper(lat->size());
  for (int a = 0; a < x1->size(); ++a) k1_lower[a] = at[x1->oc(a)][x2->top()];
  for (int p = 0; p < lat->size(); ++p) k1_upper[p] = x1->oc(coords[p].first);
  GaloisMorphism kappa1 =
      GaloisMorphism::trusted(x1, lat, std::move(k1_lower), std::move(k1_upper));

  std::vector<int> k2_lower(x2->size()), k2_upper(lat->size());
  for (int b = 0; b < x2->size(); ++b) k2_lower[b] = at[x1->top()][x2->oc(b)];
  for (int p = 0; p < lat->size(); ++p) k2_upper[p] = x2->oc(coords[p].second);
  GaloisMorphism kappa2 =
      GaloisMorphism::trusted(x2, lat, std::move(k2_lower), std::move(k2_upper));

  return Biproduct{std::move(lat), x1, x2, std::move(coords), std::move(at),
                   std::move(kappa1), std::move(kappa2)};
}

// Cotuple [f1, f2]: lower (a, b) |-> f1_*(a) ^ f2_*(b); upper componentwise.
inline GaloisMorphism cotuple(const Biproduct& bp, const GaloisMorphism& f1,
                              const GaloisMorphism& f2) {
  if (!same_lattice(*f1.dst(), *f2.dst())) throw std::invalid_argument("cotuple: target mismatch");
  if (!same_lattice(*f1.src(), *bp.left) || !same_lattice(*f2.src(), *bp.right))
    throw std::invalid_argument("cotuple: source mismatch");
  const OmlPtr& y = f1.dst();
  std::vector<int> lower(bp.lattice->size()), upper(y->size());
  for (int p = 0; p < bp.lattice->size(); ++p)
    lower[p] = y->meet(f1.lower(bp.coords[p].first), f2.lower(bp.coords[p].second));
  for (int v = 0; v < y->size(); ++v) upper[v] = bp.at[f1.upper(v)][f2.upper(v)];
  return GaloisMorphism::trusted(bp.lattice, y, std::move(lower), std::move(upper));
}

// ---------------------------------------------------------------------------
// Hom-set enumeration.
//
// A lower leg is exactly a table sending all joins (including the empty one)
// to meets, and such a table is determined by its values on join-irreducible
// elements.  Enumeration walks all assignments of targets to the
// join-irreducibles, extends each by  f(x) = meet{ t(j) | j <= x },  keeps the
// extensions that send binary joins to meets, and dedupes.

struct HomSet {
  std::vector<GaloisMorphism> morphisms;
  bool exhaustive = true;
  std::uint64_t candidates = 0;  // tables examined
};

inline HomSet enumerate_hom(const OmlPtr& x, const OmlPtr& y, const EnumLimits& lim = {}) {
  const auto& irr = x->join_irreducibles();
  const int k = static_cast<int>(irr.size());
  const int ny = y->size();

  // Candidate-space size |Y|^k, saturating.
  std::uint64_t space = 1;
  bool overflow = false;
  for (int i = 0; i < k; ++i) {
    if (space > lim.candidate_budget) {
      overflow = true;
      break;
    }
    space *= static_cast<std::uint64_t>(ny);
  }
  const bool exhaustive = !overflow && space <= lim.candidate_budget;
  if (!exhaustive && !lim.allow_sampling)
    throw CapExceeded("hom-set candidate space exceeds budget");

  // Positions of join-irreducibles below each element.
  std::vector<std::vector<int>> below(x->size());
  for (int e = 0; e < x->size(); ++e)
    for (int i = 0; i < k; ++i)
      if (x->leq(irr[i], e)) below[e].push_back(i);

  std::set<std::vector<int>> tables;
  std::uint64_t candidates = 0;
  bool truncated = false;

  auto try_candidate = [&](const std::vector<int>& t) {
    ++candidates;
    std::vector<int> lower(x->size());
    for (int e = 0; e < x->size(); ++e) {
      int m = y->top();
      for (int i : below[e]) m = y->meet(m, t[i]);
      lower[e] = m;
    }
    for (int p = 0; p < x->size(); ++p)
      for (int q = p + 1; q < x->size(); ++q)
        if (lower[x->join(p, q)] != y->meet(lower[p], lower[q])) return;
    if (tables.size() >= lim.hom_cap && !tables.count(lower)) {
      if (!lim.allow_sampling) throw CapExceeded("hom-set size exceeds cap");
      truncated = true;
      return;
    }
    tables.insert(std::move(lower));
  };

  if (exhaustive) {
    std::vector<int> t(k, 0);
    while (true) {
      try_candidate(t);
      int i = 0;
      while (i < k && ++t[i] == ny) t[i++] = 0;
      if (i == k) break;
    }
  } else {
    Rng rng(lim.seed);
    std::vector<int> t(k, 0);
    for (std::uint64_t s = 0; s < lim.sample_candidates; ++s) {
      for (int i = 0; i < k; ++i) t[i] = static_cast<int>(rng.below(ny));
      try_candidate(t);
    }
  }

  HomSet hs;
  hs.exhaustive = exhaustive && !truncated;
  hs.candidates = candidates;
  for (const auto& tbl : tables) {
    auto m = GaloisMorphism::make(x, y, tbl);
    if (!m) throw std::logic_error("enumerated table failed adjunction validation");
    hs.morphisms.push_back(std::move(*m));
  }
  return hs;
}

// ---------------------------------------------------------------------------
// The lattice of kernel subobjects of X, exhibited as isomorphic to X itself:
//   a  |->  (downset(a) -> X).
// Kernels are harvested from every enumerated morphism out of X into the
// given targets; the bijection, order preservation/reflection (by genuine
// factoring searches) and preservation of oc, meet and top are all checked.

struct KSubIsoResult {
  ValidationReport report;
  std::vector<int> reps;  // kernel representatives found, sorted
};

inline KSubIsoResult ksub_iso(const OmlPtr& x, const std::vector<OmlPtr>& targets,
                              const EnumLimits& lim = {}) {
  KSubIsoResult out;
  std::set<int> reps;
  for (const auto& t : targets) {
    HomSet hs = enumerate_hom(x, t, lim);
    if (!hs.exhaustive)
      out.report.structural_error("hom enumeration was sampled; bijection check weakened");
    for (const auto& f : hs.morphisms) reps.insert(f.upper(t->top()));
  }
  out.reps.assign(reps.begin(), reps.end());
  for (int a = 0; a < x->size(); ++a)
    if (!reps.count(a))
      out.report.violation("ksub-bijection",
                           "element " + x->id(a) + " is not the kernel of any morphism");
  if (static_cast<int>(reps.size()) > x->size())
    out.report.violation("ksub-bijection", "more kernel classes than elements");

  // Order: downset(a) factors through downset(b) iff a <= b.
  std::vector<KernelSubobject> subs;
  subs.reserve(x->size());
  for (int a = 0; a < x->size(); ++a) subs.push_back(embed_downset(x, a));
  for (int a = 0; a < x->size(); ++a) {
    for (int b = 0; b < x->size(); ++b) {
      bool factors = false;
      HomSet hs = enumerate_hom(subs[a].down.lattice, subs[b].down.lattice, lim);
      for (const auto& phi : hs.morphisms)
        if (compose(subs[b].embed, phi) == subs[a].embed) {
          factors = true;
          break;
        }
      if (factors != x->leq(a, b))
        out.report.violation(x->leq(a, b) ? "ksub-order-preserve" : "ksub-order-reflect",
                             x->id(a) + " vs " + x->id(b));
    }
  }

  // Orthocomplement: ker(dagger(embed_a)) has rep oc(a).
  for (int a = 0; a < x->size(); ++a) {
    int r = kernel(dagger(subs[a].embed)).rep();
    if (r != x->oc(a))
      out.report.violation("ksub-oc", "oc of downset(" + x->id(a) + ") has rep " + x->id(r));
  }

  // Meet: the abstract pullback composite lands on downset(a ^ b).
  for (int a = 0; a < x->size(); ++a)
    for (int b = 0; b < x->size(); ++b) {
      Cokernel cb = cokernel(subs[b].embed);
      GaloisMorphism pb = compose(cb.proj, subs[a].embed);  // downset(a) -> downset(oc..)
      int inner = kernel(pb).rep();                         // element of downset(a)'s lattice
      int ambient = subs[a].down.to_ambient[inner];
      if (ambient != x->meet(a, b))
        out.report.violation("ksub-meet", x->id(a) + " ^ " + x->id(b) + " gave " +
                                              x->id(ambient));
    }

  // Top: the kernel of the zero endo is the whole of X.
  if (kernel(zero_morphism(x, x)).rep() != x->top())
    out.report.violation("ksub-top", "kernel of zero is not downset(1)");
  return out;
}

// ---------------------------------------------------------------------------
// Free construction: morphisms  powerset(A) -> X  correspond to plain
// functions  A -> X.  The powerset lattice must come from free_oml, whose
// element index i is exactly the subset bitmask i.

// Function -> morphism:  g_*(U) = meet{ oc(g(a)) | a in U }.
inline GaloisMorphism transpose_up(const OmlPtr& pa, int num_atoms, const std::vector<int>& g,
                                   const OmlPtr& x) {
  if (pa->size() != (1 << num_atoms)) throw std::invalid_argument("not a powerset lattice");
  std::vector<int> lower(pa->size());
  for (int u = 0; u < pa->size(); ++u) {
    int m = x->top();
    for (int a = 0; a < num_atoms; ++a)
      if (u & (1 << a)) m = x->meet(m, x->oc(g[a]));
    lower[u] = m;
  }
  auto f = GaloisMorphism::make(pa, x, std::move(lower));
  if (!f) throw std::logic_error("transpose_up produced an invalid morphism");
  return *f;
}

// Morphism -> function:  g(a) = oc(f_*({a})).
inline std::vector<int> transpose_down(const GaloisMorphism& f, int num_atoms) {
  if (f.src()->size() != (1 << num_atoms)) throw std::invalid_argument("not a powerset lattice");
  std::vector<int> g(num_atoms);
  for (int a = 0; a < num_atoms; ++a) g[a] = f.dst()->oc(f.lower(1 << a));
  return g;
}

// Action of the underlying-set functor on a morphism: x |-> oc(f_*(x)).
inline std::vector<int> underlying_action(const GaloisMorphism& f) {
  std::vector<int> u(f.src()->size());
  for (int x = 0; x < f.src()->size(); ++x) u[x] = f.dst()->oc(f.lower(x));
  return u;
}

}  // namespace omlgal
