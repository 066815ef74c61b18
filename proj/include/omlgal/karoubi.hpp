#pragma once

#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "omlgal/dagcat.hpp"
#include "omlgal/foulis.hpp"
#include "omlgal/report.hpp"

namespace omlgal {

// Idempotent-splitting completion of a finite category: objects are
// idempotents of the base, arrows are base arrows satisfying the membership
// equations f o s = f = t o f, composition as in the base.
struct MaterializedKaroubi {
  FinCategory cat;
  std::vector<std::pair<int, int>> objs;  // (base object, base idempotent arrow)
  std::vector<int> base_arrow;            // cat arrow -> base arrow
  std::map<std::pair<int, int>, int> object_index;
  std::map<std::tuple<int, int, int>, int> arrow_index;  // (src obj, dst obj, base arrow)

  int object_of(int base_obj, int idem) const {
    auto it = object_index.find({base_obj, idem});
    if (it == object_index.end()) throw std::logic_error("idempotent is not an envelope object");
    return it->second;
  }
  int index_of(int src, int dst, int base) const {
    auto it = arrow_index.find({src, dst, base});
    if (it == arrow_index.end()) throw std::logic_error("arrow not in envelope");
    return it->second;
  }
};

// Builds the envelope of `base`.  With self_adjoint_only the objects are
// restricted to self-adjoint idempotents and the base dagger lifts to the
// envelope; kernels lift too when the base has them: the kernel of
// f : (X,s) -> (Y,t) is  s o k : (K, dagger(k) o s o k) -> (X,s)  for the
// base kernel k of f.  Without the restriction the base dagger is not
// carried over (daggers of envelope arrows can fail the membership
// equations), so the plain envelope has no dagger and no kernels.
inline MaterializedKaroubi karoubi_envelope(const FinCategory& base, bool self_adjoint_only,
                                            std::size_t max_objects = 256) {
  if (self_adjoint_only && !base.has_dagger())
    throw std::invalid_argument("self-adjoint envelope needs a base dagger");
  MaterializedKaroubi m;
  m.cat.name = std::string(self_adjoint_only ? "dagger-karoubi(" : "karoubi(") + base.name + ")";

  const int nbase = static_cast<int>(base.objects.size());
  for (int x = 0; x < nbase; ++x)
    for (int f : base.hom[x][x]) {
      if (base.compose_raw(f, f) != f) continue;
      if (self_adjoint_only && base.dagger[f] != f) continue;
      if (m.objs.size() >= max_objects) throw CapExceeded("envelope object cap");
      m.object_index[{x, f}] = static_cast<int>(m.objs.size());
      m.objs.emplace_back(x, f);
      m.cat.objects.push_back("(" + base.objects[x] + "," + base.arrows[f].id + ")");
    }

  const int nobj = static_cast<int>(m.objs.size());
  for (int i = 0; i < nobj; ++i)
    for (int j = 0; j < nobj; ++j) {
      auto [x, s] = m.objs[i];
      auto [y, t] = m.objs[j];
      for (int f : base.hom[x][y]) {
        if (base.compose_raw(f, s) != f || base.compose_raw(t, f) != f) continue;
        int idx = static_cast<int>(m.cat.arrows.size());
        m.cat.arrows.push_back({base.arrows[f].id + "@" + std::to_string(i) + "-" +
                                    std::to_string(j),
                                i, j});
        m.base_arrow.push_back(f);
        m.arrow_index[{i, j, f}] = idx;
      }
    }
  m.cat.finalize();

  m.cat.identity.resize(nobj);
  for (int i = 0; i < nobj; ++i) m.cat.identity[i] = m.index_of(i, i, m.objs[i].second);

  if (base.zero_object >= 0)
    m.cat.zero_object = m.object_of(base.zero_object, base.identity[base.zero_object]);

  if (self_adjoint_only) {
    const int narr = static_cast<int>(m.cat.arrows.size());
    m.cat.dagger.resize(narr);
    for (int a = 0; a < narr; ++a)
      m.cat.dagger[a] = m.index_of(m.cat.arrows[a].dst, m.cat.arrows[a].src,
                                   base.dagger[m.base_arrow[a]]);
    if (base.has_kernels() && base.zero_object >= 0) {
      m.cat.kernel.resize(narr);
      for (int a = 0; a < narr; ++a) {
        int f = m.base_arrow[a];
        int s = m.objs[m.cat.arrows[a].src].second;
        int k = base.kernel[f];
        int sprime = base.compose_raw(base.compose_raw(base.dagger[k], s), k);
        int kobj = m.object_of(base.arrows[k].src, sprime);
        m.cat.kernel[a] = m.index_of(kobj, m.cat.arrows[a].src, base.compose_raw(s, k));
      }
    }
  }

  struct Shared {
    std::vector<int> base_arrow;
    std::vector<std::pair<int, int>> ends;  // (src obj, dst obj) per arrow
    std::map<std::tuple<int, int, int>, int> index;
    std::function<int(int, int)> base_compose;
  };
  auto sh = std::make_shared<Shared>();
  sh->base_arrow = m.base_arrow;
  for (const auto& a : m.cat.arrows) sh->ends.emplace_back(a.src, a.dst);
  sh->index = m.arrow_index;
  sh->base_compose = base.compose_raw;
  m.cat.compose_raw = [sh](int g, int f) {
    int comp = sh->base_compose(sh->base_arrow[g], sh->base_arrow[f]);
    auto it = sh->index.find({sh->ends[f].first, sh->ends[g].second, comp});
    if (it == sh->index.end()) throw std::logic_error("composition left the envelope");
    return it->second;
  };
  return m;
}

inline MaterializedKaroubi dagger_karoubi(const FinCategory& base, std::size_t max_objects = 256) {
  return karoubi_envelope(base, true, max_objects);
}

// Splitting of an idempotent arrow a : (X,s) -> (X,s) through the object
// (X, f) where f is a's base arrow:  a = m o e  with  e o m = id.
struct IdempotentSplitting {
  int via_obj = -1;
  int e = -1;  // (X,s) -> (X,f)
  int m = -1;  // (X,f) -> (X,s)
};

inline IdempotentSplitting split_idempotent(const MaterializedKaroubi& k, int a) {
  const auto& arr = k.cat.arrows[a];
  if (arr.src != arr.dst || k.cat.compose_raw(a, a) != a)
    throw std::invalid_argument("arrow is not an idempotent endo-arrow");
  int f = k.base_arrow[a];
  IdempotentSplitting s;
  s.via_obj = k.object_of(k.objs[arr.src].first, f);
  s.e = k.index_of(arr.src, s.via_obj, f);
  s.m = k.index_of(s.via_obj, arr.src, f);
  return s;
}

// ---------------------------------------------------------------------------
// Envelope of a Foulis semigroup, viewed as a one-object dagger category.
// Kernels exist directly:  ker(f : s -> t) = s*[f]  as an arrow from the
// self-adjoint idempotent s*[f] to s.  The zero object is the element [1].

struct FoulisEnvelope {
  FinCategory cat;
  std::vector<int> obj_elem;    // object -> semigroup element
  std::vector<int> arrow_elem;  // arrow -> semigroup element
  std::map<std::tuple<int, int, int>, int> arrow_index;  // (src, dst, element)

  int object_of(int elem) const {
    for (int i = 0; i < static_cast<int>(obj_elem.size()); ++i)
      if (obj_elem[i] == elem) return i;
    throw std::logic_error("element is not an envelope object");
  }
  int index_of(int src, int dst, int elem) const {
    auto it = arrow_index.find({src, dst, elem});
    if (it == arrow_index.end()) throw std::logic_error("arrow not in envelope");
    return it->second;
  }
};

inline FoulisEnvelope dagger_karoubi_of_foulis(const FoulisSemigroup& sg,
                                               std::size_t max_objects = 256) {
  FoulisEnvelope m;
  m.cat.name = "dagger-karoubi(" + (sg.name.empty() ? std::string("foulis") : sg.name) + ")";
  for (int s = 0; s < sg.size(); ++s) {
    if (sg.mul[s][s] != s || sg.inv[s] != s) continue;
    if (m.obj_elem.size() >= max_objects) throw CapExceeded("envelope object cap");
    m.obj_elem.push_back(s);
    m.cat.objects.push_back(sg.elements[s]);
  }
  const int nobj = static_cast<int>(m.obj_elem.size());
  for (int i = 0; i < nobj; ++i)
    for (int j = 0; j < nobj; ++j) {
      int s = m.obj_elem[i], t = m.obj_elem[j];
      for (int f = 0; f < sg.size(); ++f) {
        if (sg.mul[f][s] != f || sg.mul[t][f] != f) continue;
        int idx = static_cast<int>(m.cat.arrows.size());
        m.cat.arrows.push_back({sg.elements[f] + "@" + std::to_string(i) + "-" +
                                    std::to_string(j),
                                i, j});
        m.arrow_elem.push_back(f);
        m.arrow_index[{i, j, f}] = idx;
      }
    }
  m.cat.finalize();

  m.cat.identity.resize(nobj);
  for (int i = 0; i < nobj; ++i) m.cat.identity[i] = m.index_of(i, i, m.obj_elem[i]);
  m.cat.zero_object = m.object_of(sg.zero());

  const int narr = static_cast<int>(m.cat.arrows.size());
  m.cat.dagger.resize(narr);
  m.cat.kernel.resize(narr);
  for (int a = 0; a < narr; ++a)
    m.cat.dagger[a] =
        m.index_of(m.cat.arrows[a].dst, m.cat.arrows[a].src, sg.inv[m.arrow_elem[a]]);
  for (int a = 0; a < narr; ++a) {
    int s = m.obj_elem[m.cat.arrows[a].src];
    int k = sg.mul[s][sg.focus[m.arrow_elem[a]]];
    m.cat.kernel[a] = m.index_of(m.object_of(k), m.cat.arrows[a].src, k);
  }

  struct Shared {
    std::vector<int> elem;
    std::vector<std::pair<int, int>> ends;
    std::map<std::tuple<int, int, int>, int> index;
    std::vector<std::vector<int>> mul;
  };
  auto sh = std::make_shared<Shared>();
  sh->elem = m.arrow_elem;
  for (const auto& a : m.cat.arrows) sh->ends.emplace_back(a.src, a.dst);
  sh->index = m.arrow_index;
  sh->mul = sg.mul;
  m.cat.compose_raw = [sh](int g, int f) {
    int comp = sh->mul[sh->elem[g]][sh->elem[f]];
    auto it = sh->index.find({sh->ends[f].first, sh->ends[g].second, comp});
    if (it == sh->index.end()) throw std::logic_error("composition left the envelope");
    return it->second;
  };
  return m;
}

// ---------------------------------------------------------------------------
// The category of kernel subobjects of a dagger kernel category: objects are
// kernel classes (M -> X) over every X, arrows (m : M -> X) -> (n : N -> Y)
// are base arrows f : X -> Y such that f o m factors through n.

struct MaterializedKSub {
  FinCategory cat;
  std::vector<KSubPoset> posets;          // per base object
  std::vector<std::pair<int, int>> objs;  // (base object, class in its poset)
  std::vector<int> base_arrow;            // cat arrow -> base arrow
  std::map<std::tuple<int, int, int>, int> arrow_index;

  int index_of(int src, int dst, int base) const {
    auto it = arrow_index.find({src, dst, base});
    if (it == arrow_index.end()) throw std::logic_error("arrow not in kernel-subobject category");
    return it->second;
  }
};

inline MaterializedKSub ksub_category(const FinCategory& base) {
  MaterializedKSub m;
  m.cat.name = "ksub(" + base.name + ")";
  const int nbase = static_cast<int>(base.objects.size());
  for (int x = 0; x < nbase; ++x) m.posets.push_back(ksub_poset(base, x));
  for (int x = 0; x < nbase; ++x)
    for (int c = 0; c < static_cast<int>(m.posets[x].reps.size()); ++c) {
      m.objs.emplace_back(x, c);
      m.cat.objects.push_back(base.arrows[m.posets[x].reps[c]].id + "@" + base.objects[x]);
    }

  const int nobj = static_cast<int>(m.objs.size());
  auto factors = [&](int f, int mrep, int nrep) {
    int fm = base.compose_raw(f, mrep);
    return detail::factors_through(base, fm, nrep);
  };
  for (int i = 0; i < nobj; ++i)
    for (int j = 0; j < nobj; ++j) {
      auto [x, cm] = m.objs[i];
      auto [y, cn] = m.objs[j];
      int mrep = m.posets[x].reps[cm], nrep = m.posets[y].reps[cn];
      for (int f : base.hom[x][y]) {
        if (!factors(f, mrep, nrep)) continue;
        int idx = static_cast<int>(m.cat.arrows.size());
        m.cat.arrows.push_back({base.arrows[f].id + "@" + std::to_string(i) + "-" +
                                    std::to_string(j),
                                i, j});
        m.base_arrow.push_back(f);
        m.arrow_index[{i, j, f}] = idx;
      }
    }
  m.cat.finalize();

  m.cat.identity.resize(nobj);
  for (int i = 0; i < nobj; ++i)
    m.cat.identity[i] = m.index_of(i, i, base.identity[m.objs[i].first]);

  struct Shared {
    std::vector<int> base_arrow;
    std::vector<std::pair<int, int>> ends;
    std::map<std::tuple<int, int, int>, int> index;
    std::function<int(int, int)> base_compose;
  };
  auto sh = std::make_shared<Shared>();
  sh->base_arrow = m.base_arrow;
  for (const auto& a : m.cat.arrows) sh->ends.emplace_back(a.src, a.dst);
  sh->index = m.arrow_index;
  sh->base_compose = base.compose_raw;
  m.cat.compose_raw = [sh](int g, int f) {
    int comp = sh->base_compose(sh->base_arrow[g], sh->base_arrow[f]);
    auto it = sh->index.find({sh->ends[f].first, sh->ends[g].second, comp});
    if (it == sh->index.end())
      throw std::logic_error("composition left the kernel-subobject category");
    return it->second;
  };
  return m;
}

// The effect functor from kernel subobjects into the self-adjoint envelope:
// on objects m |-> m o dagger(m), on arrows f |-> f o effect(src).
struct EffectFunctor {
  std::vector<int> obj_map;    // ksub object -> envelope object
  std::vector<int> arrow_map;  // ksub arrow -> envelope arrow
};

inline EffectFunctor effect_functor(const FinCategory& base, const MaterializedKSub& ks,
                                    const MaterializedKaroubi& env) {
  EffectFunctor e;
  const int nobj = static_cast<int>(ks.objs.size());
  std::vector<int> eff(nobj);  // base effect arrow per ksub object
  e.obj_map.resize(nobj);
  for (int i = 0; i < nobj; ++i) {
    auto [x, c] = ks.objs[i];
    int mrep = ks.posets[x].reps[c];
    eff[i] = base.compose_raw(mrep, base.dagger[mrep]);
    e.obj_map[i] = env.object_of(x, eff[i]);
  }
  e.arrow_map.resize(ks.cat.arrows.size());
  for (int a = 0; a < static_cast<int>(ks.cat.arrows.size()); ++a) {
    int i = ks.cat.arrows[a].src, j = ks.cat.arrows[a].dst;
    int img = base.compose_raw(ks.base_arrow[a], eff[i]);
    e.arrow_map[a] = env.index_of(e.obj_map[i], e.obj_map[j], img);
  }
  return e;
}

// Functoriality of an (object map, arrow map) pair between finite categories:
// identities, sources/targets and all composites are preserved.
inline ValidationReport check_functor(const FinCategory& c, const FinCategory& d,
                                      const std::vector<int>& obj_map,
                                      const std::vector<int>& arrow_map) {
  ValidationReport rep;
  if (obj_map.size() != c.objects.size() || arrow_map.size() != c.arrows.size()) {
    rep.structural_error("functor table sizes disagree with the source category");
    return rep;
  }
  for (int a = 0; a < static_cast<int>(c.arrows.size()); ++a) {
    int fa = arrow_map[a];
    if (d.arrows[fa].src != obj_map[c.arrows[a].src] ||
        d.arrows[fa].dst != obj_map[c.arrows[a].dst])
      rep.violation("functor-typing", c.arrows[a].id);
  }
  for (int x = 0; x < static_cast<int>(c.objects.size()); ++x)
    if (arrow_map[c.identity[x]] != d.identity[obj_map[x]])
      rep.violation("functor-identity", c.objects[x]);
  if (!rep.ok()) return rep;
  for (int f = 0; f < static_cast<int>(c.arrows.size()); ++f)
    for (int g : c.out_arrows[c.arrows[f].dst])
      if (arrow_map[c.compose_raw(g, f)] != d.compose_raw(arrow_map[g], arrow_map[f]))
        rep.violation("functor-composition", c.arrows[g].id + " o " + c.arrows[f].id);
  return rep;
}

// Fullness of a functor on hom-sets: every arrow F(X) -> F(Y) is hit.
inline ValidationReport check_functor_full(const FinCategory& c, const FinCategory& d,
                                           const std::vector<int>& obj_map,
                                           const std::vector<int>& arrow_map) {
  ValidationReport rep;
  for (int x = 0; x < static_cast<int>(c.objects.size()); ++x)
    for (int y = 0; y < static_cast<int>(c.objects.size()); ++y)
      for (int t : d.hom[obj_map[x]][obj_map[y]]) {
        bool hit = false;
        for (int a : c.hom[x][y])
          if (arrow_map[a] == t) {
            hit = true;
            break;
          }
        if (!hit)
          rep.violation("functor-full", d.arrows[t].id + " from " + c.objects[x] + " -> " +
                                            c.objects[y]);
      }
  return rep;
}

}  // namespace omlgal
