#pragma once

#include <functional>
#include <iterator>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "omlgal/galois.hpp"
#include "omlgal/oml.hpp"
#include "omlgal/report.hpp"

namespace omlgal {

// An involutive monoid with a focus operation [s], presented by tables.
struct FoulisSemigroup {
  std::string name;
  std::vector<std::string> elements;
  int unit = -1;
  std::vector<std::vector<int>> mul;  // mul[a][b] = a * b
  std::vector<int> inv;               // involution
  std::vector<int> focus;             // [s]

  int size() const { return static_cast<int>(elements.size()); }
  int zero() const { return focus[unit]; }  // 0 = [1]
};

namespace detail {

inline bool foulis_tables_ok(const FoulisSemigroup& s, ValidationReport& rep) {
  const int n = s.size();
  if (n == 0) {
    rep.structural_error("empty carrier");
    return false;
  }
  if (s.unit < 0 || s.unit >= n) {
    rep.structural_error("unit out of range");
    return false;
  }
  if (static_cast<int>(s.mul.size()) != n || static_cast<int>(s.inv.size()) != n ||
      static_cast<int>(s.focus.size()) != n) {
    rep.structural_error("table sizes disagree with carrier");
    return false;
  }
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(s.mul[a].size()) != n) {
      rep.structural_error("multiplication row size at " + s.elements[a]);
      return false;
    }
    for (int b = 0; b < n; ++b)
      if (s.mul[a][b] < 0 || s.mul[a][b] >= n) {
        rep.structural_error("multiplication value out of range at " + s.elements[a] + "," +
                             s.elements[b]);
        return false;
      }
    if (s.inv[a] < 0 || s.inv[a] >= n || s.focus[a] < 0 || s.focus[a] >= n) {
      rep.structural_error("involution or focus value out of range at " + s.elements[a]);
      return false;
    }
  }
  return true;
}

// Axioms shared by both axiomatizations: involutive monoid, foci are
// self-adjoint idempotents, and 0 = [1] is absorbing.
inline void foulis_common_axioms(const FoulisSemigroup& s, ValidationReport& rep) {
  const int n = s.size();
  auto w2 = [&](int a, int b) { return s.elements[a] + ", " + s.elements[b]; };
  for (int a = 0; a < n; ++a) {
    if (s.mul[s.unit][a] != a || s.mul[a][s.unit] != a)
      rep.violation("monoid-unit", s.elements[a]);
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (s.mul[s.mul[a][b]][c] != s.mul[a][s.mul[b][c]])
          rep.violation("monoid-assoc", w2(a, b) + ", " + s.elements[c]);
  }
  for (int a = 0; a < n; ++a) {
    if (s.inv[s.inv[a]] != a) rep.violation("involution-involutive", s.elements[a]);
    for (int b = 0; b < n; ++b)
      if (s.inv[s.mul[a][b]] != s.mul[s.inv[b]][s.inv[a]])
        rep.violation("involution-antihom", w2(a, b));
  }
  if (s.inv[s.unit] != s.unit) rep.violation("involution-unit", s.elements[s.unit]);
  for (int a = 0; a < n; ++a) {
    int f = s.focus[a];
    if (s.mul[f][f] != f) rep.violation("focus-idempotent", s.elements[a]);
    if (s.inv[f] != f) rep.violation("focus-selfadjoint", s.elements[a]);
  }
  const int z = s.zero();
  for (int a = 0; a < n; ++a)
    if (s.mul[z][a] != z || s.mul[a][z] != z) rep.violation("zero-absorbing", s.elements[a]);
}

}  // namespace detail

// Primary axiomatization: the common axioms plus the existential law
//   s*x = 0  iff  x = [s]*y for some y.
inline ValidationReport check_foulis(const FoulisSemigroup& s) {
  ValidationReport rep;
  if (!detail::foulis_tables_ok(s, rep)) return rep;
  detail::foulis_common_axioms(s, rep);
  if (!rep.ok()) return rep;

  const int n = s.size();
  const int z = s.zero();
  for (int a = 0; a < n; ++a) {
    std::vector<char> image(n, 0);  // { [a]*y : y }
    for (int y = 0; y < n; ++y) image[s.mul[s.focus[a]][y]] = 1;
    for (int x = 0; x < n; ++x) {
      bool annihilated = s.mul[a][x] == z;
      if (annihilated != (image[x] != 0))
        rep.violation("focus-existential", s.elements[a] + ", " + s.elements[x]);
    }
  }
  return rep;
}

// Equational axiomatization: the common axioms plus
//   [0] = 1,   s*[s] = 0,   t = [[inv(t)*inv(s)]*s]*t.
inline ValidationReport check_foulis_alt(const FoulisSemigroup& s) {
  ValidationReport rep;
  if (!detail::foulis_tables_ok(s, rep)) return rep;
  detail::foulis_common_axioms(s, rep);
  if (!rep.ok()) return rep;

  const int n = s.size();
  const int z = s.zero();
  if (s.focus[z] != s.unit) rep.violation("focus-of-zero", s.elements[z]);
  for (int a = 0; a < n; ++a)
    if (s.mul[a][s.focus[a]] != z) rep.violation("focus-annihilates", s.elements[a]);
  for (int a = 0; a < n; ++a)
    for (int t = 0; t < n; ++t) {
      int u = s.focus[s.mul[s.focus[s.mul[s.inv[t]][s.inv[a]]]][a]];
      if (s.mul[u][t] != t)
        rep.violation("focus-recovery", s.elements[a] + ", " + s.elements[t]);
    }
  return rep;
}

// Derived helper law:  x*y = 0  implies  y = [x]*y.
inline ValidationReport check_annihilator_law(const FoulisSemigroup& s) {
  ValidationReport rep;
  if (!detail::foulis_tables_ok(s, rep)) return rep;
  const int n = s.size();
  const int z = s.zero();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (s.mul[x][y] == z && s.mul[s.focus[x]][y] != y)
        rep.violation("annihilator-fix", s.elements[x] + ", " + s.elements[y]);
  return rep;
}

// ---------------------------------------------------------------------------
// The endomorphism semigroup of an orthomodular lattice under Galois
// composition, with dagger as involution and kernel effects as foci.

struct EndoSemigroup {
  FoulisSemigroup sg;
  OmlPtr lattice;
  std::vector<GaloisMorphism> morphisms;  // parallel to sg.elements
  std::map<std::vector<int>, int> index;  // lower table -> element

  int index_of(const GaloisMorphism& m) const {
    auto it = index.find(m.lower_table());
    if (it == index.end()) throw std::logic_error("morphism not in endo semigroup");
    return it->second;
  }
};

// The focus of an endo-morphism in closed form: with a = upper(top),
// lower(x) = oc(a) v (a ^ oc(x)).  Coincides with embed o dagger(embed) of
// the kernel.
inline GaloisMorphism focus_of_endo(const GaloisMorphism& f) {
  const auto& x = f.src();
  const int a = f.upper(x->top());
  std::vector<int> lower(x->size()), upper(x->size());
  for (int v = 0; v < x->size(); ++v) {
    lower[v] = x->join(x->oc(a), x->meet(a, x->oc(v)));
    upper[v] = lower[v];  // the effect is self-adjoint
  }
  return GaloisMorphism::trusted(x, x, std::move(lower), std::move(upper));
}

inline EndoSemigroup endo_semigroup(const OmlPtr& x, EnumLimits lim = {}) {
  lim.allow_sampling = false;
  EndoSemigroup e;
  e.lattice = x;
  HomSet hs = enumerate_hom(x, x, lim);
  e.morphisms = std::move(hs.morphisms);

  const int n = static_cast<int>(e.morphisms.size());
  e.sg.name = "endo";
  for (int i = 0; i < n; ++i) {
    e.sg.elements.push_back("e" + std::to_string(i));
    e.index[e.morphisms[i].lower_table()] = i;
  }
  e.sg.unit = e.index_of(identity_morphism(x));
  e.sg.mul.assign(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      e.sg.mul[a][b] = e.index_of(compose(e.morphisms[a], e.morphisms[b]));
  e.sg.inv.resize(n);
  e.sg.focus.resize(n);
  for (int a = 0; a < n; ++a) {
    e.sg.inv[a] = e.index_of(dagger(e.morphisms[a]));
    e.sg.focus[a] = e.index_of(focus_of_endo(e.morphisms[a]));
  }
  return e;
}

// ---------------------------------------------------------------------------
// The orthomodular lattice K_s = { s*[t*s] : t } inside a Foulis semigroup,
// ordered by  k1 <= k2  iff  k1 = k2*k1, with orthocomplement k |-> s*[k].

struct KsLattice {
  int s = -1;
  std::vector<int> carrier;  // semigroup elements, ascending
  OmlPtr lattice;            // validated; indexes parallel carrier
  ValidationReport report;
};

inline KsLattice k_s_lattice(const FoulisSemigroup& sg, int s) {
  KsLattice k;
  k.s = s;
  std::set<int> carrier;
  for (int t = 0; t < sg.size(); ++t) carrier.insert(sg.mul[s][sg.focus[sg.mul[t][s]]]);
  k.carrier.assign(carrier.begin(), carrier.end());

  const int n = static_cast<int>(k.carrier.size());
  RawOML raw;
  for (int i = 0; i < n; ++i) raw.elements.push_back(sg.elements[k.carrier[i]]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (sg.mul[k.carrier[j]][k.carrier[i]] == k.carrier[i])
        raw.leq.emplace_back(raw.elements[i], raw.elements[j]);
  std::vector<int> ocv(n, -1);
  for (int i = 0; i < n; ++i) {
    int o = sg.mul[s][sg.focus[k.carrier[i]]];
    auto it = carrier.find(o);
    if (it == carrier.end()) {
      k.report.violation("ks-oc-closure", raw.elements[i]);
      return k;
    }
    ocv[i] = static_cast<int>(std::distance(carrier.begin(), it));
    raw.oc.emplace_back(raw.elements[i], raw.elements[ocv[i]]);
  }
  k.lattice = build_oml(raw, &k.report);
  if (!k.lattice) return k;

  // Cross-check the closed meet formula  (k1 * [[k2] * k1])^oc^oc  against
  // the order-derived meet.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int raw_meet = sg.mul[k.carrier[i]][sg.focus[sg.mul[sg.focus[k.carrier[j]]][k.carrier[i]]]];
      auto it = carrier.find(raw_meet);
      if (it == carrier.end()) {
        k.report.violation("ks-meet-closure", raw.elements[i] + ", " + raw.elements[j]);
        continue;
      }
      int idx = static_cast<int>(std::distance(carrier.begin(), it));
      int folded = k.lattice->oc(k.lattice->oc(idx));
      if (folded != k.lattice->meet(i, j))
        k.report.violation("ks-meet-formula", raw.elements[i] + ", " + raw.elements[j]);
    }
  return k;
}

// The orthomodular lattice of a Foulis semigroup: K_1, the foci under the
// annihilator order.
inline KsLattice oml_of_foulis(const FoulisSemigroup& sg) { return k_s_lattice(sg, sg.unit); }

// The Foulis semigroup of endo-maps at a self-adjoint idempotent s:
// carrier { t : s*t = t = t*s }, unit s, focus [t]_s = s*[t]*s.
inline FoulisSemigroup foulis_at(const FoulisSemigroup& sg, int s) {
  if (s < 0 || s >= sg.size() || sg.mul[s][s] != s || sg.inv[s] != s)
    throw std::invalid_argument("not a self-adjoint idempotent");
  FoulisSemigroup out;
  out.name = sg.name + "@" + sg.elements[s];
  std::vector<int> carrier, back(sg.size(), -1);
  for (int t = 0; t < sg.size(); ++t)
    if (sg.mul[s][t] == t && sg.mul[t][s] == t) {
      back[t] = static_cast<int>(carrier.size());
      carrier.push_back(t);
      out.elements.push_back(sg.elements[t]);
    }
  const int n = static_cast<int>(carrier.size());
  out.unit = back[s];
  out.mul.assign(n, std::vector<int>(n, -1));
  out.inv.resize(n);
  out.focus.resize(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out.mul[i][j] = back[sg.mul[carrier[i]][carrier[j]]];
    out.inv[i] = back[sg.inv[carrier[i]]];
    out.focus[i] = back[sg.mul[sg.mul[s][sg.focus[carrier[i]]]][s]];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Structure-preserving maps and isomorphism search.

inline ValidationReport check_foulis_morphism(const FoulisSemigroup& a, const FoulisSemigroup& b,
                                              const std::vector<int>& h) {
  ValidationReport rep;
  if (static_cast<int>(h.size()) != a.size()) {
    rep.structural_error("map size disagrees with source carrier");
    return rep;
  }
  for (int x : h)
    if (x < 0 || x >= b.size()) {
      rep.structural_error("map value out of range");
      return rep;
    }
  if (h[a.unit] != b.unit) rep.violation("morphism-unit", a.elements[a.unit]);
  for (int x = 0; x < a.size(); ++x) {
    if (h[a.inv[x]] != b.inv[h[x]]) rep.violation("morphism-involution", a.elements[x]);
    if (h[a.focus[x]] != b.focus[h[x]]) rep.violation("morphism-focus", a.elements[x]);
    for (int y = 0; y < a.size(); ++y)
      if (h[a.mul[x][y]] != b.mul[h[x]][h[y]])
        rep.violation("morphism-multiplication", a.elements[x] + ", " + a.elements[y]);
  }
  return rep;
}

// Lexicographically least isomorphism of Foulis semigroups, if any.
inline std::optional<std::vector<int>> find_foulis_iso(const FoulisSemigroup& a,
                                                       const FoulisSemigroup& b) {
  const int n = a.size();
  if (n != b.size()) return std::nullopt;
  std::vector<int> map(n, -1), used(n, 0);

  auto consistent = [&](int x, int y) {
    if ((a.inv[x] == x) != (b.inv[y] == y)) return false;
    if ((a.mul[x][x] == x) != (b.mul[y][y] == y)) return false;
    if (map[a.inv[x]] >= 0 && map[a.inv[x]] != b.inv[y]) return false;
    if (map[a.focus[x]] >= 0 && map[a.focus[x]] != b.focus[y]) return false;
    for (int u = 0; u < n; ++u) {
      if (map[u] < 0) continue;
      if (map[a.mul[x][u]] >= 0 && map[a.mul[x][u]] != b.mul[y][map[u]]) return false;
      if (map[a.mul[u][x]] >= 0 && map[a.mul[u][x]] != b.mul[map[u]][y]) return false;
    }
    return true;
  };

  std::function<bool(int)> go = [&](int x) -> bool {
    if (x == n) {
      // Full verification of every table.
      for (int u = 0; u < n; ++u) {
        if (map[a.inv[u]] != b.inv[map[u]] || map[a.focus[u]] != b.focus[map[u]]) return false;
        for (int v = 0; v < n; ++v)
          if (map[a.mul[u][v]] != b.mul[map[u]][map[v]]) return false;
      }
      return true;
    }
    for (int y = 0; y < n; ++y) {
      if (used[y]) continue;
      if (x == a.unit && y != b.unit) continue;
      if (x != a.unit && y == b.unit) continue;
      if (!consistent(x, y)) continue;
      map[x] = y;
      used[y] = 1;
      if (go(x + 1)) return true;
      map[x] = -1;
      used[y] = 0;
    }
    return false;
  };
  if (!go(0)) return std::nullopt;
  return map;
}

}  // namespace omlgal
