#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "omlgal/report.hpp"

namespace omlgal {

inline constexpr int kDefaultMaxLattice = 64;

// Raw input tables for a finite ortholattice candidate.  `leq` may list
// covering pairs or the full order; the reflexive-transitive closure is
// taken.  `oc` lists directed pairs (x, x') meaning oc(x) = x'.
struct RawOML {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> leq;
  std::vector<std::pair<std::string, std::string>> oc;
};

class FiniteOML;
using OmlPtr = std::shared_ptr<const FiniteOML>;

namespace detail {

// Mutable candidate structure shared by the validators and the builder.
struct OrthoTables {
  std::vector<std::string> ids;
  std::map<std::string, int> index;
  std::vector<std::vector<char>> leq;  // closed order relation
  std::vector<int> oc;                 // -1 when undeclared
  std::vector<std::vector<int>> meet;  // -1 when missing
  std::vector<std::vector<int>> join;  // -1 when missing
  int bottom = -1;
  int top = -1;
  bool order_ok = false;    // poset axioms hold
  bool lattice_ok = false;  // all meets/joins + bounds exist
};

// Builds the closure and the meet/join tables, recording structural errors
// and order/lattice violations.  Later checks are attempted only on the
// parts that exist, so a report lists every independently checkable axiom.
inline OrthoTables make_tables(const RawOML& raw, ValidationReport& rep) {
  OrthoTables t;
  for (const auto& e : raw.elements) {
    if (t.index.count(e)) {
      rep.structural_error("duplicate element '" + e + "'");
      continue;
    }
    t.index[e] = static_cast<int>(t.ids.size());
    t.ids.push_back(e);
  }
  const int n = static_cast<int>(t.ids.size());
  if (n == 0) rep.structural_error("empty carrier");

  auto lookup = [&](const std::string& id, const char* table) -> int {
    auto it = t.index.find(id);
    if (it == t.index.end()) {
      rep.structural_error(std::string("unknown element '") + id + "' in " + table + " table");
      return -1;
    }
    return it->second;
  };

  t.leq.assign(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i) t.leq[i][i] = 1;
  for (const auto& [a, b] : raw.leq) {
    int i = lookup(a, "leq"), j = lookup(b, "leq");
    if (i >= 0 && j >= 0) t.leq[i][j] = 1;
  }
  // Reflexive-transitive closure (Floyd-Warshall style).
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (t.leq[i][k])
        for (int j = 0; j < n; ++j)
          if (t.leq[k][j]) t.leq[i][j] = 1;

  t.oc.assign(n, -1);
  for (const auto& [a, b] : raw.oc) {
    int i = lookup(a, "oc"), j = lookup(b, "oc");
    if (i < 0 || j < 0) continue;
    if (t.oc[i] != -1 && t.oc[i] != j) {
      rep.structural_error("conflicting orthocomplement for '" + a + "'");
      continue;
    }
    t.oc[i] = j;
  }
  for (int i = 0; i < n; ++i)
    if (t.oc[i] == -1)
      rep.structural_error("no orthocomplement declared for '" + t.ids[i] + "'");

  if (!rep.structural.empty()) return t;

  t.order_ok = true;
  for (int i = 0; i < n && t.order_ok; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && t.leq[i][j] && t.leq[j][i]) {
        rep.violation("poset-antisymmetry", t.ids[i] + " <= " + t.ids[j] + " and " +
                                                t.ids[j] + " <= " + t.ids[i]);
        t.order_ok = false;
        break;
      }
  if (!t.order_ok) return t;

  // Meets and joins as unique greatest lower / least upper bounds.
  t.meet.assign(n, std::vector<int>(n, -1));
  t.join.assign(n, std::vector<int>(n, -1));
  t.lattice_ok = true;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      int glb = -1;
      for (int k = 0; k < n; ++k) {
        if (!t.leq[k][i] || !t.leq[k][j]) continue;
        bool greatest = true;
        for (int l = 0; l < n && greatest; ++l)
          if (t.leq[l][i] && t.leq[l][j] && !t.leq[l][k]) greatest = false;
        if (greatest) {
          glb = k;
          break;
        }
      }
      int lub = -1;
      for (int k = 0; k < n; ++k) {
        if (!t.leq[i][k] || !t.leq[j][k]) continue;
        bool least = true;
        for (int l = 0; l < n && least; ++l)
          if (t.leq[i][l] && t.leq[j][l] && !t.leq[k][l]) least = false;
        if (least) {
          lub = k;
          break;
        }
      }
      if (glb == -1) {
        rep.violation("lattice-meet", "no meet of " + t.ids[i] + ", " + t.ids[j]);
        t.lattice_ok = false;
      }
      if (lub == -1) {
        rep.violation("lattice-join", "no join of " + t.ids[i] + ", " + t.ids[j]);
        t.lattice_ok = false;
      }
      t.meet[i][j] = t.meet[j][i] = glb;
      t.join[i][j] = t.join[j][i] = lub;
    }
  }
  for (int k = 0; k < n; ++k) {
    bool bot = true, top = true;
    for (int j = 0; j < n; ++j) {
      if (!t.leq[k][j]) bot = false;
      if (!t.leq[j][k]) top = false;
    }
    if (bot) t.bottom = k;
    if (top) t.top = k;
  }
  if (t.bottom == -1 || t.top == -1) {
    rep.violation("lattice-bounds", "missing bottom or top element");
    t.lattice_ok = false;
  }
  return t;
}

inline void check_ortho_axioms(const OrthoTables& t, ValidationReport& rep) {
  const int n = static_cast<int>(t.ids.size());
  if (!t.order_ok) return;
  for (int i = 0; i < n; ++i)
    if (t.oc[t.oc[i]] != i) {
      rep.violation("oc-involution",
                    "oc(oc(" + t.ids[i] + ")) = " + t.ids[t.oc[t.oc[i]]] + " != " + t.ids[i]);
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (t.leq[i][j] && !t.leq[t.oc[j]][t.oc[i]]) {
        rep.violation("oc-antitone", t.ids[i] + " <= " + t.ids[j] + " but oc(" + t.ids[j] +
                                         ") !<= oc(" + t.ids[i] + ")");
      }
  if (t.lattice_ok) {
    for (int i = 0; i < n; ++i) {
      int m = t.meet[i][t.oc[i]];
      if (m != t.bottom) {
        rep.violation("oc-complement", "meet(" + t.ids[i] + ", oc(" + t.ids[i] + ")) = " +
                                           (m >= 0 ? t.ids[m] : "?") + " != bottom");
      }
    }
  }
}

}  // namespace detail

// Ortholattice validation: poset, meets/joins, antitone involution,
// x ^ oc(x) = bottom.  Empty report means valid.
inline ValidationReport check_ortholattice(const RawOML& raw) {
  ValidationReport rep;
  auto t = detail::make_tables(raw, rep);
  detail::check_ortho_axioms(t, rep);
  return rep;
}

// Orthomodularity, evaluated as three independent conditions over all pairs:
//   oml-1: x <= y  implies  y = x v (oc(x) ^ y)
//   oml-2: x <= y  implies  x = y ^ (oc(y) v x)
//   oml-3: x <= y and oc(x) ^ y = 0  imply  x = y
// The conditions are equivalent on every ortholattice; callers can assert
// agreement of the three verdicts via ValidationReport::violated.
inline ValidationReport check_orthomodular(const RawOML& raw) {
  ValidationReport rep = check_ortholattice(raw);
  if (!rep.ok()) {
    rep.structural_error("orthomodularity not evaluated: not a valid ortholattice");
    return rep;
  }
  ValidationReport dummy;
  auto t = detail::make_tables(raw, dummy);
  const int n = static_cast<int>(t.ids.size());
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (!t.leq[x][y]) continue;
      int a = t.join[x][t.meet[t.oc[x]][y]];
      if (a != y)
        rep.violation("oml-1", t.ids[x] + " <= " + t.ids[y] + " but " + t.ids[x] + " v (oc(" +
                                   t.ids[x] + ") ^ " + t.ids[y] + ") = " + t.ids[a]);
      int b = t.meet[y][t.join[t.oc[y]][x]];
      if (b != x)
        rep.violation("oml-2", t.ids[x] + " <= " + t.ids[y] + " but " + t.ids[y] + " ^ (oc(" +
                                   t.ids[y] + ") v " + t.ids[x] + ") = " + t.ids[b]);
      if (t.meet[t.oc[x]][y] == t.bottom && x != y)
        rep.violation("oml-3", t.ids[x] + " <= " + t.ids[y] + ", oc(" + t.ids[x] + ") ^ " +
                                   t.ids[y] + " = 0, but " + t.ids[x] + " != " + t.ids[y]);
    }
  }
  return rep;
}

// The three orthomodularity verdicts must agree on any ortholattice.
inline bool orthomodular_conditions_agree(const ValidationReport& rep) {
  bool a = rep.violated("oml-1"), b = rep.violated("oml-2"), c = rep.violated("oml-3");
  return a == b && b == c;
}

// Immutable validated finite orthomodular lattice.
class FiniteOML {
 public:
  int size() const { return static_cast<int>(ids_.size()); }
  const std::string& id(int i) const { return ids_[i]; }
  const std::vector<std::string>& ids() const { return ids_; }

  // Index of an element id; -1 when absent.
  int index(const std::string& id) const {
    auto it = index_.find(id);
    return it == index_.end() ? -1 : it->second;
  }

  bool leq(int a, int b) const { return leq_[a][b] != 0; }
  int meet(int a, int b) const { return meet_[a][b]; }
  int join(int a, int b) const { return join_[a][b]; }
  int oc(int a) const { return oc_[a]; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }

  // Elements j != 0 that are not joins of two strictly smaller elements.
  const std::vector<int>& join_irreducibles() const { return irr_; }

  // Sasaki hook:  a -> b  =  oc(a) v (a ^ b).
  int sasaki_hook(int a, int b) const { return join_[oc_[a]][meet_[a][b]]; }
  // Sasaki conjunction:  a & b  =  b ^ (oc(b) v a).
  int sasaki_and(int a, int b) const { return meet_[b][join_[oc_[b]][a]]; }

  RawOML raw() const {
    RawOML r;
    r.elements = ids_;
    for (int i = 0; i < size(); ++i)
      for (int j = 0; j < size(); ++j)
        if (leq(i, j)) r.leq.emplace_back(ids_[i], ids_[j]);
    for (int i = 0; i < size(); ++i) r.oc.emplace_back(ids_[i], ids_[oc_[i]]);
    return r;
  }

  // Construction goes through build_oml below.
  static OmlPtr build(const RawOML& raw, ValidationReport* out_report) {
    ValidationReport rep = check_orthomodular(raw);
    if (out_report) *out_report = rep;
    if (!rep.ok()) return nullptr;
    ValidationReport dummy;
    auto t = detail::make_tables(raw, dummy);
    auto l = std::make_shared<FiniteOML>();
    l->ids_ = t.ids;
    l->index_ = t.index;
    l->leq_ = t.leq;
    l->oc_ = t.oc;
    l->meet_ = t.meet;
    l->join_ = t.join;
    l->bottom_ = t.bottom;
    l->top_ = t.top;
    const int n = l->size();
    for (int j = 0; j < n; ++j) {
      if (j == t.bottom) continue;
      bool irr = true;
      for (int a = 0; a < n && irr; ++a)
        for (int b = 0; b < n && irr; ++b)
          if (a != j && b != j && t.join[a][b] == j) irr = false;
      if (irr) l->irr_.push_back(j);
    }
    return l;
  }

 private:
  std::vector<std::string> ids_;
  std::map<std::string, int> index_;
  std::vector<std::vector<char>> leq_;
  std::vector<int> oc_;
  std::vector<std::vector<int>> meet_, join_;
  std::vector<int> irr_;
  int bottom_ = -1, top_ = -1;
};

// Validates and freezes an orthomodular lattice; returns nullptr (with a
// filled report, if requested) when any ortholattice or orthomodularity
// axiom fails.
inline OmlPtr build_oml(const RawOML& raw, ValidationReport* report = nullptr) {
  return FiniteOML::build(raw, report);
}

// Structural identity: same ids in the same order, same order, same oc.
inline bool same_lattice(const FiniteOML& a, const FiniteOML& b) {
  if (&a == &b) return true;
  if (a.ids() != b.ids()) return false;
  for (int i = 0; i < a.size(); ++i) {
    if (a.oc(i) != b.oc(i)) return false;
    for (int j = 0; j < a.size(); ++j)
      if (a.leq(i, j) != b.leq(i, j)) return false;
  }
  return true;
}

inline int big_meet(const FiniteOML& l, const std::vector<int>& xs) {
  int m = l.top();
  for (int x : xs) m = l.meet(m, x);
  return m;
}

inline int big_join(const FiniteOML& l, const std::vector<int>& xs) {
  int j = l.bottom();
  for (int x : xs) j = l.join(j, x);
  return j;
}

// Is `map` a homomorphism of orthomodular lattices?  Checks preservation of
// bottom, top, orthocomplement and binary meets/joins (hence of the order).
inline ValidationReport check_oml_hom(const FiniteOML& a, const FiniteOML& b,
                                      const std::vector<int>& map) {
  ValidationReport rep;
  if (static_cast<int>(map.size()) != a.size()) {
    rep.structural_error("map size disagrees with source lattice");
    return rep;
  }
  for (int v : map)
    if (v < 0 || v >= b.size()) {
      rep.structural_error("map value out of range");
      return rep;
    }
  if (map[a.bottom()] != b.bottom()) rep.violation("hom-bottom", a.id(a.bottom()));
  if (map[a.top()] != b.top()) rep.violation("hom-top", a.id(a.top()));
  for (int x = 0; x < a.size(); ++x) {
    if (map[a.oc(x)] != b.oc(map[x])) rep.violation("hom-oc", a.id(x));
    for (int y = 0; y < a.size(); ++y) {
      if (map[a.meet(x, y)] != b.meet(map[x], map[y]))
        rep.violation("hom-meet", a.id(x) + ", " + a.id(y));
      if (map[a.join(x, y)] != b.join(map[x], map[y]))
        rep.violation("hom-join", a.id(x) + ", " + a.id(y));
    }
  }
  return rep;
}

// Distributivity over all triples; Boolean == distributive orthomodular.
inline bool is_boolean(const FiniteOML& l) {
  const int n = l.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Generators

// Modular ortholattice MO(n): bottom, top and n complementary pairs of
// incomparable middle elements.  MO(0) is the two-element lattice.
inline OmlPtr mo_lattice(int n, int max_size = kDefaultMaxLattice) {
  int size = 2 * n + 2;
  if (size > max_size) throw CapExceeded("mo_lattice(" + std::to_string(n) + ") exceeds size cap");
  RawOML raw;
  raw.elements.push_back("0");
  raw.elements.push_back("1");
  for (int i = 1; i <= n; ++i) {
    raw.elements.push_back("p" + std::to_string(i));
    raw.elements.push_back("p" + std::to_string(i) + "'");
  }
  for (const auto& e : raw.elements) {
    raw.leq.emplace_back("0", e);
    raw.leq.emplace_back(e, "1");
  }
  raw.oc.emplace_back("0", "1");
  raw.oc.emplace_back("1", "0");
  for (int i = 1; i <= n; ++i) {
    raw.oc.emplace_back("p" + std::to_string(i), "p" + std::to_string(i) + "'");
    raw.oc.emplace_back("p" + std::to_string(i) + "'", "p" + std::to_string(i));
  }
  ValidationReport rep;
  auto l = build_oml(raw, &rep);
  if (!l) throw std::logic_error("mo_lattice construction failed");
  return l;
}

// Powerset of a finite set of named atoms, ordered by inclusion, with
// set complement.  The free construction for maps out of plain sets.
inline OmlPtr free_oml(const std::vector<std::string>& atoms,
                       int max_size = kDefaultMaxLattice) {
  const int n = static_cast<int>(atoms.size());
  if (n > 20 || (1LL << n) > max_size)
    throw CapExceeded("free_oml on " + std::to_string(n) + " atoms exceeds size cap");
  auto subset_id = [&](unsigned mask) -> std::string {
    if (mask == 0) return n == 0 ? "1" : "0";
    if (mask + 1 == (1u << n)) return "1";
    std::string s;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) {
        if (!s.empty()) s += "+";
        s += atoms[i];
      }
    return s;
  };
  RawOML raw;
  const unsigned full = (1u << n) - 1;
  for (unsigned m = 0; m <= full; ++m) raw.elements.push_back(subset_id(m));
  for (unsigned a = 0; a <= full; ++a)
    for (unsigned b = 0; b <= full; ++b)
      if ((a & b) == a) raw.leq.emplace_back(subset_id(a), subset_id(b));
  for (unsigned a = 0; a <= full; ++a) raw.oc.emplace_back(subset_id(a), subset_id(full & ~a));
  ValidationReport rep;
  auto l = build_oml(raw, &rep);
  if (!l) throw std::logic_error("free_oml construction failed");
  return l;
}

// Boolean lattice with n generated atom names (a, b, c, ...).
inline OmlPtr boolean_lattice(int n, int max_size = kDefaultMaxLattice) {
  if (n > 20) throw CapExceeded("boolean_lattice atom count too large");
  std::vector<std::string> atoms;
  for (int i = 0; i < n; ++i) atoms.push_back(std::string(1, static_cast<char>('a' + i)));
  return free_oml(atoms, max_size);
}

// The downward closure of `a` as an orthomodular lattice in its own right:
// order inherited, complement u |-> a ^ oc(u).
struct Downset {
  OmlPtr lattice;
  OmlPtr ambient;
  int rep;                       // the element whose downset this is
  std::vector<int> to_ambient;   // downset index -> ambient index
  std::vector<int> from_ambient; // ambient index -> downset index or -1
};

inline Downset downset_oml(const OmlPtr& amb, int a) {
  const FiniteOML& l = *amb;
  Downset d;
  d.ambient = amb;
  d.rep = a;
  d.from_ambient.assign(l.size(), -1);
  RawOML raw;
  for (int u = 0; u < l.size(); ++u) {
    if (!l.leq(u, a)) continue;
    d.from_ambient[u] = static_cast<int>(d.to_ambient.size());
    d.to_ambient.push_back(u);
    raw.elements.push_back(l.id(u));
  }
  for (int u : d.to_ambient)
    for (int v : d.to_ambient)
      if (l.leq(u, v)) raw.leq.emplace_back(l.id(u), l.id(v));
  for (int u : d.to_ambient) raw.oc.emplace_back(l.id(u), l.id(l.meet(a, l.oc(u))));
  ValidationReport rep;
  d.lattice = build_oml(raw, &rep);
  if (!d.lattice) throw std::logic_error("downset of a valid lattice failed validation");
  return d;
}

}  // namespace omlgal
