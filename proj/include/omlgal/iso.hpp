#pragma once

#include <optional>
#include <tuple>
#include <vector>

#include "omlgal/oml.hpp"

namespace omlgal {

// Backtracking search for an order-and-orthocomplement isomorphism A -> B.
// Elements are tried in index order, so the first hit is the
// lexicographically least isomorphism and the result is deterministic.
inline std::optional<std::vector<int>> find_oml_iso(const FiniteOML& a, const FiniteOML& b) {
  const int n = a.size();
  if (n != b.size()) return std::nullopt;

  // Cheap per-element invariant: sizes of down/up sets, of the
  // orthocomplement's down set.
  auto signature = [](const FiniteOML& l, int x) {
    int down = 0, up = 0, ocdown = 0;
    for (int y = 0; y < l.size(); ++y) {
      if (l.leq(y, x)) ++down;
      if (l.leq(x, y)) ++up;
      if (l.leq(y, l.oc(x))) ++ocdown;
    }
    return std::tuple<int, int, int>(down, up, ocdown);
  };
  std::vector<std::tuple<int, int, int>> siga(n), sigb(n);
  for (int i = 0; i < n; ++i) siga[i] = signature(a, i);
  for (int i = 0; i < n; ++i) sigb[i] = signature(b, i);

  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);

  auto consistent = [&](int x, int y) {
    if (siga[x] != sigb[y]) return false;
    for (int p = 0; p < x; ++p) {
      if (a.leq(p, x) != b.leq(map[p], y)) return false;
      if (a.leq(x, p) != b.leq(y, map[p])) return false;
      if (a.oc(p) == x && b.oc(map[p]) != y) return false;
      if (a.oc(x) == p && b.oc(y) != map[p]) return false;
    }
    return true;
  };

  auto rec = [&](auto&& self, int x) -> bool {
    if (x == n) return true;
    for (int y = 0; y < n; ++y) {
      if (used[y] || !consistent(x, y)) continue;
      map[x] = y;
      used[y] = 1;
      if (self(self, x + 1)) return true;
      used[y] = 0;
      map[x] = -1;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return map;
}

}  // namespace omlgal
