#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "omlgal/dagcat.hpp"
#include "omlgal/report.hpp"

namespace omlgal {

// A relation between finite sets {0..src-1} and {0..dst-1}, stored as a
// bitmask with bit i*dst+j meaning (i, j) is related.  src*dst <= 64.
struct FinRel {
  int src = 0, dst = 0;
  std::uint64_t mask = 0;

  FinRel() = default;
  FinRel(int m, int n, std::uint64_t bits = 0) : src(m), dst(n), mask(bits) {
    if (m < 0 || n < 0 || static_cast<long long>(m) * n > 64)
      throw CapExceeded("relation carrier exceeds 64 pairs");
  }

  static FinRel identity(int n) {
    FinRel r(n, n);
    for (int i = 0; i < n; ++i) r.set(i, i);
    return r;
  }

  bool at(int i, int j) const { return (mask >> (i * dst + j)) & 1; }
  FinRel& set(int i, int j, bool v = true) {
    std::uint64_t bit = std::uint64_t{1} << (i * dst + j);
    mask = v ? (mask | bit) : (mask & ~bit);
    return *this;
  }

  friend bool operator==(const FinRel& a, const FinRel& b) {
    return a.src == b.src && a.dst == b.dst && a.mask == b.mask;
  }
};

inline FinRel compose(const FinRel& g, const FinRel& f) {
  if (f.dst != g.src) throw std::invalid_argument("compose: relation carriers disagree");
  FinRel r(f.src, g.dst);
  for (int i = 0; i < f.src; ++i)
    for (int j = 0; j < f.dst; ++j)
      if (f.at(i, j))
        for (int k = 0; k < g.dst; ++k)
          if (g.at(j, k)) r.set(i, k);
  return r;
}

inline FinRel converse(const FinRel& f) {
  FinRel r(f.dst, f.src);
  for (int i = 0; i < f.src; ++i)
    for (int j = 0; j < f.dst; ++j)
      if (f.at(i, j)) r.set(j, i);
  return r;
}

// Symmetric and idempotent endo-relation: a partial equivalence relation.
inline bool is_per(const FinRel& r) {
  return r.src == r.dst && converse(r) == r && compose(r, r) == r;
}

// The graph of a function {0..|f|-1} -> {0..dst-1}.
inline FinRel graph(const std::vector<int>& f, int dst) {
  FinRel r(static_cast<int>(f.size()), dst);
  for (int i = 0; i < r.src; ++i) r.set(i, f[i]);
  return r;
}

// Kernel of R : X -> Y is the inclusion of the rows that relate to nothing.
inline FinRel kernel_inclusion(const FinRel& f) {
  std::vector<int> rows;
  for (int i = 0; i < f.src; ++i) {
    bool empty = true;
    for (int j = 0; j < f.dst && empty; ++j)
      if (f.at(i, j)) empty = false;
    if (empty) rows.push_back(i);
  }
  return graph(rows, f.src);
}

// ---------------------------------------------------------------------------
// Skeletal materialization: objects are the sizes 0..max_size, arrows are all
// relations between them, composition is a dense table.

struct MaterializedRel {
  FinCategory cat;
  std::vector<FinRel> rels;  // parallel to cat.arrows
  std::map<std::tuple<int, int, std::uint64_t>, int> arrow_index;

  int index_of(const FinRel& r) const {
    auto it = arrow_index.find({r.src, r.dst, r.mask});
    if (it == arrow_index.end()) throw std::logic_error("relation not in materialized category");
    return it->second;
  }
};

inline MaterializedRel materialize_rel(int max_size) {
  if (max_size < 0 || max_size > 3) throw CapExceeded("relation category cap is size 3");
  MaterializedRel m;
  m.cat.name = "rel<=" + std::to_string(max_size);
  const int n = max_size + 1;
  for (int i = 0; i < n; ++i) m.cat.objects.push_back(std::to_string(i));

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::uint64_t count = std::uint64_t{1} << (i * j);
      for (std::uint64_t mask = 0; mask < count; ++mask) {
        int idx = static_cast<int>(m.cat.arrows.size());
        m.cat.arrows.push_back({"r" + std::to_string(i) + "x" + std::to_string(j) + "_" +
                                    std::to_string(mask),
                                i, j});
        m.rels.emplace_back(i, j, mask);
        m.arrow_index[{i, j, mask}] = idx;
      }
    }
  m.cat.finalize();

  m.cat.identity.resize(n);
  for (int i = 0; i < n; ++i) m.cat.identity[i] = m.index_of(FinRel::identity(i));
  m.cat.zero_object = 0;

  const int narr = static_cast<int>(m.cat.arrows.size());
  m.cat.dagger.resize(narr);
  m.cat.kernel.resize(narr);
  for (int a = 0; a < narr; ++a) {
    m.cat.dagger[a] = m.index_of(converse(m.rels[a]));
    m.cat.kernel[a] = m.index_of(kernel_inclusion(m.rels[a]));
  }

  auto table = std::make_shared<std::vector<std::vector<int>>>(narr, std::vector<int>(narr, -1));
  for (int f = 0; f < narr; ++f)
    for (int g : m.cat.out_arrows[m.cat.arrows[f].dst])
      (*table)[g][f] = m.index_of(compose(m.rels[g], m.rels[f]));
  m.cat.compose_raw = [table](int g, int f) { return (*table)[g][f]; };
  return m;
}

}  // namespace omlgal
