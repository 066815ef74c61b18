#pragma once

#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "omlgal/dagcat.hpp"
#include "omlgal/foulis.hpp"
#include "omlgal/galois.hpp"
#include "omlgal/oml.hpp"
#include "omlgal/report.hpp"

namespace omlgal {

namespace detail {

struct TokenLine {
  int line = 0;
  std::vector<std::string> tokens;
};

// Tokenizes a whole stream: whitespace-separated tokens, '#' starts a
// comment, blank lines are dropped.
inline std::vector<TokenLine> tokenize(std::istream& in) {
  std::vector<TokenLine> out;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ss(raw);
    TokenLine tl;
    tl.line = lineno;
    std::string tok;
    while (ss >> tok) tl.tokens.push_back(tok);
    if (!tl.tokens.empty()) out.push_back(std::move(tl));
  }
  return out;
}

inline void expect_header(const std::vector<TokenLine>& lines, const std::string& kind) {
  if (lines.empty()) throw ParseError(1, "empty file, expected '" + kind + " v1' header");
  const auto& h = lines.front();
  if (h.tokens.size() != 2 || h.tokens[0] != kind || h.tokens[1] != "v1")
    throw ParseError(h.line, "expected '" + kind + " v1' header");
}

inline void expect_arity(const TokenLine& tl, std::size_t n) {
  if (tl.tokens.size() != n)
    throw ParseError(tl.line, "'" + tl.tokens[0] + "' takes " + std::to_string(n - 1) +
                                  " arguments");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// oml v1:  elem <id> | le <x> <y> | oc <x> <y>

inline RawOML parse_oml(std::istream& in) {
  auto lines = detail::tokenize(in);
  detail::expect_header(lines, "oml");
  RawOML raw;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& tl = lines[i];
    const auto& op = tl.tokens[0];
    if (op == "elem") {
      detail::expect_arity(tl, 2);
      raw.elements.push_back(tl.tokens[1]);
    } else if (op == "le") {
      detail::expect_arity(tl, 3);
      raw.leq.emplace_back(tl.tokens[1], tl.tokens[2]);
    } else if (op == "oc") {
      detail::expect_arity(tl, 3);
      raw.oc.emplace_back(tl.tokens[1], tl.tokens[2]);
    } else {
      throw ParseError(tl.line, "unknown directive '" + op + "'");
    }
  }
  return raw;
}

inline RawOML load_oml(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  return parse_oml(in);
}

// Canonical text: elements in index order, covering pairs of the order,
// full orthocomplement table.
inline std::string write_oml(const FiniteOML& l) {
  std::ostringstream out;
  out << "oml v1\n";
  for (int i = 0; i < l.size(); ++i) out << "elem " << l.id(i) << "\n";
  for (int i = 0; i < l.size(); ++i)
    for (int j = 0; j < l.size(); ++j) {
      if (i == j || !l.leq(i, j)) continue;
      bool covering = true;
      for (int k = 0; k < l.size() && covering; ++k)
        if (k != i && k != j && l.leq(i, k) && l.leq(k, j)) covering = false;
      if (covering) out << "le " << l.id(i) << " " << l.id(j) << "\n";
    }
  for (int i = 0; i < l.size(); ++i) out << "oc " << l.id(i) << " " << l.id(l.oc(i)) << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// gal v1:  src <oml-file> | dst <oml-file> | lower <x> <y>
// File references are resolved relative to the gal file's directory.

struct GalFile {
  std::string src_path, dst_path;
  std::vector<std::tuple<int, std::string, std::string>> lower;  // (line, x, y)
};

inline GalFile parse_gal(std::istream& in) {
  auto lines = detail::tokenize(in);
  detail::expect_header(lines, "gal");
  GalFile g;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& tl = lines[i];
    const auto& op = tl.tokens[0];
    if (op == "src") {
      detail::expect_arity(tl, 2);
      if (!g.src_path.empty()) throw ParseError(tl.line, "duplicate 'src'");
      g.src_path = tl.tokens[1];
    } else if (op == "dst") {
      detail::expect_arity(tl, 2);
      if (!g.dst_path.empty()) throw ParseError(tl.line, "duplicate 'dst'");
      g.dst_path = tl.tokens[1];
    } else if (op == "lower") {
      detail::expect_arity(tl, 3);
      g.lower.emplace_back(tl.line, tl.tokens[1], tl.tokens[2]);
    } else {
      throw ParseError(tl.line, "unknown directive '" + op + "'");
    }
  }
  if (g.src_path.empty()) throw ParseError(0, "missing 'src' line");
  if (g.dst_path.empty()) throw ParseError(0, "missing 'dst' line");
  return g;
}

// Loads and validates a Galois morphism: both lattices must be orthomodular
// and the lower table must have a right adjoint.  nullopt with a filled
// report on validation failure; ParseError on malformed files or unknown ids.
inline std::optional<GaloisMorphism> load_gal(const std::filesystem::path& path,
                                              ValidationReport* report = nullptr) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  GalFile g = parse_gal(in);
  const auto dir = path.parent_path();

  ValidationReport local;
  ValidationReport& rep = report ? *report : local;
  auto load_side = [&](const std::string& rel, const char* which) -> OmlPtr {
    ValidationReport sub;
    OmlPtr l = build_oml(load_oml(dir / rel), &sub);
    if (!l) {
      rep.structural_error(std::string(which) + " lattice " + rel + " is not orthomodular");
      rep.merge(sub);
    }
    return l;
  };
  OmlPtr src = load_side(g.src_path, "source");
  OmlPtr dst = load_side(g.dst_path, "target");
  if (!src || !dst) return std::nullopt;

  std::vector<int> lower(src->size(), -1);
  for (const auto& [line, xs, ys] : g.lower) {
    int x = src->index(xs);
    int y = dst->index(ys);
    if (x < 0) throw ParseError(line, "unknown source element '" + xs + "'");
    if (y < 0) throw ParseError(line, "unknown target element '" + ys + "'");
    if (lower[x] != -1) throw ParseError(line, "duplicate 'lower' for '" + xs + "'");
    lower[x] = y;
  }
  for (int x = 0; x < src->size(); ++x)
    if (lower[x] < 0) {
      rep.structural_error("missing 'lower' value for '" + src->id(x) + "'");
      return std::nullopt;
    }
  return GaloisMorphism::make(src, dst, std::move(lower), &rep);
}

inline std::string write_gal(const GaloisMorphism& m, const std::string& src_path,
                             const std::string& dst_path) {
  std::ostringstream out;
  out << "gal v1\n";
  out << "src " << src_path << "\n";
  out << "dst " << dst_path << "\n";
  for (int x = 0; x < m.src()->size(); ++x)
    out << "lower " << m.src()->id(x) << " " << m.dst()->id(m.lower(x)) << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// foulis v1:  elem <id> | unit <e> | mul <a> <b> <c> | inv <a> <b> | focus <a> <b>

inline FoulisSemigroup parse_foulis(std::istream& in) {
  auto lines = detail::tokenize(in);
  detail::expect_header(lines, "foulis");
  FoulisSemigroup s;
  std::map<std::string, int> idx;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& tl = lines[i];
    if (tl.tokens[0] != "elem") continue;
    detail::expect_arity(tl, 2);
    if (idx.count(tl.tokens[1])) throw ParseError(tl.line, "duplicate element");
    idx[tl.tokens[1]] = static_cast<int>(s.elements.size());
    s.elements.push_back(tl.tokens[1]);
  }
  const int n = static_cast<int>(s.elements.size());
  s.mul.assign(n, std::vector<int>(n, -1));
  s.inv.assign(n, -1);
  s.focus.assign(n, -1);

  auto bind = [&](const detail::TokenLine& tl, const std::string& name) {
    auto it = idx.find(name);
    if (it == idx.end()) throw ParseError(tl.line, "unknown element '" + name + "'");
    return it->second;
  };
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& tl = lines[i];
    const auto& op = tl.tokens[0];
    if (op == "elem") continue;
    if (op == "unit") {
      detail::expect_arity(tl, 2);
      if (s.unit != -1) throw ParseError(tl.line, "duplicate 'unit'");
      s.unit = bind(tl, tl.tokens[1]);
    } else if (op == "mul") {
      detail::expect_arity(tl, 4);
      int a = bind(tl, tl.tokens[1]), b = bind(tl, tl.tokens[2]), c = bind(tl, tl.tokens[3]);
      if (s.mul[a][b] != -1) throw ParseError(tl.line, "duplicate 'mul' entry");
      s.mul[a][b] = c;
    } else if (op == "inv") {
      detail::expect_arity(tl, 3);
      int a = bind(tl, tl.tokens[1]);
      if (s.inv[a] != -1) throw ParseError(tl.line, "duplicate 'inv' entry");
      s.inv[a] = bind(tl, tl.tokens[2]);
    } else if (op == "focus") {
      detail::expect_arity(tl, 3);
      int a = bind(tl, tl.tokens[1]);
      if (s.focus[a] != -1) throw ParseError(tl.line, "duplicate 'focus' entry");
      s.focus[a] = bind(tl, tl.tokens[2]);
    } else {
      throw ParseError(tl.line, "unknown directive '" + op + "'");
    }
  }
  return s;  // incomplete tables are reported by the semigroup validator
}

inline FoulisSemigroup load_foulis(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  FoulisSemigroup s = parse_foulis(in);
  if (s.name.empty()) s.name = path.stem().string();
  return s;
}

inline std::string write_foulis(const FoulisSemigroup& s) {
  std::ostringstream out;
  out << "foulis v1\n";
  for (const auto& e : s.elements) out << "elem " << e << "\n";
  out << "unit " << s.elements[s.unit] << "\n";
  for (int a = 0; a < s.size(); ++a)
    for (int b = 0; b < s.size(); ++b)
      out << "mul " << s.elements[a] << " " << s.elements[b] << " "
          << s.elements[s.mul[a][b]] << "\n";
  for (int a = 0; a < s.size(); ++a)
    out << "inv " << s.elements[a] << " " << s.elements[s.inv[a]] << "\n";
  for (int a = 0; a < s.size(); ++a)
    out << "focus " << s.elements[a] << " " << s.elements[s.focus[a]] << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// dkc v1:  obj <name> | zero <name> | arrow <id> <src> <dst> | id <obj> <arrow>
//          | compose <g> <f> <h>  (g o f = h) | dagger <f> <g> | kernel <f> <k>
//
// The composition table must be total on composable pairs; identities, the
// zero object, dagger and kernel lines are required.  Law violations (for
// instance a badly typed dagger) are deliberately representable: the
// conformance checker, not the parser, rejects them.

inline FinCategory parse_dkc(std::istream& in) {
  auto lines = detail::tokenize(in);
  detail::expect_header(lines, "dkc");
  FinCategory c;
  c.name = "dkc";
  std::map<std::string, int> objidx, arridx;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& tl = lines[i];
    const auto& op = tl.tokens[0];
    if (op == "obj") {
      detail::expect_arity(tl, 2);
      if (objidx.count(tl.tokens[1])) throw ParseError(tl.line, "duplicate object");
      objidx[tl.tokens[1]] = static_cast<int>(c.objects.size());
      c.objects.push_back(tl.tokens[1]);
    } else if (op == "arrow") {
      detail::expect_arity(tl, 4);
      if (arridx.count(tl.tokens[1])) throw ParseError(tl.line, "duplicate arrow");
      arridx[tl.tokens[1]] = static_cast<int>(c.arrows.size());
      c.arrows.push_back({tl.tokens[1], -1, -1});  // endpoints bound in pass 2
    }
  }

  auto obj = [&](const detail::TokenLine& tl, const std::string& name) {
    auto it = objidx.find(name);
    if (it == objidx.end()) throw ParseError(tl.line, "unknown object '" + name + "'");
    return it->second;
  };
  auto arr = [&](const detail::TokenLine& tl, const std::string& name) {
    auto it = arridx.find(name);
    if (it == arridx.end()) throw ParseError(tl.line, "unknown arrow '" + name + "'");
    return it->second;
  };

  const int narr = static_cast<int>(c.arrows.size());
  c.identity.assign(c.objects.size(), -1);
  c.dagger.assign(narr, -1);
  c.kernel.assign(narr, -1);
  auto table = std::make_shared<std::vector<std::vector<int>>>(narr,
                                                               std::vector<int>(narr, -1));
  std::vector<detail::TokenLine> compose_lines;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& tl = lines[i];
    const auto& op = tl.tokens[0];
    if (op == "obj") continue;
    if (op == "arrow") {
      int a = arridx.at(tl.tokens[1]);
      c.arrows[a].src = obj(tl, tl.tokens[2]);
      c.arrows[a].dst = obj(tl, tl.tokens[3]);
    } else if (op == "zero") {
      detail::expect_arity(tl, 2);
      if (c.zero_object != -1) throw ParseError(tl.line, "duplicate 'zero'");
      c.zero_object = obj(tl, tl.tokens[1]);
    } else if (op == "id") {
      detail::expect_arity(tl, 3);
      int x = obj(tl, tl.tokens[1]);
      if (c.identity[x] != -1) throw ParseError(tl.line, "duplicate 'id' entry");
      c.identity[x] = arr(tl, tl.tokens[2]);
    } else if (op == "compose") {
      detail::expect_arity(tl, 4);
      compose_lines.push_back(tl);  // bound after arrow endpoints are known
    } else if (op == "dagger") {
      detail::expect_arity(tl, 3);
      int f = arr(tl, tl.tokens[1]);
      if (c.dagger[f] != -1) throw ParseError(tl.line, "duplicate 'dagger' entry");
      c.dagger[f] = arr(tl, tl.tokens[2]);
    } else if (op == "kernel") {
      detail::expect_arity(tl, 3);
      int f = arr(tl, tl.tokens[1]);
      if (c.kernel[f] != -1) throw ParseError(tl.line, "duplicate 'kernel' entry");
      c.kernel[f] = arr(tl, tl.tokens[2]);
    } else {
      throw ParseError(tl.line, "unknown directive '" + op + "'");
    }
  }
  for (const auto& tl : compose_lines) {
    int g = arr(tl, tl.tokens[1]), f = arr(tl, tl.tokens[2]), h = arr(tl, tl.tokens[3]);
    if (c.arrows[f].dst != c.arrows[g].src)
      throw ParseError(tl.line, "'" + tl.tokens[1] + " o " + tl.tokens[2] +
                                    "' is not composable");
    if ((*table)[g][f] != -1) throw ParseError(tl.line, "duplicate 'compose' entry");
    (*table)[g][f] = h;
  }

  // Totality: every structural table must be complete.
  if (c.zero_object < 0) throw ParseError(0, "missing 'zero' line");
  for (std::size_t x = 0; x < c.objects.size(); ++x)
    if (c.identity[x] < 0) throw ParseError(0, "missing 'id' for object " + c.objects[x]);
  for (int a = 0; a < narr; ++a) {
    if (c.dagger[a] < 0) throw ParseError(0, "missing 'dagger' for arrow " + c.arrows[a].id);
    if (c.kernel[a] < 0) throw ParseError(0, "missing 'kernel' for arrow " + c.arrows[a].id);
  }
  for (int f = 0; f < narr; ++f)
    for (int g = 0; g < narr; ++g)
      if (c.arrows[f].dst == c.arrows[g].src && (*table)[g][f] < 0)
        throw ParseError(0, "missing 'compose' for " + c.arrows[g].id + " o " +
                                c.arrows[f].id);

  c.finalize();
  c.compose_raw = [table](int g, int f) { return (*table)[g][f]; };
  return c;
}

inline FinCategory load_dkc(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  FinCategory c = parse_dkc(in);
  c.name = path.stem().string();
  return c;
}

inline std::string write_dkc(const FinCategory& c) {
  std::ostringstream out;
  out << "dkc v1\n";
  for (const auto& o : c.objects) out << "obj " << o << "\n";
  if (c.zero_object >= 0) out << "zero " << c.objects[c.zero_object] << "\n";
  for (const auto& a : c.arrows)
    out << "arrow " << a.id << " " << c.objects[a.src] << " " << c.objects[a.dst] << "\n";
  for (std::size_t x = 0; x < c.objects.size(); ++x)
    out << "id " << c.objects[x] << " " << c.arrows[c.identity[x]].id << "\n";
  for (std::size_t a = 0; a < c.arrows.size(); ++a) {
    if (c.has_dagger()) out << "dagger " << c.arrows[a].id << " " << c.arrows[c.dagger[a]].id
                            << "\n";
    if (c.has_kernels()) out << "kernel " << c.arrows[a].id << " " << c.arrows[c.kernel[a]].id
                             << "\n";
  }
  for (int f = 0; f < static_cast<int>(c.arrows.size()); ++f)
    for (int g : c.out_arrows[c.arrows[f].dst])
      out << "compose " << c.arrows[g].id << " " << c.arrows[f].id << " "
          << c.arrows[c.compose_raw(g, f)].id << "\n";
  return out.str();
}

inline void save_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

}  // namespace omlgal
