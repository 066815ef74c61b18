#pragma once

// Command-line front end.  run_cli is the whole program: the binary's main
// forwards argv and streams.  Exit codes: 0 all checks passed, 1 a law or
// axiom failed, 2 malformed input (file or command line), 3 a resource cap
// was exceeded.

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "io.hpp"
#include "laws.hpp"

namespace omlgal {

namespace detail {

inline nlohmann::json to_json(const std::string& title, const ValidationReport& rep) {
  nlohmann::json j;
  j["title"] = title;
  j["ok"] = rep.ok();
  j["structural"] = rep.structural;
  j["violations"] = nlohmann::json::array();
  for (const auto& v : rep.violations)
    j["violations"].push_back({{"axiom", v.axiom}, {"witness", v.witness}});
  return j;
}

inline nlohmann::json to_json(const RunReport& rep) {
  nlohmann::json j;
  j["command"] = rep.command;
  j["corpus"] = rep.corpus;
  j["ok"] = rep.ok();
  j["laws"] = nlohmann::json::array();
  for (const auto& r : rep.results) {
    nlohmann::json l;
    l["name"] = r.name;
    l["pass"] = r.pass;
    l["exhaustive"] = r.coverage.exhaustive;
    l["checked"] = r.coverage.checked;
    if (!r.coverage.exhaustive) l["seed"] = r.coverage.seed;
    if (!r.pass) l["witness"] = r.witness;
    j["laws"].push_back(std::move(l));
  }
  return j;
}

// Build a validated lattice from a file, or report why not.
inline OmlPtr cli_load_lattice(const std::filesystem::path& path, ValidationReport& rep) {
  RawOML raw = load_oml(path);
  return build_oml(raw, &rep);
}

}  // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite workbench for orthomodular lattices, Galois morphisms, "
               "dagger kernel categories and Foulis semigroups"};
  app.name("omlgal");
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  int max_size = kDefaultMaxLattice;
  std::size_t hom_cap = 20000;
  bool json = false;
  std::string out_path;

  auto add_flags = [&](CLI::App* sub, bool with_out) {
    sub->add_option("--seed", seed, "seed for sampled checks");
    sub->add_option("--max-size", max_size, "cap on constructed carrier sizes");
    sub->add_option("--hom-cap", hom_cap, "cap on enumerated hom-set sizes");
    sub->add_flag("--json", json, "emit a JSON report");
    if (with_out) sub->add_option("--out", out_path, "write the artifact to this file");
  };

  std::string kind, file, arg2;
  std::vector<std::string> rest;

  CLI::App* check = app.add_subcommand("check", "validate a file against its format's axioms");
  check->add_option("kind", kind, "oml | foulis | gal | dkc")->required();
  check->add_option("file", file, "input file")->required();
  add_flags(check, false);

  CLI::App* gen = app.add_subcommand("gen", "generate an artifact in one of the file formats");
  gen->add_option("kind", kind, "mo | bool | freeoml | downset | endo | karoubi | ksub")
      ->required();
  gen->add_option("args", rest, "generator arguments")->expected(-1);
  add_flags(gen, true);

  CLI::App* rt = app.add_subcommand("roundtrip", "parse, serialize and re-parse a file");
  rt->add_option("kind", kind, "oml | foulis | gal | dkc")->required();
  rt->add_option("file", file, "input file")->required();
  add_flags(rt, false);

  CLI::App* laws = app.add_subcommand("laws", "run a named law suite over built-in corpora");
  laws->add_option("suite", kind, "omlatgal | rel | karoubi | foulis | ksubfunctor")->required();
  add_flags(laws, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      std::ostringstream help;
      help << app.help();
      out << help.str();
      return 0;
    }
    err << "argument error: " << e.what() << "\n";
    return 2;
  }

  auto emit = [&](const std::string& text) {
    if (out_path.empty()) {
      out << text;
    } else {
      save_text(out_path, text);
      out << "wrote " << out_path << "\n";
    }
  };

  try {
    if (app.got_subcommand(check)) {
      const std::string title = "check " + kind + " " + file;
      if (kind == "oml") {
        ValidationReport rep = check_orthomodular(load_oml(file));
        if (json)
          out << detail::to_json(title, rep).dump(2) << "\n";
        else
          out << render_text(title, rep);
        return rep.ok() ? 0 : 1;
      }
      if (kind == "foulis") {
        ValidationReport rep = check_foulis(load_foulis(file));
        if (json)
          out << detail::to_json(title, rep).dump(2) << "\n";
        else
          out << render_text(title, rep);
        return rep.ok() ? 0 : 1;
      }
      if (kind == "gal") {
        ValidationReport rep;
        std::optional<GaloisMorphism> m = load_gal(file, &rep);
        if (json)
          out << detail::to_json(title, rep).dump(2) << "\n";
        else
          out << render_text(title, rep);
        return m && rep.ok() ? 0 : 1;
      }
      if (kind == "dkc") {
        FinCategory c = load_dkc(file);
        CheckCaps caps;
        caps.seed = seed;
        RunReport rep = check_dagger_kernel_category(c, caps);
        rep.command = title;
        rep.corpus = c.name;
        if (json)
          out << detail::to_json(rep).dump(2) << "\n";
        else
          out << render_text(rep);
        return rep.ok() ? 0 : 1;
      }
      err << "argument error: unknown check kind '" << kind << "'\n";
      return 2;
    }

    if (app.got_subcommand(gen)) {
      EnumLimits lim;
      lim.hom_cap = hom_cap;
      lim.seed = seed;
      if (kind == "mo" || kind == "bool") {
        if (rest.size() != 1) {
          err << "argument error: gen " << kind << " takes one count\n";
          return 2;
        }
        int n = -1;
        try {
          n = std::stoi(rest[0]);
        } catch (const std::exception&) {
          n = -1;
        }
        if (n < 0) {
          err << "argument error: '" << rest[0] << "' is not a count\n";
          return 2;
        }
        OmlPtr l = kind == "mo" ? mo_lattice(n, max_size) : boolean_lattice(n, max_size);
        emit(write_oml(*l));
        return 0;
      }
      if (kind == "freeoml") {
        if (rest.empty()) {
          err << "argument error: gen freeoml takes atom names\n";
          return 2;
        }
        emit(write_oml(*free_oml(rest, max_size)));
        return 0;
      }
      if (kind == "downset") {
        if (rest.size() != 2) {
          err << "argument error: gen downset takes a lattice file and an element\n";
          return 2;
        }
        file = rest[0];
        ValidationReport rep;
        OmlPtr l = detail::cli_load_lattice(rest[0], rep);
        if (!l) {
          err << render_text("invalid lattice " + rest[0], rep);
          return 1;
        }
        int a = l->index(rest[1]);
        if (a < 0) {
          err << "argument error: no element '" << rest[1] << "' in " << rest[0] << "\n";
          return 2;
        }
        emit(write_oml(*downset_oml(l, a).lattice));
        return 0;
      }
      if (kind == "endo") {
        if (rest.size() != 1) {
          err << "argument error: gen endo takes a lattice file\n";
          return 2;
        }
        file = rest[0];
        ValidationReport rep;
        OmlPtr l = detail::cli_load_lattice(rest[0], rep);
        if (!l) {
          err << render_text("invalid lattice " + rest[0], rep);
          return 1;
        }
        emit(write_foulis(endo_semigroup(l, lim).sg));
        return 0;
      }
      if (kind == "karoubi") {
        if (rest.size() != 1) {
          err << "argument error: gen karoubi takes a foulis file\n";
          return 2;
        }
        file = rest[0];
        FoulisSemigroup sg = load_foulis(rest[0]);
        ValidationReport rep = check_foulis(sg);
        if (!rep.ok()) {
          err << render_text("invalid foulis semigroup " + rest[0], rep);
          return 1;
        }
        FoulisEnvelope env =
            dagger_karoubi_of_foulis(sg, static_cast<std::size_t>(max_size) * 4);
        emit(write_dkc(env.cat));
        return 0;
      }
      if (kind == "ksub") {
        if (rest.size() != 2) {
          err << "argument error: gen ksub takes a foulis file and an element\n";
          return 2;
        }
        file = rest[0];
        FoulisSemigroup sg = load_foulis(rest[0]);
        ValidationReport rep = check_foulis(sg);
        if (!rep.ok()) {
          err << render_text("invalid foulis semigroup " + rest[0], rep);
          return 1;
        }
        int s = -1;
        for (int i = 0; i < sg.size(); ++i)
          if (sg.elements[i] == rest[1]) s = i;
        if (s < 0) {
          err << "argument error: no element '" << rest[1] << "' in " << rest[0] << "\n";
          return 2;
        }
        if (sg.inv[s] != s || sg.mul[s][s] != s) {
          err << "argument error: '" << rest[1] << "' is not a self-adjoint idempotent\n";
          return 2;
        }
        KsLattice kl = k_s_lattice(sg, s);
        if (!kl.report.ok() || !kl.lattice) {
          err << render_text("kernel lattice at " + rest[1], kl.report);
          return 1;
        }
        emit(write_oml(*kl.lattice));
        return 0;
      }
      err << "argument error: unknown generator '" << kind << "'\n";
      return 2;
    }

    if (app.got_subcommand(rt)) {
      const std::string title = "roundtrip " + kind + " " + file;
      auto verdict = [&](bool ok) {
        if (json)
          out << nlohmann::json{{"title", title}, {"ok", ok}}.dump(2) << "\n";
        else
          out << title << ": " << (ok ? "PASS" : "FAIL") << "\n";
        return ok ? 0 : 1;
      };
      if (kind == "oml") {
        ValidationReport rep;
        OmlPtr l1 = detail::cli_load_lattice(file, rep);
        if (!l1) {
          err << render_text("invalid lattice " + file, rep);
          return 1;
        }
        std::istringstream in(write_oml(*l1));
        OmlPtr l2 = build_oml(parse_oml(in));
        return verdict(l2 && same_lattice(*l1, *l2));
      }
      if (kind == "foulis") {
        FoulisSemigroup s1 = load_foulis(file);
        ValidationReport rep;
        if (!detail::foulis_tables_ok(s1, rep)) {
          err << render_text("incomplete tables in " + file, rep);
          return 1;
        }
        std::istringstream in(write_foulis(s1));
        FoulisSemigroup s2 = parse_foulis(in);
        return verdict(s1.elements == s2.elements && s1.unit == s2.unit && s1.mul == s2.mul &&
                       s1.inv == s2.inv && s1.focus == s2.focus);
      }
      if (kind == "gal") {
        ValidationReport rep;
        std::optional<GaloisMorphism> m = load_gal(file, &rep);
        if (!m) {
          err << render_text("invalid morphism " + file, rep);
          return 1;
        }
        std::ifstream orig(file);
        GalFile gf = parse_gal(orig);
        std::istringstream in(write_gal(*m, gf.src_path, gf.dst_path));
        GalFile gf2 = parse_gal(in);
        std::vector<int> lower(m->src()->size(), -1);
        for (const auto& [line, x, y] : gf2.lower) {
          (void)line;
          int xi = m->src()->index(x), yi = m->dst()->index(y);
          if (xi < 0 || yi < 0) return verdict(false);
          lower[xi] = yi;
        }
        return verdict(gf2.src_path == gf.src_path && gf2.dst_path == gf.dst_path &&
                       lower == m->lower_table());
      }
      if (kind == "dkc") {
        FinCategory c1 = load_dkc(file);
        std::istringstream in(write_dkc(c1));
        FinCategory c2 = parse_dkc(in);
        bool ok = c1.objects == c2.objects && c1.identity == c2.identity &&
                  c1.zero_object == c2.zero_object && c1.dagger == c2.dagger &&
                  c1.kernel == c2.kernel && c1.arrows.size() == c2.arrows.size();
        for (std::size_t a = 0; ok && a < c1.arrows.size(); ++a)
          ok = c1.arrows[a].id == c2.arrows[a].id && c1.arrows[a].src == c2.arrows[a].src &&
               c1.arrows[a].dst == c2.arrows[a].dst;
        for (std::size_t f = 0; ok && f < c1.arrows.size(); ++f)
          for (int g : c1.out_arrows[c1.arrows[f].dst])
            if (c1.compose(g, static_cast<int>(f)) != c2.compose(g, static_cast<int>(f))) {
              ok = false;
              break;
            }
        return verdict(ok);
      }
      err << "argument error: unknown roundtrip kind '" << kind << "'\n";
      return 2;
    }

    if (app.got_subcommand(laws)) {
      SuiteConfig cfg;
      cfg.seed = seed;
      cfg.max_size = max_size;
      cfg.hom_cap = hom_cap;
      RunReport rep;
      if (kind == "omlatgal")
        rep = laws_omlatgal(cfg);
      else if (kind == "rel")
        rep = laws_rel(cfg);
      else if (kind == "karoubi")
        rep = laws_karoubi(cfg);
      else if (kind == "foulis")
        rep = laws_foulis(cfg);
      else if (kind == "ksubfunctor")
        rep = laws_ksubfunctor(cfg);
      else {
        err << "argument error: unknown law suite '" << kind << "'\n";
        return 2;
      }
      if (json)
        out << detail::to_json(rep).dump(2) << "\n";
      else
        out << render_text(rep);
      return rep.ok() ? 0 : 1;
    }
  } catch (const ParseError& e) {
    err << "parse error in " << file << ": " << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    err << "resource cap exceeded: " << e.what() << "\n";
    return 3;
  }

  err << "argument error: no subcommand\n";
  return 2;
}

}  // namespace omlgal
