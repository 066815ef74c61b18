#pragma once

#include <cstdint>
#include <deque>
#include <stdexcept>
#include <string>
#include <vector>

namespace omlgal {

// A single broken axiom or law, with a human-readable witness.
struct Violation {
  std::string axiom;
  std::string witness;
};

// Result of validating one structure (lattice, morphism, semigroup, ...).
// `structural` holds errors that make axiom checks meaningless
// (undeclared identifiers, ragged tables); `violations` holds axiom
// failures with witnesses.  Empty report == valid.
struct ValidationReport {
  std::vector<std::string> structural;
  std::vector<Violation> violations;

  bool ok() const { return structural.empty() && violations.empty(); }

  bool violated(const std::string& axiom) const {
    for (const auto& v : violations)
      if (v.axiom == axiom) return true;
    return false;
  }

  void structural_error(std::string msg) { structural.push_back(std::move(msg)); }
  void violation(std::string axiom, std::string witness) {
    violations.push_back({std::move(axiom), std::move(witness)});
  }

  void merge(const ValidationReport& other) {
    structural.insert(structural.end(), other.structural.begin(), other.structural.end());
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  }
};

// Coverage of one law check: exhaustive, or a deterministic seeded sample.
struct Coverage {
  bool exhaustive = true;
  std::uint64_t checked = 0;  // number of individual instances examined
  std::uint64_t seed = 0;     // meaningful only when sampled
};

// Verdict for one named law inside a suite run.
struct LawResult {
  std::string name;
  bool pass = true;
  Coverage coverage;
  std::string witness;  // first counterexample when pass == false
};

// A full run of a law suite or conformance check.
struct RunReport {
  std::string command;             // echo of what was requested
  std::string corpus;              // description of the instances examined
  std::deque<LawResult> results;   // deque: add() must not invalidate references

  bool ok() const {
    for (const auto& r : results)
      if (!r.pass) return false;
    return true;
  }

  LawResult& add(std::string name) {
    results.push_back(LawResult{std::move(name), true, {}, {}});
    return results.back();
  }

  void fail(std::string name, std::string witness) {
    results.push_back(LawResult{std::move(name), false, {}, std::move(witness)});
  }
};

// Thrown when an enumeration would exceed a configured resource cap and the
// operation is required to be exhaustive.  CLI maps this to exit code 3.
struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Thrown on malformed input files.  CLI maps this to exit code 2.
struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

}  // namespace omlgal
