#pragma once

#include <filesystem>
#include <sstream>
#include <string>

#include "omlgal/foulis.hpp"
#include "omlgal/io.hpp"
#include "omlgal/oml.hpp"

namespace testutil {

inline std::filesystem::path fixture(const std::string& name) {
  return std::filesystem::path(FIXTURE_DIR) / name;
}

inline omlgal::RawOML raw_of(const omlgal::FiniteOML& l) {
  std::istringstream in(omlgal::write_oml(l));
  return omlgal::parse_oml(in);
}

// Benzene ring: two chains 0 < a < b < 1 and 0 < b' < a' < 1.  A valid
// ortholattice that is not orthomodular; (a, b) witnesses the failure.
inline omlgal::RawOML benzene() {
  omlgal::RawOML raw;
  raw.elements = {"0", "a", "b", "a'", "b'", "1"};
  raw.leq = {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "b'"}, {"b'", "a'"}, {"a'", "1"}};
  raw.oc = {{"0", "1"}, {"1", "0"}, {"a", "a'"}, {"a'", "a"}, {"b", "b'"}, {"b'", "b"}};
  return raw;
}

// Copy of a semigroup with one multiplication entry redirected.
inline omlgal::FoulisSemigroup with_mul(omlgal::FoulisSemigroup s, int a, int b, int c) {
  s.mul[a][b] = c;
  return s;
}

}  // namespace testutil
