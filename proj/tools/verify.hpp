#pragma once

// Seeded property suites behind `sigma verify`. Each property counts the
// cases it checked and how many passed; a suite passes when every case does.

#include "json.hpp"

#include <string>
#include <vector>

namespace sigma::verify {

struct Property {
  std::string name;
  std::size_t passed = 0;
  std::size_t total = 0;
  double worst = 0;  // largest violation or gap seen, where meaningful

  void check(bool ok) {
    ++total;
    passed += ok;
  }
  bool pass() const { return passed == total; }
};

struct SuiteResult {
  std::string suite;
  unsigned long long seed = 0;
  std::size_t cases = 0;
  std::vector<Property> properties;

  bool pass() const;
  nlohmann::json to_json() const;
};

/// busemann, character, shift, lemma13.5, tits, cocompact, sl2z, raag, mfpr.
const std::vector<std::string>& suite_names();

/// `cases` is the number of random instances per space or per property.
/// Throws InvalidInput for an unknown suite.
SuiteResult run_suite(const std::string& name, unsigned long long seed, std::size_t cases = 100);

}  // namespace sigma::verify
