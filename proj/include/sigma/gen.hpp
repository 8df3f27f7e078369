#pragma once

// Seeded generators for property checks (the test suites and `sigma verify`).
// Everything is drawn from one mt19937_64, so a seed replays a run.

#include "sigma/character_sphere.hpp"
#include "sigma/tree.hpp"

#include <random>
#include <string>
#include <vector>

namespace gen {

class Gen {
 public:
  explicit Gen(unsigned long long seed) : rng_(seed) {}

  long long integer(long long lo, long long hi) { return std::uniform_int_distribution<long long>(lo, hi)(rng_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(integer(0, static_cast<long long>(v.size()) - 1))];
  }

  sigma::Rational rational(long long range, long long den) {
    return sigma::Rational(integer(-range * den, range * den), den);
  }

  /// Nonzero integer vector with entries in [-range, range].
  std::vector<long long> nonzero_vector(std::size_t k, long long range) {
    for (;;) {
      std::vector<long long> v(k);
      bool zero = true;
      for (auto& c : v) {
        c = integer(-range, range);
        zero = zero && c == 0;
      }
      if (!zero) return v;
    }
  }

  /// Word over lowercase generators and their uppercase inverses.
  std::string group_word(const std::string& generators, std::size_t max_len) {
    std::string w;
    const auto len = static_cast<std::size_t>(integer(0, static_cast<long long>(max_len)));
    for (std::size_t i = 0; i < len; ++i) {
      char c = generators[static_cast<std::size_t>(integer(0, static_cast<long long>(generators.size()) - 1))];
      if (coin()) c = static_cast<char>(c - 'a' + 'A');
      w += c;
    }
    return w;
  }

  /// Reduced word of exactly `len` letters in the tree alphabet.
  std::string tree_word(const sigma::cat0::TreeDescriptor& t, std::size_t len) {
    const auto alphabet = t.alphabet();
    std::string w;
    while (w.size() < len) {
      const char c = alphabet[static_cast<std::size_t>(integer(0, static_cast<long long>(alphabet.size()) - 1))];
      if (w.empty() || t.may_follow(w.back(), c)) w += c;
    }
    return w;
  }

  /// Random canonical end: reduced prefix followed by a short period.
  sigma::cat0::TreeEnd tree_end(const sigma::cat0::TreeDescriptor& t, std::size_t max_prefix) {
    for (;;) {
      const std::string p = tree_word(t, static_cast<std::size_t>(integer(0, static_cast<long long>(max_prefix))));
      const std::string q = tree_word(t, static_cast<std::size_t>(integer(1, 3)));
      if (t.is_reduced(p + q + q)) return sigma::cat0::tree::canonical_end(t, p, q);
    }
  }

  sigma::cat0::TreePoint tree_point(const sigma::cat0::TreeDescriptor& t, std::size_t max_len) {
    std::string w = tree_word(t, static_cast<std::size_t>(integer(0, static_cast<long long>(max_len))));
    sigma::Rational s = w.empty() ? sigma::Rational(0) : sigma::Rational(integer(0, 7), 8);
    return {w, s};
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace gen
