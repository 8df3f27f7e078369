#pragma once

// Brute-force oracle for the minimal ray count behind m(chi), shared by the
// unit and acceptance tests. It never touches the LP.

#include "sigma/gen.hpp"

#include "sigma/character_sphere.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace oracle {

using namespace sigma;
using namespace sigma::sphere;

// Oracle for the minimal ray count, independent of the LP: for each subset
// size r, solve V lambda = chi by exact Gauss-Jordan elimination. At the
// first size that works some minimal subset has a solution space of
// dimension <= 1 (a second free direction could zero out a coefficient and
// give a smaller subset), so it suffices to test the unique solution or the
// open interval along a one-dimensional kernel, and skip wider kernels.
struct Solution {
  RationalVector particular;
  std::vector<RationalVector> kernel;
};

inline std::optional<Solution> solve(const std::vector<RationalVector>& cols, const RationalVector& rhs) {
  const std::size_t rows = rhs.size();
  const std::size_t n = cols.size();
  std::vector<RationalVector> m(rows, RationalVector(n + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = cols[j][i];
    m[i][n] = rhs[i];
  }
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const Rational inv = 1 / m[r][c];
    for (auto& v : m[r]) v *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = 0; j <= n; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (m[i][n] != 0) return std::nullopt;
  Solution s;
  s.particular.assign(n, Rational(0));
  for (std::size_t i = 0; i < r; ++i) s.particular[pivots[i]] = m[i][n];
  for (std::size_t f = 0; f < n; ++f) {
    if (std::find(pivots.begin(), pivots.end(), f) != pivots.end()) continue;
    RationalVector k(n, Rational(0));
    k[f] = 1;
    for (std::size_t i = 0; i < r; ++i) k[pivots[i]] = -m[i][f];
    s.kernel.push_back(k);
  }
  return s;
}

inline bool strictly_positive_solution(const Solution& s, bool require_nonzero) {
  if (s.kernel.empty()) {
    for (const auto& x : s.particular)
      if (x <= 0) return false;
    return !require_nonzero || !s.particular.empty();
  }
  if (s.kernel.size() > 1) return false;
  const auto& k = s.kernel[0];
  std::optional<Rational> lo, hi;
  for (std::size_t i = 0; i < k.size(); ++i) {
    const auto& x = s.particular[i];
    if (k[i] == 0) {
      if (x <= 0) return false;
    } else if (k[i] > 0) {
      const Rational b = -x / k[i];
      if (!lo || b > *lo) lo = b;
    } else {
      const Rational b = -x / k[i];
      if (!hi || b < *hi) hi = b;
    }
  }
  return !lo || !hi || *lo < *hi;
}

inline ExtNat oracle_count(const std::vector<SpherePoint>& a, const Character& c) {
  std::vector<RationalVector> pool;
  const bool zero = c.is_zero();
  for (const auto& p : a) {
    if (!zero && p == normalize_ray(c)) continue;
    RationalVector v;
    for (const auto& x : p.vector()) v.push_back(Rational(x));
    pool.push_back(v);
  }
  for (std::size_t r = 1; r <= pool.size(); ++r) {
    std::vector<bool> pick(pool.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(r), true);
    do {
      std::vector<RationalVector> cols;
      for (std::size_t i = 0; i < pool.size(); ++i)
        if (pick[i]) cols.push_back(pool[i]);
      const auto s = solve(cols, c.coords());
      if (s && strictly_positive_solution(*s, zero)) return ExtNat::finite(r);
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return ExtNat::infinity();
}

inline std::vector<SpherePoint> random_points(gen::Gen& g, std::size_t k, std::size_t count) {
  std::vector<SpherePoint> out;
  while (out.size() < count) {
    const SpherePoint p = normalize_ray(Character::from_integers(g.nonzero_vector(k, 2)));
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  return out;
}


}  // namespace oracle
