#include "sigma/lp.hpp"

#include <cassert>
#include <optional>

namespace sigma::lp {
namespace {

// Dense tableau: rows hold B^-1 [A | b]; `basis[i]` is the column basic in row i.
struct Tableau {
  std::vector<RationalVector> rows;
  std::vector<std::size_t> basis;
  std::size_t columns = 0;  // excluding the right-hand side

  Rational& rhs(std::size_t i) { return rows[i][columns]; }

  void pivot(std::size_t r, std::size_t col) {
    const Rational p = rows[r][col];
    for (auto& v : rows[r]) v /= p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      const Rational f = rows[i][col];
      for (std::size_t j = 0; j <= columns; ++j) {
        if (rows[r][j] != 0) rows[i][j] -= f * rows[r][j];
      }
    }
    basis[r] = col;
  }

  Rational reduced_cost(const RationalVector& c, std::size_t col) const {
    Rational rc = c[col];
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i][col] != 0) rc -= c[basis[i]] * rows[i][col];
    }
    return rc;
  }

  // Runs the simplex method on objective c restricted to columns < active.
  // Returns false when unbounded.
  bool optimize(const RationalVector& c, std::size_t active) {
    for (;;) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < active; ++j) {
        if (reduced_cost(c, j) > 0) {
          entering = j;
          break;
        }
      }
      if (!entering) return true;

      std::optional<std::size_t> leaving;
      Rational best;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const Rational& a = rows[i][*entering];
        if (a <= 0) continue;
        const Rational ratio = rows[i][columns] / a;
        if (!leaving || ratio < best || (ratio == best && basis[i] < basis[*leaving])) {
          leaving = i;
          best = ratio;
        }
      }
      if (!leaving) return false;
      pivot(*leaving, *entering);
    }
  }

  Rational objective(const RationalVector& c) const {
    Rational z = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) z += c[basis[i]] * rows[i][columns];
    return z;
  }
};

}  // namespace

Result maximize(const Matrix& a, const RationalVector& b, const RationalVector& c) {
  const std::size_t m = a.size();
  const std::size_t n = c.size();
  assert(b.size() == m);

  // Columns: n structural, then m artificial.
  Tableau t;
  t.columns = n + m;
  t.rows.assign(m, RationalVector(n + m + 1, Rational(0)));
  t.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    assert(a[i].size() == n);
    const bool flip = b[i] < 0;
    for (std::size_t j = 0; j < n; ++j) t.rows[i][j] = flip ? -a[i][j] : a[i][j];
    t.rows[i][n + i] = 1;
    t.rows[i][n + m] = flip ? -b[i] : b[i];
    t.basis[i] = n + i;
  }

  // Phase 1: maximize -(sum of artificials).
  RationalVector phase1(n + m, Rational(0));
  for (std::size_t i = 0; i < m; ++i) phase1[n + i] = -1;
  t.optimize(phase1, n + m);
  if (t.objective(phase1) < 0) return {Status::Infeasible, {}, {}};

  // Drive zero-level artificials out of the basis; drop redundant rows.
  for (std::size_t i = 0; i < t.rows.size();) {
    if (t.basis[i] < n) {
      ++i;
      continue;
    }
    std::optional<std::size_t> col;
    for (std::size_t j = 0; j < n; ++j) {
      if (t.rows[i][j] != 0) {
        col = j;
        break;
      }
    }
    if (col) {
      t.pivot(i, *col);
      ++i;
    } else {
      t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
      t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }

  RationalVector phase2(n + m, Rational(0));
  for (std::size_t j = 0; j < n; ++j) phase2[j] = c[j];
  if (!t.optimize(phase2, n)) return {Status::Unbounded, {}, {}};

  Result result{Status::Optimal, t.objective(phase2), RationalVector(n, Rational(0))};
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    if (t.basis[i] < n) result.x[t.basis[i]] = t.rows[i][t.columns];
  }
  return result;
}

}  // namespace sigma::lp
