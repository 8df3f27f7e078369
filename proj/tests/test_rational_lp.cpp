#include "doctest.h"
#include "sigma/gen.hpp"

#include "sigma/error.hpp"
#include "sigma/lp.hpp"
#include "sigma/rational.hpp"

#include <cmath>

using namespace sigma;

TEST_CASE("parse_rational") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-4/6") == Rational(-2, 3));
  CHECK(parse_rational("3/-4") == Rational(-3, 4));
  CHECK(parse_rational("1.25") == Rational(5, 4));
  CHECK(parse_rational("-0.5") == Rational(-1, 2));
  CHECK(parse_rational("010") == 10);  // decimal, not octal
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
}

TEST_CASE("binary64 values convert exactly") {
  CHECK(rational_from_double(0.5) == Rational(1, 2));
  CHECK(rational_from_double(-3.0) == -3);
  CHECK(rational_from_double(0.1) != Rational(1, 10));
  gen::Gen g(3);
  for (int i = 0; i < 200; ++i) {
    const double x = g.real(-1e6, 1e6);
    CHECK(to_double(rational_from_double(x)) == x);
  }
  CHECK(floor(Rational(-1, 2)) == -1);
  CHECK(floor(Rational(7, 2)) == 3);
  CHECK(to_string(make_rational(6, -4)) == "-3/2");
}

TEST_CASE("simplex on small programs") {
  // max x + y, x + 2y + s1 = 4, 3x + y + s2 = 6
  const lp::Matrix a{{1, 2, 1, 0}, {3, 1, 0, 1}};
  const auto r = lp::maximize(a, {4, 6}, {1, 1, 0, 0});
  REQUIRE(r.status == lp::Status::Optimal);
  CHECK(r.objective == Rational(14, 5));
  CHECK(r.x[0] == Rational(8, 5));
  CHECK(r.x[1] == Rational(6, 5));

  CHECK(lp::maximize({{1, 1}}, {-1}, {0, 0}).status == lp::Status::Infeasible);
  CHECK(lp::maximize({{1, -1}}, {0}, {1, 0}).status == lp::Status::Unbounded);
  // Redundant equality rows are harmless.
  const auto red = lp::maximize({{1, 1}, {2, 2}}, {1, 2}, {1, 0});
  CHECK(red.status == lp::Status::Optimal);
  CHECK(red.objective == 1);
}

TEST_CASE("simplex agrees with vertex enumeration") {
  // Oracle: maximize over the vertices of {x >= 0, Ax = b} for 2 rows, 4
  // columns by trying every pair of basic columns.
  gen::Gen g(5);
  for (int iter = 0; iter < 150; ++iter) {
    lp::Matrix a(2, RationalVector(4));
    RationalVector b(2), c(4);
    for (auto& row : a)
      for (auto& v : row) v = g.integer(-3, 3);
    for (auto& v : b) v = g.integer(0, 4);
    for (auto& v : c) v = g.integer(-3, 3);
    // Bounded: add sum x <= 10 as a third row with slack.
    a.push_back({1, 1, 1, 1});
    for (auto& row : a) row.push_back(0);
    a[2][4] = 1;
    b.push_back(10);
    c.push_back(0);

    std::optional<Rational> best;
    bool full_rank = false;
    const std::size_t n = 5;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) {
          // Solve the 3x3 system by Cramer's rule.
          auto det3 = [](const std::vector<RationalVector>& m) {
            return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                   m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
          };
          std::vector<RationalVector> m(3, RationalVector(3));
          const std::size_t cols[3] = {i, j, k};
          for (int r = 0; r < 3; ++r)
            for (int q = 0; q < 3; ++q) m[r][q] = a[r][cols[q]];
          const Rational d = det3(m);
          if (d == 0) continue;
          full_rank = true;
          RationalVector x(3);
          bool ok = true;
          for (int q = 0; q < 3; ++q) {
            auto mq = m;
            for (int r = 0; r < 3; ++r) mq[r][q] = b[r];
            x[q] = det3(mq) / d;
            ok = ok && x[q] >= 0;
          }
          if (!ok) continue;
          Rational value = 0;
          for (int q = 0; q < 3; ++q) value += c[cols[q]] * x[q];
          if (!best || value > *best) best = value;
        }
    if (!full_rank) continue;  // the oracle needs nonsingular bases
    const auto r = lp::maximize(a, b, c);
    if (!best) {
      CHECK(r.status == lp::Status::Infeasible);
    } else {
      REQUIRE(r.status == lp::Status::Optimal);
      CHECK(r.objective == *best);
    }
  }
}
