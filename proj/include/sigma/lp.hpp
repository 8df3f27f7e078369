#pragma once

#include "sigma/rational.hpp"

#include <vector>

namespace sigma::lp {

using Matrix = std::vector<RationalVector>;

enum class Status { Optimal, Infeasible, Unbounded };

struct Result {
  Status status = Status::Infeasible;
  Rational objective;
  RationalVector x;
};

/// maximize c.x subject to A x = b, x >= 0, in exact arithmetic.
/// Two-phase tableau simplex; Bland's rule (lowest index) for both the
/// entering and the leaving variable, so it always terminates.
Result maximize(const Matrix& a, const RationalVector& b, const RationalVector& c);

}  // namespace sigma::lp
