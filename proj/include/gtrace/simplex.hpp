#pragma once

#include <vector>

#include "gtrace/rational.hpp"

namespace gtrace {

/// Exact two-phase primal simplex with Bland's rule on
///   minimize c.x  subject to  A x = b,  x >= 0.
struct LinearProgram {
  std::vector<Rational> cost;
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
};

struct LpSolution {
  enum class Status { Optimal, Infeasible, Unbounded };
  Status status = Status::Infeasible;
  Rational value;
  /// A basic optimal solution (a vertex of the feasible region).
  std::vector<Rational> x;
};

LpSolution solve_lp(const LinearProgram& lp);

}  // namespace gtrace
