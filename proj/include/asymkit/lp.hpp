#pragma once

#include <string>
#include <vector>

#include "asymkit/rational.hpp"

namespace asymkit {

enum class Relation { LessEqual, Equal };
enum class Sense { Maximize, Minimize };

struct Constraint {
  Vector covector;
  Relation relation = Relation::LessEqual;
  Rational rhs;
};

/// optimize objective . x over free variables x subject to the constraints.
struct LPProblem {
  Vector objective;
  std::vector<Constraint> constraints;
  Sense sense = Sense::Maximize;

  std::size_t dimension() const { return objective.size(); }
};

enum class LPStatus { Optimal, Unbounded, Infeasible };

std::string to_string(LPStatus s);

/// Result of lp_solve. Every branch carries a certificate checkable by
/// substitution:
///  - Optimal: `point` attains `optimum`; `multipliers` y satisfy
///    sum_i y_i a_i = objective and sum_i y_i b_i = optimum, with y_i >= 0
///    (maximize) or y_i <= 0 (minimize) on inequality rows.
///  - Unbounded: `ray` is a feasible direction improving the objective and
///    `point` is a feasible point it starts from.
///  - Infeasible: `multipliers` y with y_i >= 0 on inequality rows,
///    sum_i y_i a_i = 0 and sum_i y_i b_i < 0.
struct LPOutcome {
  LPStatus status = LPStatus::Infeasible;
  Rational optimum;
  Vector point;
  Vector ray;
  Vector multipliers;
};

/// Exact two-phase primal simplex with Bland's rule. Throws MalformedInput on
/// dimension mismatch.
LPOutcome lp_solve(const LPProblem& problem);

/// Substitution checks for each outcome kind. Return an empty string when the
/// certificate holds, otherwise a description of the first failure.
std::string check_feasible_point(const LPProblem& problem, const Vector& x);
std::string check_outcome(const LPProblem& problem, const LPOutcome& outcome);

}  // namespace asymkit
