#include "asymkit/lp.hpp"

#include "asymkit/error.hpp"

namespace asymkit {

namespace {

// Dense simplex tableau over standard form  A' z = b', z >= 0, b' >= 0,
// where z = (x+, x-, slacks, artificials). The objective row stores the
// reduced costs c_j - c_B B^{-1} A'_j of the maximization currently solved.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : a_(rows, std::vector<mpq_class>(cols, 0)), rhs_(rows, 0), basis_(rows, 0),
        cost_(cols, 0), reduced_(cols, 0) {}

  std::vector<std::vector<mpq_class>>& a() { return a_; }
  std::vector<mpq_class>& rhs() { return rhs_; }
  std::vector<std::size_t>& basis() { return basis_; }
  const std::vector<mpq_class>& reduced() const { return reduced_; }
  const mpq_class& value() const { return value_; }
  std::size_t rows() const { return a_.size(); }
  std::size_t cols() const { return cost_.size(); }

  void set_costs(std::vector<mpq_class> cost) {
    cost_ = std::move(cost);
    value_ = 0;
    reduced_ = cost_;
    for (std::size_t r = 0; r < rows(); ++r) {
      const mpq_class& cb = cost_[basis_[r]];
      if (cb == 0) continue;
      value_ += cb * rhs_[r];
      for (std::size_t j = 0; j < cols(); ++j) {
        if (a_[r][j] != 0) reduced_[j] -= cb * a_[r][j];
      }
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    const mpq_class inv = 1 / a_[row][col];
    for (auto& x : a_[row]) {
      if (x != 0) x *= inv;
    }
    rhs_[row] *= inv;
    for (std::size_t r = 0; r < rows(); ++r) {
      if (r == row || a_[r][col] == 0) continue;
      const mpq_class f = a_[r][col];
      for (std::size_t j = 0; j < cols(); ++j) {
        if (a_[row][j] != 0) a_[r][j] -= f * a_[row][j];
      }
      rhs_[r] -= f * rhs_[row];
    }
    const mpq_class f = reduced_[col];
    if (f != 0) {
      for (std::size_t j = 0; j < cols(); ++j) {
        if (a_[row][j] != 0) reduced_[j] -= f * a_[row][j];
      }
      value_ += f * rhs_[row];
    }
    basis_[row] = col;
  }

  /// Row-vector c_B B^{-1}, reading B^{-1} off the columns that formed the
  /// initial identity basis.
  std::vector<mpq_class> duals(const std::vector<std::size_t>& initial_basis) const {
    std::vector<mpq_class> w(rows(), 0);
    for (std::size_t k = 0; k < rows(); ++k) {
      for (std::size_t r = 0; r < rows(); ++r) {
        const mpq_class& cb = cost_[basis_[r]];
        if (cb != 0) w[k] += cb * a_[r][initial_basis[k]];
      }
    }
    return w;
  }

  enum class Stop { Optimal, Unbounded };

  /// Bland's rule: lowest-index improving column enters; ratio ties leave by
  /// lowest basic index.
  Stop run(const std::vector<bool>& allowed, std::size_t& unbounded_col) {
    while (true) {
      std::size_t enter = cols();
      for (std::size_t j = 0; j < cols(); ++j) {
        if (allowed[j] && reduced_[j] > 0) {
          enter = j;
          break;
        }
      }
      if (enter == cols()) return Stop::Optimal;
      std::size_t leave = rows();
      mpq_class best_ratio;
      for (std::size_t r = 0; r < rows(); ++r) {
        if (a_[r][enter] <= 0) continue;
        mpq_class ratio = rhs_[r] / a_[r][enter];
        if (leave == rows() || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[leave])) {
          leave = r;
          best_ratio = std::move(ratio);
        }
      }
      if (leave == rows()) {
        unbounded_col = enter;
        return Stop::Unbounded;
      }
      pivot(leave, enter);
    }
  }

 private:
  std::vector<std::vector<mpq_class>> a_;
  std::vector<mpq_class> rhs_;
  std::vector<std::size_t> basis_;
  std::vector<mpq_class> cost_;
  std::vector<mpq_class> reduced_;
  mpq_class value_ = 0;
};

Vector to_vector(const std::vector<mpq_class>& v) {
  Vector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

}  // namespace

std::string to_string(LPStatus s) {
  switch (s) {
    case LPStatus::Optimal: return "optimal";
    case LPStatus::Unbounded: return "unbounded";
    case LPStatus::Infeasible: return "infeasible";
  }
  return "?";
}

LPOutcome lp_solve(const LPProblem& problem) {
  const std::size_t n = problem.dimension();
  const std::size_t m = problem.constraints.size();
  for (const auto& c : problem.constraints) {
    if (c.covector.size() != n) throw MalformedInput("lp_solve: constraint dimension mismatch");
  }

  std::vector<int> sign(m, 1);
  std::size_t slacks = 0, artificials = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = problem.constraints[i];
    if (c.rhs.sign() < 0) sign[i] = -1;
    if (c.relation == Relation::LessEqual) ++slacks;
    if (c.relation == Relation::Equal || sign[i] < 0) ++artificials;
  }
  const std::size_t slack0 = 2 * n, art0 = 2 * n + slacks, cols = art0 + artificials;

  Tableau tab(m, cols);
  std::vector<std::size_t> initial_basis(m);
  std::vector<bool> is_artificial(cols, false);
  std::size_t next_slack = slack0, next_art = art0;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = problem.constraints[i];
    auto& row = tab.a()[i];
    const mpq_class s = sign[i];
    for (std::size_t j = 0; j < n; ++j) {
      row[j] = s * c.covector[j].raw();
      row[n + j] = -row[j];
    }
    tab.rhs()[i] = s * c.rhs.raw();
    std::size_t slack_col = cols;
    if (c.relation == Relation::LessEqual) {
      slack_col = next_slack++;
      row[slack_col] = s;
    }
    if (c.relation == Relation::LessEqual && sign[i] > 0) {
      initial_basis[i] = slack_col;
    } else {
      const std::size_t art = next_art++;
      row[art] = 1;
      is_artificial[art] = true;
      initial_basis[i] = art;
    }
  }
  tab.basis() = initial_basis;

  auto signed_duals = [&](const std::vector<mpq_class>& w, int flip) {
    Vector y(m);
    for (std::size_t i = 0; i < m; ++i) y[i] = Rational(mpq_class(w[i] * sign[i] * flip));
    return y;
  };

  LPOutcome out;
  std::size_t unbounded_col = 0;
  if (artificials > 0) {
    std::vector<mpq_class> phase1(cols, 0);
    for (std::size_t j = art0; j < cols; ++j) phase1[j] = -1;
    tab.set_costs(phase1);
    tab.run(std::vector<bool>(cols, true), unbounded_col);
    if (tab.value() < 0) {
      out.status = LPStatus::Infeasible;
      out.multipliers = signed_duals(tab.duals(initial_basis), 1);
      return out;
    }
    for (std::size_t r = 0; r < m; ++r) {
      if (!is_artificial[tab.basis()[r]]) continue;
      for (std::size_t j = 0; j < art0; ++j) {
        if (tab.a()[r][j] != 0) {
          tab.pivot(r, j);
          break;
        }
      }
    }
  }

  const int flip = problem.sense == Sense::Maximize ? 1 : -1;
  std::vector<mpq_class> phase2(cols, 0);
  for (std::size_t j = 0; j < n; ++j) {
    phase2[j] = flip * problem.objective[j].raw();
    phase2[n + j] = -phase2[j];
  }
  tab.set_costs(phase2);
  std::vector<bool> allowed(cols, true);
  for (std::size_t j = art0; j < cols; ++j) allowed[j] = false;
  const auto stop = tab.run(allowed, unbounded_col);

  std::vector<mpq_class> z(cols, 0);
  for (std::size_t r = 0; r < m; ++r) z[tab.basis()[r]] = tab.rhs()[r];
  std::vector<mpq_class> x(n);
  for (std::size_t j = 0; j < n; ++j) x[j] = z[j] - z[n + j];
  out.point = to_vector(x);

  if (stop == Tableau::Stop::Unbounded) {
    std::vector<mpq_class> dz(cols, 0);
    dz[unbounded_col] = 1;
    for (std::size_t r = 0; r < m; ++r) dz[tab.basis()[r]] = -tab.a()[r][unbounded_col];
    std::vector<mpq_class> dx(n);
    for (std::size_t j = 0; j < n; ++j) dx[j] = dz[j] - dz[n + j];
    out.status = LPStatus::Unbounded;
    out.ray = to_vector(dx);
    return out;
  }
  out.status = LPStatus::Optimal;
  out.optimum = Rational(mpq_class(tab.value() * flip));
  out.multipliers = signed_duals(tab.duals(initial_basis), flip);
  return out;
}

std::string check_feasible_point(const LPProblem& problem, const Vector& x) {
  if (x.size() != problem.dimension()) return "point has wrong dimension";
  for (std::size_t i = 0; i < problem.constraints.size(); ++i) {
    const auto& c = problem.constraints[i];
    const Rational lhs = dot(c.covector, x);
    if (c.relation == Relation::Equal ? lhs != c.rhs : lhs > c.rhs) {
      return "constraint " + std::to_string(i) + " violated";
    }
  }
  return {};
}

std::string check_outcome(const LPProblem& problem, const LPOutcome& outcome) {
  const std::size_t n = problem.dimension();
  const std::size_t m = problem.constraints.size();
  const bool maximize = problem.sense == Sense::Maximize;
  auto combination = [&](const Vector& y) {
    Vector sum = zeros(n);
    Rational rhs = 0;
    for (std::size_t i = 0; i < m; ++i) {
      sum = sum + y[i] * problem.constraints[i].covector;
      rhs += y[i] * problem.constraints[i].rhs;
    }
    return std::pair{sum, rhs};
  };
  switch (outcome.status) {
    case LPStatus::Optimal: {
      if (auto e = check_feasible_point(problem, outcome.point); !e.empty()) return e;
      if (dot(problem.objective, outcome.point) != outcome.optimum) return "point does not attain optimum";
      if (outcome.multipliers.size() != m) return "multiplier count mismatch";
      for (std::size_t i = 0; i < m; ++i) {
        const int s = outcome.multipliers[i].sign();
        if (problem.constraints[i].relation == Relation::LessEqual && (maximize ? s < 0 : s > 0)) {
          return "multiplier " + std::to_string(i) + " has wrong sign";
        }
      }
      const auto [sum, rhs] = combination(outcome.multipliers);
      if (sum != problem.objective) return "multipliers do not reproduce objective";
      if (rhs != outcome.optimum) return "dual objective differs from optimum";
      return {};
    }
    case LPStatus::Unbounded: {
      if (auto e = check_feasible_point(problem, outcome.point); !e.empty()) return e;
      if (outcome.ray.size() != n) return "ray has wrong dimension";
      for (std::size_t i = 0; i < m; ++i) {
        const auto& c = problem.constraints[i];
        const Rational lhs = dot(c.covector, outcome.ray);
        if (c.relation == Relation::Equal ? !lhs.is_zero() : lhs.sign() > 0) {
          return "ray leaves constraint " + std::to_string(i);
        }
      }
      const int s = dot(problem.objective, outcome.ray).sign();
      if (maximize ? s <= 0 : s >= 0) return "ray does not improve objective";
      return {};
    }
    case LPStatus::Infeasible: {
      if (outcome.multipliers.size() != m) return "multiplier count mismatch";
      for (std::size_t i = 0; i < m; ++i) {
        if (problem.constraints[i].relation == Relation::LessEqual && outcome.multipliers[i].sign() < 0) {
          return "Farkas multiplier " + std::to_string(i) + " negative";
        }
      }
      const auto [sum, rhs] = combination(outcome.multipliers);
      if (!is_zero(sum)) return "Farkas combination is not zero";
      if (rhs.sign() >= 0) return "Farkas right-hand side is not negative";
      return {};
    }
  }
  return "unknown status";
}

}  // namespace asymkit
