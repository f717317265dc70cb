#include "asymkit/semilip.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "asymkit/lp.hpp"
#include "asymkit/random.hpp"

namespace asymkit {

namespace {

void check_molecule(const FiniteQuasiMetricSpace& space, const Molecule& m) {
  if (m.support.size() != m.coefficients.size()) throw MalformedInput("molecule support/coefficient length mismatch");
  auto sorted = m.support;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw MalformedInput("molecule support indices must be distinct");
  }
  if (!sorted.empty() && sorted.back() >= space.size()) throw MalformedInput("molecule support index out of range");
}

}  // namespace

SemiLipFunction SemiLipFunction::make(const FiniteQuasiMetricSpace& space, Vector values) {
  if (values.size() != space.size()) throw MalformedInput("function must have one value per point");
  if (!values[space.base_point()].is_zero()) throw MalformedInput("function must vanish at the base point");
  SemiLipFunction f;
  f.values_ = std::move(values);
  f.base_point_ = space.base_point();
  return f;
}

Seminorm semilip_seminorm(const FiniteQuasiMetricSpace& space, const Vector& f) {
  if (f.size() != space.size()) throw MalformedInput("function must have one value per point");
  Seminorm out;
  Rational best = 0;
  for (std::size_t x = 0; x < space.size(); ++x) {
    for (std::size_t y = 0; y < space.size(); ++y) {
      if (x == y) continue;
      const Rational rise = f[x] - f[y];
      if (rise.sign() <= 0) continue;
      if (space.d(x, y).is_zero()) {
        out.value = Extended::infinity();
        out.witness = IndexPair{x, y};
        return out;
      }
      const Rational q = rise / space.d(x, y);
      if (q > best) {
        best = q;
        out.witness = IndexPair{x, y};
      }
    }
  }
  out.value = best;
  return out;
}

Seminorm semilip_seminorm(const FiniteQuasiMetricSpace& space, const SemiLipFunction& f) {
  return semilip_seminorm(space, f.values());
}

SemiLipFunction extend(const FiniteQuasiMetricSpace& space, const std::vector<std::size_t>& sub,
                       const Vector& f_on_sub, const Rational& constant) {
  if (sub.size() != f_on_sub.size()) throw MalformedInput("extend: sub and values differ in length");
  if (sub.empty()) throw MalformedInput("extend: empty subset");
  if (constant.sign() < 0) throw MalformedInput("extend: constant must be nonnegative");
  for (auto i : sub) {
    if (i >= space.size()) throw MalformedInput("extend: index out of range");
  }
  for (std::size_t a = 0; a < sub.size(); ++a) {
    for (std::size_t b = 0; b < sub.size(); ++b) {
      if (f_on_sub[a] - f_on_sub[b] > constant * space.d(sub[a], sub[b])) {
        throw ExtensionError("extend: f(" + std::to_string(sub[a]) + ") - f(" + std::to_string(sub[b]) +
                                 ") exceeds C d on the subset",
                             IndexPair{sub[a], sub[b]});
      }
    }
  }
  Vector g(space.size());
  for (std::size_t x = 0; x < space.size(); ++x) {
    std::optional<Rational> best;
    for (std::size_t k = 0; k < sub.size(); ++k) {
      Rational v = f_on_sub[k] + constant * space.d(x, sub[k]);
      if (!best || v < *best) best = std::move(v);
    }
    g[x] = *best;
  }
  return SemiLipFunction::make(space, std::move(g));
}

Molecule Molecule::pair(std::size_t x, std::size_t y) { return Molecule{{x, y}, {Rational{1}, Rational{-1}}}; }

Molecule Molecule::negated() const { return Molecule{support, -coefficients}; }

std::string Molecule::describe(const FiniteQuasiMetricSpace& space) const {
  std::ostringstream os;
  for (std::size_t k = 0; k < support.size(); ++k) {
    if (k) os << " + ";
    os << coefficients[k] << "*delta(" << space.labels()[support[k]] << ")";
  }
  if (support.empty()) os << "0";
  return os.str();
}

FreeNorm molecule_flat_norm(const FiniteQuasiMetricSpace& space, const Molecule& m) {
  check_molecule(space, m);
  const std::size_t n = space.size();
  LPProblem lp;
  lp.objective = zeros(n);
  for (std::size_t k = 0; k < m.support.size(); ++k) lp.objective[m.support[k]] += m.coefficients[k];
  lp.constraints.push_back({unit_vector(n, space.base_point()), Relation::Equal, 0});
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      Vector row = zeros(n);
      row[x] = 1;
      row[y] = -1;
      lp.constraints.push_back({std::move(row), Relation::LessEqual, space.d(y, x)});
    }
  }
  const LPOutcome res = lp_solve(lp);
  FreeNorm out;
  if (res.status == LPStatus::Unbounded) {
    out.value = Extended::infinity();
    out.ray = res.ray;
    return out;
  }
  if (res.status != LPStatus::Optimal) throw InfeasibleError("free-space LP infeasible");
  out.value = res.optimum;
  out.potential = res.point;
  return out;
}

std::vector<Molecule> sample_molecules(const FiniteQuasiMetricSpace& space, const FreeIndexOptions& options) {
  std::vector<Molecule> out;
  const std::size_t n = space.size();
  if (n < 2) return out;
  const std::size_t max_support = std::min(n, std::max<std::size_t>(2, options.max_support));
  Rng rng(options.seed);
  std::vector<std::size_t> perm(n);
  while (out.size() < options.count) {
    const auto size = static_cast<std::size_t>(rng.uniform_int(2, static_cast<std::int64_t>(max_support)));
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    for (std::size_t k = 0; k < size; ++k) {
      const auto j = static_cast<std::size_t>(rng.uniform_int(static_cast<std::int64_t>(k),
                                                              static_cast<std::int64_t>(n - 1)));
      std::swap(perm[k], perm[j]);
    }
    Molecule m;
    for (std::size_t k = 0; k < size; ++k) {
      const long den = rng.uniform_int(1, options.max_denominator);
      const long num = rng.uniform_int(-options.max_abs * den, options.max_abs * den);
      m.support.push_back(perm[k]);
      m.coefficients.emplace_back(num, den);
    }
    if (is_zero(m.coefficients)) continue;
    out.push_back(std::move(m));
  }
  return out;
}

FreeIndexReport molecule_index_sample(const FiniteQuasiMetricSpace& space, const FreeIndexOptions& options,
                                      const std::vector<Molecule>& extra) {
  FreeIndexReport rep;
  rep.seed = options.seed;
  rep.c_space = index_of_symmetry(space).c;

  auto evaluate = [&](const Molecule& m, bool is_pair) {
    const FreeNorm fwd = molecule_flat_norm(space, m);
    const FreeNorm bwd = molecule_flat_norm(space, m.negated());
    if (fwd.value.is_infinite() || bwd.value.is_infinite()) throw InfeasibleError("free-space LP unbounded");
    if (fwd.value.value().sign() <= 0) return;
    MoleculeRatio r{m, fwd.value.value(), bwd.value.value(), bwd.value.value() / fwd.value.value(), is_pair};
    rep.ratios.push_back(std::move(r));
  };

  for (std::size_t x = 0; x < space.size(); ++x) {
    for (std::size_t y = 0; y < space.size(); ++y) {
      if (x != y) evaluate(Molecule::pair(x, y), true);
    }
  }
  for (const auto& m : extra) evaluate(m, false);
  for (const auto& m : sample_molecules(space, options)) evaluate(m, false);

  std::optional<Rational> pairs, all;
  for (std::size_t k = 0; k < rep.ratios.size(); ++k) {
    const auto& r = rep.ratios[k];
    if (r.is_pair && (!pairs || r.ratio < *pairs)) pairs = r.ratio;
    if (!all || r.ratio < *all) {
      all = r.ratio;
      rep.worst = r.molecule;
    }
    if (!r.is_pair && r.ratio < rep.c_space) rep.below_space_index.push_back(k);
  }
  rep.c_pairs = pairs.value_or(Rational{1});
  rep.c_sample = all.value_or(Rational{1});
  rep.pairs_match_space = rep.c_pairs == rep.c_space;
  rep.free_space_not_baire = rep.c_space.is_zero();
  return rep;
}

ComparisonWitness comp_index_witness(const FiniteQuasiMetricSpace& space, const SemiLipFunction& f,
                                     std::size_t n_max) {
  const FiniteQuasiMetricSpace conj = conjugate(space);
  ComparisonWitness out;
  out.lipschitz = semilip_seminorm(conj, f).value;
  out.reverse_lipschitz = semilip_seminorm(conj, -f.values()).value;
  if (out.lipschitz.is_infinite()) {
    throw ValidationError("f is not semi-Lipschitz for the conjugate distance");
  }
  const Rational& lip = out.lipschitz.value();
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::optional<ComparisonStep> best;
    for (std::size_t a = 0; a < space.size(); ++a) {
      for (std::size_t b = 0; b < space.size(); ++b) {
        if (a == b) continue;
        const Rational rise = f[a] - f[b];
        if (!(Rational(static_cast<long>(n)) * space.d(a, b) < rise)) continue;
        if (rise > lip * space.d(b, a)) continue;
        const Rational ratio = space.d(a, b) / space.d(b, a);
        if (!best || ratio < best->ratio) {
          best = ComparisonStep{n, IndexPair{a, b}, ratio, lip / Rational(static_cast<long>(n))};
        }
      }
    }
    if (!best) break;
    out.steps.push_back(*best);
    out.best_n = n;
  }
  out.witnesses_asymmetry = !out.steps.empty();
  out.message = out.witnesses_asymmetry
                    ? "chain holds up to n = " + std::to_string(out.best_n)
                    : "f fails to witness asymmetry: no pair satisfies the chain at n = 1";
  return out;
}

}  // namespace asymkit
