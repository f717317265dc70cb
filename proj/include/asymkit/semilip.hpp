#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "asymkit/quasimetric.hpp"
#include "asymkit/rational.hpp"

namespace asymkit {

/// Real function on the points of a finite space, vanishing at the base point.
class SemiLipFunction {
 public:
  /// Throws MalformedInput when the size is wrong or values[base] != 0.
  static SemiLipFunction make(const FiniteQuasiMetricSpace& space, Vector values);

  const Vector& values() const { return values_; }
  const Rational& operator[](std::size_t i) const { return values_[i]; }
  std::size_t base_point() const { return base_point_; }

 private:
  SemiLipFunction() = default;
  Vector values_;
  std::size_t base_point_ = 0;
};

/// |f|_L = max over pairs with d(x,y) > 0 of max(f(x) - f(y), 0) / d(x,y).
/// Infinite, with the offending pair as witness, when some d(x,y) = 0 has
/// f(x) > f(y).
struct Seminorm {
  Extended value = Rational{0};
  std::optional<IndexPair> witness;
};

Seminorm semilip_seminorm(const FiniteQuasiMetricSpace& space, const Vector& f);
Seminorm semilip_seminorm(const FiniteQuasiMetricSpace& space, const SemiLipFunction& f);

class ExtensionError : public ValidationError {
 public:
  ExtensionError(const std::string& what, IndexPair pair) : ValidationError(what), pair_(pair) {}
  IndexPair pair() const { return pair_; }

 private:
  IndexPair pair_;
};

/// g(x) = min_{y in sub} f(y) + C d(x,y). Agrees with f on sub and has
/// |g|_L <= C: for any x, z and the minimizer y of g(z),
/// g(x) - g(z) <= C (d(x,y) - d(z,y)) <= C d(x,z).
/// Precondition: f(x) - f(y) <= C d(x,y) on sub; the base point must be in
/// sub with value 0. Throws ExtensionError naming the violating pair.
SemiLipFunction extend(const FiniteQuasiMetricSpace& space, const std::vector<std::size_t>& sub,
                       const Vector& f_on_sub, const Rational& constant);

/// Finite combination sum_k lambda_k delta_{x_k} of evaluation functionals.
/// Coefficients need not sum to zero; delta at the base point is zero.
struct Molecule {
  std::vector<std::size_t> support;
  Vector coefficients;

  static Molecule pair(std::size_t x, std::size_t y);  // delta_x - delta_y
  Molecule negated() const;
  std::string describe(const FiniteQuasiMetricSpace& space) const;
};

/// Free-space norm of a molecule as
///   max sum_k lambda_k f(x_k)  s.t.  f(x0) = 0,  f(x) - f(y) <= d(y,x)  for x != y,
/// i.e. the supremum over the unit ball of semi-Lipschitz functions for the
/// conjugate distance. A pair with d(y,x) = 0 yields the hard constraint
/// f(x) <= f(y). `potential` is an optimal f.
///
/// Orientation table (d[i][j] = d(x_i, x_j)):
///   seminorm of f         uses f(x) - f(y) <= L d(x,y)
///   free-space ball       uses f(x) - f(y) <= d(y,x)
///   |delta_x - delta_y|*  equals d(y,x)
///   pair ratio            |delta_y - delta_x|* / |delta_x - delta_y|* = d(x,y) / d(y,x)
struct FreeNorm {
  Extended value = Rational{0};
  Vector potential;
  Vector ray;
};

FreeNorm molecule_flat_norm(const FiniteQuasiMetricSpace& space, const Molecule& m);

struct MoleculeRatio {
  Molecule molecule;
  Rational norm;
  Rational reverse_norm;
  Rational ratio;
  bool is_pair = false;
};

struct FreeIndexOptions {
  std::size_t count = 100;
  std::uint64_t seed = 1;
  /// Sampled molecules use integers in [-max_abs, max_abs] scaled by
  /// denominators in [1, max_denominator], on supports of size 2..max_support.
  long max_abs = 3;
  long max_denominator = 3;
  std::size_t max_support = 5;
};

/// Experiment report comparing molecule ratios |-m|* / |m|* against c(X).
/// The minimum over pair molecules equals c(X) by the isometry of delta;
/// general molecules only add upper bounds on the free-space index.
struct FreeIndexReport {
  Rational c_space;
  Rational c_pairs;
  Rational c_sample;
  bool pairs_match_space = false;
  std::optional<Molecule> worst;
  std::vector<MoleculeRatio> ratios;
  /// Indices into `ratios` of general molecules with ratio strictly below c(X).
  std::vector<std::size_t> below_space_index;
  bool free_space_not_baire = false;
  std::uint64_t seed = 0;
};

/// Sampled molecules are drawn from options (count, seed); `extra` molecules
/// are evaluated as well. Pair molecules are always included.
FreeIndexReport molecule_index_sample(const FiniteQuasiMetricSpace& space, const FreeIndexOptions& options,
                                      const std::vector<Molecule>& extra = {});

std::vector<Molecule> sample_molecules(const FiniteQuasiMetricSpace& space, const FreeIndexOptions& options);

/// Search for pairs with n d(a,b) < f(a) - f(b) <= L d(b,a), where L is the
/// semi-Lipschitz constant of f for the conjugate distance. Each hit forces
/// d(a,b) / d(b,a) < L / n.
struct ComparisonStep {
  std::size_t n = 0;
  IndexPair pair;
  Rational ratio;
  Rational bound;  // L / n
};

struct ComparisonWitness {
  Extended lipschitz = Rational{0};
  Extended reverse_lipschitz = Rational{0};
  std::vector<ComparisonStep> steps;
  std::size_t best_n = 0;
  bool witnesses_asymmetry = false;
  std::string message;
};

/// Throws ValidationError when f has infinite constant for the conjugate distance.
ComparisonWitness comp_index_witness(const FiniteQuasiMetricSpace& space, const SemiLipFunction& f,
                                     std::size_t n_max);

}  // namespace asymkit
