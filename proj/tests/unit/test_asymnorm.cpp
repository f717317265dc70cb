#include <doctest.h>

#include <cmath>
#include <numbers>

#include "asymkit/asymnorm.hpp"
#include "asymkit/error.hpp"
#include "asymkit/random.hpp"
#include "generators.hpp"

using namespace asymkit;
using namespace asymkit::testing;

namespace {

PolyhedralAsymNorm norm(Matrix fs, std::size_t dim) { return PolyhedralAsymNorm::validate(std::move(fs), dim); }

const Matrix kHemi{{1, 0}, {0, 1}, {0, -1}};
const Matrix kBox{{1, 0}, {-1, 0}, {0, 1}, {0, -2}};

// Independent grid oracle for c in dimension 2: the minimum of |-x| / |x|
// over directions on a fine rational grid of the square's boundary.
Rational grid_oracle(const PolyhedralAsymNorm& n, long steps) {
  std::optional<Rational> best;
  for (long k = -steps; k <= steps; ++k) {
    const Rational t(k, steps);
    for (const Vector& x : {Vector{1, t}, Vector{-1, t}, Vector{t, 1}, Vector{t, -1}}) {
      const Rational fwd = n(x);
      if (fwd.sign() <= 0) continue;
      const Rational r = n(-x) / fwd;
      if (!best || r < *best) best = r;
    }
  }
  return best.value_or(Rational(0));
}

}  // namespace

TEST_CASE("norm validation examples") {
  CHECK_NOTHROW(norm({{1}, {-1}}, 1));
  const auto v = PolyhedralAsymNorm::find_violation({{1}}, 1);
  REQUIRE(v);
  CHECK(v->kind == NormViolation::Kind::Nonnegativity);
  REQUIRE(v->witness.size() == 1);
  CHECK(v->witness[0] < Rational(0));
  CHECK_NOTHROW(norm(kHemi, 2));
  const auto sep = PolyhedralAsymNorm::find_violation({{1, 0}, {-1, 0}}, 2);
  REQUIRE(sep);
  CHECK(sep->kind == NormViolation::Kind::Separation);
  CHECK(sep->witness[0].is_zero());
  CHECK(!sep->witness[1].is_zero());
  CHECK(PolyhedralAsymNorm::find_violation({{1, 0}, {0}}, 2)->kind == NormViolation::Kind::Shape);
  CHECK(PolyhedralAsymNorm::find_violation({}, 2)->kind == NormViolation::Kind::Shape);
  CHECK_THROWS_AS(norm({{1}}, 1), NormValidationError);
}

TEST_CASE("evaluation and associated norm") {
  const auto n = norm(kHemi, 2);
  CHECK(n({0, 0}) == Rational(0));
  CHECK(evaluate(n, {-3, 0}) == Rational(0));
  CHECK(associated_norm(n, {-3, 0}) == Rational(3));
  CHECK_THROWS_AS(n({1}), MalformedInput);
}

TEST_CASE("norm axioms on random inputs") {
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto d = static_cast<std::size_t>(rng.uniform_int(1, 4));
    const auto n = random_norm(rng, d);
    const Vector x = random_vector(rng, d), y = random_vector(rng, d);
    const Rational lambda = random_positive(rng, 5, 3);
    CHECK(n(x).sign() >= 0);
    CHECK(n(lambda * x) == lambda * n(x));
    CHECK(n(x + y) <= n(x) + n(y));
  }
}

TEST_CASE("ball geometry examples") {
  const auto box = ball_geometry(norm(kBox, 2));
  CHECK(box.bounded);
  CHECK(box.vertices.size() == 4);
  const auto hemi = ball_geometry(norm(kHemi, 2));
  CHECK(!hemi.bounded);
  REQUIRE(hemi.rays.size() == 1);
  CHECK(primitive_direction(hemi.rays[0]) == Vector{-1, 0});
  CHECK(ball_geometry(norm({{1}, {-1}}, 1)).vertices.size() == 2);
}

TEST_CASE("exact index examples") {
  const auto box = index_exact(norm(kBox, 2));
  CHECK(box.c == Rational(1, 2));
  CHECK(box.c_bar == Extended(Rational(2)));
  REQUIRE(box.witness_vertex);
  CHECK((*box.witness_vertex)[1] == Rational(1));
  CHECK(grid_oracle(norm(kBox, 2), 200) == Rational(1, 2));

  const auto hemi = index_exact(norm(kHemi, 2));
  CHECK(hemi.c == Rational(0));
  CHECK(!hemi.bounded);
  REQUIRE(hemi.witness_ray);
  CHECK(primitive_direction(*hemi.witness_ray) == Vector{-1, 0});

  const auto sym = index_exact(norm({{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}}, 2));
  CHECK(sym.c == Rational(1));
}

TEST_CASE("face LP route agrees with the vertex route") {
  Rng rng(41);
  for (int trial = 0; trial < 150; ++trial) {
    const auto d = static_cast<std::size_t>(rng.uniform_int(1, 3));
    const auto n = trial % 2 ? random_norm(rng, d) : random_bounded_norm(rng, d);
    const auto r = index_exact(n);
    INFO("trial " << trial);
    CHECK(index_by_faces(n) == r.c);
    if (r.bounded) CHECK(conjugate_index_by_faces(n) == r.c_bar);
    if (d == 2 && r.bounded) CHECK(grid_oracle(n, 60) >= r.c);
  }
}

TEST_CASE("unbounded ball can have finite conjugate index") {
  // |x| = max(x, 0) on the line: the ball (-inf, 1] is unbounded, c = 0,
  // yet |-x| / |x| over |x| > 0 is identically 0.
  const auto n = norm({{1}, {0}}, 1);
  const auto r = index_exact(n);
  CHECK(r.c == Rational(0));
  CHECK(r.c_bar == Extended(Rational(0)));
}

TEST_CASE("sampled index is an upper bound and deterministic") {
  const auto box = norm(kBox, 2);
  const auto s = index_sampled(box, {100000, 1});
  CHECK(s.value >= Rational(1, 2));
  CHECK(s.value <= Rational(1, 2) + Rational(1, 1000));
  CHECK(index_sampled(box, {100000, 1}).value == s.value);

  const auto sym = norm({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, 2);
  CHECK(index_sampled(sym, {10, 3}).value == Rational(1));
  CHECK(index_sampled(sym, {1000, 3}).value == Rational(1));

  const auto hemi = norm(kHemi, 2);
  const Rational few = index_sampled(hemi, {10, 2}).value;
  const Rational many = index_sampled(hemi, {100000, 2}).value;
  CHECK(many <= few);
  CHECK(many < Rational(1, 100));

  CHECK_THROWS_AS(index_sampled(norm({{1}, {-1}}, 1), {10, 1, SamplingScheme::AngularGrid}), MalformedInput);
}

TEST_CASE("fallback beyond the enumeration cap") {
  const auto n = example_weighted_sup(3);
  CHECK_THROWS_AS(index_exact(n, EnumerationOptions{2}), CapabilityError);
  const auto r = index_with_fallback(n, EnumerationOptions{2}, {2000, 1});
  CHECK(!r.exact);
  CHECK(r.c >= Rational(1, 3));
  CHECK(index_with_fallback(n, {}, {}).exact);
}

TEST_CASE("flat norm examples") {
  const auto box = norm(kBox, 2);
  CHECK(flat_norm(box, {1, 0}).value == Extended(Rational(1)));
  CHECK(flat_norm(box, {0, 0}).value == Extended(Rational(0)));
  const auto hemi = norm(kHemi, 2);
  const auto f = flat_norm(hemi, {-1, 0});
  CHECK(f.value.is_infinite());
  CHECK(primitive_direction(f.ray) == Vector{-1, 0});
  CHECK(flat_norm_gauge(hemi, {-1, 0}).value.is_infinite());
  CHECK(flat_norm_gauge(box, {1, 0}).value == Extended(Rational(1)));
  CHECK_THROWS_AS(flat_norm(box, {1}), MalformedInput);
}

TEST_CASE("dual cone membership and structure") {
  const auto hemi = norm(kHemi, 2);
  CHECK(dual_cone_membership(hemi, {1, 0}).member);
  CHECK(!dual_cone_membership(hemi, {-1, 0}).member);
  CHECK(dual_cone_membership(hemi, {0, 0}).member);
  const auto st = dual_cone_is_vector_space(hemi);
  CHECK(!st.is_vector_space);
  REQUIRE(st.p);
  CHECK(*st.p == Vector{1, 0});
  CHECK(primitive_direction(*st.ray) == Vector{-1, 0});
  CHECK(dual_cone_is_vector_space(norm(kBox, 2)).is_vector_space);
  CHECK(dual_cone_is_vector_space(norm({{1}, {-1}}, 1)).is_vector_space);
}

TEST_CASE("associated dual norm is dominated by the flat norm") {
  Rng rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const auto d = static_cast<std::size_t>(rng.uniform_int(1, 3));
    const auto n = random_norm(rng, d);
    const Vector p = random_vector(rng, d, 3, 2);
    const auto f = flat_norm(n, p);
    if (f.value.is_finite()) CHECK(associated_dual_norm(n, p) <= f.value.value());
  }
}

TEST_CASE("weighted sup example") {
  const auto n = example_weighted_sup(4);
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(n(unit_vector(4, k)) == Rational(1));
    CHECK(n(-unit_vector(4, k)) == Rational(1, static_cast<long>(k + 1)));
  }
  CHECK(index_exact(example_weighted_sup(1)).c == Rational(1));
  CHECK_THROWS_AS(example_weighted_sup(0), MalformedInput);
}

TEST_CASE("induced space sample") {
  const auto abs = norm({{1}, {-1}}, 1);
  CHECK(induced_space_sample(abs, {{0}, {1}}).matrix() == Matrix{{0, 1}, {1, 0}});
  const auto w = example_weighted_sup(2);
  CHECK(induced_space_sample(w, {{0, 0}, {1, 0}}).matrix() == Matrix{{0, 1}, {1, 0}});
  const auto s = induced_space_sample(w, {{0, 0}, {0, -1}});
  CHECK(s.matrix() == Matrix{{0, Rational(1, 2)}, {1, 0}});
  CHECK(index_of_symmetry(s).c == Rational(1, 2));
  CHECK(s.labels() == std::vector<std::string>{"p0", "p1"});
  CHECK_THROWS_AS(induced_space_sample(abs, {{1}, {1}}), ValidationError);
}
