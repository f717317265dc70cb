#include <doctest.h>

#include "asymkit/baire.hpp"
#include "asymkit/error.hpp"
#include "asymkit/random.hpp"
#include "generators.hpp"

using namespace asymkit;
using namespace asymkit::testing;

namespace {

PolyhedralAsymNorm hemi() { return PolyhedralAsymNorm::validate({{1, 0}, {0, 1}, {0, -1}}, 2); }

}  // namespace

TEST_CASE("classification examples") {
  const auto w = classify(example_weighted_sup(3));
  CHECK(w.verdict == BaireVerdict::BaireEquivToNorm);
  CHECK(w.c == Rational(1, 3));
  CHECK(w.lower == Rational(1, 3));
  CHECK(w.upper == Rational(1));
  CHECK(!w.certificate);

  const auto h = classify(hemi());
  CHECK(h.verdict == BaireVerdict::NotBaire);
  CHECK(h.c == Rational(0));
  REQUIRE(h.certificate);
  CHECK(to_string(h.verdict) == "not_baire");

  const auto a = classify(PolyhedralAsymNorm::validate({{1}, {-1}}, 1));
  CHECK(a.verdict == BaireVerdict::BaireEquivToNorm);
  CHECK(a.c == Rational(1));
}

TEST_CASE("certificate generation") {
  const auto cert = generate_certificate(hemi());
  CHECK(cert.p == Vector{1, 0});
  CHECK(primitive_direction(cert.ray) == Vector{-1, 0});
  CHECK(cert.flat_norm_p == Rational(1));
  CHECK(cert.cover == "F_n = {x : -p(x) <= n}");
  for (std::size_t n = 1; n <= 5; ++n) CHECK_THROWS_AS(generate_certificate(example_weighted_sup(n)), NoCertificate);
  CHECK_THROWS_AS(generate_certificate(PolyhedralAsymNorm::validate({{1, 1}, {-1, 0}, {0, -1}}, 2)), NoCertificate);
}

TEST_CASE("verification of the worked probe") {
  MeagerCoverCertificate cert{{1, 0}, {-1, 0}, Rational(1)};
  const auto rep = verify_certificate(hemi(), cert, {{{5, 5}, Rational(1, 10), Rational(100)}});
  CHECK(rep.valid);
  REQUIRE(rep.probes.size() == 1);
  CHECK(rep.probes[0].t == Rational(106));
  CHECK(rep.probes[0].y == Vector{-101, 5});
  CHECK(rep.probes[0].distance == Rational(0));
  CHECK(rep.probes[0].minus_p_y == Rational(101));
  CHECK(!rep.universal_argument.empty());
}

TEST_CASE("tampered certificates name the failing clause") {
  const MeagerCoverCertificate good{{1, 0}, {-1, 0}, Rational(1)};
  const std::vector<Probe> probes{{{0, 0}, Rational(1), Rational(3)}};

  auto bad_ray = good;
  bad_ray.ray = {1, 0};
  const auto r1 = verify_certificate(hemi(), bad_ray, probes);
  CHECK(!r1.valid);
  CHECK(r1.failing_clause == "a_recession_ray");

  auto bad_p = good;
  bad_p.p = {0, 1};
  const auto r2 = verify_certificate(hemi(), bad_p, probes);
  CHECK(!r2.valid);
  CHECK(r2.failing_clause == "c_p_decreases_along_ray");

  auto outside = good;
  outside.p = {2, 0};
  CHECK(verify_certificate(hemi(), outside, probes).failing_clause == "b_p_in_conv_hull");

  auto zero_ray = good;
  zero_ray.ray = {0, 0};
  CHECK(verify_certificate(hemi(), zero_ray, probes).failing_clause == "a_recession_ray");

  auto bad_flat = good;
  bad_flat.flat_norm_p = Rational(-1);
  CHECK(verify_certificate(hemi(), bad_flat, probes).failing_clause == "e_flat_norm_range");

  auto short_p = good;
  short_p.p = {1};
  CHECK(verify_certificate(hemi(), short_p, probes).failing_clause == "shape");

  const auto malformed = verify_certificate(hemi(), good, {{{0, 0}, Rational(0), Rational(1)}});
  CHECK(malformed.failing_clause == "d_probe_0");
}

TEST_CASE("random unbounded norms: generated certificates verify") {
  Rng rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const auto d = static_cast<std::size_t>(rng.uniform_int(1, 4));
    const auto n = random_unbounded_norm(rng, d);
    const auto cls = classify(n);
    REQUIRE(cls.verdict == BaireVerdict::NotBaire);
    std::vector<Probe> probes;
    for (int k = 0; k < 5; ++k)
      probes.push_back({random_vector(rng, d, 20, 3), random_positive(rng, 3, 100), Rational(rng.uniform_int(0, 1000))});
    const auto rep = verify_certificate(n, *cls.certificate, probes);
    INFO("trial " << trial << " failing " << rep.failing_clause);
    CHECK(rep.valid);
  }
}

TEST_CASE("random bounded norms: sandwich constants hold") {
  Rng rng(18);
  for (int trial = 0; trial < 40; ++trial) {
    const auto d = static_cast<std::size_t>(rng.uniform_int(1, 4));
    const auto n = random_bounded_norm(rng, d);
    const auto cls = classify(n);
    REQUIRE(cls.verdict == BaireVerdict::BaireEquivToNorm);
    for (int k = 0; k < 20; ++k) {
      const Vector x = random_vector(rng, d);
      const Rational s = associated_norm(n, x);
      CHECK(cls.lower * s <= n(x));
      CHECK(n(x) <= cls.upper * s);
    }
  }
}
