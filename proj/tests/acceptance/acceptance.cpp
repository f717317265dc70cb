// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "asymkit/asymnorm.hpp"
#include "asymkit/baire.hpp"
#include "asymkit/quasimetric.hpp"
#include "asymkit/random.hpp"
#include "asymkit/semilip.hpp"
#include "generators.hpp"
#include "golden_cases.hpp"

using namespace asymkit;
using namespace asymkit::testing;

namespace {

struct Result {
  bool passed = true;
  std::ostringstream detail;
  std::string first_failure;

  void require(bool ok, const std::string& what) {
    if (!ok && passed) first_failure = what;
    passed = passed && ok;
  }
};

// ---- 1: index axioms over random finite spaces -------------------------

void index_axioms(Result& r) {
  Rng rng(1001);
  int spaces = 0, quasi = 0, metric = 0, hemi = 0;
  for (; spaces < 1200; ++spaces) {
    const auto n = static_cast<std::size_t>(rng.uniform_int(1, 8));
    const auto s = random_space(rng, n);
    const auto rep = index_of_symmetry(s);
    const std::string tag = "space " + std::to_string(spaces);
    r.require(rep.c.sign() >= 0 && rep.c <= Rational(1), tag + ": c outside [0,1]");
    if (rep.c.sign() > 0) r.require(rep.c_bar == Extended(Rational(1) / rep.c), tag + ": c_bar != 1/c");
    r.require((rep.c == Rational(1)) == s.is_symmetric(), tag + ": c = 1 disagrees with symmetry");
    quasi += s.is_quasi_metric();
    metric += s.is_symmetric();
    hemi += !s.is_quasi_metric();
  }
  r.require(metric > 0 && hemi > 0, "corpus lacks metric or hemi spaces");
  r.detail << spaces << " spaces (" << quasi << " quasi-metric, " << metric << " metric, " << hemi << " hemi)";
}

// ---- 2: sandwich inequality -------------------------------------------

PolyhedralAsymNorm mixed_norm(Rng& rng, std::size_t dim, int k) {
  switch (k % 3) {
    case 0: return random_norm(rng, dim);
    case 1: return random_bounded_norm(rng, dim);
    default: return random_unbounded_norm(rng, dim);
  }
}

void sandwich(Result& r) {
  Rng rng(2002);
  int norms = 0;
  for (; norms < 200; ++norms) {
    const auto d = static_cast<std::size_t>(rng.uniform_int(1, 4));
    const auto n = mixed_norm(rng, d, norms);
    const Rational c = index_exact(n).c;
    for (int k = 0; k < 100; ++k) {
      const Vector x = random_vector(rng, d, 9, 7);
      const Rational s = associated_norm(n, x), v = n(x);
      r.require(c * s <= v && v <= s, "norm " + std::to_string(norms) + ": sandwich fails at " + to_string(x));
    }
  }
  r.detail << norms << " norms x 100 vectors, exact";
}

// ---- 3: bounded ball, positive index and symmetric dual cone ------------

void ball_index_dual(Result& r) {
  Rng rng(3003);
  int norms = 0, bounded = 0;
  for (; norms < 600; ++norms) {
    const auto d = static_cast<std::size_t>(rng.uniform_int(1, 4));
    const auto n = mixed_norm(rng, d, norms);
    const bool positive = index_exact(n).c.sign() > 0;
    const bool ball_bounded = ball_geometry(n).bounded;
    const bool vector_space = dual_cone_is_vector_space(n).is_vector_space;
    const bool faces_positive = index_by_faces(n).sign() > 0;
    r.require(positive == ball_bounded && ball_bounded == vector_space && vector_space == faces_positive,
              "norm " + std::to_string(norms) + ": predicates disagree");
    bounded += ball_bounded;
  }
  r.require(bounded > 0 && bounded < norms, "corpus lacks one ball type");
  r.detail << norms << " norms (" << bounded << " bounded, " << norms - bounded << " unbounded)";
}

// ---- 4: weighted sup truncations ----------------------------------------

void weighted_sup(Result& r) {
  Rational previous(2);
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto norm = example_weighted_sup(n);
    for (std::size_t k = 0; k < n; ++k) {
      r.require(norm(unit_vector(n, k)) == Rational(1), "|e_n| != 1");
      r.require(norm(-unit_vector(n, k)) == Rational(1, static_cast<long>(k + 1)), "|-e_n| != 1/n");
    }
    const Rational c = index_exact(norm, EnumerationOptions{8}).c;
    r.require(c == Rational(1, static_cast<long>(n)), "N = " + std::to_string(n) + ": c = " + c.to_string());
    r.require(c < previous, "c not strictly decreasing");
    previous = c;
    r.detail << (n > 1 ? " " : "") << c;
  }
}

// ---- 5: sampled grid oracle vs exact index -----------------------------

void grid_oracle(Result& r) {
  Rng rng(5005);
  const Rational tolerance(1, 1000);
  Rational worst_gap(0);
  int norms = 0;
  for (; norms < 50; ++norms) {
    const auto n = random_bounded_norm(rng, 2);
    const Rational c = index_exact(n).c;
    const auto s = index_sampled(n, {100000, static_cast<std::uint64_t>(norms), SamplingScheme::AngularGrid});
    const Rational gap = s.value - c;
    r.require(gap.sign() >= 0, "norm " + std::to_string(norms) + ": sampled value below exact c");
    r.require(gap <= tolerance, "norm " + std::to_string(norms) + ": gap " + gap.to_string());
    if (gap > worst_gap) worst_gap = gap;
  }
  r.detail << norms << " norms, 10^5 grid directions, worst gap " << worst_gap.to_double();
}

// ---- 6: certificate round trip and mutation soundness -------------------

void certificates(Result& r) {
  Rng rng(6006);
  int norms = 0, mutations = 0, caught = 0;
  for (; norms < 100; ++norms) {
    const auto d = static_cast<std::size_t>(rng.uniform_int(1, 4));
    const auto n = random_unbounded_norm(rng, d);
    const auto cert = generate_certificate(n);
    std::vector<Probe> probes;
    for (int k = 0; k < 10; ++k)
      probes.push_back({random_vector(rng, d, 50, 7), random_positive(rng, 5, 1000), Rational(rng.uniform_int(0, 10000))});
    const auto ok = verify_certificate(n, cert, probes);
    r.require(ok.valid, "norm " + std::to_string(norms) + ": generated certificate rejected at " + ok.failing_clause);

    auto expect = [&](const MeagerCoverCertificate& bad, const std::string& clause) {
      ++mutations;
      const auto rep = verify_certificate(n, bad, probes);
      const bool hit = !rep.valid && rep.failing_clause == clause;
      caught += hit;
      r.require(hit, "norm " + std::to_string(norms) + ": mutation for " + clause + " reported '" +
                         rep.failing_clause + "'");
    };

    // r scaled into the ball: a unit-sphere point u / |u| with |u| > 0.
    Vector u;
    do u = random_vector(rng, d, 5, 3);
    while (n(u).sign() <= 0);
    auto m1 = cert;
    m1.ray = (Rational(1) / n(u)) * u;
    expect(m1, "a_recession_ray");

    auto m2 = cert;  // sign flip of r: |-r| > 0
    m2.ray = -cert.ray;
    expect(m2, "a_recession_ray");

    auto m3 = cert;  // sign flip of p: -p is not even in the dual cone
    m3.p = -cert.p;
    expect(m3, "b_p_in_conv_hull");

    auto m4 = cert;  // p scaled far outside conv{a_i}
    m4.p = Rational(1000) * cert.p;
    expect(m4, "b_p_in_conv_hull");

    auto m5 = cert;  // sign flip of the recorded flat norm (positive for p != 0)
    m5.flat_norm_p = -cert.flat_norm_p;
    expect(m5, "e_flat_norm_range");

    for (const auto& a : n.functionals()) {  // a member of conv{a_i} constant along r
      if (dot(a, cert.ray).is_zero()) {
        auto m6 = cert;
        m6.p = a;
        expect(m6, "c_p_decreases_along_ray");
        break;
      }
    }
  }
  r.detail << norms << " certificates x 10 probes; " << caught << "/" << mutations << " mutations rejected";
}

// ---- 7 and 8: free-space molecules --------------------------------------

std::vector<FiniteQuasiMetricSpace> molecule_corpus() {
  Rng rng(7007);
  std::vector<FiniteQuasiMetricSpace> out;
  for (int k = 0; k < 200; ++k) out.push_back(random_space(rng, static_cast<std::size_t>(rng.uniform_int(2, 6))));
  return out;
}

void delta_isometry(Result& r) {
  std::size_t pairs = 0;
  const auto corpus = molecule_corpus();
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    const auto& s = corpus[k];
    for (std::size_t x = 0; x < s.size(); ++x) {
      for (std::size_t y = 0; y < s.size(); ++y) {
        if (x == y) continue;
        ++pairs;
        const auto v = molecule_flat_norm(s, Molecule::pair(x, y)).value;
        r.require(v == Extended(s.d(y, x)), "space " + std::to_string(k) + ": pair norm differs from d(y,x)");
      }
    }
  }
  r.detail << corpus.size() << " spaces, " << pairs << " ordered pairs";
}

void comp_index(Result& r) {
  std::size_t general = 0, below = 0;
  const auto corpus = molecule_corpus();
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    FreeIndexOptions o;
    o.count = 20;
    o.seed = k;
    const auto rep = molecule_index_sample(corpus[k], o);
    r.require(rep.c_pairs == rep.c_space, "space " + std::to_string(k) + ": pair minimum differs from c(X)");
    r.require(rep.c_sample <= rep.c_space, "space " + std::to_string(k) + ": c_sample exceeds c(X)");
    for (const auto& m : rep.ratios) general += !m.is_pair;
    below += rep.below_space_index.size();
  }
  r.detail << corpus.size() << " spaces, " << general << " general molecules recorded, " << below
           << " strictly below c(X)";
}

// ---- 9: flat norm LP vs gauge -----------------------------------------

void flat_norm_agreement(Result& r) {
  Rng rng(9009);
  int finite = 0, infinite = 0, trial = 0;
  while (finite < 500) {
    ++trial;
    const auto d = static_cast<std::size_t>(rng.uniform_int(1, 4));
    const auto n = mixed_norm(rng, d, trial);
    const Vector p = random_vector(rng, d, 4, 3);
    const auto lp = flat_norm(n, p);
    const auto gauge = flat_norm_gauge(n, p);
    const std::string tag = "pair " + std::to_string(trial);
    r.require(lp.value.is_finite() == gauge.value.is_finite(), tag + ": verdicts disagree");
    if (lp.value.is_finite() && gauge.value.is_finite()) {
      ++finite;
      r.require(lp.value == gauge.value, tag + ": values differ");
    } else if (lp.value.is_infinite() && gauge.value.is_infinite()) {
      ++infinite;
      for (const Vector* ray : {&lp.ray, &gauge.ray}) {
        r.require(ray->size() == d && dot(p, *ray).sign() > 0 && n(*ray).is_zero(), tag + ": ray witness fails");
      }
    }
  }
  r.require(infinite > 0, "no unbounded pairs drawn");
  r.detail << finite << " finite pairs, " << infinite << " unbounded pairs with verified rays";
}

// ---- 10: CLI goldens and exit codes -------------------------------------

void cli_contract(Result& r) {
  const auto results = golden::run_all(ASYMKIT_CLI_PATH, ASYMKIT_GOLDEN_DIR, ASYMKIT_GOLDEN_WORK);
  int ok = 0;
  for (const auto& g : results) {
    ok += g.passed;
    r.require(g.passed, g.name + ":" + g.detail);
  }
  r.detail << ok << "/" << results.size() << " golden cases (corrupted certificate -> 1, invalid space -> 3)";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Result&)>>> criteria{
      {"AC1 index axioms", index_axioms},
      {"AC2 sandwich inequality", sandwich},
      {"AC3 ball / index / dual cone equivalence", ball_index_dual},
      {"AC4 weighted sup truncations c = 1/N", weighted_sup},
      {"AC5 grid oracle within 1e-3 above exact c", grid_oracle},
      {"AC6 certificate round trip and mutations", certificates},
      {"AC7 delta isometry", delta_isometry},
      {"AC8 pair molecules attain c(X), samples bounded by it", comp_index},
      {"AC9 flat norm LP vs gauge", flat_norm_agreement},
      {"AC10 CLI goldens and exit codes", cli_contract},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Result r;
    const auto start = std::chrono::steady_clock::now();
    try {
      run(r);
    } catch (const std::exception& e) {
      r.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (r.passed ? "PASS " : "FAIL ") << name << " [" << r.detail.str() << "; " << secs << " s]";
    if (!r.passed) std::cout << " first failure: " << r.first_failure;
    std::cout << std::endl;
    failed += !r.passed;
  }
  return failed;
}
