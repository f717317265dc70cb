#include "asymkit/baire.hpp"

#include <algorithm>

namespace asymkit {

std::string to_string(BaireVerdict v) {
  return v == BaireVerdict::NotBaire ? "not_baire" : "baire_equiv_to_norm";
}

bool VerificationReport::failed(const std::string& clause) const {
  return std::any_of(checks.begin(), checks.end(),
                     [&](const CertificateCheck& c) { return c.name == clause && !c.passed; });
}

MeagerCoverCertificate generate_certificate(const PolyhedralAsymNorm& norm, const EnumerationOptions& options) {
  const BallGeometry g = ball_geometry(norm, options);
  if (g.bounded) throw NoCertificate("unit ball is bounded (c > 0): the space is Baire");
  const Vector& r = g.rays.front();
  // |-r| > 0 by separation, so some generator decreases along r.
  for (const auto& a : norm.functionals()) {
    if (dot(a, r).sign() < 0) {
      MeagerCoverCertificate cert;
      cert.p = a;
      cert.ray = r;
      cert.flat_norm_p = flat_norm(norm, a).value.value();
      return cert;
    }
  }
  throw NoCertificate("no generator decreases along the recession ray");
}

BaireClassification classify(const PolyhedralAsymNorm& norm, const EnumerationOptions& options) {
  const NormIndexReport idx = index_exact(norm, options);
  BaireClassification out;
  out.c = idx.c;
  out.lower = idx.c;
  if (idx.c.is_zero()) {
    out.verdict = BaireVerdict::NotBaire;
    out.certificate = generate_certificate(norm, options);
    out.justification = "c = 0: the closed sets " + std::string(kCoverDescription) +
                        " cover the space and each has empty interior";
  } else {
    out.verdict = BaireVerdict::BaireEquivToNorm;
    out.justification = "c = " + idx.c.to_string() +
                        " > 0: c |x|_s <= |x| <= |x|_s, so the topology is that of the associated norm";
  }
  return out;
}

VerificationReport verify_certificate(const PolyhedralAsymNorm& norm, const MeagerCoverCertificate& cert,
                                      const std::vector<Probe>& probes) {
  VerificationReport rep;
  rep.universal_argument =
      "for every x0, eps > 0 and n: t = max(0, (n + p(x0)) / (-p(r))) + 1 gives y = x0 + t r with "
      "|y - x0| = t |r| = 0 < eps and -p(y) = -p(x0) + t (-p(r)) >= n + (-p(r)) > n, so no ball "
      "B(x0, eps) is contained in F_n";
  auto add = [&](std::string name, bool ok, std::string detail) {
    if (!ok && rep.failing_clause.empty()) rep.failing_clause = name;
    rep.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  const std::size_t d = norm.dim();
  if (cert.p.size() != d || cert.ray.size() != d) {
    add("shape", false, "certificate vectors do not match the norm dimension");
    rep.valid = false;
    return rep;
  }
  const auto& fs = norm.functionals();

  // (a) |r| = max_i <a_i, r> = 0 and r != 0.
  Rational r_norm = dot(fs.front(), cert.ray);
  for (const auto& a : fs) r_norm = std::max(r_norm, dot(a, cert.ray));
  const bool r_nonzero = !is_zero(cert.ray);
  add("a_recession_ray", r_nonzero && r_norm.is_zero(),
      r_nonzero ? "|r| = " + r_norm.to_string() : "r is the zero vector");

  // (b) p = sum lambda_i a_i with lambda >= 0, sum lambda = 1.
  {
    const ConeMembership m = convex_hull_membership(cert.p, fs);
    bool ok = false;
    std::string detail;
    if (!m.inside) {
      detail = "p lies outside conv{a_i}";
    } else {
      Vector sum = zeros(d);
      Rational total = 0;
      bool nonneg = m.coefficients.size() == fs.size();
      for (std::size_t i = 0; nonneg && i < fs.size(); ++i) {
        nonneg = m.coefficients[i].sign() >= 0;
        sum = sum + m.coefficients[i] * fs[i];
        total += m.coefficients[i];
      }
      ok = nonneg && total == Rational{1} && sum == cert.p;
      detail = ok ? "coefficients " + to_string(m.coefficients) : "returned coefficients do not reproduce p";
    }
    add("b_p_in_conv_hull", ok, detail);
  }

  // (c) <p, r> < 0.
  const Rational pr = dot(cert.p, cert.ray);
  add("c_p_decreases_along_ray", pr.sign() < 0, "<p, r> = " + pr.to_string());

  add("e_flat_norm_range", cert.flat_norm_p.sign() >= 0 && cert.flat_norm_p <= Rational{1},
      "recorded |p|_flat = " + cert.flat_norm_p.to_string());

  // (d) probes.
  for (std::size_t k = 0; k < probes.size(); ++k) {
    const Probe& pr_k = probes[k];
    const std::string name = "d_probe_" + std::to_string(k);
    if (pr_k.x0.size() != d || pr_k.epsilon.sign() <= 0 || pr_k.n.sign() < 0 || !pr_k.n.is_integer()) {
      add(name, false, "malformed probe");
      continue;
    }
    if (pr.sign() >= 0) {
      add(name, false, "skipped: <p, r> is not negative");
      continue;
    }
    ProbeOutcome o;
    const Rational minus_pr = -pr;
    o.t = std::max(Rational{0}, (pr_k.n + dot(cert.p, pr_k.x0)) / minus_pr) + Rational{1};
    o.y = pr_k.x0 + o.t * cert.ray;
    const Vector diff = o.y - pr_k.x0;
    o.distance = dot(fs.front(), diff);
    for (const auto& a : fs) o.distance = std::max(o.distance, dot(a, diff));
    o.minus_p_y = -dot(cert.p, o.y);
    o.passed = o.distance < pr_k.epsilon && o.minus_p_y > pr_k.n;
    add(name, o.passed,
        "t* = " + o.t.to_string() + ", y = " + to_string(o.y) + ", |y - x0| = " + o.distance.to_string() +
            ", -p(y) = " + o.minus_p_y.to_string());
    rep.probes.push_back(std::move(o));
  }

  rep.valid = rep.failing_clause.empty();
  return rep;
}

}  // namespace asymkit
