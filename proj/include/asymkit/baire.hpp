#pragma once

#include <optional>
#include <string>
#include <vector>

#include "asymkit/asymnorm.hpp"

namespace asymkit {

inline constexpr const char* kCoverDescription = "F_n = {x : -p(x) <= n}";

/// Witness that a polyhedral asymmetric normed space is not Baire: the sets
/// F_n = {x : -p(x) <= n} are closed (p is in the dual cone, so -p is lower
/// semicontinuous), cover the space, and have empty interior because every
/// ball B(x0, eps) contains the points x0 + t r with t large.
struct MeagerCoverCertificate {
  Vector p;
  Vector ray;
  Rational flat_norm_p;
  std::string cover = kCoverDescription;
};

enum class BaireVerdict { BaireEquivToNorm, NotBaire };

std::string to_string(BaireVerdict v);

/// Finite-dimensional spaces are complete for the associated norm, so the
/// classification reduces to the sign of c.
struct BaireClassification {
  BaireVerdict verdict = BaireVerdict::BaireEquivToNorm;
  Rational c;
  /// Sandwich constants: lower |x|_s <= |x| <= upper |x|_s.
  Rational lower;
  Rational upper = 1;
  std::string justification;
  std::optional<MeagerCoverCertificate> certificate;
};

BaireClassification classify(const PolyhedralAsymNorm& norm, const EnumerationOptions& options = {});

/// Throws NoCertificate when the unit ball is bounded (c > 0).
MeagerCoverCertificate generate_certificate(const PolyhedralAsymNorm& norm, const EnumerationOptions& options = {});

struct Probe {
  Vector x0;
  Rational epsilon;
  Rational n;
};

struct CertificateCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ProbeOutcome {
  Rational t;
  Vector y;
  Rational distance;  // |y - x0|
  Rational minus_p_y;  // -p(y)
  bool passed = false;
};

struct VerificationReport {
  bool valid = false;
  std::vector<CertificateCheck> checks;
  std::vector<ProbeOutcome> probes;
  /// Name of the first failed check, empty when valid.
  std::string failing_clause;
  std::string universal_argument;

  bool failed(const std::string& clause) const;
};

/// Re-checks a certificate from scratch with exact arithmetic:
///   (a) |r| = 0 and r != 0;
///   (b) p in conv{a_i}, confirmed by substituting explicit coefficients;
///   (c) <p, r> < 0;
///   (e) the recorded flat norm lies in [0, 1];
///   (d) per probe, y = x0 + t* r with t* = max(0, (n + p(x0)) / -p(r)) + 1
///       satisfies |y - x0| = 0 < eps and -p(y) > n.
/// Clause names are "a_recession_ray", "b_p_in_conv_hull", "c_p_decreases_along_ray",
/// "e_flat_norm_range" and "d_probe_<k>"; "shape" covers dimension errors.
VerificationReport verify_certificate(const PolyhedralAsymNorm& norm, const MeagerCoverCertificate& cert,
                                      const std::vector<Probe>& probes);

}  // namespace asymkit
