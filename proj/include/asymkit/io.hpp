#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "asymkit/asymnorm.hpp"
#include "asymkit/baire.hpp"
#include "asymkit/quasimetric.hpp"
#include "asymkit/semilip.hpp"

namespace asymkit::io {

using nlohmann::json;

inline constexpr int kFormatVersion = 1;
inline constexpr const char* kToolVersion = "asymkit 0.1.0";

/// Scalars are rational strings "p/q" or integer strings; JSON integers are
/// accepted as shorthand. Floating-point input (JSON numbers with a fraction,
/// or decimal strings) is rejected unless `approx` is set, in which case it
/// is rounded to the best rational with denominator <= max_denominator.
struct ScalarPolicy {
  bool approx = false;
  long max_denominator = 1000000;
};

Rational parse_scalar(const json& j, const ScalarPolicy& policy = {});
Vector parse_vector(const json& j, const ScalarPolicy& policy = {});
json to_json(const Rational& r);
json to_json(const Extended& e);
json to_json(const Vector& v);
json to_json(const Matrix& m);

/// Comma-separated rationals, e.g. "1,-1/2".
Vector parse_vector_text(const std::string& text, const ScalarPolicy& policy = {});

/// {version, points:[labels], base_point, d:[[...]]}
FiniteQuasiMetricSpace space_from_json(const json& j, const ScalarPolicy& policy = {});
json space_to_json(const FiniteQuasiMetricSpace& space);

/// {version, dim, functionals:[[...]]}
PolyhedralAsymNorm norm_from_json(const json& j, const ScalarPolicy& policy = {});
json norm_to_json(const PolyhedralAsymNorm& norm);

/// {version, support:[labels], coefficients:[...]}
Molecule molecule_from_json(const json& j, const FiniteQuasiMetricSpace& space, const ScalarPolicy& policy = {});
json molecule_to_json(const Molecule& m, const FiniteQuasiMetricSpace& space);

/// {version, norm_ref, p, ray, flat_norm_p, cover}
MeagerCoverCertificate certificate_from_json(const json& j);
json certificate_to_json(const MeagerCoverCertificate& cert, const std::string& norm_ref);

/// {version, probes:[{x0:[...], eps, n}]}
std::vector<Probe> probes_from_json(const json& j, const ScalarPolicy& policy = {});
json probes_to_json(const std::vector<Probe>& probes);

enum class DocumentKind { Space, Norm, Molecule, Certificate, Probes, Unknown };
DocumentKind detect_kind(const json& j);

/// {version, tool, command, inputs, seed, results, checks:[{name, status, witness}]}
class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  json& inputs() { return inputs_; }
  json& results() { return results_; }
  void set_seed(std::uint64_t seed) { seed_ = seed; }
  void add_check(std::string name, bool passed, json witness = nullptr);
  bool all_passed() const;

  json to_json() const;

 private:
  std::string command_;
  json inputs_ = json::object();
  json results_ = json::object();
  json checks_ = json::array();
  json seed_ = nullptr;
};

json read_json_file(const std::filesystem::path& path);

/// Writes `text` to a temporary sibling and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, const std::string& text);
void write_json_atomic(const std::filesystem::path& path, const json& j);

/// Canonical text form: two-space indent, sorted keys, trailing newline.
std::string dump(const json& j);

}  // namespace asymkit::io
