#include "asymkit/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace asymkit::io {

namespace {

void require_version(const json& j, const char* what) {
  if (!j.is_object()) throw ParseError(std::string(what) + ": document must be a JSON object");
  if (!j.contains("version")) throw ParseError(std::string(what) + ": missing \"version\"");
  const json& v = j.at("version");
  if (!v.is_number_integer() || v.get<long>() != kFormatVersion) {
    throw ParseError(std::string(what) + ": unsupported version");
  }
}

const json& field(const json& j, const char* key, const char* what) {
  if (!j.contains(key)) throw ParseError(std::string(what) + ": missing \"" + key + "\"");
  return j.at(key);
}

bool looks_decimal(const std::string& s) {
  return s.find_first_of(".eE") != std::string::npos;
}

std::string label_of_json(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long>());
  throw ParseError("point labels must be strings");
}

}  // namespace

Rational parse_scalar(const json& j, const ScalarPolicy& policy) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_number_float()) {
    if (!policy.approx) throw ParseError("floating-point scalar without --approx");
    return Rational::from_double(j.get<double>(), policy.max_denominator);
  }
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (policy.approx && looks_decimal(s)) {
      try {
        return Rational::from_double(std::stod(s), policy.max_denominator);
      } catch (const std::logic_error&) {
        throw ParseError("not a number: \"" + s + "\"");
      }
    }
    return Rational::parse(s);
  }
  throw ParseError("scalar must be a rational string or an integer");
}

Vector parse_vector(const json& j, const ScalarPolicy& policy) {
  if (!j.is_array()) throw ParseError("expected an array of scalars");
  Vector v;
  v.reserve(j.size());
  for (const auto& x : j) v.push_back(parse_scalar(x, policy));
  return v;
}

json to_json(const Rational& r) { return r.to_string(); }

json to_json(const Extended& e) { return e.to_string(); }

json to_json(const Vector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.to_string());
  return a;
}

json to_json(const Matrix& m) {
  json a = json::array();
  for (const auto& row : m) a.push_back(to_json(row));
  return a;
}

Vector parse_vector_text(const std::string& text, const ScalarPolicy& policy) {
  Vector v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw ParseError("empty entry in vector \"" + text + "\"");
    v.push_back(parse_scalar(json(item.substr(b, e - b + 1)), policy));
  }
  return v;
}

FiniteQuasiMetricSpace space_from_json(const json& j, const ScalarPolicy& policy) {
  require_version(j, "space");
  const json& d = field(j, "d", "space");
  if (!d.is_array()) throw ParseError("space: \"d\" must be an array of rows");
  Matrix m;
  for (const auto& row : d) m.push_back(parse_vector(row, policy));
  std::vector<std::string> labels;
  if (j.contains("points")) {
    if (!j.at("points").is_array()) throw ParseError("space: \"points\" must be an array");
    for (const auto& p : j.at("points")) labels.push_back(label_of_json(p));
  }
  std::size_t base = 0;
  if (j.contains("base_point")) {
    const json& b = j.at("base_point");
    if (b.is_number_unsigned() || b.is_number_integer()) {
      if (b.get<long>() < 0) throw ParseError("space: negative base_point");
      base = b.get<std::size_t>();
    } else if (b.is_string()) {
      const auto it = std::find(labels.begin(), labels.end(), b.get<std::string>());
      if (it == labels.end()) throw ParseError("space: base_point label not among points");
      base = static_cast<std::size_t>(it - labels.begin());
    } else {
      throw ParseError("space: base_point must be an index or a label");
    }
  }
  try {
    return FiniteQuasiMetricSpace::validate(std::move(m), std::move(labels), base);
  } catch (const MalformedInput& e) {
    throw ParseError(std::string("space: ") + e.what());
  }
}

json space_to_json(const FiniteQuasiMetricSpace& space) {
  return json{{"version", kFormatVersion},
              {"points", space.labels()},
              {"base_point", space.base_point()},
              {"d", to_json(space.matrix())}};
}

PolyhedralAsymNorm norm_from_json(const json& j, const ScalarPolicy& policy) {
  require_version(j, "norm");
  const json& dim = field(j, "dim", "norm");
  if (!dim.is_number_integer() || dim.get<long>() < 0) throw ParseError("norm: \"dim\" must be a nonnegative integer");
  const json& fs = field(j, "functionals", "norm");
  if (!fs.is_array()) throw ParseError("norm: \"functionals\" must be an array");
  Matrix m;
  for (const auto& row : fs) m.push_back(parse_vector(row, policy));
  return PolyhedralAsymNorm::validate(std::move(m), dim.get<std::size_t>());
}

json norm_to_json(const PolyhedralAsymNorm& norm) {
  return json{{"version", kFormatVersion}, {"dim", norm.dim()}, {"functionals", to_json(norm.functionals())}};
}

Molecule molecule_from_json(const json& j, const FiniteQuasiMetricSpace& space, const ScalarPolicy& policy) {
  require_version(j, "molecule");
  const json& support = field(j, "support", "molecule");
  if (!support.is_array()) throw ParseError("molecule: \"support\" must be an array");
  Molecule m;
  for (const auto& s : support) {
    const auto label = label_of_json(s);
    const auto idx = space.index_of(label);
    if (!idx) throw ParseError("molecule: unknown point \"" + label + "\"");
    m.support.push_back(*idx);
  }
  m.coefficients = parse_vector(field(j, "coefficients", "molecule"), policy);
  if (m.coefficients.size() != m.support.size()) throw ParseError("molecule: support/coefficients length mismatch");
  return m;
}

json molecule_to_json(const Molecule& m, const FiniteQuasiMetricSpace& space) {
  json support = json::array();
  for (auto i : m.support) support.push_back(space.labels().at(i));
  return json{{"version", kFormatVersion}, {"support", support}, {"coefficients", to_json(m.coefficients)}};
}

MeagerCoverCertificate certificate_from_json(const json& j) {
  require_version(j, "certificate");
  MeagerCoverCertificate c;
  c.p = parse_vector(field(j, "p", "certificate"));
  c.ray = parse_vector(field(j, "ray", "certificate"));
  c.flat_norm_p = parse_scalar(field(j, "flat_norm_p", "certificate"));
  if (j.contains("cover")) {
    if (!j.at("cover").is_string()) throw ParseError("certificate: \"cover\" must be a string");
    c.cover = j.at("cover").get<std::string>();
  }
  return c;
}

json certificate_to_json(const MeagerCoverCertificate& cert, const std::string& norm_ref) {
  return json{{"version", kFormatVersion}, {"norm_ref", norm_ref},       {"p", to_json(cert.p)},
              {"ray", to_json(cert.ray)},  {"flat_norm_p", to_json(cert.flat_norm_p)}, {"cover", cert.cover}};
}

std::vector<Probe> probes_from_json(const json& j, const ScalarPolicy& policy) {
  require_version(j, "probes");
  const json& ps = field(j, "probes", "probes");
  if (!ps.is_array()) throw ParseError("probes: \"probes\" must be an array");
  std::vector<Probe> out;
  for (const auto& p : ps) {
    out.push_back(Probe{parse_vector(field(p, "x0", "probe"), policy), parse_scalar(field(p, "eps", "probe"), policy),
                        parse_scalar(field(p, "n", "probe"), policy)});
  }
  return out;
}

json probes_to_json(const std::vector<Probe>& probes) {
  json ps = json::array();
  for (const auto& p : probes) ps.push_back(json{{"x0", to_json(p.x0)}, {"eps", to_json(p.epsilon)}, {"n", to_json(p.n)}});
  return json{{"version", kFormatVersion}, {"probes", ps}};
}

DocumentKind detect_kind(const json& j) {
  if (!j.is_object()) return DocumentKind::Unknown;
  if (j.contains("d")) return DocumentKind::Space;
  if (j.contains("functionals")) return DocumentKind::Norm;
  if (j.contains("support")) return DocumentKind::Molecule;
  if (j.contains("ray")) return DocumentKind::Certificate;
  if (j.contains("probes")) return DocumentKind::Probes;
  return DocumentKind::Unknown;
}

void Report::add_check(std::string name, bool passed, json witness) {
  checks_.push_back(json{{"name", std::move(name)}, {"status", passed ? "pass" : "fail"}, {"witness", std::move(witness)}});
}

bool Report::all_passed() const {
  for (const auto& c : checks_) {
    if (c.at("status") != "pass") return false;
  }
  return true;
}

json Report::to_json() const {
  return json{{"version", kFormatVersion}, {"tool", kToolVersion}, {"command", command_}, {"inputs", inputs_},
              {"seed", seed_},             {"results", results_},  {"checks", checks_}};
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_file_atomic(const std::filesystem::path& path, const std::string& text) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out << text;
    if (!out) throw Error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

void write_json_atomic(const std::filesystem::path& path, const json& j) { write_file_atomic(path, dump(j)); }

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace asymkit::io
