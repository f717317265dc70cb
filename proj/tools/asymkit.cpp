// asymkit command-line interface.
//
// Exit codes: 0 success, 1 failed check or invalid certificate, 2 parse
// error, 3 validation failure, 4 enumeration cap exceeded.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "asymkit/asymnorm.hpp"
#include "asymkit/baire.hpp"
#include "asymkit/io.hpp"
#include "asymkit/quasimetric.hpp"
#include "asymkit/semilip.hpp"

namespace fs = std::filesystem;
using namespace asymkit;
using asymkit::io::json;
using asymkit::io::Report;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kParse = 2, kValidation = 3, kCapability = 4 };

struct GlobalOptions {
  bool approx = false;
  long max_denominator = 1000000;

  io::ScalarPolicy policy() const { return {approx, max_denominator}; }
};

EnumerationOptions enumeration_options() {
  EnumerationOptions o;
  if (const char* env = std::getenv("ASYMKIT_DIM_CAP")) {
    try {
      const long cap = std::stol(env);
      if (cap < 0) throw std::invalid_argument("negative");
      o.dimension_cap = static_cast<std::size_t>(cap);
    } catch (const std::exception&) {
      throw ParseError(std::string("ASYMKIT_DIM_CAP is not a nonnegative integer: ") + env);
    }
  }
  return o;
}

fs::path default_report_path(const fs::path& input, const std::string& command) {
  fs::path p = input;
  p.replace_extension();
  p += "." + command + ".report.json";
  return p;
}

std::string base_name(const fs::path& p) { return p.filename().string(); }

int finish(Report& report, const fs::path& out, int failure_code = kCheckFailed) {
  io::write_json_atomic(out, report.to_json());
  std::cout << "report: " << out.string() << "\n";
  return report.all_passed() ? kOk : failure_code;
}

json pair_json(const std::optional<IndexPair>& p, const FiniteQuasiMetricSpace& s) {
  if (!p) return nullptr;
  return json::array({s.labels()[p->first], s.labels()[p->second]});
}

// ---- validate -----------------------------------------------------------

int cmd_validate(const GlobalOptions& g, const fs::path& input, const std::string& out) {
  const json doc = io::read_json_file(input);
  Report report("validate");
  report.inputs()["file"] = base_name(input);
  const fs::path out_path = out.empty() ? default_report_path(input, "validate") : fs::path(out);
  const auto kind = io::detect_kind(doc);
  try {
    if (kind == io::DocumentKind::Space) {
      report.results()["kind"] = "space";
      const auto space = io::space_from_json(doc, g.policy());
      report.results()["valid"] = true;
      report.results()["points"] = space.size();
      report.results()["is_quasi_metric"] = space.is_quasi_metric();
      report.results()["is_metric"] = space.is_symmetric();
      report.add_check("space_axioms", true);
      std::cout << "valid space with " << space.size() << " points\n";
    } else if (kind == io::DocumentKind::Norm) {
      report.results()["kind"] = "norm";
      const auto norm = io::norm_from_json(doc, g.policy());
      report.results()["valid"] = true;
      report.results()["dim"] = norm.dim();
      report.results()["functionals"] = norm.functionals().size();
      report.add_check("norm_axioms", true);
      std::cout << "valid asymmetric norm in dimension " << norm.dim() << "\n";
    } else {
      throw ParseError("validate: document is neither a space nor a norm");
    }
  } catch (const SpaceValidationError& e) {
    const auto& v = e.violation();
    report.results()["valid"] = false;
    report.results()["violation"] = json{{"kind", to_string(v.kind)}, {"indices", v.indices}, {"message", v.message}};
    report.add_check("space_axioms", false, json{{"kind", to_string(v.kind)}, {"indices", v.indices}});
    std::cout << "invalid: " << v.message << "\n";
    return finish(report, out_path, kValidation);
  } catch (const NormValidationError& e) {
    const auto& v = e.violation();
    report.results()["valid"] = false;
    report.results()["violation"] = json{{"kind", to_string(v.kind)}, {"witness", io::to_json(v.witness)}, {"message", v.message}};
    report.add_check("norm_axioms", false, json{{"kind", to_string(v.kind)}, {"witness", io::to_json(v.witness)}});
    std::cout << "invalid: " << v.message << "\n";
    return finish(report, out_path, kValidation);
  }
  return finish(report, out_path);
}

// ---- index --------------------------------------------------------------

int cmd_index(const GlobalOptions& g, const fs::path& input, std::size_t sampled, std::uint64_t seed, bool grid,
              const std::string& out) {
  const json doc = io::read_json_file(input);
  Report report("index");
  report.inputs()["file"] = base_name(input);
  report.inputs()["mode"] = sampled ? "sampled" : "exact";
  const fs::path out_path = out.empty() ? default_report_path(input, "index") : fs::path(out);
  const auto kind = io::detect_kind(doc);
  if (kind == io::DocumentKind::Space) {
    const auto space = io::space_from_json(doc, g.policy());
    const auto r = index_of_symmetry(space);
    auto& res = report.results();
    res["c"] = io::to_json(r.c);
    res["c_bar"] = io::to_json(r.c_bar);
    res["witness"] = pair_json(r.witness, space);
    res["c_bar_witness"] = pair_json(r.c_bar_witness, space);
    res["is_metric"] = r.is_metric;
    res["is_quasi_metric"] = r.is_quasi_metric;
    res["empty_ratio_set"] = r.empty_ratio_set;
    res["exact"] = true;
    report.add_check("c_in_unit_interval", r.c.sign() >= 0 && r.c <= Rational{1}, io::to_json(r.c));
    if (r.is_quasi_metric && !r.empty_ratio_set) {
      report.add_check("c_bar_is_reciprocal", r.c_bar == Extended(Rational{1} / r.c), io::to_json(r.c_bar));
    }
    report.add_check("metric_iff_c_is_one", r.is_metric == space.is_symmetric());
    std::cout << "c = " << r.c << "\nc_bar = " << r.c_bar << "\n";
    return finish(report, out_path);
  }
  if (kind != io::DocumentKind::Norm) throw ParseError("index: document is neither a space nor a norm");
  const auto norm = io::norm_from_json(doc, g.policy());
  auto& res = report.results();
  if (sampled) {
    SamplingOptions so{sampled, seed, grid ? SamplingScheme::AngularGrid : SamplingScheme::RandomDirections};
    report.set_seed(seed);
    report.inputs()["samples"] = sampled;
    report.inputs()["scheme"] = to_string(so.scheme);
    const auto s = index_sampled(norm, so);
    res["c_upper_bound"] = io::to_json(s.value);
    res["c_upper_bound_approx"] = s.approx;
    res["best_direction"] = s.best_direction ? io::to_json(*s.best_direction) : json(nullptr);
    res["samples_used"] = s.used;
    res["exact"] = false;
    report.add_check("upper_bound_in_unit_interval", s.value.sign() >= 0 && s.value <= Rational{1});
    std::cout << "c <= " << s.value << " (approximate, " << s.used << " samples)\n";
    return finish(report, out_path);
  }
  const auto r = index_exact(norm, enumeration_options());
  res["c"] = io::to_json(r.c);
  res["c_bar"] = io::to_json(r.c_bar);
  res["bounded_ball"] = r.bounded;
  res["witness_vertex"] = r.witness_vertex ? io::to_json(*r.witness_vertex) : json(nullptr);
  res["witness_ray"] = r.witness_ray ? io::to_json(*r.witness_ray) : json(nullptr);
  res["exact"] = true;
  report.add_check("c_in_unit_interval", r.c.sign() >= 0 && r.c <= Rational{1}, io::to_json(r.c));
  if (r.witness_ray) {
    report.add_check("ray_has_zero_norm", norm(*r.witness_ray).is_zero(), io::to_json(*r.witness_ray));
  }
  if (r.witness_vertex) {
    report.add_check("vertex_attains_c_bar", Extended(norm(-*r.witness_vertex)) == r.c_bar,
                     io::to_json(*r.witness_vertex));
  }
  std::cout << "c = " << r.c << "\nc_bar = " << r.c_bar << "\n";
  if (r.witness_vertex) std::cout << "witness vertex = " << to_string(*r.witness_vertex) << "\n";
  if (r.witness_ray) std::cout << "witness ray = " << to_string(*r.witness_ray) << "\n";
  return finish(report, out_path);
}

// ---- dual ---------------------------------------------------------------

int cmd_dual(const GlobalOptions& g, const fs::path& input, const std::string& functional, const std::string& out) {
  const auto norm = io::norm_from_json(io::read_json_file(input), g.policy());
  const Vector p = io::parse_vector_text(functional, g.policy());
  if (p.size() != norm.dim()) throw ParseError("dual: functional has wrong dimension");
  Report report("dual");
  report.inputs()["file"] = base_name(input);
  report.inputs()["functional"] = io::to_json(p);
  const auto lp = flat_norm(norm, p);
  const auto gauge = flat_norm_gauge(norm, p);
  auto& res = report.results();
  res["flat_norm"] = io::to_json(lp.value);
  res["flat_norm_gauge"] = io::to_json(gauge.value);
  res["member"] = lp.value.is_finite();
  res["ray"] = lp.value.is_infinite() ? io::to_json(lp.ray) : json(nullptr);
  res["gauge_coefficients"] = gauge.value.is_finite() ? io::to_json(gauge.coefficients) : json(nullptr);
  report.add_check("lp_and_gauge_agree", lp.value == gauge.value, io::to_json(lp.value));
  if (lp.value.is_infinite()) {
    const bool ok = dot(p, lp.ray).sign() > 0 && norm(lp.ray).is_zero();
    report.add_check("ray_witness", ok, io::to_json(lp.ray));
  }
  std::cout << "|p|_flat = " << lp.value << (lp.value.is_finite() ? " (member of the dual cone)\n" : " (not a member)\n");
  return finish(report, out.empty() ? default_report_path(input, "dual") : fs::path(out));
}

// ---- classify -----------------------------------------------------------

int cmd_classify(const GlobalOptions& g, const fs::path& input, const std::string& out, const std::string& cert_out) {
  const auto norm = io::norm_from_json(io::read_json_file(input), g.policy());
  Report report("classify");
  report.inputs()["file"] = base_name(input);
  const auto cls = classify(norm, enumeration_options());
  auto& res = report.results();
  res["verdict"] = to_string(cls.verdict);
  res["c"] = io::to_json(cls.c);
  res["justification"] = cls.justification;
  if (cls.certificate) {
    fs::path cert_path = cert_out.empty() ? input : fs::path(cert_out);
    if (cert_out.empty()) {
      cert_path.replace_extension();
      cert_path += ".cert.json";
    }
    io::write_json_atomic(cert_path, io::certificate_to_json(*cls.certificate, base_name(input)));
    res["certificate"] = base_name(cert_path);
    const auto rep = verify_certificate(norm, *cls.certificate, {});
    report.add_check("certificate_self_check", rep.valid, rep.failing_clause.empty() ? json(nullptr) : json(rep.failing_clause));
    std::cout << "certificate: " << cert_path.string() << "\n";
  } else {
    res["sandwich"] = json{{"lower", io::to_json(cls.lower)}, {"upper", io::to_json(cls.upper)}};
  }
  std::cout << "verdict: " << to_string(cls.verdict) << " (c = " << cls.c << ")\n";
  return finish(report, out.empty() ? default_report_path(input, "classify") : fs::path(out));
}

// ---- verify -------------------------------------------------------------

std::vector<Probe> default_probes(std::size_t dim) {
  std::vector<Probe> probes;
  probes.push_back({zeros(dim), Rational(1), Rational(0)});
  Vector ones(dim, Rational{1});
  probes.push_back({ones, Rational(1, 10), Rational(10)});
  probes.push_back({Rational{-7} * ones, Rational(1, 1000), Rational(1000)});
  return probes;
}

int cmd_verify(const GlobalOptions& g, const fs::path& norm_path, const fs::path& cert_path, const std::string& probes_path,
               const std::string& out) {
  const auto norm = io::norm_from_json(io::read_json_file(norm_path), g.policy());
  const auto cert = io::certificate_from_json(io::read_json_file(cert_path));
  const auto probes = probes_path.empty() ? default_probes(norm.dim())
                                          : io::probes_from_json(io::read_json_file(probes_path), g.policy());
  Report report("verify");
  report.inputs()["norm"] = base_name(norm_path);
  report.inputs()["certificate"] = base_name(cert_path);
  report.inputs()["probes"] = probes_path.empty() ? json("default") : json(base_name(probes_path));
  const auto rep = verify_certificate(norm, cert, probes);
  for (const auto& c : rep.checks) report.add_check(c.name, c.passed, c.detail);
  auto& res = report.results();
  res["valid"] = rep.valid;
  res["failing_clause"] = rep.failing_clause.empty() ? json(nullptr) : json(rep.failing_clause);
  res["universal_argument"] = rep.universal_argument;
  for (const auto& c : rep.checks) std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
  std::cout << (rep.valid ? "certificate valid\n" : "certificate INVALID: " + rep.failing_clause + "\n");
  return finish(report, out.empty() ? default_report_path(cert_path, "verify") : fs::path(out));
}

// ---- freenorm -----------------------------------------------------------

int cmd_freenorm(const GlobalOptions& g, const fs::path& space_path, const fs::path& molecule_path, const std::string& out) {
  const auto space = io::space_from_json(io::read_json_file(space_path), g.policy());
  const auto m = io::molecule_from_json(io::read_json_file(molecule_path), space, g.policy());
  Report report("freenorm");
  report.inputs()["space"] = base_name(space_path);
  report.inputs()["molecule"] = base_name(molecule_path);
  const auto fwd = molecule_flat_norm(space, m);
  const auto bwd = molecule_flat_norm(space, m.negated());
  auto& res = report.results();
  res["norm"] = io::to_json(fwd.value);
  res["reverse_norm"] = io::to_json(bwd.value);
  res["potential"] = fwd.value.is_finite() ? io::to_json(fwd.potential) : json(nullptr);
  report.add_check("finite", fwd.value.is_finite() && bwd.value.is_finite());
  if (fwd.value.is_finite()) {
    // Weak duality at the returned optimizer.
    const auto lip = semilip_seminorm(conjugate(space), fwd.potential).value;
    report.add_check("potential_in_unit_ball", lip.is_finite() && lip.value() <= Rational{1}, io::to_json(lip));
  }
  std::cout << "|m|* = " << fwd.value << "\n|-m|* = " << bwd.value << "\n";
  return finish(report, out.empty() ? default_report_path(molecule_path, "freenorm") : fs::path(out));
}

// ---- freeindex ----------------------------------------------------------

int cmd_freeindex(const GlobalOptions& g, const fs::path& space_path, std::size_t count, std::uint64_t seed,
                  const std::string& csv, const std::string& out) {
  const auto space = io::space_from_json(io::read_json_file(space_path), g.policy());
  FreeIndexOptions fo;
  fo.count = count;
  fo.seed = seed;
  Report report("freeindex");
  report.inputs()["space"] = base_name(space_path);
  report.inputs()["molecules"] = count;
  report.set_seed(seed);
  const auto rep = molecule_index_sample(space, fo);
  auto& res = report.results();
  res["c_space"] = io::to_json(rep.c_space);
  res["c_pairs"] = io::to_json(rep.c_pairs);
  res["c_sample"] = io::to_json(rep.c_sample);
  res["worst_molecule"] = rep.worst ? io::molecule_to_json(*rep.worst, space) : json(nullptr);
  res["ratios_evaluated"] = rep.ratios.size();
  res["below_space_index"] = rep.below_space_index.size();
  res["free_space_not_baire"] = rep.free_space_not_baire;
  report.add_check("pairs_match_space_index", rep.pairs_match_space, io::to_json(rep.c_pairs));
  report.add_check("sample_bounded_by_space_index", rep.c_sample <= rep.c_space, io::to_json(rep.c_sample));
  if (!csv.empty()) {
    std::string text = "molecule,is_pair,norm,reverse_norm,ratio,ratio_approx\n";
    for (const auto& r : rep.ratios) {
      text += "\"" + r.molecule.describe(space) + "\"," + (r.is_pair ? "1" : "0") + "," + r.norm.to_string() + "," +
              r.reverse_norm.to_string() + "," + r.ratio.to_string() + "," + std::to_string(r.ratio.to_double()) + "\n";
    }
    io::write_file_atomic(csv, text);
  }
  std::cout << "c(X) = " << rep.c_space << "\nmin pair ratio = " << rep.c_pairs << "\nmin sampled ratio = " << rep.c_sample
            << "\n";
  if (rep.free_space_not_baire) std::cout << "free space over this space is not Baire\n";
  return finish(report, out.empty() ? default_report_path(space_path, "freeindex") : fs::path(out));
}

// ---- example ------------------------------------------------------------

int cmd_example(std::size_t weighted_sup, const std::string& out) {
  const auto norm = example_weighted_sup(weighted_sup);
  const std::string text = io::dump(io::norm_to_json(norm));
  if (out.empty()) {
    std::cout << text;
  } else {
    io::write_file_atomic(out, text);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"asymkit: exact computations for finite asymmetric normed and quasi-metric spaces"};
  app.require_subcommand(1);
  GlobalOptions g;
  app.add_flag("--approx", g.approx, "Accept floating-point scalars, rounding them to rationals");
  app.add_option("--max-denominator", g.max_denominator, "Denominator cap for --approx rounding")
      ->check(CLI::PositiveNumber);

  std::string input, second, out, functional, probes, cert_out, csv;
  std::size_t sampled = 0, molecules = 100, weighted_sup = 0;
  std::uint64_t seed = 1;
  bool exact = false, grid = false;

  auto* validate = app.add_subcommand("validate", "Validate a space or norm file");
  validate->add_option("file", input, "SpaceFile or NormFile")->required();
  validate->add_option("-o,--output", out, "Report path");

  auto* index = app.add_subcommand("index", "Index of symmetry of a space or norm");
  index->add_option("file", input, "SpaceFile or NormFile")->required();
  auto* exact_flag = index->add_flag("--exact", exact, "Exact computation (default)");
  index->add_option("--sampled", sampled, "Monte Carlo upper bound with this many directions")->excludes(exact_flag);
  index->add_option("--seed", seed, "Sampling seed");
  index->add_flag("--grid", grid, "Use an angular grid instead of random directions (dimension 2)");
  index->add_option("-o,--output", out, "Report path");

  auto* dual = app.add_subcommand("dual", "Flat norm and dual-cone membership of a functional");
  dual->add_option("file", input, "NormFile")->required();
  dual->add_option("--functional,-p", functional, "Comma-separated covector, e.g. 1,-1/2")->required();
  dual->add_option("-o,--output", out, "Report path");

  auto* cls = app.add_subcommand("classify", "Baire classification; writes a certificate when not Baire");
  cls->add_option("file", input, "NormFile")->required();
  cls->add_option("-c,--certificate", cert_out, "Certificate path (default: <file>.cert.json)");
  cls->add_option("-o,--output", out, "Report path");

  auto* verify = app.add_subcommand("verify", "Independently verify a non-Baire certificate");
  verify->add_option("norm", input, "NormFile")->required();
  verify->add_option("certificate", second, "CertificateFile")->required();
  verify->add_option("--probes", probes, "Probe file {version, probes:[{x0, eps, n}]}");
  verify->add_option("-o,--output", out, "Report path");

  auto* freenorm = app.add_subcommand("freenorm", "Semi-Lipschitz free-space norm of a molecule");
  freenorm->add_option("space", input, "SpaceFile")->required();
  freenorm->add_option("molecule", second, "MoleculeFile")->required();
  freenorm->add_option("-o,--output", out, "Report path");

  auto* freeindex = app.add_subcommand("freeindex", "Molecule-ratio experiment for the free-space index");
  freeindex->add_option("space", input, "SpaceFile")->required();
  freeindex->add_option("--molecules", molecules, "Number of sampled general molecules");
  freeindex->add_option("--seed", seed, "Sampling seed");
  freeindex->add_option("--csv", csv, "Write all evaluated ratios as CSV");
  freeindex->add_option("-o,--output", out, "Report path");

  auto* example = app.add_subcommand("example", "Emit an example NormFile");
  example->add_option("--weighted-sup", weighted_sup, "Weighted asymmetric sup norm truncated to N coordinates")
      ->required()
      ->check(CLI::PositiveNumber);
  example->add_option("-o,--output", out, "Output NormFile (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (*validate) return cmd_validate(g, input, out);
    if (*index) return cmd_index(g, input, sampled, seed, grid, out);
    if (*dual) return cmd_dual(g, input, functional, out);
    if (*cls) return cmd_classify(g, input, out, cert_out);
    if (*verify) return cmd_verify(g, input, second, probes, out);
    if (*freenorm) return cmd_freenorm(g, input, second, out);
    if (*freeindex) return cmd_freeindex(g, input, molecules, seed, csv, out);
    if (*example) return cmd_example(weighted_sup, out);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const ValidationError& e) {
    std::cerr << "validation failure: " << e.what() << "\n";
    return kValidation;
  } catch (const CapabilityError& e) {
    std::cerr << "capability: " << e.what() << "\n";
    return kCapability;
  } catch (const NoCertificate& e) {
    std::cerr << "no certificate: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kOk;
}
