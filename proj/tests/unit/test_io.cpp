#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "asymkit/io.hpp"
#include "asymkit/random.hpp"
#include "generators.hpp"

using namespace asymkit;
using namespace asymkit::io;

TEST_CASE("scalar parsing policy") {
  CHECK(parse_scalar(json("3/6")) == Rational(1, 2));
  CHECK(parse_scalar(json(-4)) == Rational(-4));
  CHECK_THROWS_AS(parse_scalar(json(0.5)), ParseError);
  CHECK_THROWS_AS(parse_scalar(json("0.5")), ParseError);
  CHECK_THROWS_AS(parse_scalar(json(true)), ParseError);
  const ScalarPolicy approx{true, 1000};
  CHECK(parse_scalar(json(0.5), approx) == Rational(1, 2));
  CHECK(parse_scalar(json("0.333333"), approx) == Rational(1, 3));
  CHECK(parse_vector_text("1, -1/2") == Vector{Rational(1), Rational(-1, 2)});
  CHECK_THROWS_AS(parse_vector_text("1,,2"), ParseError);
}

TEST_CASE("space documents") {
  const json doc = json::parse(R"({"version":1,"points":["a","b"],"base_point":"b","d":[["0","1"],["2",0]]})");
  const auto s = space_from_json(doc);
  CHECK(s.base_point() == 1);
  CHECK(s.d(1, 0) == Rational(2));
  const json again = space_to_json(s);
  CHECK(space_to_json(space_from_json(again)) == again);
  CHECK(again.at("d")[1][0] == "2");

  CHECK_THROWS_AS(space_from_json(json::parse(R"({"d":[["0"]]})")), ParseError);
  CHECK_THROWS_AS(space_from_json(json::parse(R"({"version":2,"d":[["0"]]})")), ParseError);
  CHECK_THROWS_AS(space_from_json(json::parse(R"({"version":1,"points":["a"],"d":[["0","1"],["1","0"]]})")),
                  ParseError);
  CHECK_THROWS_AS(space_from_json(json::parse(R"({"version":1,"d":[["0","0"],["0","0"]]})")), ValidationError);
}

TEST_CASE("norm, molecule, certificate and probe documents round-trip") {
  Rng rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const auto n = asymkit::testing::random_norm(rng, 3);
    const json j = norm_to_json(n);
    CHECK(norm_to_json(norm_from_json(j)) == j);
    CHECK(dump(j) == dump(norm_to_json(norm_from_json(json::parse(dump(j))))));
  }
  CHECK_THROWS_AS(norm_from_json(json::parse(R"({"version":1,"dim":1,"functionals":[["1"]]})")), ValidationError);

  const auto s = FiniteQuasiMetricSpace::validate({{0, 1}, {2, 0}}, {"a", "b"});
  const Molecule m{{1, 0}, {Rational(1, 2), Rational(-3)}};
  const json mj = molecule_to_json(m, s);
  CHECK(mj.at("support") == json::array({"b", "a"}));
  const auto back = molecule_from_json(mj, s);
  CHECK(back.support == m.support);
  CHECK(back.coefficients == m.coefficients);
  CHECK_THROWS_AS(molecule_from_json(json::parse(R"({"version":1,"support":["z"],"coefficients":["1"]})"), s),
                  ParseError);

  const MeagerCoverCertificate cert{{1, 0}, {-1, 0}, Rational(1)};
  const json cj = certificate_to_json(cert, "hemi.json");
  CHECK(cj.at("cover") == "F_n = {x : -p(x) <= n}");
  CHECK(cj.at("norm_ref") == "hemi.json");
  const auto cb = certificate_from_json(cj);
  CHECK(cb.p == cert.p);
  CHECK(cb.ray == cert.ray);
  CHECK(cb.flat_norm_p == cert.flat_norm_p);

  const std::vector<Probe> probes{{{5, 5}, Rational(1, 10), Rational(100)}};
  const auto pb = probes_from_json(probes_to_json(probes));
  REQUIRE(pb.size() == 1);
  CHECK(pb[0].x0 == probes[0].x0);
  CHECK(pb[0].epsilon == probes[0].epsilon);
}

TEST_CASE("document kind detection") {
  CHECK(detect_kind(json::parse(R"({"d":[]})")) == DocumentKind::Space);
  CHECK(detect_kind(json::parse(R"({"functionals":[]})")) == DocumentKind::Norm);
  CHECK(detect_kind(json::parse(R"({"support":[]})")) == DocumentKind::Molecule);
  CHECK(detect_kind(json::parse(R"({"ray":[]})")) == DocumentKind::Certificate);
  CHECK(detect_kind(json::parse(R"({"probes":[]})")) == DocumentKind::Probes);
  CHECK(detect_kind(json::parse("[]")) == DocumentKind::Unknown);
}

TEST_CASE("reports") {
  Report r("index");
  r.inputs()["file"] = "x.json";
  r.set_seed(7);
  r.add_check("ok", true);
  CHECK(r.all_passed());
  r.add_check("bad", false, "why");
  CHECK(!r.all_passed());
  const json j = r.to_json();
  CHECK(j.at("version") == 1);
  CHECK(j.at("tool") == kToolVersion);
  CHECK(j.at("seed") == 7);
  CHECK(j.at("checks")[1].at("status") == "fail");
  CHECK(Report("x").to_json().at("seed").is_null());
}

TEST_CASE("atomic writes") {
  const auto dir = std::filesystem::temp_directory_path() / "asymkit_io_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "out.json";
  write_json_atomic(path, json{{"b", 1}, {"a", 2}});
  CHECK(!std::filesystem::exists(dir / "out.json.tmp"));
  std::ifstream in(path);
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(text == "{\n  \"a\": 2,\n  \"b\": 1\n}\n");
  CHECK(read_json_file(path).at("b") == 1);
  CHECK_THROWS_AS(read_json_file(dir / "missing.json"), ParseError);
  std::filesystem::remove_all(dir);
}
