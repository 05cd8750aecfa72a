#include <doctest.h>

#include <cstdlib>

#include <json.hpp>

#include "qhopf/document.hpp"
#include "qhopf/double.hpp"
#include "qhopf/errors.hpp"
#include "qhopf/instances.hpp"
#include "qhopf/pipeline.hpp"

using namespace qhopf;

namespace {

AlgebraDocument doc_of(const std::string& name) {
  NamedInstance i = bundled_instance(name);
  return {i.algebra, i.r_matrix, std::nullopt, {i.description}};
}

bool same_algebra(const QuasiHopfAlgebra& a, const QuasiHopfAlgebra& b) {
  return a.field == b.field && a.labels == b.labels && a.mult == b.mult && a.unit == b.unit && a.comult == b.comult &&
         a.counit == b.counit && a.phi == b.phi && a.phi_inv == b.phi_inv && a.antipode == b.antipode &&
         a.alpha == b.alpha && a.beta == b.beta;
}

}  // namespace

TEST_CASE("documents round-trip bit-exactly") {
  for (const auto& name : bundled_names()) {
    CAPTURE(name);
    const std::string text = serialize_document(doc_of(name));
    const AlgebraDocument back = parse_document(text);
    CHECK(same_algebra(back.algebra, bundled_instance(name).algebra));
    CHECK(serialize_document(back) == text);
  }
}

TEST_CASE("double documents carry R and the inclusion") {
  const DoubleAlgebra d = build_double(bundled_instance("fZ2w").algebra);
  AlgebraDocument doc{d.inner, d.R.R, d.inclusion, {}};
  const std::string text = serialize_document(doc);
  const AlgebraDocument back = parse_document(text);
  REQUIRE(back.r_matrix);
  REQUIRE(back.inclusion);
  CHECK(*back.r_matrix == d.R.R);
  CHECK(*back.inclusion == d.inclusion);
  CHECK(serialize_document(back) == text);
}

TEST_CASE("a missing inverse reassociator is computed") {
  nlohmann::json j = nlohmann::json::parse(serialize_document(doc_of("fZ2w")));
  j.erase("phi_inv");
  const AlgebraDocument d = parse_document(j.dump());
  CHECK(d.algebra.phi_inv == bundled_instance("fZ2w").algebra.phi_inv);
}

TEST_CASE("scalars are strings in lowest terms") {
  const std::string text = serialize_document(doc_of("sweedler"));
  const nlohmann::json j = nlohmann::json::parse(text);
  // R₀ = ½(1⊗1 + 1⊗g + g⊗1 - g⊗g)
  CHECK(j["r_matrix"][3] == nlohmann::json::array({1, 1, "-1/2"}));
  CHECK(j["field"] == "Q");
  CHECK(j["format_version"] == kFormatVersion);
}

TEST_CASE("malformed documents raise ParseError") {
  const std::string good = serialize_document(doc_of("kZ2"));
  CHECK_THROWS_AS(parse_document(good.substr(0, good.size() / 2)), ParseError);
  CHECK_THROWS_AS(parse_document("[]"), ParseError);
  auto broken = [&](auto edit) {
    nlohmann::json j = nlohmann::json::parse(good);
    edit(j);
    return j.dump();
  };
  CHECK_THROWS_AS(parse_document(broken([](auto& j) { j.erase("mult"); })), ParseError);
  CHECK_THROWS_AS(parse_document(broken([](auto& j) { j["field"] = "F4"; })), ParseError);
  CHECK_THROWS_AS(parse_document(broken([](auto& j) { j["dim"] = 3; })), ParseError);
  CHECK_THROWS_AS(parse_document(broken([](auto& j) { j["unit"][0][0] = 7; })), ParseError);
  CHECK_THROWS_AS(parse_document(broken([](auto& j) { j["unit"][0][1] = 1; })), ParseError);
  CHECK_THROWS_AS(parse_document(broken([](auto& j) { j["unit"][0][1] = "1/0"; })), ParseError);
  CHECK_THROWS_AS(parse_document(broken([](auto& j) { j["format_version"] = 99; })), ParseError);
  try {
    parse_document(broken([](auto& j) { j["alpha"][0][1] = "abc"; }));
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.field() == "alpha[0]");
  }
  CHECK_THROWS_AS(load_document("/nonexistent/x.qha"), ParseError);
}

TEST_CASE("a singular reassociator is a validation failure") {
  nlohmann::json j = nlohmann::json::parse(serialize_document(doc_of("kZ2")));
  j.erase("phi_inv");
  j["phi"] = nlohmann::json::array();
  CHECK_THROWS_AS(parse_document(j.dump()), ValidationFailed);
}

TEST_CASE("pipeline reports are deterministic and stage-tagged") {
  const NamedInstance s = bundled_instance("kZ2");
  const PipelineResult a = run_projection(s.algebra, *s.r_matrix);
  const PipelineResult b = run_projection(s.algebra, *s.r_matrix);
  CHECK(a.passed());
  CHECK(report_json(a) == report_json(b));
  std::vector<std::string> stages;
  for (const auto& r : a.stages) stages.push_back(r.stage());
  CHECK(stages == std::vector<std::string>{"quasi_hopf", "derived", "quasitriangular", "double", "pi", "bi",
                                           "braided_dual", "transport", "biproduct", "chi"});
  const nlohmann::json j = nlohmann::json::parse(report_json(a));
  CHECK(j["passed"] == true);
  CHECK(j["aborted_at"].is_null());
}

TEST_CASE("a failing stage aborts the pipeline") {
  const QuasiHopfAlgebra s = bundled_instance("sweedler").algebra;
  const PipelineResult r = run_projection(s, s.one(2));
  CHECK_FALSE(r.passed());
  REQUIRE(r.aborted_at);
  CHECK(*r.aborted_at == "quasitriangular");
  CHECK(r.stages.size() == 3);
  CHECK(report_text(r).find("aborted at stage quasitriangular") != std::string::npos);
}

TEST_CASE("tower and dimension cap") {
  const TowerResult t = run_tower(bundled_instance("fZ2w").algebra, 2);
  CHECK(t.result.passed());
  CHECK(t.dims == std::vector<std::uint32_t>{2, 4, 16});
  CHECK(tower_dimension(2, 2) == 16);
  CHECK(tower_dimension(4, 3) == 65536);
  CHECK(tower_dimension(1u << 20, 8) == UINT64_MAX);
  unsetenv("QHOPF_DIM_CAP");
  CHECK(dimension_cap() == 32);
  setenv("QHOPF_DIM_CAP", "100", 1);
  CHECK(dimension_cap() == 100);
  setenv("QHOPF_DIM_CAP", "junk", 1);
  CHECK(dimension_cap() == 32);
  unsetenv("QHOPF_DIM_CAP");
}
