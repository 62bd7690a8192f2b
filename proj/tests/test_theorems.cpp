#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <fstream>

#include "json.hpp"

#include "classym/explorer.hpp"
#include "classym/flag_models.hpp"
#include "classym/theorems.hpp"

using namespace classym;
using json = nlohmann::json;

namespace {

json load_golden(const std::string& file) {
  std::ifstream in(std::string(CLASSYM_GOLDEN_DIR) + "/" + file);
  REQUIRE(in.good());
  return json::parse(in);
}

std::vector<std::string> model_names(const RealFormSpec& spec) {
  std::vector<std::string> names;
  for (const ModelSpace& m : classify_manifolds(spec).models) names.push_back(m.name);
  return names;
}

}  // namespace

TEST_CASE("model lists match the golden table") {
  json golden = load_golden("models.json");
  std::vector<RealFormSpec> specs = {
      RealFormSpec::su(2, 1),    RealFormSpec::su(3, 0),    RealFormSpec::sl_r(4),
      RealFormSpec::sl_h(2),     RealFormSpec::sp_pq(2, 1), RealFormSpec::sp_r(6),
      RealFormSpec::sp_pq(1, 1), RealFormSpec::sp_r(4),     RealFormSpec::so_pq(5, 0),
      RealFormSpec::so_pq(4, 1), RealFormSpec::so_pq(3, 2), RealFormSpec::so_pq(3, 3),
      RealFormSpec::so_pq(4, 2), RealFormSpec::so_pq(7, 0), RealFormSpec::so_pq(4, 3),
      RealFormSpec::so_pq(7, 1), RealFormSpec::so_pq(6, 2), RealFormSpec::so_pq(5, 3),
      RealFormSpec::so_pq(4, 4), RealFormSpec::so_star(10),
      RealFormSpec::complex_as_real({Series::A, 3}),
      RealFormSpec::complex_as_real({Series::C, 6}),
      RealFormSpec::complex_as_real({Series::B, 5}),
      RealFormSpec::complex_as_real({Series::D, 8}),
  };
  for (const RealFormSpec& spec : specs) {
    std::string key = spec_name(spec);
    CAPTURE(key);
    REQUIRE(golden.contains(key));
    CHECK(model_names(spec) == golden[key].get<std::vector<std::string>>());
  }
}

TEST_CASE("low-rank redirects carry a note") {
  ManifoldClassification mc = classify_manifolds(RealFormSpec::sp_pq(1, 1));
  CHECK(spec_name(mc.effective) == "so(4,1)");
  CHECK_FALSE(mc.note.empty());
  mc = classify_manifolds(RealFormSpec::so_pq(3, 3));
  CHECK(spec_name(mc.effective) == "sl(4,R)");
  mc = classify_manifolds(RealFormSpec::so_pq(5, 1));
  CHECK(spec_name(mc.effective) == "sl(2,H)");
  mc = classify_manifolds(RealFormSpec::sp_r(4));
  CHECK(spec_name(mc.effective) == "so(3,2)");
}

TEST_CASE("so*(8) is redirected with an error") {
  CHECK_THROWS_AS(classify_manifolds(RealFormSpec::so_star(8)), std::invalid_argument);
}

TEST_CASE("membership: balls in projective space") {
  ManifoldClassification mc = classify_manifolds(RealFormSpec::su(2, 1));
  const ModelSpace& pn = mc.models[0];
  const ModelSpace& bplus = mc.models[1];
  const ModelSpace& bminus = mc.models[2];
  CHECK(model_contains(pn, parse_point("1:0:0")));
  CHECK(model_contains(bplus, parse_point("1:0:0")));
  CHECK_FALSE(model_contains(bminus, parse_point("1:0:0")));
  CHECK(model_contains(bminus, parse_point("0:0:1")));
  CHECK_FALSE(model_contains(bplus, parse_point("1:0:1")));  // boundary
  CHECK_FALSE(model_contains(bminus, parse_point("1:0:1")));
}

TEST_CASE("membership: quadric complements") {
  ManifoldClassification mc = classify_manifolds(RealFormSpec::so_pq(5, 3));
  const ModelSpace& q6 = mc.models[0];
  const ModelSpace& no_s1 = mc.models[1];
  const ModelSpace& no_gamma = mc.models[4];
  CHECK(no_gamma.name == "Q_6 - Gamma");
  QVec gamma = parse_point("1:0:0:0:i:0:0:0");
  QVec s1 = parse_point("1:0:0:0:0:0:0:i");
  std::mt19937_64 rng(61);
  QVec generic = random_quadric_point_exact(8, rng);
  CHECK(model_contains(q6, gamma));
  CHECK(model_contains(q6, generic));
  CHECK(model_contains(no_s1, generic));
  CHECK_FALSE(model_contains(no_s1, s1));
  CHECK(model_contains(no_gamma, generic));
  CHECK_FALSE(model_contains(no_gamma, gamma));
  CHECK_FALSE(model_contains(q6, parse_point("1:1:0:0:0:0:0:0")));  // off the quadric
}

TEST_CASE("membership is consistent with classification for random points") {
  std::mt19937_64 rng(62);
  RealFormSpec spec = RealFormSpec::so_pq(6, 2);
  ManifoldClassification mc = classify_manifolds(spec);
  for (int trial = 0; trial < 20; ++trial) {
    QVec z = random_quadric_point_exact(8, rng);
    CHECK(model_contains(mc.models[0], z));  // the compact model
    std::string label = classify_point(spec, z).name;
    for (const ModelSpace& m : mc.models) {
      if (m.orbits.empty() || m.classifier.twist != 0) continue;
      bool expect = std::find(m.orbits.begin(), m.orbits.end(), label) != m.orbits.end();
      CHECK(model_contains(m, z) == expect);
    }
  }
}

TEST_CASE("model dimensions") {
  for (const ModelSpace& m : classify_manifolds(RealFormSpec::so_pq(5, 3)).models)
    CHECK(m.dim == 12);
  for (const ModelSpace& m : classify_manifolds(RealFormSpec::su(2, 1)).models)
    CHECK(m.dim == 4);
}
