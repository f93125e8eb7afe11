#include <doctest.h>

#include "gaussalg/polymatroid.hpp"
#include "gaussalg/reference.hpp"
#include "gaussalg/report.hpp"

namespace ga = gaussalg;

namespace {

bool same_witness(const ga::Witness& a, const ga::Witness& b) {
  if (a.dim != b.dim || a.det != b.det || a.nodes != b.nodes) return false;
  if (!ga::same_monomial(a.target, b.target)) return false;
  if (a.generators.size() != b.generators.size()) return false;
  for (std::size_t i = 0; i < a.generators.size(); ++i)
    if (!ga::same_monomial(a.generators[i], b.generators[i])) return false;
  return true;
}

}  // namespace

TEST_CASE("witness json round trip") {
  const ga::Witness& w = ga::reference_witnesses()[0];
  const ga::Json j = ga::to_json(w);
  CHECK(j["d"] == 5);
  CHECK(j["det"] == 3);
  const auto back = ga::witness_from_json(j);
  REQUIRE(back.has_value());
  CHECK(same_witness(*back, w));

  ga::Json broken = j;
  broken.erase("det");
  CHECK_FALSE(ga::witness_from_json(broken).has_value());
  broken = j;
  broken["generators"] = "nope";
  CHECK_FALSE(ga::witness_from_json(broken).has_value());
}

TEST_CASE("witness table round trip") {
  ga::WitnessTable table;
  for (const ga::Witness& w : ga::reference_witnesses()) {
    if (w.dim != 5) continue;
    table.emplace(ga::canonical(w.target), w);
  }
  REQUIRE(table.size() == 4);
  const ga::Json j = ga::table_to_json(5, table);
  CHECK(j["d"] == 5);
  const auto back = ga::table_from_json(j);
  REQUIRE(back.has_value());
  REQUIRE(back->size() == table.size());
  auto it = table.begin();
  auto jt = back->begin();
  for (; it != table.end(); ++it, ++jt) {
    CHECK(it->first == jt->first);
    CHECK(same_witness(it->second, jt->second));
  }
  CHECK_FALSE(ga::table_from_json(ga::Json::object()).has_value());
  CHECK_FALSE(ga::table_from_json(ga::Json::parse("[1,2]")).has_value());
}

TEST_CASE("violation json uses 1-based variable indices") {
  const ga::MonomialSet punctured = ga::mon(3, 4, 4).difference(
      ga::MonomialSet::from_monomials(4, {ga::monomial_of({1, 1, 1, 1})}));
  const auto v = ga::exchange_check(punctured);
  REQUIRE(v.has_value());
  const ga::Json j = ga::to_json(*v);
  CHECK(j["u"] == ga::Json::parse("[0,2,1,1]"));
  CHECK(j["v"] == ga::Json::parse("[2,1,1,0]"));
  CHECK(j["i"] == 2);
  REQUIRE(j["tried"].size() == 1);
  CHECK(j["tried"][0]["j"] == 1);
  CHECK(j["tried"][0]["rejected"] == ga::Json::parse("[1,1,1,1]"));
  CHECK(ga::to_text(*v).find("i = 2") != std::string::npos);
  CHECK(ga::to_csv(*v).find("field,value\nu,") == 0);
}

TEST_CASE("equality report json") {
  const ga::EqualityReport rep = ga::verify_equality(5, ga::VerifyMode::enumerate);
  const ga::Json j = ga::to_json(rep);
  CHECK(j["d"] == 5);
  CHECK(j["mode"] == "enumerate");
  CHECK(j["target_size"] == 81);
  CHECK(j["summary"]["verified"] == true);
  CHECK(j["summary"]["missing"] == 0);
  CHECK(j["targets"].size() == 4);
  CHECK_FALSE(j.contains("sample"));

  const std::string csv = ga::to_csv(rep);
  CHECK(csv.find("partition") != std::string::npos);
  const std::string text = ga::to_text(rep);
  CHECK(text.find("VERIFIED") != std::string::npos);
}

TEST_CASE("strip_timing removes every wall clock field") {
  ga::Json j = ga::Json::parse(R"({
    "stats": {"wall_ms": 12, "nodes": 3},
    "list": [{"wall_ms": 1, "x": 2}, {"y": {"wall_ms": 4}}]
  })");
  ga::strip_timing(j);
  CHECK(j["stats"].contains("nodes"));
  CHECK_FALSE(j["stats"].contains("wall_ms"));
  CHECK_FALSE(j["list"][0].contains("wall_ms"));
  CHECK_FALSE(j["list"][1]["y"].contains("wall_ms"));
}
