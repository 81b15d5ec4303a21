#include <gtest/gtest.h>

#include "monogen_cli/report_json.hpp"

namespace monogen::cli {
namespace {

const RunMeta kMeta{"quick", 1.5};

// emit -> text -> parse -> emit gives the same document.
Json reparse(const Json& doc) { return Json::parse(doc.dump()); }

TEST(ReportJson, AnalyzeRoundTrip) {
  for (auto [p, a, N] : {std::tuple{3ul, 5L, 4u}, {5ul, 5L, 4u}, {3ul, 10L, 2u}, {2ul, 7L, 6u}, {3ul, 12L, 3u}}) {
    const auto report = analyze_tower(p, a, N, budget_for(Effort::kQuick));
    const Json doc = emit(report, kMeta);
    EXPECT_EQ(parse_analyze(reparse(doc)), report) << doc.dump();
  }
}

TEST(ReportJson, AnalyzeDocumentShape) {
  const Json doc = emit(analyze_tower(5, 5, 3), kMeta);
  std::vector<std::string> keys;
  for (const auto& [k, v] : doc.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"tool", "command", "inputs", "effort", "result"}));
  EXPECT_EQ(doc["effort"]["trial_bound"], 1000000);
  EXPECT_EQ(doc["effort"]["level"], "quick");
  const auto& cert = doc["result"]["verdicts"][2]["certificate"];
  EXPECT_EQ(cert["type"], "square");
  EXPECT_EQ(cert["prime"], "3");
  EXPECT_EQ(cert["valuation"], 5);
  EXPECT_EQ(doc["result"]["first_failure"], 3);
}

TEST(ReportJson, FactorRoundTrip) {
  for (const char* x : {"3130", "1", "-12", "300415051279300005", "1000000016000000063"}) {
    FactorDoc d{Integer(x), budget_for(Effort::kQuick), {}};
    d.factorization = factor(d.x, Budget{100, 10, kDefaultSeed});
    EXPECT_EQ(parse_factor(reparse(emit(d, kMeta))), d) << x;
  }
}

TEST(ReportJson, OrbitRoundTrip) {
  OrbitDoc d{5, 5, 4, orbit(5, 5, 4)};
  const Json doc = emit(d, kMeta);
  EXPECT_EQ(doc["result"]["values"][2], "-300415051279300005");
  EXPECT_EQ(parse_orbit(reparse(doc)), d);
}

TEST(ReportJson, PolygonRoundTrip) {
  const std::vector<std::pair<IntPoly, std::uint64_t>> cases = {
      {IntPoly{-5, 0, 0, 1}, 3}, {IntPoly{-9, 0, 0, 1}, 3}, {IntPoly{-5, 0, 0, 1}, 7},
      {pow(IntPoly{1, 0, 1}, 2) + IntPoly{3}, 3}, {IntPoly{4, 0, 1}, 2}, {IntPoly{2, -3, 1}, 5}};
  for (const auto& [f, p] : cases) {
    PolygonDoc d{f, static_cast<unsigned long>(p), std::nullopt, analyze_phis(f, p)};
    EXPECT_EQ(parse_polygon(reparse(emit(d, kMeta))), d) << f.to_string() << " at " << p;
  }
}

TEST(ReportJson, DissectRoundTrip) {
  const std::vector<std::pair<IntPoly, std::uint64_t>> cases = {
      {IntPoly{-5, 0, 0, 1}, 2}, {IntPoly{-5, 0, 0, 1}, 3}, {IntPoly{4, 0, 1}, 2},
      {pow(IntPoly{1, 0, 1}, 2) + IntPoly{3}, 3}};
  for (const auto& [f, p] : cases) {
    DissectDoc d{f, static_cast<unsigned long>(p), dissect(f, p)};
    EXPECT_EQ(parse_dissect(reparse(emit(d, kMeta))), d) << f.to_string();
  }
}

TEST(ReportJson, RejectsWrongCommand) {
  const Json doc = emit(OrbitDoc{3, 5, 1, orbit(3, 5, 1)}, kMeta);
  EXPECT_THROW(parse_analyze(doc), std::invalid_argument);
}

}  // namespace
}  // namespace monogen::cli
