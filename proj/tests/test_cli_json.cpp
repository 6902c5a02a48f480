#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <regex>

#include "bottcalc/serialize.hpp"

using namespace bottcalc;

namespace {

struct CliRun {
  int status = -1;
  std::string out;
};

// Runs the command-line tool with stderr discarded.
CliRun cli(const std::string& args) {
  CliRun r;
  FILE* f = popen((std::string(BOTTCALC_CLI) + " " + args + " 2>/dev/null").c_str(), "r");
  if (!f) return r;
  std::array<char, 4096> buf;
  std::size_t k;
  while ((k = std::fread(buf.data(), 1, buf.size(), f)) > 0) r.out.append(buf.data(), k);
  const int st = pclose(f);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

void expect_header(const Json& j, const std::string& kind) {
  ASSERT_TRUE(j.is_object());
  auto it = j.begin();
  EXPECT_EQ(it.key(), "schema");
  EXPECT_EQ(*it, "bottcalc/" + kind);
  ++it;
  EXPECT_EQ(it.key(), "version");
  EXPECT_EQ(*it, json_schema_version);
}

bool has_key_recursive(const Json& j, const std::string& key) {
  if (j.is_object())
    for (const auto& [k, v] : j.items())
      if (k == key || has_key_recursive(v, key)) return true;
  if (j.is_array())
    for (const auto& v : j)
      if (has_key_recursive(v, key)) return true;
  return false;
}

}  // namespace

TEST(Json, CohomologyAnswerShapes) {
  const Json v = to_json(bott_evaluate(structure_sheaf(5, 2, -3), 5, 2));
  EXPECT_EQ(v, Json({{"vanishes", true}}));
  const Json e = bott_entry("theta", -2, bott_evaluate(theta_bundle(4, 2, -2), 4, 2));
  EXPECT_EQ(e.dump(), R"({"bundle":"theta","m":-2,"result":{"l":1,"weight":"-1^4","dim":1}})");
}

TEST(Json, BigIntegersBecomeStrings) {
  EXPECT_EQ(big(BigInt(42)), Json(42));
  const BigInt huge = BigInt(1) << 80;
  EXPECT_EQ(big(huge), Json(huge.get_str()));
}

TEST(Json, WeightsRoundTripThroughStrings) {
  const Weight w{3, 2, 2, 0, -1};
  const Json j = weight_json(w);
  ASSERT_TRUE(j.is_string());
  EXPECT_EQ(parse_weight(j.get<std::string>()), w);
}

TEST(Json, ScanSummary) {
  const Json j = to_json(scan_vanishing(5, 2, 1, 5));
  EXPECT_EQ(j["certified_range"], Json::array({1, 4}));
  ASSERT_EQ(j["exceptions"].size(), 1u);
  EXPECT_EQ(j["exceptions"][0].dump(), R"({"bundle":"theta","l":5,"m":-5,"documented":true})");
  const Json none = to_json(scan_vanishing(5, 2, 5, 5));
  EXPECT_EQ(none["certified_range"], Json::array());
}

TEST(Json, IsotropicRangesAndVerdicts) {
  const IsoGrassmannian X{Family::LG, 2, 2};
  const auto c = cohomology_indices(X, IsoBundle::D2RStar);
  const Json j = iso_json(X, IsoBundle::D2RStar, c, verify_lemmata(X));
  EXPECT_EQ(j["X"], "LG(2,4)");
  const Json& rs = j["ranges"];
  ASSERT_GE(rs.size(), 2u);
  EXPECT_TRUE(rs.front()["m_lo"].is_null());
  EXPECT_TRUE(rs.back()["m_hi"].is_null());
  const std::regex status(R"(H\^\d+|vanishes)");
  for (const Json& r : rs) EXPECT_TRUE(std::regex_match(r["status"].get<std::string>(), status));
  for (const auto& [lemma, v] : j["verdicts"].items()) EXPECT_EQ(v, "pass") << lemma;
}

TEST(Json, SerializationIsDeterministic) {
  OracleConfig cfg;
  cfg.p_max = 2;
  const std::string a = to_json(local_cohomology_dims(cfg)).dump();
  const std::string b = to_json(local_cohomology_dims(cfg)).dump();
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.find("seconds"), std::string::npos);
}

TEST(Cli, BottDocument) {
  const CliRun r = cli("--json bott --n 4 --r 2 --bundle theta --range -3 -1");
  ASSERT_EQ(r.status, 0);
  const Json j = Json::parse(r.out);
  expect_header(j, "bott");
  ASSERT_EQ(j["entries"].size(), 3u);
  EXPECT_EQ(j["entries"][1]["result"]["weight"], "-1^4");
  EXPECT_EQ(j["entries"][0]["result"], Json({{"vanishes", true}}));
}

TEST(Cli, ScanDocument) {
  const CliRun r = cli("--json scan --n 5 --r 2");
  ASSERT_EQ(r.status, 0);
  const Json j = Json::parse(r.out);
  expect_header(j, "scan");
  EXPECT_EQ(j["summary"]["certified_range"], Json::array({1, 4}));
  EXPECT_EQ(r.out, cli("--json scan --n 5 --r 2").out);
}

TEST(Cli, IsoDocument) {
  const CliRun r = cli("--json iso --family OG_odd --r 2 --n 5 --bundle wedge2 --lemmata");
  ASSERT_EQ(r.status, 0);
  const Json j = Json::parse(r.out);
  expect_header(j, "iso");
  EXPECT_TRUE(j.contains("ranges"));
  EXPECT_TRUE(j.contains("verdicts"));
}

TEST(Cli, OracleDocumentOmitsTimingsUnlessAsked) {
  const CliRun r = cli("--json oracle --r 2 --n 4 --p-max 2");
  ASSERT_EQ(r.status, 0);
  const Json j = Json::parse(r.out);
  expect_header(j, "oracle");
  EXPECT_FALSE(has_key_recursive(j, "seconds"));
  EXPECT_EQ(j["slices"][1]["computed"]["C2"], 80);
  const Json t = Json::parse(cli("--json oracle --r 2 --n 4 --p-max 2 --timing").out);
  EXPECT_TRUE(has_key_recursive(t, "seconds"));
}

TEST(Cli, VerifyPaperDocument) {
  const CliRun r = cli("--json verify-paper --only g24");
  ASSERT_EQ(r.status, 0);
  const Json j = Json::parse(r.out);
  expect_header(j, "verify-paper");
  ASSERT_EQ(j["criteria"].size(), 1u);
  EXPECT_EQ(j["criteria"][0]["key"], "g24");
  EXPECT_TRUE(j["passed"].get<bool>());
}

TEST(Cli, CsvHasHeaderRow) {
  const CliRun r = cli("--format csv bott --n 4 --r 2 --bundle O --range 0 1");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "n,r,bundle,m,l,weight,dim");
  EXPECT_NE(r.out.find("4,2,O,1,0,\"1^2,0^2\",6"), std::string::npos);
}
