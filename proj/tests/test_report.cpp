#include "flatloc/catalog.hpp"
#include "flatloc/numeric.hpp"
#include "flatloc/report.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

using namespace flatloc;

namespace {

std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(FLATLOC_GOLDEN_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing golden file " + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Report, GoldenText) {
  EXPECT_EQ(report(classify("quad:-5", "p2"), Format::Text), read_golden("quad_p2.txt"));
  EXPECT_EQ(report(classify("ell:0,1", "2,3"), Format::Text), read_golden("ell_0_1_p23.txt"));
}

TEST(Report, GoldenJson) {
  EXPECT_EQ(report(classify("ell:0,-4", "2,2"), Format::Json), read_golden("ell_0_-4_p22.json"));
  EXPECT_EQ(report(classify("segre", "", "S0*T0 + S1*T1"), Format::Json),
            read_golden("segre_principal.json"));
  EXPECT_EQ(report(classify("twoplanes", "(X,Y)"), Format::Json), read_golden("twoplanes_xy.json"));
}

TEST(Report, JsonShape) {
  const auto j = verdict_to_json(classify("ell:0,-4", "2,2"));
  EXPECT_EQ(j.at("schema"), kSchemaVersion);
  EXPECT_EQ(j.at("torsion"), "infinite");
  EXPECT_EQ(j.at("flat"), "yes");
  EXPECT_EQ(j.at("universal"), "no");
  std::vector<std::string> keys;
  for (const auto& [k, _] : j.items()) keys.push_back(k);
  EXPECT_TRUE(std::is_sorted(keys.begin(), keys.end()));
  EXPECT_EQ(verdict_to_json(classify("ell:0,1", "2,3")).at("torsion"), 6);
}

TEST(Report, RoundTripEveryExample) {
  for (const auto& r : catalog_examples()) {
    const Verdict v = classify(r);
    const auto j = verdict_to_json(v);
    const Verdict back = verdict_from_json(j);
    EXPECT_EQ(verdict_to_json(back), j) << r.ring << " " << r.prime;
    EXPECT_EQ(verdict_to_text(back), verdict_to_text(v));
  }
}

TEST(Report, SchemaMismatch) {
  auto j = verdict_to_json(classify("quad:-5", "p2"));
  j["schema"] = 2;
  EXPECT_THROW(verdict_from_json(j), InputError);
  EXPECT_THROW(parse_format("yaml"), InputError);
  EXPECT_EQ(parse_format("json"), Format::Json);
}

TEST(Report, UnknownCarriesReasonCode) {
  const Verdict v = classify("ell:1/4,0", "0,0");
  EXPECT_EQ(v.universal(), Tri::Unknown);
  EXPECT_NE(verdict_to_text(v).find("reason: non-integral-model"), std::string::npos);
  EXPECT_EQ(verdict_to_json(v).at("witness").at("reason_code"), "non-integral-model");
}

TEST(Report, Deterministic) {
  for (const auto& r : catalog_examples()) {
    EXPECT_EQ(report(classify(r), Format::Json), report(classify(r), Format::Json));
  }
}

TEST(Catalog, Entries) {
  EXPECT_NE(find_entry("segre"), nullptr);
  EXPECT_EQ(find_entry("nosuch"), nullptr);
  ASSERT_NE(find_entry("nagata"), nullptr);
  EXPECT_FALSE(find_entry("nagata")->representable);
  EXPECT_EQ(catalog_list("").size(), catalog_list().size());
  ASSERT_FALSE(catalog_list("quad:").empty());
  EXPECT_EQ(catalog_list("quad:").front().id, "quad:-5");
  EXPECT_TRUE(catalog_list("no such ring").empty());
  EXPECT_THROW(classify("nagata", "x"), NotRepresentable);
  EXPECT_THROW(classify("nosuch", "x"), InputError);
  EXPECT_THROW(classify("quad:-5", "p4"), InputError);
}

TEST(Catalog, VariablePrimes) {
  const Verdict two = classify("twoplanes", "(X,Y)");
  EXPECT_EQ(two.flat(), Tri::No);
  EXPECT_TRUE(std::holds_alternative<CohomologyWitness>(two.witness()));
  const Verdict line = classify("twoplanes", "(X)");
  EXPECT_EQ(line.classical(), Tri::Yes);
  const Verdict hyper = classify("dim3hyper", "(X,Y,U,V)");
  EXPECT_EQ(hyper.flat(), Tri::No);
  EXPECT_TRUE(std::holds_alternative<HeightViolationWitness>(hyper.witness()));
  const Verdict xv = classify("dim3hyper", "(X,V)");
  EXPECT_EQ(xv.flat(), Tri::No);
  EXPECT_TRUE(std::holds_alternative<CohomologyWitness>(xv.witness()));
  EXPECT_THROW(classify("twoplanes", "(X,Z)"), InputError);
}

TEST(Catalog, BatchKeepsOrder) {
  const auto requests = catalog_examples();
  const auto verdicts = classify_batch(requests);
  ASSERT_EQ(verdicts.size(), requests.size());
  for (std::size_t i = 0; i < requests.size(); ++i) {
    EXPECT_EQ(verdict_to_json(verdicts[i]), verdict_to_json(classify(requests[i])));
  }
}
