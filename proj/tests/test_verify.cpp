#include <gtest/gtest.h>

#include "convlab/errors.hpp"
#include "convlab/verify.hpp"

using namespace convlab;

TEST(Verify, AllCriteriaPassOnSmallCarriers) {
  for (int n = 1; n <= 3; ++n) {
    VerifyConfig config;
    config.atoms = n;
    config.samples = 200;
    int seen = 0;
    const auto results = run_verification(config, [&](const CriterionResult& r) {
      EXPECT_EQ(r.index, ++seen);
    });
    ASSERT_EQ(results.size(), static_cast<std::size_t>(kCriterionCount));
    for (const auto& r : results) EXPECT_TRUE(r.passed) << format_result(r);
  }
}

TEST(Verify, Deterministic) {
  VerifyConfig config;
  config.atoms = 3;
  config.seed = 99;
  config.samples = 100;
  const auto a = run_verification(config);
  const auto b = run_verification(config);
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(format_result(a[i]), format_result(b[i]));
}

TEST(Verify, RejectsBadConfig) {
  VerifyConfig config;
  config.atoms = 6;
  EXPECT_THROW(run_verification(config), ScaleError);
  config.atoms = 2;
  config.samples = 0;
  EXPECT_THROW(run_verification(config), ValidationError);
}

TEST(Verify, ExtraSubmeasureTable) {
  VerifyConfig config;
  config.atoms = 3;
  config.samples = 50;
  config.submeasure = std::string(CONVLAB_TEST_DATA) + "/weighted3.txt";
  EXPECT_TRUE(run_verification(config)[10].passed);

  config.atoms = 2;
  config.submeasure = std::string(CONVLAB_TEST_DATA) + "/nonmonotone2.txt";
  const auto r = run_verification(config)[10];
  EXPECT_FALSE(r.passed);
  EXPECT_NE(r.detail.find("nonmonotone2.txt"), std::string::npos);
}

TEST(Verify, FormatResult) {
  EXPECT_EQ(format_result({3, "title", true, "n=1"}), "[PASS]  3. title (n=1)");
  EXPECT_EQ(format_result({12, "title", false, {}}), "[FAIL] 12. title");
}
