#include <gtest/gtest.h>

#include "remixed/verify.hpp"

using namespace remixed;

TEST(Verify, AllSuitesPassExhaustivelyUpToEight) {
  auto results = run_verify("all", 8);
  ASSERT_FALSE(results.empty());
  for (const auto& r : results) {
    EXPECT_GT(r.checked, 0u) << r.name;
    EXPECT_EQ(r.failures, 0u) << r.name << " first failure " << r.example.value_or("");
  }
}

TEST(Verify, EveryConfigurationIsVisited) {
  ExactCache cache;
  auto fam = verify_families(6, cache);
  std::uint64_t total = 0;
  for (int n = 1; n <= 6; ++n) total += all_configurations(n).size();
  for (const auto& r : fam) {
    if (r.name != "induction" && r.name != "dispatch") continue;
    EXPECT_EQ(r.checked, total) << r.name;
  }
}

TEST(Verify, RejectsBadArguments) {
  EXPECT_THROW(run_verify("all", 0), Error);
  EXPECT_THROW(run_verify("nonsense", 3), Error);
}

TEST(Verify, RecordsFirstFailure) {
  PropertyResult r("demo");
  r.record(true, "a");
  r.record(false, "b");
  r.record(false, "c");
  EXPECT_EQ(r.checked, 3u);
  EXPECT_EQ(r.failures, 2u);
  EXPECT_EQ(r.example, "b");
  EXPECT_FALSE(r.passed());
}
