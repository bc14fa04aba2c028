#include <gtest/gtest.h>

#include "qteleport/errors.hpp"
#include "qteleport/json_io.hpp"
#include "qteleport/verify.hpp"

using namespace qtele;

namespace {

void expect_clean(const VerificationReport& r) {
  EXPECT_TRUE(r.passed);
  EXPECT_TRUE(r.errors.empty());
  for (const auto& s : r.stages) EXPECT_LT(s.max_deviation, 1e-12) << s.name;
  EXPECT_LT(r.max_branch_deviation, 1e-12);
}

}  // namespace

TEST(VerifyProtocol, SingleQubit) {
  const auto r = verify_protocol(1, 20, 7);
  expect_clean(r);
  EXPECT_TRUE(r.exhaustive);
  EXPECT_EQ(r.inputs_checked, 2u + 20u);
  EXPECT_EQ(r.branches_checked, 22u * 4u);
  ASSERT_TRUE(r.fixtures.has_value());
  EXPECT_EQ(r.fixtures->matched, 4u);
  EXPECT_EQ(r.fixtures->total, 4u);
}

TEST(VerifyProtocol, TwoQubitIncludesSixteenRowTable) {
  const auto r = verify_protocol(2, 20, 1);
  expect_clean(r);
  ASSERT_TRUE(r.fixtures.has_value());
  EXPECT_EQ(r.fixtures->name, "eq19");
  EXPECT_EQ(r.fixtures->matched, 16u);
  EXPECT_EQ(r.fixtures->total, 16u);
}

TEST(VerifyProtocol, ThreeQubitChecksAllSixtyFourBranches) {
  const auto r = verify_protocol(3, 10, 2);
  expect_clean(r);
  EXPECT_EQ(r.branches_checked, (8u + 10u) * 64u);
  EXPECT_FALSE(r.fixtures.has_value());
}

TEST(VerifyProtocol, LargerRegistersAreSampled) {
  const auto r = verify_protocol(4, 3, 3);
  EXPECT_TRUE(r.passed);
  EXPECT_FALSE(r.exhaustive);
  EXPECT_EQ(r.inputs_checked, 3u);
  EXPECT_EQ(r.branches_checked, 3u * kSampledBranches);
}

TEST(VerifyProtocol, RejectsOutOfRangeN) {
  EXPECT_THROW(verify_protocol(0, 1, 0), UsageError);
  EXPECT_THROW(verify_protocol(6, 1, 0), UsageError);
}

TEST(VerifyProtocol, DeterministicAndSerializable) {
  const auto a = to_json(verify_protocol(2, 5, 11));
  const auto b = to_json(verify_protocol(2, 5, 11));
  EXPECT_EQ(a.dump(), b.dump());
  EXPECT_EQ(a.at("passed"), true);
  EXPECT_EQ(a.at("fixtures").at("matched"), 16);
  EXPECT_EQ(a.at("stages").size(), 8u);
}
