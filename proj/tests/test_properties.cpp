#include "support/fixtures.hpp"
#include "support/properties.hpp"

#include <gtest/gtest.h>

using namespace lfk;
using namespace lfk::testing;

namespace {

constexpr int kInstances = 200;

void expect_suites(const std::vector<PropertyResult>& suites, int minimum) {
  for (const auto& s : suites) {
    EXPECT_GE(s.instances, minimum) << s.name;
    EXPECT_EQ(s.failures, 0) << s.name << ": " << s.first_failure;
  }
}

}  // namespace

TEST(Properties, CoreInvariants) { expect_suites(core_invariant_suites(kInstances), kInstances); }

TEST(Properties, ModuleInvariants) { expect_suites(module_invariant_suites(kInstances), 20); }

TEST(Properties, RealFactorMatchesEnumeration) {
  PropertyResult r = real_factor_oracle_agreement(600);
  EXPECT_EQ(r.instances, 600);
  EXPECT_EQ(r.failures, 0) << r.first_failure;
}

// The enumeration oracle itself, on products whose factorization is known.
TEST(FactorOracle, KnownProducts) {
  const VarSpace R1 = real(1);
  auto deg = [&](const char* text) { return oracle::max_real_factor_degree(oracle::to_dense(P(text, R1))); };
  EXPECT_EQ(deg("z1"), 0);
  EXPECT_EQ(deg("z1*zb1"), 2);
  EXPECT_EQ(deg("(z1+zb1)*(z1+I)"), 1);
  EXPECT_EQ(deg("(z1+1)*(zb1+1)*(z1+I)"), 2);
  EXPECT_EQ(deg("z1^2+zb1"), 0);
  EXPECT_EQ(deg("(z1+I*zb1)*z1"), 1);
  // A factor with coefficients outside {0, +-1, +-i}.
  EXPECT_EQ(deg("(z1+2)*(zb1+2)"), 2);
  EXPECT_EQ(deg("(2*z1+zb1+1)*(z1-zb1)"), 1);
}

TEST(FactorOracle, SplitsIntoLinearFactors) {
  const VarSpace R1 = real(1);
  auto fs = oracle::factor_small(oracle::to_dense(P("(z1+2)*(zb1-I)*(z1+zb1+3)", R1)));
  ASSERT_EQ(fs.size(), 3u);
  for (const auto& f : fs) EXPECT_EQ(f.degree(), 1);
  // Irreducible quadratic stays whole.
  auto q = oracle::factor_small(oracle::to_dense(P("z1^2 + zb1", R1)));
  ASSERT_EQ(q.size(), 1u);
  EXPECT_EQ(q[0].degree(), 2);
}

TEST(FactorOracle, SamplesRespectTheCoefficientSet) {
  auto samples = real_factor_samples(500, 7);
  ASSERT_EQ(samples.size(), 500u);
  int with_factor = 0;
  for (const auto& d : samples) {
    EXPECT_FALSE(d.is_zero());
    EXPECT_LE(d.degree(), 3);
    for (const auto& row : d.c)
      for (const auto& x : row) EXPECT_LE(x.norm(), 1);
    if (oracle::max_real_factor_degree(d) > 0) ++with_factor;
  }
  // Both outcomes are exercised.
  EXPECT_GT(with_factor, 100);
  EXPECT_LT(with_factor, 500);
}
