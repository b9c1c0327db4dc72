#include "orbit/harness.hpp"

#include <gtest/gtest.h>

#include <cstdlib>

using namespace orbit;

TEST(Harness, InstanceGrid)
{
    auto a = poincare_instances(Side::Adjoint);
    auto c = poincare_instances(Side::Coadjoint);
    EXPECT_EQ(a.size(), 60u);
    EXPECT_EQ(c.size(), 60u);
    std::set<std::string> labels;
    for (const auto& i : a) labels.insert(i.label);
    EXPECT_EQ(labels.size(), a.size());
}

TEST(Harness, SeedMixing)
{
    EXPECT_EQ(mix_seed(7, 1, 2), mix_seed(7, 1, 2));
    EXPECT_NE(mix_seed(7, 1, 2), mix_seed(7, 2, 1));
    EXPECT_NE(mix_seed(7, 1, 2), mix_seed(8, 1, 2));
}

TEST(Harness, SeedFromEnvironment)
{
    ::setenv("ORBITFORGE_SEED", "123", 1);
    EXPECT_EQ(seed_from_env(), 123u);
    ::setenv("ORBITFORGE_SEED", "abc", 1);
    EXPECT_EQ(seed_from_env(9), 9u);
    ::unsetenv("ORBITFORGE_SEED");
    EXPECT_EQ(seed_from_env(), kDefaultSeed);
}

TEST(Harness, SerialAndParallelAgree)
{
    SuiteOptions serial{11, 3, false}, parallel{11, 3, true};
    auto a = adjoint_invariance_suite(serial);
    auto b = adjoint_invariance_suite(parallel);
    ASSERT_EQ(a.trials.size(), 180u);
    ASSERT_EQ(a.trials.size(), b.trials.size());
    for (std::size_t i = 0; i < a.trials.size(); ++i) {
        EXPECT_EQ(a.trials[i].index, i);
        EXPECT_EQ(a.trials[i].got, b.trials[i].got);
    }
    EXPECT_TRUE(a.passed());
    EXPECT_TRUE(b.passed());
}

TEST(Harness, SmallSuitesPass)
{
    SuiteOptions opt{3, 2, true};
    EXPECT_TRUE(coadjoint_invariance_suite(opt).passed());
    auto two = two_chain_determinant_suite(3, 12);
    EXPECT_EQ(two.trials.size(), 12u);
    EXPECT_TRUE(two.passed());
    EXPECT_EQ(parameter_check_stats().failures, 0u);
}

TEST(Harness, EmptySuiteDoesNotPass)
{
    SuiteOptions none{1, 0, false};
    EXPECT_FALSE(adjoint_invariance_suite(none).passed());
}
