#pragma once

#include "orbit/poincare.hpp"

#include <cstdint>

namespace orbit {

inline constexpr std::uint64_t kDefaultSeed = 7;

/// Seed from ORBITFORGE_SEED when set and parseable, else fallback.
std::uint64_t seed_from_env(std::uint64_t fallback = kDefaultSeed);
/// Independent stream per (seed, a, b).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b);

/// One family at one point of the {1, 1/4, 9/4} grid of its used slots.
struct FamilyInstance {
    std::string family;
    FamilyParams params;
    std::string label;
};
std::vector<Rational> parameter_grid();
std::vector<FamilyInstance> poincare_instances(Side side);

struct TrialResult {
    std::size_t index = 0;
    std::string family;
    std::string expected;
    std::string got;
    bool ok = false;
};

struct SuiteReport {
    std::string name;
    std::vector<TrialResult> trials;  // sorted by index
    std::size_t failures = 0;
    double seconds = 0;
    bool passed() const { return failures == 0 && !trials.empty(); }
};

struct SuiteOptions {
    std::uint64_t seed = kDefaultSeed;
    int trials_per_instance = 200;
    bool parallel = true;
};

/// Random stabilizer conjugations of synthesized Poincare triples.
SuiteReport adjoint_invariance_suite(const SuiteOptions& opt);
/// Random isometries plus shears of synthesized Poincare tuples.
SuiteReport coadjoint_invariance_suite(const SuiteOptions& opt);
/// Two-chain (p = 0) distinguished triples with h <= 3, randomly conjugated;
/// checks det of the chain Gram against the antidiagonal product.
SuiteReport two_chain_determinant_suite(std::uint64_t seed, int count, bool parallel = true);

}  // namespace orbit
