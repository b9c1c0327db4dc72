#include "orbit/harness.hpp"

#include "orbit/error.hpp"

#include <chrono>
#include <cstdlib>
#include <random>

namespace orbit {

std::uint64_t seed_from_env(std::uint64_t fallback)
{
    const char* s = std::getenv("ORBITFORGE_SEED");
    if (!s || !*s) return fallback;
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    return (end && *end == '\0') ? v : fallback;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b)
{
    // splitmix64 finalizer over a simple combination
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (a + 1) + 0xbf58476d1ce4e5b9ULL * (b + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::vector<Rational> parameter_grid() { return {Rational(1), Rational(1, 4), Rational(9, 4)}; }

std::vector<FamilyInstance> poincare_instances(Side side)
{
    std::vector<FamilyInstance> out;
    const auto grid = parameter_grid();
    const std::vector<Rational> one = {Rational(1)};
    for (const auto& f : enumerate_families(side)) {
        const auto& mus = f.uses("mu2") ? grid : one;
        const auto& as = f.uses("a") ? grid : one;
        const auto& bs = f.uses("b") ? grid : one;
        for (const auto& mu2 : mus)
            for (const auto& a : as)
                for (const auto& b : bs) {
                    FamilyParams p{mu2, a, b};
                    out.push_back({f.id, p, instantiate(f.label_template(), p)});
                }
    }
    return out;
}

namespace {

using Clock = std::chrono::steady_clock;

template <class Fn>
void run_trials(std::vector<TrialResult>& results, bool parallel, Fn&& fn)
{
    const long n = static_cast<long>(results.size());
#pragma omp parallel for schedule(dynamic, 8) if (parallel)
    for (long i = 0; i < n; ++i) {
        TrialResult& r = results[static_cast<std::size_t>(i)];
        r.index = static_cast<std::size_t>(i);
        try {
            fn(r);
        } catch (const std::exception& e) {
            r.got = std::string("error: ") + e.what();
            r.ok = false;
        }
    }
}

void finish(SuiteReport& rep, Clock::time_point start)
{
    rep.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    for (const auto& t : rep.trials)
        if (!t.ok) ++rep.failures;
}

Vec random_shift(std::mt19937_64& rng, std::size_t n)
{
    Vec w(n);
    for (auto& x : w) x = ExactScalar(static_cast<long>(rng() % 5) - 2);
    return w;
}

}  // namespace

SuiteReport adjoint_invariance_suite(const SuiteOptions& opt)
{
    auto start = Clock::now();
    SuiteReport rep{"adjoint conjugation invariance", {}, 0, 0};
    auto inst = poincare_instances(Side::Adjoint);
    std::vector<AdjointTriple> reps(inst.size());
    std::vector<std::string> labels(inst.size());
    for (std::size_t i = 0; i < inst.size(); ++i) {
        reps[i] = synthesize_adjoint(AdjointOrbitLabel::parse(inst[i].label), std::pair{6, 4});
        labels[i] = classify_poincare(reps[i].y).label.str();
    }
    const std::size_t per = static_cast<std::size_t>(std::max(opt.trials_per_instance, 0));
    rep.trials.resize(inst.size() * per);
    run_trials(rep.trials, opt.parallel, [&](TrialResult& r) {
        std::size_t k = r.index / per, t = r.index % per;
        r.family = inst[k].family;
        r.expected = inst[k].label;
        Matrix p = random_stabilizer_element(mix_seed(opt.seed, k, t), reps[k].gram, reps[k].v0);
        auto res = classify_poincare(conjugate(reps[k], p).y);
        r.got = res.label.str();
        r.ok = r.got == r.expected && labels[k] == r.expected && res.family == inst[k].family;
    });
    finish(rep, start);
    return rep;
}

SuiteReport coadjoint_invariance_suite(const SuiteOptions& opt)
{
    auto start = Clock::now();
    SuiteReport rep{"coadjoint shear and conjugation invariance", {}, 0, 0};
    auto inst = poincare_instances(Side::Coadjoint);
    std::vector<CoTuple> reps(inst.size());
    for (std::size_t i = 0; i < inst.size(); ++i)
        reps[i] = synthesize_cotype(CoadjointOrbitLabel::parse(inst[i].label), std::pair{6, 4});
    const std::size_t per = static_cast<std::size_t>(std::max(opt.trials_per_instance, 0));
    rep.trials.resize(inst.size() * per);
    run_trials(rep.trials, opt.parallel, [&](TrialResult& r) {
        std::size_t k = r.index / per, t = r.index % per;
        r.family = inst[k].family;
        r.expected = inst[k].label;
        std::uint64_t s = mix_seed(opt.seed, k + 1000, t);
        std::mt19937_64 rng(s);
        Matrix p = random_group_element(s, reps[k].gram);
        Vec w = random_shift(rng, reps[k].gram.rows());
        auto res = classify_poincare(apply_cotuple_equivalence(reps[k], p, w));
        r.got = res.label.str();
        r.ok = r.got == r.expected && res.family == inst[k].family;
    });
    finish(rep, start);
    return rep;
}

SuiteReport two_chain_determinant_suite(std::uint64_t seed, int count, bool parallel)
{
    auto start = Clock::now();
    SuiteReport rep{"two-chain determinant", {}, 0, 0};
    static const char* heads[] = {"u{D+_0(0)+D-_0(0)}", "u{D_1(0,0)}", "u{D+_2(0)+D-_2(0)}", "u{D_3(0,0)}"};
    static const char* extras[] = {"D-_0(0)", "D+_0(0)", "D_0(RP a=1/4)", "D-_0(IP b=9/4)"};
    rep.trials.resize(static_cast<std::size_t>(std::max(count, 0)));
    run_trials(rep.trials, parallel, [&](TrialResult& r) {
        std::uint64_t s = mix_seed(seed, 2000, r.index);
        std::mt19937_64 rng(s);
        std::string label = heads[r.index % 4];
        int n_extra = static_cast<int>(rng() % 3);
        for (int i = 0; i < n_extra; ++i) label += std::string(" + ") + extras[rng() % 4];
        AdjointOrbitLabel l = AdjointOrbitLabel::parse(label);
        r.family = l.distinguished.str();
        r.expected = l.str();
        AdjointTriple t = synthesize_adjoint(l);
        t = conjugate(t, random_stabilizer_element(rng(), t.gram, t.v0));
        DistinguishedSplit sp = split_distinguished(t);
        bool identity = !sp.det_gram.is_zero() &&
                        (sp.det_gram == sp.antidiagonal_product || sp.det_gram == -sp.antidiagonal_product);
        r.got = classify_adjoint(t).str();
        r.ok = identity && r.got == r.expected;
        if (!identity) r.got += " (det " + sp.det_gram.str() + ", antidiagonal " + sp.antidiagonal_product.str() + ")";
    });
    finish(rep, start);
    return rep;
}

}  // namespace orbit
