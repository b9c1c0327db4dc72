// One pass/fail line per acceptance criterion. Exit status is nonzero when
// any criterion fails.
#include "orbit/error.hpp"
#include "orbit/harness.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>

using namespace orbit;

namespace {

using DI = std::pair<int, int>;

constexpr double kTableSeconds = 1.0;
constexpr double kCatalogSeconds = 5.0;
constexpr double kInvarianceSeconds = 60.0;
constexpr int kInvarianceTrials = 200;
constexpr int kTwoChainConstructions = 50;

struct Outcome {
    bool ok = false;
    std::string detail;
};

struct PrintedRow {
    const char* id;
    DI head, rest;
};

// Dim and index columns as printed, head part then rest.
const PrintedRow kAdjointRows[] = {
    {"A1a", {5, 3}, {1, 1}}, {"A2a", {4, 2}, {2, 2}}, {"A2b", {4, 2}, {2, 2}}, {"A3a", {3, 2}, {3, 2}},
    {"A3b", {3, 2}, {3, 2}}, {"A3c", {3, 2}, {3, 2}}, {"A3d", {3, 2}, {3, 2}}, {"A4a", {3, 1}, {3, 3}},
    {"A4b", {3, 1}, {3, 3}}, {"A5a", {2, 1}, {4, 3}}, {"A5b", {2, 1}, {4, 3}}, {"A5c", {2, 1}, {4, 3}},
    {"A5d", {2, 1}, {4, 3}}, {"A5e", {2, 1}, {4, 3}},
};
const PrintedRow kCoadjointRows[] = {
    {"C1", {5, 3}, {1, 1}},  {"C2", {4, 2}, {2, 2}},  {"C3", {4, 2}, {2, 2}},  {"C4", {3, 2}, {3, 2}},
    {"C5", {3, 2}, {3, 2}},  {"C6", {3, 2}, {3, 2}},  {"C7", {3, 2}, {3, 2}},  {"C8", {3, 1}, {3, 3}},
    {"C9", {3, 1}, {3, 3}},  {"C10", {2, 1}, {4, 3}}, {"C11", {2, 1}, {4, 3}}, {"C12", {2, 1}, {4, 3}},
    {"C13", {2, 1}, {4, 3}}, {"C14", {2, 1}, {4, 3}},
};

template <std::size_t N>
Outcome check_table(Side side, const PrintedRow (&rows)[N])
{
    const auto& fams = enumerate_families(side);
    if (fams.size() != N) return {false, std::to_string(fams.size()) + " families"};
    int bad = 0;
    std::string first;
    for (std::size_t i = 0; i < N; ++i) {
        const auto& f = fams[i];
        MeasuredFamily m = measure_family(f);
        bool ok = f.id == rows[i].id && f.head_printed == rows[i].head && f.rest_printed == rows[i].rest &&
                  m.head == rows[i].head && m.rest == rows[i].rest &&
                  rows[i].head.first + rows[i].rest.first == 6 && rows[i].head.second + rows[i].rest.second == 4;
        if (!ok && bad++ == 0) first = f.id;
    }
    if (bad) return {false, std::to_string(bad) + " rows differ, first " + first};
    return {true, "14 families, printed and measured (dim, index) agree"};
}

Outcome worked_example()
{
    for (Rational alpha : {Rational(1), Rational(3, 2)}) {
        auto r = classify_poincare(example_normal_form(alpha));
        std::string want = "u{D-_4(0), mu2=" + rational_str(alpha * alpha) + "} + D-_0(0)";
        if (r.label.str() != want || r.family != "A1a") return {false, "alpha=" + rational_str(alpha) + " gave " + r.label.str()};
    }
    return {true, "alpha in {1, 3/2} -> u{D-_4(0), mu2=alpha^2} + D-_0(0)"};
}

Outcome catalog()
{
    int ok = 0;
    for (const auto& e : normal_form_catalog({})) {
        auto r = classify_poincare(e.tuple);
        if (r.family == "C" + std::to_string(e.number) && r.label == e.expected) ++ok;
    }
    return {ok == 14, std::to_string(ok) + "/14 entries self-classify"};
}

Outcome suite_outcome(const SuiteReport& r)
{
    std::ostringstream s;
    s << r.trials.size() << " trials, " << r.failures << " mismatches";
    for (const auto& t : r.trials)
        if (!t.ok) {
            s << "; first: " << t.family << " " << t.got;
            break;
        }
    return {r.passed(), s.str()};
}

std::vector<std::string> grid_labels(Side side)
{
    const std::vector<Rational> mus = {1, Rational(1, 4), Rational(9, 4), 2};
    const std::vector<Rational> ab = {1, 2, Rational(1, 4)};
    const std::vector<Rational> one = {1};
    std::vector<std::string> out;
    for (const auto& f : enumerate_families(side))
        for (const auto& mu2 : f.uses("mu2") ? mus : one)
            for (const auto& a : f.uses("a") ? ab : one)
                for (const auto& b : f.uses("b") ? ab : one) out.push_back(instantiate(f.label_template(), {mu2, a, b}));
    return out;
}

Outcome round_trips()
{
    int total = 0, bad = 0;
    std::string first;
    auto note = [&](bool ok, const std::string& s) {
        ++total;
        if (!ok && bad++ == 0) first = s;
    };
    std::vector<std::string> adj = grid_labels(Side::Adjoint);
    for (const char* extra : {"u{D+_6(0), mu2=3} + D-_0(0)", "u{D_5(0,0)} + D_1(0,0)", "u{D+_4(0)+D-_4(0)} + D+_0(0)",
                              "u{D+_4(0), mu2=2}", "u{D-_2(0), mu2=1} + D_0(CQ 1,0,1)", "u{D_1(0,0)} + D+_1(IP b=1)"})
        adj.push_back(extra);
    for (const auto& s : adj) {
        try {
            AdjointOrbitLabel l = AdjointOrbitLabel::parse(s);
            note(classify_adjoint(synthesize_adjoint(l)) == l, s);
        } catch (const std::exception& e) {
            note(false, s + ": " + e.what());
        }
    }
    std::vector<std::string> co = grid_labels(Side::Coadjoint);
    for (const char* extra : {"zero + D_1(0,0)", "1dim-, a2=9/4 + D-_0(0) + D+_0(0)", "N_8(0,0)", "N+_9(0), mu2=1",
                              "N-_7(0), mu2=1/4 + D-_0(IP b=2)", "N_2(0,0) + D_0(CQ 1,0,1)"})
        co.push_back(extra);
    for (const auto& s : co) {
        try {
            CoadjointOrbitLabel l = CoadjointOrbitLabel::parse(s);
            note(classify_cotuple(synthesize_cotype(l)) == l, s);
        } catch (const std::exception& e) {
            note(false, s + ": " + e.what());
        }
    }
    std::string d = std::to_string(total - bad) + "/" + std::to_string(total) + " labels";
    if (bad) d += "; first failure " + first;
    return {bad == 0, d};
}

Outcome bijection()
{
    std::set<std::string> partners;
    int checked = 0;
    for (const auto& f : enumerate_families(Side::Adjoint)) {
        for (const FamilyParams& p : {FamilyParams{}, FamilyParams{Rational(9, 4), Rational(1, 4), 2}}) {
            AdjointOrbitLabel a = AdjointOrbitLabel::parse(instantiate(f.label_template(), p));
            CoadjointOrbitLabel c = adjoint_to_coadjoint(a);
            std::string fam = match_family(c);
            AdjointTriple ta = synthesize_adjoint(a, DI{6, 4});
            CoTuple tc = synthesize_cotype(c, DI{6, 4});
            Rational mu_a = a.distinguished.kind == DistinguishedLabel::Case::One ? a.distinguished.mu2 : Rational(0);
            Rational mu_c = c.cotype.kind == CotypeLabel::Kind::OddAffine ? c.cotype.q : Rational(0);
            bool ok = fam == f.partner && family_by_id(fam).partner == f.id && coadjoint_to_adjoint(c) == a &&
                      a.dim_index() == c.dim_index() && mu_a == mu_c && jordan_type(ta.y) == jordan_type(tc.y) &&
                      signature_index(ta.gram) == signature_index(tc.gram);
            if (!ok) return {false, f.id + " does not match " + f.partner};
            partners.insert(fam);
            ++checked;
        }
    }
    if (partners.size() != 14) return {false, std::to_string(partners.size()) + " distinct partners"};
    return {true, "14 adjoint <-> 14 coadjoint families, " + std::to_string(checked) + " instances measured"};
}

Outcome little_cotype_recursion()
{
    int ok = 0, total = 0;
    for (int n : {5, 7, 9})
        for (int sign : {-1, 1})
            for (Rational mu2 : {Rational(1), Rational(9, 4)}) {
                ++total;
                CoTuple little = little_cotype(synthesize_cotype({CotypeLabel::odd_affine(n, sign, mu2), {}}));
                if (classify_cotuple(little).cotype == CotypeLabel::odd_affine(n - 2, sign, mu2)) ++ok;
            }
    for (int n : {4, 6, 8}) {
        ++total;
        CoTuple little = little_cotype(synthesize_cotype({CotypeLabel::even_affine(n), {}}));
        if (classify_cotuple(little).cotype == CotypeLabel::even_affine(n - 2)) ++ok;
    }
    return {ok == total, std::to_string(ok) + "/" + std::to_string(total) + " cotypes"};
}

ExactScalar trace(const Matrix& m)
{
    ExactScalar s;
    for (std::size_t i = 0; i < m.rows(); ++i) s += m(i, i);
    return s;
}

Outcome shear_annihilator()
{
    std::ostringstream d;
    bool all = true;
    for (auto [neg, pos] : {DI{3, 1}, DI{2, 1}, DI{2, 2}}) {
        Matrix g = lorentz_block(neg, pos);
        std::size_t n = g.rows(), N = n + 2;
        Matrix k = standard_form(g);
        Vec e_last = unit_vector(N, N - 1);
        std::vector<Matrix> stab;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                stab.push_back(embed_semidirect(shear_map(unit_vector(n, i), unit_vector(n, j), g), Vec(n), g).y);
        for (std::size_t i = 0; i < n; ++i) stab.push_back(embed_semidirect(Matrix(n, n), unit_vector(n, i), g).y);
        Matrix span(N * N, N);
        bool vanish = true;
        for (std::size_t c = 0; c < N; ++c) {
            Matrix l = shear_map(unit_vector(N, c), e_last, k);
            for (std::size_t i = 0; i < N; ++i)
                for (std::size_t j = 0; j < N; ++j) span(i * N + j, c) = l(i, j);
            for (const auto& z : stab) vanish &= trace(l * z).is_zero();
        }
        std::size_t dim = rank(span);
        bool ok = dim == n + 1 && vanish;
        all &= ok;
        d << "n=" << n << ": dim " << dim << (vanish ? ", pairing 0" : ", pairing nonzero") << "; ";
    }
    return {all, d.str()};
}

struct Criterion {
    int number;
    const char* name;
    double limit;  // seconds, 0 for none
    std::function<Outcome()> run;
};

}  // namespace

int main()
{
    std::uint64_t seed = seed_from_env();
    SuiteOptions opt{seed, kInvarianceTrials, true};
    std::vector<Criterion> criteria = {
        {1, "adjoint family table", kTableSeconds, [] { return check_table(Side::Adjoint, kAdjointRows); }},
        {2, "coadjoint family table", 0, [] { return check_table(Side::Coadjoint, kCoadjointRows); }},
        {3, "worked adjoint example", 0, worked_example},
        {4, "normal form catalog", kCatalogSeconds, catalog},
        {5, "adjoint conjugation invariance", kInvarianceSeconds,
         [&] { return suite_outcome(adjoint_invariance_suite(opt)); }},
        {6, "coadjoint shear and conjugation invariance", kInvarianceSeconds,
         [&] { return suite_outcome(coadjoint_invariance_suite(opt)); }},
        {7, "classify after synthesize round trips", 0, round_trips},
        {8, "adjoint/coadjoint family bijection", 0, bijection},
        {9, "little cotype recursion", 0, little_cotype_recursion},
        {10, "shear span annihilates the stabilizer", 0, shear_annihilator},
        {11, "two-chain determinant", 0,
         [&] { return suite_outcome(two_chain_determinant_suite(seed, kTwoChainConstructions)); }},
        {12, "parameter singleton", 0,
         [] {
             auto s = parameter_check_stats();
             return Outcome{s.failures == 0 && s.checks > 0,
                            std::to_string(s.checks) + " checks, " + std::to_string(s.failures) + " failures"};
         }},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_time = c.limit <= 0 || secs < c.limit;
        bool pass = o.ok && in_time;
        if (!pass) ++failed;
        std::printf("%s %2d %s: %s (%.2f s%s)\n", pass ? "PASS" : "FAIL", c.number, c.name, o.detail.c_str(), secs,
                    c.limit > 0 ? (std::string(", limit ") + std::to_string(static_cast<int>(c.limit)) + " s").c_str() : "");
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed (seed %llu)\n", static_cast<int>(criteria.size()) - failed, criteria.size(),
                static_cast<unsigned long long>(seed));
    return failed == 0 ? 0 : 1;
}
