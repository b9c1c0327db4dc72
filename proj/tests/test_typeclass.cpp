#include "orbit/error.hpp"
#include "orbit/typeclass.hpp"

#include "generators.hpp"

#include <gtest/gtest.h>

using namespace orbit;

namespace {

const std::vector<std::string>& token_grid()
{
    static const std::vector<std::string> g = {
        "D+_0(0)",        "D-_0(0)",         "D_1(0,0)",       "D+_2(0)",         "D-_2(0)",
        "D_3(0,0)",       "D+_4(0)",         "D-_4(0)",        "D_0(RP a=1)",     "D_0(RP a=2)",
        "D_1(RP a=1/4)",  "D_2(RP a=9/4)",   "D+_0(IP b=1)",   "D-_0(IP b=2)",    "D+_1(IP b=1/4)",
        "D-_1(IP b=1)",   "D+_2(IP b=1)",    "D_0(CQ 1,0,1)",  "D_0(CQ 1,1,1)",   "D_1(CQ 1,0,4)",
    };
    return g;
}

Matrix random_group(std::mt19937_64& rng, const Matrix& gram)
{
    std::size_t n = gram.rows();
    Matrix s(n, n);
    for (int t = 0; t < 3; ++t) {
        Vec a = unit_vector(n, rng() % n), b = unit_vector(n, rng() % n);
        Vec ga = gram * a, gb = gram * b;
        s += ExactScalar(gen::rational(rng, 2, 2)) *
             (Matrix::column_vector(a) * Matrix::column_vector(gb).transpose() -
              Matrix::column_vector(b) * Matrix::column_vector(ga).transpose());
    }
    Matrix id = Matrix::identity(n);
    if (det(id + s).is_zero()) return id;
    return (id - s) * inverse(id + s);
}

}  // namespace

TEST(TypeLabel, GrammarRoundTrip)
{
    for (const auto& tok : token_grid()) EXPECT_EQ(parse_type_token(tok).str(), tok);
    EXPECT_EQ(parse_type_token("D_0(CQ 2,0,2)").str(), "D_0(CQ 1,0,1)");
}

TEST(TypeLabel, RejectsInvalidTokens)
{
    for (const char* bad : {"D_2(0,0)", "D+_1(0)", "D_0(0)", "D+_0(RP a=1)", "D_0(IP b=1)", "D_0(RP a=-1)",
                            "D_0(IP b=0)", "E_0(0)", "D-_x(0)", "D_0(CQ 1,0,-1)"}) {
        EXPECT_THROW(parse_type_token(bad), Error) << bad;
    }
}

TEST(TypeMultiset, CanonicalOrder)
{
    TypeMultiset m = parse_type_multiset({"D-_0(0)", "D+_2(0)", "D_0(RP a=1)", "D-_0(IP b=1)", "D+_0(0)", "D-_0(0)"});
    EXPECT_EQ(m.str(), "D-_0(IP b=1) + D_0(RP a=1) + D+_2(0) + D-_0(0) + D-_0(0) + D+_0(0)");
    EXPECT_EQ(m.count(parse_type_token("D-_0(0)")), 2);
    EXPECT_EQ(m.dim(), 10);
    m.remove_one(parse_type_token("D-_0(0)"));
    EXPECT_EQ(m.count(parse_type_token("D-_0(0)")), 1);
    EXPECT_THROW(m.remove_one(parse_type_token("D_1(0,0)")), Error);
}

TEST(TypeMultiset, SplitTokensRespectsBrackets)
{
    auto t = split_tokens("u{D+_0(0)+D-_0(0)} + D_0(CQ 1,0,1) + D-_0(0)");
    ASSERT_EQ(t.size(), 3u);
    EXPECT_EQ(t[0], "u{D+_0(0)+D-_0(0)}");
}

TEST(Classify, SynthesizeRoundTripPerToken)
{
    for (const auto& tok : token_grid()) {
        TypeLabel l = parse_type_token(tok);
        Pair p = synthesize_type(l);
        EXPECT_EQ(p.y.rows(), static_cast<std::size_t>(l.dim()));
        EXPECT_TRUE(in_algebra(p.y, p.gram)) << tok;
        TypeMultiset got = classify_pair(p.y, p.gram);
        EXPECT_EQ(got.str(), tok);
    }
}

TEST(Classify, TableDimensionsAndIndices)
{
    // (dim, index) of the indecomposable types, measured.
    std::vector<std::pair<std::string, std::pair<int, int>>> want = {
        {"D-_4(0)", {5, 3}},       {"D+_4(0)", {5, 2}},      {"D_0(CQ 1,0,1)", {4, 2}}, {"D_1(RP a=1)", {4, 2}},
        {"D-_1(IP b=1)", {4, 2}},  {"D+_1(IP b=1)", {4, 2}}, {"D_1(0,0)", {4, 2}},      {"D+_2(0)", {3, 2}},
        {"D-_2(0)", {3, 1}},       {"D-_0(IP b=1)", {2, 2}}, {"D_0(RP a=1)", {2, 1}},   {"D+_0(IP b=1)", {2, 0}},
        {"D-_0(0)", {1, 1}},       {"D+_0(0)", {1, 0}},
    };
    for (const auto& [tok, di] : want) EXPECT_EQ(label_dim_index(parse_type_token(tok)), di) << tok;
}

TEST(Classify, MultisetRoundTripAndConjugationInvariance)
{
    std::mt19937_64 rng(17);
    const auto& grid = token_grid();
    for (int i = 0; i < 40; ++i) {
        TypeMultiset m;
        int parts = 1 + static_cast<int>(rng() % 3);
        for (int k = 0; k < parts; ++k) m.add(parse_type_token(grid[rng() % 12]));
        Pair p = synthesize_multiset(m);
        EXPECT_EQ(classify_pair(p.y, p.gram), m);
        Matrix g = random_group(rng, p.gram);
        ASSERT_TRUE(in_group(g, p.gram));
        Matrix y2 = g * p.y * inverse(g);
        EXPECT_EQ(classify_pair(y2, p.gram), m) << m.str();
    }
}

TEST(Classify, RejectsNonAlgebraElements)
{
    Matrix gram{{-1, 0}, {0, 1}};
    Matrix y{{1, 0}, {0, 0}};
    try {
        classify_pair(y, gram);
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotInAlgebra);
    }
    EXPECT_THROW(classify_pair(Matrix(2, 2), Matrix{{1, 0}, {0, 0}}), Error);
}

TEST(JordanChevalley, RandomDecompositions)
{
    std::mt19937_64 rng(4);
    const auto& grid = token_grid();
    for (int i = 0; i < 30; ++i) {
        TypeMultiset m;
        m.add(parse_type_token(grid[rng() % grid.size()]));
        m.add(parse_type_token(grid[rng() % grid.size()]));
        Pair p = synthesize_multiset(m);
        JordanChevalley jc = jordan_chevalley(p.y);
        EXPECT_EQ(jc.s + jc.n, p.y);
        EXPECT_EQ(jc.s * jc.n, jc.n * jc.s);
        EXPECT_TRUE(power(jc.n, static_cast<int>(p.y.rows())).is_zero());
        EXPECT_TRUE(eval_poly(squarefree_part(char_poly(jc.s)), jc.s).is_zero());
    }
}

TEST(JordanChevalley, NilpotentBlocks)
{
    Matrix n(5, 5);
    n(0, 1) = ExactScalar(1);
    n(1, 2) = ExactScalar(1);
    n(3, 4) = ExactScalar(1);
    EXPECT_EQ(nilpotent_block_structure(n), (std::map<int, int>{{3, 1}, {2, 1}}));
    EXPECT_THROW(nilpotent_block_structure(Matrix::identity(2)), Error);
}

TEST(InducedForm, OddZeroIsBalanced)
{
    Pair p = synthesize_type(parse_type_token("D_1(0,0)"));
    auto parts = primary_split(p.y, p.gram);
    ASSERT_EQ(parts.size(), 1u);
    JordanChevalley jc = jordan_chevalley(parts[0].y);
    Signature s = induced_form_signs(parts[0], jc, 1);
    EXPECT_EQ(s.negatives, s.positives);
    EXPECT_EQ(s.negatives, 2);
}
