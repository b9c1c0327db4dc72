#include "orbit/error.hpp"
#include "orbit/linalg.hpp"

#include "generators.hpp"

#include <gtest/gtest.h>

using namespace orbit;

namespace {

Matrix fixed4()
{
    return Matrix{{2, Rational(1, 2), 0, -1}, {1, 3, Rational(-2, 3), 0}, {0, 1, 1, 4}, {Rational(5, 7), 0, 2, -1}};
}

}  // namespace

TEST(Linalg, DeterminantOracle)
{
    EXPECT_EQ(det(fixed4()), ExactScalar(Rational(-1901, 42)));
    EXPECT_EQ(det(Matrix::identity(5)), ExactScalar(1));
}

TEST(Linalg, CharPolyOracle)
{
    Poly want({Rational(-1901, 42), Rational(871, 21), Rational(-89, 42), Rational(-5), Rational(1)});
    EXPECT_EQ(char_poly(fixed4()), want);
}

TEST(Linalg, InverseOracleRow)
{
    Matrix inv = inverse(fixed4());
    EXPECT_EQ(inv(0, 0), ExactScalar(Rational(1162, 1901)));
    EXPECT_EQ(inv(0, 1), ExactScalar(Rational(-273, 1901)));
    EXPECT_EQ(inv(0, 2), ExactScalar(Rational(238, 1901)));
    EXPECT_EQ(inv(0, 3), ExactScalar(Rational(-210, 1901)));
}

TEST(Linalg, RankAndNullspace)
{
    Matrix a{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
    EXPECT_EQ(rank(a), 2u);
    Matrix k = nullspace(a);
    ASSERT_EQ(k.cols(), 1u);
    EXPECT_TRUE((a * k).is_zero());
    EXPECT_THROW(inverse(a), Error);
}

TEST(Linalg, SolveReportsInconsistency)
{
    Matrix a{{1, 1}, {2, 2}};
    EXPECT_FALSE(solve(a, Vec{ExactScalar(1), ExactScalar(3)}).has_value());
    auto s = solve(a, Vec{ExactScalar(1), ExactScalar(2)});
    ASSERT_TRUE(s.has_value());
    EXPECT_EQ(a * s->particular, (Vec{ExactScalar(1), ExactScalar(2)}));
    EXPECT_EQ(s->kernel.cols(), 1u);
    EXPECT_THROW(solve_or_throw(a, Vec{ExactScalar(0), ExactScalar(1)}), Error);
}

TEST(Linalg, CharPolyRejectsIrrationalCoefficients)
{
    Matrix m(2, 2);
    m(0, 0) = ExactScalar::sqrt(2);
    EXPECT_THROW(char_poly(m), Error);
}

TEST(Linalg, RandomProperties)
{
    std::mt19937_64 rng(3);
    for (int i = 0; i < 60; ++i) {
        std::size_t n = 2 + rng() % 4;
        Matrix m = gen::rational_matrix(rng, n, n);
        // rank-nullity
        EXPECT_EQ(rank(m) + nullspace(m).cols(), n);
        // Cayley-Hamilton
        EXPECT_TRUE(eval_poly(char_poly(m), m).is_zero());
        // det multiplicative, inverse
        Matrix p = gen::invertible(rng, n);
        EXPECT_EQ(det(p * m), det(p) * det(m));
        EXPECT_EQ(p * inverse(p), Matrix::identity(n));
        // similarity leaves the characteristic polynomial alone
        EXPECT_EQ(char_poly(p * m * inverse(p)), char_poly(m));
    }
}

TEST(Linalg, SurdEntries)
{
    std::mt19937_64 rng(9);
    for (int i = 0; i < 20; ++i) {
        Matrix m(3, 3);
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < 3; ++c) m(r, c) = gen::surd(rng);
        if (det(m).is_zero()) continue;
        EXPECT_EQ(m * inverse(m), Matrix::identity(3));
    }
}

TEST(Linalg, RestrictToInvariantSubspace)
{
    Matrix y{{0, 1, 0}, {0, 0, 0}, {0, 0, 2}};
    Matrix basis = Matrix::from_columns({unit_vector(3, 0), unit_vector(3, 1)}, 3);
    EXPECT_EQ(restrict_to(y, basis), (Matrix{{0, 1}, {0, 0}}));
    Matrix bad = Matrix::from_columns({unit_vector(3, 1)}, 3);
    EXPECT_THROW(restrict_to(y, bad), Error);
}

TEST(Linalg, GeneralizedEigenspace)
{
    Matrix y{{1, 1, 0}, {0, 1, 0}, {0, 0, 2}};
    Poly x = Poly::x();
    EXPECT_EQ(generalized_eigenspace(y, x - Poly::monomial(1, 0)).cols(), 2u);
    EXPECT_THROW(generalized_eigenspace(y, x), Error);
}

TEST(Linalg, Membership)
{
    Matrix k{{0, 0, 1}, {0, -1, 0}, {1, 0, 0}};
    // w (k v)^T - v (k w)^T is in the algebra and kills any vector k-orthogonal to both
    Vec w = unit_vector(3, 1), v = unit_vector(3, 2);
    Matrix s = Matrix::column_vector(w) * Matrix::column_vector(k * v).transpose() -
               Matrix::column_vector(v) * Matrix::column_vector(k * w).transpose();
    EXPECT_TRUE(in_algebra(s, k));
    EXPECT_TRUE(in_stabilizer(s, k, v, MembershipKind::Algebra));
    Matrix id = Matrix::identity(3);
    Matrix cay = (id - s) * inverse(id + s);
    EXPECT_TRUE(in_group(cay, k));
    EXPECT_TRUE(in_stabilizer(cay, k, v, MembershipKind::Group));
    EXPECT_FALSE(in_group(ExactScalar(2) * id, k));
}
