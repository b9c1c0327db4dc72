#include "orbit/error.hpp"
#include "orbit/formspace.hpp"

#include "generators.hpp"

#include <gtest/gtest.h>

using namespace orbit;

namespace {

Matrix diag(std::initializer_list<long> d)
{
    Matrix m(d.size(), d.size());
    std::size_t i = 0;
    for (long x : d) {
        m(i, i) = ExactScalar(x);
        ++i;
    }
    return m;
}

Matrix congruent(const Matrix& g, const Matrix& p) { return p.transpose() * g * p; }

}  // namespace

TEST(Formspace, InertiaAndIndex)
{
    Inertia in = inertia(diag({1, -1, 0, -3}));
    EXPECT_EQ(in.negatives, 2);
    EXPECT_EQ(in.positives, 1);
    EXPECT_EQ(in.zeros, 1);
    EXPECT_THROW(signature_index(diag({1, 0})), Error);
    Signature s = signature_index(standard_form(lorentz_block(3, 1)));
    EXPECT_EQ(s.negatives, 4);
    EXPECT_EQ(s.positives, 2);
    // zero diagonal needs a hyperbolic pivot
    EXPECT_EQ(signature_index(Matrix{{0, 1}, {1, 0}}), (Signature{1, 1}));
}

TEST(Formspace, RequireSymmetric)
{
    EXPECT_THROW(require_symmetric(Matrix{{0, 1}, {0, 0}}), Error);
    EXPECT_NO_THROW(require_symmetric(Matrix{{0, 1}, {1, 0}}));
}

TEST(Formspace, StandardFormDeterminant)
{
    // [[0,0,1],[0,G,0],[1,0,0]] with G = diag(-1,-1,-1,1): the corner swap
    // contributes -1 and det G = -1.
    EXPECT_EQ(det(standard_form(lorentz_block(3, 1))), ExactScalar(1));
}

TEST(Formspace, SylvesterLawOnRandomCongruences)
{
    std::mt19937_64 rng(21);
    for (int i = 0; i < 60; ++i) {
        std::size_t n = 2 + rng() % 5;
        Matrix g(n, n);
        for (std::size_t k = 0; k < n; ++k) g(k, k) = ExactScalar(gen::rational(rng));
        Matrix c = congruent(g, gen::invertible(rng, n));
        Inertia a = inertia(g), b = inertia(c);
        EXPECT_EQ(a.negatives, b.negatives);
        EXPECT_EQ(a.positives, b.positives);
        EXPECT_EQ(a.zeros, b.zeros);
        DiagonalBasis d = diagonalize(c);
        Matrix dd = congruent(c, d.basis);
        for (std::size_t r = 0; r < dd.rows(); ++r)
            for (std::size_t s = 0; s < dd.cols(); ++s)
                EXPECT_EQ(dd(r, s), r == s ? d.diag[r] : ExactScalar());
        EXPECT_EQ(d.radical, a.zeros);
    }
}

TEST(Formspace, Orthocomplement)
{
    Matrix g = diag({-1, -1, 1});
    Matrix sub = Matrix::from_columns({unit_vector(3, 0)}, 3);
    Matrix oc = orthocomplement(g, sub);
    EXPECT_EQ(oc.cols(), 2u);
    EXPECT_TRUE((sub.transpose() * g * oc).is_zero());
    Matrix null{{0, 1}, {1, 0}};
    EXPECT_THROW(orthocomplement(null, Matrix::from_columns({unit_vector(2, 0)}, 2)), Error);
}

TEST(Formspace, StandardizeRandomIsotropic)
{
    std::mt19937_64 rng(8);
    Matrix k = standard_form(lorentz_block(3, 1));
    for (int i = 0; i < 40; ++i) {
        Matrix p = gen::invertible(rng, 6);
        Matrix g = congruent(k, p);
        // inverse(p) e_last is isotropic for g
        Vec v = inverse(p) * unit_vector(6, 5);
        Matrix h = hyperbolic_split(g, v);
        EXPECT_TRUE(h.is_rational());
        Matrix hk = congruent(g, h);
        EXPECT_EQ(h.column(5), v);
        EXPECT_EQ(hk(0, 0), ExactScalar());
        EXPECT_EQ(hk(0, 5), ExactScalar(1));
        for (std::size_t j = 1; j < 5; ++j) {
            EXPECT_EQ(hk(0, j), ExactScalar());
            EXPECT_EQ(hk(5, j), ExactScalar());
        }
        Standardized s = standardize_with_isotropic(g, v);
        EXPECT_EQ(congruent(g, s.basis), s.k_std);
        EXPECT_EQ(s.k_std, standard_form(s.g));
        EXPECT_EQ(s.g, lorentz_block(3, 1));
        EXPECT_EQ(s.basis.column(5), v);
    }
}

TEST(Formspace, StandardizeRejectsAnisotropic)
{
    Matrix k = standard_form(lorentz_block(3, 1));
    EXPECT_THROW(standardize_with_isotropic(k, unit_vector(6, 1)), Error);
    EXPECT_THROW(standardize_with_isotropic(k, Vec(6)), Error);
}
