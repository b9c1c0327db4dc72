#pragma once

#include "orbit/matrix.hpp"

#include <random>

namespace gen {

using orbit::ExactScalar;
using orbit::Matrix;
using orbit::Rational;

inline Rational rational(std::mt19937_64& rng, int span = 5, int max_den = 4)
{
    long num = static_cast<long>(rng() % (2 * span + 1)) - span;
    long den = 1 + static_cast<long>(rng() % max_den);
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational nonzero_rational(std::mt19937_64& rng)
{
    Rational q;
    do q = rational(rng);
    while (q == 0);
    return q;
}

/// a + b sqrt 2 + c sqrt 3 + d sqrt 6 with small rational coefficients.
inline ExactScalar surd(std::mt19937_64& rng)
{
    ExactScalar s(rational(rng));
    static const long rads[] = {2, 3, 6};
    for (long r : rads)
        if (rng() % 2) s += ExactScalar(rational(rng)) * ExactScalar::sqrt(r);
    return s;
}

inline Matrix rational_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c)
{
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rational(rng);
    return m;
}

/// Unit lower times unit upper: always invertible.
inline Matrix invertible(std::mt19937_64& rng, std::size_t n)
{
    Matrix l = Matrix::identity(n), u = Matrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) {
            l(i, j) = rational(rng, 2, 2);
            u(j, i) = rational(rng, 2, 2);
        }
    return l * u;
}

}  // namespace gen
