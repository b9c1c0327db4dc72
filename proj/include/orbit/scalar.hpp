#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace orbit {

using Rational = mpq_class;
using Integer = mpz_class;

Rational parse_rational(const std::string& text);
std::string rational_str(const Rational& q);

/// Element of Q(sqrt r1, ..., sqrt rk). Terms are kept sorted by squarefree
/// radicand; radicand 1 holds the rational part. No zero coefficients.
class ExactScalar {
public:
    struct Term {
        Integer radicand;
        Rational coeff;
    };

    ExactScalar() = default;
    ExactScalar(long v);
    ExactScalar(const Rational& q);

    /// sqrt(q) for q >= 0, canonicalized as (1/den) * sqrt(num * den).
    static ExactScalar sqrt(const Rational& q);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;
    /// Throws NotRational unless is_rational().
    Rational rational() const;
    int sign() const;
    ExactScalar inverse() const;
    double to_double() const;
    std::string str() const;

    ExactScalar operator-() const;
    ExactScalar& operator+=(const ExactScalar& o);
    ExactScalar& operator-=(const ExactScalar& o);
    ExactScalar& operator*=(const ExactScalar& o);
    ExactScalar& operator/=(const ExactScalar& o);

    friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
    friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
    friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b);
    friend ExactScalar operator/(const ExactScalar& a, const ExactScalar& b);
    friend bool operator==(const ExactScalar& a, const ExactScalar& b);
    friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return !(a == b); }

    /// Build from raw terms; radicands must already be squarefree.
    static ExactScalar from_terms(std::vector<Term> terms);

private:
    void add_scaled(const ExactScalar& o, bool negate);
    std::vector<Term> terms_;
};

/// Squarefree decomposition n = s^2 * r. Returns (s, r). Throws
/// RadicandTooLarge when the cofactor left after trial division cannot be
/// certified.
std::pair<Integer, Integer> square_split(const Integer& n);

/// Dense polynomial with rational coefficients, lowest degree first.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);
    static Poly monomial(const Rational& c, int degree);
    static Poly x() { return monomial(1, 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int i) const;
    Rational leading() const;

    Rational eval(const Rational& x) const;
    Poly derivative() const;
    Poly monic() const;
    /// g(x) -> g(x^2)
    Poly compose_square() const;
    /// Valid when only even powers are present: g(x^2) -> g(y).
    Poly compress_square() const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    std::string str(char var = 'x') const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Quotient and remainder.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly poly_gcd(const Poly& a, const Poly& b);
Poly poly_pow(const Poly& p, int e);
/// p / gcd(p, p'): product of the distinct irreducible factors.
Poly squarefree_part(const Poly& p);

struct FactorPower {
    Poly factor;
    int multiplicity;
};

/// Irreducible factors over Q (monic) with multiplicities. Complete up to
/// degree 5; higher degree leftovers without quadratic factors throw
/// FactorizationIncomplete.
std::vector<FactorPower> factor_rational(const Poly& p);

struct EvenFactorization {
    int zero_multiplicity = 0;
    Rational leading = 1;
    /// Each factor is g(x^2) for a monic g irreducible over Q.
    std::vector<FactorPower> factors;
};

/// p = leading * x^k * prod f_i^{m_i}. Throws NotEvenOdd if p(x) != +-p(-x).
EvenFactorization poly_even_factorization(const Poly& p);

}  // namespace orbit
