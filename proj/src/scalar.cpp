#include "orbit/scalar.hpp"

#include "orbit/error.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace orbit {

namespace {

constexpr unsigned long kTrialLimit = 1000000;

// Largest cofactor we accept as squarefree without a full factorization: a
// number with no prime factor below kTrialLimit and below this bound has at
// most two prime factors, so it is squarefree unless it is a perfect square.
const Integer& certified_bound()
{
    static const Integer bound("1000000000000000000");
    return bound;
}

Integer pow2(unsigned long k)
{
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
    return r;
}

Integer isqrt(const Integer& n)
{
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_square(const Integer& n) { return mpz_perfect_square_p(n.get_mpz_t()) != 0; }

Integer smallest_prime_factor(const Integer& n)
{
    if (n % 2 == 0) return 2;
    for (unsigned long d = 3; d <= kTrialLimit; d += 2) {
        Integer dd = d;
        if (dd * dd > n) return n;
        if (n % d == 0) return dd;
    }
    if (mpz_probab_prime_p(n.get_mpz_t(), 40) != 0) return n;
    fail(ErrorCode::RadicandTooLarge, "cannot find a prime factor of " + n.get_str());
}

/// Prime factorization with exponents.
std::vector<std::pair<Integer, int>> factor_integer(Integer n)
{
    std::vector<std::pair<Integer, int>> out;
    if (n < 0) n = -n;
    auto take = [&](const Integer& p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) out.emplace_back(p, e);
    };
    take(2);
    for (unsigned long d = 3; d <= kTrialLimit && n > 1; d += 2) {
        Integer dd = d;
        if (dd * dd > n) break;
        take(dd);
    }
    if (n > 1) {
        if (mpz_probab_prime_p(n.get_mpz_t(), 40) != 0) {
            out.emplace_back(n, 1);
        } else if (is_square(n) && mpz_probab_prime_p(isqrt(n).get_mpz_t(), 40) != 0) {
            out.emplace_back(isqrt(n), 2);
        } else {
            fail(ErrorCode::FactorizationIncomplete, "integer too large to factor: " + n.get_str());
        }
    }
    return out;
}

std::vector<Integer> positive_divisors(const Integer& n)
{
    std::vector<Integer> divs{1};
    for (const auto& [p, e] : factor_integer(n)) {
        std::size_t base = divs.size();
        Integer pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

}  // namespace

// ---------------------------------------------------------------------------
// Rational helpers

Rational parse_rational(const std::string& text)
{
    std::string s;
    for (char c : text)
        if (c != ' ') s.push_back(c);
    if (s.empty()) fail(ErrorCode::ParseError, "empty rational");
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        bool neg = s[0] == '-';
        std::string digits = s.substr(neg || s[0] == '+' ? 1 : 0);
        dot = digits.find('.');
        std::string whole = digits.substr(0, dot);
        std::string frac = digits.substr(dot + 1);
        if ((whole + frac).empty() ||
            (whole + frac).find_first_not_of("0123456789") != std::string::npos)
            fail(ErrorCode::ParseError, "bad decimal '" + text + "'");
        Integer num(whole + frac, 10);
        Integer ten_pow;
        mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, frac.size());
        Rational q(num, ten_pow);
        q.canonicalize();
        return neg ? Rational(-q) : q;
    }
    auto valid = [](const std::string& part) {
        std::size_t start = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
        return part.size() > start &&
               part.find_first_not_of("0123456789", start) == std::string::npos;
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid(num) || !valid(den)) fail(ErrorCode::ParseError, "bad rational '" + text + "'");
    if (num[0] == '+') num.erase(0, 1);
    if (den[0] == '+') den.erase(0, 1);
    Integer d(den, 10);
    if (d == 0) fail(ErrorCode::ParseError, "zero denominator in '" + text + "'");
    Rational q(Integer(num, 10), d);
    q.canonicalize();
    return q;
}

std::string rational_str(const Rational& q) { return q.get_str(); }

std::pair<Integer, Integer> square_split(const Integer& n_in)
{
    if (n_in <= 0) fail(ErrorCode::RadicandTooLarge, "square_split expects a positive integer");
    Integer n = n_in;
    Integer s = 1, r = 1;
    auto take = [&](const Integer& p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) s *= p;
        if (e % 2) r *= p;
    };
    take(2);
    unsigned long d = 3;
    for (; d <= kTrialLimit && n > 1; d += 2) {
        Integer dd = d;
        if (dd * dd > n) break;
        take(dd);
    }
    if (n > 1) {
        Integer dd = d;
        if (dd * dd > n) {
            r *= n;  // n is prime
        } else if (is_square(n)) {
            s *= isqrt(n);
        } else if (n < certified_bound()) {
            r *= n;
        } else {
            fail(ErrorCode::RadicandTooLarge, "cannot certify squarefree part of " + n_in.get_str());
        }
    }
    return {s, r};
}

// ---------------------------------------------------------------------------
// ExactScalar

ExactScalar::ExactScalar(long v)
{
    if (v != 0) terms_.push_back({Integer(1), Rational(v)});
}

ExactScalar::ExactScalar(const Rational& q)
{
    if (q == 0) return;
    terms_.push_back({Integer(1), q});
    terms_.back().coeff.canonicalize();
}

ExactScalar ExactScalar::sqrt(const Rational& q)
{
    if (q < 0) fail(ErrorCode::NotRational, "sqrt of negative rational " + q.get_str());
    if (q == 0) return {};
    Integer prod = q.get_num() * q.get_den();
    auto [s, r] = square_split(prod);
    ExactScalar out;
    out.terms_.push_back({r, Rational(s, q.get_den())});
    out.terms_.back().coeff.canonicalize();
    return out;
}

ExactScalar ExactScalar::from_terms(std::vector<Term> terms)
{
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.radicand < b.radicand; });
    ExactScalar out;
    for (auto& t : terms) {
        if (!out.terms_.empty() && out.terms_.back().radicand == t.radicand) {
            out.terms_.back().coeff += t.coeff;
        } else {
            out.terms_.push_back(std::move(t));
        }
    }
    out.terms_.erase(std::remove_if(out.terms_.begin(), out.terms_.end(),
                                    [](const Term& t) { return t.coeff == 0; }),
                     out.terms_.end());
    return out;
}

bool ExactScalar::is_rational() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_[0].radicand == 1);
}

Rational ExactScalar::rational() const
{
    if (!is_rational()) fail(ErrorCode::NotRational, "value " + str() + " is irrational");
    return terms_.empty() ? Rational(0) : terms_[0].coeff;
}

void ExactScalar::add_scaled(const ExactScalar& o, bool negate)
{
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() ||
            (i < terms_.size() && terms_[i].radicand < o.terms_[j].radicand)) {
            out.push_back(std::move(terms_[i++]));
        } else if (i == terms_.size() || o.terms_[j].radicand < terms_[i].radicand) {
            out.push_back(o.terms_[j]);
            if (negate) out.back().coeff = -out.back().coeff;
            ++j;
        } else {
            Rational c = negate ? Rational(terms_[i].coeff - o.terms_[j].coeff)
                                : Rational(terms_[i].coeff + o.terms_[j].coeff);
            if (c != 0) out.push_back({std::move(terms_[i].radicand), std::move(c)});
            ++i;
            ++j;
        }
    }
    terms_ = std::move(out);
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o)
{
    if (o.terms_.empty()) return *this;
    if (terms_.size() == 1 && o.terms_.size() == 1 && terms_[0].radicand == o.terms_[0].radicand) {
        terms_[0].coeff += o.terms_[0].coeff;
        if (terms_[0].coeff == 0) terms_.clear();
        return *this;
    }
    add_scaled(o, false);
    return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o)
{
    if (o.terms_.empty()) return *this;
    if (terms_.size() == 1 && o.terms_.size() == 1 && terms_[0].radicand == o.terms_[0].radicand) {
        terms_[0].coeff -= o.terms_[0].coeff;
        if (terms_[0].coeff == 0) terms_.clear();
        return *this;
    }
    add_scaled(o, true);
    return *this;
}

ExactScalar ExactScalar::operator-() const
{
    ExactScalar out = *this;
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
}

ExactScalar operator*(const ExactScalar& a, const ExactScalar& b)
{
    ExactScalar out;
    if (a.terms_.empty() || b.terms_.empty()) return out;
    if (a.terms_.size() == 1 && b.terms_.size() == 1) {
        const auto& x = a.terms_[0];
        const auto& y = b.terms_[0];
        if (x.radicand == 1) {
            out.terms_.push_back({y.radicand, x.coeff * y.coeff});
            return out;
        }
        if (y.radicand == 1) {
            out.terms_.push_back({x.radicand, x.coeff * y.coeff});
            return out;
        }
    }
    std::vector<ExactScalar::Term> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    Integer g;
    for (const auto& x : a.terms_) {
        for (const auto& y : b.terms_) {
            if (x.radicand == 1 || y.radicand == 1) {
                prod.push_back({x.radicand * y.radicand, x.coeff * y.coeff});
                continue;
            }
            mpz_gcd(g.get_mpz_t(), x.radicand.get_mpz_t(), y.radicand.get_mpz_t());
            Integer r = (x.radicand / g) * (y.radicand / g);
            prod.push_back({r, x.coeff * y.coeff * Rational(g)});
        }
    }
    return ExactScalar::from_terms(std::move(prod));
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& o)
{
    *this = *this * o;
    return *this;
}

ExactScalar ExactScalar::inverse() const
{
    if (terms_.empty()) fail(ErrorCode::DivisionByZero, "inverse of zero");
    if (terms_.size() == 1) {
        const auto& t = terms_[0];
        // (c sqrt r)^-1 = sqrt r / (c r)
        ExactScalar out;
        out.terms_.push_back({t.radicand, Rational(1) / (t.coeff * Rational(t.radicand))});
        return out;
    }
    Integer p;
    for (const auto& t : terms_) {
        if (t.radicand != 1) {
            p = smallest_prime_factor(t.radicand);
            break;
        }
    }
    // this = x + y sqrt(p); multiply by the conjugate x - y sqrt(p).
    ExactScalar conj = *this;
    for (auto& t : conj.terms_)
        if (t.radicand % p == 0) t.coeff = -t.coeff;
    ExactScalar norm = *this * conj;
    return conj * norm.inverse();
}

ExactScalar operator/(const ExactScalar& a, const ExactScalar& b)
{
    if (b.is_rational()) {
        Rational q = b.rational();
        if (q == 0) fail(ErrorCode::DivisionByZero, "division by zero");
        ExactScalar out = a;
        for (auto& t : out.terms_) t.coeff /= q;
        return out;
    }
    return a * b.inverse();
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& o)
{
    *this = *this / o;
    return *this;
}

bool operator==(const ExactScalar& a, const ExactScalar& b)
{
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        if (a.terms_[i].radicand != b.terms_[i].radicand || a.terms_[i].coeff != b.terms_[i].coeff)
            return false;
    }
    return true;
}

int ExactScalar::sign() const
{
    if (terms_.empty()) return 0;
    if (is_rational()) return sgn(terms_[0].coeff);
    for (unsigned long k = 16;; k *= 2) {
        Integer scale = pow2(k);
        Integer scale_sq = scale * scale;
        Rational lo = 0, hi = 0;
        for (const auto& t : terms_) {
            if (t.radicand == 1) {
                lo += t.coeff;
                hi += t.coeff;
                continue;
            }
            Integer f = isqrt(t.radicand * scale_sq);
            Rational a(f, scale), b(f + 1, scale);
            a.canonicalize();
            b.canonicalize();
            if (t.coeff > 0) {
                lo += t.coeff * a;
                hi += t.coeff * b;
            } else {
                lo += t.coeff * b;
                hi += t.coeff * a;
            }
        }
        if (lo > 0) return 1;
        if (hi < 0) return -1;
    }
}

double ExactScalar::to_double() const
{
    double v = 0;
    for (const auto& t : terms_) v += t.coeff.get_d() * std::sqrt(t.radicand.get_d());
    return v;
}

std::string ExactScalar::str() const
{
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const auto& t = terms_[i];
        Rational c = t.coeff;
        bool neg = c < 0;
        if (neg) c = -c;
        if (i == 0) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        if (t.radicand == 1) {
            out += c.get_str();
        } else {
            if (c != 1) out += c.get_str() + "*";
            out += "sqrt(" + t.radicand.get_str() + ")";
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const Rational& c, int degree)
{
    std::vector<Rational> v(static_cast<std::size_t>(degree) + 1, Rational(0));
    v.back() = c;
    return Poly(std::move(v));
}

void Poly::trim()
{
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Poly::coeff(int i) const
{
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<std::size_t>(i)];
}

Rational Poly::leading() const { return c_.empty() ? Rational(0) : c_.back(); }

Rational Poly::eval(const Rational& x) const
{
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::derivative() const
{
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
    return Poly(std::move(d));
}

Poly Poly::monic() const
{
    if (c_.empty()) return {};
    Rational lc = c_.back();
    std::vector<Rational> v = c_;
    for (auto& x : v) x /= lc;
    return Poly(std::move(v));
}

Poly Poly::compose_square() const
{
    if (c_.empty()) return {};
    std::vector<Rational> v(2 * c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[2 * i] = c_[i];
    return Poly(std::move(v));
}

Poly Poly::compress_square() const
{
    std::vector<Rational> v;
    for (std::size_t i = 0; i < c_.size(); i += 2) v.push_back(c_[i]);
    return Poly(std::move(v));
}

Poly Poly::operator-() const
{
    std::vector<Rational> v = c_;
    for (auto& x : v) x = -x;
    return Poly(std::move(v));
}

Poly operator+(const Poly& a, const Poly& b)
{
    std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b)
{
    if (a.c_.empty() || b.c_.empty()) return {};
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(v));
}

std::string Poly::str(char var) const
{
    if (c_.empty()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        Rational c = c_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        bool neg = c < 0;
        if (neg) c = -c;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        if (i == 0 || c != 1) out += c.get_str();
        if (i > 0) {
            if (c != 1) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b)
{
    if (b.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
    std::vector<Rational> rem = a.coeffs();
    int db = b.degree();
    int da = a.degree();
    if (da < db) return {Poly(), a};
    std::vector<Rational> quot(static_cast<std::size_t>(da - db + 1), Rational(0));
    Rational lb = b.leading();
    for (int i = da; i >= db; --i) {
        Rational q = rem[static_cast<std::size_t>(i)] / lb;
        quot[static_cast<std::size_t>(i - db)] = q;
        if (q == 0) continue;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(i - db + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly poly_gcd(const Poly& a, const Poly& b)
{
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

Poly poly_pow(const Poly& p, int e)
{
    Poly out({Rational(1)});
    for (int i = 0; i < e; ++i) out = out * p;
    return out;
}

Poly squarefree_part(const Poly& p)
{
    if (p.degree() <= 0) return p.monic();
    Poly g = poly_gcd(p, p.derivative());
    return divmod(p, g).first.monic();
}

namespace {

/// Primitive integer polynomial with positive leading coefficient.
std::vector<Integer> primitive_integer(const Poly& p)
{
    Integer l = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<Integer> v;
    Integer g = 0;
    for (const auto& c : p.coeffs()) {
        Rational s = c * Rational(l);
        v.push_back(s.get_num());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.back().get_mpz_t());
    }
    if (g != 0)
        for (auto& x : v) x /= g;
    if (!v.empty() && v.back() < 0)
        for (auto& x : v) x = -x;
    return v;
}

Integer eval_int(const std::vector<Integer>& p, long t)
{
    Integer acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + *it;
    return acc;
}

bool divides(const Poly& f, const Poly& p) { return divmod(p, f).second.is_zero(); }

/// Search for a monic-up-to-scaling quadratic factor of p (no rational roots).
bool find_quadratic_factor(const Poly& p, Poly& out)
{
    std::vector<Integer> q = primitive_integer(p);
    Integer v0 = q[0];
    Integer v1 = eval_int(q, 1);
    Integer vm = eval_int(q, -1);
    Integer v2 = eval_int(q, 2);
    if (v0 == 0 || v1 == 0 || vm == 0) return false;
    auto d0s = positive_divisors(abs(v0));
    auto d1s = positive_divisors(abs(v1));
    auto dms = positive_divisors(abs(vm));
    Integer lead = q.back();
    for (const auto& d0 : d0s) {
        for (const auto& a1 : d1s) {
            for (int s1 : {1, -1}) {
                Integer d1 = a1 * s1;
                for (const auto& am : dms) {
                    for (int sm : {1, -1}) {
                        Integer dm = am * sm;
                        Integer sum = d1 + dm;
                        Integer diff = d1 - dm;
                        if (sum % 2 != 0 || diff % 2 != 0) continue;
                        Integer c2 = sum / 2 - d0;
                        Integer c1 = diff / 2;
                        if (c2 == 0) continue;
                        if (lead % c2 != 0) continue;
                        Integer f2 = 4 * c2 + 2 * c1 + d0;
                        if (f2 == 0 || v2 % f2 != 0) continue;
                        Poly cand({Rational(d0), Rational(c1), Rational(c2)});
                        if (divides(cand, p)) {
                            out = cand.monic();
                            return true;
                        }
                    }
                }
            }
        }
    }
    return false;
}

}  // namespace

std::vector<FactorPower> factor_rational(const Poly& p_in)
{
    if (p_in.is_zero()) fail(ErrorCode::FactorizationIncomplete, "cannot factor the zero polynomial");
    std::map<std::vector<Rational>, int> found;
    std::vector<Poly> order;
    auto record = [&](const Poly& f) {
        auto [it, inserted] = found.emplace(f.coeffs(), 0);
        if (inserted) order.push_back(f);
        ++it->second;
    };

    Poly p = p_in.monic();
    while (p.degree() >= 1 && p.coeff(0) == 0) {
        record(Poly::x());
        p = divmod(p, Poly::x()).first;
    }
    if (p.degree() >= 1) {
        std::vector<Integer> q = primitive_integer(p);
        auto nums = positive_divisors(abs(q.front()));
        auto dens = positive_divisors(abs(q.back()));
        for (const auto& n : nums) {
            for (const auto& d : dens) {
                for (int s : {1, -1}) {
                    Rational r(n * s, d);
                    r.canonicalize();
                    Poly lin({Rational(-r), Rational(1)});
                    while (p.degree() >= 1 && p.eval(r) == 0) {
                        record(lin);
                        p = divmod(p, lin).first;
                    }
                }
            }
        }
    }
    while (p.degree() >= 4) {
        Poly quad;
        if (!find_quadratic_factor(p, quad)) break;
        while (p.degree() >= 2 && divides(quad, p)) {
            record(quad);
            p = divmod(p, quad).first;
        }
    }
    if (p.degree() >= 6)
        fail(ErrorCode::FactorizationIncomplete, "degree " + std::to_string(p.degree()) +
                                                     " factor resists quadratic splitting: " + p.str());
    if (p.degree() >= 1) record(p.monic());

    std::vector<FactorPower> out;
    for (const auto& f : order) out.push_back({f, found[f.coeffs()]});
    return out;
}

EvenFactorization poly_even_factorization(const Poly& p)
{
    if (p.is_zero()) fail(ErrorCode::NotEvenOdd, "zero polynomial");
    EvenFactorization out;
    int k = 0;
    while (p.coeff(k) == 0) ++k;
    std::vector<Rational> rest(p.coeffs().begin() + k, p.coeffs().end());
    for (std::size_t i = 1; i < rest.size(); i += 2)
        if (rest[i] != 0) fail(ErrorCode::NotEvenOdd, p.str() + " is not of the form x^k q(x^2)");
    Poly q(rest);
    out.zero_multiplicity = k;
    out.leading = q.leading();
    Poly g = q.compress_square();
    if (g.degree() >= 1) {
        for (auto& f : factor_rational(g)) out.factors.push_back({f.factor.compose_square(), f.multiplicity});
    }
    return out;
}

}  // namespace orbit
