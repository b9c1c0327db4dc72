#include "orbit/adjoint.hpp"

#include "orbit/error.hpp"

#include <atomic>
#include <random>

namespace orbit {

namespace {

std::atomic<std::uint64_t> g_param_checks{0};
std::atomic<std::uint64_t> g_param_failures{0};

std::string sign_char(int s) { return s < 0 ? "-" : "+"; }

}  // namespace

// ---------------------------------------------------------------------------
// Labels

DistinguishedLabel DistinguishedLabel::one(int h, int sign, const Rational& mu2)
{
    if (h <= 0 || h % 2) fail(ErrorCode::ParseError, "nonzero parameter needs positive even height");
    if (sign != 1 && sign != -1) fail(ErrorCode::ParseError, "sign must be +-1");
    if (mu2 <= 0) fail(ErrorCode::ParseError, "mu2 must be positive");
    return {Case::One, h, sign, mu2};
}

DistinguishedLabel DistinguishedLabel::two(int h)
{
    if (h <= 0 || h % 2 == 0) fail(ErrorCode::ParseError, "two-chain type with zero parameter at even height is u{D+_h(0)+D-_h(0)}");
    return {Case::Two, h, 0, 0};
}

DistinguishedLabel DistinguishedLabel::three(int h)
{
    if (h < 0 || h % 2) fail(ErrorCode::ParseError, "u{D+_h(0)+D-_h(0)} needs even height");
    return {Case::Three, h, 0, 0};
}

Rational DistinguishedLabel::parameter() const
{
    return kind == Case::One ? Rational(sign * mu2) : Rational(0);
}

TypeMultiset DistinguishedLabel::underlying() const
{
    switch (kind) {
    case Case::One: return {TypeLabel::zero(height, sign)};
    case Case::Two: return {TypeLabel::zero_pair(height)};
    case Case::Three: return {TypeLabel::zero(height, 1), TypeLabel::zero(height, -1)};
    }
    return {};
}

std::string DistinguishedLabel::str() const
{
    std::string h = std::to_string(height);
    switch (kind) {
    case Case::One: return "u{D" + sign_char(sign) + "_" + h + "(0), mu2=" + rational_str(mu2) + "}";
    case Case::Two: return "u{D_" + h + "(0,0)}";
    case Case::Three: return "u{D+_" + h + "(0)+D-_" + h + "(0)}";
    }
    return {};
}

bool operator==(const DistinguishedLabel& a, const DistinguishedLabel& b)
{
    return a.kind == b.kind && a.height == b.height && a.sign == b.sign && a.mu2 == b.mu2;
}

std::string AdjointOrbitLabel::str() const
{
    std::string s = distinguished.str();
    if (!rest.empty()) s += " + " + rest.str();
    return s;
}

namespace {

int parse_height(const std::string& s)
{
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        fail(ErrorCode::ParseError, "bad height '" + s + "'");
    return std::stoi(s);
}

DistinguishedLabel parse_distinguished(const std::string& tok)
{
    if (tok.size() < 3 || tok.rfind("u{", 0) != 0 || tok.back() != '}')
        fail(ErrorCode::ParseError, "distinguished part must look like u{...}: '" + tok + "'");
    std::string in = tok.substr(2, tok.size() - 3);
    auto comma = in.find(", mu2=");
    if (comma != std::string::npos) {
        TypeLabel t = parse_type_token(in.substr(0, comma));
        if (t.cls.kind != EigenKind::Zero || t.height % 2)
            fail(ErrorCode::ParseError, "moduli only attach to D+-_h(0) with h even");
        return DistinguishedLabel::one(t.height, t.sign, parse_rational(in.substr(comma + 6)));
    }
    auto plus = in.find('+', 2);
    if (in.rfind("D+_", 0) == 0 && plus != std::string::npos) {
        TypeLabel a = parse_type_token(in.substr(0, plus));
        TypeLabel b = parse_type_token(in.substr(plus + 1));
        if (!(a == TypeLabel::zero(a.height, 1)) || !(b == TypeLabel::zero(a.height, -1)))
            fail(ErrorCode::ParseError, "expected u{D+_h(0)+D-_h(0)}: '" + tok + "'");
        return DistinguishedLabel::three(a.height);
    }
    if (in.rfind("D_", 0) == 0 && in.size() > 7 && in.substr(in.size() - 5) == "(0,0)")
        return DistinguishedLabel::two(parse_height(in.substr(2, in.size() - 7)));
    fail(ErrorCode::ParseError, "unknown distinguished part '" + tok + "'");
}

}  // namespace

AdjointOrbitLabel AdjointOrbitLabel::parse(const std::string& s)
{
    std::vector<std::string> toks = split_tokens(s);
    if (toks.empty()) fail(ErrorCode::ParseError, "empty label");
    AdjointOrbitLabel out;
    out.distinguished = parse_distinguished(toks[0]);
    out.rest = parse_type_multiset({toks.begin() + 1, toks.end()});
    return out;
}

std::pair<int, int> AdjointOrbitLabel::dim_index() const
{
    auto [d, i] = multiset_dim_index(rest);
    auto [dd, di] = multiset_dim_index(distinguished.underlying());
    return {d + dd, i + di};
}

// ---------------------------------------------------------------------------
// Classification

void validate_triple(const AdjointTriple& t)
{
    require_symmetric(t.gram);
    std::size_t n = t.gram.rows();
    if (t.y.rows() != n || t.y.cols() != n || t.v0.size() != n)
        fail(ErrorCode::ShapeMismatch, "triple shapes disagree");
    signature_index(t.gram);
    if (vec_is_zero(t.v0)) fail(ErrorCode::ZeroVector, "distinguished vector is zero");
    if (!bilinear(t.gram, t.v0, t.v0).is_zero()) fail(ErrorCode::NotIsotropic, "distinguished vector is not isotropic");
    if (!vec_is_zero(t.y * t.v0)) fail(ErrorCode::NotAnnihilated, "Y does not annihilate the distinguished vector");
    if (!in_algebra(t.y, t.gram)) fail(ErrorCode::NotInAlgebra, "Y is not skew for the form");
}

int distinguished_height(const AdjointTriple& t)
{
    std::size_t n = t.y.rows();
    Matrix p = t.y;
    for (std::size_t k = 1; k <= n; ++k) {
        if (!solve(p, t.v0)) return static_cast<int>(k) - 1;
        p = p * t.y;
    }
    return static_cast<int>(n);
}

Rational parameter_of(const AdjointTriple& t, int h)
{
    Solution s = solve_or_throw(power(t.y, h), t.v0);
    ExactScalar p = bilinear(t.gram, s.particular, t.v0);
    Vec gv = t.gram * t.v0;
    for (std::size_t j = 0; j < s.kernel.cols(); ++j) {
        Vec u = s.kernel.column(j);
        ExactScalar d;
        for (std::size_t k = 0; k < u.size(); ++k)
            if (!u[k].is_zero() && !gv[k].is_zero()) d += u[k] * gv[k];
        g_param_checks.fetch_add(1, std::memory_order_relaxed);
        if (!d.is_zero()) {
            g_param_failures.fetch_add(1, std::memory_order_relaxed);
            fail(ErrorCode::ParameterNotSingleton, "gamma(u, v0) = " + d.str() + " for a kernel vector u");
        }
    }
    return p.rational();
}

ParameterCheckStats parameter_check_stats()
{
    return {g_param_checks.load(), g_param_failures.load()};
}

AdjointOrbitLabel classify_adjoint(const AdjointTriple& t)
{
    validate_triple(t);
    int h = distinguished_height(t);
    Rational p = parameter_of(t, h);
    AdjointOrbitLabel out;
    if (p != 0) {
        if (h % 2) fail(ErrorCode::OddHeightNonzeroParameter, "nonzero parameter at odd height " + std::to_string(h));
        out.distinguished = DistinguishedLabel::one(h, p > 0 ? 1 : -1, p > 0 ? p : Rational(-p));
    } else {
        out.distinguished = h % 2 ? DistinguishedLabel::two(h) : DistinguishedLabel::three(h);
    }
    out.rest = classify_pair(t.y, t.gram);
    TypeMultiset under = out.distinguished.underlying();
    for (const auto& u : under.items()) out.rest.remove_one(u);
    return out;
}

DistinguishedSplit split_distinguished(const AdjointTriple& t)
{
    validate_triple(t);
    int h = distinguished_height(t);
    Rational p = parameter_of(t, h);
    Vec w = solve_or_throw(power(t.y, h), t.v0).particular;
    std::vector<Vec> cols;
    auto add_chain = [&](Vec x) {
        for (int i = 0; i <= h; ++i) {
            cols.push_back(x);
            x = t.y * x;
        }
    };
    add_chain(w);
    if (p == 0) {
        Matrix ker = nullspace(power(t.y, h + 1));
        std::size_t pick = ker.cols();
        for (std::size_t j = 0; j < ker.cols() && pick == ker.cols(); ++j)
            if (!bilinear(t.gram, ker.column(j), t.v0).is_zero()) pick = j;
        if (pick == ker.cols())
            fail(ErrorCode::InternalRadicalMismatch, "no partner vector pairs with v0 inside ker Y^(h+1)");
        add_chain(ker.column(pick));
    }
    DistinguishedSplit s;
    s.span = Matrix::from_columns(cols, t.gram.rows());
    s.span_gram = s.span.transpose() * t.gram * s.span;
    s.det_gram = det(s.span_gram);
    std::size_t n = cols.size();
    s.antidiagonal_product = 1;
    for (std::size_t k = 0; k < n; ++k) s.antidiagonal_product *= s.span_gram(k, n - 1 - k);
    s.complement = orthocomplement(t.gram, s.span);
    return s;
}

// ---------------------------------------------------------------------------
// Synthesis

namespace {

/// Two chains w_i, z_j with gamma(w_i, z_j) = (-1)^i delta_{i+j,h}; v0 = w_h.
Pair two_chain_block(int h)
{
    std::size_t c = static_cast<std::size_t>(h) + 1;
    Matrix y(2 * c, 2 * c), g(2 * c, 2 * c);
    for (std::size_t i = 0; i + 1 < c; ++i) {
        y(i + 1, i) = 1;
        y(c + i + 1, c + i) = 1;
    }
    for (std::size_t i = 0; i < c; ++i) {
        long v = i % 2 ? -1 : 1;
        g(i, c + c - 1 - i) = v;
        g(c + c - 1 - i, i) = v;
    }
    return {y, g};
}

}  // namespace

AdjointTriple synthesize_adjoint_blocks(const AdjointOrbitLabel& label)
{
    const DistinguishedLabel& d = label.distinguished;
    std::size_t h = static_cast<std::size_t>(d.height);
    Pair head;
    if (d.kind == DistinguishedLabel::Case::One) {
        // chain with gamma(Y^i w, Y^j w) = (-1)^i eps mu^2 delta_{i+j,h}, v0 = Y^h w
        head.y = Matrix(h + 1, h + 1);
        head.gram = Matrix(h + 1, h + 1);
        for (std::size_t i = 0; i < h; ++i) head.y(i + 1, i) = 1;
        for (std::size_t i = 0; i <= h; ++i)
            head.gram(i, h - i) = ExactScalar(Rational((i % 2 ? -1 : 1) * d.sign * d.mu2));
    } else {
        head = two_chain_block(d.height);
    }
    Pair tail = synthesize_multiset(label.rest);
    AdjointTriple t;
    t.y = block_diag({head.y, tail.y});
    t.gram = block_diag({head.gram, tail.gram});
    t.v0 = unit_vector(t.y.rows(), h);
    return t;
}

AdjointTriple standardized(const AdjointTriple& t)
{
    Standardized st = standardize_with_isotropic(t.gram, t.v0);
    Matrix pinv = st.k_std * st.basis.transpose() * t.gram;
    AdjointTriple out;
    out.gram = st.k_std;
    out.y = pinv * t.y * st.basis;
    out.v0 = unit_vector(t.y.rows(), t.y.rows() - 1);
    return out;
}

AdjointTriple synthesize_adjoint(const AdjointOrbitLabel& label, std::optional<std::pair<int, int>> target)
{
    if (target && *target != label.dim_index())
        fail(ErrorCode::InconsistentSignature,
             "label has (dim, index) (" + std::to_string(label.dim_index().first) + ", " +
                 std::to_string(label.dim_index().second) + ")");
    AdjointTriple t = standardized(synthesize_adjoint_blocks(label));
    AdjointOrbitLabel back = classify_adjoint(t);
    if (!(back == label))
        fail(ErrorCode::RoundTripMismatch, "synthesized " + label.str() + " classifies as " + back.str());
    return t;
}

// ---------------------------------------------------------------------------
// Semidirect product

std::pair<Matrix, Vec> semidirect_adjoint_action(const Matrix& b, const Vec& v, const Matrix& xi, const Vec& w)
{
    Matrix conj = b * xi * inverse(b);
    return {conj, vec_add(vec_scale(-1, conj * v), b * w)};
}

AdjointTriple embed_semidirect(const Matrix& x, const Vec& vtil, const Matrix& g)
{
    require_symmetric(g);
    std::size_t n = g.rows();
    if (x.rows() != n || x.cols() != n || vtil.size() != n) fail(ErrorCode::ShapeMismatch, "embed: shapes disagree");
    if (!in_algebra(x, g)) fail(ErrorCode::NotInLittleAlgebra, "X is not skew for G");
    AdjointTriple t;
    t.gram = standard_form(g);
    t.y = Matrix(n + 2, n + 2);
    t.y.set_block(1, 1, x);
    Vec gv = g * vtil;
    for (std::size_t i = 0; i < n; ++i) {
        t.y(1 + i, 0) = vtil[i];
        t.y(n + 1, 1 + i) = -gv[i];
    }
    t.v0 = unit_vector(n + 2, n + 1);
    return t;
}

Matrix embed_group_element(const Matrix& b, const Vec& d, const Matrix& g)
{
    std::size_t n = g.rows();
    if (!in_group(b, g)) fail(ErrorCode::NotInGroup, "B does not preserve G");
    Matrix a(n + 2, n + 2);
    a(0, 0) = 1;
    a(n + 1, n + 1) = 1;
    a.set_block(1, 1, b);
    Vec gd = g * d;
    Matrix dgb = Matrix::column_vector(gd).transpose() * b;
    ExactScalar q = bilinear(g, d, d);
    a(n + 1, 0) = q * ExactScalar(Rational(-1, 2));
    for (std::size_t i = 0; i < n; ++i) {
        a(1 + i, 0) = d[i];
        a(n + 1, 1 + i) = -dgb(0, i);
    }
    return a;
}

Matrix shear_map(const Vec& w, const Vec& v, const Matrix& gram)
{
    Matrix wc = Matrix::column_vector(w), vc = Matrix::column_vector(v);
    return wc * (gram * vc).transpose() - vc * (gram * wc).transpose();
}

namespace {

Rational random_coeff(std::mt19937_64& rng)
{
    static const long nums[] = {-2, -1, 1, 2};
    long num = nums[rng() % 4];
    long den = 1 + static_cast<long>(rng() % 2);
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Matrix cayley(std::mt19937_64& rng, const Matrix& gram, const Matrix& directions, int terms)
{
    std::size_t n = gram.rows();
    std::size_t k = directions.cols();
    if (k < 2) return Matrix::identity(n);
    for (int attempt = 0; attempt < 32; ++attempt) {
        Matrix s(n, n);
        for (int t = 0; t < terms; ++t) {
            std::size_t a = rng() % k, b = rng() % k;
            if (a == b) continue;
            s += ExactScalar(random_coeff(rng)) * shear_map(directions.column(a), directions.column(b), gram);
        }
        Matrix id = Matrix::identity(n);
        Matrix plus = id + s;
        if (det(plus).is_zero()) continue;
        return (id - s) * inverse(plus);
    }
    return Matrix::identity(n);
}

}  // namespace

Matrix random_stabilizer_element(std::uint64_t seed, const Matrix& gram, const Vec& v0)
{
    std::mt19937_64 rng(seed);
    Matrix perp = nullspace(Matrix::column_vector(gram * v0).transpose());
    return cayley(rng, gram, perp, 3);
}

Matrix random_group_element(std::uint64_t seed, const Matrix& gram)
{
    std::mt19937_64 rng(seed);
    return cayley(rng, gram, Matrix::identity(gram.rows()), 3);
}

Matrix group_inverse(const Matrix& p, const Matrix& gram)
{
    return inverse(gram) * p.transpose() * gram;
}

AdjointTriple conjugate(const AdjointTriple& t, const Matrix& p)
{
    return {t.gram, p * t.y * group_inverse(p, t.gram), p * t.v0};
}

}  // namespace orbit
