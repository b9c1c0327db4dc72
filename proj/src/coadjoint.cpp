#include "orbit/coadjoint.hpp"

#include "orbit/error.hpp"

#include <algorithm>

namespace orbit {

// ---------------------------------------------------------------------------
// Labels

CotypeLabel CotypeLabel::one_dim(int sign, const Rational& alpha2)
{
    if (sign != 1 && sign != -1) fail(ErrorCode::ParseError, "sign must be +-1");
    if (alpha2 <= 0) fail(ErrorCode::ParseError, "a2 must be positive");
    return {Kind::OneDim, 1, sign, alpha2};
}

CotypeLabel CotypeLabel::even_affine(int n)
{
    if (n < 2 || n % 2) fail(ErrorCode::ParseError, "N_n(0,0) needs even n >= 2");
    return {Kind::EvenAffine, n, 0, 0};
}

CotypeLabel CotypeLabel::odd_affine(int n, int sign, const Rational& mu2)
{
    if (n < 3 || n % 2 == 0) fail(ErrorCode::ParseError, "N+-_n(0) needs odd n >= 3");
    if (sign != 1 && sign != -1) fail(ErrorCode::ParseError, "sign must be +-1");
    if (mu2 <= 0) fail(ErrorCode::ParseError, "mu2 must be positive");
    return {Kind::OddAffine, n, sign, mu2};
}

CotypeLabel CotypeLabel::lifted() const
{
    switch (kind) {
    case Kind::Zero: return even_affine(2);
    case Kind::OneDim: return odd_affine(3, sign, q);
    case Kind::EvenAffine: return even_affine(n + 2);
    case Kind::OddAffine: return odd_affine(n + 2, sign, q);
    }
    return {};
}

std::string CotypeLabel::str() const
{
    std::string s = sign < 0 ? "-" : "+";
    switch (kind) {
    case Kind::Zero: return "zero";
    case Kind::OneDim: return "1dim" + s + ", a2=" + rational_str(q);
    case Kind::EvenAffine: return "N_" + std::to_string(n) + "(0,0)";
    case Kind::OddAffine: return "N" + s + "_" + std::to_string(n) + "(0), mu2=" + rational_str(q);
    }
    return {};
}

bool operator==(const CotypeLabel& a, const CotypeLabel& b)
{
    return a.kind == b.kind && a.n == b.n && a.sign == b.sign && a.q == b.q;
}

std::string CoadjointOrbitLabel::str() const
{
    std::string s = cotype.str();
    if (!rest.empty()) s += " + " + rest.str();
    return s;
}

namespace {

int parse_int(const std::string& s)
{
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        fail(ErrorCode::ParseError, "bad integer '" + s + "'");
    return std::stoi(s);
}

int parse_sign(char c)
{
    if (c == '+') return 1;
    if (c == '-') return -1;
    fail(ErrorCode::ParseError, std::string("expected sign, got '") + c + "'");
}

CotypeLabel parse_cotype(const std::string& tok)
{
    if (tok == "zero") return CotypeLabel::zero();
    if (tok.rfind("1dim", 0) == 0) {
        if (tok.size() < 10 || tok.substr(5, 5) != ", a2=") fail(ErrorCode::ParseError, "bad cotype '" + tok + "'");
        return CotypeLabel::one_dim(parse_sign(tok[4]), parse_rational(tok.substr(10)));
    }
    if (tok.rfind("N_", 0) == 0 && tok.size() > 7 && tok.substr(tok.size() - 5) == "(0,0)")
        return CotypeLabel::even_affine(parse_int(tok.substr(2, tok.size() - 7)));
    if (tok.size() > 4 && tok[0] == 'N' && tok[2] == '_') {
        auto close = tok.find("(0), mu2=");
        if (close == std::string::npos) fail(ErrorCode::ParseError, "bad cotype '" + tok + "'");
        return CotypeLabel::odd_affine(parse_int(tok.substr(3, close - 3)), parse_sign(tok[1]),
                                       parse_rational(tok.substr(close + 9)));
    }
    fail(ErrorCode::ParseError, "unknown cotype '" + tok + "'");
}

}  // namespace

CoadjointOrbitLabel CoadjointOrbitLabel::parse(const std::string& s)
{
    std::vector<std::string> toks = split_tokens(s);
    if (toks.empty()) fail(ErrorCode::ParseError, "empty label");
    CoadjointOrbitLabel out;
    out.cotype = parse_cotype(toks[0]);
    out.rest = parse_type_multiset({toks.begin() + 1, toks.end()});
    return out;
}

std::pair<int, int> CoadjointOrbitLabel::dim_index() const
{
    CoTuple t = synthesize_cotype_blocks(*this);
    if (t.gram.rows() == 0) return {0, 0};
    Signature s = signature_index(t.gram);
    return {s.negatives + s.positives, s.negatives};
}

// ---------------------------------------------------------------------------
// Classification

void validate_cotuple(const CoTuple& t)
{
    require_symmetric(t.gram);
    std::size_t n = t.gram.rows();
    if (t.y.rows() != n || t.y.cols() != n || t.v.size() != n) fail(ErrorCode::ShapeMismatch, "tuple shapes disagree");
    signature_index(t.gram);
    if (!in_algebra(t.y, t.gram)) fail(ErrorCode::NotInAlgebra, "Y is not skew for the form");
}

CoTuple apply_cotuple_equivalence(const CoTuple& t, const Matrix& p, const Vec& w)
{
    if (!in_group(p, t.gram)) fail(ErrorCode::NotInGroup, "P does not preserve the form");
    Matrix sheared = t.y + shear_map(w, t.v, t.gram);
    return {t.gram, p * sheared * group_inverse(p, t.gram), p * t.v};
}

CoTuple little_cotype(const CoTuple& t)
{
    Matrix b = hyperbolic_split(t.gram, t.v);
    std::size_t n = b.rows();
    Matrix yb = inverse(b) * t.y * b;
    if (!yb(0, n - 1).is_zero() || !yb(n - 1, 0).is_zero())
        fail(ErrorCode::CornerNotZero, "corner entries of Y in the split basis are not zero");
    Matrix mid = b.block(0, 1, n, n - 2);
    CoTuple out;
    out.gram = mid.transpose() * t.gram * mid;
    out.y = yb.block(1, 1, n - 2, n - 2);
    out.v = yb.block(1, n - 1, n - 2, 1).column(0);
    return out;
}

CoadjointOrbitLabel classify_cotuple(const CoTuple& t)
{
    validate_cotuple(t);
    CoadjointOrbitLabel out;
    if (vec_is_zero(t.v)) {
        out.cotype = CotypeLabel::zero();
        if (t.gram.rows() > 0) out.rest = classify_pair(t.y, t.gram);
        return out;
    }
    ExactScalar c = bilinear(t.gram, t.v, t.v);
    if (!c.is_zero()) {
        Rational q = c.rational();
        // Y + L_{w,v} with w = -Yv/c kills v and preserves v^perp.
        Vec w = vec_scale(-c.inverse(), t.y * t.v);
        Matrix y = t.y + shear_map(w, t.v, t.gram);
        out.cotype = CotypeLabel::one_dim(q > 0 ? 1 : -1, q > 0 ? q : Rational(-q));
        if (t.gram.rows() > 1) {
            Matrix perp = orthocomplement(t.gram, Matrix::column_vector(t.v));
            out.rest = classify_pair(restrict_to(y, perp), perp.transpose() * t.gram * perp);
        }
        return out;
    }
    CoadjointOrbitLabel inner = classify_cotuple(little_cotype(t));
    out.cotype = inner.cotype.lifted();
    out.rest = inner.rest;
    return out;
}

// ---------------------------------------------------------------------------
// Synthesis

namespace {

Pair cotype_block(const CotypeLabel& c)
{
    std::size_t n = static_cast<std::size_t>(c.n);
    Pair p{Matrix(n, n), Matrix(n, n)};
    switch (c.kind) {
    case CotypeLabel::Kind::Zero: break;
    case CotypeLabel::Kind::OneDim: p.gram(0, 0) = ExactScalar(Rational(c.sign * c.q)); break;
    case CotypeLabel::Kind::EvenAffine: {
        // Gram [[0,I],[I,0]], Y = diag(-N^T, N)
        std::size_t k = n / 2;
        for (std::size_t i = 0; i < k; ++i) {
            p.gram(i, k + i) = 1;
            p.gram(k + i, i) = 1;
        }
        for (std::size_t i = 0; i + 1 < k; ++i) {
            p.y(i + 1, i) = -1;
            p.y(k + i, k + i + 1) = 1;
        }
        break;
    }
    case CotypeLabel::Kind::OddAffine: {
        // middle vector scaled by mu: Gram [[0,0,I],[0,eps mu^2,0],[I,0,0]],
        // Y = [[-N^T, -eps mu^2 e1, 0],[0,0,e1^T],[0,0,N]]
        std::size_t k = (n - 1) / 2;
        ExactScalar p2(Rational(c.sign * c.q));
        for (std::size_t i = 0; i < k; ++i) {
            p.gram(i, k + 1 + i) = 1;
            p.gram(k + 1 + i, i) = 1;
        }
        p.gram(k, k) = p2;
        for (std::size_t i = 0; i + 1 < k; ++i) {
            p.y(i + 1, i) = -1;
            p.y(k + 1 + i, k + 2 + i) = 1;
        }
        p.y(0, k) = -p2;
        p.y(k, k + 1) = 1;
        break;
    }
    }
    return p;
}

}  // namespace

CoTuple synthesize_cotype_blocks(const CoadjointOrbitLabel& label)
{
    Pair head = cotype_block(label.cotype);
    Pair tail = synthesize_multiset(label.rest);
    CoTuple t;
    t.y = block_diag({head.y, tail.y});
    t.gram = block_diag({head.gram, tail.gram});
    t.v = Vec(t.y.rows());
    if (label.cotype.kind != CotypeLabel::Kind::Zero) t.v[head.y.rows() - 1] = 1;
    return t;
}

CoTuple synthesize_cotype(const CoadjointOrbitLabel& label, std::optional<std::pair<int, int>> target)
{
    if (target && *target != label.dim_index())
        fail(ErrorCode::InconsistentSignature,
             "label has (dim, index) (" + std::to_string(label.dim_index().first) + ", " +
                 std::to_string(label.dim_index().second) + ")");
    CoTuple t = synthesize_cotype_blocks(label);
    if (label.cotype.affine()) {
        AdjointTriple s = standardized({t.gram, t.y, t.v});
        t = {s.gram, s.y, s.v0};
    }
    CoadjointOrbitLabel back = classify_cotuple(t);
    if (!(back == label))
        fail(ErrorCode::RoundTripMismatch, "synthesized " + label.str() + " classifies as " + back.str());
    return t;
}

// ---------------------------------------------------------------------------
// Functionals

namespace {

bool is_standard(const CoTuple& t)
{
    std::size_t n = t.gram.rows();
    if (n < 2 || t.v != unit_vector(n, n - 1)) return false;
    return t.gram == standard_form(t.gram.block(1, 1, n - 2, n - 2));
}

}  // namespace

Functional tuple_to_functional(const CoTuple& t)
{
    validate_cotuple(t);
    CoTuple s = t;
    if (!is_standard(t)) {
        AdjointTriple a = standardized({t.gram, t.y, t.v});
        s = {a.gram, a.y, a.v0};
    }
    std::size_t n = s.gram.rows();
    std::size_t m = n - 2;
    Functional f;
    f.little_gram = s.gram.block(1, 1, m, m);
    f.m = s.y.block(1, 1, m, m);
    Vec vt = s.y.block(1, n - 1, m, 1).column(0);
    f.p = vec_scale(-2, f.little_gram * vt);
    return f;
}

CoTuple functional_to_tuple(const Functional& f)
{
    require_symmetric(f.little_gram);
    std::size_t m = f.little_gram.rows();
    if (f.m.rows() != m || f.m.cols() != m || f.p.size() != m)
        fail(ErrorCode::ShapeMismatch, "functional shapes disagree");
    Matrix ginv = inverse(f.little_gram);
    ExactScalar half(Rational(1, 2));
    Matrix yt = half * (f.m - ginv * f.m.transpose() * f.little_gram);
    Vec vt = vec_scale(-half, ginv * f.p);
    Vec gv = f.little_gram * vt;
    CoTuple t;
    t.gram = standard_form(f.little_gram);
    t.y = Matrix(m + 2, m + 2);
    t.y.set_block(1, 1, yt);
    for (std::size_t i = 0; i < m; ++i) {
        t.y(1 + i, m + 1) = vt[i];
        t.y(0, 1 + i) = -gv[i];
    }
    t.v = unit_vector(m + 2, m + 1);
    return t;
}

ExactScalar evaluate_functional(const Functional& f, const Matrix& x, const Vec& z)
{
    ExactScalar s;
    std::size_t m = f.m.rows();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < m; ++k)
            if (!f.m(i, k).is_zero() && !x(k, i).is_zero()) s += f.m(i, k) * x(k, i);
    for (std::size_t i = 0; i < m; ++i)
        if (!f.p[i].is_zero() && !z[i].is_zero()) s += f.p[i] * z[i];
    return s;
}

// ---------------------------------------------------------------------------
// Correspondence

JordanType jordan_type(const Matrix& y)
{
    JordanType out;
    if (y.rows() == 0) return out;
    Matrix gram = Matrix::identity(y.rows());
    for (const auto& part : primary_split(y, gram)) {
        Matrix n = part.cls.kind == EigenKind::Zero ? part.y
                                                    : jordan_chevalley_with(part.y, part.cls.polynomial()).n;
        std::vector<int> sizes;
        for (const auto& [size, count] : nilpotent_block_structure(n))
            for (int i = 0; i < count; ++i) sizes.push_back(size);
        std::sort(sizes.rbegin(), sizes.rend());
        out[part.cls.polynomial().str()] = sizes;
    }
    return out;
}

namespace {

/// eps' = (-1)^(m+1) eps for n = 2m+3; the map is its own inverse.
int flip_sign(int n, int sign)
{
    int m = (n - 3) / 2;
    return (m + 1) % 2 ? -sign : sign;
}

void check_partners(const AdjointOrbitLabel& a, const CoadjointOrbitLabel& c)
{
    AdjointTriple at = synthesize_adjoint_blocks(a);
    CoTuple ct = synthesize_cotype_blocks(c);
    auto mismatch = [&](const std::string& what) {
        fail(ErrorCode::BijectionMismatch, what + " differs between " + a.str() + " and " + c.str());
    };
    if (at.gram.rows() != ct.gram.rows()) mismatch("dimension");
    if (!(signature_index(at.gram) == signature_index(ct.gram))) mismatch("index");
    Rational pa = parameter_of(at, distinguished_height(at));
    Rational mu_a = pa < 0 ? Rational(-pa) : pa;
    CoadjointOrbitLabel back = classify_cotuple(ct);
    Rational mu_c = back.cotype.kind == CotypeLabel::Kind::OddAffine ? back.cotype.q : Rational(0);
    if (mu_a != mu_c) mismatch("modulus");
    if (jordan_type(at.y) != jordan_type(ct.y)) mismatch("Jordan type");
}

}  // namespace

CoadjointOrbitLabel adjoint_to_coadjoint(const AdjointOrbitLabel& label)
{
    const DistinguishedLabel& d = label.distinguished;
    CoadjointOrbitLabel out;
    if (d.kind == DistinguishedLabel::Case::One)
        out.cotype = CotypeLabel::odd_affine(d.height + 1, flip_sign(d.height + 1, d.sign), d.mu2);
    else
        out.cotype = CotypeLabel::even_affine(2 * d.height + 2);
    out.rest = label.rest;
    check_partners(label, out);
    return out;
}

AdjointOrbitLabel coadjoint_to_adjoint(const CoadjointOrbitLabel& label)
{
    const CotypeLabel& c = label.cotype;
    if (!c.affine()) fail(ErrorCode::NotAffineCotype, c.str() + " is not an affine cotype");
    AdjointOrbitLabel out;
    if (c.kind == CotypeLabel::Kind::OddAffine) {
        out.distinguished = DistinguishedLabel::one(c.n - 1, flip_sign(c.n, c.sign), c.q);
    } else {
        int h = (c.n - 2) / 2;
        out.distinguished = h % 2 ? DistinguishedLabel::two(h) : DistinguishedLabel::three(h);
    }
    out.rest = label.rest;
    check_partners(out, label);
    return out;
}

}  // namespace orbit
