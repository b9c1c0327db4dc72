#include "orbit/typeclass.hpp"

#include "orbit/error.hpp"

#include <algorithm>
#include <mutex>
#include <random>

namespace orbit {

// ---------------------------------------------------------------------------
// Labels

EigenClass EigenClass::rp(const Rational& a)
{
    EigenClass c;
    c.kind = EigenKind::RP;
    c.datum = a;
    return c;
}

EigenClass EigenClass::ip(const Rational& b)
{
    EigenClass c;
    c.kind = EigenKind::IP;
    c.datum = b;
    return c;
}

EigenClass EigenClass::cq(const Rational& c2, const Rational& c0)
{
    EigenClass c;
    c.kind = EigenKind::CQ;
    c.c2 = c2;
    c.c0 = c0;
    return c;
}

Poly EigenClass::polynomial() const
{
    switch (kind) {
    case EigenKind::Zero: return Poly::x();
    case EigenKind::RP: return Poly({Rational(-datum), Rational(0), Rational(1)});
    case EigenKind::IP: return Poly({datum, Rational(0), Rational(1)});
    case EigenKind::CQ: return Poly({c0, Rational(0), c2, Rational(0), Rational(1)});
    }
    return {};
}

bool operator==(const EigenClass& a, const EigenClass& b)
{
    if (a.kind != b.kind) return false;
    switch (a.kind) {
    case EigenKind::Zero: return true;
    case EigenKind::RP:
    case EigenKind::IP: return a.datum == b.datum;
    case EigenKind::CQ: return a.c2 == b.c2 && a.c0 == b.c0;
    }
    return false;
}

TypeLabel TypeLabel::zero(int height, int sign) { return {EigenClass::zero(), height, sign}; }
TypeLabel TypeLabel::zero_pair(int height) { return {EigenClass::zero(), height, 0}; }

bool TypeLabel::needs_sign() const
{
    return cls.kind == EigenKind::IP || (cls.kind == EigenKind::Zero && height % 2 == 0);
}

int TypeLabel::dim() const
{
    int chain = height + 1;
    switch (cls.kind) {
    case EigenKind::Zero: return height % 2 == 0 ? chain : 2 * chain;
    case EigenKind::RP:
    case EigenKind::IP: return 2 * chain;
    case EigenKind::CQ: return 4 * chain;
    }
    return 0;
}

namespace {

std::string sign_str(int s) { return s < 0 ? "-" : (s > 0 ? "+" : ""); }

}  // namespace

std::string TypeLabel::str() const
{
    std::string h = std::to_string(height);
    switch (cls.kind) {
    case EigenKind::Zero:
        if (height % 2) return "D_" + h + "(0,0)";
        return "D" + sign_str(sign) + "_" + h + "(0)";
    case EigenKind::RP: return "D_" + h + "(RP a=" + rational_str(cls.datum) + ")";
    case EigenKind::IP: return "D" + sign_str(sign) + "_" + h + "(IP b=" + rational_str(cls.datum) + ")";
    case EigenKind::CQ:
        return "D_" + h + "(CQ 1," + rational_str(cls.c2) + "," + rational_str(cls.c0) + ")";
    }
    return {};
}

bool operator==(const TypeLabel& a, const TypeLabel& b)
{
    return a.cls == b.cls && a.height == b.height && a.sign == b.sign;
}

bool canonical_less(const TypeLabel& a, const TypeLabel& b)
{
    if (a.cls.kind != b.cls.kind) return a.cls.kind < b.cls.kind;
    if (a.height != b.height) return a.height > b.height;
    if (a.sign != b.sign) return a.sign < b.sign;
    if (a.cls.datum != b.cls.datum) return a.cls.datum < b.cls.datum;
    if (a.cls.c2 != b.cls.c2) return a.cls.c2 < b.cls.c2;
    return a.cls.c0 < b.cls.c0;
}

void validate_type(const TypeLabel& t)
{
    auto bad = [&](const std::string& why) { fail(ErrorCode::ParseError, "invalid type " + t.str() + ": " + why); };
    if (t.height < 0) bad("negative height");
    if (t.needs_sign() && t.sign != 1 && t.sign != -1) bad("sign required");
    if (!t.needs_sign() && t.sign != 0) bad("sign not allowed");
    switch (t.cls.kind) {
    case EigenKind::Zero: break;
    case EigenKind::RP:
    case EigenKind::IP:
        if (t.cls.datum <= 0) bad("eigen datum must be positive");
        break;
    case EigenKind::CQ:
        if (t.cls.c2 * t.cls.c2 - 4 * t.cls.c0 >= 0) bad("quartic must have non-real squared roots");
        break;
    }
}

TypeLabel parse_type_token(const std::string& token)
{
    auto bad = [&]() -> TypeLabel { fail(ErrorCode::ParseError, "cannot parse type token '" + token + "'"); };
    std::string s = token;
    while (!s.empty() && s.front() == ' ') s.erase(0, 1);
    while (!s.empty() && s.back() == ' ') s.pop_back();
    if (s.size() < 5 || s[0] != 'D') return bad();
    std::size_t pos = 1;
    int sign = 0;
    if (s[pos] == '+' || s[pos] == '-') {
        sign = s[pos] == '+' ? 1 : -1;
        ++pos;
    }
    if (s[pos] != '_') return bad();
    ++pos;
    std::size_t open = s.find('(', pos);
    if (open == std::string::npos || s.back() != ')') return bad();
    std::string h = s.substr(pos, open - pos);
    if (h.empty() || h.find_first_not_of("0123456789") != std::string::npos) return bad();
    TypeLabel t;
    t.height = std::stoi(h);
    t.sign = sign;
    std::string inner = s.substr(open + 1, s.size() - open - 2);
    if (inner == "0") {
        t.cls = EigenClass::zero();
        if (t.height % 2) fail(ErrorCode::ParseError, "odd-height zero type must be written D_m(0,0)");
    } else if (inner == "0,0") {
        t.cls = EigenClass::zero();
        if (t.height % 2 == 0) fail(ErrorCode::ParseError, "D_m(0,0) requires odd height");
    } else if (inner.rfind("RP a=", 0) == 0) {
        t.cls = EigenClass::rp(parse_rational(inner.substr(5)));
    } else if (inner.rfind("IP b=", 0) == 0) {
        t.cls = EigenClass::ip(parse_rational(inner.substr(5)));
    } else if (inner.rfind("CQ ", 0) == 0) {
        std::string rest = inner.substr(3);
        std::vector<std::string> parts;
        std::size_t start = 0;
        for (std::size_t i = 0; i <= rest.size(); ++i) {
            if (i == rest.size() || rest[i] == ',') {
                parts.push_back(rest.substr(start, i - start));
                start = i + 1;
            }
        }
        if (parts.size() != 3) return bad();
        Rational c4 = parse_rational(parts[0]);
        if (c4 == 0) return bad();
        t.cls = EigenClass::cq(parse_rational(parts[1]) / c4, parse_rational(parts[2]) / c4);
    } else {
        return bad();
    }
    validate_type(t);
    return t;
}

TypeMultiset::TypeMultiset(std::initializer_list<TypeLabel> items)
{
    for (const auto& t : items) add(t);
}

void TypeMultiset::add(const TypeLabel& t, int count)
{
    for (int i = 0; i < count; ++i) {
        auto it = std::upper_bound(items_.begin(), items_.end(), t, canonical_less);
        items_.insert(it, t);
    }
}

void TypeMultiset::add_all(const TypeMultiset& o)
{
    for (const auto& t : o.items_) add(t);
}

void TypeMultiset::remove_one(const TypeLabel& t)
{
    auto it = std::find(items_.begin(), items_.end(), t);
    if (it == items_.end())
        fail(ErrorCode::UnderlyingTypeMissing, "type " + t.str() + " not present in " + str());
    items_.erase(it);
}

int TypeMultiset::count(const TypeLabel& t) const
{
    return static_cast<int>(std::count(items_.begin(), items_.end(), t));
}

int TypeMultiset::dim() const
{
    int d = 0;
    for (const auto& t : items_) d += t.dim();
    return d;
}

std::string TypeMultiset::str() const
{
    std::string out;
    for (const auto& t : items_) {
        if (!out.empty()) out += " + ";
        out += t.str();
    }
    return out;
}

std::vector<std::string> split_tokens(const std::string& s)
{
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '(' || c == '{') ++depth;
        if (c == ')' || c == '}') --depth;
        if (depth < 0) fail(ErrorCode::ParseError, "unbalanced brackets in '" + s + "'");
        bool sep = depth == 0 && c == '+' && i > 0 && s[i - 1] == ' ';
        if (sep) {
            while (!cur.empty() && cur.back() == ' ') cur.pop_back();
            out.push_back(cur);
            cur.clear();
            continue;
        }
        if (cur.empty() && c == ' ') continue;
        cur.push_back(c);
    }
    if (depth != 0) fail(ErrorCode::ParseError, "unbalanced brackets in '" + s + "'");
    while (!cur.empty() && cur.back() == ' ') cur.pop_back();
    if (!cur.empty() || !out.empty()) out.push_back(cur);
    for (const auto& t : out)
        if (t.empty()) fail(ErrorCode::ParseError, "empty token in '" + s + "'");
    return out;
}

TypeMultiset parse_type_multiset(const std::vector<std::string>& tokens)
{
    TypeMultiset m;
    for (const auto& t : tokens) m.add(parse_type_token(t));
    return m;
}

// ---------------------------------------------------------------------------
// Decomposition

EigenClass eigen_class_of(const Poly& class_poly)
{
    Poly f = class_poly.monic();
    if (f == Poly::x()) return EigenClass::zero();
    Poly g = f.compress_square();
    if (g.degree() == 1) {
        Rational c = -g.coeff(0);
        if (c > 0) return EigenClass::rp(c);
        if (c < 0) return EigenClass::ip(-c);
    }
    if (g.degree() == 2) {
        Rational c2 = g.coeff(1), c0 = g.coeff(0);
        if (c2 * c2 - 4 * c0 < 0) return EigenClass::cq(c2, c0);
    }
    fail(ErrorCode::UnsupportedEigenvalues,
         "eigenvalue class " + f.str() + " needs nested radicals or degree > 4");
}

std::vector<PrimaryPart> primary_split(const Matrix& y, const Matrix& gram)
{
    if (!y.square() || y.rows() != gram.rows()) fail(ErrorCode::ShapeMismatch, "pair shapes differ");
    EvenFactorization ef = poly_even_factorization(char_poly(y));
    std::vector<std::pair<EigenClass, std::pair<Poly, int>>> classes;
    if (ef.zero_multiplicity > 0) classes.push_back({EigenClass::zero(), {Poly::x(), ef.zero_multiplicity}});
    for (const auto& f : ef.factors) classes.push_back({eigen_class_of(f.factor), {f.factor, f.multiplicity}});

    std::vector<PrimaryPart> parts;
    for (const auto& [cls, fm] : classes) {
        PrimaryPart p;
        p.cls = cls;
        p.multiplicity = fm.second;
        p.basis = nullspace(power(eval_poly(fm.first, y), fm.second));
        p.y = restrict_to(y, p.basis);
        p.gram = p.basis.transpose() * gram * p.basis;
        parts.push_back(std::move(p));
    }
    return parts;
}

JordanChevalley jordan_chevalley_with(const Matrix& y, const Poly& radical)
{
    Poly dr = radical.derivative();
    Matrix a = y;
    for (int iter = 0; iter < 64; ++iter) {
        Matrix ra = eval_poly(radical, a);
        if (ra.is_zero()) return {a, y - a};
        a = a - ra * inverse(eval_poly(dr, a));
    }
    fail(ErrorCode::InternalRadicalMismatch, "Newton iteration for the semisimple part did not converge");
}

JordanChevalley jordan_chevalley(const Matrix& y)
{
    return jordan_chevalley_with(y, squarefree_part(char_poly(y)));
}

namespace {

std::vector<std::size_t> power_ranks(const Matrix& n)
{
    std::size_t d = n.rows();
    std::vector<std::size_t> rk{d};
    Matrix p = Matrix::identity(d);
    for (std::size_t s = 1; s <= d + 1; ++s) {
        p = p * n;
        rk.push_back(rank(p));
    }
    return rk;
}

std::map<int, int> blocks_from_ranks(const std::vector<std::size_t>& rk)
{
    std::map<int, int> out;
    for (std::size_t s = 1; s + 1 < rk.size(); ++s) {
        long b = static_cast<long>(rk[s - 1]) - 2 * static_cast<long>(rk[s]) + static_cast<long>(rk[s + 1]);
        if (b > 0) out[static_cast<int>(s)] = static_cast<int>(b);
    }
    return out;
}

}  // namespace

std::map<int, int> nilpotent_block_structure(const Matrix& n)
{
    if (!power(n, static_cast<int>(n.rows())).is_zero()) fail(ErrorCode::NotNilpotent, "matrix is not nilpotent");
    return blocks_from_ranks(power_ranks(n));
}

Signature induced_form_signs(const PrimaryPart& part, const JordanChevalley& jc, int m)
{
    std::map<int, int> blocks = blocks_from_ranks(power_ranks(jc.n));
    int count = blocks.count(m + 1) ? blocks.at(m + 1) : 0;
    if (part.cls.kind == EigenKind::Zero && m % 2 == 1) return {count, count};
    Matrix k = nullspace(power(jc.n, m + 1));
    Matrix op = power(jc.n, m);
    if (part.cls.kind == EigenKind::IP && m % 2 == 1) op = jc.s * op;
    Matrix form = k.transpose() * part.gram * op * k;
    Inertia in = inertia(form);
    if (in.negatives + in.positives != count)
        fail(ErrorCode::InternalRadicalMismatch,
             "quotient form at height " + std::to_string(m) + " has rank " +
                 std::to_string(in.negatives + in.positives) + ", expected " + std::to_string(count));
    return {in.negatives, in.positives};
}

namespace {

TypeMultiset classify_pair_impl(const Matrix& y, const Matrix& gram)
{
    require_symmetric(gram);
    if (!y.square() || y.rows() != gram.rows()) fail(ErrorCode::ShapeMismatch, "pair shapes differ");
    signature_index(gram);
    if (!in_algebra(y, gram)) fail(ErrorCode::NotInAlgebra, "Y is not skew for the form");

    TypeMultiset out;
    for (const auto& part : primary_split(y, gram)) {
        JordanChevalley jc = part.cls.kind == EigenKind::Zero
                                 ? JordanChevalley{Matrix(part.y.rows(), part.y.rows()), part.y}
                                 : jordan_chevalley_with(part.y, part.cls.polynomial());
        std::map<int, int> blocks = blocks_from_ranks(power_ranks(jc.n));
        for (const auto& [size, count] : blocks) {
            int m = size - 1;
            auto require_div = [&](int d) {
                if (count % d)
                    fail(ErrorCode::InternalRadicalMismatch, "block count " + std::to_string(count) +
                                                                 " not divisible by " + std::to_string(d));
                return count / d;
            };
            switch (part.cls.kind) {
            case EigenKind::Zero:
                if (m % 2) {
                    out.add(TypeLabel::zero_pair(m), require_div(2));
                } else {
                    Signature s = induced_form_signs(part, jc, m);
                    out.add(TypeLabel::zero(m, -1), s.negatives);
                    out.add(TypeLabel::zero(m, 1), s.positives);
                }
                break;
            case EigenKind::RP: out.add({part.cls, m, 0}, require_div(2)); break;
            case EigenKind::CQ: out.add({part.cls, m, 0}, require_div(4)); break;
            case EigenKind::IP: {
                Signature s = induced_form_signs(part, jc, m);
                if (s.negatives % 2 || s.positives % 2)
                    fail(ErrorCode::InternalRadicalMismatch, "odd signature in an imaginary pair class");
                out.add({part.cls, m, -1}, s.negatives / 2);
                out.add({part.cls, m, 1}, s.positives / 2);
                break;
            }
            }
        }
    }
    if (out.dim() != static_cast<int>(y.rows()))
        fail(ErrorCode::InternalRadicalMismatch, "type dimensions do not add up");
    return out;
}

/// Symmetric K with y^T K + K y = 0, as a list of basis matrices.
std::vector<Matrix> invariant_forms(const Matrix& y)
{
    std::size_t n = y.rows();
    std::vector<std::pair<std::size_t, std::size_t>> vars;
    std::vector<std::vector<std::size_t>> idx(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            idx[i][j] = idx[j][i] = vars.size();
            vars.emplace_back(i, j);
        }
    Matrix eq(vars.size(), vars.size());
    std::size_t row = 0;
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = r; c < n; ++c, ++row) {
            for (std::size_t k = 0; k < n; ++k) {
                if (!y(k, r).is_zero()) eq(row, idx[k][c]) += y(k, r);
                if (!y(k, c).is_zero()) eq(row, idx[r][k]) += y(k, c);
            }
        }
    }
    Matrix ns = nullspace(eq);
    std::vector<Matrix> out;
    for (std::size_t s = 0; s < ns.cols(); ++s) {
        Matrix k(n, n);
        for (std::size_t v = 0; v < vars.size(); ++v) {
            k(vars[v].first, vars[v].second) = ns(v, s);
            k(vars[v].second, vars[v].first) = ns(v, s);
        }
        out.push_back(std::move(k));
    }
    return out;
}

Matrix companion(const Poly& f)
{
    std::size_t d = static_cast<std::size_t>(f.degree());
    Matrix c(d, d);
    for (std::size_t i = 0; i + 1 < d; ++i) c(i + 1, i) = 1;
    for (std::size_t i = 0; i < d; ++i) c(i, d - 1) = ExactScalar(Rational(-f.coeff(static_cast<int>(i))));
    return c;
}

Pair synthesize_nonzero_class(const TypeLabel& label)
{
    Poly f = label.cls.polynomial();
    std::size_t d = static_cast<std::size_t>(f.degree());
    std::size_t chains = static_cast<std::size_t>(label.height) + 1;
    std::size_t n = d * chains;
    Matrix c = companion(f);
    Matrix y(n, n);
    for (std::size_t b = 0; b < chains; ++b) {
        y.set_block(b * d, b * d, c);
        if (b + 1 < chains) y.set_block((b + 1) * d, b * d, Matrix::identity(d));
    }
    std::vector<Matrix> forms = invariant_forms(y);
    std::mt19937_64 rng(0x5eedULL + static_cast<unsigned long long>(n));
    for (int attempt = 0; attempt < 64 && !forms.empty(); ++attempt) {
        Matrix k(n, n);
        for (std::size_t s = 0; s < forms.size(); ++s) {
            long coef = attempt == 0 ? static_cast<long>(s) + 1
                                     : static_cast<long>(rng() % 7) - 3;
            if (coef != 0) k += ExactScalar(coef) * forms[s];
        }
        if (det(k).is_zero()) continue;
        TypeMultiset got = classify_pair_impl(y, k);
        if (got.items().size() != 1) continue;
        TypeLabel t = got.items()[0];
        if (t == label) return {y, k};
        if (label.cls.kind == EigenKind::IP && t.cls == label.cls && t.height == label.height && t.sign == -label.sign)
            return {y, -k};
    }
    fail(ErrorCode::Unrealizable, "no invariant form realizes " + label.str());
}

}  // namespace

TypeMultiset classify_pair(const Matrix& y, const Matrix& gram)
{
    TypeMultiset out = classify_pair_impl(y, gram);
    int index = 0;
    for (const auto& t : out.items()) index += label_dim_index(t).second;
    if (index != signature_index(gram).negatives)
        fail(ErrorCode::InternalRadicalMismatch, "type indices do not add up to the index of the form");
    return out;
}

Pair synthesize_type(const TypeLabel& label)
{
    validate_type(label);
    std::size_t h = static_cast<std::size_t>(label.height);
    if (label.cls.kind != EigenKind::Zero) return synthesize_nonzero_class(label);
    if (h % 2 == 0) {
        // chain e_i = Y^i w with gamma(e_i, e_j) = (-1)^i eps delta_{i+j,h}
        Matrix y(h + 1, h + 1), g(h + 1, h + 1);
        for (std::size_t i = 0; i < h; ++i) y(i + 1, i) = 1;
        for (std::size_t i = 0; i <= h; ++i) g(i, h - i) = (i % 2 ? -1 : 1) * label.sign;
        return {y, g};
    }
    // two chains w_i, z_j with gamma(w_i, z_j) = (-1)^i delta_{i+j,h}
    std::size_t c = h + 1;
    Matrix y(2 * c, 2 * c), g(2 * c, 2 * c);
    for (std::size_t i = 0; i < h; ++i) {
        y(i + 1, i) = 1;
        y(c + i + 1, c + i) = 1;
    }
    for (std::size_t i = 0; i <= h; ++i) {
        long v = i % 2 ? -1 : 1;
        g(i, c + h - i) = v;
        g(c + h - i, i) = v;
    }
    return {y, g};
}

std::pair<int, int> label_dim_index(const TypeLabel& label)
{
    static std::mutex mu;
    static std::map<std::string, std::pair<int, int>> cache;
    std::string key = label.str();
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    Pair p = synthesize_type(label);
    Signature s = signature_index(p.gram);
    std::pair<int, int> value{s.negatives + s.positives, s.negatives};
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(key, value);
    return value;
}

Pair synthesize_multiset(const TypeMultiset& types)
{
    std::vector<Matrix> ys, gs;
    for (const auto& t : types.items()) {
        Pair p = synthesize_type(t);
        ys.push_back(std::move(p.y));
        gs.push_back(std::move(p.gram));
    }
    return {block_diag(ys), block_diag(gs)};
}

std::pair<int, int> multiset_dim_index(const TypeMultiset& types)
{
    std::pair<int, int> out{0, 0};
    for (const auto& t : types.items()) {
        auto [d, i] = label_dim_index(t);
        out.first += d;
        out.second += i;
    }
    return out;
}

}  // namespace orbit
