#include "orbit/poincare.hpp"

#include "orbit/error.hpp"

#include <algorithm>
#include <regex>

namespace orbit {

Matrix lorentz_g() { return lorentz_block(3, 1); }
Matrix poincare_k() { return standard_form(lorentz_g()); }

std::string instantiate(const std::string& label_template, const FamilyParams& p)
{
    std::string s = label_template;
    auto sub = [&](const std::string& key, const Rational& q) {
        for (auto pos = s.find(key); pos != std::string::npos; pos = s.find(key))
            s.replace(pos, key.size(), rational_str(q));
    };
    sub("{mu2}", p.mu2);
    sub("{a}", p.a);
    sub("{b}", p.b);
    return s;
}

// ---------------------------------------------------------------------------
// Printed tables

const std::vector<TableRow>& distinguished_candidates()
{
    static const std::vector<TableRow> rows = {
        {"u{D-_4(0), mu2={mu2}}", 5, 3}, {"u{D+_4(0), mu2={mu2}}", 5, 2}, {"u{D_1(0,0)}", 4, 2},
        {"u{D+_2(0), mu2={mu2}}", 3, 2}, {"u{D-_2(0), mu2={mu2}}", 3, 1}, {"u{D+_0(0)+D-_0(0)}", 2, 1},
    };
    return rows;
}

const std::vector<TableRow>& type_candidates()
{
    static const std::vector<TableRow> rows = {
        {"D-_4(0)", 5, 3},         {"D+_4(0)", 5, 2},         {"D_0(CQ 1,0,{b})", 4, 2},
        {"D_1(RP a={a})", 4, 2},   {"D-_1(IP b={b})", 4, 2},  {"D+_1(IP b={b})", 4, 2},
        {"D_1(0,0)", 4, 2},        {"D+_2(0)", 3, 2},         {"D-_2(0)", 3, 1},
        {"D-_0(IP b={b})", 2, 2},  {"D_0(RP a={a})", 2, 1},   {"D+_0(IP b={b})", 2, 0},
        {"D-_0(0)", 1, 1},         {"D+_0(0)", 1, 0},
    };
    return rows;
}

const std::vector<TableRow>& cotype_candidates()
{
    static const std::vector<TableRow> rows = {
        {"N-_5(0), mu2={mu2}", 5, 3}, {"N_4(0,0)", 4, 2}, {"N-_3(0), mu2={mu2}", 3, 2},
        {"N+_3(0), mu2={mu2}", 3, 1}, {"N_2(0,0)", 2, 1},
    };
    return rows;
}

const std::vector<TableRow>& cotype_type_candidates()
{
    static const std::vector<TableRow> rows = {
        {"D_1(RP a={a})", 4, 2},  {"D-_1(IP b={b})", 4, 2}, {"D+_1(IP b={b})", 4, 2}, {"D_1(0,0)", 4, 2},
        {"D+_2(0)", 3, 2},        {"D-_2(0)", 3, 1},        {"D-_0(IP b={b})", 2, 2}, {"D_0(RP a={a})", 2, 1},
        {"D+_0(IP b={b})", 2, 0}, {"D-_0(0)", 1, 1},        {"D+_0(0)", 1, 0},
    };
    return rows;
}

namespace {

const char* kM5 = "u{D-_4(0), mu2={mu2}}";
const char* kD1 = "u{D_1(0,0)}";
const char* kP2 = "u{D+_2(0), mu2={mu2}}";
const char* kM2 = "u{D-_2(0), mu2={mu2}}";
const char* kH0 = "u{D+_0(0)+D-_0(0)}";
const char* kIP = "D-_0(IP b={b})";
const char* kRP = "D_0(RP a={a})";
const char* kNeg = "D-_0(0)";
const char* kPos = "D+_0(0)";

std::vector<OrbitFamily> build_adjoint()
{
    using P = std::pair<int, int>;
    return {
        {"A1a", Side::Adjoint, kM5, {kNeg}, P{5, 3}, P{1, 1}, "C1"},
        {"A2a", Side::Adjoint, kD1, {kIP}, P{4, 2}, P{2, 2}, "C2"},
        {"A2b", Side::Adjoint, kD1, {kNeg, kNeg}, P{4, 2}, P{2, 2}, "C3"},
        {"A3a", Side::Adjoint, kP2, {"D+_2(0)"}, P{3, 2}, P{3, 2}, "C4"},
        {"A3b", Side::Adjoint, kP2, {kIP, kPos}, P{3, 2}, P{3, 2}, "C5"},
        {"A3c", Side::Adjoint, kP2, {kRP, kNeg}, P{3, 2}, P{3, 2}, "C6"},
        {"A3d", Side::Adjoint, kP2, {kNeg, kNeg, kPos}, P{3, 2}, P{3, 2}, "C7"},
        {"A4a", Side::Adjoint, kM2, {kIP, kNeg}, P{3, 1}, P{3, 3}, "C8"},
        {"A4b", Side::Adjoint, kM2, {kNeg, kNeg, kNeg}, P{3, 1}, P{3, 3}, "C9"},
        {"A5a", Side::Adjoint, kH0, {"D+_2(0)", kNeg}, P{2, 1}, P{4, 3}, "C10"},
        {"A5b", Side::Adjoint, kH0, {kIP, kRP}, P{2, 1}, P{4, 3}, "C11"},
        {"A5c", Side::Adjoint, kH0, {kIP, kNeg, kPos}, P{2, 1}, P{4, 3}, "C12"},
        {"A5d", Side::Adjoint, kH0, {kRP, kNeg, kNeg}, P{2, 1}, P{4, 3}, "C13"},
        {"A5e", Side::Adjoint, kH0, {kNeg, kNeg, kNeg, kPos}, P{2, 1}, P{4, 3}, "C14"},
    };
}

std::vector<OrbitFamily> build_coadjoint()
{
    std::vector<OrbitFamily> out;
    static const char* heads[] = {"N-_5(0), mu2={mu2}", "N_4(0,0)", "N-_3(0), mu2={mu2}", "N+_3(0), mu2={mu2}",
                                  "N_2(0,0)"};
    static const char* adjoint_heads[] = {kM5, kD1, kP2, kM2, kH0};
    int k = 1;
    for (const auto& a : build_adjoint()) {
        std::size_t which = std::find(std::begin(adjoint_heads), std::end(adjoint_heads), a.head) - std::begin(adjoint_heads);
        OrbitFamily c;
        c.id = "C" + std::to_string(k++);
        c.side = Side::Coadjoint;
        c.head = heads[which];
        c.rest = a.rest;
        c.rest_printed = a.rest_printed;
        c.partner = a.id;
        out.push_back(c);
    }
    // dim/index of the cotypes as printed
    static const std::pair<int, int> printed[] = {{5, 3}, {4, 2}, {3, 2}, {3, 1}, {2, 1}};
    for (auto& c : out)
        for (std::size_t i = 0; i < 5; ++i)
            if (c.head == heads[i]) c.head_printed = printed[i];
    return out;
}

}  // namespace

std::string OrbitFamily::label_template() const
{
    std::string s = head;
    for (const auto& r : rest) s += " + " + r;
    return s;
}

bool OrbitFamily::uses(const std::string& slot) const
{
    return label_template().find("{" + slot + "}") != std::string::npos;
}

const std::vector<OrbitFamily>& enumerate_families(Side side)
{
    static const std::vector<OrbitFamily> adjoint = build_adjoint();
    static const std::vector<OrbitFamily> coadjoint = build_coadjoint();
    return side == Side::Adjoint ? adjoint : coadjoint;
}

const OrbitFamily& family_by_id(const std::string& id)
{
    for (Side s : {Side::Adjoint, Side::Coadjoint})
        for (const auto& f : enumerate_families(s))
            if (f.id == id) return f;
    fail(ErrorCode::ParseError, "unknown family id '" + id + "'");
}

MeasuredFamily measure_family(const OrbitFamily& f)
{
    std::string label = instantiate(f.label_template(), {});
    MeasuredFamily m;
    TypeMultiset rest;
    if (f.side == Side::Adjoint) {
        AdjointOrbitLabel l = AdjointOrbitLabel::parse(label);
        m.head = multiset_dim_index(l.distinguished.underlying());
        rest = l.rest;
    } else {
        CoadjointOrbitLabel l = CoadjointOrbitLabel::parse(label);
        m.head = CoadjointOrbitLabel{l.cotype, {}}.dim_index();
        rest = l.rest;
    }
    m.rest = multiset_dim_index(rest);
    for (const auto& t : rest.items()) m.rest_summands.push_back(label_dim_index(t));
    return m;
}

const std::vector<PairListRow>& dimension_index_pairs()
{
    using P = std::pair<int, int>;
    static const std::vector<PairListRow> rows = {
        {{5, 3}, {{P{1, 1}}}},
        {{4, 2}, {{P{2, 2}}, {P{1, 1}, P{1, 1}}}},
        {{3, 2}, {{P{3, 2}}, {P{2, 2}, P{1, 0}}, {P{2, 1}, P{1, 1}}, {P{1, 1}, P{1, 1}, P{1, 0}}}},
        {{3, 1}, {{P{2, 2}, P{1, 1}}, {P{1, 1}, P{1, 1}, P{1, 1}}}},
        {{2, 1},
         {{P{3, 2}, P{1, 1}},
          {P{2, 1}, P{1, 1}, P{1, 1}},
          {P{2, 2}, P{1, 1}, P{1, 0}},
          {P{2, 2}, P{2, 1}},
          {P{1, 1}, P{1, 1}, P{1, 1}, P{1, 0}}}},
    };
    return rows;
}

// ---------------------------------------------------------------------------
// Matching

namespace {

std::string erase_data(const std::string& token)
{
    static const std::regex data(R"((mu2=|a=|b=)[^,)}]*)");
    static const std::regex cq(R"(\(CQ [^)]*\))");
    return std::regex_replace(std::regex_replace(token, data, "$1*"), cq, "(CQ *)");
}

std::vector<std::string> shape(const std::string& label)
{
    std::vector<std::string> toks = split_tokens(label);
    for (auto& t : toks) t = erase_data(t);
    std::sort(toks.begin() + 1, toks.end());
    return toks;
}

std::string match(Side side, const std::string& label)
{
    std::vector<std::string> s = shape(label);
    for (const auto& f : enumerate_families(side))
        if (shape(instantiate(f.label_template(), {})) == s) return f.id;
    fail(ErrorCode::NoFamilyMatch, "no family matches " + label);
}

}  // namespace

std::string match_family(const AdjointOrbitLabel& label) { return match(Side::Adjoint, label.str()); }
std::string match_family(const CoadjointOrbitLabel& label) { return match(Side::Coadjoint, label.str()); }

PoincareAdjointResult classify_poincare(const Matrix& y)
{
    AdjointTriple t{poincare_k(), y, unit_vector(6, 5)};
    AdjointOrbitLabel l = classify_adjoint(t);
    return {l, match_family(l)};
}

PoincareAdjointResult classify_poincare(const Matrix& x, const Vec& translation)
{
    return classify_poincare(embed_semidirect(x, translation, lorentz_g()).y);
}

PoincareCoadjointResult classify_poincare(const CoTuple& t)
{
    if (t.gram.rows() != 6) fail(ErrorCode::ShapeMismatch, "Poincare tuples are 6-dimensional");
    Signature s = signature_index(t.gram);
    if (s.negatives != 4 || s.positives != 2) fail(ErrorCode::InconsistentSignature, "form must have signature (4,2)");
    CoadjointOrbitLabel l = classify_cotuple(t);
    return {l, match_family(l)};
}

PoincareCoadjointResult classify_poincare(const Functional& f)
{
    if (f.little_gram != lorentz_g()) fail(ErrorCode::ShapeMismatch, "little Gram must be diag(-1,-1,-1,1)");
    return classify_poincare(functional_to_tuple(f));
}

Matrix example_normal_form(const Rational& alpha)
{
    if (alpha <= 0) fail(ErrorCode::ParseError, "alpha must be positive");
    Rational ia = 1 / alpha;
    Rational h(1, 2);
    return Matrix{
        {0, 0, 0, 0, 0, 0},
        {-ia, 0, -h, 0, 0, 0},
        {0, h, 0, 0, h, 0},
        {0, 0, 0, 0, 0, 0},
        {-ia, 0, h, 0, 0, 0},
        {0, -ia, 0, 0, ia, 0},
    };
}

// ---------------------------------------------------------------------------
// Catalog

Matrix little_lorentz_element(const Vec& z, const Vec& b)
{
    Matrix y(4, 4);
    y(0, 1) = -z[2];
    y(0, 2) = z[1];
    y(1, 0) = z[2];
    y(1, 2) = -z[0];
    y(2, 0) = -z[1];
    y(2, 1) = z[0];
    for (std::size_t i = 0; i < 3; ++i) {
        y(i, 3) = b[i];
        y(3, i) = b[i];
    }
    return y;
}

std::vector<CatalogEntry> normal_form_catalog(const FamilyParams& p)
{
    ExactScalar mu = ExactScalar::sqrt(p.mu2);
    ExactScalar al = ExactScalar::sqrt(p.a);
    ExactScalar be = ExactScalar::sqrt(p.b);
    ExactScalar r = ExactScalar::sqrt(Rational(1, 2));
    auto e3 = [](std::size_t i, const ExactScalar& s) {
        Vec v(3);
        v[i - 1] = s;
        return v;
    };
    auto e4 = [](std::size_t i, const ExactScalar& s) {
        Vec v(4);
        v[i - 1] = s;
        return v;
    };
    Vec zero3(3), zero4(4);
    Vec lightlike_minus(4), lightlike_plus(4);
    lightlike_minus[0] = -r;
    lightlike_minus[3] = r;
    lightlike_plus[0] = r;
    lightlike_plus[3] = r;

    struct Raw {
        Vec z, b, v;
    };
    std::vector<Raw> raw = {
        {e3(3, -(mu * r)), e3(2, mu * r), lightlike_minus},
        {e3(1, be), zero3, lightlike_plus},
        {zero3, zero3, lightlike_plus},
        {e3(1, r), e3(3, r), e4(1, mu)},
        {e3(1, be), zero3, e4(1, mu)},
        {zero3, e3(2, al), e4(1, mu)},
        {zero3, zero3, e4(1, mu)},
        {e3(3, be), zero3, e4(4, mu)},
        {zero3, zero3, e4(4, mu)},
        {e3(3, r), e3(2, r), zero4},
        {e3(3, be), e3(3, al), zero4},
        {e3(3, be), zero3, zero4},
        {zero3, e3(1, al), zero4},
        {zero3, zero3, zero4},
    };

    Matrix g = lorentz_g();
    std::vector<CatalogEntry> out;
    const auto& families = enumerate_families(Side::Coadjoint);
    for (std::size_t i = 0; i < raw.size(); ++i) {
        CatalogEntry e;
        e.number = static_cast<int>(i) + 1;
        e.family = families[i].id;
        e.z = raw[i].z;
        e.b = raw[i].b;
        e.ytilde = little_lorentz_element(e.z, e.b);
        e.v = raw[i].v;
        Vec gv = g * e.v;
        Matrix y(6, 6);
        y.set_block(1, 1, e.ytilde);
        for (std::size_t k = 0; k < 4; ++k) {
            y(0, 1 + k) = -gv[k];
            y(1 + k, 5) = e.v[k];
        }
        e.tuple = {poincare_k(), y, unit_vector(6, 5)};
        e.expected = CoadjointOrbitLabel::parse(instantiate(families[i].label_template(), p));
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace orbit
