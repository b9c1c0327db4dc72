#include "orbit/serialize.hpp"

#include "orbit/error.hpp"

namespace orbit {

Json to_json(const ExactScalar& s)
{
    if (s.is_rational()) return rational_str(s.rational());
    Json out = Json::array();
    for (const auto& t : s.terms())
        out.push_back({{"radicand", t.radicand.get_str()}, {"coeff", rational_str(t.coeff)}});
    return out;
}

Json to_json(const Vec& v)
{
    Json out = Json::array();
    for (const auto& x : v) out.push_back(to_json(x));
    return out;
}

Json to_json(const Matrix& m)
{
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
    return out;
}

namespace {

ExactScalar parse_term(const std::string& t)
{
    std::string s = t;
    bool neg = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        neg = s[0] == '-';
        s = s.substr(1);
    }
    ExactScalar out;
    auto at = s.find("sqrt(");
    if (at == std::string::npos) {
        out = parse_rational(s);
    } else {
        if (s.back() != ')') fail(ErrorCode::ParseError, "bad surd term '" + t + "'");
        Rational r = parse_rational(s.substr(at + 5, s.size() - at - 6));
        if (r < 0) fail(ErrorCode::ParseError, "negative radicand in '" + t + "'");
        Rational c = 1;
        if (at > 0) {
            if (s[at - 1] != '*') fail(ErrorCode::ParseError, "bad surd term '" + t + "'");
            c = parse_rational(s.substr(0, at - 1));
        }
        out = ExactScalar(c) * ExactScalar::sqrt(r);
    }
    return neg ? -out : out;
}

}  // namespace

ExactScalar parse_scalar(const std::string& text)
{
    std::string s;
    for (char c : text)
        if (c != ' ') s.push_back(c);
    if (s.empty()) fail(ErrorCode::ParseError, "empty scalar");
    ExactScalar sum;
    std::size_t start = 0;
    int depth = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i < s.size()) {
            char c = s[i];
            if (c == '(') ++depth;
            if (c == ')') --depth;
            bool split = depth == 0 && i > start && (c == '+' || c == '-') && s[i - 1] != '*';
            if (!split) continue;
        }
        sum += parse_term(s.substr(start, i - start));
        start = i;
    }
    return sum;
}

ExactScalar scalar_from_json(const Json& j)
{
    if (j.is_string()) return parse_scalar(j.get<std::string>());
    if (j.is_number_integer()) return ExactScalar(Rational(j.get<long>()));
    if (j.is_number()) return ExactScalar(parse_rational(j.dump()));
    if (j.is_array()) {
        ExactScalar sum;
        for (const auto& t : j) {
            if (!t.is_object() || !t.contains("radicand") || !t.contains("coeff"))
                fail(ErrorCode::ParseError, "term must be {radicand, coeff}");
            Rational r = parse_rational(t["radicand"].is_string() ? t["radicand"].get<std::string>()
                                                                  : t["radicand"].dump());
            Rational c = parse_rational(t["coeff"].is_string() ? t["coeff"].get<std::string>() : t["coeff"].dump());
            if (r < 0) fail(ErrorCode::ParseError, "negative radicand");
            sum += ExactScalar(c) * ExactScalar::sqrt(r);
        }
        return sum;
    }
    fail(ErrorCode::ParseError, "not a scalar: " + j.dump());
}

Vec vec_from_json(const Json& j)
{
    if (!j.is_array()) fail(ErrorCode::ParseError, "vector must be an array");
    Vec v;
    for (const auto& x : j) v.push_back(scalar_from_json(x));
    return v;
}

Matrix matrix_from_json(const Json& j)
{
    if (!j.is_array() || j.empty()) fail(ErrorCode::ParseError, "matrix must be a nonempty array of rows");
    std::size_t cols = 0;
    std::vector<Vec> rows;
    for (const auto& r : j) {
        Vec row = vec_from_json(r);
        if (rows.empty()) cols = row.size();
        if (row.size() != cols) fail(ErrorCode::ParseError, "ragged matrix");
        rows.push_back(std::move(row));
    }
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t k = 0; k < cols; ++k) m(i, k) = rows[i][k];
    return m;
}

namespace {

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) fail(ErrorCode::ParseError, std::string("missing field '") + key + "'");
    return j.at(key);
}

}  // namespace

Json to_json(const AdjointTriple& t) { return {{"gram", to_json(t.gram)}, {"Y", to_json(t.y)}, {"v0", to_json(t.v0)}}; }

AdjointTriple triple_from_json(const Json& j)
{
    return {matrix_from_json(field(j, "gram")), matrix_from_json(field(j, "Y")), vec_from_json(field(j, "v0"))};
}

Json to_json(const CoTuple& t) { return {{"gram", to_json(t.gram)}, {"Y", to_json(t.y)}, {"v", to_json(t.v)}}; }

CoTuple cotuple_from_json(const Json& j)
{
    return {matrix_from_json(field(j, "gram")), matrix_from_json(field(j, "Y")), vec_from_json(field(j, "v"))};
}

Json to_json(const Functional& f)
{
    return {{"M", to_json(f.m)}, {"p", to_json(f.p)}, {"littleGram", to_json(f.little_gram)}};
}

Functional functional_from_json(const Json& j)
{
    return {matrix_from_json(field(j, "M")), vec_from_json(field(j, "p")), matrix_from_json(field(j, "littleGram"))};
}

Json decimal_json(const ExactScalar& s) { return s.to_double(); }

Json decimal_json(const Vec& v)
{
    Json out = Json::array();
    for (const auto& x : v) out.push_back(x.to_double());
    return out;
}

Json decimal_json(const Matrix& m)
{
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(decimal_json(m.row(i)));
    return out;
}

}  // namespace orbit
