#pragma once

#include "orbit/poincare.hpp"

#include "json.hpp"

namespace orbit {

using Json = nlohmann::json;

/// Rational entries are "p/q" strings; anything with a surd is a list of
/// {radicand, coeff} terms.
Json to_json(const ExactScalar& s);
Json to_json(const Matrix& m);
Json to_json(const Vec& v);

/// Accepts a string ("p/q", decimal, or the printed surd form such as
/// "1/2*sqrt(2) - 3"), a number, or a term list. Throws ParseError.
ExactScalar scalar_from_json(const Json& j);
Matrix matrix_from_json(const Json& j);
Vec vec_from_json(const Json& j);
/// Same as parse_rational but also accepts "a*sqrt(r) + b" style text.
ExactScalar parse_scalar(const std::string& text);

/// {"gram","Y","v0"}
Json to_json(const AdjointTriple& t);
AdjointTriple triple_from_json(const Json& j);
/// {"gram","Y","v"}
Json to_json(const CoTuple& t);
CoTuple cotuple_from_json(const Json& j);
/// {"M","p","littleGram"}
Json to_json(const Functional& f);
Functional functional_from_json(const Json& j);

/// Approximate doubles, for the --decimal output only.
Json decimal_json(const ExactScalar& s);
Json decimal_json(const Matrix& m);
Json decimal_json(const Vec& v);

}  // namespace orbit
