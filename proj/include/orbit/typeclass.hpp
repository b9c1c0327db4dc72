#pragma once

#include "orbit/formspace.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace orbit {

/// Declaration order is the canonical token order.
enum class EigenKind { CQ, IP, RP, Zero };

struct EigenClass {
    EigenKind kind = EigenKind::Zero;
    Rational datum;   // RP: a (eigenvalues +-sqrt a), IP: b (eigenvalues +-i sqrt b)
    Rational c2, c0;  // CQ: x^4 + c2 x^2 + c0

    static EigenClass zero() { return {}; }
    static EigenClass rp(const Rational& a);
    static EigenClass ip(const Rational& b);
    static EigenClass cq(const Rational& c2, const Rational& c0);

    /// x, x^2 - a, x^2 + b or the even quartic.
    Poly polynomial() const;
    int degree() const { return polynomial().degree(); }
    friend bool operator==(const EigenClass& a, const EigenClass& b);
};

/// Indecomposable type. Zero with odd height is the paired type D_m(0,0).
struct TypeLabel {
    EigenClass cls;
    int height = 0;
    int sign = 0;  // +-1 for Zero with even height and for IP, else 0

    static TypeLabel zero(int height, int sign);
    static TypeLabel zero_pair(int height);

    bool needs_sign() const;
    int dim() const;
    std::string str() const;
    friend bool operator==(const TypeLabel& a, const TypeLabel& b);
};

/// Canonical order: kind, height descending, sign (- first), datum ascending.
bool canonical_less(const TypeLabel& a, const TypeLabel& b);
void validate_type(const TypeLabel& t);
TypeLabel parse_type_token(const std::string& token);

/// Sorted multiset with repetition.
class TypeMultiset {
public:
    TypeMultiset() = default;
    TypeMultiset(std::initializer_list<TypeLabel> items);

    void add(const TypeLabel& t, int count = 1);
    void add_all(const TypeMultiset& o);
    /// Throws UnderlyingTypeMissing when t is absent.
    void remove_one(const TypeLabel& t);
    int count(const TypeLabel& t) const;
    const std::vector<TypeLabel>& items() const { return items_; }
    bool empty() const { return items_.empty(); }
    int dim() const;
    /// " + " joined canonical tokens; empty string for the empty multiset.
    std::string str() const;
    friend bool operator==(const TypeMultiset& a, const TypeMultiset& b) { return a.items_ == b.items_; }
    friend bool operator!=(const TypeMultiset& a, const TypeMultiset& b) { return !(a == b); }

private:
    std::vector<TypeLabel> items_;
};

/// Split a label string on " + " at bracket depth zero.
std::vector<std::string> split_tokens(const std::string& s);
TypeMultiset parse_type_multiset(const std::vector<std::string>& tokens);

struct Pair {
    Matrix y;
    Matrix gram;
};

struct PrimaryPart {
    EigenClass cls;
    int multiplicity = 0;  // of the class polynomial in char_poly
    Matrix basis;          // columns in ambient coordinates
    Matrix y;              // restriction
    Matrix gram;           // restricted form
};

EigenClass eigen_class_of(const Poly& class_poly);
std::vector<PrimaryPart> primary_split(const Matrix& y, const Matrix& gram);

struct JordanChevalley {
    Matrix s;
    Matrix n;
};
JordanChevalley jordan_chevalley(const Matrix& y);
/// Newton iteration with a known squarefree annihilator of the semisimple part.
JordanChevalley jordan_chevalley_with(const Matrix& y, const Poly& radical);

/// Block size -> number of blocks. Throws NotNilpotent.
std::map<int, int> nilpotent_block_structure(const Matrix& n);

/// Signature (negatives, positives) of the quotient form at height m on one
/// primary part. Zero class, odd m: the form is skew and (d, d) is returned
/// with d = 2 x (number of block pairs).
Signature induced_form_signs(const PrimaryPart& part, const JordanChevalley& jc, int m);

TypeMultiset classify_pair(const Matrix& y, const Matrix& gram);
Pair synthesize_type(const TypeLabel& label);
/// Synthesize once and measure; cached.
std::pair<int, int> label_dim_index(const TypeLabel& label);
/// Block-diagonal sum of synthesized types.
Pair synthesize_multiset(const TypeMultiset& types);
std::pair<int, int> multiset_dim_index(const TypeMultiset& types);

}  // namespace orbit
