#pragma once

#include "orbit/adjoint.hpp"

namespace orbit {

struct CoTuple {
    Matrix gram;
    Matrix y;
    Vec v;
};

struct CotypeLabel {
    enum class Kind { Zero, OneDim, EvenAffine, OddAffine };
    Kind kind = Kind::Zero;
    int n = 0;       // dimension
    int sign = 0;    // OneDim, OddAffine
    Rational q;      // OneDim: alpha^2, OddAffine: mu^2

    static CotypeLabel zero() { return {}; }
    static CotypeLabel one_dim(int sign, const Rational& alpha2);
    static CotypeLabel even_affine(int n);
    static CotypeLabel odd_affine(int n, int sign, const Rational& mu2);

    bool affine() const { return kind == Kind::EvenAffine || kind == Kind::OddAffine; }
    /// The cotype whose little cotype is this one.
    CotypeLabel lifted() const;
    std::string str() const;
    friend bool operator==(const CotypeLabel& a, const CotypeLabel& b);
};

struct CoadjointOrbitLabel {
    CotypeLabel cotype;
    TypeMultiset rest;

    std::string str() const;
    static CoadjointOrbitLabel parse(const std::string& s);
    /// (dim, index) measured on the synthesized blocks.
    std::pair<int, int> dim_index() const;
    friend bool operator==(const CoadjointOrbitLabel& a, const CoadjointOrbitLabel& b)
    {
        return a.cotype == b.cotype && a.rest == b.rest;
    }
};

void validate_cotuple(const CoTuple& t);

/// (gram, P (Y + L_{w,v}) P^-1, P v)
CoTuple apply_cotuple_equivalence(const CoTuple& t, const Matrix& p, const Vec& w);

/// Tuple on the middle block of a hyperbolic split [e0, middle, v]; rational
/// whenever the input is. Throws CornerNotZero if the block shape fails.
CoTuple little_cotype(const CoTuple& t);

CoadjointOrbitLabel classify_cotuple(const CoTuple& t);

/// Block-diagonal representative; v is the last vector of the cotype block.
CoTuple synthesize_cotype_blocks(const CoadjointOrbitLabel& label);
/// Affine cotypes are re-presented over a standard Gram with v = e_last.
CoTuple synthesize_cotype(const CoadjointOrbitLabel& label,
                          std::optional<std::pair<int, int>> target = std::nullopt);

/// Restriction of Z -> tr(YZ) to the stabilizer of e_last, as
/// tr(M X) + p . z for Z = embed(X, z).
struct Functional {
    Matrix m;
    Vec p;
    Matrix little_gram;
};
Functional tuple_to_functional(const CoTuple& t);
CoTuple functional_to_tuple(const Functional& f);
/// tr(M X) + p . z
ExactScalar evaluate_functional(const Functional& f, const Matrix& x, const Vec& z);

/// Block sizes of the nilpotent part on each eigenvalue class, keyed by the
/// class polynomial.
using JordanType = std::map<std::string, std::vector<int>>;
JordanType jordan_type(const Matrix& y);

/// Partner under the adjoint/coadjoint correspondence. Both directions run a
/// synthesize-and-measure check of dim, index, modulus and Jordan type.
CoadjointOrbitLabel adjoint_to_coadjoint(const AdjointOrbitLabel& label);
AdjointOrbitLabel coadjoint_to_adjoint(const CoadjointOrbitLabel& label);

}  // namespace orbit
