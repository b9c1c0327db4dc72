#pragma once

#include "orbit/typeclass.hpp"

#include <cstdint>
#include <optional>

namespace orbit {

struct AdjointTriple {
    Matrix gram;
    Matrix y;
    Vec v0;
};

struct DistinguishedLabel {
    enum class Case { One, Two, Three };
    Case kind = Case::Three;
    int height = 0;
    int sign = 0;     // Case One only
    Rational mu2;     // Case One only, positive

    static DistinguishedLabel one(int h, int sign, const Rational& mu2);
    static DistinguishedLabel two(int h);
    static DistinguishedLabel three(int h);

    int dim() const { return kind == Case::One ? height + 1 : 2 * (height + 1); }
    /// sign * mu2, or 0.
    Rational parameter() const;
    /// The pair types underneath the triple.
    TypeMultiset underlying() const;
    ExactScalar modulus() const { return ExactScalar::sqrt(mu2); }
    std::string str() const;
    friend bool operator==(const DistinguishedLabel& a, const DistinguishedLabel& b);
};

struct AdjointOrbitLabel {
    DistinguishedLabel distinguished;
    TypeMultiset rest;

    std::string str() const;
    static AdjointOrbitLabel parse(const std::string& s);
    /// (dim, index) from synthesized blocks.
    std::pair<int, int> dim_index() const;
    friend bool operator==(const AdjointOrbitLabel& a, const AdjointOrbitLabel& b)
    {
        return a.distinguished == b.distinguished && a.rest == b.rest;
    }
};

void validate_triple(const AdjointTriple& t);
/// Largest h >= 0 with v0 in the image of y^h.
int distinguished_height(const AdjointTriple& t);

struct ParameterCheckStats {
    std::uint64_t checks = 0;
    std::uint64_t failures = 0;
};
/// gamma(w, v0) for any w with y^h w = v0. Verifies the value does not depend
/// on w; throws ParameterNotSingleton otherwise.
Rational parameter_of(const AdjointTriple& t, int h);
ParameterCheckStats parameter_check_stats();

AdjointOrbitLabel classify_adjoint(const AdjointTriple& t);

struct DistinguishedSplit {
    Matrix span;         // chain basis: w, Yw, ..., Y^h w [, z, ..., Y^h z]
    Matrix complement;   // orthocomplement of span
    Matrix span_gram;
    ExactScalar det_gram;
    ExactScalar antidiagonal_product;
};
DistinguishedSplit split_distinguished(const AdjointTriple& t);

/// Block representative re-presented over a standard Gram with v0 the last
/// basis vector. target is (dim, index) and must agree with the label.
AdjointTriple synthesize_adjoint(const AdjointOrbitLabel& label,
                                 std::optional<std::pair<int, int>> target = std::nullopt);
/// Block-diagonal representative before standardization.
AdjointTriple synthesize_adjoint_blocks(const AdjointOrbitLabel& label);
/// Same triple over a standard Gram (diag(-I, I) middle) with v0 = e_last.
AdjointTriple standardized(const AdjointTriple& t);

/// (B xi B^-1, -B xi B^-1 v + B w)
std::pair<Matrix, Vec> semidirect_adjoint_action(const Matrix& b, const Vec& v, const Matrix& xi, const Vec& w);
/// [[0,0,0],[v,X,0],[0,-v^T G,0]] over the standard Gram, v0 = e_{n+1}.
AdjointTriple embed_semidirect(const Matrix& x, const Vec& vtil, const Matrix& g);
/// [[1,0,0],[d,B,0],[-d^T G d/2, -d^T G B, 1]]
Matrix embed_group_element(const Matrix& b, const Vec& d, const Matrix& g);

/// w (gram v)^T - v (gram w)^T
Matrix shear_map(const Vec& w, const Vec& v, const Matrix& gram);

/// Cayley transform of a random combination of shears inside v0^perp: a
/// rational element of the group fixing v0. Deterministic per seed.
Matrix random_stabilizer_element(std::uint64_t seed, const Matrix& gram, const Vec& v0);
/// Cayley transform of a random algebra element; does not fix any vector.
Matrix random_group_element(std::uint64_t seed, const Matrix& gram);
/// gram^-1 P^T gram, the inverse of a group element.
Matrix group_inverse(const Matrix& p, const Matrix& gram);
AdjointTriple conjugate(const AdjointTriple& t, const Matrix& p);

}  // namespace orbit
