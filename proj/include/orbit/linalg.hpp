#pragma once

#include "orbit/matrix.hpp"

#include <optional>

namespace orbit {

struct Echelon {
    Matrix reduced;                   // reduced row echelon form
    std::vector<std::size_t> pivots;  // pivot column per nonzero row
};

/// Gauss-Jordan elimination; pivots are normalized to 1. Pivot rows are
/// chosen to keep surd-free entries in the hot path when possible.
Echelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Basis of the kernel, as columns.
Matrix nullspace(const Matrix& m);

struct Solution {
    Vec particular;
    Matrix kernel;
};
/// One solution of m x = rhs plus the kernel of m, or nullopt if inconsistent.
std::optional<Solution> solve(const Matrix& m, const Vec& rhs);
/// Like solve but throws Inconsistent.
Solution solve_or_throw(const Matrix& m, const Vec& rhs);

ExactScalar det(const Matrix& m);
Matrix inverse(const Matrix& m);

/// det(xI - m), division free (Berkowitz). Throws NotRational if a
/// coefficient is irrational.
Poly char_poly(const Matrix& m);
/// f(m) by Horner's rule.
Matrix eval_poly(const Poly& f, const Matrix& m);

/// Basis of ker f(y)^k where k is the multiplicity of f in char_poly(y).
/// Throws NotAFactor if f does not divide the characteristic polynomial.
Matrix generalized_eigenspace(const Matrix& y, const Poly& f);

/// For the invariant subspace spanned by the columns of basis, the matrix M
/// with y * basis = basis * M. Throws Inconsistent if not invariant.
Matrix restrict_to(const Matrix& y, const Matrix& basis);

/// Column basis of the span of the given columns.
Matrix column_basis(const Matrix& m);

enum class MembershipKind { Algebra, Group };

/// m^T gram + gram m == 0
bool in_algebra(const Matrix& m, const Matrix& gram);
/// m^T gram m == gram
bool in_group(const Matrix& m, const Matrix& gram);
/// Algebra: also m v = 0. Group: also m v = v.
bool in_stabilizer(const Matrix& m, const Matrix& gram, const Vec& v, MembershipKind kind);

}  // namespace orbit
