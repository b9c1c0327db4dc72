#pragma once

#include "orbit/linalg.hpp"

namespace orbit {

struct Signature {
    int negatives = 0;  // the index
    int positives = 0;
    friend bool operator==(const Signature&, const Signature&) = default;
};

struct Inertia {
    int negatives = 0;
    int positives = 0;
    int zeros = 0;
};

struct FormSpace {
    Matrix gram;
    std::size_t dim() const { return gram.rows(); }
};

/// Exact inertia by symmetric congruence reduction.
Inertia inertia(const Matrix& gram);
/// Throws Degenerate if the form has a radical.
Signature signature_index(const Matrix& gram);
void require_symmetric(const Matrix& gram);

struct DiagonalBasis {
    Matrix basis;              // columns q_i with q_i^T gram q_j = 0 for i != j
    std::vector<ExactScalar> diag;  // q_i^T gram q_i, nonzero
    int radical = 0;
};
/// Orthogonal basis of the nondegenerate part; radical vectors are dropped
/// and counted.
DiagonalBasis diagonalize(const Matrix& gram);

/// Basis of { w : gram(w, u) = 0 for u in span(subspace) }. Throws
/// DegenerateRestriction if the restricted form is singular.
Matrix orthocomplement(const Matrix& gram, const Matrix& subspace);

/// Basis [e0, middle..., v] with e0 isotropic, gram(e0, v) = 1 and the middle
/// block orthogonal to both. Rational whenever gram and v are.
Matrix hyperbolic_split(const Matrix& gram, const Vec& v);

struct Standardized {
    Matrix basis;  // P: columns are the new basis in old coordinates
    Matrix k_std;  // P^T gram P
    Matrix g;      // middle block, diag(-1,...,-1,1,...,1)
};
/// Carry the isotropic vector v to e_{n+1} with a standard Gram matrix.
Standardized standardize_with_isotropic(const Matrix& gram, const Vec& v);

/// Standard Gram [[0,0,1],[0,G,0],[1,0,0]].
Matrix standard_form(const Matrix& g);
/// diag(-I_neg, I_pos)
Matrix lorentz_block(int negatives, int positives);

}  // namespace orbit
