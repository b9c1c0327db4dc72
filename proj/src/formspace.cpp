#include "orbit/formspace.hpp"

#include "orbit/error.hpp"

namespace orbit {

void require_symmetric(const Matrix& gram)
{
    if (!gram.square()) fail(ErrorCode::ShapeMismatch, "Gram matrix must be square");
    if (gram != gram.transpose()) fail(ErrorCode::NotSymmetric, "Gram matrix is not symmetric");
}

DiagonalBasis diagonalize(const Matrix& gram)
{
    require_symmetric(gram);
    std::size_t n = gram.rows();
    std::vector<Vec> pending;
    for (std::size_t i = 0; i < n; ++i) pending.push_back(unit_vector(n, i));

    DiagonalBasis out;
    std::vector<Vec> picked;
    while (!pending.empty()) {
        std::size_t pick = pending.size();
        ExactScalar d;
        for (std::size_t i = 0; i < pending.size(); ++i) {
            ExactScalar q = bilinear(gram, pending[i], pending[i]);
            if (!q.is_zero()) {
                pick = i;
                d = q;
                break;
            }
        }
        if (pick == pending.size()) {
            for (std::size_t i = 0; i < pending.size() && pick == pending.size(); ++i) {
                for (std::size_t j = i + 1; j < pending.size(); ++j) {
                    if (!bilinear(gram, pending[i], pending[j]).is_zero()) {
                        pending[i] = vec_add(pending[i], pending[j]);
                        pick = i;
                        d = bilinear(gram, pending[i], pending[i]);
                        break;
                    }
                }
            }
        }
        if (pick == pending.size()) {
            out.radical = static_cast<int>(pending.size());
            break;
        }
        Vec p = pending[pick];
        pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(pick));
        Vec gp = gram * p;
        ExactScalar dinv = d.inverse();
        for (auto& u : pending) {
            ExactScalar c;
            for (std::size_t k = 0; k < n; ++k)
                if (!u[k].is_zero() && !gp[k].is_zero()) c += u[k] * gp[k];
            if (!c.is_zero()) u = vec_sub(u, vec_scale(c * dinv, p));
        }
        picked.push_back(std::move(p));
        out.diag.push_back(d);
    }
    out.basis = Matrix::from_columns(picked, n);
    return out;
}

Inertia inertia(const Matrix& gram)
{
    DiagonalBasis d = diagonalize(gram);
    Inertia in;
    for (const auto& x : d.diag) (x.sign() < 0 ? in.negatives : in.positives)++;
    in.zeros = d.radical;
    return in;
}

Signature signature_index(const Matrix& gram)
{
    Inertia in = inertia(gram);
    if (in.zeros != 0)
        fail(ErrorCode::Degenerate, "form has a radical of dimension " + std::to_string(in.zeros));
    return {in.negatives, in.positives};
}

Matrix orthocomplement(const Matrix& gram, const Matrix& subspace)
{
    Matrix restricted = subspace.transpose() * gram * subspace;
    if (rank(restricted) != subspace.cols())
        fail(ErrorCode::DegenerateRestriction, "form restricted to the subspace is degenerate");
    return nullspace(subspace.transpose() * gram);
}

Matrix hyperbolic_split(const Matrix& gram, const Vec& v)
{
    require_symmetric(gram);
    if (v.size() != gram.rows()) fail(ErrorCode::ShapeMismatch, "vector length does not match the form");
    if (vec_is_zero(v)) fail(ErrorCode::ZeroVector, "vector is zero");
    if (!bilinear(gram, v, v).is_zero()) fail(ErrorCode::NotIsotropic, "vector is not isotropic");
    std::size_t n = gram.rows();
    Vec gv = gram * v;
    std::size_t pick = n;
    for (std::size_t i = 0; i < n; ++i) {
        if (!gv[i].is_zero() && (pick == n || gv[i].terms().size() < gv[pick].terms().size())) pick = i;
    }
    if (pick == n) fail(ErrorCode::Degenerate, "isotropic vector lies in the radical");
    Vec u = unit_vector(n, pick);
    ExactScalar c = gv[pick];
    ExactScalar uu = gram(pick, pick);
    // e0 = u/c - (gamma(u,u) / (2 c^2)) v
    ExactScalar cinv = c.inverse();
    Vec e0 = vec_sub(vec_scale(cinv, u), vec_scale(uu * cinv * cinv * ExactScalar(Rational(1, 2)), v));
    Matrix plane = Matrix::from_columns({e0, v}, n);
    Matrix middle = orthocomplement(gram, plane);
    std::vector<Vec> cols{e0};
    for (std::size_t j = 0; j < middle.cols(); ++j) cols.push_back(middle.column(j));
    cols.push_back(v);
    return Matrix::from_columns(cols, n);
}

Matrix lorentz_block(int negatives, int positives)
{
    std::size_t n = static_cast<std::size_t>(negatives + positives);
    Matrix g(n, n);
    for (std::size_t i = 0; i < n; ++i) g(i, i) = static_cast<long>(i) < negatives ? -1 : 1;
    return g;
}

Matrix standard_form(const Matrix& g)
{
    std::size_t m = g.rows();
    Matrix k(m + 2, m + 2);
    k(0, m + 1) = 1;
    k(m + 1, 0) = 1;
    k.set_block(1, 1, g);
    return k;
}

Standardized standardize_with_isotropic(const Matrix& gram, const Vec& v)
{
    Inertia in = inertia(gram);
    if (in.zeros != 0) fail(ErrorCode::Degenerate, "form is degenerate");
    if (in.negatives == 0 || in.positives == 0) fail(ErrorCode::Definite, "definite form has no isotropic vectors");
    Matrix split = hyperbolic_split(gram, v);
    std::size_t n = gram.rows();
    std::size_t m = n - 2;
    Matrix middle = split.block(0, 1, n, m);
    Matrix mid_gram = middle.transpose() * gram * middle;
    DiagonalBasis d = diagonalize(mid_gram);

    std::vector<Vec> neg, pos;
    for (std::size_t i = 0; i < d.diag.size(); ++i) {
        Rational q = d.diag[i].rational();
        Rational aq = q < 0 ? Rational(-q) : q;
        ExactScalar scale = ExactScalar::sqrt(Rational(1) / aq);
        Vec col = vec_scale(scale, middle * d.basis.column(i));
        (q < 0 ? neg : pos).push_back(std::move(col));
    }
    std::vector<Vec> cols{split.column(0)};
    for (auto& c : neg) cols.push_back(std::move(c));
    for (auto& c : pos) cols.push_back(std::move(c));
    cols.push_back(split.column(n - 1));

    Standardized out;
    out.basis = Matrix::from_columns(cols, n);
    out.g = lorentz_block(static_cast<int>(neg.size()), static_cast<int>(pos.size()));
    out.k_std = standard_form(out.g);
    return out;
}

}  // namespace orbit
