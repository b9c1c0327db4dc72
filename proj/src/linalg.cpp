#include "orbit/linalg.hpp"

#include "orbit/error.hpp"

#include <utility>

namespace orbit {

namespace {

std::size_t pivot_cost(const ExactScalar& x) { return x.terms().size(); }

void swap_rows(Matrix& a, std::size_t i, std::size_t j)
{
    if (i == j) return;
    for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
}

}  // namespace

Echelon rref(const Matrix& m)
{
    Echelon e{m, {}};
    Matrix& a = e.reduced;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t best = a.rows();
        for (std::size_t i = row; i < a.rows(); ++i) {
            if (a(i, col).is_zero()) continue;
            if (best == a.rows() || pivot_cost(a(i, col)) < pivot_cost(a(best, col))) best = i;
            if (pivot_cost(a(best, col)) == 1 && a(best, col).is_rational()) break;
        }
        if (best == a.rows()) continue;
        swap_rows(a, row, best);
        ExactScalar inv = a(row, col).inverse();
        for (std::size_t j = col; j < a.cols(); ++j)
            if (!a(row, j).is_zero()) a(row, j) = a(row, j) * inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row || a(i, col).is_zero()) continue;
            ExactScalar f = a(i, col);
            for (std::size_t j = col; j < a.cols(); ++j)
                if (!a(row, j).is_zero()) a(i, j) -= f * a(row, j);
        }
        e.pivots.push_back(col);
        ++row;
    }
    return e;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Matrix nullspace(const Matrix& m)
{
    Echelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec v(m.cols());
        v[f] = 1;
        for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = -e.reduced(k, f);
        basis.push_back(std::move(v));
    }
    return Matrix::from_columns(basis, m.cols());
}

std::optional<Solution> solve(const Matrix& m, const Vec& rhs)
{
    if (rhs.size() != m.rows()) fail(ErrorCode::ShapeMismatch, "solve: rhs length");
    Matrix aug = hstack(m, Matrix::column_vector(rhs));
    Echelon e = rref(aug);
    if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
    Solution s;
    s.particular.assign(m.cols(), ExactScalar());
    for (std::size_t k = 0; k < e.pivots.size(); ++k) s.particular[e.pivots[k]] = e.reduced(k, m.cols());
    s.kernel = nullspace(m);
    return s;
}

Solution solve_or_throw(const Matrix& m, const Vec& rhs)
{
    auto s = solve(m, rhs);
    if (!s) fail(ErrorCode::Inconsistent, "linear system has no solution");
    return *std::move(s);
}

ExactScalar det(const Matrix& m)
{
    if (!m.square()) fail(ErrorCode::ShapeMismatch, "det of non-square matrix");
    Matrix a = m;
    ExactScalar d = 1;
    std::size_t n = a.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t best = n;
        for (std::size_t i = col; i < n; ++i) {
            if (a(i, col).is_zero()) continue;
            if (best == n || pivot_cost(a(i, col)) < pivot_cost(a(best, col))) best = i;
        }
        if (best == n) return {};
        if (best != col) {
            swap_rows(a, col, best);
            d = -d;
        }
        d *= a(col, col);
        ExactScalar inv = a(col, col).inverse();
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a(i, col).is_zero()) continue;
            ExactScalar f = a(i, col) * inv;
            for (std::size_t j = col; j < n; ++j)
                if (!a(col, j).is_zero()) a(i, j) -= f * a(col, j);
        }
    }
    return d;
}

Matrix inverse(const Matrix& m)
{
    if (!m.square()) fail(ErrorCode::ShapeMismatch, "inverse of non-square matrix");
    std::size_t n = m.rows();
    if (n == 0) return m;
    Echelon e = rref(hstack(m, Matrix::identity(n)));
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) fail(ErrorCode::Singular, "matrix is singular");
    return e.reduced.block(0, n, n, n);
}

Poly char_poly(const Matrix& a)
{
    if (!a.square()) fail(ErrorCode::ShapeMismatch, "char_poly of non-square matrix");
    std::size_t n = a.rows();
    if (n == 0) return Poly({Rational(1)});
    // Coefficients highest degree first.
    std::vector<ExactScalar> cp{ExactScalar(1), -a(n - 1, n - 1)};
    for (std::size_t kk = n - 1; kk-- > 0;) {
        std::size_t m = n - 1 - kk;
        std::vector<ExactScalar> t(m + 2);
        t[0] = 1;
        t[1] = -a(kk, kk);
        Vec x(m);
        for (std::size_t i = 0; i < m; ++i) x[i] = a(kk + 1 + i, kk);
        for (std::size_t p = 0; p < m; ++p) {
            ExactScalar dot;
            for (std::size_t j = 0; j < m; ++j)
                if (!a(kk, kk + 1 + j).is_zero() && !x[j].is_zero()) dot += a(kk, kk + 1 + j) * x[j];
            t[p + 2] = -dot;
            if (p + 1 < m) {
                Vec nx(m);
                for (std::size_t i = 0; i < m; ++i)
                    for (std::size_t j = 0; j < m; ++j)
                        if (!a(kk + 1 + i, kk + 1 + j).is_zero() && !x[j].is_zero())
                            nx[i] += a(kk + 1 + i, kk + 1 + j) * x[j];
                x = std::move(nx);
            }
        }
        std::vector<ExactScalar> next(m + 2);
        for (std::size_t i = 0; i < m + 2; ++i)
            for (std::size_t j = 0; j <= std::min(i, m); ++j)
                if (!t[i - j].is_zero() && !cp[j].is_zero()) next[i] += t[i - j] * cp[j];
        cp = std::move(next);
    }
    std::vector<Rational> coeffs(n + 1);
    for (std::size_t i = 0; i <= n; ++i) coeffs[n - i] = cp[i].rational();
    return Poly(std::move(coeffs));
}

Matrix eval_poly(const Poly& f, const Matrix& m)
{
    std::size_t n = m.rows();
    Matrix acc(n, n);
    for (int i = f.degree(); i >= 0; --i) {
        acc = acc * m;
        Rational c = f.coeff(i);
        if (c != 0)
            for (std::size_t d = 0; d < n; ++d) acc(d, d) += ExactScalar(c);
    }
    return acc;
}

Matrix generalized_eigenspace(const Matrix& y, const Poly& f)
{
    Poly cp = char_poly(y);
    int mult = 0;
    while (cp.degree() >= f.degree()) {
        auto [q, r] = divmod(cp, f);
        if (!r.is_zero()) break;
        cp = q;
        ++mult;
    }
    if (mult == 0) fail(ErrorCode::NotAFactor, f.str() + " does not divide the characteristic polynomial");
    return nullspace(power(eval_poly(f, y), mult));
}

Matrix restrict_to(const Matrix& y, const Matrix& basis)
{
    std::size_t k = basis.cols();
    Matrix img = y * basis;
    Echelon e = rref(hstack(basis, img));
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
        if (i >= k || e.pivots[i] != i) fail(ErrorCode::Inconsistent, "subspace is not invariant or basis is dependent");
    if (e.pivots.size() < k) fail(ErrorCode::Inconsistent, "basis columns are dependent");
    return e.reduced.block(0, k, k, k);
}

Matrix column_basis(const Matrix& m)
{
    Echelon e = rref(m);
    std::vector<Vec> cols;
    for (auto p : e.pivots) cols.push_back(m.column(p));
    return Matrix::from_columns(cols, m.rows());
}

bool in_algebra(const Matrix& m, const Matrix& gram)
{
    return (m.transpose() * gram + gram * m).is_zero();
}

bool in_group(const Matrix& m, const Matrix& gram) { return m.transpose() * gram * m == gram; }

bool in_stabilizer(const Matrix& m, const Matrix& gram, const Vec& v, MembershipKind kind)
{
    if (kind == MembershipKind::Algebra) return in_algebra(m, gram) && vec_is_zero(m * v);
    return in_group(m, gram) && m * v == v;
}

}  // namespace orbit
