#include "orbit/matrix.hpp"

#include "orbit/error.hpp"

namespace orbit {

namespace {

void require_same_shape(const Matrix& a, const Matrix& b, const char* what)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        fail(ErrorCode::ShapeMismatch, std::string(what) + ": " + std::to_string(a.rows()) + "x" +
                                           std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) +
                                           "x" + std::to_string(b.cols()));
}

}  // namespace

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows)
{
    r_ = rows.size();
    c_ = r_ ? rows.begin()->size() : 0;
    a_.reserve(r_ * c_);
    for (const auto& row : rows) {
        if (row.size() != c_) fail(ErrorCode::ShapeMismatch, "ragged matrix literal");
        for (const auto& q : row) a_.emplace_back(q);
    }
}

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols, std::size_t rows)
{
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) fail(ErrorCode::ShapeMismatch, "column length mismatch");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

Matrix Matrix::column_vector(const Vec& v) { return from_columns({v}, v.size()); }

Vec Matrix::column(std::size_t j) const
{
    Vec v(r_);
    for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
}

Vec Matrix::row(std::size_t i) const { return Vec(a_.begin() + i * c_, a_.begin() + (i + 1) * c_); }

void Matrix::set_column(std::size_t j, const Vec& v)
{
    if (v.size() != r_) fail(ErrorCode::ShapeMismatch, "set_column length mismatch");
    for (std::size_t i = 0; i < r_; ++i) (*this)(i, j) = v[i];
}

std::vector<Vec> Matrix::columns() const
{
    std::vector<Vec> out;
    for (std::size_t j = 0; j < c_; ++j) out.push_back(column(j));
    return out;
}

Matrix Matrix::transpose() const
{
    Matrix t(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
{
    if (r0 + nr > r_ || c0 + nc > c_) fail(ErrorCode::ShapeMismatch, "block out of range");
    Matrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m)
{
    if (r0 + m.rows() > r_ || c0 + m.cols() > c_) fail(ErrorCode::ShapeMismatch, "set_block out of range");
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) (*this)(r0 + i, c0 + j) = m(i, j);
}

bool Matrix::is_zero() const
{
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

bool Matrix::is_rational() const
{
    for (const auto& x : a_)
        if (!x.is_rational()) return false;
    return true;
}

Matrix& Matrix::operator+=(const Matrix& o)
{
    require_same_shape(*this, o, "matrix add");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o)
{
    require_same_shape(*this, o, "matrix subtract");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.c_ != b.r_) fail(ErrorCode::ShapeMismatch, "matrix product inner dimension");
    Matrix out(a.r_, b.c_);
    for (std::size_t i = 0; i < a.r_; ++i) {
        for (std::size_t k = 0; k < a.c_; ++k) {
            const ExactScalar& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.c_; ++j) {
                const ExactScalar& y = b(k, j);
                if (y.is_zero()) continue;
                out(i, j) += x * y;
            }
        }
    }
    return out;
}

Matrix operator*(const ExactScalar& s, Matrix m)
{
    for (auto& x : m.a_) x = s * x;
    return m;
}

Vec operator*(const Matrix& m, const Vec& v)
{
    if (m.c_ != v.size()) fail(ErrorCode::ShapeMismatch, "matrix-vector product");
    Vec out(m.r_);
    for (std::size_t i = 0; i < m.r_; ++i)
        for (std::size_t k = 0; k < m.c_; ++k)
            if (!m(i, k).is_zero() && !v[k].is_zero()) out[i] += m(i, k) * v[k];
    return out;
}

Matrix Matrix::operator-() const
{
    Matrix out = *this;
    for (auto& x : out.a_) x = -x;
    return out;
}

bool operator==(const Matrix& a, const Matrix& b)
{
    return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
}

std::string Matrix::str() const
{
    std::string out = "[";
    for (std::size_t i = 0; i < r_; ++i) {
        out += i ? ",\n [" : "[";
        for (std::size_t j = 0; j < c_; ++j) {
            if (j) out += ", ";
            out += (*this)(i, j).str();
        }
        out += "]";
    }
    return out + "]";
}

Matrix block_diag(const std::vector<Matrix>& blocks)
{
    std::size_t r = 0, c = 0;
    for (const auto& b : blocks) {
        r += b.rows();
        c += b.cols();
    }
    Matrix out(r, c);
    r = c = 0;
    for (const auto& b : blocks) {
        out.set_block(r, c, b);
        r += b.rows();
        c += b.cols();
    }
    return out;
}

Matrix hstack(const Matrix& a, const Matrix& b)
{
    if (a.rows() != b.rows()) fail(ErrorCode::ShapeMismatch, "hstack row mismatch");
    Matrix out(a.rows(), a.cols() + b.cols());
    out.set_block(0, 0, a);
    out.set_block(0, a.cols(), b);
    return out;
}

Matrix power(const Matrix& m, int k)
{
    Matrix out = Matrix::identity(m.rows());
    for (int i = 0; i < k; ++i) out = out * m;
    return out;
}

Vec vec_add(const Vec& a, const Vec& b)
{
    if (a.size() != b.size()) fail(ErrorCode::ShapeMismatch, "vector add");
    Vec out = a;
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
    return out;
}

Vec vec_sub(const Vec& a, const Vec& b)
{
    if (a.size() != b.size()) fail(ErrorCode::ShapeMismatch, "vector subtract");
    Vec out = a;
    for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
    return out;
}

Vec vec_scale(const ExactScalar& s, const Vec& v)
{
    Vec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
    return out;
}

bool vec_is_zero(const Vec& v)
{
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Vec unit_vector(std::size_t n, std::size_t i)
{
    Vec v(n);
    v[i] = 1;
    return v;
}

ExactScalar bilinear(const Matrix& gram, const Vec& a, const Vec& b)
{
    if (gram.rows() != a.size() || gram.cols() != b.size())
        fail(ErrorCode::ShapeMismatch, "bilinear form arity");
    ExactScalar acc;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        ExactScalar row;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!gram(i, j).is_zero() && !b[j].is_zero()) row += gram(i, j) * b[j];
        if (!row.is_zero()) acc += a[i] * row;
    }
    return acc;
}

}  // namespace orbit
