#pragma once

#include "orbit/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace orbit {

using Vec = std::vector<ExactScalar>;

/// Dense row-major matrix over ExactScalar.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static Matrix identity(std::size_t n);
    static Matrix from_columns(const std::vector<Vec>& cols, std::size_t rows);
    static Matrix column_vector(const Vec& v);

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    bool square() const { return r_ == c_; }

    ExactScalar& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const ExactScalar& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    Vec column(std::size_t j) const;
    Vec row(std::size_t i) const;
    void set_column(std::size_t j, const Vec& v);
    std::vector<Vec> columns() const;

    Matrix transpose() const;
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& m);
    bool is_zero() const;
    bool is_rational() const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const ExactScalar& s, Matrix m);
    friend Vec operator*(const Matrix& m, const Vec& v);
    Matrix operator-() const;
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    std::string str() const;

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<ExactScalar> a_;
};

Matrix block_diag(const std::vector<Matrix>& blocks);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix power(const Matrix& m, int k);

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const ExactScalar& s, const Vec& v);
bool vec_is_zero(const Vec& v);
Vec unit_vector(std::size_t n, std::size_t i);
/// a^T * gram * b
ExactScalar bilinear(const Matrix& gram, const Vec& a, const Vec& b);

}  // namespace orbit
