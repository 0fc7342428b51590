#pragma once

#include "lefschetz/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace lefschetz {

using Vector = std::vector<Rational>;

// Dense row-major matrix over Q. Operators act on column vectors: y = M x.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
    static Matrix diagonal(const Vector& d);
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
    static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector row(std::size_t r) const;
    Vector column(std::size_t c) const;
    void set_row(std::size_t r, const Vector& v);
    void set_column(std::size_t c, const Vector& v);

    Matrix transpose() const;
    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    Matrix operator+(const Matrix& other) const;
    Matrix operator-(const Matrix& other) const;
    Matrix operator-() const;
    Matrix operator*(const Matrix& other) const;
    Matrix operator*(const Rational& s) const;
    Vector operator*(const Vector& v) const;
    Matrix& operator+=(const Matrix& other);
    Matrix& operator-=(const Matrix& other);
    bool operator==(const Matrix& other) const;
    bool operator!=(const Matrix& other) const { return !(*this == other); }

    Matrix power(unsigned k) const;
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& b);

    std::string to_string() const;

private:
    void require_same_shape(const Matrix& other, const char* op) const;

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

Matrix vstack(const Matrix& top, const Matrix& bottom);
Matrix hstack(const Matrix& left, const Matrix& right);

struct RrefResult {
    Matrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

// Reduced row-echelon form by Gauss-Jordan elimination over Q.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

// Throws DimensionMismatch for non-square or singular input.
Matrix inverse(const Matrix& m);
Rational determinant(const Matrix& m);

// Commutator AB - BA.
Matrix commutator(const Matrix& a, const Matrix& b);

bool is_zero(const Vector& v);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const Vector& a, const Rational& s);
Vector unit_vector(std::size_t dim, std::size_t i);

}  // namespace lefschetz
