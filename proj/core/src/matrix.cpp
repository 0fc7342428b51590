#include "lefschetz/matrix.hpp"

#include "lefschetz/errors.hpp"

#include <sstream>
#include <utility>

namespace lefschetz {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
        for (const auto& x : r) data_.push_back(x);
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::diagonal(const Vector& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
    return m;
}

Vector Matrix::row(std::size_t r) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

void Matrix::set_row(std::size_t r, const Vector& v) {
    if (v.size() != cols_) throw DimensionMismatch("set_row: length mismatch");
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = v[c];
}

void Matrix::set_column(std::size_t c, const Vector& v) {
    if (v.size() != rows_) throw DimensionMismatch("set_column: length mismatch");
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (sgn(x) != 0) return false;
    return true;
}

void Matrix::require_same_shape(const Matrix& other, const char* op) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        std::ostringstream os;
        os << op << ": shape " << rows_ << "x" << cols_ << " vs " << other.rows_ << "x" << other.cols_;
        throw DimensionMismatch(os.str());
    }
}

Matrix Matrix::operator+(const Matrix& other) const {
    Matrix r = *this;
    r += other;
    return r;
}

Matrix Matrix::operator-(const Matrix& other) const {
    Matrix r = *this;
    r -= other;
    return r;
}

Matrix Matrix::operator-() const {
    Matrix r = *this;
    for (auto& x : r.data_) x = -x;
    return r;
}

Matrix& Matrix::operator+=(const Matrix& other) {
    require_same_shape(other, "add");
    for (std::size_t i = 0; i < data_.size(); ++i)
        if (sgn(other.data_[i]) != 0) data_[i] += other.data_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
    require_same_shape(other, "subtract");
    for (std::size_t i = 0; i < data_.size(); ++i)
        if (sgn(other.data_[i]) != 0) data_[i] -= other.data_[i];
    return *this;
}

Matrix Matrix::operator*(const Matrix& other) const {
    if (cols_ != other.rows_) {
        std::ostringstream os;
        os << "multiply: " << rows_ << "x" << cols_ << " by " << other.rows_ << "x" << other.cols_;
        throw DimensionMismatch(os.str());
    }
    Matrix r(rows_, other.cols_);
    Rational t;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (sgn(a) == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) {
                const Rational& b = other(k, j);
                if (sgn(b) == 0) continue;
                t = a * b;
                r(i, j) += t;
            }
        }
    return r;
}

Matrix Matrix::operator*(const Rational& s) const {
    Matrix r = *this;
    for (auto& x : r.data_) x *= s;
    return r;
}

Vector Matrix::operator*(const Vector& v) const {
    if (v.size() != cols_) throw DimensionMismatch("matrix-vector: length mismatch");
    Vector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k)
            if (sgn(v[k]) != 0 && sgn((*this)(i, k)) != 0) out[i] += (*this)(i, k) * v[k];
    return out;
}

bool Matrix::operator==(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

Matrix Matrix::power(unsigned k) const {
    if (!is_square()) throw DimensionMismatch("power of non-square matrix");
    Matrix r = identity(rows_);
    for (unsigned i = 0; i < k; ++i) r = r * (*this);
    return r;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionMismatch("block out of range");
    Matrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw DimensionMismatch("set_block out of range");
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? ", [" : "[");
        for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << lefschetz::to_string((*this)(r, c));
        os << "]";
    }
    os << "]";
    return os.str();
}

Matrix vstack(const Matrix& top, const Matrix& bottom) {
    if (top.rows() == 0) return bottom;
    if (bottom.rows() == 0) return top;
    if (top.cols() != bottom.cols()) throw DimensionMismatch("vstack: column mismatch");
    Matrix m(top.rows() + bottom.rows(), top.cols());
    m.set_block(0, 0, top);
    m.set_block(top.rows(), 0, bottom);
    return m;
}

Matrix hstack(const Matrix& left, const Matrix& right) {
    if (left.rows() != right.rows()) throw DimensionMismatch("hstack: row mismatch");
    Matrix m(left.rows(), left.cols() + right.cols());
    m.set_block(0, 0, left);
    m.set_block(0, left.cols(), right);
    return m;
}

RrefResult rref(const Matrix& input) {
    RrefResult res;
    Matrix m = input;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    Rational t;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && sgn(m(p, c)) == 0) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = c; j < cols; ++j) std::swap(m(p, j), m(r, j));
        Rational inv = 1 / m(r, c);
        for (std::size_t j = c; j < cols; ++j)
            if (sgn(m(r, j)) != 0) m(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || sgn(m(i, c)) == 0) continue;
            Rational factor = m(i, c);
            for (std::size_t j = c; j < cols; ++j) {
                if (sgn(m(r, j)) == 0) continue;
                t = factor * m(r, j);
                m(i, j) -= t;
            }
        }
        res.pivots.push_back(c);
        ++r;
    }
    res.rank = r;
    res.reduced = std::move(m);
    return res;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix inverse(const Matrix& m) {
    if (!m.is_square()) throw DimensionMismatch("inverse of non-square matrix");
    const std::size_t n = m.rows();
    auto res = rref(hstack(m, Matrix::identity(n)));
    if (res.rank < n || (n > 0 && res.pivots[n - 1] != n - 1)) throw DimensionMismatch("inverse of singular matrix");
    return res.reduced.block(0, n, n, n);
}

Rational determinant(const Matrix& input) {
    if (!input.is_square()) throw DimensionMismatch("determinant of non-square matrix");
    Matrix m = input;
    const std::size_t n = m.rows();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && sgn(m(p, c)) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (sgn(m(i, c)) == 0) continue;
            Rational f = m(i, c) / m(c, c);
            for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

bool is_zero(const Vector& v) {
    for (const auto& x : v)
        if (sgn(x) != 0) return false;
    return true;
}

Vector add(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector add: length mismatch");
    Vector r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vector sub(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector sub: length mismatch");
    Vector r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vector scale(const Vector& a, const Rational& s) {
    Vector r = a;
    for (auto& x : r) x *= s;
    return r;
}

Vector unit_vector(std::size_t dim, std::size_t i) {
    Vector v(dim);
    v.at(i) = 1;
    return v;
}

}  // namespace lefschetz
