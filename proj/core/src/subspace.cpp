#include "lefschetz/subspace.hpp"

#include "lefschetz/errors.hpp"

#include <algorithm>
#include <sstream>

namespace lefschetz {

namespace {

void require_same_ambient(const Subspace& a, const Subspace& b, const char* op) {
    if (a.ambient_dim() != b.ambient_dim()) {
        std::ostringstream os;
        os << op << ": ambient dimensions " << a.ambient_dim() << " and " << b.ambient_dim();
        throw DimensionMismatch(os.str());
    }
}

}  // namespace

Subspace::Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

Subspace Subspace::full(std::size_t ambient_dim) {
    Subspace s(ambient_dim);
    s.basis_ = Matrix::identity(ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i) s.pivots_.push_back(i);
    return s;
}

Subspace Subspace::span(const Matrix& rows) {
    Subspace s(rows.cols());
    if (rows.rows() == 0) return s;
    auto res = rref(rows);
    s.basis_ = res.reduced.block(0, 0, res.rank, rows.cols());
    s.pivots_ = std::move(res.pivots);
    return s;
}

Subspace Subspace::span(const std::vector<Vector>& vectors, std::size_t ambient_dim) {
    return span(Matrix::from_rows(vectors, ambient_dim));
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
    if (v.size() != ambient_) throw DimensionMismatch("coordinates: vector length does not match ambient dimension");
    Vector coeff(dim());
    Vector rest = v;
    for (std::size_t i = 0; i < dim(); ++i) {
        coeff[i] = rest[pivots_[i]];
        if (sgn(coeff[i]) == 0) continue;
        for (std::size_t j = pivots_[i]; j < ambient_; ++j)
            if (sgn(basis_(i, j)) != 0) rest[j] -= coeff[i] * basis_(i, j);
    }
    if (!lefschetz::is_zero(rest)) return std::nullopt;
    return coeff;
}

bool Subspace::contains(const Vector& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
    require_same_ambient(*this, other, "contains");
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_vector(i))) return false;
    return true;
}

Subspace Subspace::annihilator() const { return kernel(basis_); }

bool Subspace::operator==(const Subspace& other) const {
    return ambient_ == other.ambient_ && basis_ == other.basis_;
}

Subspace kernel(const Matrix& m) {
    const std::size_t cols = m.cols();
    auto res = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : res.pivots) is_pivot[p] = true;
    std::vector<Vector> vecs;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Vector v(cols);
        v[free] = 1;
        for (std::size_t i = 0; i < res.rank; ++i) v[res.pivots[i]] = -res.reduced(i, free);
        vecs.push_back(std::move(v));
    }
    return Subspace::span(vecs, cols);
}

Subspace image(const Matrix& m) { return Subspace::span(m.transpose()); }

Subspace image(const Matrix& m, const Subspace& s) {
    if (m.cols() != s.ambient_dim()) throw DimensionMismatch("image: operator does not act on the subspace's ambient space");
    if (s.dim() == 0) return Subspace(m.rows());
    return Subspace::span(s.basis() * m.transpose());
}

Subspace preimage(const Matrix& m, const Subspace& s) {
    if (m.rows() != s.ambient_dim()) throw DimensionMismatch("preimage: operator target does not match subspace");
    Subspace ann = s.annihilator();
    if (ann.dim() == 0) return Subspace::full(m.cols());
    return kernel(ann.basis() * m);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    require_same_ambient(a, b, "intersect");
    Matrix constraints = vstack(a.annihilator().basis(), b.annihilator().basis());
    if (constraints.rows() == 0) return Subspace::full(a.ambient_dim());
    return kernel(constraints);
}

Subspace sum(const Subspace& a, const Subspace& b) {
    require_same_ambient(a, b, "sum");
    if (a.dim() == 0) return b;
    if (b.dim() == 0) return a;
    return Subspace::span(vstack(a.basis(), b.basis()));
}

std::vector<Vector> extend_basis(const Subspace& a, const Subspace& b) {
    require_same_ambient(a, b, "extend_basis");
    std::vector<Vector> added;
    Subspace current = a;
    for (std::size_t i = 0; i < b.dim(); ++i) {
        Vector v = b.basis_vector(i);
        if (current.contains(v)) continue;
        current = sum(current, Subspace::span({v}, a.ambient_dim()));
        added.push_back(std::move(v));
    }
    return added;
}

Eigenspaces integer_eigenspaces(const Matrix& m, const std::vector<long>& candidates) {
    if (!m.is_square()) throw DimensionMismatch("integer_eigenspaces: matrix not square");
    Eigenspaces out;
    std::size_t total = 0;
    std::vector<long> values = candidates;
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (long lambda : values) {
        Matrix shifted = m;
        for (std::size_t i = 0; i < m.rows(); ++i) shifted(i, i) -= lambda;
        Subspace k = kernel(shifted);
        if (k.dim() == 0) continue;
        total += k.dim();
        out.spaces.emplace_back(lambda, std::move(k));
    }
    out.complete = total == m.rows();
    return out;
}

}  // namespace lefschetz
