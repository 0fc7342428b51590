#pragma once

#include "lefschetz/matrix.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace lefschetz {

// Subspace of Q^d stored by its reduced row-echelon basis, so equal
// subspaces have identical representations.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient_dim);  // zero subspace

    static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim); }
    static Subspace full(std::size_t ambient_dim);
    // Span of the rows of m.
    static Subspace span(const Matrix& rows);
    static Subspace span(const std::vector<Vector>& vectors, std::size_t ambient_dim);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient_; }

    const Matrix& basis() const { return basis_; }
    Vector basis_vector(std::size_t i) const { return basis_.row(i); }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;

    // Coefficients of v in the stored basis, or nullopt if v is not in the span.
    std::optional<Vector> coordinates(const Vector& v) const;

    // Linear functionals vanishing on this subspace, as a subspace of the dual.
    Subspace annihilator() const;

    bool operator==(const Subspace& other) const;
    bool operator!=(const Subspace& other) const { return !(*this == other); }

private:
    std::size_t ambient_ = 0;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

Subspace kernel(const Matrix& m);
Subspace image(const Matrix& m);                        // column space
Subspace image(const Matrix& m, const Subspace& s);     // m(s)
Subspace preimage(const Matrix& m, const Subspace& s);  // {x : m x in s}
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);

// Vectors of b's basis that extend a to a basis of a + b.
std::vector<Vector> extend_basis(const Subspace& a, const Subspace& b);

struct Eigenspaces {
    std::vector<std::pair<long, Subspace>> spaces;  // only nonzero eigenspaces
    bool complete = false;                          // dims sum to ambient dim
};

Eigenspaces integer_eigenspaces(const Matrix& m, const std::vector<long>& candidates);

}  // namespace lefschetz
