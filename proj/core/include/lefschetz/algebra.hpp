#pragma once

#include "lefschetz/matrix.hpp"

#include <map>
#include <string>
#include <vector>

namespace lefschetz {

// Sparse element: basis index -> coefficient, zero coefficients never stored.
using Element = std::map<std::size_t, Rational>;

void accumulate(Element& into, std::size_t index, const Rational& coeff);
Element add(const Element& a, const Element& b);
Element scale(const Element& a, const Rational& s);
Vector to_vector(const Element& a, std::size_t dim);
Element from_vector(const Vector& v);

// Finite-dimensional graded-commutative algebra given by structure constants.
class GradedAlgebra {
public:
    GradedAlgebra() = default;
    GradedAlgebra(std::vector<int> degrees, std::vector<std::string> labels, std::size_t unit, std::size_t top,
                  Rational top_integral, std::vector<Element> table);

    std::size_t dim() const { return degrees_.size(); }
    int degree(std::size_t i) const { return degrees_[i]; }
    const std::vector<int>& degrees() const { return degrees_; }
    const std::string& label(std::size_t i) const { return labels_[i]; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::size_t unit() const { return unit_; }
    int top_degree() const { return degrees_[top_]; }

    const Element& product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
    Element multiply(const Element& a, const Element& b) const;
    Element power(const Element& a, unsigned k) const;
    // exp of an element without unit component (nilpotent in a finite algebra).
    Element exp(const Element& a) const;
    // Inverse of an element with unit coefficient 1 + nilpotent part.
    Element unipotent_inverse(const Element& a) const;
    // Coefficient of the top basis vector times its integral.
    Rational integral(const Element& a) const;
    // Degree-d part.
    Element homogeneous_part(const Element& a, int d) const;
    Element basis_element(std::size_t i) const { return Element{{i, Rational(1)}}; }
    Element unit_element() const { return basis_element(unit_); }

    // Matrix of left multiplication by a.
    Matrix left_multiplication(const Element& a) const;

private:
    std::vector<int> degrees_;
    std::vector<std::string> labels_;
    std::size_t unit_ = 0;
    std::size_t top_ = 0;
    Rational top_integral_ = 1;
    std::vector<Element> table_;
};

// Exterior algebra on xi_1..xi_g, eta_1..eta_g: the cohomology ring of a
// g-dimensional principally polarized abelian variety. Basis monomials are
// bitmasks over generator indices (xi_i -> i-1, eta_i -> g+i-1), written in
// increasing index order, sorted by descending degree then mask.
class ExteriorModel {
public:
    explicit ExteriorModel(int genus);

    int genus() const { return genus_; }
    const GradedAlgebra& algebra() const { return algebra_; }
    std::size_t dim() const { return algebra_.dim(); }
    unsigned mask(std::size_t i) const { return masks_[i]; }
    std::size_t index_of_mask(unsigned m) const { return index_of_mask_.at(m); }
    // Signed monomial wedge of generators in the given order.
    Element monomial(const std::vector<int>& generators) const;
    Element xi(int i) const;   // 1-based
    Element eta(int i) const;  // 1-based
    Element theta() const { return theta_; }
    // xi_1 eta_1 ... xi_g eta_g, integral 1.
    Element volume() const { return volume_; }
    // <x_i, x_j> = integral of x_i x_j.
    Matrix pairing() const;

private:
    int genus_;
    std::vector<unsigned> masks_;
    std::map<unsigned, std::size_t> index_of_mask_;
    GradedAlgebra algebra_;
    Element theta_;
    Element volume_;
};

// H^*(C) for a smooth genus-g curve: 1, a_1..a_g, b_1..b_g, pt with
// a_i b_i = pt = -b_i a_i and all other products of degree-1 classes zero.
GradedAlgebra curve_cohomology(int genus);
std::size_t curve_a(int genus, int i);  // 1-based
std::size_t curve_b(int genus, int i);
std::size_t curve_point(int genus);

// A ⊗ B with (a ⊗ b)(a' ⊗ b') = (-1)^{|b||a'|} (a a') ⊗ (b b'). Index of
// a_i ⊗ b_j is i * dim(B) + j.
class ProductAlgebra {
public:
    ProductAlgebra(const GradedAlgebra& first, const GradedAlgebra& second);

    std::size_t dim() const { return first_.dim() * second_.dim(); }
    std::size_t index(std::size_t i, std::size_t j) const { return i * second_.dim() + j; }
    Element tensor(const Element& a, const Element& b) const;
    Element multiply(const Element& x, const Element& y) const;
    Element exp(const Element& x) const;
    // Integration along the second factor: a ⊗ b -> (∫ b) a.
    Element integrate_second(const Element& x) const;
    // Integration along the first factor: a ⊗ b -> (∫ a) b.
    Element integrate_first(const Element& x) const;
    // (-1)^{|b_j||a_i|}, the Koszul sign for moving b_j past a_i.
    int koszul_sign(std::size_t j, std::size_t i) const { return sign_[j * first_.dim() + i]; }

private:
    const GradedAlgebra& first_;
    const GradedAlgebra& second_;
    std::vector<signed char> sign_;
};

}  // namespace lefschetz
