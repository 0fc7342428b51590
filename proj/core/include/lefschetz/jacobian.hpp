#pragma once

#include "lefschetz/algebra.hpp"
#include "lefschetz/filtration.hpp"
#include "lefschetz/graded.hpp"

#include <memory>

namespace lefschetz {

// H_*(J) and H^*(J) of the Jacobian of a smooth genus-g curve.
//
// Homology is identified with cohomology by Poincaré duality, a ↦ a ∩ [J],
// so H_k(J) has the basis PD(m) for monomials m of degree 2g - k; the
// flattened index of PD(m) equals the algebra index of m. Cap products are
// left multiplications. Cohomology uses the Kronecker-dual basis.
class JacobianModel {
public:
    explicit JacobianModel(int genus);

    int genus() const { return genus_; }
    std::size_t dim() const { return exterior_.dim(); }
    const ExteriorModel& exterior() const { return exterior_; }

    // Components (0, k) = H_k(J).
    const SpacePtr& homology() const { return homology_; }
    // Components (0, k) = H^k(J), dual basis.
    const SpacePtr& cohomology() const { return cohomology_; }

    int homological_degree(std::size_t i) const;
    Vector fundamental_class() const;  // [J] = PD(1)
    Vector point_class() const;        // PD(volume)

    // Cap product with a cohomology class on flattened H_*(J).
    Matrix cap(const Element& c) const;

    const Matrix& e() const { return e_; }                    // cap with theta
    const Matrix& fourier() const { return fourier_; }        // q1_*(exp(c1 P) ∩ q2^*(-))
    const Matrix& fourier_inverse() const { return fourier_inv_; }
    const Matrix& f() const { return f_; }                    // -F e F^{-1}

    GradedOperator e_operator() const;
    GradedOperator f_operator() const;
    GradedOperator fourier_operator() const;

    // c1(P) on J × J: sum_i xi_i ⊗ eta'_i - eta_i ⊗ xi'_i.
    Element poincare_c1(const ProductAlgebra& product) const;

    // D_k H_*(J) = H_k(J) as a subspace of flattened homology.
    Subspace homology_degree(int k) const;
    // D_j H^*(J): annihilator of the other homological pieces.
    Subspace cohomology_degree(int j) const;
    // D_{≤m} on cohomology, m = 0..2g.
    Filtration cohomology_d_filtration() const;

    // Cup-with-theta on cohomology in the monomial basis, with degrees and
    // pairing, for duality-based constructions.
    Matrix lefschetz_on_monomials() const;
    PairingData monomial_pairing_data() const;
    // Change of basis from monomial coordinates to Kronecker-dual coordinates.
    Matrix monomial_to_dual() const;

private:
    int genus_;
    ExteriorModel exterior_;
    SpacePtr homology_;
    SpacePtr cohomology_;
    Matrix e_, fourier_, fourier_inv_, f_;
};

}  // namespace lefschetz
