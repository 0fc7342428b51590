#include "lefschetz/jacobian.hpp"

#include "lefschetz/errors.hpp"

namespace lefschetz {

JacobianModel::JacobianModel(int genus) : genus_(genus), exterior_(genus) {
    if (genus < 1) throw ArgumentError("genus must be at least 1");
    auto hom = std::make_shared<BigradedSpace>();
    auto coh = std::make_shared<BigradedSpace>();
    for (int k = 0; k <= 2 * genus; ++k) {
        std::vector<std::string> h, c;
        for (std::size_t i = 0; i < dim(); ++i)
            if (homological_degree(i) == k) {
                h.push_back("PD(" + exterior_.algebra().label(i) + ")");
                c.push_back("PD(" + exterior_.algebra().label(i) + ")^*");
            }
        hom->add_component({0, k}, std::move(h));
        coh->add_component({0, k}, std::move(c));
    }
    homology_ = hom;
    cohomology_ = coh;

    e_ = cap(exterior_.theta());

    ProductAlgebra jj(exterior_.algebra(), exterior_.algebra());
    Element kernel = jj.exp(poincare_c1(jj));
    fourier_ = Matrix(dim(), dim());
    const Element one = exterior_.algebra().unit_element();
    for (std::size_t j = 0; j < dim(); ++j) {
        Element pulled = jj.tensor(one, exterior_.algebra().basis_element(j));
        Element image = jj.integrate_second(jj.multiply(kernel, pulled));
        for (const auto& [i, c] : image) fourier_(i, j) = c;
    }
    fourier_inv_ = inverse(fourier_);
    f_ = -(fourier_ * e_ * fourier_inv_);
}

int JacobianModel::homological_degree(std::size_t i) const { return 2 * genus_ - exterior_.algebra().degree(i); }

Vector JacobianModel::fundamental_class() const { return unit_vector(dim(), exterior_.algebra().unit()); }

Vector JacobianModel::point_class() const { return to_vector(exterior_.volume(), dim()); }

Matrix JacobianModel::cap(const Element& c) const { return exterior_.algebra().left_multiplication(c); }

GradedOperator JacobianModel::e_operator() const {
    GradedOperator op(homology_, homology_, Bidegree{0, -2});
    for (int k = 2; k <= 2 * genus_; ++k) {
        const Key from{0, k}, to{0, k - 2};
        op.set_block(from, to, e_.block(homology_->offset(to), homology_->offset(from), homology_->dim(to), homology_->dim(from)));
    }
    return op;
}

GradedOperator JacobianModel::f_operator() const {
    GradedOperator op(homology_, homology_, Bidegree{0, 2});
    for (int k = 0; k + 2 <= 2 * genus_; ++k) {
        const Key from{0, k}, to{0, k + 2};
        op.set_block(from, to, f_.block(homology_->offset(to), homology_->offset(from), homology_->dim(to), homology_->dim(from)));
    }
    return op;
}

GradedOperator JacobianModel::fourier_operator() const {
    GradedOperator op(homology_, homology_);
    for (int k = 0; k <= 2 * genus_; ++k) {
        const Key from{0, k}, to{0, 2 * genus_ - k};
        op.set_block(from, to,
                     fourier_.block(homology_->offset(to), homology_->offset(from), homology_->dim(to), homology_->dim(from)));
    }
    return op;
}

Element JacobianModel::poincare_c1(const ProductAlgebra& product) const {
    Element c;
    for (int i = 1; i <= genus_; ++i) {
        c = add(c, product.tensor(exterior_.xi(i), exterior_.eta(i)));
        c = add(c, scale(product.tensor(exterior_.eta(i), exterior_.xi(i)), -1));
    }
    return c;
}

Subspace JacobianModel::homology_degree(int k) const {
    std::vector<Vector> v;
    for (std::size_t i = 0; i < dim(); ++i)
        if (homological_degree(i) == k) v.push_back(unit_vector(dim(), i));
    return Subspace::span(v, dim());
}

Subspace JacobianModel::cohomology_degree(int j) const {
    std::vector<Vector> others;
    for (std::size_t i = 0; i < dim(); ++i)
        if (homological_degree(i) != j) others.push_back(unit_vector(dim(), i));
    return Subspace::span(others, dim()).annihilator();
}

Filtration JacobianModel::cohomology_d_filtration() const {
    std::vector<Subspace> steps;
    Subspace acc = Subspace::zero(dim());
    for (int m = 0; m <= 2 * genus_; ++m) {
        acc = sum(acc, cohomology_degree(m));
        steps.push_back(acc);
    }
    return Filtration(0, std::move(steps));
}

Matrix JacobianModel::lefschetz_on_monomials() const { return exterior_.algebra().left_multiplication(exterior_.theta()); }

PairingData JacobianModel::monomial_pairing_data() const {
    return PairingData{exterior_.algebra().degrees(), exterior_.pairing(), genus_};
}

Matrix JacobianModel::monomial_to_dual() const {
    // <x, PD(m_i)> = ∫ x ∪ m_i.
    return exterior_.pairing().transpose();
}

}  // namespace lefschetz
