#pragma once

#include "lefschetz/jacobian.hpp"

#include <map>
#include <memory>
#include <utility>
#include <vector>

namespace lefschetz {

struct ChernData {
    int n = 0;
    bool hypothesis = false;       // n >= 2g - 1
    Element ch;                    // full Chern character in H^*(J)
    std::vector<Element> ch_part;  // ch_i, i = 0..g
    std::vector<Element> c;        // c_i, i = 0..g
    std::vector<Element> s;        // Segre classes s_i = (c^{-1})_i
};

// Chern data of E_n = p2_*(p1^* O(nx) ⊗ F) by Grothendieck-Riemann-Roch on
// C × J: ch(E_n) = p2_*((1 + (n-g+1) x) exp(c1 F)) with
// c1(F) = sum_i a_i ⊗ eta_i - b_i ⊗ xi_i.
ChernData picard_chern(const JacobianModel& jac, int n);

// Symbols ω^j ∩ π^!(β) with arbitrary j >= 0, before reduction.
using BundleSymbols = std::map<std::pair<int, std::size_t>, Rational>;

void accumulate(BundleSymbols& into, int j, std::size_t beta, const Rational& c);

// H_*(C^[n]) for n >= 2g-1 as the homology of the P^{n-g}-bundle
// AJ_n : C^[n] -> J. Normal form: coefficient vector over symbols
// (j, β), 0 <= j <= n-g, index j * dim H_*(J) + β. The relation
// sum_i c_i(E_n) ω^{n-g+1-i} = 0 rewrites ω^{n-g+1}.
class HilbertBundle {
public:
    HilbertBundle(std::shared_ptr<const JacobianModel> jac, int n);

    int n() const { return n_; }
    int rank() const { return rank_; }  // n - g + 1 = fiber dimension + 1
    std::size_t dim() const { return static_cast<std::size_t>(rank_) * jdim_; }
    std::size_t index(int j, std::size_t beta) const { return static_cast<std::size_t>(j) * jdim_ + beta; }
    const JacobianModel& jacobian() const { return *jac_; }
    const ChernData& chern() const { return chern_; }
    int homological_degree(std::size_t idx) const;
    std::string label(std::size_t idx) const;

    // Rewrites the highest symbols first until every j is below the rank.
    Vector reduce(const BundleSymbols& x) const;
    // Builds each ω^j ∩ π^!β by repeated multiplication by ω, reducing after
    // every step. Must agree with reduce().
    Vector reduce_by_multiplication(const BundleSymbols& x) const;
    BundleSymbols symbols(const Vector& normal_form) const;

    // ω^t times the relation for π^!β.
    BundleSymbols relation(int t, std::size_t beta) const;

    Vector gysin(const Vector& beta) const;  // AJ^!
    // AJ_* read off the coefficient of ω^{n-g}.
    Vector pushforward(const Vector& x) const;
    // AJ_*(ω^j ∩ AJ^! β) = s_{j-(n-g)}(E_n) ∩ β.
    Vector pushforward_by_segre(int j, const Vector& beta) const;
    // sum_i ω^{n-g-i} ∩ AJ^!(c_i(E_n) ∩ β); requires n >= 2g.
    Vector aj_inverse(const Vector& beta) const;

    Matrix pushforward_matrix() const;

private:
    std::shared_ptr<const JacobianModel> jac_;
    int n_;
    int rank_;
    std::size_t jdim_;
    ChernData chern_;
    std::vector<Matrix> c_cap_;  // cap with c_i, i = 0..g
    std::vector<Matrix> s_cap_;  // cap with s_i, i = 0..g
};

// Bundle models for n = n_min..n_max with μ+[pt], μ-[pt], μ-[C].
class BundleModel {
public:
    BundleModel(std::shared_ptr<const JacobianModel> jac, int n_min, int n_max);

    int n_min() const { return n_min_; }
    int n_max() const { return n_max_; }
    const HilbertBundle& at(int n) const { return bundles_.at(n); }
    const JacobianModel& jacobian() const { return *jac_; }

    // C^[n] -> C^[n+1]: ω^j ∩ AJ^!β -> ω^{j+1} ∩ AJ^!β.
    Matrix mu_plus_pt(int n) const;
    // C^[n+1] -> C^[n]: ω^j ∩ AJ^!β -> ω^j ∩ AJ^!β, reduced.
    Matrix mu_minus_pt(int n_plus_1) const;
    // C^[n+1] -> C^[n]: ω^k ∩ AJ^!β -> ω^k ∩ AJ^!(fβ) + k ω^{k-1} ∩ AJ^!β, reduced.
    Matrix mu_minus_C(int n_plus_1) const;
    // The same formula on unreduced symbols of level n+1, reduced at level n.
    Vector mu_minus_C_symbols(int n_plus_1, const BundleSymbols& x) const;

    // ker μ-[pt] inside H_*(C^[n]).
    Subspace lowest_pt_kernel(int n) const;
    // φ = μ+[pt] μ-[C] on H_*(C^[n]).
    Matrix phi(int n) const;

private:
    std::shared_ptr<const JacobianModel> jac_;
    int n_min_, n_max_;
    std::map<int, HilbertBundle> bundles_;
};

}  // namespace lefschetz
