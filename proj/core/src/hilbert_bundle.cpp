#include "lefschetz/hilbert_bundle.hpp"

#include "lefschetz/errors.hpp"

#include <algorithm>

namespace lefschetz {

ChernData picard_chern(const JacobianModel& jac, int n) {
    const int g = jac.genus();
    const GradedAlgebra& hj = jac.exterior().algebra();
    GradedAlgebra hc = curve_cohomology(g);
    ProductAlgebra cj(hc, hj);

    Element c1f;
    for (int i = 1; i <= g; ++i) {
        c1f = add(c1f, cj.tensor(hc.basis_element(curve_a(g, i)), jac.exterior().eta(i)));
        c1f = add(c1f, scale(cj.tensor(hc.basis_element(curve_b(g, i)), jac.exterior().xi(i)), -1));
    }
    // ch(O(nx)) td(T_C) = 1 + (n - g + 1) x
    Element twist = add(cj.tensor(hc.unit_element(), hj.unit_element()),
                        scale(cj.tensor(hc.basis_element(curve_point(g)), hj.unit_element()), Rational(n - g + 1)));

    ChernData out;
    out.n = n;
    out.hypothesis = n >= 2 * g - 1;
    out.ch = cj.integrate_first(cj.multiply(twist, cj.exp(c1f)));
    for (int i = 0; i <= g; ++i) out.ch_part.push_back(hj.homogeneous_part(out.ch, 2 * i));

    // log c = sum_{k>=1} (-1)^{k-1} (k-1)! ch_k
    Element log_c;
    for (int k = 1; k <= g; ++k) {
        Rational coeff = factorial(k - 1);
        if ((k - 1) % 2) coeff = -coeff;
        log_c = add(log_c, scale(out.ch_part[static_cast<std::size_t>(k)], coeff));
    }
    Element c = hj.exp(log_c);
    Element s = hj.unipotent_inverse(c);
    for (int i = 0; i <= g; ++i) {
        out.c.push_back(hj.homogeneous_part(c, 2 * i));
        out.s.push_back(hj.homogeneous_part(s, 2 * i));
    }
    return out;
}

void accumulate(BundleSymbols& into, int j, std::size_t beta, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, fresh] = into.try_emplace({j, beta}, c);
    if (fresh) return;
    it->second += c;
    if (sgn(it->second) == 0) into.erase(it);
}

HilbertBundle::HilbertBundle(std::shared_ptr<const JacobianModel> jac, int n)
    : jac_(std::move(jac)), n_(n), rank_(n - jac_->genus() + 1), jdim_(jac_->dim()) {
    const int g = jac_->genus();
    if (n < 2 * g - 1)
        throw ArgumentError("C^[" + std::to_string(n) + "] is a projective bundle over J only for n >= " +
                            std::to_string(2 * g - 1));
    chern_ = picard_chern(*jac_, n);
    for (int i = 0; i <= g; ++i) {
        c_cap_.push_back(jac_->cap(chern_.c[static_cast<std::size_t>(i)]));
        s_cap_.push_back(jac_->cap(chern_.s[static_cast<std::size_t>(i)]));
    }
}

int HilbertBundle::homological_degree(std::size_t idx) const {
    const int j = static_cast<int>(idx / jdim_);
    return jac_->homological_degree(idx % jdim_) + 2 * (n_ - jac_->genus() - j);
}

std::string HilbertBundle::label(std::size_t idx) const {
    const std::size_t j = idx / jdim_, beta = idx % jdim_;
    const Key key{0, jac_->homological_degree(beta)};
    return "w^" + std::to_string(j) + "*AJ^!" + jac_->homology()->label(key, beta - jac_->homology()->offset(key));
}

Vector HilbertBundle::reduce(const BundleSymbols& input) const {
    BundleSymbols x = input;
    const int g = jac_->genus();
    while (!x.empty()) {
        auto top = std::prev(x.end());
        const int j = top->first.first;
        if (j < rank_) break;
        // ω^j π^!β = -sum_{i=1}^{g} ω^{j-i} π^!(c_i ∩ β)
        const std::size_t beta = top->first.second;
        const Rational coeff = top->second;
        x.erase(top);
        for (int i = 1; i <= g; ++i) {
            const Matrix& ci = c_cap_[static_cast<std::size_t>(i)];
            for (std::size_t r = 0; r < jdim_; ++r)
                if (sgn(ci(r, beta)) != 0) accumulate(x, j - i, r, -coeff * ci(r, beta));
        }
    }
    Vector out(dim());
    for (const auto& [sym, c] : x) {
        if (sym.first < 0) throw InternalConsistencyError("reduction produced a negative power of omega");
        out[index(sym.first, sym.second)] = c;
    }
    return out;
}

Vector HilbertBundle::reduce_by_multiplication(const BundleSymbols& input) const {
    const int g = jac_->genus();
    Vector out(dim());
    // Multiply a normal form by ω once.
    auto times_omega = [&](const Vector& v) {
        Vector w(dim());
        for (std::size_t idx = 0; idx < v.size(); ++idx) {
            if (sgn(v[idx]) == 0) continue;
            const int j = static_cast<int>(idx / jdim_);
            const std::size_t beta = idx % jdim_;
            if (j + 1 < rank_) {
                w[index(j + 1, beta)] += v[idx];
                continue;
            }
            for (int i = 1; i <= g; ++i) {
                if (rank_ - i < 0) continue;
                const Matrix& ci = c_cap_[static_cast<std::size_t>(i)];
                for (std::size_t r = 0; r < jdim_; ++r)
                    if (sgn(ci(r, beta)) != 0) w[index(rank_ - i, r)] -= v[idx] * ci(r, beta);
            }
        }
        return w;
    };
    for (const auto& [sym, c] : input) {
        Vector v = scale(unit_vector(dim(), index(0, sym.second)), c);
        for (int t = 0; t < sym.first; ++t) v = times_omega(v);
        out = add(out, v);
    }
    return out;
}

BundleSymbols HilbertBundle::symbols(const Vector& v) const {
    BundleSymbols s;
    for (std::size_t idx = 0; idx < v.size(); ++idx)
        if (sgn(v[idx]) != 0) accumulate(s, static_cast<int>(idx / jdim_), idx % jdim_, v[idx]);
    return s;
}

BundleSymbols HilbertBundle::relation(int t, std::size_t beta) const {
    BundleSymbols s;
    for (int i = 0; i <= jac_->genus(); ++i) {
        if (rank_ + t - i < 0) continue;
        const Matrix& ci = c_cap_[static_cast<std::size_t>(i)];
        for (std::size_t r = 0; r < jdim_; ++r)
            if (sgn(ci(r, beta)) != 0) accumulate(s, rank_ + t - i, r, ci(r, beta));
    }
    return s;
}

Vector HilbertBundle::gysin(const Vector& beta) const {
    Vector out(dim());
    for (std::size_t b = 0; b < jdim_; ++b) out[index(0, b)] = beta.at(b);
    return out;
}

Vector HilbertBundle::pushforward(const Vector& x) const {
    Vector out(jdim_);
    for (std::size_t b = 0; b < jdim_; ++b) out[b] = x.at(index(rank_ - 1, b));
    return out;
}

Vector HilbertBundle::pushforward_by_segre(int j, const Vector& beta) const {
    const int i = j - (rank_ - 1);
    if (i < 0 || i > jac_->genus()) return Vector(jdim_);
    return s_cap_[static_cast<std::size_t>(i)] * beta;
}

Vector HilbertBundle::aj_inverse(const Vector& beta) const {
    const int g = jac_->genus();
    if (n_ < 2 * g) throw ArgumentError("aj_inverse needs n >= 2g");
    BundleSymbols s;
    for (int i = 0; i <= g; ++i) {
        Vector cb = c_cap_[static_cast<std::size_t>(i)] * beta;
        for (std::size_t r = 0; r < jdim_; ++r) accumulate(s, n_ - g - i, r, cb[r]);
    }
    return reduce(s);
}

Matrix HilbertBundle::pushforward_matrix() const {
    Matrix m(jdim_, dim());
    for (std::size_t b = 0; b < jdim_; ++b) m(b, index(rank_ - 1, b)) = 1;
    return m;
}

BundleModel::BundleModel(std::shared_ptr<const JacobianModel> jac, int n_min, int n_max)
    : jac_(std::move(jac)), n_min_(n_min), n_max_(n_max) {
    for (int n = n_min; n <= n_max; ++n) bundles_.emplace(n, HilbertBundle(jac_, n));
}

Matrix BundleModel::mu_plus_pt(int n) const {
    const HilbertBundle& src = at(n);
    const HilbertBundle& dst = at(n + 1);
    Matrix m(dst.dim(), src.dim());
    for (std::size_t idx = 0; idx < src.dim(); ++idx) {
        BundleSymbols s;
        accumulate(s, static_cast<int>(idx / jac_->dim()) + 1, idx % jac_->dim(), 1);
        m.set_column(idx, dst.reduce(s));
    }
    return m;
}

Matrix BundleModel::mu_minus_pt(int n_plus_1) const {
    const HilbertBundle& src = at(n_plus_1);
    const HilbertBundle& dst = at(n_plus_1 - 1);
    Matrix m(dst.dim(), src.dim());
    for (std::size_t idx = 0; idx < src.dim(); ++idx) {
        BundleSymbols s;
        accumulate(s, static_cast<int>(idx / jac_->dim()), idx % jac_->dim(), 1);
        m.set_column(idx, dst.reduce(s));
    }
    return m;
}

Vector BundleModel::mu_minus_C_symbols(int n_plus_1, const BundleSymbols& x) const {
    if (n_plus_1 < 2 * jac_->genus()) throw ArgumentError("mu-(C) on the bundle model needs n+1 >= 2g");
    const HilbertBundle& dst = at(n_plus_1 - 1);
    const Matrix& f = jac_->f();
    BundleSymbols out;
    for (const auto& [sym, c] : x) {
        const auto [k, beta] = sym;
        for (std::size_t r = 0; r < jac_->dim(); ++r)
            if (sgn(f(r, beta)) != 0) accumulate(out, k, r, c * f(r, beta));
        if (k > 0) accumulate(out, k - 1, beta, c * k);
    }
    return dst.reduce(out);
}

Matrix BundleModel::mu_minus_C(int n_plus_1) const {
    const HilbertBundle& src = at(n_plus_1);
    const HilbertBundle& dst = at(n_plus_1 - 1);
    Matrix m(dst.dim(), src.dim());
    for (std::size_t idx = 0; idx < src.dim(); ++idx) {
        BundleSymbols s;
        accumulate(s, static_cast<int>(idx / jac_->dim()), idx % jac_->dim(), 1);
        m.set_column(idx, mu_minus_C_symbols(n_plus_1, s));
    }
    return m;
}

Subspace BundleModel::lowest_pt_kernel(int n) const { return kernel(mu_minus_pt(n)); }

Matrix BundleModel::phi(int n) const { return mu_plus_pt(n - 1) * mu_minus_C(n); }

}  // namespace lefschetz
