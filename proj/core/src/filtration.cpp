#include "lefschetz/filtration.hpp"

#include "lefschetz/errors.hpp"

#include <map>
#include <tuple>

namespace lefschetz {

int nilpotency_degree(const Matrix& n) {
    if (!n.is_square()) throw DimensionMismatch("nilpotency check of a non-square matrix");
    Matrix p = Matrix::identity(n.rows());
    for (std::size_t d = 0; d <= n.rows(); ++d) {
        Matrix next = p * n;
        if (next.is_zero()) return static_cast<int>(d);
        p = std::move(next);
    }
    throw NilpotencyError("operator is not nilpotent: N^" + std::to_string(n.rows()) + " != 0");
}

std::string weight_filtration_defect(const Matrix& n, const Filtration& w, int center) {
    const int top = 2 * center;
    for (int k = 0; k <= top; ++k) {
        if (!w.at(k - 2).contains(image(n, w.at(k))))
            return "N W_" + std::to_string(k) + " is not contained in W_" + std::to_string(k - 2);
    }
    Matrix power = Matrix::identity(n.rows());
    for (int k = 0; k <= center; ++k) {
        const std::size_t up = w.at(center + k).dim() - w.at(center + k - 1).dim();
        const std::size_t down = w.at(center - k).dim() - w.at(center - k - 1).dim();
        if (up != down)
            return "Gr_" + std::to_string(center + k) + " and Gr_" + std::to_string(center - k) + " differ in dimension";
        Subspace reached = sum(image(power, w.at(center + k)), w.at(center - k - 1));
        if (reached != w.at(center - k))
            return "N^" + std::to_string(k) + " does not map Gr_" + std::to_string(center + k) + " onto Gr_" +
                   std::to_string(center - k);
        power = power * n;
    }
    return {};
}

WeightFiltrationResult weight_filtration(const Matrix& n, int center) {
    const int degree = nilpotency_degree(n);
    if (center < degree)
        throw ArgumentError("center " + std::to_string(center) + " is below the nilpotency degree " +
                            std::to_string(degree) + "; the filtration would leave the index range 0.." +
                            std::to_string(2 * center));
    const std::size_t dim = n.rows();
    std::map<int, Subspace> steps;
    Subspace a = Subspace::zero(dim), b = Subspace::full(dim);
    std::vector<Matrix> powers{Matrix::identity(dim)};
    for (int d = 1; d <= degree; ++d) powers.push_back(powers.back() * n);
    for (int d = degree; d >= 1; --d) {
        const Matrix& nd = powers[static_cast<std::size_t>(d)];
        Subspace a_next = sum(a, image(nd, b));
        Subspace b_next = intersect(b, preimage(nd, a));
        a = std::move(a_next);
        b = std::move(b_next);
        steps[center - d] = a;
        steps[center + d - 1] = b;
    }
    std::vector<Subspace> chain;
    Subspace current = Subspace::zero(dim);
    for (int k = 0; k <= 2 * center; ++k) {
        if (k >= center + degree) current = Subspace::full(dim);
        else if (auto it = steps.find(k); it != steps.end()) current = it->second;
        chain.push_back(current);
    }
    WeightFiltrationResult res;
    res.filtration = Filtration(0, std::move(chain));
    res.graded_dims = res.filtration.graded_dims();
    res.center = center;
    res.degree = degree;
    auto defect = weight_filtration_defect(n, res.filtration, center);
    if (!defect.empty()) throw InternalConsistencyError("weight filtration post-check failed: " + defect);
    res.lowers_by_two = true;
    res.lefschetz_isomorphisms = true;
    return res;
}

Sl2Triple jacobson_morozov(const Matrix& e) {
    const int degree = nilpotency_degree(e);
    const std::size_t dim = e.rows();
    // kernels[j] = ker e^j, j = 0..degree+1
    std::vector<Subspace> kernels{Subspace::zero(dim)};
    Matrix p = Matrix::identity(dim);
    for (int j = 1; j <= degree + 1; ++j) {
        p = p * e;
        kernels.push_back(kernel(p));
    }
    std::vector<Vector> basis;
    std::vector<Rational> weights;
    std::vector<std::pair<std::size_t, int>> chains;  // (first index, length)
    for (int len = degree + 1; len >= 1; --len) {
        const auto l = static_cast<std::size_t>(len);
        const Subspace& above = l + 1 < kernels.size() ? kernels[l + 1] : kernels[l];
        Subspace covered = sum(kernels[l - 1], image(e, above));
        for (auto& head : extend_basis(covered, kernels[l])) {
            chains.emplace_back(basis.size(), len);
            Vector u = head;
            for (int i = 0; i < len; ++i) {
                basis.push_back(u);
                weights.push_back(2 * i - (len - 1));
                u = e * u;
            }
        }
    }
    if (basis.size() != dim) throw InternalConsistencyError("Jordan chains do not span the space");
    Matrix s = Matrix::from_columns(basis, dim);
    Matrix s_inv = inverse(s);
    Matrix hd = Matrix::diagonal(weights);
    Matrix fd(dim, dim);
    for (auto [start, len] : chains)
        for (int i = 1; i < len; ++i) fd(start + static_cast<std::size_t>(i - 1), start + static_cast<std::size_t>(i)) = i * (len - i);
    Matrix h = s * hd * s_inv;
    Matrix f = s * fd * s_inv;
    auto failure = Sl2Triple::first_failure(e, h, f);
    if (!failure.empty()) throw InternalConsistencyError("Jacobson-Morozov triple fails " + failure);
    return Sl2Triple::make(e, std::move(h), std::move(f));
}

Filtration weight_filtration_from_h(const Sl2Triple& triple, int center) {
    auto eig = triple.weight_spaces();
    if (!eig.complete) throw InternalConsistencyError("h is not diagonalizable over the integers");
    const std::size_t dim = triple.dim();
    std::vector<Subspace> chain;
    for (int k = 0; k <= 2 * center; ++k) {
        Subspace w = Subspace::zero(dim);
        for (const auto& [lambda, space] : eig.spaces)
            if (lambda >= center - k) w = sum(w, space);
        chain.push_back(std::move(w));
    }
    if (!chain.back().is_full())
        throw ArgumentError("center " + std::to_string(center) + " is too small for the h-weights present");
    return Filtration(0, std::move(chain));
}

Matrix lambda_from_duality(const Matrix& l, const PairingData& pd) {
    const std::size_t dim = l.rows();
    if (!l.is_square() || pd.degrees.size() != dim || pd.pairing.rows() != dim || pd.pairing.cols() != dim)
        throw DimensionMismatch("lambda_from_duality: operator, degrees and pairing disagree in size");
    const int n = pd.half_dim;
    auto indices_of = [&](int deg) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < dim; ++i)
            if (pd.degrees[i] == deg) idx.push_back(i);
        return idx;
    };
    std::vector<Vector> decomposition;
    std::vector<std::tuple<std::size_t, int, int>> position;  // (primitive id, j, m)
    std::vector<std::size_t> primitive_start;
    std::vector<Matrix> powers{Matrix::identity(dim)};
    for (int j = 1; j <= n + 1; ++j) powers.push_back(powers.back() * l);
    std::size_t primitive_id = 0;
    for (int m = 0; m <= n; ++m) {
        auto lo = indices_of(n - m), hi = indices_of(n + m);
        const Matrix& lm = powers[static_cast<std::size_t>(m)];
        Matrix restricted(hi.size(), lo.size());
        for (std::size_t r = 0; r < hi.size(); ++r)
            for (std::size_t c = 0; c < lo.size(); ++c) restricted(r, c) = lm(hi[r], lo[c]);
        if (lo.size() != hi.size() || rank(restricted) != lo.size())
            throw ModelError("L^" + std::to_string(m) + " is not an isomorphism from degree " + std::to_string(n - m) +
                             " to degree " + std::to_string(n + m));
        Subspace degree_part = Subspace::span(
            [&] {
                std::vector<Vector> v;
                for (auto i : lo) v.push_back(unit_vector(dim, i));
                return v;
            }(),
            dim);
        Subspace primitive = intersect(degree_part, kernel(powers[static_cast<std::size_t>(m + 1)]));
        for (std::size_t i = 0; i < primitive.dim(); ++i, ++primitive_id) {
            Vector p = primitive.basis_vector(i);
            for (int j = 0; j <= m; ++j) {
                decomposition.push_back(powers[static_cast<std::size_t>(j)] * p);
                position.emplace_back(primitive_id, j, m);
            }
        }
    }
    if (decomposition.size() != dim) throw ModelError("Lefschetz decomposition does not span the space");
    Matrix b = Matrix::from_columns(decomposition, dim);
    std::map<std::pair<std::size_t, int>, std::size_t> column_of;
    for (std::size_t c = 0; c < position.size(); ++c) column_of[{std::get<0>(position[c]), std::get<1>(position[c])}] = c;
    Matrix star_local(dim, dim);
    for (std::size_t c = 0; c < position.size(); ++c) {
        auto [id, j, m] = position[c];
        Rational coeff = factorial(j) / factorial(m - j);
        if (j % 2) coeff = -coeff;
        star_local(column_of.at({id, m - j}), c) = coeff;
    }
    Matrix star = b * star_local * inverse(b);
    Matrix g = pd.pairing * star;
    if (determinant(g) == 0) throw PairingError("pairing twisted by the Lefschetz star is degenerate");
    Matrix gt = g.transpose();
    return -(inverse(gt) * l.transpose() * gt);
}

OppositenessReport check_opposite(const Filtration& w, const Filtration& p, int total) {
    if (w.ambient_dim() != p.ambient_dim()) throw DimensionMismatch("check_opposite: filtrations on different spaces");
    OppositenessReport rep;
    rep.total = total;
    for (int k = 0; k <= total; ++k)
        for (int m = 0; m <= total; ++m) {
            Subspace wk = w.at(k), pm = p.at(m);
            OppositeEntry e{k, m, wk.dim(), pm.dim(), intersect(wk, pm).dim()};
            rep.entries.push_back(e);
            if (m + k < total && e.dim_intersection > 0) rep.violations.push_back(e);
            if (m + k == total - 1)
                rep.complementary.emplace_back(e, e.dim_intersection == 0 && e.dim_w + e.dim_p == w.ambient_dim());
        }
    return rep;
}

}  // namespace lefschetz
