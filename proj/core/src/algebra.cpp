#include "lefschetz/algebra.hpp"

#include "lefschetz/errors.hpp"

#include <algorithm>
#include <bit>

namespace lefschetz {

void accumulate(Element& into, std::size_t index, const Rational& coeff) {
    if (sgn(coeff) == 0) return;
    auto [it, fresh] = into.try_emplace(index, coeff);
    if (fresh) return;
    it->second += coeff;
    if (sgn(it->second) == 0) into.erase(it);
}

Element add(const Element& a, const Element& b) {
    Element r = a;
    for (const auto& [i, c] : b) accumulate(r, i, c);
    return r;
}

Element scale(const Element& a, const Rational& s) {
    Element r;
    if (sgn(s) == 0) return r;
    for (const auto& [i, c] : a) r.emplace(i, c * s);
    return r;
}

Vector to_vector(const Element& a, std::size_t dim) {
    Vector v(dim);
    for (const auto& [i, c] : a) v.at(i) = c;
    return v;
}

Element from_vector(const Vector& v) {
    Element r;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (sgn(v[i]) != 0) r.emplace(i, v[i]);
    return r;
}

GradedAlgebra::GradedAlgebra(std::vector<int> degrees, std::vector<std::string> labels, std::size_t unit,
                             std::size_t top, Rational top_integral, std::vector<Element> table)
    : degrees_(std::move(degrees)),
      labels_(std::move(labels)),
      unit_(unit),
      top_(top),
      top_integral_(std::move(top_integral)),
      table_(std::move(table)) {
    if (labels_.size() != degrees_.size() || table_.size() != degrees_.size() * degrees_.size())
        throw DimensionMismatch("algebra: degrees, labels and product table disagree");
}

Element GradedAlgebra::multiply(const Element& a, const Element& b) const {
    Element r;
    for (const auto& [i, ci] : a)
        for (const auto& [j, cj] : b) {
            const Element& p = product(i, j);
            if (p.empty()) continue;
            Rational c = ci * cj;
            for (const auto& [k, ck] : p) accumulate(r, k, c * ck);
        }
    return r;
}

Element GradedAlgebra::power(const Element& a, unsigned k) const {
    Element r = unit_element();
    for (unsigned i = 0; i < k; ++i) r = multiply(r, a);
    return r;
}

Element GradedAlgebra::exp(const Element& a) const {
    if (a.count(unit_)) throw ArgumentError("exp: element has a unit component");
    Element r = unit_element(), term = unit_element();
    for (unsigned k = 1; k <= dim(); ++k) {
        term = scale(multiply(term, a), Rational(1, k));
        if (term.empty()) break;
        r = add(r, term);
    }
    return r;
}

Element GradedAlgebra::unipotent_inverse(const Element& a) const {
    auto it = a.find(unit_);
    if (it == a.end() || it->second != 1) throw ArgumentError("unipotent_inverse: unit coefficient is not 1");
    Element u = a;
    u.erase(unit_);
    Element minus_u = scale(u, -1);
    Element r = unit_element(), term = unit_element();
    for (unsigned k = 1; k <= dim(); ++k) {
        term = multiply(term, minus_u);
        if (term.empty()) break;
        r = add(r, term);
    }
    return r;
}

Rational GradedAlgebra::integral(const Element& a) const {
    auto it = a.find(top_);
    return it == a.end() ? Rational(0) : Rational(it->second * top_integral_);
}

Element GradedAlgebra::homogeneous_part(const Element& a, int d) const {
    Element r;
    for (const auto& [i, c] : a)
        if (degrees_[i] == d) r.emplace(i, c);
    return r;
}

Matrix GradedAlgebra::left_multiplication(const Element& a) const {
    Matrix m(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j)
        for (const auto& [i, c] : multiply(a, basis_element(j))) m(i, j) = c;
    return m;
}

namespace {

// Sign of x_A ∧ x_B relative to the sorted monomial x_{A∪B}.
int wedge_sign(unsigned a, unsigned b) {
    int inversions = 0;
    for (unsigned bits = b; bits; bits &= bits - 1) {
        unsigned j = static_cast<unsigned>(std::countr_zero(bits));
        inversions += std::popcount(a >> (j + 1));
    }
    return inversions % 2 ? -1 : 1;
}

std::string monomial_label(unsigned mask, int g) {
    if (mask == 0) return "1";
    std::string s;
    for (int i = 0; i < 2 * g; ++i) {
        if (!(mask >> i & 1u)) continue;
        if (!s.empty()) s += "*";
        s += i < g ? "xi" + std::to_string(i + 1) : "eta" + std::to_string(i - g + 1);
    }
    return s;
}

}  // namespace

ExteriorModel::ExteriorModel(int genus) : genus_(genus) {
    if (genus < 0 || genus > 8) throw ArgumentError("exterior model supports genus 0..8");
    const unsigned n = 1u << (2 * genus);
    for (unsigned m = 0; m < n; ++m) masks_.push_back(m);
    std::stable_sort(masks_.begin(), masks_.end(), [](unsigned a, unsigned b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa > pb : a < b;
    });
    std::vector<int> degrees;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < masks_.size(); ++i) {
        index_of_mask_[masks_[i]] = i;
        degrees.push_back(std::popcount(masks_[i]));
        labels.push_back(monomial_label(masks_[i], genus));
    }
    std::vector<Element> table(masks_.size() * masks_.size());
    for (std::size_t i = 0; i < masks_.size(); ++i)
        for (std::size_t j = 0; j < masks_.size(); ++j) {
            unsigned a = masks_[i], b = masks_[j];
            if (a & b) continue;
            table[i * masks_.size() + j].emplace(index_of_mask_[a | b], Rational(wedge_sign(a, b)));
        }
    // Temporary algebra to build the volume form and fix the orientation.
    GradedAlgebra bare(degrees, labels, index_of_mask_[0], index_of_mask_[n - 1], Rational(1), table);
    Element vol = bare.unit_element();
    for (int i = 0; i < genus; ++i) {
        Element pair = bare.multiply(bare.basis_element(index_of_mask_[1u << i]),
                                     bare.basis_element(index_of_mask_[1u << (genus + i)]));
        vol = bare.multiply(vol, pair);
        theta_ = add(theta_, pair);
    }
    // vol = ±(sorted top monomial); the integral of vol is 1.
    const Rational top_sign = vol.at(index_of_mask_[n - 1]);
    algebra_ = GradedAlgebra(std::move(degrees), std::move(labels), index_of_mask_[0], index_of_mask_[n - 1],
                             Rational(1) / top_sign, std::move(table));
    volume_ = vol;
}

Element ExteriorModel::monomial(const std::vector<int>& generators) const {
    Element r = algebra_.unit_element();
    for (int gen : generators) r = algebra_.multiply(r, algebra_.basis_element(index_of_mask_.at(1u << gen)));
    return r;
}

Element ExteriorModel::xi(int i) const { return monomial({i - 1}); }
Element ExteriorModel::eta(int i) const { return monomial({genus_ + i - 1}); }

Matrix ExteriorModel::pairing() const {
    Matrix m(dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j) {
            const Element& p = algebra_.product(i, j);
            if (!p.empty()) m(i, j) = algebra_.integral(p);
        }
    return m;
}

std::size_t curve_a(int, int i) { return static_cast<std::size_t>(i); }
std::size_t curve_b(int genus, int i) { return static_cast<std::size_t>(genus + i); }
std::size_t curve_point(int genus) { return static_cast<std::size_t>(2 * genus + 1); }

GradedAlgebra curve_cohomology(int genus) {
    if (genus < 0) throw ArgumentError("negative genus");
    const std::size_t d = static_cast<std::size_t>(2 * genus + 2);
    std::vector<int> degrees(d, 1);
    std::vector<std::string> labels(d);
    degrees[0] = 0;
    labels[0] = "1";
    degrees[d - 1] = 2;
    labels[d - 1] = "pt";
    for (int i = 1; i <= genus; ++i) {
        labels[curve_a(genus, i)] = "a" + std::to_string(i);
        labels[curve_b(genus, i)] = "b" + std::to_string(i);
    }
    std::vector<Element> table(d * d);
    auto set = [&](std::size_t i, std::size_t j, std::size_t k, int c) { table[i * d + j].emplace(k, Rational(c)); };
    for (std::size_t i = 0; i < d; ++i) {
        set(0, i, i, 1);
        if (i) set(i, 0, i, 1);
    }
    for (int i = 1; i <= genus; ++i) {
        set(curve_a(genus, i), curve_b(genus, i), curve_point(genus), 1);
        set(curve_b(genus, i), curve_a(genus, i), curve_point(genus), -1);
    }
    return GradedAlgebra(std::move(degrees), std::move(labels), 0, curve_point(genus), Rational(1), std::move(table));
}

ProductAlgebra::ProductAlgebra(const GradedAlgebra& first, const GradedAlgebra& second)
    : first_(first), second_(second), sign_(first.dim() * second.dim()) {
    for (std::size_t j = 0; j < second.dim(); ++j)
        for (std::size_t i = 0; i < first.dim(); ++i)
            sign_[j * first.dim() + i] = (second.degree(j) * first.degree(i)) % 2 ? -1 : 1;
}

Element ProductAlgebra::tensor(const Element& a, const Element& b) const {
    Element r;
    for (const auto& [i, ci] : a)
        for (const auto& [j, cj] : b) accumulate(r, index(i, j), ci * cj);
    return r;
}

Element ProductAlgebra::multiply(const Element& x, const Element& y) const {
    const std::size_t db = second_.dim();
    Element r;
    for (const auto& [p, cp] : x) {
        const std::size_t a = p / db, b = p % db;
        for (const auto& [q, cq] : y) {
            const std::size_t a2 = q / db, b2 = q % db;
            const Element& pa = first_.product(a, a2);
            if (pa.empty()) continue;
            const Element& pb = second_.product(b, b2);
            if (pb.empty()) continue;
            Rational c = cp * cq;
            if (koszul_sign(b, a2) < 0) c = -c;
            for (const auto& [ia, ca] : pa)
                for (const auto& [ib, cb] : pb) accumulate(r, index(ia, ib), c * ca * cb);
        }
    }
    return r;
}

Element ProductAlgebra::exp(const Element& x) const {
    const std::size_t unit = index(first_.unit(), second_.unit());
    if (x.count(unit)) throw ArgumentError("exp: element has a unit component");
    Element r{{unit, Rational(1)}}, term{{unit, Rational(1)}};
    for (unsigned k = 1; k <= dim(); ++k) {
        term = scale(multiply(term, x), Rational(1, k));
        if (term.empty()) break;
        r = add(r, term);
    }
    return r;
}

Element ProductAlgebra::integrate_second(const Element& x) const {
    const std::size_t db = second_.dim();
    Element r;
    for (const auto& [p, c] : x) {
        Rational w = second_.integral(second_.basis_element(p % db));
        if (sgn(w) != 0) accumulate(r, p / db, c * w);
    }
    return r;
}

Element ProductAlgebra::integrate_first(const Element& x) const {
    const std::size_t db = second_.dim();
    Element r;
    for (const auto& [p, c] : x) {
        Rational w = first_.integral(first_.basis_element(p / db));
        if (sgn(w) != 0) accumulate(r, p % db, c * w);
    }
    return r;
}

}  // namespace lefschetz
