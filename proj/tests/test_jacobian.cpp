#include "support.hpp"

#include "lefschetz/algebra.hpp"
#include "lefschetz/jacobian.hpp"

#include <doctest.h>

#include <bit>

using namespace lefschetz;
using namespace testing_support;

namespace {

Vector by_label(const JacobianModel& jac, const std::vector<std::pair<std::string, Rational>>& terms) {
    Vector v(jac.dim(), Rational(0));
    const auto& labels = jac.exterior().algebra().labels();
    for (const auto& [name, c] : terms) {
        auto it = std::find(labels.begin(), labels.end(), name);
        REQUIRE(it != labels.end());
        v[static_cast<std::size_t>(it - labels.begin())] = c;
    }
    return v;
}

}  // namespace

TEST_SUITE("algebra") {
    TEST_CASE("exterior algebra dimensions and signs") {
        for (int g = 1; g <= 4; ++g) {
            ExteriorModel ext(g);
            CHECK(ext.dim() == (std::size_t{1} << (2 * g)));
            std::vector<std::size_t> by_degree(2 * g + 1, 0);
            for (std::size_t i = 0; i < ext.dim(); ++i) by_degree[ext.algebra().degree(i)]++;
            for (int d = 0; d <= 2 * g; ++d) CHECK(by_degree[d] == static_cast<std::size_t>(binom(2 * g, d)));
            const auto& a = ext.algebra();
            for (int i = 1; i <= g; ++i)
                for (int j = 1; j <= g; ++j) {
                    CHECK(a.multiply(ext.xi(i), ext.eta(j)) == scale(a.multiply(ext.eta(j), ext.xi(i)), -1));
                    CHECK(a.multiply(ext.xi(i), ext.xi(i)).empty());
                }
        }
    }

    TEST_CASE("theta power integrates to g factorial") {
        for (int g = 1; g <= 4; ++g) {
            ExteriorModel ext(g);
            const auto& a = ext.algebra();
            Element top = a.power(ext.theta(), static_cast<unsigned>(g));
            CHECK(top == scale(ext.volume(), factorial(g)));
            CHECK(a.integral(ext.volume()) == 1);
            CHECK(a.power(ext.theta(), static_cast<unsigned>(g + 1)).empty());
        }
    }

    TEST_CASE("exp and unipotent inverse") {
        ExteriorModel ext(3);
        const auto& a = ext.algebra();
        Element x = scale(ext.theta(), -1);
        Element e = a.exp(x);
        Element e_inv = a.exp(ext.theta());
        CHECK(a.multiply(e, e_inv) == a.unit_element());
        CHECK(a.unipotent_inverse(e) == e_inv);
    }

    TEST_CASE("curve cohomology") {
        GradedAlgebra c = curve_cohomology(2);
        CHECK(c.dim() == 6);
        CHECK(c.multiply(c.basis_element(curve_a(2, 1)), c.basis_element(curve_b(2, 1))) ==
              c.basis_element(curve_point(2)));
        CHECK(c.multiply(c.basis_element(curve_b(2, 2)), c.basis_element(curve_a(2, 2))) ==
              scale(c.basis_element(curve_point(2)), -1));
        CHECK(c.multiply(c.basis_element(curve_a(2, 1)), c.basis_element(curve_b(2, 2))).empty());
        CHECK(c.integral(c.basis_element(curve_point(2))) == 1);
    }

    TEST_CASE("product algebra is graded commutative") {
        GradedAlgebra c = curve_cohomology(1);
        ExteriorModel ext(1);
        ProductAlgebra p(c, ext.algebra());
        Element x = p.tensor(c.basis_element(curve_a(1, 1)), c.unit_element());
        Element y = p.tensor(c.unit_element(), ext.eta(1));
        CHECK(p.multiply(x, y) == scale(p.multiply(y, x), -1));
        Element z = p.tensor(c.basis_element(curve_point(1)), ext.volume());
        CHECK(p.integrate_first(z) == ext.volume());
        CHECK(p.integrate_second(z) == c.basis_element(curve_point(1)));
    }
}

TEST_SUITE("jacobian") {
    TEST_CASE("Fourier transform in genus one") {
        JacobianModel jac(1);
        const Matrix& F = jac.fourier();
        auto col = [&](const std::string& name) { return F * by_label(jac, {{name, 1}}); };
        CHECK(col("1") == by_label(jac, {{"xi1*eta1", -1}}));
        CHECK(col("xi1") == by_label(jac, {{"xi1", -1}}));
        CHECK(col("eta1") == by_label(jac, {{"eta1", -1}}));
        CHECK(col("xi1*eta1") == by_label(jac, {{"1", 1}}));
    }

    TEST_CASE("Fourier squared is (-1)^g times the parity") {
        for (int g = 1; g <= 3; ++g) {
            JacobianModel jac(g);
            Matrix sq = jac.fourier() * jac.fourier();
            Vector diag(jac.dim());
            for (std::size_t i = 0; i < jac.dim(); ++i) {
                int deg = std::popcount(jac.exterior().mask(i));
                diag[i] = ((g + deg) % 2) ? -1 : 1;
            }
            CHECK(sq == Matrix::diagonal(diag));
            CHECK(jac.fourier() * jac.fourier_inverse() == Matrix::identity(jac.dim()));
        }
    }

    TEST_CASE("e and f in genus one") {
        JacobianModel jac(1);
        CHECK(jac.e() * jac.fundamental_class() == jac.point_class());
        CHECK(jac.f() * jac.point_class() == jac.fundamental_class());
        CHECK(jac.homological_degree(0) == 0);
    }

    TEST_CASE("[f,e] acts by k-g on H_k") {
        for (int g = 1; g <= 3; ++g) {
            JacobianModel jac(g);
            Matrix h = commutator(jac.f(), jac.e());
            for (std::size_t i = 0; i < jac.dim(); ++i) {
                Vector v = unit_vector(jac.dim(), i);
                CHECK(h * v == scale(v, Rational(jac.homological_degree(i) - g)));
            }
        }
    }

    TEST_CASE("graded operators carry their bidegrees") {
        JacobianModel jac(2);
        CHECK(jac.e_operator().bidegree() == Bidegree{0, -2});
        CHECK(jac.f_operator().bidegree() == Bidegree{0, 2});
        CHECK(!jac.fourier_operator().bidegree());
        CHECK(jac.e_operator().dense() == jac.e());
        for (int k = 0; k <= 4; ++k) CHECK(jac.homology_degree(k).dim() == static_cast<std::size_t>(binom(4, k)));
        auto d = jac.cohomology_d_filtration();
        CHECK(d.at(4).is_full());
    }
}
