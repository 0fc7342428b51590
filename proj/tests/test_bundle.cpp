#include "support.hpp"

#include "lefschetz/errors.hpp"
#include "lefschetz/hilbert_bundle.hpp"

#include <doctest.h>

using namespace lefschetz;
using namespace testing_support;

namespace {

// Betti numbers of the P^{n-g}-bundle: binom(2g, k) shifted by 2j.
std::vector<std::size_t> bundle_betti(int g, int n) {
    std::vector<std::size_t> b(static_cast<std::size_t>(2 * n + 1), 0);
    for (int j = 0; j <= n - g; ++j)
        for (int k = 0; k <= 2 * g; ++k) b[static_cast<std::size_t>(k + 2 * j)] += static_cast<std::size_t>(binom(2 * g, k));
    return b;
}

}  // namespace

TEST_SUITE("bundle") {
    TEST_CASE("Chern character of the Picard bundles") {
        for (int g = 1; g <= 3; ++g) {
            JacobianModel jac(g);
            const auto& a = jac.exterior().algebra();
            const Element theta = jac.exterior().theta();
            for (int n = 2 * g - 1; n <= 2 * g + 2; ++n) {
                ChernData cd = picard_chern(jac, n);
                CHECK(cd.hypothesis);
                CHECK(cd.ch == add(scale(a.unit_element(), n - g + 1), scale(theta, -1)));
                for (int i = 0; i <= g; ++i) {
                    Element p = a.power(theta, static_cast<unsigned>(i));
                    CHECK(cd.c[i] == scale(p, Rational(i % 2 ? -1 : 1) / factorial(i)));
                    CHECK(cd.s[i] == scale(p, Rational(1) / factorial(i)));
                    if (i >= 2) CHECK(cd.ch_part[i].empty());
                }
            }
        }
    }

    TEST_CASE("bundle requires n >= 2g-1") {
        auto jac = std::make_shared<const JacobianModel>(2);
        CHECK_THROWS_AS(HilbertBundle(jac, 2), ArgumentError);
        CHECK_NOTHROW(HilbertBundle(jac, 3));
    }

    TEST_CASE("Betti numbers of the bundle model") {
        for (int g = 1; g <= 2; ++g) {
            auto jac = std::make_shared<const JacobianModel>(g);
            for (int n = 2 * g - 1; n <= 2 * g + 2; ++n) {
                HilbertBundle hb(jac, n);
                CHECK(hb.rank() == n - g + 1);
                std::vector<std::size_t> b(static_cast<std::size_t>(2 * n + 1), 0);
                for (std::size_t i = 0; i < hb.dim(); ++i) b[static_cast<std::size_t>(hb.homological_degree(i))]++;
                CHECK(b == bundle_betti(g, n));
            }
        }
    }

    TEST_CASE("two reduction orders agree") {
        std::mt19937 rng(211);
        for (int g = 1; g <= 2; ++g) {
            auto jac = std::make_shared<const JacobianModel>(g);
            HilbertBundle hb(jac, 2 * g + 1);
            std::uniform_int_distribution<int> j(0, hb.rank() + g + 1);
            std::uniform_int_distribution<std::size_t> beta(0, jac->dim() - 1);
            for (int t = 0; t < 20; ++t) {
                BundleSymbols x;
                for (int s = 0; s < 4; ++s) accumulate(x, j(rng), beta(rng), small_rational(rng));
                CHECK(hb.reduce(x) == hb.reduce_by_multiplication(x));
            }
            for (int t = 0; t <= g; ++t)
                for (std::size_t b = 0; b < jac->dim(); ++b) CHECK(is_zero(hb.reduce(hb.relation(t, b))));
        }
    }

    TEST_CASE("pushforward by Segre classes") {
        auto jac = std::make_shared<const JacobianModel>(2);
        HilbertBundle hb(jac, 4);
        for (int j = 0; j <= hb.rank() + 2; ++j)
            for (std::size_t b = 0; b < jac->dim(); ++b) {
                BundleSymbols x;
                accumulate(x, j, b, 1);
                CHECK(hb.pushforward(hb.reduce(x)) == hb.pushforward_by_segre(j, unit_vector(jac->dim(), b)));
            }
    }

    TEST_CASE("explicit inverse of the Abel-Jacobi pushforward") {
        for (int g = 1; g <= 2; ++g) {
            auto jac = std::make_shared<const JacobianModel>(g);
            BundleModel bm(jac, 2 * g - 1, 2 * g + 2);
            for (int n = 2 * g; n <= 2 * g + 2; ++n) {
                const HilbertBundle& hb = bm.at(n);
                Matrix down = bm.mu_minus_pt(n);
                for (std::size_t b = 0; b < jac->dim(); ++b) {
                    Vector beta = unit_vector(jac->dim(), b);
                    Vector x = hb.aj_inverse(beta);
                    CHECK(hb.pushforward(x) == beta);
                    CHECK(is_zero(down * x));
                }
            }
        }
    }

    TEST_CASE("mu-[C] on the bundle model") {
        for (int g = 1; g <= 2; ++g) {
            auto jac = std::make_shared<const JacobianModel>(g);
            BundleModel bm(jac, 2 * g - 1, 2 * g + 3);
            for (int n = 2 * g; n <= 2 * g + 2; ++n) {
                const HilbertBundle& up = bm.at(n + 1);
                for (int t = 0; t <= up.rank(); ++t)
                    for (std::size_t b = 0; b < jac->dim(); ++b)
                        CHECK(is_zero(bm.mu_minus_C_symbols(n + 1, up.relation(t, b))));
                Matrix comm = bm.mu_minus_C(n + 1) * bm.mu_plus_pt(n) - bm.mu_plus_pt(n - 1) * bm.mu_minus_C(n);
                CHECK(comm == Matrix::identity(bm.at(n).dim()));
                CHECK(bm.mu_minus_pt(n) * bm.mu_minus_C(n + 1) == bm.mu_minus_C(n) * bm.mu_minus_pt(n + 1));
            }
        }
    }

    TEST_CASE("phi on ker mu-[pt] has eigenvalue n-k on inverse images of H_k") {
        auto jac = std::make_shared<const JacobianModel>(2);
        BundleModel bm(jac, 3, 6);
        for (int n = 4; n <= 6; ++n) {
            const HilbertBundle& hb = bm.at(n);
            Matrix phi = bm.phi(n);
            for (std::size_t b = 0; b < jac->dim(); ++b) {
                Vector x = hb.aj_inverse(unit_vector(jac->dim(), b));
                CHECK(phi * x == scale(x, Rational(n - jac->homological_degree(b))));
            }
            CHECK(bm.lowest_pt_kernel(n).dim() == jac->dim());
        }
    }
}
