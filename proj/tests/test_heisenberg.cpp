#include "support.hpp"

#include "lefschetz/driver.hpp"
#include "lefschetz/errors.hpp"
#include "lefschetz/heisenberg.hpp"
#include "lefschetz/smooth_model.hpp"

#include <doctest.h>

using namespace lefschetz;
using namespace testing_support;

namespace {

// dim of the (n, h) component: monomials m_pt^a m_C^b w_β with a + b + k = n,
// homological degree k + 2b, and binom(2g, k) choices of β.
std::size_t monomial_count(int g, int n, int h) {
    std::size_t total = 0;
    for (int k = 0; k <= 2 * g && k <= n; ++k)
        for (int b = 0; k + b <= n; ++b)
            if (k + 2 * b == h) total += static_cast<std::size_t>(binom(2 * g, k));
    return total;
}

const CheckRecord& find(const Report& r, const std::string& id) {
    for (const auto& c : r)
        if (c.check_id == id) return c;
    FAIL("missing record " << id);
    return r.front();
}

}  // namespace

TEST_SUITE("heisenberg") {
    TEST_CASE("component dimensions match the monomial count") {
        for (int g = 1; g <= 3; ++g) {
            SmoothModel sm = build_smooth_model(g, 2 * g + 2);
            for (int n = 0; n <= 2 * g + 2; ++n)
                for (int h = 0; h <= 2 * n + 2 * g; ++h)
                    CHECK(sm.module.V->dim({n, h}) == monomial_count(g, n, h));
        }
    }

    TEST_CASE("smooth model requires a valid window") {
        CHECK_THROWS_AS(build_smooth_model(0, 4), ArgumentError);
        CHECK_THROWS_AS(build_smooth_model(2, 3), ArgumentError);
    }

    TEST_CASE("commutation relations hold on the smooth model") {
        for (int g = 1; g <= 2; ++g) {
            SmoothModel sm = build_smooth_model(g, 2 * g + 2);
            Report r = verify_heisenberg(sm.module);
            CHECK(r.size() == 6);
            for (const auto& c : r) CHECK_MESSAGE(c.status == Status::pass, c.check_id);
        }
    }

    TEST_CASE("a scaled operator breaks exactly the relations it enters") {
        SmoothModel sm = build_smooth_model(1, 4);
        scale_operator(sm.module, "mu_minus_C", 2);
        Report r = verify_heisenberg(sm.module);
        const auto& bad = find(r, "heisenberg.comm.mu_minus_C.mu_plus_pt");
        CHECK(bad.status == Status::fail);
        CHECK(!bad.witness.empty());
        CHECK(find(r, "heisenberg.comm.mu_minus_pt.mu_plus_C").status == Status::pass);
        CHECK(find(r, "heisenberg.comm.mu_minus_pt.mu_minus_C").status == Status::pass);
    }

    TEST_CASE("lowest weight space is H_*(J) placed at n = k") {
        for (int g = 1; g <= 3; ++g) {
            SmoothModel sm = build_smooth_model(g, 2 * g);
            auto w = lowest_weight(sm.module);
            std::size_t total = 0;
            for (const auto& [key, s] : w) {
                if (s.dim() == 0) continue;
                CHECK(key.n == key.k);
                CHECK(s.dim() == static_cast<std::size_t>(binom(2 * g, key.k)));
                total += s.dim();
            }
            CHECK(total == (std::size_t{1} << (2 * g)));
            CHECK(freeness_check(sm.module, w).ok());
        }
    }

    TEST_CASE("phi spectrum and eigenspace dimensions") {
        for (int g = 1; g <= 2; ++g) {
            SmoothModel sm = build_smooth_model(g, 2 * g + 2);
            for (int n = 2 * g; n <= 2 * g + 2; ++n) {
                auto pd = phi_decomposition(sm.module, n);
                CHECK(pd.complete);
                CHECK(pd.kernel_dim == (std::size_t{1} << (2 * g)));
                for (int i = 0; i <= 2 * g; ++i) CHECK(pd.eigen_dims[n - 2 * g + i] == static_cast<std::size_t>(binom(2 * g, i)));
            }
            CHECK_THROWS_AS(phi_decomposition(sm.module, 2 * g + 3), ArgumentError);
        }
    }

    TEST_CASE("Abel-Jacobi images of the curve classes") {
        for (int g = 1; g <= 3; ++g) {
            SmoothModel sm = build_smooth_model(g, 2 * g);
            const auto& jac = *sm.jacobian;
            const auto& ext = jac.exterior();
            // [C^[n]] = μ+[C]^n |0>, pushed forward to J.
            GradedVector vac{{Key{0, 0}, Vector{1}}};
            GradedVector x = vac;
            for (int n = 1; n <= g; ++n) {
                x = sm.module.mu_plus_C.apply(x);
                Vector image = apply_aj(sm.module, n, x);
                // n! PD(theta^(g-n) / (g-n)!), up to the orientation sign relating
                // xi1*eta1*...*xig*etag to xi1*...*xig*eta1*...*etag.
                const int sign = (g * (g - 1) / 2) % 2 ? -1 : 1;
                Element cls = scale(ext.algebra().power(ext.theta(), static_cast<unsigned>(g - n)),
                                    sign * factorial(n) / factorial(g - n));
                CHECK(image == to_vector(cls, jac.dim()));
            }
        }
    }

    TEST_CASE("D-grading") {
        SmoothModel sm = build_smooth_model(2, 4);
        auto d = d_grading(sm.module, lowest_weight(sm.module));
        CHECK(d.direct_sum);
        for (int k = 0; k <= 4; ++k) CHECK(d.pieces.at(k) == sm.jacobian->homology_degree(k));
        CHECK(phi_d_consistency(sm.module, d).status == Status::pass);
        HeisenbergModule stripped = sm.module;
        stripped.aj.clear();
        CHECK_THROWS_AS(d_grading(stripped, lowest_weight(stripped)), ModelError);
    }

    TEST_CASE("structure and mumu reports pass on smooth models") {
        for (int g = 1; g <= 2; ++g) {
            SmoothModel sm = build_smooth_model(g, 2 * g + 2);
            for (const auto& c : heisenberg_structure_report(sm.module)) CHECK_MESSAGE(c.status == Status::pass, c.check_id);
            for (const auto& c : mumu_property_check(sm.module, lowest_weight(sm.module)))
                CHECK_MESSAGE(c.status == Status::pass, c.check_id);
        }
    }

    TEST_CASE("sl2 and filtration checks on smooth models") {
        for (int g = 1; g <= 2; ++g) {
            SmoothModel sm = build_smooth_model(g, 2 * g);
            auto d = d_grading(sm.module, lowest_weight(sm.module));
            for (const auto& c : sl2_main_check(sm.module, d)) CHECK_MESSAGE(c.status == Status::pass, c.check_id);
            for (const auto& c : lefschetz_filtration_check(sm.module, d, sm.jacobian.get()))
                CHECK_MESSAGE(c.status == Status::pass, c.check_id);
        }
    }
}
