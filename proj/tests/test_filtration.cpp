#include "support.hpp"

#include "lefschetz/errors.hpp"
#include "lefschetz/filtration.hpp"

#include <doctest.h>

using namespace lefschetz;
using namespace testing_support;

namespace {

Filtration chain(std::size_t dim, const std::vector<std::vector<std::size_t>>& coords) {
    std::vector<Subspace> steps;
    for (const auto& c : coords) {
        std::vector<Vector> vs;
        for (auto i : c) vs.push_back(unit_vector(dim, i));
        steps.push_back(Subspace::span(vs, dim));
    }
    return Filtration(0, steps);
}

// N W_k ⊆ W_{k-2}, and N^l induces Gr_{c+l} ≅ Gr_{c-l}, checked directly.
bool has_weight_properties(const Matrix& n, const Filtration& w, int c) {
    for (int k = 0; k <= 2 * c; ++k)
        if (!w.at(k - 2).contains(image(n, w.at(k)))) return false;
    for (int l = 1; l <= c; ++l) {
        Matrix nl = n.power(static_cast<unsigned>(l));
        if (!(sum(image(nl, w.at(c + l)), w.at(c - l - 1)) == w.at(c - l))) return false;
        if (!w.at(c + l - 1).contains(intersect(kernel(nl), w.at(c + l)))) return false;
    }
    return true;
}

}  // namespace

TEST_SUITE("filtration") {
    TEST_CASE("nilpotency degree") {
        CHECK(nilpotency_degree(Matrix(3, 3)) == 0);
        CHECK(nilpotency_degree(jordan_nilpotent({3, 1})) == 2);
        CHECK_THROWS_AS(nilpotency_degree(Matrix{{1, 0}, {0, 0}}), NilpotencyError);
    }

    TEST_CASE("single Jordan block") {
        auto r = weight_filtration(jordan_nilpotent({3}), 2);
        CHECK(r.graded_dims == std::vector<std::size_t>{1, 0, 1, 0, 1});
        CHECK(r.lowers_by_two);
        CHECK(r.lefschetz_isomorphisms);
        CHECK_THROWS_AS(weight_filtration(jordan_nilpotent({3}), 1), ArgumentError);
    }

    TEST_CASE("zero operator is pure of the center weight") {
        auto r = weight_filtration(Matrix(4, 4), 1);
        CHECK(r.graded_dims == std::vector<std::size_t>{0, 4, 0});
    }

    TEST_CASE("graded dimensions follow the Jordan type") {
        std::mt19937 rng(101);
        for (int t = 0; t < 40; ++t) {
            int dim = 1 + t % 9;
            auto parts = random_partition(rng, dim);
            int c = *std::max_element(parts.begin(), parts.end()) - 1 + t % 2;
            Matrix p = random_invertible(rng, static_cast<std::size_t>(dim));
            Matrix n = p * jordan_nilpotent(parts) * inverse(p);
            auto r = weight_filtration(n, c);
            CHECK(r.graded_dims == graded_dims_from_jordan(parts, c));
            CHECK(has_weight_properties(n, r.filtration, c));
            CHECK(weight_filtration_defect(n, r.filtration, c).empty());
        }
    }

    TEST_CASE("defect detects a wrong filtration") {
        Matrix n = jordan_nilpotent({2});
        Filtration bad = chain(2, {{}, {1}, {0, 1}});
        CHECK(!weight_filtration_defect(n, bad, 1).empty());
        Filtration good = chain(2, {{0}, {0}, {0, 1}});
        CHECK(weight_filtration_defect(n, good, 1).empty());
    }

    TEST_CASE("Jacobson-Morozov triple") {
        std::mt19937 rng(103);
        for (int t = 0; t < 30; ++t) {
            int dim = 1 + t % 10;
            auto parts = random_partition(rng, dim);
            Matrix p = random_invertible(rng, static_cast<std::size_t>(dim));
            Matrix n = p * jordan_nilpotent(parts) * inverse(p);
            Sl2Triple tr = jacobson_morozov(n);
            CHECK(tr.e() == n);
            CHECK(Sl2Triple::first_failure(tr.e(), tr.h(), tr.f()).empty());
            int c = *std::max_element(parts.begin(), parts.end()) - 1;
            CHECK(weight_filtration_from_h(tr, c) == weight_filtration(n, c).filtration);
        }
    }

    TEST_CASE("oppositeness of a split pair") {
        // W: e0 ⊆ e0,e1 ⊆ all; P: e2 ⊆ e1,e2 ⊆ all, total 2.
        Filtration w = chain(3, {{0}, {0, 1}, {0, 1, 2}});
        Filtration p = chain(3, {{2}, {1, 2}, {0, 1, 2}});
        auto rep = check_opposite(w, p, 2);
        CHECK(rep.opposite());
        CHECK(rep.entries.size() == 9);
        for (const auto& [e, ok] : rep.complementary) CHECK(ok);
    }

    TEST_CASE("oppositeness violation is located") {
        Filtration w = chain(3, {{0}, {0, 1}, {0, 1, 2}});
        Filtration p = chain(3, {{2}, {0, 2}, {0, 1, 2}});
        auto rep = check_opposite(w, p, 2);
        CHECK(!rep.opposite());
        REQUIRE(rep.violations.size() == 1);
        CHECK(rep.violations[0].k == 0);
        CHECK(rep.violations[0].m == 1);
        CHECK(rep.violations[0].dim_intersection == 1);
    }

    TEST_CASE("Lambda from duality on a Lefschetz string") {
        // H^0, H^2, H^4 one-dimensional, L = cup with a class whose square integrates to 1.
        Matrix l(3, 3);
        l(1, 0) = 1;
        l(2, 1) = 1;
        PairingData pd;
        pd.degrees = {0, 2, 4};
        pd.half_dim = 2;
        pd.pairing = Matrix{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}};
        Matrix lambda = lambda_from_duality(l, pd);
        Matrix h = commutator(l, lambda);
        CHECK(Sl2Triple::first_failure(l, h, lambda).empty());
        CHECK(h == Matrix::diagonal(Vector{-2, 0, 2}));
        CHECK_THROWS_AS(lambda_from_duality(Matrix(3, 3), pd), ModelError);
    }
}
