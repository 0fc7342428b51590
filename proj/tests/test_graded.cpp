#include "support.hpp"

#include "lefschetz/errors.hpp"
#include "lefschetz/graded.hpp"

#include <doctest.h>

using namespace lefschetz;
using namespace testing_support;

namespace {

SpacePtr small_space() {
    auto s = std::make_shared<BigradedSpace>();
    s->add_component({0, 0}, {"a"});
    s->add_component({1, 0}, {"b0", "b1"});
    s->add_component({1, 2}, {"c"});
    s->add_component({2, 2}, {"d0", "d1"});
    s->add_component({3, 5}, {});
    return s;
}

// Standard irreducible sl2 representation of dimension n: weights n-1, n-3, ...
void irreducible(std::size_t n, Matrix& e, Matrix& h, Matrix& f) {
    e = Matrix(n, n);
    h = Matrix(n, n);
    f = Matrix(n, n);
    const long top = static_cast<long>(n) - 1;
    for (std::size_t i = 0; i < n; ++i) {
        h(i, i) = top - 2 * static_cast<long>(i);
        if (i + 1 < n) {
            e(i, i + 1) = 1;
            long j = static_cast<long>(i) + 1;
            f(i + 1, i) = j * (top - j + 1);
        }
    }
}

}  // namespace

TEST_SUITE("graded") {
    TEST_CASE("components and offsets") {
        auto s = small_space();
        CHECK(s->total_dim() == 6);
        CHECK(!s->has({3, 5}));
        CHECK(s->offset({1, 2}) == 3);
        CHECK(s->slice_dim(1) == 3);
        CHECK(s->keys_with_n(2) == std::vector<Key>{{2, 2}});
        CHECK(s->max_n() == 2);
        CHECK(s->label({2, 2}, 1) == "d1");
    }

    TEST_CASE("blocks must respect bidegree and shape") {
        auto s = small_space();
        GradedOperator up(s, s, Bidegree{1, 0});
        up.set_block({0, 0}, {1, 0}, Matrix{{1}, {2}});
        CHECK_THROWS_AS(up.set_block({0, 0}, {1, 2}, Matrix{{1}}), ShapeError);
        CHECK_THROWS_AS(up.set_block({0, 0}, {1, 0}, Matrix{{1, 2}}), ShapeError);
        try {
            up.set_block({1, 2}, {2, 2}, Matrix{{1, 2, 3}, {4, 5, 6}});
            FAIL("expected a shape error");
        } catch (const ShapeError& e) {
            CHECK(std::string(e.what()).find("(1,2)->(2,2)") != std::string::npos);
        }
    }

    TEST_CASE("composition matches dense products") {
        auto s = small_space();
        std::mt19937 rng(41);
        GradedOperator a(s, s, Bidegree{1, 0}), b(s, s, Bidegree{0, 2});
        a.set_block({0, 0}, {1, 0}, random_matrix(rng, 2, 1));
        a.set_block({1, 2}, {2, 2}, random_matrix(rng, 2, 1));
        b.set_block({1, 0}, {1, 2}, random_matrix(rng, 1, 2));
        GradedOperator ab = compose(a, b);
        CHECK(ab.bidegree() == Bidegree{1, 2});
        CHECK(ab.dense() == a.dense() * b.dense());
        CHECK(commutator(a, b).dense() == a.dense() * b.dense() - b.dense() * a.dense());
        CHECK(dual(dual(a)) == a);
        CHECK(dual(a).dense() == a.dense().transpose());
    }

    TEST_CASE("composition of incompatible operators is rejected") {
        auto s = small_space();
        auto t = std::make_shared<BigradedSpace>();
        t->add_component({0, 0}, {"x"});
        GradedOperator a(s, s, Bidegree{0, 0}), b(t, t, Bidegree{0, 0});
        CHECK_THROWS_AS(compose(a, b), CompositionError);
    }

    TEST_CASE("window truncation propagates") {
        auto s = small_space();
        GradedOperator up(s, s, Bidegree{1, 0});
        up.apply_window(2);
        CHECK(up.is_truncated({2, 2}));
        CHECK(!up.is_truncated({1, 0}));
        GradedOperator down(s, s, Bidegree{-1, 0});
        GradedOperator c = compose(down, up);
        CHECK(c.is_truncated({2, 2}));
    }

    TEST_CASE("restriction to an invariant family") {
        auto s = small_space();
        GradedOperator a(s, s, Bidegree{0, 0});
        a.set_block({1, 0}, {1, 0}, Matrix{{1, 1}, {0, 2}});
        SubspaceFamily fam;
        fam[{1, 0}] = Subspace::span(Matrix{{1, 0}});
        auto r = restrict(a, fam);
        CHECK(r.space->total_dim() == 1);
        fam[{1, 0}] = Subspace::span(Matrix{{0, 1}});
        CHECK_THROWS_AS(restrict(a, fam), InvarianceError);
    }

    TEST_CASE("filtration validation") {
        Subspace line = Subspace::span(Matrix{{1, 0}});
        Filtration f(1, {line, Subspace::full(2)});
        CHECK(f.at(0).is_zero());
        CHECK(f.at(5).is_full());
        CHECK(f.graded_dims() == std::vector<std::size_t>{1, 1});
        CHECK_THROWS(Filtration(0, {Subspace::full(2), line}));
        CHECK_THROWS(Filtration(0, {line}));
    }

    TEST_CASE("sl2 triples") {
        for (std::size_t n = 1; n <= 7; ++n) {
            Matrix e, h, f;
            irreducible(n, e, h, f);
            CHECK(Sl2Triple::first_failure(e, h, f).empty());
            auto t = Sl2Triple::make(e, h, f);
            auto w = t.weight_spaces();
            CHECK(w.complete);
            CHECK(w.spaces.size() == n);
        }
        Matrix e, h, f;
        irreducible(3, e, h, f);
        const std::string doubled_f = Sl2Triple::first_failure(e, h, f * Rational(2));
        CHECK((doubled_f == "[h,f] = -2f" || doubled_f == "[e,f] = h"));
        CHECK(Sl2Triple::first_failure(e, h * Rational(2), f) == "[h,e] = 2e");
        CHECK_THROWS_AS(Sl2Triple::make(e, h, f * Rational(2)), Sl2VerificationError);
    }
}
