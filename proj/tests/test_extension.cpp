#include "doctest.h"

#include <set>

#include "extension.hpp"
#include "monoid.hpp"

using frobcx::AffineMonoid;
using frobcx::Element;
using frobcx::ExtElement;
using frobcx::ExtMonoid;

namespace {

Element el(std::int64_t v) { return Element::scalar(v); }

ExtElement xe(std::int64_t lambda, std::int64_t k) { return {el(lambda), k}; }

}  // namespace

TEST_CASE("adjoin validates its hypotheses") {
    CHECK_NOTHROW(ExtMonoid(AffineMonoid::numerical({2}), el(6), 2));
    // irreducible rho
    CHECK_THROWS_AS(ExtMonoid(AffineMonoid::numerical({2, 3}), el(2), 2),
                    std::invalid_argument);
    // r too small
    CHECK_THROWS_AS(ExtMonoid(AffineMonoid::numerical({2}), el(6), 1),
                    std::invalid_argument);
    // rho outside the base
    CHECK_THROWS_AS(ExtMonoid(AffineMonoid::numerical({2}), el(7), 2),
                    std::invalid_argument);
}

TEST_CASE("pair addition carries r-th parts into the base") {
    ExtMonoid e(AffineMonoid::numerical({2}), el(6), 3);
    CHECK(e.add(xe(2, 2), xe(4, 2)) == xe(12, 1));  // 2+4 plus one rolled rho
    CHECK(e.add(xe(0, 1), xe(0, 1)) == xe(0, 2));
    CHECK(e.add(xe(0, 2), xe(0, 1)) == xe(6, 0));
    CHECK_THROWS_AS(e.add(xe(1, 0), xe(0, 0)), std::invalid_argument);
}

TEST_CASE("ext_leq follows the displayed order rule") {
    ExtMonoid e(AffineMonoid::numerical({2}), el(6), 2);
    // k > k' forces lambda + rho below the other side: 2 + 6 = 8 is not <= 4
    CHECK_FALSE(e.leq(xe(2, 1), xe(4, 0)));
    CHECK(e.leq(xe(2, 1), xe(2, 1)));  // reflexive, equal-k branch
    CHECK(e.leq(xe(0, 1), xe(2, 1)));  // 0 <= 2 in <2>
    CHECK(e.leq(xe(0, 1), xe(6, 0)));  // 0 + 6 <= 6
    CHECK_FALSE(e.leq(xe(0, 1), xe(4, 0)));
}

TEST_CASE("ext_leq is a partial order; translation invariant") {
    ExtMonoid e(AffineMonoid::numerical({2}), el(6), 3);
    auto box = e.elements_up_to(el(10));
    for (const auto& x : box) {
        CHECK(e.leq(x, x));
        for (const auto& y : box) {
            if (e.leq(x, y) && e.leq(y, x)) CHECK(x == y);
            for (const auto& z : box) {
                if (e.leq(x, y) && e.leq(y, z)) CHECK(e.leq(x, z));
                // translation by z preserves the order (cancellativity)
                CHECK(e.leq(x, y) == e.leq(e.add(x, z), e.add(y, z)));
            }
        }
    }
}

TEST_CASE("the adjoined part climbs in steps of one k") {
    ExtMonoid e(AffineMonoid::numerical({4, 10}), el(14), 2);
    for (const auto& lambda : e.base().elements_up_to(el(20))) {
        for (std::int64_t k = 1; k < e.r(); ++k) {
            CHECK(e.leq({lambda, k - 1}, {lambda, k}));
            CHECK(ExtElement{lambda, k - 1} != ExtElement{lambda, k});
        }
        CHECK(e.leq({lambda, e.r() - 1}, {lambda.plus(e.rho()), 0}));
    }
}

TEST_CASE("ext_open_interval examples in <2>[6/2]") {
    ExtMonoid e(AffineMonoid::numerical({2}), el(6), 2);

    // half a rho sits right above zero
    CHECK(e.open_interval(xe(0, 1)).empty());

    // (2,0): the only candidate below would need 0 + 6 <= 2
    CHECK(e.open_interval(xe(2, 0)).empty());

    auto iv = e.open_interval(xe(6, 0));
    CHECK(iv.elements == std::vector<ExtElement>{xe(0, 1), xe(2, 0), xe(4, 0)});
    // relations: (2,0) < (4,0) only
    for (std::size_t i = 0; i < iv.size(); ++i)
        for (std::size_t j = 0; j < iv.size(); ++j) {
            const bool expected = iv.elements[i] == xe(2, 0) && iv.elements[j] == xe(4, 0);
            if (i != j) CHECK(iv.leq[i][j] == expected);
        }

    CHECK_THROWS_AS(e.open_interval(xe(0, 0)), std::invalid_argument);
    CHECK_THROWS_AS(e.open_interval(xe(3, 0)), std::invalid_argument);
}

TEST_CASE("ext_open_interval agrees with an exhaustive pair scan") {
    ExtMonoid e(AffineMonoid::numerical({2}), el(6), 2);
    for (const auto& x : e.elements_up_to(el(12))) {
        if (x == e.zero()) continue;
        std::set<ExtElement> expected;
        for (const auto& y : e.elements_up_to(x.lambda)) {
            if (y == e.zero() || y == x) continue;
            if (e.leq(y, x)) expected.insert(y);
        }
        auto iv = e.open_interval(x);
        CHECK(std::set<ExtElement>(iv.elements.begin(), iv.elements.end()) == expected);
    }
}

TEST_CASE("numerical realization: found and refused") {
    // <2>[6/2] realizes as <2,3>
    ExtMonoid e(AffineMonoid::numerical({2}), el(6), 2);
    auto real = e.numerical_realization();
    REQUIRE(real.has_value());
    CHECK(real->b == 3);
    CHECK(real->monoid.generators() == std::vector<Element>{el(2), el(3)});
    CHECK(real->grade(xe(4, 1)) == el(7));

    // <6,10>[30/2] realizes as <6,10,15>
    ExtMonoid pqr(AffineMonoid::numerical({6, 10}), el(30), 2);
    auto real_pqr = pqr.numerical_realization();
    REQUIRE(real_pqr.has_value());
    CHECK(real_pqr->b == 15);
    CHECK(real_pqr->monoid.generators() == std::vector<Element>{el(6), el(10), el(15)});

    // base not inside <2>: gcd condition holds but 3 is odd
    ExtMonoid no(AffineMonoid::numerical({2, 3}), el(6), 2);
    CHECK_FALSE(no.numerical_realization().has_value());

    // base not inside <5>
    ExtMonoid no5(AffineMonoid::numerical({6, 10}), el(30), 5);
    CHECK_FALSE(no5.numerical_realization().has_value());

    // gcd(r, b) != 1: <4>[8/2] has b = 4
    ExtMonoid nogcd(AffineMonoid::numerical({4}), el(8), 2);
    CHECK_FALSE(nogcd.numerical_realization().has_value());
}

TEST_CASE("realization is an order-isomorphic monoid map onto its image") {
    ExtMonoid e(AffineMonoid::numerical({4, 10}), el(14), 2);  // realizes as <4,7,10>
    auto real = e.numerical_realization();
    REQUIRE(real.has_value());
    CHECK(real->b == 7);

    auto box = e.elements_up_to(el(24));
    for (const auto& x : box) {
        CHECK(real->monoid.contains(real->grade(x)));
        for (const auto& y : box) {
            CHECK(real->grade(e.add(x, y)) == real->grade(x).plus(real->grade(y)));
            CHECK(e.leq(x, y) == real->monoid.leq(real->grade(x), real->grade(y)));
            if (real->grade(x) == real->grade(y)) CHECK(x == y);  // injective
        }
    }
}
