#include "doctest.h"

#include "frobenius.hpp"
#include "oracle.hpp"
#include "series.hpp"

using frobcx::AffineMonoid;
using frobcx::Element;
using frobcx::ExtElement;
using frobcx::ExtMonoid;
using frobcx::Field;
using frobcx::MonoidSeries;
using frobcx::RationalSeriesExpr;

namespace {

Element el(std::int64_t v) { return Element::scalar(v); }

const Field gf2 = Field::gf(2);

MonoidSeries make_series(std::int64_t cap,
                         std::initializer_list<std::tuple<std::int64_t, int, long long>> terms) {
    MonoidSeries s;
    s.cap = el(cap);
    for (auto [grade, i, c] : terms) s.add(el(grade), i, c);
    return s;
}

template <typename Fn>
std::string invalid_input_message(Fn&& fn) {
    try {
        fn();
    } catch (const std::invalid_argument& e) {
        return e.what();
    }
    return {};
}

#define CHECK_REFUSES(expr, needle) \
    CHECK(invalid_input_message([&] { (void)(expr); }).find(needle) != std::string::npos)

}  // namespace

TEST_CASE("direct series of the naturals is 1 + t z") {
    auto s = frobcx::direct_series(AffineMonoid::naturals(), el(10), gf2);
    CHECK(s == make_series(10, {{0, 0, 1}, {1, 1, 1}}));
    CHECK(s.str() == "1 + t z");
}

TEST_CASE("direct series of <2> is 1 + t z^2") {
    auto s = frobcx::direct_series(AffineMonoid::numerical({2}), el(6), gf2);
    CHECK(s == make_series(6, {{0, 0, 1}, {2, 1, 1}}));
    CHECK(s.str() == "1 + t z^2");
}

TEST_CASE("direct series of <2,3> to grade 8, against both oracles") {
    const auto expected = make_series(
        8, {{0, 0, 1}, {2, 1, 1}, {3, 1, 1}, {5, 2, 1}, {6, 2, 1}, {8, 3, 1}});

    auto direct = frobcx::direct_series(AffineMonoid::numerical({2, 3}), el(8), gf2);
    CHECK(direct == expected);

    auto expanded = frobcx::expand_closed_form(frobcx::closed_form_two_gen(2, 3), el(8));
    CHECK(expanded == expected);

    // third route: dense-elimination homology per grade
    auto m = AffineMonoid::numerical({2, 3});
    MonoidSeries brute;
    brute.cap = el(8);
    for (const auto& grade : m.elements_up_to(el(8))) {
        std::map<int, std::int64_t> betti;
        if (grade.is_zero())
            betti[-2] = 1;
        else
            betti = oracle::betti_gfp(oracle::chains_by_subsets(m.open_interval(grade).leq), 2);
        for (auto [i, c] : betti) brute.add(grade, i + 2, c);
    }
    CHECK(brute == expected);
}

TEST_CASE("expand_closed_form basics") {
    RationalSeriesExpr one_plus_tz{{{1, el(1)}}, {}};
    CHECK(frobcx::expand_closed_form(one_plus_tz, el(5)) ==
          make_series(5, {{0, 0, 1}, {1, 1, 1}}));

    RationalSeriesExpr geometric{{}, {{2, el(6)}}};
    CHECK(frobcx::expand_closed_form(geometric, el(18)) ==
          make_series(18, {{0, 0, 1}, {6, 2, 1}, {12, 4, 1}, {18, 6, 1}}));

    RationalSeriesExpr zero_denominator{{}, {{1, el(0)}}};
    CHECK_THROWS_AS(frobcx::expand_closed_form(zero_denominator, el(4)),
                    std::invalid_argument);
}

TEST_CASE("closed forms carry the expected factors") {
    auto two = frobcx::closed_form_two_gen(2, 3);
    CHECK(two.str() == "(1 + t z^2)(1 + t z^3) / (1 - t^2 z^6)");

    auto pqr = frobcx::closed_form_pqr(2, 3, 5);
    CHECK(pqr.str() ==
          "(1 + t z^6)(1 + t z^10)(1 + t z^15) / (1 - t^2 z^30)(1 - t^2 z^30)");

    auto arith = frobcx::closed_form_arithmetic(4, 3);
    CHECK(arith.str() == "(1 + t z^4)(1 + t z^10) / (1 - t^2 z^20)(1 - t z^7)");

    auto geom = frobcx::closed_form_geometric(2, 3, 2);
    CHECK(geom.str() ==
          "(1 + t z^4)(1 + t z^6)(1 + t z^9) / (1 - t^2 z^12)(1 - t^2 z^18)");
}

TEST_CASE("closed forms reject broken hypotheses by name") {
    CHECK_REFUSES(frobcx::closed_form_two_gen(1, 3), "a >= 2");
    CHECK_REFUSES(frobcx::closed_form_two_gen(2, 4), "multiple");
    CHECK_REFUSES(frobcx::closed_form_pqr(2, 3, 4), "coprime");
    CHECK_REFUSES(frobcx::closed_form_arithmetic(3, 3), "even");
    CHECK_REFUSES(frobcx::closed_form_arithmetic(4, 2), "odd");
    CHECK_REFUSES(frobcx::closed_form_geometric(3, 6, 2), "coprime");
    CHECK_THROWS_AS(frobcx::closed_form("no_such_family", {}), std::invalid_argument);
}

TEST_CASE("extension series: trivial base and cap rules") {
    // base series 1: only the l = 0, k <= 1 terms survive under a small cap
    auto p = frobcx::series_one(el(4));
    auto ext = frobcx::extension_series(p, el(6), 2, el(4));
    REQUIRE(ext.terms.size() == 2);
    CHECK(ext.coeff({el(0), 0}, 0) == 1);
    CHECK(ext.coeff({el(0), 1}, 1) == 1);

    // requesting a cap beyond the input series is refused
    CHECK_REFUSES(frobcx::extension_series(p, el(6), 2, el(10)), "cap");
}

TEST_CASE("transfer formula matches direct extension series") {
    // <2>[6/2]
    auto base = frobcx::direct_series(AffineMonoid::numerical({2}), el(16), gf2);
    auto transferred = frobcx::extension_series(base, el(6), 2, el(16));
    ExtMonoid e(AffineMonoid::numerical({2}), el(6), 2);
    auto direct = frobcx::direct_series(e, el(16), gf2);
    CHECK(transferred == direct);

    // <6,10>[30/5] exercises k >= 2 grades, which must all vanish
    auto base2 = frobcx::direct_series(AffineMonoid::numerical({6, 10}), el(40), gf2);
    auto transferred2 = frobcx::extension_series(base2, el(30), 5, el(40));
    ExtMonoid e2(AffineMonoid::numerical({6, 10}), el(30), 5);
    CHECK(transferred2 == frobcx::direct_series(e2, el(40), gf2));
    for (const auto& [key, c] : transferred2.terms) CHECK(key.first.k <= 1);
}

TEST_CASE("r = 2 collapses the transfer to a single geometric factor") {
    auto base = frobcx::direct_series(AffineMonoid::numerical({2}), el(20), gf2);
    auto via_theorem = frobcx::extension_series(base, el(6), 2, el(20));

    // alternate route: multiply by the geometric series in one half-step of rho
    frobcx::ExtSeries alternate;
    alternate.lambda_cap = el(20);
    alternate.r = 2;
    for (const auto& [key, c] : base.terms) {
        for (std::int64_t steps = 0;; ++steps) {
            Element lambda = key.first.plus(el(6).scaled(steps / 2));
            if (!lambda.within(el(20))) break;
            alternate.add({lambda, steps % 2}, key.second + static_cast<int>(steps), c);
        }
    }
    CHECK(via_theorem == alternate);
}

TEST_CASE("realized transfer equals the realized direct series") {
    // <2>[6/2] ~ <2,3>: push the transferred series through the grade map
    auto base = frobcx::direct_series(AffineMonoid::numerical({2}), el(24), gf2);
    auto transferred = frobcx::extension_series(base, el(6), 2, el(24));
    ExtMonoid e(AffineMonoid::numerical({2}), el(6), 2);
    auto real = e.numerical_realization();
    REQUIRE(real.has_value());
    auto realized = frobcx::realize_series(transferred, *real, el(24));
    auto direct = frobcx::direct_series(AffineMonoid::numerical({2, 3}), el(24), gf2);
    CHECK(realized == direct);
}

TEST_CASE("substitute_scale") {
    auto naturals_series = frobcx::direct_series(AffineMonoid::naturals(), el(3), gf2);
    auto doubled = frobcx::substitute_scale(naturals_series, 2);
    CHECK(doubled == make_series(6, {{0, 0, 1}, {2, 1, 1}}));
    CHECK(doubled == frobcx::direct_series(AffineMonoid::numerical({2}), el(6), gf2));

    auto expr = frobcx::closed_form_two_gen(2, 3);
    auto same = frobcx::substitute_scale(expr, 1);
    CHECK(same.str() == expr.str());

    // scaled two-generator expansion equals the scaled monoid's direct series
    auto scaled_expansion =
        frobcx::expand_closed_form(frobcx::substitute_scale(expr, 3), el(30));
    auto scaled_direct = frobcx::direct_series(AffineMonoid::numerical({6, 9}), el(30), gf2);
    CHECK(scaled_expansion == scaled_direct);
}

TEST_CASE("geometric family collapses at p = 2") {
    auto general = frobcx::closed_form_geometric(2, 3, 2);
    auto collapsed = frobcx::closed_form_geometric_p2(3, 2);
    CHECK(collapsed.str() == "(1 + t z^4) / (1 - t z^6)(1 - t z^9)");
    for (std::int64_t cap : {12, 24, 36})
        CHECK(frobcx::expand_closed_form(general, el(cap)) ==
              frobcx::expand_closed_form(collapsed, el(cap)));
}

TEST_CASE("series multiplication: commutative, associative, truncation-stable") {
    auto a = frobcx::expand_closed_form(frobcx::closed_form_two_gen(2, 3), el(12));
    auto b = frobcx::expand_closed_form(frobcx::closed_form_two_gen(3, 5), el(12));
    auto c = frobcx::direct_series(AffineMonoid::numerical({4, 7}), el(12), gf2);
    const auto cap = el(12);

    CHECK(frobcx::series_product(a, b, cap) == frobcx::series_product(b, a, cap));
    CHECK(frobcx::series_product(frobcx::series_product(a, b, cap), c, cap) ==
          frobcx::series_product(a, frobcx::series_product(b, c, cap), cap));

    // truncating inputs first changes nothing (grades are nonnegative)
    const auto tight = el(7);
    auto truncate = [&](const MonoidSeries& s) {
        MonoidSeries out;
        out.cap = tight;
        for (const auto& [key, coeff] : s.terms)
            if (key.first.within(tight)) out.add(key.first, key.second, coeff);
        return out;
    };
    CHECK(truncate(frobcx::series_product(a, b, cap)) ==
          frobcx::series_product(truncate(a), truncate(b), tight));
}

TEST_CASE("family monoids") {
    CHECK(frobcx::family_monoid("two_gen", {{"a", 2}, {"b", 3}}).generators() ==
          std::vector<Element>{el(2), el(3)});
    CHECK(frobcx::family_monoid("pqr", {{"p", 2}, {"q", 3}, {"r", 5}}).generators() ==
          std::vector<Element>{el(6), el(10), el(15)});
    CHECK(frobcx::family_monoid("arithmetic", {{"a", 4}, {"d", 3}}).generators() ==
          std::vector<Element>{el(4), el(7), el(10)});
    CHECK(frobcx::family_monoid("geometric", {{"p", 2}, {"q", 3}, {"n", 2}}).generators() ==
          std::vector<Element>{el(4), el(6), el(9)});
}
