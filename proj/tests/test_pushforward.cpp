#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hilb/pushforward.hpp"

using namespace hilb;

namespace {

const LaurentPoly Q = LaurentPoly::monomial(1, 0);
const LaurentPoly T = LaurentPoly::monomial(0, 1);

RatFunc simple(LaurentPoly num, Weight denominator_weight) {
    Denominator d(Flavor::K);
    d.push(denominator_weight);
    return {std::move(num), std::move(d)};
}

}  // namespace

TEST_CASE("restriction of the tautological line bundle") {
    CHECK(restrict_Q({Partition({2, 1}), {1, 0}}, 1) == Q);
    CHECK(restrict_Q({Partition({2, 1}), {0, 1}}, 2) == T * T);
    CHECK(restrict_Q({Partition({3, 1}), {0, 2}}, 0) == LaurentPoly(1));
    CHECK(restrict_Q({Partition({2, 1}), {1, 0}}, -2) ==
          LaurentPoly::monomial(-2, 0));
    CHECK(restrict_c1Q({Partition({2, 2}), {1, 1}}) == Q + T);
}

TEST_CASE("euler class ratios at nested points") {
    // worked example over lambda = (2,1)
    NestedPoint upper{Partition({2, 1}), {0, 1}};
    CHECK(r_function(upper).equals(
        simple(LaurentPoly(1) - LaurentPoly::monomial(1, -2), {-1, 1})));
    NestedPoint lower{Partition({2, 1}), {1, 0}};
    CHECK(r_function(lower).equals(
        simple(LaurentPoly(1) - LaurentPoly::monomial(-2, 1), {1, -1})));

    // single box: empty products
    NestedPoint tiny{Partition({1}), {0, 0}};
    CHECK(r_function(tiny).equals(RatFunc(LaurentPoly(1), Denominator(Flavor::K))));

    CHECK(r_tilde(upper).equals(
        simple(T * (LaurentPoly(1) - LaurentPoly::monomial(1, -2)), {-1, 1})));
}

TEST_CASE("appendix W, U and R") {
    // W_{0,1} = (q - t)/(1 - t)
    RatFunc w01 = appendix_eval(AppendixFunc::make_W(0, 1));
    Denominator d(Flavor::K);
    d.push({0, -1});
    CHECK(w01.equals(RatFunc(Q - T, d)));

    // W_{a,b}(q,t) = U_{b,a}(t,q)
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b) {
            if (a == 0 && b == 0) continue;
            CHECK(appendix_eval(AppendixFunc::make_W(a, b))
                      .equals(appendix_eval(AppendixFunc::make_U(b, a)).swap_qt()));
        }

    // R agrees with the rescaled Euler ratio on every small nested point
    for (int n = 0; n <= 6; ++n)
        for (const NestedPoint& pt : nested_fixed_points(n))
            CHECK(appendix_eval(AppendixFunc::make_R(pt)).equals(r_tilde(pt)));
}

TEST_CASE("pushforward of Q reproduces the worked example") {
    EquivClass pushed = push_K(nested_Q_power(2, 1));
    CHECK(pushed.at(Partition({2, 1})) == LaurentPoly(1) + Q + T);

    // unit class from one box
    EquivClass one = push_K(nested_unit(Theory::K, 0));
    CHECK(one.at(Partition({1})) == LaurentPoly(1));
}

TEST_CASE("pushforward integrality across small powers") {
    for (int n = 0; n <= 4; ++n)
        for (int m = -3; m <= 6; ++m) {
            EquivClass pushed = push_K(nested_Q_power(n, m));  // must not throw
            for (const auto& [lam, value] : pushed.restrictions())
                CHECK(!value.is_zero());
        }
}

TEST_CASE("duality of pushforwards") {
    for (int n = 0; n <= 4; ++n)
        for (int m = -2; m <= 3; ++m)
            CHECK(push_K(nested_Q_power(n, m)) ==
                  push_K(nested_Q_power(n, 1 - m)).dual());
}

TEST_CASE("cohomological pushforward at the single column") {
    for (int n = 0; n <= 5; ++n) {
        Partition column({n + 1});
        for (int m = 0; m <= 4; ++m) {
            Rational expected(n + 1);
            for (int i = 0; i < m; ++i) expected *= n;
            CHECK(push_H(nested_c1Q_power(n, m)).at(column) ==
                  LaurentPoly::monomial(0, m, expected));
        }
    }
}

TEST_CASE("pullbacks along the two projections") {
    EquivClass v2 = kirwan_K(SymExpr::p(1), 2);
    NestedClass pulled = pullback_p(v2);
    CHECK(pulled.at({Partition({2, 1}), {1, 0}}) == LaurentPoly(1) + T);

    EquivClass v3 = kirwan_K(SymExpr::p(1), 3);
    CHECK(pullback_pi(v3).at({Partition({2, 1}), {1, 0}}) ==
          LaurentPoly(1) + Q + T);

    // unit pulls back to unit
    EquivClass unit(Theory::K, Torus::T, 2);
    for (const Partition& lam : enumerate_partitions(2))
        unit.set(lam, LaurentPoly(1));
    CHECK(pullback_p(unit) == nested_unit(Theory::K, 2));
}

TEST_CASE("limit of the local pushforward sum") {
    // f(lambda) -> 1 + t + ... + t^{lambda_1 - 1} as q -> 0
    for (int target = 1; target <= 6; ++target) {
        NestedClass q_class = nested_Q_power(target - 1, 1);
        for (const Partition& lam : enumerate_partitions(target)) {
            auto lim = limit_q(push_ratfunc_at(q_class, lam),
                               LimitDirection::ZERO);
            REQUIRE(lim.has_value());
            LaurentPoly expected;
            for (int i = 0; i < lam.parts()[0]; ++i)
                expected += LaurentPoly::monomial(0, i);
            CHECK(*lim == expected);
        }
    }
}

TEST_CASE("appendix verification suite") {
    AppendixReport report = verify_appendix(5);
    CHECK(report.ok());
    CHECK(report.checks > 100);

    // R at (2,1) with both corners: all five checks well-defined
    AppendixReport small = verify_appendix(3);
    CHECK(small.ok());
}

TEST_CASE("integrality failure is detected") {
    // a made-up nested class supported on one of the two corners over (2,1);
    // the lone local contribution cannot clear its denominator
    NestedClass bogus(Theory::K, 2);
    bogus.set({Partition({2, 1}), {0, 1}}, LaurentPoly(1));
    CHECK_THROWS_AS(push_K(bogus), IntegralityError);
}
