#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hilb/ratfunc.hpp"
#include "hilb/series.hpp"

using namespace hilb;

namespace {

const LaurentPoly Q = LaurentPoly::monomial(1, 0);
const LaurentPoly T = LaurentPoly::monomial(0, 1);

// W_{a,b} = (q^{a+1} - t^b) / (q^a - t^b) as a factored rational function:
// q^a - t^b = q^a (1 - q^{-a} t^b), so the denominator is the single weight
// factor (a, -b) with a monomial moved into the numerator.
RatFunc make_W(int a, int b) {
    LaurentPoly num = LaurentPoly::monomial(a + 1, 0) - LaurentPoly::monomial(0, b);
    num *= LaurentPoly::monomial(-a, 0);
    Denominator den(Flavor::K);
    den.push({a, -b});
    return {num, den};
}

RatFunc make_U(int a, int b) {
    LaurentPoly num = LaurentPoly::monomial(a, 0) - LaurentPoly::monomial(0, b + 1);
    num *= LaurentPoly::monomial(-a, 0);
    Denominator den(Flavor::K);
    den.push({a, -b});
    return {num, den};
}

}  // namespace

TEST_CASE("weight factors") {
    CHECK(weight_factor(Flavor::K, {1, 0}) ==
          LaurentPoly(1) - LaurentPoly::monomial(-1, 0));
    CHECK(weight_factor(Flavor::H, {1, 0}) == Q);
    CHECK(weight_factor(Flavor::H, {2, -1}) == Q * 2 - T);
    CHECK_THROWS_AS(weight_factor(Flavor::K, {0, 0}), std::domain_error);
}

TEST_CASE("ratfunc_sum merges denominators") {
    Denominator d(Flavor::K);
    d.push({1, 0});
    RatFunc a(LaurentPoly(1), d), b(T, d);
    std::vector<RatFunc> fs{a, b};
    RatFunc s = ratfunc_sum(fs);
    CHECK(s.num() == LaurentPoly(1) + T);
    CHECK(s.den() == d);

    std::vector<RatFunc> single{a};
    CHECK(ratfunc_sum(single) == a);
}

TEST_CASE("worked pushforward sum from the localization formula") {
    // t (1 - q t^{-2}) / (1 - q t^{-1}) + q (1 - t q^{-2}) / (1 - t q^{-1}),
    // the two corner contributions at lambda = (2,1), sums to 1 + q + t.
    Denominator d1(Flavor::K);
    d1.push({-1, 1});
    RatFunc f1(T * (LaurentPoly(1) - LaurentPoly::monomial(1, -2)), d1);
    Denominator d2(Flavor::K);
    d2.push({1, -1});
    RatFunc f2(Q * (LaurentPoly(1) - LaurentPoly::monomial(-2, 1)), d2);
    std::vector<RatFunc> fs{f1, f2};
    CHECK(ratfunc_sum(fs).to_laurent() == LaurentPoly(1) + Q + T);
}

TEST_CASE("ratfunc equality and dual") {
    // q/(1-q^{-1}) equals -q^2/(1-q) by cross multiplication
    Denominator d1(Flavor::K);
    d1.push({1, 0});
    Denominator d2(Flavor::K);
    d2.push({-1, 0});
    RatFunc f1(Q, d1), f2(-(Q * Q), d2);
    CHECK(f1.equals(f2));
    CHECK(!f1.equals(RatFunc(Q, d2)));

    // inversion identity W(q,t) = q * W(q^{-1},t^{-1})
    RatFunc w = make_W(1, 1);
    RatFunc scaled = w.dual();
    scaled *= Q;
    CHECK(scaled.equals(w));
    // and the swapped-variable identity W_{a,b}(q,t) = U_{b,a}(t,q)
    CHECK(make_W(2, 1).equals(make_U(1, 2).swap_qt()));
}

TEST_CASE("limits of W and U") {
    RatFunc w11 = make_W(1, 1);
    auto lim = limit_q(w11, LimitDirection::ZERO);
    REQUIRE(lim.has_value());
    CHECK(*lim == LaurentPoly(1));

    RatFunc u11 = make_U(1, 1);
    lim = limit_q(u11, LimitDirection::ZERO);
    REQUIRE(lim.has_value());
    CHECK(*lim == T);

    lim = limit_q(u11, LimitDirection::INFINITY_);
    REQUIRE(lim.has_value());
    CHECK(*lim == LaurentPoly(1));

    // q^{-1} t / (1 - q t^{-1}) diverges as q -> 0
    Denominator d(Flavor::K);
    d.push({-1, 1});
    RatFunc divergent(LaurentPoly::monomial(-1, 1), d);
    CHECK(!limit_q(divergent, LimitDirection::ZERO).has_value());
}

TEST_CASE("limit_q agrees with evaluation near the limit point") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> arm(1, 3), leg(0, 3), coin(0, 1);
    Rational q_small(1, 1000000);
    Rational q_large(1000000);
    Rational t0(3, 2);
    for (int trial = 0; trial < 40; ++trial) {
        RatFunc f(LaurentPoly(1), Denominator(Flavor::K));
        for (int k = 0, len = 1 + trial % 3; k < len; ++k) {
            RatFunc g = coin(rng) ? make_W(arm(rng), leg(rng))
                                  : make_U(arm(rng), leg(rng));
            f = f * g;
        }
        for (auto [dir, q0] : {std::pair{LimitDirection::ZERO, q_small},
                               std::pair{LimitDirection::INFINITY_, q_large}}) {
            auto lim = limit_q(f, dir);
            if (!lim) continue;  // W factors diverge at infinity
            Rational numeric = f.num().specialize(q0, t0).coeff(0, 0) /
                               f.den().expand().specialize(q0, t0).coeff(0, 0);
            Rational exact = lim->specialize(q0, t0).coeff(0, 0);
            Rational diff = numeric - exact;
            if (diff < 0) diff = -diff;
            CHECK(diff < Rational(1, 1000));
        }
        CHECK(limit_q(f, LimitDirection::ZERO).has_value());
    }
}

TEST_CASE("power series arithmetic") {
    PowerSeries x = PowerSeries::variable(3);
    PowerSeries expx = x.exp_of();
    CHECK(expx.coeff(0) == 1);
    CHECK(expx.coeff(1) == 1);
    CHECK(expx.coeff(2) == Rational(1, 2));
    CHECK(expx.coeff(3) == Rational(1, 6));

    PowerSeries em = PowerSeries::exp(2, -1);
    CHECK(em.coeff(0) == 1);
    CHECK(em.coeff(1) == -1);
    CHECK(em.coeff(2) == Rational(1, 2));

    PowerSeries one = PowerSeries::constant(2, 1);
    CHECK((one + PowerSeries::variable(2)) * (one - PowerSeries::variable(2)) ==
          one - PowerSeries::variable(2) * PowerSeries::variable(2));

    PowerSeries bad = PowerSeries::constant(2, 1);
    CHECK_THROWS_AS(bad.exp_of(), std::domain_error);
}
