#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hilb/laurent.hpp"

using namespace hilb;

namespace {

LaurentPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> n_terms(0, 5);
    std::uniform_int_distribution<int> expo(-3, 3);
    std::uniform_int_distribution<int> coeff(-4, 4);
    LaurentPoly p;
    int k = n_terms(rng);
    for (int i = 0; i < k; ++i)
        p += LaurentPoly::monomial(expo(rng), expo(rng), coeff(rng));
    return p;
}

}  // namespace

TEST_CASE("ring operations") {
    LaurentPoly q = LaurentPoly::monomial(1, 0);
    LaurentPoly t = LaurentPoly::monomial(0, 1);

    CHECK((LaurentPoly(1) + q) * (LaurentPoly(1) + t) ==
          LaurentPoly(1) + q + t + q * t);

    LaurentPoly geometric = LaurentPoly(1) + t + t * t;
    CHECK((LaurentPoly(1) - t) * geometric ==
          LaurentPoly(1) - LaurentPoly::monomial(0, 3));

    CHECK(q * LaurentPoly::monomial(-1, 0) == LaurentPoly(1));
    CHECK(q - q == LaurentPoly(0));
    CHECK((q - q).is_zero());
}

TEST_CASE("ring axioms on random inputs") {
    std::mt19937 rng(20240915);
    for (int trial = 0; trial < 200; ++trial) {
        LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("substitute_powers") {
    LaurentPoly p = LaurentPoly(1) + LaurentPoly::monomial(1, 0) +
                    LaurentPoly::monomial(0, 1);
    CHECK(p.substitute_powers(2, 2) ==
          LaurentPoly(1) + LaurentPoly::monomial(2, 0) + LaurentPoly::monomial(0, 2));
    CHECK(LaurentPoly::monomial(1, 0).substitute_powers(-1, -1) ==
          LaurentPoly::monomial(-1, 0));
    CHECK(LaurentPoly::monomial(1, -1).substitute_powers(3, 2) ==
          LaurentPoly::monomial(3, -2));

    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        LaurentPoly a = random_poly(rng), b = random_poly(rng);
        for (int mq : {-2, -1, 1, 3})
            for (int mt : {-1, 2}) {
                CHECK((a * b).substitute_powers(mq, mt) ==
                      a.substitute_powers(mq, mt) * b.substitute_powers(mq, mt));
                CHECK((a + b).substitute_powers(mq, mt) ==
                      a.substitute_powers(mq, mt) + b.substitute_powers(mq, mt));
            }
    }
}

TEST_CASE("specialize") {
    LaurentPoly p = LaurentPoly(1) + LaurentPoly::monomial(1, 0) +
                    LaurentPoly::monomial(0, 1);
    CHECK(p.specialize(Rational(1), std::nullopt) ==
          LaurentPoly(2) + LaurentPoly::monomial(0, 1));
    CHECK_THROWS_AS(LaurentPoly::monomial(-1, 1).specialize(Rational(0), std::nullopt),
                    std::domain_error);
    LaurentPoly two_qt = LaurentPoly::monomial(1, 1, 2);
    CHECK(two_qt.specialize(Rational(1), Rational(1)) == LaurentPoly(2));
    // symbolic pass-through
    CHECK(p.specialize(std::nullopt, std::nullopt) == p);
}

TEST_CASE("divide_exact") {
    LaurentPoly t = LaurentPoly::monomial(0, 1);
    // (1 - t^2) / (1 - t^{-1}) = -t(1+t)
    LaurentPoly num = LaurentPoly(1) - t * t;
    LaurentPoly den = LaurentPoly(1) - LaurentPoly::monomial(0, -1);
    CHECK(divide_exact(num, den) == -(t + t * t));

    CHECK_THROWS_AS(divide_exact(LaurentPoly(1),
                                 LaurentPoly(1) - LaurentPoly::monomial(-1, 0)),
                    IntegralityError);

    std::mt19937 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        LaurentPoly a = random_poly(rng);
        LaurentPoly d = random_poly(rng);
        if (d.is_zero()) continue;
        CHECK(divide_exact(a * d, d) == a);
    }

    // divisors shaped like the Euler denominators: products of 1 - q^{-i}t^{-j}
    std::uniform_int_distribution<int> widx(-2, 2), count(1, 4);
    for (int trial = 0; trial < 100; ++trial) {
        LaurentPoly a = random_poly(rng);
        LaurentPoly d(1);
        for (int k = count(rng); k > 0; --k) {
            int i = widx(rng), j = widx(rng);
            if (i == 0 && j == 0) i = 1;
            d *= LaurentPoly(1) - LaurentPoly::monomial(-i, -j);
        }
        CHECK(divide_exact(a * d, d) == a);
    }
}

TEST_CASE("degree bookkeeping") {
    LaurentPoly p = LaurentPoly::monomial(-2, 5) + LaurentPoly::monomial(3, -1);
    CHECK(p.min_q_degree() == -2);
    CHECK(p.max_q_degree() == 3);
    CHECK(p.min_t_degree() == -1);
    CHECK(p.max_t_degree() == 5);
    CHECK(p.q_coefficient(-2) == LaurentPoly::monomial(0, 5));
    CHECK(!p.is_polynomial());
    CHECK((LaurentPoly::monomial(1, 1) + LaurentPoly::monomial(2, 0)).is_homogeneous());
    CHECK(!(LaurentPoly(1) + LaurentPoly::monomial(1, 0)).is_homogeneous());
}
