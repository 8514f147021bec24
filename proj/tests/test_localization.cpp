#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "hilb/localization.hpp"

using namespace hilb;

namespace {

WeightMultiset sorted(WeightMultiset w) {
    std::sort(w.begin(), w.end());
    return w;
}

const LaurentPoly Q = LaurentPoly::monomial(1, 0);
const LaurentPoly T = LaurentPoly::monomial(0, 1);

}  // namespace

TEST_CASE("tangent weights of the Hilbert scheme") {
    CHECK(sorted(tangent_weights_hilb(Partition({1}))) ==
          sorted({{1, 0}, {0, 1}}));

    // the two diagrams of the worked four-box table
    CHECK(tangent_weights_hilb(Partition({3, 1})) ==
          WeightMultiset{{0, 1}, {1, 0}, {0, 2}, {1, -1}, {-1, 3}, {2, -2},
                         {0, 1}, {1, 0}});
    CHECK(tangent_weights_hilb(Partition({2, 2})) ==
          WeightMultiset{{-1, 1}, {2, 0}, {0, 1}, {1, 0}, {-1, 2}, {2, -1},
                         {0, 2}, {1, -1}});

    for (int n = 1; n <= 8; ++n)
        for (const Partition& lam : enumerate_partitions(n)) {
            auto w = tangent_weights_hilb(lam);
            CHECK(static_cast<int>(w.size()) == 2 * n);
            // each box contributes one weight with i >= 1 and one with i <= 0
            int positive = 0, nonpositive = 0;
            for (Weight x : w) (x.first >= 1 ? positive : nonpositive)++;
            CHECK(positive == n);
            CHECK(nonpositive == n);
        }
}

TEST_CASE("tangent weights of the nested scheme") {
    // added box on top of the first column of (3,1)
    CHECK(tangent_weights_nested({Partition({3, 1}), {0, 2}}) ==
          WeightMultiset{{0, 1}, {1, 0}, {0, 1}, {1, -1}, {-1, 2}, {2, -2},
                         {0, 1}, {1, 0}});
    // added box at the corner (1,1) of (2,2)
    CHECK(tangent_weights_nested({Partition({2, 2}), {1, 1}}) ==
          WeightMultiset{{-1, 1}, {1, 0}, {0, 1}, {1, 0}, {-1, 2}, {2, -1},
                         {0, 1}, {1, -1}});
    // no modification for the one-box diagram
    CHECK(tangent_weights_nested({Partition({1}), {0, 0}}) ==
          tangent_weights_hilb(Partition({1})));

    // the modified entries are exactly the boxes below plus the boxes left
    // of the added corner, each shifted by one in a single coordinate
    for (int n = 0; n <= 7; ++n)
        for (const NestedPoint& pt : nested_fixed_points(n)) {
            auto plain = weight_table(pt.lambda, std::nullopt);
            auto nested = weight_table(pt.lambda, pt.corner);
            int changed = 0;
            for (std::size_t row = 0; row < plain.size(); ++row) {
                for (auto [before, after] :
                     {std::pair{plain[row].first, nested[row].first},
                      std::pair{plain[row].second, nested[row].second}}) {
                    if (before == after) continue;
                    ++changed;
                    int di = std::abs(before.first - after.first);
                    int dj = std::abs(before.second - after.second);
                    CHECK(di + dj == 1);
                }
            }
            CHECK(changed == pt.corner.i + pt.corner.j);
        }
}

TEST_CASE("Euler classes") {
    Denominator d = euler_K({{1, 0}, {0, 1}});
    CHECK(d.factors().size() == 2);
    CHECK(d.expand() == (LaurentPoly(1) - LaurentPoly::monomial(-1, 0)) *
                            (LaurentPoly(1) - LaurentPoly::monomial(0, -1)));

    CHECK(euler_H({{1, 0}, {0, 1}}) == Q * T);
    CHECK(euler_H({{0, 1}, {0, 2}}) == T * T * 2);
    CHECK_THROWS_AS(euler_K({{0, 0}}), std::domain_error);
    CHECK_THROWS_AS(euler_H({{0, 0}}), std::domain_error);
}

TEST_CASE("Kirwan restriction in K-theory") {
    Partition lam({2, 1});
    CHECK(kirwan_restrict_K(SymExpr::e(1), lam, 3) == LaurentPoly(1) + Q + T);
    for (int k = 1; k <= 3; ++k)
        CHECK(kirwan_restrict_K(SymExpr::p(k), lam, 3) ==
              LaurentPoly(1) + LaurentPoly::monomial(k, 0) +
                  LaurentPoly::monomial(0, k));
    CHECK(kirwan_restrict_K(SymExpr::e(2), lam, 3) == Q * T + Q + T);

    // empty partition conventions
    CHECK(kirwan_restrict_K(SymExpr::p(1), Partition{}, 0).is_zero());
    CHECK(kirwan_restrict_K(SymExpr::e(2), Partition{}, 0).is_zero());
    CHECK(kirwan_restrict_K(SymExpr::p(0), Partition{}, 0).is_zero());
    CHECK(kirwan_restrict_K(SymExpr::constant(1), Partition{}, 0) ==
          LaurentPoly(1));

    // p_0 evaluates to the point count
    CHECK(kirwan_restrict_K(SymExpr::p(0), lam, 3) == LaurentPoly(3));

    // negative indices are Laurent
    CHECK(kirwan_restrict_K(SymExpr::p(-1), lam, 3) ==
          LaurentPoly(1) + LaurentPoly::monomial(-1, 0) +
              LaurentPoly::monomial(0, -1));
}

TEST_CASE("Kirwan restriction in cohomology") {
    CHECK(kirwan_restrict_H(SymExpr::p(1), Partition({2}), 2) == T);
    CHECK(kirwan_restrict_H(SymExpr::e(1), Partition({2, 1}), 3) == Q + T);

    // single column: p_k(0, t, 2t, ..., nt)
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= 3; ++k) {
            LaurentPoly expected;
            Rational sum(0);
            for (int j = 0; j <= n; ++j) {
                Rational p(1);
                for (int i = 0; i < k; ++i) p *= j;
                sum += p;
            }
            expected = LaurentPoly::monomial(0, k, sum);
            CHECK(kirwan_restrict_H(SymExpr::p(k), Partition({n + 1}), n + 1) ==
                  expected);
        }

    CHECK_THROWS_AS(kirwan_H(SymExpr::p(-1), 2), std::domain_error);
}

TEST_CASE("kirwan classes and their structure") {
    // e_1 restriction has exactly n monomials, coefficient one each
    for (int n = 1; n <= 6; ++n) {
        EquivClass v = kirwan_K(SymExpr::e(1), n);
        for (const auto& [lam, value] : v.restrictions()) {
            CHECK(value.term_count() == n);
            for (const auto& [e, c] : value.terms()) {
                CHECK(c == 1);
                CHECK(lam.contains({e.first, e.second}));
            }
        }
    }

    // homogeneity of cohomological power sums
    for (int n = 1; n <= 5; ++n)
        for (int k = 1; k <= 4; ++k) {
            EquivClass cl = kirwan_H(SymExpr::p(k), n);
            for (const auto& [lam, value] : cl.restrictions()) {
                CHECK(value.is_homogeneous());
                if (!value.is_zero()) {
                    CHECK(value.min_q_degree() + value.min_t_degree() >= 0);
                    auto first = value.terms().begin()->first;
                    CHECK(first.first + first.second == k);
                }
            }
        }
}

TEST_CASE("specialization of classes") {
    EquivClass cl(Theory::K, Torus::T, 1);
    cl.set(Partition({1}), LaurentPoly(1) + Q + T);
    EquivClass ty = specialize_class(cl, Torus::Ty);
    CHECK(ty.torus() == Torus::Ty);
    CHECK(ty.at(Partition({1})) == LaurentPoly(2) + T);

    EquivClass h(Theory::H, Torus::T, 1);
    h.set(Partition({1}), Q + T);
    CHECK(specialize_class(h, Torus::Ty).at(Partition({1})) == T);

    EquivClass deg2(Theory::H, Torus::T, 1);
    deg2.set(Partition({1}), T * T);
    CHECK_THROWS_AS(specialize_class(deg2, Torus::NONE), std::domain_error);

    EquivClass constant(Theory::H, Torus::T, 1);
    constant.set(Partition({1}), LaurentPoly(5));
    CHECK(specialize_class(constant, Torus::NONE).at(Partition({1})) ==
          LaurentPoly(5));

    // specialization only shrinks the torus
    CHECK_THROWS_AS(specialize_class(ty, Torus::T), std::invalid_argument);
}

TEST_CASE("class JSON round trip") {
    EquivClass cl = kirwan_K(SymExpr::p(1) * SymExpr::p(-2), 3);
    EquivClass back = equiv_class_from_json(equiv_class_to_json(cl));
    CHECK(back == cl);
    // serialization is deterministic
    CHECK(equiv_class_to_json(cl) == equiv_class_to_json(back));

    std::string tagged = operator_result_to_json(cl, 2, "localization");
    CHECK(tagged.find("\"provenance\": \"localization\"") != std::string::npos);
    CHECK(tagged.find("\"source_n\": 2") != std::string::npos);
    CHECK(equiv_class_from_json(tagged) == cl);
}

TEST_CASE("weight table formatting") {
    auto rows = weight_table(Partition({1}), std::nullopt);
    CHECK(format_weight_table(rows) == "box (0,0): (0,1), (1,0)\n");
    CHECK_THROWS_AS(weight_table(Partition({3, 1}), BoxCoord{0, 0}),
                    std::domain_error);
}
