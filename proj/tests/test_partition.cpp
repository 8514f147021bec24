#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "hilb/partition.hpp"

using namespace hilb;

namespace {

// Independent oracle: partition counts via the Euler pentagonal recurrence.
long partition_count(int n) {
    static std::vector<long> p{1};
    for (int m = static_cast<int>(p.size()); m <= n; ++m) {
        long total = 0;
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2;
            int g2 = k * (3 * k + 1) / 2;
            if (g1 > m && g2 > m) break;
            long sign = (k % 2 == 0) ? -1 : 1;
            if (g1 <= m) total += sign * p[m - g1];
            if (g2 <= m) total += sign * p[m - g2];
        }
        p.push_back(total);
    }
    return p[n];
}

// Independent oracle: count boxes strictly right / above by scanning the
// whole diagram.
ArmLeg arm_leg_brute(const Partition& lam, BoxCoord b) {
    ArmLeg out;
    for (const BoxCoord& other : lam.boxes()) {
        if (other.j == b.j && other.i > b.i) ++out.arm;
        if (other.i == b.i && other.j > b.j) ++out.leg;
    }
    return out;
}

}  // namespace

TEST_CASE("enumerate_partitions basic counts and order") {
    auto p0 = enumerate_partitions(0);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0].empty());

    auto p4 = enumerate_partitions(4);
    REQUIRE(p4.size() == 5);
    CHECK(p4[0] == Partition({4}));
    CHECK(p4[1] == Partition({3, 1}));
    CHECK(p4[2] == Partition({2, 2}));
    CHECK(p4[3] == Partition({2, 1, 1}));
    CHECK(p4[4] == Partition({1, 1, 1, 1}));

    CHECK(enumerate_partitions(8).size() == 22);

    for (int n = 0; n <= 12; ++n) {
        auto ps = enumerate_partitions(n);
        CHECK(static_cast<long>(ps.size()) == partition_count(n));
        std::set<Partition> distinct(ps.begin(), ps.end());
        CHECK(distinct.size() == ps.size());
        for (const auto& lam : ps) CHECK(lam.size() == n);
        CHECK(std::is_sorted(ps.rbegin(), ps.rend()));
    }
}

TEST_CASE("arm and leg lengths") {
    Partition lam({2, 1});
    CHECK(lam.arm_leg({0, 0}) == ArmLeg{1, 1});
    CHECK(lam.arm_leg({1, 0}) == ArmLeg{0, 0});
    CHECK(Partition({3, 1}).arm_leg({0, 0}) == ArmLeg{1, 2});
    CHECK_THROWS_AS(lam.arm_leg({5, 5}), std::domain_error);

    for (int n = 1; n <= 8; ++n)
        for (const auto& mu : enumerate_partitions(n))
            for (const BoxCoord& b : mu.boxes())
                CHECK(mu.arm_leg(b) == arm_leg_brute(mu, b));
}

TEST_CASE("corners") {
    CHECK(Partition({2, 1}).corners() ==
          std::vector<BoxCoord>{{0, 1}, {1, 0}});
    CHECK(Partition({5}).corners() == std::vector<BoxCoord>{{0, 4}});
    CHECK(Partition({2, 2, 1}).corners() ==
          std::vector<BoxCoord>{{1, 1}, {2, 0}});
    CHECK(Partition{}.corners().empty());

    for (int n = 1; n <= 8; ++n)
        for (const auto& mu : enumerate_partitions(n)) {
            std::vector<BoxCoord> expected;
            for (const BoxCoord& b : mu.boxes())
                if (mu.arm_leg(b) == ArmLeg{0, 0}) expected.push_back(b);
            std::sort(expected.begin(), expected.end(),
                      [](BoxCoord a, BoxCoord b) { return a.j > b.j; });
            auto cs = mu.corners();
            CHECK(cs == expected);
            // distinct corners have distinct columns and distinct rows
            for (std::size_t a = 0; a + 1 < cs.size(); ++a) {
                CHECK(cs[a].i < cs[a + 1].i);
                CHECK(cs[a].j > cs[a + 1].j);
            }
        }
}

TEST_CASE("add_box_set") {
    auto from_empty = Partition{}.add_box_set();
    REQUIRE(from_empty.size() == 1);
    CHECK(from_empty[0].first == Partition({1}));
    CHECK(from_empty[0].second == BoxCoord{0, 0});

    auto from_one = Partition({1}).add_box_set();
    REQUIRE(from_one.size() == 2);
    CHECK(from_one[0] == std::pair{Partition({2}), BoxCoord{0, 1}});
    CHECK(from_one[1] == std::pair{Partition({1, 1}), BoxCoord{1, 0}});

    auto grown = Partition({2, 1}).add_box_set();
    REQUIRE(grown.size() == 3);
    CHECK(grown[0] == std::pair{Partition({3, 1}), BoxCoord{0, 2}});
    CHECK(grown[1] == std::pair{Partition({2, 2}), BoxCoord{1, 1}});
    CHECK(grown[2] == std::pair{Partition({2, 1, 1}), BoxCoord{2, 0}});

    for (int n = 0; n <= 7; ++n)
        for (const auto& lam : enumerate_partitions(n)) {
            auto additions = lam.add_box_set();
            std::set<int> values(lam.parts().begin(), lam.parts().end());
            CHECK(additions.size() == values.size() + 1);
            for (const auto& [mu, box] : additions) {
                CHECK(mu.size() == n + 1);
                auto cs = mu.corners();
                CHECK(std::find(cs.begin(), cs.end(), box) != cs.end());
            }
        }
}

TEST_CASE("remove_first_column") {
    CHECK(Partition({3, 1}).remove_first_column() == Partition({1}));
    CHECK(Partition({5}).remove_first_column() == Partition{});
    CHECK(Partition({2, 2, 1}).remove_first_column() == Partition({2, 1}));
    CHECK_THROWS_AS(Partition{}.remove_first_column(), std::domain_error);

    for (int n = 1; n <= 8; ++n)
        for (const auto& lam : enumerate_partitions(n))
            CHECK(lam.remove_first_column().size() == n - lam.parts()[0]);
}

TEST_CASE("corner removal round-trips with box addition") {
    for (int n = 1; n <= 8; ++n)
        for (const auto& mu : enumerate_partitions(n))
            for (const BoxCoord& c : mu.corners()) {
                Partition lam = mu.remove_corner(c);
                CHECK(lam.size() == n - 1);
                auto additions = lam.add_box_set();
                bool found = false;
                for (const auto& [grown, box] : additions)
                    if (grown == mu && box == c) found = true;
                CHECK(found);
            }
}

TEST_CASE("text format") {
    CHECK(Partition({3, 1}).to_string() == "3,1");
    CHECK(Partition{}.to_string() == "");
    CHECK(Partition::parse("2,2,1") == Partition({2, 2, 1}));
    CHECK(Partition::parse("") == Partition{});
    for (const auto& lam : enumerate_partitions(6))
        CHECK(Partition::parse(lam.to_string()) == lam);
    CHECK_THROWS(Partition::parse("1,3"));
}
