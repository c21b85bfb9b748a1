#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "test_util.hpp"
#include "traceless/partition.hpp"

using namespace traceless;

namespace {

std::vector<Partition> all_partitions_up_to(int maxSize) {
    std::vector<Partition> out;
    for (int s = 0; s <= maxSize; ++s)
        for (const Partition& p : enumerate_partitions(s, std::max(s, 1))) out.push_back(p);
    return out;
}

}  // namespace

TEST_CASE("dual: examples and involution") {
    CHECK(dual(Partition{4, 2, 1}) == Partition{3, 2, 1, 1});
    CHECK(dual(Partition{}) == Partition{});
    CHECK(dual(Partition{5}) == Partition{1, 1, 1, 1, 1});
    for (const Partition& p : all_partitions_up_to(12)) {
        CHECK(dual(dual(p)) == p);
        CHECK(content(dual(p)) == -content(p));
    }
}

TEST_CASE("content and skew content") {
    CHECK(content(Partition{}) == 0);
    CHECK(content(Partition{3, 2}) == 2);
    CHECK(content(Partition{1, 1, 1}) == -3);
    CHECK(skew_content({Partition{2}, Partition{2}}) == 0);
    CHECK(skew_content({Partition{2}, Partition{1}}) == 1);
    CHECK(skew_content({Partition{1, 1}, Partition{1}}) == -1);
    CHECK_THROWS_AS(skew_content({Partition{1}, Partition{2}}), std::invalid_argument);
}

TEST_CASE("add, intersect, contains") {
    CHECK(add(Partition{2, 1}, Partition{1, 1}) == Partition{3, 2});
    CHECK(intersect(Partition{3, 1}, Partition{2, 2}) == Partition{2, 1});
    CHECK(contains(Partition{3, 2}, Partition{2, 2}));
    CHECK(!contains(Partition{2, 2}, Partition{3}));
    CHECK(contains(Partition{1}, Partition{}));
}

TEST_CASE("partition invariants are enforced") {
    CHECK_THROWS_AS(Partition(std::vector<int>{1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition(std::vector<int>{2, -1}), std::invalid_argument);
    CHECK(Partition(std::vector<int>{3, 1, 0, 0}) == Partition{3, 1});
    CHECK(Partition{}.size() == 0);
    CHECK(Partition{4, 2}.part(7) == 0);
}

TEST_CASE("bar map") {
    CHECK(bar(Partition{1}, 3) == Partition{1, 1});
    CHECK(bar(Partition{1}, 1) == Partition{});
    CHECK(bar(Partition{1, 1}, 2) == Partition{});
    CHECK(bar(Partition{}, 5) == Partition{});
    CHECK(bar(Partition{3, 2}, 4) == Partition{3, 3, 1});
    CHECK_THROWS_AS(bar(Partition{1, 1, 1}, 2), std::invalid_argument);

    // Involution on partitions whose columns all have height < N (so the
    // column count survives the complement).
    for (int N = 1; N <= 5; ++N)
        for (const Partition& p : all_partitions_up_to(6)) {
            if (p.empty() || p.length() > N) continue;
            Partition d = dual(p);
            bool fullColumn = false;
            for (int i = 1; i <= d.length(); ++i)
                if (d.part(i) == N) fullColumn = true;
            if (fullColumn) continue;
            CHECK(bar(bar(p, N), N) == p);
        }
}

TEST_CASE("staircase map and its inverse") {
    StaircaseClass cls = staircase(Partition{4, 2, 1}, Partition{3, 2}, 6);
    CHECK(cls.alpha() == Partition{7, 5, 4, 3, 1});
    CHECK(cls.t() == 3);

    StaircaseClass trivial = staircase(Partition{3, 1}, Partition{}, 4);
    CHECK(trivial.alpha() == Partition{3, 1});
    CHECK(trivial.t() == 0);

    StaircaseClass two = staircase(Partition{1}, Partition{1}, 2);
    CHECK(two.alpha() == Partition{2});
    CHECK(two.t() == 1);

    // normalization collapses full columns
    CHECK(StaircaseClass(Partition{2, 1}, 1, 2) == StaircaseClass(Partition{1}, 0, 2));
    RationalLabel back = staircase_inverse(StaircaseClass(Partition{2, 1}, 1, 2));
    CHECK(back.mu == Partition{1});
    CHECK(back.nu == Partition{});

    RationalLabel figure = staircase_inverse(StaircaseClass(Partition{7, 5, 4, 3, 1}, 3, 6));
    CHECK(figure.mu == Partition{4, 2, 1});
    CHECK(figure.nu == Partition{3, 2});

    CHECK_THROWS_AS(staircase(Partition{1, 1}, Partition{1}, 2), std::invalid_argument);
}

TEST_CASE("staircase round-trips exhaustively") {
    for (int N = 1; N <= 6; ++N) {
        std::vector<Partition> parts;
        for (int s = 0; s <= 5; ++s)
            for (const Partition& p : enumerate_partitions(s, std::max(s, 1)))
                if (p.length() <= N) parts.push_back(p);
        for (const Partition& mu : parts)
            for (const Partition& nu : parts) {
                if (mu.length() + nu.length() > N) continue;
                RationalLabel round = staircase_inverse(staircase(mu, nu, N));
                CHECK(round.mu == mu);
                CHECK(round.nu == nu);
            }
        // opposite direction over minimal representatives
        for (int s = 0; s <= 6; ++s)
            for (const Partition& alpha : enumerate_partitions(s, std::max(s, 1))) {
                if (alpha.length() > N) continue;
                for (int t = 0; t <= 4; ++t) {
                    if (t > 0 && alpha.length() == N) continue;   // not minimal
                    StaircaseClass cls(alpha, t, N);
                    RationalLabel lbl = staircase_inverse(cls);
                    CHECK(in_lambda(lbl, N));
                    CHECK(staircase(lbl.mu, lbl.nu, N) == cls);
                }
            }
    }
}

TEST_CASE("enumerate_partitions: frozen order and counts") {
    std::vector<Partition> got = enumerate_partitions(5, 3);
    std::vector<Partition> want{{2, 2, 1}, {3, 1, 1}, {3, 2}, {4, 1}, {5}};
    CHECK(got == want);
    CHECK(enumerate_partitions(0, 7) == std::vector<Partition>{Partition{}});
    CHECK(enumerate_partitions(3, 1) == std::vector<Partition>{Partition{3}});

    for (int s = 0; s <= 12; ++s)
        CHECK(static_cast<long>(enumerate_partitions(s, std::max(s, 1)).size()) ==
              testutil::partition_count(s));
}

TEST_CASE("enumerate_lambda") {
    auto as_set = [](const std::vector<RationalLabel>& v) {
        return std::set<RationalLabel>(v.begin(), v.end());
    };
    CHECK(as_set(enumerate_lambda(3, 2, 0, 3)) ==
          std::set<RationalLabel>{{Partition{3}, Partition{1, 1}},
                                  {Partition{2, 1}, Partition{2}},
                                  {Partition{3}, Partition{2}}});
    CHECK(as_set(enumerate_lambda(3, 2, 2, 3)) ==
          std::set<RationalLabel>{{Partition{1}, Partition{}}});
    CHECK(as_set(enumerate_lambda(1, 1, 1, 1)) ==
          std::set<RationalLabel>{{Partition{}, Partition{}}});
    for (const RationalLabel& l : enumerate_lambda(3, 2, 0, 3))
        CHECK(l.mu.length() + l.nu.length() <= 3);
}

TEST_CASE("parse_partition") {
    CHECK(parse_partition("2,1") == Partition{2, 1});
    CHECK(parse_partition("-") == Partition{});
    CHECK(parse_partition("") == Partition{});
    CHECK_THROWS_AS(parse_partition("2,x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("1,2"), std::invalid_argument);
}
