#include <doctest.h>

#include <cmath>

#include "nmx/weak_design.hpp"

using namespace nmx;

TEST_CASE("next prime") {
    CHECK(next_prime_at_least(2) == 2);
    CHECK(next_prime_at_least(4) == 5);
    CHECK(next_prime_at_least(6) == 7);
    CHECK(next_prime_at_least(14) == 17);
}

TEST_CASE("single set is the identity block") {
    WeakDesign wd = weak_design(1, 5);
    CHECK(wd.d_total == 5);
    REQUIRE(wd.sets.size() == 1);
    for (std::uint32_t i = 1; i <= 5; ++i) CHECK(wd.sets[0][i - 1] == i);

    // with a prime set size the polynomial universe is l^2
    CHECK(weak_design(2, 5).d_total == 25);
}

TEST_CASE("two sets of size two overlap at most once") {
    WeakDesign wd = weak_design(2, 2);
    std::size_t overlap = 0;
    for (auto a : wd.sets[0])
        for (auto b : wd.sets[1])
            if (a == b) ++overlap;
    CHECK(overlap <= 1);
}

TEST_CASE("m=16 l=5 pairwise overlaps within log2(m)") {
    WeakDesign wd = weak_design(16, 5);
    CHECK(wd.d_total == 25);
    for (std::size_t i = 0; i < wd.sets.size(); ++i) {
        CHECK(wd.sets[i].size() == 5);
        for (std::size_t j = 0; j < i; ++j) {
            std::size_t overlap = 0;
            for (auto a : wd.sets[i])
                for (auto b : wd.sets[j])
                    if (a == b) ++overlap;
            CHECK(overlap <= 4);  // log2(16)
        }
    }
}

TEST_CASE("overlap sum invariant across generated family") {
    for (std::size_t l : {2, 4, 5}) {
        for (std::size_t m = 1; m <= 12; ++m) {
            if (l == 2 && m > 4) continue;
            WeakDesign wd = weak_design(m, l);
            for (std::size_t i = 0; i < m; ++i) {
                double sum = 0;
                for (std::size_t j = 0; j < i; ++j) {
                    std::size_t overlap = 0;
                    for (auto a : wd.sets[i])
                        for (auto b : wd.sets[j])
                            if (a == b) ++overlap;
                    sum += std::pow(2.0, double(overlap));
                }
                CHECK(sum <= wd.overlap_bound * double(m));
            }
        }
    }
}
