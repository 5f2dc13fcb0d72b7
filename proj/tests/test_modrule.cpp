#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "nilhom/modrule.hpp"
#include "nilhom/partition.hpp"

using nilhom::ModificationResult;
using nilhom::ModIndex;
using nilhom::Partition;

namespace {

Partition random_partition(std::mt19937& rng) {
    std::uniform_int_distribution<int> count(0, 9);
    std::uniform_int_distribution<int> value(1, 9);
    std::vector<int> parts(static_cast<size_t>(count(rng)));
    for (auto& p : parts) p = value(rng);
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

Partition column(int height) {
    return Partition(std::vector<int>(static_cast<size_t>(height), 1));
}

void check_columns_strictly_decreasing(const ModificationResult& res) {
    for (size_t t = 0; t + 1 < res.strips.size(); ++t)
        CHECK(res.strips[t].columns > res.strips[t + 1].columns);
}

}  // namespace

TEST_CASE("index values") {
    CHECK(ModIndex::infinity().is_infinite());
    CHECK_FALSE(ModIndex::of(3).is_infinite());
    CHECK(ModIndex::of(3).value() == 3);
    CHECK(ModIndex::of(3) == ModIndex::of(3));
    CHECK(ModIndex::infinity() == ModIndex::infinity());
    CHECK_FALSE(ModIndex::of(0) == ModIndex::infinity());
}

TEST_CASE("symplectic rule on worked examples") {
    auto res = nilhom::sp_modification_border(Partition{5, 3, 2}, 3);
    CHECK(res.index == ModIndex::of(0));
    CHECK(res.reduced == Partition{5, 3, 2});
    CHECK(res.strips.empty());

    res = nilhom::sp_modification_border(Partition{1, 1, 1}, 1);
    CHECK(res.index == ModIndex::of(1));
    CHECK(res.reduced == Partition{1});
    REQUIRE(res.strips.size() == 1);
    CHECK(res.strips[0].columns == 1);
    CHECK(res.strips[0].remainder == Partition{1});

    res = nilhom::sp_modification_border(Partition{6, 5, 5, 3, 2, 1, 1}, 1);
    CHECK(res.index.is_infinite());
    CHECK_FALSE(res.reduced.has_value());
    REQUIRE(res.strips.size() == 1);
    CHECK(res.strips[0].remainder == Partition{6, 4, 2, 1});
    CHECK(res.strips[0].columns == 5);

    res = nilhom::sp_modification_border(Partition{}, 0);
    CHECK(res.index == ModIndex::of(0));
    CHECK(res.reduced == Partition{});
}

TEST_CASE("signed-sorting rule on worked examples") {
    auto res = nilhom::sp_modification_weyl(Partition{2, 1}, 2);
    CHECK(res.index == ModIndex::of(0));
    CHECK(res.reduced == Partition{2, 1});
    CHECK(res.strips.empty());

    res = nilhom::sp_modification_weyl(Partition{1, 1, 1}, 1);
    CHECK(res.index == ModIndex::of(1));
    CHECK(res.reduced == Partition{1});

    // a repeated column at n = 0 still sorts to index 1 with empty remainder
    res = nilhom::sp_modification_weyl(Partition{1, 1}, 0);
    CHECK(res.index == ModIndex::of(1));
    CHECK(res.reduced == Partition{});
    auto border = nilhom::sp_modification_border(Partition{1, 1}, 0);
    CHECK(border.index == ModIndex::of(1));
    CHECK(border.reduced == Partition{});
}

TEST_CASE("the two symplectic definitions agree") {
    for (int n = 0; n <= 3; ++n) {
        for (int k = 1; k <= 3; ++k) {
            for (const Partition& lam : nilhom::partitions_in_box(k + 2 * n + 2, k)) {
                INFO("n=", n, " lambda=", lam.to_string());
                auto border = nilhom::sp_modification_border(lam, n);
                auto weyl = nilhom::sp_modification_weyl(lam, n);
                CHECK(border.index == weyl.index);
                CHECK(border.reduced == weyl.reduced);
                CHECK(weyl.strips.empty());
                if (!border.index.is_infinite()) {
                    long long total = 0;
                    for (const auto& strip : border.strips) total += strip.columns;
                    CHECK(border.index == ModIndex::of(total));
                    CHECK(border.index.value() <= lam.size());
                    CHECK(border.reduced->length() <= n);
                }
            }
        }
    }
}

TEST_CASE("single-column labels have a closed form") {
    for (int n = 0; n <= 5; ++n) {
        for (int i = 0; i <= 2 * n + 4; ++i) {
            INFO("n=", n, " i=", i);
            auto res = nilhom::sp_modification_border(column(i), n);
            if (i <= n) {
                CHECK(res.index == ModIndex::of(0));
                CHECK(res.reduced == column(i));
            } else if (n + 2 <= i && i <= 2 * n + 2) {
                CHECK(res.index == ModIndex::of(1));
                CHECK(res.reduced == column(2 * n + 2 - i));
            } else {
                CHECK(res.index.is_infinite());
            }
        }
    }
}

TEST_CASE("strip trail has strictly decreasing column counts") {
    for (const Partition& lam : nilhom::partitions_in_box(9, 3))
        check_columns_strictly_decreasing(nilhom::sp_modification_border(lam, 1));

    std::mt19937 rng(7u);
    std::uniform_int_distribution<int> nn(0, 3);
    for (int trial = 0; trial < 500; ++trial) {
        Partition lam = random_partition(rng);
        int n = nn(rng);
        INFO("lambda=", lam.to_string(), " n=", n);
        check_columns_strictly_decreasing(nilhom::sp_modification_border(lam, n));
    }
}

TEST_CASE("orthogonal rule on worked examples") {
    auto res = nilhom::o_modification_border(Partition{2, 1}, 1);
    CHECK(res.index == ModIndex::of(1));
    CHECK(res.reduced == Partition{});
    CHECK(res.associated);
    REQUIRE(res.strips.size() == 1);
    CHECK(res.strips[0].columns == 2);

    res = nilhom::o_modification_border(Partition{1, 1}, 1);
    CHECK(res.index.is_infinite());
    CHECK_FALSE(res.reduced.has_value());

    res = nilhom::o_modification_border(Partition{}, 5);
    CHECK(res.index == ModIndex::of(0));
    CHECK(res.reduced == Partition{});
    CHECK_FALSE(res.associated);

    res = nilhom::o_modification_border(Partition{3, 2, 1}, 3);
    CHECK(res.index == ModIndex::of(1));
    CHECK(res.reduced == Partition{3});
    CHECK(res.associated);
}

TEST_CASE("orthogonal rule at m = 1 detects self-dual labels") {
    for (const Partition& lam : nilhom::all_partitions_up_to(16)) {
        INFO("lambda=", lam.to_string());
        auto res = nilhom::o_modification_border(lam, 1);
        if (lam.self_dual()) {
            REQUIRE_FALSE(res.index.is_infinite());
            CHECK(res.index == ModIndex::of((lam.size() - lam.rank()) / 2));
            CHECK((res.reduced == Partition{} || res.reduced == Partition{1}));
            long long total = 0;
            for (const auto& strip : res.strips) total += strip.columns - 1;
            CHECK(res.index == ModIndex::of(total));
            CHECK(res.associated == !res.strips.empty());
        } else {
            CHECK(res.index.is_infinite());
        }
    }
}
