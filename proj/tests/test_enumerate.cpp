#include <komino/enumerate.hpp>
#include <komino/serial.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace komino;

TEST_CASE("smallest nontrivial class in emission order") {
    const auto ts = enumerate_towers(TowerClassParams{2, 2, 1});
    REQUIRE(ts.size() == 3);
    CHECK(ts[0].blocks == std::vector<Block>{{0, 0}, {1, -1}});
    CHECK(ts[1].blocks == std::vector<Block>{{0, 0}, {1, 0}});
    CHECK(ts[2].blocks == std::vector<Block>{{0, 0}, {1, 1}});
    CHECK(tower_to_json_string(ts[0]) == R"({"k":2,"blocks":[[0,0],[1,-1]]})");
}

TEST_CASE("emission order is lexicographic on the block list") {
    const auto ts = enumerate_towers(TowerClassParams{2, 4, 1});
    REQUIRE(ts.size() == 35); // C(7,3)
    for (size_t i = 1; i < ts.size(); ++i) CHECK(ts[i - 1].blocks < ts[i].blocks);
}

TEST_CASE("single-base towers of three dominoes") {
    const auto ts = enumerate_towers(TowerClassParams{2, 3, 1});
    REQUIRE(ts.size() == 10); // C(5,2)
    // two level-1 blocks sort before any level-2 block, so the double-deck
    // tower comes first
    CHECK(ts.front().blocks == std::vector<Block>{{0, 0}, {1, -1}, {1, 1}});
    CHECK(ts.back().blocks == std::vector<Block>{{0, 0}, {1, 1}, {2, 2}});
    for (const auto& t : ts) CHECK(validate(t).ok());
}

TEST_CASE("enumeration count equals the closed form") {
    for (int k = 1; k <= 3; ++k)
        for (long long n = 1; n <= 5; ++n)
            for (long long b = 1; b <= n; ++b)
                CHECK(count_by_enumeration(TowerClassParams{k, n, b}) ==
                      count_towers_closed(k, n, b));
}

TEST_CASE("a base-only class holds exactly one tower") {
    const auto ts = enumerate_towers(TowerClassParams{3, 3, 3});
    REQUIRE(ts.size() == 1);
    CHECK(ts[0].blocks == std::vector<Block>{{0, 0}, {0, 3}, {0, 6}});
}

TEST_CASE("partitioned counting is independent of the worker count") {
    const TowerClassParams p{2, 7, 1};
    const Int expect = count_towers_closed(2, 7, 1); // C(13,6) = 1716
    CHECK(expect == 1716);
    for (unsigned w : {1u, 2u, 3u, 8u}) CHECK(count_by_enumeration(p, w) == expect);
    CHECK(count_all_by_enumeration(2, 6, 4) == count_all_closed(2, 6));
}

TEST_CASE("all-bases sweep visits classes in base order") {
    std::vector<long long> bases;
    for_each_tower_all(2, 3, [&](const Tower& t) {
        long long b = 0;
        for (const auto& bl : t.blocks)
            if (bl.level == 0) ++b;
        bases.push_back(b);
    });
    CHECK(std::is_sorted(bases.begin(), bases.end()));
    CHECK(bases.size() == 16); // 4^(3-1)
}

TEST_CASE("bad class parameters throw") {
    CHECK_THROWS_AS(enumerate_towers(TowerClassParams{0, 2, 1}), std::domain_error);
    CHECK_THROWS_AS(enumerate_towers(TowerClassParams{2, 0, 0}), std::domain_error);
    CHECK_THROWS_AS(enumerate_towers(TowerClassParams{2, 2, 3}), std::domain_error);
}
