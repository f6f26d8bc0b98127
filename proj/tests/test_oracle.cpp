#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>

#include "test_helpers.hpp"

using namespace bgrass;
using helpers::all_signed_permutations;
using helpers::sp;

TEST_CASE("full group table enumerates W_n in lex order") {
    const auto t1 = build_full_group(1);
    REQUIRE(t1.size() == 2);
    CHECK(t1.elements[0].entries() == std::vector<int>{-1});
    CHECK(t1.elements[1].entries() == std::vector<int>{1});
    CHECK(t1.lengths == std::vector<int>{1, 0});
    REQUIRE(t1.cover_edges.size() == 1);
    CHECK(t1.elements[static_cast<std::size_t>(t1.cover_edges[0].first)].is_identity());

    const auto t3 = build_full_group(3);
    CHECK(t3.size() == 48);
    CHECK(t3.elements == all_signed_permutations(3));
    for (std::size_t i = 0; i < t3.size(); ++i)
        CHECK(t3.index_of(t3.elements[i]) == static_cast<int>(i));
    CHECK_THROWS_AS(t3.index_of(sp("1 2")), ValidationError);
}

TEST_CASE("cover edge counts at small rank") {
    CHECK(build_full_group(2).cover_edges.size() == 12);
    CHECK(build_full_group(3).cover_edges.size() == 138);
}

TEST_CASE("edges are graded and connect everything to the extremes") {
    for (int n = 1; n <= 4; ++n) {
        const auto t = build_full_group(n);
        int max_len = 0;
        for (int l : t.lengths)
            max_len = std::max(max_len, l);
        CHECK(max_len == n * n);  // length of the top element -identity
        for (const auto& [lo, hi] : t.cover_edges)
            CHECK(t.lengths[static_cast<std::size_t>(hi)] ==
                  t.lengths[static_cast<std::size_t>(lo)] + 1);
        // everything below the top has a way up, everything above the bottom
        // a way down
        std::vector<int> down_degree(t.size(), 0);
        std::vector<int> up_degree(t.size(), 0);
        for (const auto& [lo, hi] : t.cover_edges) {
            ++up_degree[static_cast<std::size_t>(lo)];
            ++down_degree[static_cast<std::size_t>(hi)];
        }
        for (std::size_t i = 0; i < t.size(); ++i) {
            CHECK((t.lengths[i] == max_len || up_degree[i] > 0));
            CHECK((t.lengths[i] == 0 || down_degree[i] > 0));
        }
    }
}

TEST_CASE("bruhat_leq is a partial order with bottom and top") {
    const auto t = build_full_group(2);
    const int bottom = t.index_of(SignedPermutation::identity(2));
    const int top = t.index_of(sp("-1 -2"));
    for (int a = 0; a < static_cast<int>(t.size()); ++a) {
        CHECK(bruhat_leq(t, a, a));
        CHECK(bruhat_leq(t, bottom, a));
        CHECK(bruhat_leq(t, a, top));
        for (int b = 0; b < static_cast<int>(t.size()); ++b) {
            if (bruhat_leq(t, a, b) && bruhat_leq(t, b, a)) CHECK(a == b);
            for (int c = 0; c < static_cast<int>(t.size()); ++c)
                if (bruhat_leq(t, a, b) && bruhat_leq(t, b, c))
                    CHECK(bruhat_leq(t, a, c));
        }
    }
    CHECK_THROWS_AS(bruhat_leq(t, 0, 8), ValidationError);
    CHECK_THROWS_AS(bruhat_leq(t, -1, 0), ValidationError);
}

TEST_CASE("bruhat_leq on pinned pairs") {
    const auto t = build_full_group(3);
    CHECK(bruhat_leq(t, t.index_of(sp("2 1 3")), t.index_of(sp("-3 -1 2"))));
    CHECK_FALSE(bruhat_leq(t, t.index_of(sp("-1 2 3")), t.index_of(sp("3 2 1"))));
    CHECK_FALSE(bruhat_leq(t, t.index_of(sp("-1 -2 -3")), t.index_of(sp("1 2 3"))));
}

TEST_CASE("descent minimality coincides with the block shape test") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& w : all_signed_permutations(n))
            for (int k = 0; k <= n; ++k)
                CHECK(is_descent_minimal(w, k) == is_grassmannian(w, k));
}

TEST_CASE("quotient oracle on pinned quotients") {
    const auto chain = quotient_cover_oracle(2, 1);
    REQUIRE(chain.size() == 3);
    CHECK(chain[0].first.to_string() == "1 | 2");
    CHECK(chain[0].second.to_string() == "2 | 1");
    CHECK(chain[1].first.to_string() == "2 | -1");
    CHECK(chain[1].second.to_string() == "1 | -2");
    CHECK(chain[2].first.to_string() == "2 | 1");
    CHECK(chain[2].second.to_string() == "2 | -1");

    CHECK(quotient_cover_oracle(3, 3).empty());
    CHECK(quotient_cover_oracle(4, 2).size() == 37);

    // edge counts per quotient, frozen from an exhaustive run
    const auto t5 = build_full_group(5);
    const std::vector<std::size_t> expected{48, 178, 172, 66, 9, 0};
    for (int k = 0; k <= 5; ++k)
        CHECK(quotient_cover_oracle(t5, k).size() == expected[static_cast<std::size_t>(k)]);
}

TEST_CASE("oracle construction respects the rank bounds") {
    CHECK_THROWS_AS(build_full_group(7), ResourceLimitError);
    CHECK_THROWS_AS(build_full_group(3, 2), ResourceLimitError);
    CHECK_THROWS_AS(build_full_group(13, 20), ResourceLimitError);
    CHECK_THROWS_AS(build_full_group(0), ValidationError);
    CHECK_NOTHROW(build_full_group(4, 4));
}

TEST_CASE("table cache round trips and rejects stale files") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "bgrass_cache_test";
    fs::create_directories(dir);
    const std::string path = (dir / "table_n3.json").string();

    const auto t = build_full_group(3);
    save_table(t, path);
    const auto loaded = load_table(path, 3);
    REQUIRE(loaded.has_value());
    CHECK(loaded->n == 3);
    CHECK(loaded->elements == t.elements);
    CHECK(loaded->lengths == t.lengths);
    CHECK(loaded->cover_edges == t.cover_edges);
    CHECK(loaded->up_adjacency == t.up_adjacency);
    // the loaded table answers queries like the fresh one
    for (int k = 0; k <= 3; ++k)
        CHECK(quotient_cover_oracle(*loaded, k) == quotient_cover_oracle(t, k));

    CHECK_FALSE(load_table(path, 2).has_value());
    CHECK_FALSE(load_table((dir / "missing.json").string(), 3).has_value());

    const std::string garbage = (dir / "garbage.json").string();
    std::ofstream(garbage) << "{ not json";
    CHECK_FALSE(load_table(garbage, 3).has_value());

    const std::string tampered = (dir / "tampered.json").string();
    std::ofstream(tampered)
        << R"({"format_version":1,"n":1,"element_count":2,"cover_edges":[[0,0]]})";
    CHECK_FALSE(load_table(tampered, 1).has_value());

    fs::remove_all(dir);
}
