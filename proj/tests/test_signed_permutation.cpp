#include <catch2/catch_amalgamated.hpp>

#include "test_helpers.hpp"

using namespace bgrass;
using helpers::all_signed_permutations;
using helpers::sp;

TEST_CASE("constructor validates one-line notation") {
    CHECK_NOTHROW(SignedPermutation({2, -1, 3}));
    CHECK_THROWS_AS(SignedPermutation({}), ValidationError);
    CHECK_THROWS_AS(SignedPermutation({1, 0, 2}), ValidationError);
    CHECK_THROWS_AS(SignedPermutation({1, 4}), ValidationError);
    CHECK_THROWS_AS(SignedPermutation({1, -1}), ValidationError);
    CHECK_THROWS_AS(SignedPermutation({2, 2, 1}), ValidationError);
}

TEST_CASE("window access extends by w(-i) = -w(i)") {
    const SignedPermutation w({2, -3, 1});
    CHECK(w(1) == 2);
    CHECK(w(2) == -3);
    CHECK(w(-2) == 3);
    CHECK(w(0) == 0);
    CHECK(w(-3) == -1);
    CHECK_THROWS_AS(w(4), ValidationError);
    CHECK_THROWS_AS(w(-4), ValidationError);
}

TEST_CASE("identity") {
    CHECK(SignedPermutation::identity(3).entries() == std::vector<int>{1, 2, 3});
    CHECK(SignedPermutation::identity(3).is_identity());
    CHECK_FALSE(SignedPermutation({1, 3, 2}).is_identity());
    CHECK_THROWS_AS(SignedPermutation::identity(0), ValidationError);
}

TEST_CASE("apply_simple matches the generator actions") {
    const SignedPermutation w({1, 2});
    CHECK(apply_simple(w, 0).entries() == std::vector<int>{-1, 2});
    CHECK(apply_simple(w, 1).entries() == std::vector<int>{2, 1});
    CHECK_THROWS_AS(apply_simple(w, 2), ValidationError);
    CHECK_THROWS_AS(apply_simple(w, -1), ValidationError);
}

TEST_CASE("apply_simple is an involution") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& w : all_signed_permutations(n))
            for (int i = 0; i < n; ++i)
                CHECK(apply_simple(apply_simple(w, i), i) == w);
}

TEST_CASE("each simple step changes length by exactly one") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& w : all_signed_permutations(n)) {
            const int lw = length_full(w);
            for (int i = 0; i < n; ++i) {
                const int diff = length_full(apply_simple(w, i)) - lw;
                CHECK((diff == 1 || diff == -1));
            }
        }
}

TEST_CASE("reflection normal forms") {
    CHECK(Reflection::transposition(1, 3).kind() == Reflection::Kind::transposition);
    CHECK(Reflection::sign_change(2).kind() == Reflection::Kind::sign_change);
    CHECK_THROWS_AS(Reflection::transposition(2, 2), ValidationError);
    CHECK_THROWS_AS(Reflection::transposition(2, -2), ValidationError);
    CHECK_THROWS_AS(Reflection::transposition(0, 1), ValidationError);
    CHECK_THROWS_AS(Reflection::transposition(3, 1), ValidationError);
    CHECK_THROWS_AS(Reflection::sign_change(0), ValidationError);

    // window pairs reduce to the stored normal form
    CHECK(Reflection::from_window_pair(1, 2) == Reflection::transposition(1, 2));
    CHECK(Reflection::from_window_pair(-2, -1) == Reflection::transposition(1, 2));
    CHECK(Reflection::from_window_pair(-2, 2) == Reflection::sign_change(2));
    CHECK(Reflection::from_window_pair(-3, 1) == Reflection::transposition(1, -3));
    CHECK(Reflection::from_window_pair(-1, 3) == Reflection::transposition(1, -3));
    CHECK_THROWS_AS(Reflection::from_window_pair(2, 1), ValidationError);
    CHECK_THROWS_AS(Reflection::from_window_pair(0, 1), ValidationError);
}

TEST_CASE("apply_reflection handles both shapes") {
    const SignedPermutation w({1, 2});
    CHECK(apply_reflection(w, Reflection::transposition(1, 2)).entries() ==
          std::vector<int>{2, 1});
    CHECK(apply_reflection(w, Reflection::transposition(1, -2)).entries() ==
          std::vector<int>{-2, -1});
    CHECK(apply_reflection(w, Reflection::sign_change(2)).entries() ==
          std::vector<int>{1, -2});
    CHECK_THROWS_AS(apply_reflection(w, Reflection::transposition(1, 5)), ValidationError);
    CHECK_THROWS_AS(apply_reflection(w, Reflection::sign_change(3)), ValidationError);
}

TEST_CASE("apply_reflection is an involution for every reflection") {
    for (int n = 1; n <= 3; ++n) {
        std::vector<Reflection> refs;
        for (int i = 1; i <= n; ++i) {
            refs.push_back(Reflection::sign_change(i));
            for (int j = i + 1; j <= n; ++j) {
                refs.push_back(Reflection::transposition(i, j));
                refs.push_back(Reflection::transposition(i, -j));
            }
        }
        CHECK(static_cast<int>(refs.size()) == n * n);
        for (const auto& w : all_signed_permutations(n))
            for (const auto& t : refs)
                CHECK(apply_reflection(apply_reflection(w, t), t) == w);
    }
}

TEST_CASE("inversions counts signed descents of position pairs") {
    CHECK(inversions(SignedPermutation::identity(5)) == 0);
    CHECK(inversions(sp("1 -2")) == 1);
    CHECK(inversions(sp("2 5 6 -8 -7 -4 -1 3")) == 14);
}

TEST_CASE("length_full on pinned examples") {
    CHECK(length_full(SignedPermutation::identity(4)) == 0);
    CHECK(length_full(sp("1 -2")) == 3);
    CHECK(length_full(sp("-1 -2")) == 4);
    CHECK(length_full(sp("2 5 6 -8 -7 -4 -1 3")) == 34);
}

TEST_CASE("length_full equals the generator word length") {
    for (int n = 1; n <= 4; ++n) {
        const auto dist = helpers::bfs_word_lengths(n);
        const auto all = all_signed_permutations(n);
        REQUIRE(dist.size() == all.size());
        for (const auto& w : all)
            CHECK(length_full(w) == dist.at(w.entries()));
    }
}

TEST_CASE("length is zero only at the identity") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& w : all_signed_permutations(n))
            CHECK((length_full(w) == 0) == w.is_identity());
}

TEST_CASE("compose applies the right factor first") {
    const SignedPermutation w = sp("2 -3 1");
    const SignedPermutation x = sp("-2 1 3");
    const SignedPermutation wx = compose(w, x);
    for (int i = 1; i <= 3; ++i)
        CHECK(wx(i) == w(x(i)));
    CHECK_THROWS_AS(compose(w, SignedPermutation::identity(2)), ValidationError);
}

TEST_CASE("compose has the identity as a two-sided unit") {
    const SignedPermutation e = SignedPermutation::identity(3);
    for (const auto& w : all_signed_permutations(3)) {
        CHECK(compose(w, e) == w);
        CHECK(compose(e, w) == w);
    }
}

TEST_CASE("multiplying by a generator equals apply_simple") {
    const SignedPermutation e = SignedPermutation::identity(3);
    for (const auto& w : all_signed_permutations(3))
        for (int i = 0; i < 3; ++i)
            CHECK(compose(w, apply_simple(e, i)) == apply_simple(w, i));
}

TEST_CASE("parse_oneline on well-formed input") {
    CHECK(parse_oneline("2 5 6 -8 -7 -4 -1 3", 8).entries() ==
          std::vector<int>{2, 5, 6, -8, -7, -4, -1, 3});
    CHECK(parse_oneline("  1   2 ", 2) == SignedPermutation::identity(2));

    const auto marked = parse_oneline_marked("2 5 6 | -8 -7 -4 -1 3", 8);
    CHECK(marked.perm.entries() == std::vector<int>{2, 5, 6, -8, -7, -4, -1, 3});
    REQUIRE(marked.bar.has_value());
    CHECK(*marked.bar == 3);
    CHECK_FALSE(parse_oneline_marked("1 2", 2).bar.has_value());
    CHECK(parse_oneline_marked("| 1 2", 2).bar == 0);
    CHECK(parse_oneline_marked("1 2 |", 2).bar == 2);
}

TEST_CASE("parse_oneline rejects malformed input") {
    CHECK_THROWS_AS(parse_oneline("1 2 x", 3), ParseError);
    CHECK_THROWS_AS(parse_oneline("1 1 -2", 3), ParseError);
    CHECK_THROWS_AS(parse_oneline("1 -1 2", 3), ParseError);
    CHECK_THROWS_AS(parse_oneline("0 1", 2), ParseError);
    CHECK_THROWS_AS(parse_oneline("1 5", 2), ParseError);
    CHECK_THROWS_AS(parse_oneline("1 2", 3), ParseError);
    CHECK_THROWS_AS(parse_oneline("1 2 3", 2), ParseError);
    CHECK_THROWS_AS(parse_oneline("1 | 2 |", 2), ParseError);
    CHECK_THROWS_AS(parse_oneline("", 1), ParseError);
    CHECK_THROWS_AS(parse_oneline("1", 0), ValidationError);
}

TEST_CASE("format and parse round trip") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& w : all_signed_permutations(n))
            CHECK(parse_oneline(format_oneline(w), n) == w);
}
