#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bgrass/grassmannian.hpp"

namespace bgrass {

inline constexpr int kDefaultOracleRankBound = 6;
// element index keys pack 5 bits per entry into 64 bits
inline constexpr int kOracleHardRankCap = 12;
inline constexpr int kOracleCacheFormatVersion = 1;

// Exhaustive table of W_n: every element in lexicographic order, its length,
// and all covering edges of the full Bruhat order.  Edges come from the
// reflection scan -- w covers w*t exactly when the lengths differ by one --
// so the table shares nothing with the block-form move generators it is used
// to check.
struct FullGroupTable {
    int n = 0;
    std::vector<SignedPermutation> elements;                      // lex order
    std::vector<int> lengths;                                     // per element
    std::vector<std::pair<std::int32_t, std::int32_t>> cover_edges;  // (lower, upper), sorted
    std::vector<std::vector<std::int32_t>> up_adjacency;          // lower -> covering uppers

    std::size_t size() const { return elements.size(); }

    int index_of(const SignedPermutation& w) const {
        if (w.rank() != n)
            throw ValidationError("element of rank " + std::to_string(w.rank()) +
                                  " queried against a rank-" + std::to_string(n) + " table");
        const auto it = index_.find(pack(w.entries()));
        if (it == index_.end())
            throw InvariantError("element missing from the table index");
        return it->second;
    }

    // internal -- exposed for construction and loading
    std::uint64_t pack(const std::vector<int>& entries) const {
        std::uint64_t key = 0;
        for (int e : entries) {
            const std::uint64_t code =
                static_cast<std::uint64_t>(e < 0 ? e + n : e + n - 1);
            key = (key << 5) | code;
        }
        return key;
    }

    std::unordered_map<std::uint64_t, std::int32_t> index_;
};

namespace detail {

inline std::vector<SignedPermutation> all_elements_lex(int n) {
    std::vector<SignedPermutation> out;
    std::vector<int> current;
    current.reserve(static_cast<std::size_t>(n));
    std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(current.size()) == n) {
            out.emplace_back(current);
            return;
        }
        for (int val = -n; val <= n; ++val) {
            if (val == 0) continue;
            const int a = std::abs(val);
            if (used[static_cast<std::size_t>(a)]) continue;
            used[static_cast<std::size_t>(a)] = 1;
            current.push_back(val);
            self(self);
            current.pop_back();
            used[static_cast<std::size_t>(a)] = 0;
        }
    };
    rec(rec);
    return out;
}

inline void index_and_adjacency(FullGroupTable& t) {
    t.index_.clear();
    t.index_.reserve(t.size() * 2);
    for (std::int32_t i = 0; i < static_cast<std::int32_t>(t.size()); ++i)
        t.index_.emplace(t.pack(t.elements[static_cast<std::size_t>(i)].entries()), i);
    t.up_adjacency.assign(t.size(), {});
    for (const auto& [lo, hi] : t.cover_edges)
        t.up_adjacency[static_cast<std::size_t>(lo)].push_back(hi);
}

} // namespace detail

inline FullGroupTable build_full_group(int n, int rank_bound = kDefaultOracleRankBound) {
    if (n < 1)
        throw ValidationError("rank must be positive, got " + std::to_string(n));
    if (n > rank_bound || n > kOracleHardRankCap)
        throw ResourceLimitError("rank " + std::to_string(n) + " exceeds the oracle bound " +
                                 std::to_string(std::min(rank_bound, kOracleHardRankCap)));
    FullGroupTable t;
    t.n = n;
    t.elements = detail::all_elements_lex(n);
    t.lengths.reserve(t.size());
    for (const auto& w : t.elements)
        t.lengths.push_back(length_full(w));
    detail::index_and_adjacency(t);  // index first; edges need it
    for (std::int32_t wi = 0; wi < static_cast<std::int32_t>(t.size()); ++wi) {
        const SignedPermutation& w = t.elements[static_cast<std::size_t>(wi)];
        for (int i = -n; i < n; ++i) {
            if (i == 0) continue;
            for (int j = i + 1; j <= n; ++j) {
                if (j == 0) continue;
                if (w(i) <= w(j)) continue;
                const SignedPermutation wp = apply_reflection(w, Reflection::from_window_pair(i, j));
                const std::int32_t pi = static_cast<std::int32_t>(t.index_of(wp));
                if (t.lengths[static_cast<std::size_t>(pi)] ==
                    t.lengths[static_cast<std::size_t>(wi)] - 1)
                    t.cover_edges.emplace_back(pi, wi);
            }
        }
    }
    std::sort(t.cover_edges.begin(), t.cover_edges.end());
    t.cover_edges.erase(std::unique(t.cover_edges.begin(), t.cover_edges.end()),
                        t.cover_edges.end());
    detail::index_and_adjacency(t);
    return t;
}

// Bruhat comparison by walking the cover edges level by level.
inline bool bruhat_leq(const FullGroupTable& t, int a, int b) {
    if (a < 0 || b < 0 || a >= static_cast<int>(t.size()) || b >= static_cast<int>(t.size()))
        throw ValidationError("element index out of range");
    if (a == b) return true;
    if (t.lengths[static_cast<std::size_t>(a)] >= t.lengths[static_cast<std::size_t>(b)])
        return false;
    std::vector<char> reached(t.size(), 0);
    reached[static_cast<std::size_t>(a)] = 1;
    std::vector<std::int32_t> frontier{static_cast<std::int32_t>(a)};
    std::vector<std::int32_t> next;
    for (int level = t.lengths[static_cast<std::size_t>(a)];
         level < t.lengths[static_cast<std::size_t>(b)]; ++level) {
        next.clear();
        for (std::int32_t x : frontier)
            for (std::int32_t y : t.up_adjacency[static_cast<std::size_t>(x)])
                if (!reached[static_cast<std::size_t>(y)]) {
                    reached[static_cast<std::size_t>(y)] = 1;
                    next.push_back(y);
                }
        frontier.swap(next);
        if (frontier.empty()) return false;
    }
    return reached[static_cast<std::size_t>(b)] != 0;
}

// Quotient membership by the descent definition: minimal in its coset iff
// every generator other than s_k takes it up.  Deliberately a different
// route than the block-shape test.
inline bool is_descent_minimal(const SignedPermutation& w, int k) {
    detail::check_k(k, w.rank());
    const int lw = length_full(w);
    for (int i = 0; i < w.rank(); ++i) {
        if (i == k) continue;
        if (length_full(apply_simple(w, i)) < lw) return false;
    }
    return true;
}

// Ground-truth covering pairs of the quotient order: representatives found by
// descent, pairs by length difference one plus full-group Bruhat comparison.
// Returned as (lower, upper), sorted.
inline std::vector<std::pair<GrassmannPerm, GrassmannPerm>>
quotient_cover_oracle(const FullGroupTable& t, int k) {
    detail::check_k(k, t.n);
    std::vector<std::int32_t> reps;
    int max_len = 0;
    for (std::int32_t i = 0; i < static_cast<std::int32_t>(t.size()); ++i)
        if (is_descent_minimal(t.elements[static_cast<std::size_t>(i)], k)) {
            reps.push_back(i);
            max_len = std::max(max_len, t.lengths[static_cast<std::size_t>(i)]);
        }
    std::vector<std::vector<std::int32_t>> by_length(static_cast<std::size_t>(max_len) + 1);
    for (std::int32_t i : reps)
        by_length[static_cast<std::size_t>(t.lengths[static_cast<std::size_t>(i)])].push_back(i);
    std::vector<std::pair<GrassmannPerm, GrassmannPerm>> out;
    for (std::int32_t x : reps) {
        const int lx = t.lengths[static_cast<std::size_t>(x)];
        if (lx + 1 > max_len) continue;
        for (std::int32_t y : by_length[static_cast<std::size_t>(lx) + 1])
            if (bruhat_leq(t, x, y))
                out.emplace_back(from_signed(t.elements[static_cast<std::size_t>(x)], k),
                                 from_signed(t.elements[static_cast<std::size_t>(y)], k));
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<std::pair<GrassmannPerm, GrassmannPerm>>
quotient_cover_oracle(int n, int k, int rank_bound = kDefaultOracleRankBound) {
    const FullGroupTable t = build_full_group(n, rank_bound);
    return quotient_cover_oracle(t, k);
}

// Cache for the expensive part of the table (the edge scan).  The file stores
// only derived data; elements and lengths are regenerated on load and the
// edges sanity-checked against them.
inline void save_table(const FullGroupTable& t, const std::string& path) {
    nlohmann::json j;
    j["format_version"] = kOracleCacheFormatVersion;
    j["n"] = t.n;
    j["element_count"] = t.size();
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [lo, hi] : t.cover_edges)
        edges.push_back({lo, hi});
    j["cover_edges"] = std::move(edges);
    std::ofstream out(path);
    if (!out)
        throw Error("cannot write cache file " + path);
    out << j.dump() << '\n';
}

// nullopt whenever the file is missing, unreadable, or does not describe
// rank expected_n in the current format -- callers fall back to a rebuild.
inline std::optional<FullGroupTable> load_table(const std::string& path, int expected_n) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    const nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
    if (j.is_discarded() || !j.is_object()) return std::nullopt;
    if (j.value("format_version", -1) != kOracleCacheFormatVersion) return std::nullopt;
    if (j.value("n", -1) != expected_n || expected_n < 1 || expected_n > kOracleHardRankCap)
        return std::nullopt;
    FullGroupTable t;
    t.n = expected_n;
    t.elements = detail::all_elements_lex(expected_n);
    if (j.value("element_count", std::size_t{0}) != t.size()) return std::nullopt;
    t.lengths.reserve(t.size());
    for (const auto& w : t.elements)
        t.lengths.push_back(length_full(w));
    const auto it = j.find("cover_edges");
    if (it == j.end() || !it->is_array()) return std::nullopt;
    for (const auto& e : *it) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            return std::nullopt;
        const auto lo = e[0].get<std::int32_t>();
        const auto hi = e[1].get<std::int32_t>();
        if (lo < 0 || hi < 0 || lo >= static_cast<std::int32_t>(t.size()) ||
            hi >= static_cast<std::int32_t>(t.size()))
            return std::nullopt;
        if (t.lengths[static_cast<std::size_t>(hi)] !=
            t.lengths[static_cast<std::size_t>(lo)] + 1)
            return std::nullopt;
        t.cover_edges.emplace_back(lo, hi);
    }
    if (!std::is_sorted(t.cover_edges.begin(), t.cover_edges.end())) return std::nullopt;
    detail::index_and_adjacency(t);
    return t;
}

} // namespace bgrass
