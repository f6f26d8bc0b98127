#pragma once

#include <algorithm>
#include <optional>
#include <ostream>
#include <string_view>
#include <vector>

#include "bgrass/grassmannian.hpp"

namespace bgrass {

// The four shapes a covering pair w' <| w in the quotient order can take:
//   B1  the bar on 1 disappears                            (1 moves lambda -> v)
//   B2  a barred a trades places with a vacant a-1
//   B3  a in u and a smaller b in v swap, all values strictly between barred
//   B4  b in u and a larger barred a swap, all values strictly between vacant
enum class CoverType { B1, B2, B3, B4 };

inline const char* to_string(CoverType t) {
    switch (t) {
        case CoverType::B1: return "B1";
        case CoverType::B2: return "B2";
        case CoverType::B3: return "B3";
        case CoverType::B4: return "B4";
    }
    return "?";
}

inline std::optional<CoverType> cover_type_from_string(std::string_view s) {
    if (s == "B1") return CoverType::B1;
    if (s == "B2") return CoverType::B2;
    if (s == "B3") return CoverType::B3;
    if (s == "B4") return CoverType::B4;
    return std::nullopt;
}

// Image of a cover type under the duality w -> dual(w): B1 and B2 are fixed,
// B3 and B4 exchange.
inline CoverType dual_type(CoverType t) {
    switch (t) {
        case CoverType::B1: return CoverType::B1;
        case CoverType::B2: return CoverType::B2;
        case CoverType::B3: return CoverType::B4;
        case CoverType::B4: return CoverType::B3;
    }
    return t;
}

inline std::ostream& operator<<(std::ostream& os, CoverType t) {
    return os << to_string(t);
}

// One covering relation lower <| upper together with its type.
struct CoveringEdge {
    GrassmannPerm upper;
    GrassmannPerm lower;
    CoverType type;

    friend bool operator==(const CoveringEdge&, const CoveringEdge&) = default;
};

namespace detail {

inline bool contains(const std::vector<int>& sorted, int x) {
    return std::binary_search(sorted.begin(), sorted.end(), x);
}

inline std::vector<int> without(std::vector<int> sorted, int x) {
    sorted.erase(std::find(sorted.begin(), sorted.end(), x));
    return sorted;
}

inline std::vector<int> with(std::vector<int> sorted, int x) {
    sorted.insert(std::lower_bound(sorted.begin(), sorted.end(), x), x);
    return sorted;
}

// every integer strictly between lo and hi lies in `sorted`
inline bool gap_inside(const std::vector<int>& sorted, int lo, int hi) {
    for (int c = lo + 1; c < hi; ++c)
        if (!contains(sorted, c)) return false;
    return true;
}

inline bool edge_before(const CoveringEdge& a, const CoveringEdge& b) {
    if (a.type != b.type) return a.type < b.type;
    if (a.lower != b.lower) return a.lower < b.lower;
    return a.upper < b.upper;
}

} // namespace detail

// All elements covered by w, sorted by (type, lower).  Each move is applied
// on the blocks and the result revalidated through from_blocks.
inline std::vector<CoveringEdge> covered_by(const GrassmannPerm& w) {
    using namespace detail;
    const auto& u = w.u();
    const auto& lam = w.lambda();
    const auto& v = w.v();
    std::vector<CoveringEdge> out;
    auto emit = [&](std::vector<int> u2, std::vector<int> lam2, std::vector<int> v2, CoverType t) {
        out.push_back({w, GrassmannPerm::from_blocks(w.n(), w.k(), std::move(u2),
                                                     std::move(lam2), std::move(v2)), t});
    };
    if (!lam.empty() && lam.front() == 1)
        emit(u, without(lam, 1), with(v, 1), CoverType::B1);
    for (int a : lam)
        if (a >= 2 && contains(v, a - 1))
            emit(u, with(without(lam, a), a - 1), with(without(v, a - 1), a), CoverType::B2);
    for (int a : u)
        for (int b : v)
            if (a > b && gap_inside(lam, b, a))
                emit(with(without(u, a), b), lam, with(without(v, b), a), CoverType::B3);
    for (int b : u)
        for (int a : lam)
            if (a > b && gap_inside(v, b, a))
                emit(with(without(u, b), a), with(without(lam, a), b), v, CoverType::B4);
    std::sort(out.begin(), out.end(), edge_before);
    return out;
}

// All elements covering w, sorted by (type, upper): the moves of covered_by
// read backwards.
inline std::vector<CoveringEdge> covers_of(const GrassmannPerm& w) {
    using namespace detail;
    const auto& u = w.u();
    const auto& lam = w.lambda();
    const auto& v = w.v();
    std::vector<CoveringEdge> out;
    auto emit = [&](std::vector<int> u2, std::vector<int> lam2, std::vector<int> v2, CoverType t) {
        out.push_back({GrassmannPerm::from_blocks(w.n(), w.k(), std::move(u2),
                                                  std::move(lam2), std::move(v2)), w, t});
    };
    if (contains(v, 1))
        emit(u, with(lam, 1), without(v, 1), CoverType::B1);
    for (int a : v)
        if (a >= 2 && contains(lam, a - 1))
            emit(u, with(without(lam, a - 1), a), with(without(v, a), a - 1), CoverType::B2);
    for (int b : u)
        for (int a : v)
            if (a > b && gap_inside(lam, b, a))
                emit(with(without(u, b), a), lam, with(without(v, a), b), CoverType::B3);
    for (int a : u)
        for (int b : lam)
            if (a > b && gap_inside(v, b, a))
                emit(with(without(u, a), b), with(without(lam, b), a), v, CoverType::B4);
    std::sort(out.begin(), out.end(), edge_before);
    return out;
}

// Every type whose defining pattern matches the ordered pair (w, w2).  The
// gap conditions of B3 and B4 are checked explicitly; matching blocks alone
// does not make a covering pair.
inline std::vector<CoverType> classify_all(const GrassmannPerm& w, const GrassmannPerm& w2) {
    using namespace detail;
    if (w.n() != w2.n() || w.k() != w2.k())
        throw ValidationError("cannot classify a pair with different n or k");
    const auto& u = w.u();
    const auto& lam = w.lambda();
    const auto& v = w.v();
    std::vector<CoverType> out;
    if (contains(lam, 1) && w2.u() == u && w2.lambda() == without(lam, 1) &&
        w2.v() == with(v, 1))
        out.push_back(CoverType::B1);
    if (w2.u() == u)
        for (int a : lam)
            if (a >= 2 && contains(v, a - 1) &&
                w2.lambda() == with(without(lam, a), a - 1) &&
                w2.v() == with(without(v, a - 1), a)) {
                out.push_back(CoverType::B2);
                break;
            }
    if (w2.lambda() == lam)
        for (int a : u)
            for (int b : v)
                if (a > b && gap_inside(lam, b, a) &&
                    w2.u() == with(without(u, a), b) && w2.v() == with(without(v, b), a))
                    out.push_back(CoverType::B3);
    if (w2.v() == v)
        for (int b : u)
            for (int a : lam)
                if (a > b && gap_inside(v, b, a) &&
                    w2.u() == with(without(u, b), a) && w2.lambda() == with(without(lam, a), b))
                    out.push_back(CoverType::B4);
    return out;
}

// The type of the covering pair w' = w2 <| w, or nullopt when (w, w2) is not
// a covering pair.
inline std::optional<CoverType> classify(const GrassmannPerm& w, const GrassmannPerm& w2) {
    const std::vector<CoverType> all = classify_all(w, w2);
    if (all.empty()) return std::nullopt;
    if (all.size() > 1)
        throw InvariantError("pair matches more than one cover type");
    return all.front();
}

} // namespace bgrass
