#pragma once

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bgrass/errors.hpp"

namespace bgrass {

// Element of the hyperoctahedral group W_n in one-line notation.  Only the
// values at positions 1..n are stored; w(-i) = -w(i) and w(0) = 0 are implied.
class SignedPermutation {
public:
    explicit SignedPermutation(std::vector<int> entries) : entries_(std::move(entries)) {
        const int n = rank();
        if (n == 0)
            throw ValidationError("one-line notation needs at least one entry");
        std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
        for (int i = 0; i < n; ++i) {
            const int e = entries_[static_cast<std::size_t>(i)];
            const int a = std::abs(e);
            if (e == 0 || a > n)
                throw ValidationError("entry " + std::to_string(e) + " at position " +
                                      std::to_string(i + 1) + " is outside the rank-" +
                                      std::to_string(n) + " window");
            if (seen[static_cast<std::size_t>(a)])
                throw ValidationError("absolute value " + std::to_string(a) + " appears twice");
            seen[static_cast<std::size_t>(a)] = 1;
        }
    }

    static SignedPermutation identity(int n) {
        if (n < 1)
            throw ValidationError("rank must be positive, got " + std::to_string(n));
        std::vector<int> e(static_cast<std::size_t>(n));
        std::iota(e.begin(), e.end(), 1);
        return SignedPermutation(std::move(e));
    }

    int rank() const { return static_cast<int>(entries_.size()); }

    const std::vector<int>& entries() const { return entries_; }

    // w(i) for any window position -n <= i <= n.
    int operator()(int i) const {
        const int n = rank();
        if (i < -n || i > n)
            throw ValidationError("window position " + std::to_string(i) +
                                  " is outside [-" + std::to_string(n) + ", " + std::to_string(n) + "]");
        if (i == 0) return 0;
        return i > 0 ? entries_[static_cast<std::size_t>(i - 1)]
                     : -entries_[static_cast<std::size_t>(-i - 1)];
    }

    bool is_identity() const {
        for (int i = 0; i < rank(); ++i)
            if (entries_[static_cast<std::size_t>(i)] != i + 1) return false;
        return true;
    }

    friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;

    // Lexicographic order on the one-line entries; used wherever a
    // deterministic enumeration order is promised.
    friend bool operator<(const SignedPermutation& a, const SignedPermutation& b) {
        return std::lexicographical_compare(a.entries_.begin(), a.entries_.end(),
                                            b.entries_.begin(), b.entries_.end());
    }

private:
    std::vector<int> entries_;
};

// A reflection of W_n: either the pair exchange (i,j)(-i,-j) with
// 1 <= i < |j| <= n, or the sign change (i,-i).  Exchanges crossing zero are
// kept in the normal form with i positive and j negative.
class Reflection {
public:
    enum class Kind { transposition, sign_change };

    static Reflection transposition(int i, int j) {
        if (i < 1 || j == 0 || i >= std::abs(j))
            throw ValidationError("transposition indices must satisfy 1 <= i < |j|, got i = " +
                                  std::to_string(i) + ", j = " + std::to_string(j));
        return Reflection(Kind::transposition, i, j);
    }

    static Reflection sign_change(int i) {
        if (i < 1)
            throw ValidationError("sign change position must be >= 1, got " + std::to_string(i));
        return Reflection(Kind::sign_change, i, -i);
    }

    // Normal form of the reflection exchanging window positions i < j (both
    // nonzero): (i,j)(-i,-j) when |i| != |j|, the sign change when j = -i.
    static Reflection from_window_pair(int i, int j) {
        if (i >= j || i == 0 || j == 0)
            throw ValidationError("window pair must satisfy i < j with both nonzero");
        if (i == -j) return sign_change(j);
        if (i > 0) return transposition(i, j);
        if (j < 0) return transposition(-j, -i);
        // i < 0 < j with |i| != |j|: the same reflection also exchanges
        // positions |i| and -j, which is the normal form.
        const int m = -i;
        return transposition(std::min(m, j), -std::max(m, j));
    }

    Kind kind() const { return kind_; }
    int first() const { return i_; }
    int second() const { return j_; }

    friend bool operator==(const Reflection&, const Reflection&) = default;

private:
    Reflection(Kind kind, int i, int j) : kind_(kind), i_(i), j_(j) {}

    Kind kind_;
    int i_;
    int j_;
};

// Right action of the simple generator s_i: s_0 flips the sign of the first
// entry, s_i for i >= 1 swaps the entries at positions i and i+1.
inline SignedPermutation apply_simple(const SignedPermutation& w, int i) {
    const int n = w.rank();
    if (i < 0 || i >= n)
        throw ValidationError("generator index " + std::to_string(i) +
                              " is outside [0, " + std::to_string(n - 1) + "]");
    std::vector<int> e = w.entries();
    if (i == 0)
        e[0] = -e[0];
    else
        std::swap(e[static_cast<std::size_t>(i - 1)], e[static_cast<std::size_t>(i)]);
    return SignedPermutation(std::move(e));
}

// Right action of a reflection on the one-line notation.
inline SignedPermutation apply_reflection(const SignedPermutation& w, const Reflection& t) {
    const int n = w.rank();
    std::vector<int> e = w.entries();
    if (t.kind() == Reflection::Kind::sign_change) {
        const int i = t.first();
        if (i > n)
            throw ValidationError("reflection position " + std::to_string(i) +
                                  " exceeds rank " + std::to_string(n));
        e[static_cast<std::size_t>(i - 1)] = -e[static_cast<std::size_t>(i - 1)];
    } else {
        const int i = t.first();
        const int j = t.second();
        if (i > n || std::abs(j) > n)
            throw ValidationError("reflection position " + std::to_string(std::abs(j)) +
                                  " exceeds rank " + std::to_string(n));
        if (j > 0) {
            std::swap(e[static_cast<std::size_t>(i - 1)], e[static_cast<std::size_t>(j - 1)]);
        } else {
            // (i,j)(-i,-j) with j < 0 exchanges positions i and |j| across
            // zero: both entries move and change sign.
            const int m = -j;
            const int wi = e[static_cast<std::size_t>(i - 1)];
            e[static_cast<std::size_t>(i - 1)] = -e[static_cast<std::size_t>(m - 1)];
            e[static_cast<std::size_t>(m - 1)] = -wi;
        }
    }
    return SignedPermutation(std::move(e));
}

// #{(i, j) : 1 <= i < j <= n, w(i) > w(j)} with signed comparison.
inline int inversions(const SignedPermutation& w) {
    const auto& e = w.entries();
    int count = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i + 1; j < e.size(); ++j)
            if (e[i] > e[j]) ++count;
    return count;
}

// Coxeter length: inversions minus the sum of the negative entries.
inline int length_full(const SignedPermutation& w) {
    int neg = 0;
    for (int e : w.entries())
        if (e < 0) neg -= e;
    return inversions(w) + neg;
}

// Product w*x with the right factor acting first on positions:
// (w*x)(i) = w(x(i)), signs carried through w(-i) = -w(i).
inline SignedPermutation compose(const SignedPermutation& w, const SignedPermutation& x) {
    if (w.rank() != x.rank())
        throw ValidationError("rank mismatch: " + std::to_string(w.rank()) +
                              " vs " + std::to_string(x.rank()));
    std::vector<int> e(static_cast<std::size_t>(x.rank()));
    for (int i = 1; i <= x.rank(); ++i)
        e[static_cast<std::size_t>(i - 1)] = w(x(i));
    return SignedPermutation(std::move(e));
}

struct ParsedOneline {
    SignedPermutation perm;
    std::optional<int> bar;  // number of entries preceding a '|' marker, if present
};

// Parses whitespace-separated signed entries, with an optional '|' token that
// is recorded but otherwise ignored.
inline ParsedOneline parse_oneline_marked(const std::string& text, int n) {
    if (n < 1)
        throw ValidationError("rank must be positive, got " + std::to_string(n));
    std::vector<int> entries;
    entries.reserve(static_cast<std::size_t>(n));
    std::optional<int> bar;
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    std::istringstream in(text);
    std::string tok;
    int token_no = 0;
    while (in >> tok) {
        ++token_no;
        if (tok == "|") {
            if (bar)
                throw ParseError("second '|' marker at token " + std::to_string(token_no));
            bar = static_cast<int>(entries.size());
            continue;
        }
        int value = 0;
        const char* last = tok.data() + tok.size();
        const auto [ptr, ec] = std::from_chars(tok.data(), last, value);
        if (ec != std::errc() || ptr != last)
            throw ParseError("token " + std::to_string(token_no) + " ('" + tok +
                             "') is not an integer");
        if (value == 0)
            throw ParseError("token " + std::to_string(token_no) + " is zero; entries must be nonzero");
        const int a = std::abs(value);
        if (a > n)
            throw ParseError("token " + std::to_string(token_no) + " ('" + tok +
                             "') is outside the rank-" + std::to_string(n) + " window");
        if (static_cast<int>(entries.size()) == n)
            throw ParseError("more than " + std::to_string(n) + " entries (token " +
                             std::to_string(token_no) + ")");
        if (seen[static_cast<std::size_t>(a)])
            throw ParseError("absolute value " + std::to_string(a) + " repeated at token " +
                             std::to_string(token_no));
        seen[static_cast<std::size_t>(a)] = 1;
        entries.push_back(value);
    }
    if (static_cast<int>(entries.size()) != n)
        throw ParseError("expected " + std::to_string(n) + " entries, got " +
                         std::to_string(entries.size()));
    return ParsedOneline{SignedPermutation(std::move(entries)), bar};
}

inline SignedPermutation parse_oneline(const std::string& text, int n) {
    return parse_oneline_marked(text, n).perm;
}

inline std::string format_oneline(const SignedPermutation& w) {
    std::string out;
    for (int i = 0; i < w.rank(); ++i) {
        if (i > 0) out += ' ';
        out += std::to_string(w.entries()[static_cast<std::size_t>(i)]);
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const SignedPermutation& w) {
    return os << format_oneline(w);
}

} // namespace bgrass
