#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bgrass/errors.hpp"
#include "bgrass/signed_permutation.hpp"

namespace bgrass {

// Minimal-length coset representative of W_n / W_(k), stored as the three
// ascending blocks of its one-line notation
//
//     u_1 .. u_k | -lambda_r .. -lambda_1 v_1 .. v_{n-k-r}
//
// where u, lambda and v are disjoint and cover {1, .., n}.
class GrassmannPerm {
public:
    static GrassmannPerm from_blocks(int n, int k, std::vector<int> u,
                                     std::vector<int> lambda, std::vector<int> v) {
        if (n < 1)
            throw ValidationError("rank must be positive, got " + std::to_string(n));
        if (k < 0 || k > n)
            throw ValidationError("k = " + std::to_string(k) + " must lie in [0, " +
                                  std::to_string(n) + "]");
        if (static_cast<int>(u.size()) != k)
            throw ValidationError("u block has " + std::to_string(u.size()) +
                                  " entries, expected k = " + std::to_string(k));
        if (u.size() + lambda.size() + v.size() != static_cast<std::size_t>(n))
            throw ValidationError("block sizes " + std::to_string(u.size()) + " + " +
                                  std::to_string(lambda.size()) + " + " + std::to_string(v.size()) +
                                  " do not sum to n = " + std::to_string(n));
        auto check_block = [n](const std::vector<int>& b, const char* name) {
            for (std::size_t i = 0; i < b.size(); ++i) {
                if (b[i] < 1 || b[i] > n)
                    throw ValidationError(std::string(name) + " entry " + std::to_string(b[i]) +
                                          " is outside [1, " + std::to_string(n) + "]");
                if (i > 0 && b[i - 1] >= b[i])
                    throw ValidationError(std::string(name) +
                                          " block is not strictly ascending at entry " +
                                          std::to_string(b[i]));
            }
        };
        check_block(u, "u");
        check_block(lambda, "lambda");
        check_block(v, "v");
        std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
        for (const auto* b : {&u, &lambda, &v})
            for (int x : *b) {
                if (seen[static_cast<std::size_t>(x)])
                    throw ValidationError("value " + std::to_string(x) + " appears in two blocks");
                seen[static_cast<std::size_t>(x)] = 1;
            }
        // sizes + distinctness + range force the union to be exactly {1,..,n}
        return GrassmannPerm(n, k, std::move(u), std::move(lambda), std::move(v));
    }

    int n() const { return n_; }
    int k() const { return k_; }
    // number of barred values
    int r() const { return static_cast<int>(lambda_.size()); }

    const std::vector<int>& u() const { return u_; }
    const std::vector<int>& lambda() const { return lambda_; }
    const std::vector<int>& v() const { return v_; }

    std::vector<int> one_line() const {
        std::vector<int> e;
        e.reserve(static_cast<std::size_t>(n_));
        e.insert(e.end(), u_.begin(), u_.end());
        for (auto it = lambda_.rbegin(); it != lambda_.rend(); ++it)
            e.push_back(-*it);
        e.insert(e.end(), v_.begin(), v_.end());
        return e;
    }

    SignedPermutation to_signed() const { return SignedPermutation(one_line()); }

    // One-line notation with a '|' after position k, e.g. "2 5 6 | -8 -7 -4 -1 3".
    std::string to_string() const {
        std::ostringstream os;
        for (int x : u_)
            os << x << ' ';
        os << '|';
        const auto e = one_line();
        for (int i = k_; i < n_; ++i)
            os << ' ' << e[static_cast<std::size_t>(i)];
        return os.str();
    }

    nlohmann::json to_json() const {
        return {{"n", n_}, {"k", k_}, {"u", u_}, {"lambda", lambda_}, {"v", v_}};
    }

    static GrassmannPerm from_json(const nlohmann::json& j) {
        try {
            return from_blocks(j.at("n").get<int>(), j.at("k").get<int>(),
                               j.at("u").get<std::vector<int>>(),
                               j.at("lambda").get<std::vector<int>>(),
                               j.at("v").get<std::vector<int>>());
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("bad JSON for a Grassmannian element: ") + e.what());
        }
    }

    friend bool operator==(const GrassmannPerm&, const GrassmannPerm&) = default;

    friend bool operator<(const GrassmannPerm& a, const GrassmannPerm& b) {
        const auto ea = a.one_line();
        const auto eb = b.one_line();
        return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
    }

private:
    GrassmannPerm(int n, int k, std::vector<int> u, std::vector<int> lambda, std::vector<int> v)
        : n_(n), k_(k), u_(std::move(u)), lambda_(std::move(lambda)), v_(std::move(v)) {}

    int n_;
    int k_;
    std::vector<int> u_;
    std::vector<int> lambda_;
    std::vector<int> v_;
};

inline std::ostream& operator<<(std::ostream& os, const GrassmannPerm& g) {
    return os << g.to_string();
}

namespace detail {

inline void check_k(int k, int n) {
    if (k < 0 || k > n)
        throw ValidationError("k = " + std::to_string(k) + " must lie in [0, " +
                              std::to_string(n) + "]");
}

// Empty string when w is a minimal coset representative for W_n / W_(k),
// otherwise a description of the first violated condition.
inline std::string grassmann_violation(const SignedPermutation& w, int k) {
    const auto& e = w.entries();
    const int n = w.rank();
    for (int i = 0; i < k; ++i) {
        if (e[static_cast<std::size_t>(i)] < 0)
            return "entry " + std::to_string(e[static_cast<std::size_t>(i)]) + " at position " +
                   std::to_string(i + 1) + " is negative inside the first k positions";
        if (i > 0 && e[static_cast<std::size_t>(i - 1)] >= e[static_cast<std::size_t>(i)])
            return "positions " + std::to_string(i) + " and " + std::to_string(i + 1) +
                   " are not ascending inside the first k positions";
    }
    // ascending in signed order == negatives first with falling absolute
    // value, then positives rising
    for (int i = k; i + 1 < n; ++i)
        if (e[static_cast<std::size_t>(i)] >= e[static_cast<std::size_t>(i + 1)])
            return "positions " + std::to_string(i + 1) + " and " + std::to_string(i + 2) +
                   " are not ascending after position k";
    return "";
}

} // namespace detail

inline bool is_grassmannian(const SignedPermutation& w, int k) {
    detail::check_k(k, w.rank());
    return detail::grassmann_violation(w, k).empty();
}

inline GrassmannPerm from_signed(const SignedPermutation& w, int k) {
    detail::check_k(k, w.rank());
    if (const std::string viol = detail::grassmann_violation(w, k); !viol.empty())
        throw ValidationError("not a " + std::to_string(k) + "-Grassmannian one-line form: " + viol);
    const auto& e = w.entries();
    std::vector<int> u(e.begin(), e.begin() + k);
    std::vector<int> lambda;
    std::vector<int> v;
    for (int i = k; i < w.rank(); ++i) {
        const int x = e[static_cast<std::size_t>(i)];
        (x < 0 ? lambda : v).push_back(std::abs(x));
    }
    std::reverse(lambda.begin(), lambda.end());
    return GrassmannPerm::from_blocks(w.rank(), k, std::move(u), std::move(lambda), std::move(v));
}

// The unique minimal-length element of the coset w * W_(k): the first k
// positions are made positive and sorted, the rest sorted in signed order.
inline GrassmannPerm minimal_coset_representative(const SignedPermutation& w, int k) {
    detail::check_k(k, w.rank());
    const auto& e = w.entries();
    std::vector<int> sorted(e.begin(), e.end());
    for (int i = 0; i < k; ++i)
        sorted[static_cast<std::size_t>(i)] = std::abs(sorted[static_cast<std::size_t>(i)]);
    std::sort(sorted.begin(), sorted.begin() + k);
    std::sort(sorted.begin() + k, sorted.end());
    return from_signed(SignedPermutation(std::move(sorted)), k);
}

// The data read off the blocks: alpha_i counts tail values larger than u_i
// being "missing" to its right, lambda is the strict partition of barred
// values, d and mu are the intermediate counts.
struct PartitionPair {
    std::vector<int> alpha;   // weakly increasing, entries in [0, n-k]
    std::vector<int> lambda;  // strictly increasing
    std::vector<int> d;       // d_i = #{ lambda_j > u_i }
    std::vector<int> mu;      // mu_i = #{ v_j > u_i }

    int alpha_weight() const {
        int s = 0;
        for (int a : alpha) s += a;
        return s;
    }
    int lambda_weight() const {
        int s = 0;
        for (int a : lambda) s += a;
        return s;
    }
};

inline PartitionPair partition_pair(const GrassmannPerm& g) {
    const int nk = g.n() - g.k();
    PartitionPair p;
    p.lambda = g.lambda();
    for (int i = 1; i <= g.k(); ++i) {
        const int ui = g.u()[static_cast<std::size_t>(i - 1)];
        int di = 0;
        for (int x : g.lambda())
            if (x > ui) ++di;
        int mi = 0;
        for (int x : g.v())
            if (x > ui) ++mi;
        const int ai = ui - i + di;
        // the two expressions for alpha_i, and the reconstruction of u_i,
        // must agree on any well-formed element
        if (ai != nk - mi)
            throw InvariantError("alpha_" + std::to_string(i) + " disagrees: " +
                                 std::to_string(ai) + " vs " + std::to_string(nk - mi));
        if (ui != nk + i - di - mi)
            throw InvariantError("u_" + std::to_string(i) + " does not reconstruct from d and mu");
        p.alpha.push_back(ai);
        p.d.push_back(di);
        p.mu.push_back(mi);
    }
    return p;
}

// Length through the block data: |alpha| + |lambda|.  Agrees with
// length_full on the one-line notation.
inline int length_grass(const GrassmannPerm& g) {
    const PartitionPair p = partition_pair(g);
    return p.alpha_weight() + p.lambda_weight();
}

// Top element of the quotient: u = (1..k) and every tail value barred.
// Its length is (n + 3k + 1)(n - k) / 2.
inline GrassmannPerm longest_element(int n, int k) {
    if (n < 1)
        throw ValidationError("rank must be positive, got " + std::to_string(n));
    detail::check_k(k, n);
    std::vector<int> u(static_cast<std::size_t>(k));
    std::iota(u.begin(), u.end(), 1);
    std::vector<int> lambda(static_cast<std::size_t>(n - k));
    std::iota(lambda.begin(), lambda.end(), k + 1);
    return GrassmannPerm::from_blocks(n, k, std::move(u), std::move(lambda), {});
}

// The duality w -> minimal representative of w * w0.  On blocks it simply
// exchanges lambda and v; it reverses lengths and the Bruhat order.
inline GrassmannPerm dual(const GrassmannPerm& g) {
    return GrassmannPerm::from_blocks(g.n(), g.k(), g.u(), g.v(), g.lambda());
}

// All k-Grassmannian elements of W_n in lexicographic one-line order.
// There are 2^(n-k) * C(n, k) of them.
inline std::vector<GrassmannPerm> enumerate_grassmannians(int n, int k) {
    if (n < 1)
        throw ValidationError("rank must be positive, got " + std::to_string(n));
    detail::check_k(k, n);
    if (n - k > 30)
        throw ResourceLimitError("enumeration with n - k > 30 is not supported");
    std::vector<GrassmannPerm> out;
    std::vector<int> chosen;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(chosen.size()) == k) {
            std::vector<int> rest;
            for (int x = 1; x <= n; ++x)
                if (!std::binary_search(chosen.begin(), chosen.end(), x)) rest.push_back(x);
            const int m = n - k;
            for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
                std::vector<int> lambda;
                std::vector<int> v;
                for (int i = 0; i < m; ++i)
                    ((mask >> i) & 1u ? lambda : v).push_back(rest[static_cast<std::size_t>(i)]);
                out.push_back(GrassmannPerm::from_blocks(n, k, chosen, std::move(lambda), std::move(v)));
            }
            return;
        }
        for (int x = next; x <= n; ++x) {
            chosen.push_back(x);
            self(self, x + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 1);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace bgrass
