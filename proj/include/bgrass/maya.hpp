#pragma once

#include <algorithm>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bgrass/covering.hpp"

namespace bgrass {

// One box of a Maya diagram; the enumerator values double as the ASCII codec.
enum class Box : char { circle = 'o', bullet = 'b', cross = 'x' };

// Row of n boxes encoding a Grassmannian element positionally: a circle at p
// means p lies in u, a bullet means p is barred, a cross means p lies in v.
// The block structure (and hence k) is intrinsic, so no k accompanies it.
class MayaDiagram {
public:
    explicit MayaDiagram(std::vector<Box> boxes) : boxes_(std::move(boxes)) {
        if (boxes_.empty())
            throw ValidationError("a Maya diagram needs at least one box");
    }

    static MayaDiagram from_ascii(std::string_view text) {
        std::vector<Box> boxes;
        boxes.reserve(text.size());
        for (std::size_t i = 0; i < text.size(); ++i) {
            const char c = text[i];
            if (c != 'o' && c != 'b' && c != 'x')
                throw ParseError("character '" + std::string(1, c) + "' at position " +
                                 std::to_string(i + 1) + " is not one of 'o', 'b', 'x'");
            boxes.push_back(static_cast<Box>(c));
        }
        return MayaDiagram(std::move(boxes));
    }

    int n() const { return static_cast<int>(boxes_.size()); }

    // box at 1-based position p
    Box box(int p) const {
        if (p < 1 || p > n())
            throw ValidationError("box position " + std::to_string(p) + " is outside [1, " +
                                  std::to_string(n()) + "]");
        return boxes_[static_cast<std::size_t>(p - 1)];
    }

    const std::vector<Box>& boxes() const { return boxes_; }

    int circle_count() const {
        return static_cast<int>(std::count(boxes_.begin(), boxes_.end(), Box::circle));
    }

    std::string to_ascii() const {
        std::string s;
        s.reserve(boxes_.size());
        for (Box b : boxes_)
            s += static_cast<char>(b);
        return s;
    }

    // display form with the conventional symbols, e.g. "• ∘ × • ∘ ∘ • •"
    std::string to_unicode() const {
        std::string s;
        for (std::size_t i = 0; i < boxes_.size(); ++i) {
            if (i > 0) s += ' ';
            switch (boxes_[i]) {
                case Box::circle: s += "∘"; break;
                case Box::bullet: s += "•"; break;
                case Box::cross: s += "×"; break;
            }
        }
        return s;
    }

    friend bool operator==(const MayaDiagram&, const MayaDiagram&) = default;

    friend bool operator<(const MayaDiagram& a, const MayaDiagram& b) {
        return a.boxes_ < b.boxes_;
    }

private:
    std::vector<Box> boxes_;
};

inline std::ostream& operator<<(std::ostream& os, const MayaDiagram& m) {
    return os << m.to_ascii();
}

inline MayaDiagram to_maya(const GrassmannPerm& g) {
    std::vector<Box> boxes(static_cast<std::size_t>(g.n()), Box::cross);
    for (int p : g.u())
        boxes[static_cast<std::size_t>(p - 1)] = Box::circle;
    for (int p : g.lambda())
        boxes[static_cast<std::size_t>(p - 1)] = Box::bullet;
    return MayaDiagram(std::move(boxes));
}

inline GrassmannPerm from_maya(const MayaDiagram& m) {
    std::vector<int> u;
    std::vector<int> lambda;
    std::vector<int> v;
    for (int p = 1; p <= m.n(); ++p) {
        switch (m.box(p)) {
            case Box::circle: u.push_back(p); break;
            case Box::bullet: lambda.push_back(p); break;
            case Box::cross: v.push_back(p); break;
        }
    }
    const int k = static_cast<int>(u.size());
    return GrassmannPerm::from_blocks(m.n(), k, std::move(u), std::move(lambda), std::move(v));
}

// Length read straight off the boxes: each circle contributes
// (n - k) - #crosses to its right, each bullet its own position.
inline int maya_length(const MayaDiagram& m) {
    const int n = m.n();
    const int k = m.circle_count();
    int crosses_right = 0;
    for (int p = 1; p <= n; ++p)
        if (m.box(p) == Box::cross) ++crosses_right;
    int total = 0;
    for (int p = 1; p <= n; ++p) {
        switch (m.box(p)) {
            case Box::circle: total += (n - k) - crosses_right; break;
            case Box::bullet: total += p; break;
            case Box::cross: --crosses_right; break;
        }
    }
    return total;
}

// Covering moves as local rewrites of the box row, one per matching site:
//   B1  a leading bullet becomes a cross
//   B2  "xb" becomes "bx"
//   B3  a cross and a later circle swap across a run of bullets
//   B4  a circle and a later bullet swap across a run of crosses
// Results are sorted by (type, box row).
inline std::vector<std::pair<MayaDiagram, CoverType>> maya_covered_by(const MayaDiagram& m) {
    const auto& boxes = m.boxes();
    const int n = m.n();
    std::vector<std::pair<MayaDiagram, CoverType>> out;
    auto emit = [&](int lo, int hi, Box blo, Box bhi, CoverType t) {
        std::vector<Box> next = boxes;
        next[static_cast<std::size_t>(lo)] = blo;
        if (hi >= 0) next[static_cast<std::size_t>(hi)] = bhi;
        out.emplace_back(MayaDiagram(std::move(next)), t);
    };
    if (boxes.front() == Box::bullet)
        emit(0, -1, Box::cross, Box::cross, CoverType::B1);
    for (int p = 0; p + 1 < n; ++p)
        if (boxes[static_cast<std::size_t>(p)] == Box::cross &&
            boxes[static_cast<std::size_t>(p + 1)] == Box::bullet)
            emit(p, p + 1, Box::bullet, Box::cross, CoverType::B2);
    // for a fixed left box the only candidate partner is the first box after
    // the run of gap symbols (the run may be empty)
    for (int p = 0; p < n; ++p) {
        if (boxes[static_cast<std::size_t>(p)] == Box::cross) {
            int h = p + 1;
            while (h < n && boxes[static_cast<std::size_t>(h)] == Box::bullet) ++h;
            if (h < n && boxes[static_cast<std::size_t>(h)] == Box::circle)
                emit(p, h, Box::circle, Box::cross, CoverType::B3);
        }
        if (boxes[static_cast<std::size_t>(p)] == Box::circle) {
            int h = p + 1;
            while (h < n && boxes[static_cast<std::size_t>(h)] == Box::cross) ++h;
            if (h < n && boxes[static_cast<std::size_t>(h)] == Box::bullet)
                emit(p, h, Box::bullet, Box::circle, CoverType::B4);
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second < b.second;
        return a.first < b.first;
    });
    return out;
}

// b and x exchange, circles stay put.
inline MayaDiagram maya_dual(const MayaDiagram& m) {
    std::vector<Box> boxes = m.boxes();
    for (Box& b : boxes) {
        if (b == Box::bullet)
            b = Box::cross;
        else if (b == Box::cross)
            b = Box::bullet;
    }
    return MayaDiagram(std::move(boxes));
}

} // namespace bgrass
