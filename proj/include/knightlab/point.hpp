#pragma once

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <algorithm>

namespace knightlab {

// A square of the infinite board Z^2.
struct LatticePoint {
    std::int64_t x = 0;
    std::int64_t y = 0;

    constexpr LatticePoint operator+(LatticePoint o) const { return {x + o.x, y + o.y}; }
    constexpr LatticePoint operator-(LatticePoint o) const { return {x - o.x, y - o.y}; }
    constexpr LatticePoint operator-() const { return {-x, -y}; }

    // Lexicographic by (x, y).
    friend constexpr auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

constexpr std::int64_t max_norm(LatticePoint p) {
    return std::max(p.x < 0 ? -p.x : p.x, p.y < 0 ? -p.y : p.y);
}

constexpr std::int64_t one_norm(LatticePoint p) {
    return (p.x < 0 ? -p.x : p.x) + (p.y < 0 ? -p.y : p.y);
}

// Image of p in the fundamental octant x >= y >= 0 under the board symmetries.
constexpr LatticePoint to_octant(LatticePoint p) {
    std::int64_t ax = p.x < 0 ? -p.x : p.x;
    std::int64_t ay = p.y < 0 ? -p.y : p.y;
    return ax >= ay ? LatticePoint{ax, ay} : LatticePoint{ay, ax};
}

struct LatticePointHash {
    std::size_t operator()(LatticePoint p) const noexcept {
        auto ux = static_cast<std::uint64_t>(p.x);
        auto uy = static_cast<std::uint64_t>(p.y);
        return std::hash<std::uint64_t>{}(ux * 0x9E3779B97F4A7C15ULL ^ (uy + 0x632BE59BD9B4E019ULL));
    }
};

}  // namespace knightlab
