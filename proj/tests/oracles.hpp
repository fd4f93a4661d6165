#pragma once

// Test-only reference computations. None of these call into the reach engine
// or the closed-form module.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Pt = std::pair<std::int64_t, std::int64_t>;

inline std::int64_t floor_div(std::int64_t n, std::int64_t d) {
    auto q = n / d;
    return (n % d != 0 && ((n < 0) != (d < 0))) ? q - 1 : q;
}

// Classical exact distance of the ordinary (1,2) knight on an unbounded board.
inline std::int64_t chess_knight_distance(std::int64_t x, std::int64_t y) {
    x = std::llabs(x), y = std::llabs(y);
    if (x < y) std::swap(x, y);
    if (x == 1 && y == 0) return 3;
    if (x == 2 && y == 2) return 4;
    auto delta = x - y;
    if (y > delta) return delta - 2 * floor_div(delta - y, 3);
    return delta - 2 * floor_div(delta - y, 4);
}

// All sums of exactly h moves, by repeated pairwise addition over std::set.
inline std::set<Pt> brute_sumset(const std::vector<Pt>& moves, int h) {
    std::set<Pt> acc(moves.begin(), moves.end());
    for (int k = 2; k <= h; ++k) {
        std::set<Pt> next;
        for (auto [x, y] : acc)
            for (auto [dx, dy] : moves) next.insert({x + dx, y + dy});
        acc = std::move(next);
    }
    return acc;
}

// Twice the signed area of a polygon whose vertices are given in order.
inline std::int64_t twice_shoelace(const std::vector<Pt>& polygon) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < polygon.size(); ++i) {
        auto [x0, y0] = polygon[i];
        auto [x1, y1] = polygon[(i + 1) % polygon.size()];
        s += x0 * y1 - x1 * y0;
    }
    return s;
}

inline std::int64_t gcd(std::int64_t a, std::int64_t b) {
    while (b != 0) {
        auto t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}

}  // namespace oracle
