#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "knightlab/piece.hpp"
#include "knightlab/rational.hpp"

namespace knightlab {

// Exact minimum move counts from the origin over the padded box
// [-(radius+margin), radius+margin]^2. Paths are confined to the padded box;
// queries are confined to the reporting box B_radius.
class DistanceField {
public:
    static constexpr std::int32_t kUnreachable = -1;

    const Piece& piece() const { return piece_; }
    std::int64_t radius() const { return radius_; }
    std::int64_t margin() const { return margin_; }
    std::int64_t extent() const { return radius_ + margin_; }

    // Throws std::out_of_range when ||p||_inf > radius().
    std::optional<std::int32_t> distance(LatticePoint p) const;
    // Same, over the whole padded box.
    std::optional<std::int32_t> padded_distance(LatticePoint p) const;

    // Raw value (kUnreachable for unreachable) without optional wrapping;
    // p must lie in the padded box.
    std::int32_t raw(LatticePoint p) const { return cells_[index(p)]; }

    bool all_reachable_in_box() const;
    std::int32_t max_distance_in_box() const;

    // "x,y,distance" rows over B_radius, lexicographic, unreachable as -1.
    void write_csv(std::ostream& os, bool header = true) const;

private:
    friend DistanceField compute_field(const Piece&, std::int64_t, std::optional<std::int64_t>);
    DistanceField(Piece piece, std::int64_t radius, std::int64_t margin);

    std::size_t index(LatticePoint p) const {
        auto r = extent();
        return static_cast<std::size_t>((p.x + r) * side_ + (p.y + r));
    }

    Piece piece_;
    std::int64_t radius_;
    std::int64_t margin_;
    std::int64_t side_;
    std::vector<std::int32_t> cells_;
};

// Twice the largest 1-norm among the moves; for an (a,b)-knight this is 2(a+b).
std::int64_t default_margin(const Piece& piece);

// Breadth-first frontier expansion from the origin. radius >= 1, margin >= 0;
// margin defaults to default_margin(piece).
DistanceField compute_field(const Piece& piece, std::int64_t radius,
                            std::optional<std::int64_t> margin = std::nullopt);

// { s + m : s in set, m in piece }, sorted and deduplicated.
std::vector<LatticePoint> minkowski_add(std::span<const LatticePoint> set, const Piece& piece);

// The h-fold sumset hA by iterated Minkowski addition. 1 <= h.
std::vector<LatticePoint> fold_sumset(const Piece& piece, int h);

// shells[l] = lA0 \ (l-1)A0 with A0 = A u {0}; shells[0] = {origin}.
struct ShellDecomposition {
    Piece piece;
    int max_index = 0;
    std::vector<std::vector<LatticePoint>> shells;

    // |l A0| = sum of shell sizes 0..l.
    std::size_t cumulative_size(int l) const;
};

ShellDecomposition shells(const Piece& piece, int h);

// Exact area of the convex hull of the move set. Throws std::invalid_argument
// when the moves are collinear.
Rational hull_area(const Piece& piece);

}  // namespace knightlab
