#include "knightlab/reach.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace knightlab {

DistanceField::DistanceField(Piece piece, std::int64_t radius, std::int64_t margin)
    : piece_(std::move(piece)), radius_(radius), margin_(margin), side_(2 * (radius + margin) + 1),
      cells_(static_cast<std::size_t>(side_ * side_), kUnreachable) {}

std::optional<std::int32_t> DistanceField::distance(LatticePoint p) const {
    if (max_norm(p) > radius_)
        throw std::out_of_range("query (" + std::to_string(p.x) + "," + std::to_string(p.y) +
                                ") outside B_" + std::to_string(radius_));
    auto v = raw(p);
    if (v == kUnreachable) return std::nullopt;
    return v;
}

std::optional<std::int32_t> DistanceField::padded_distance(LatticePoint p) const {
    if (max_norm(p) > extent()) throw std::out_of_range("query outside padded box");
    auto v = raw(p);
    if (v == kUnreachable) return std::nullopt;
    return v;
}

bool DistanceField::all_reachable_in_box() const {
    for (auto x = -radius_; x <= radius_; ++x)
        for (auto y = -radius_; y <= radius_; ++y)
            if (raw({x, y}) == kUnreachable) return false;
    return true;
}

std::int32_t DistanceField::max_distance_in_box() const {
    std::int32_t best = 0;
    for (auto x = -radius_; x <= radius_; ++x)
        for (auto y = -radius_; y <= radius_; ++y) best = std::max(best, raw({x, y}));
    return best;
}

void DistanceField::write_csv(std::ostream& os, bool header) const {
    if (header) os << "x,y,distance\n";
    for (auto x = -radius_; x <= radius_; ++x)
        for (auto y = -radius_; y <= radius_; ++y) os << x << ',' << y << ',' << raw({x, y}) << '\n';
}

std::int64_t default_margin(const Piece& piece) { return 2 * piece.max_move_one_norm(); }

DistanceField compute_field(const Piece& piece, std::int64_t radius, std::optional<std::int64_t> margin) {
    if (radius < 1) throw std::invalid_argument("compute_field: radius must be >= 1");
    auto m = margin.value_or(default_margin(piece));
    if (m < 0) throw std::invalid_argument("compute_field: margin must be >= 0");

    DistanceField field(piece, radius, m);
    const auto ext = field.extent();
    const auto side = field.side_;
    auto& cells = field.cells_;

    struct Step {
        std::int64_t dx, dy, offset;
    };
    std::vector<Step> steps;
    for (auto mv : piece.moves()) steps.push_back({mv.x, mv.y, mv.x * side + mv.y});

    // The frontier is the tail of `order`; every cell enters it exactly once.
    std::vector<std::uint32_t> order;
    order.reserve(cells.size());
    auto origin = static_cast<std::uint32_t>(ext * side + ext);
    cells[origin] = 0;
    order.push_back(origin);

    for (std::size_t head = 0; head < order.size(); ++head) {
        const auto cur = order[head];
        const auto cx = static_cast<std::int64_t>(cur) / side - ext;
        const auto cy = static_cast<std::int64_t>(cur) % side - ext;
        const auto next = cells[cur] + 1;
        for (const auto& s : steps) {
            auto nx = cx + s.dx, ny = cy + s.dy;
            if (nx < -ext || nx > ext || ny < -ext || ny > ext) continue;
            auto ni = static_cast<std::uint32_t>(cur + s.offset);
            if (cells[ni] != DistanceField::kUnreachable) continue;
            cells[ni] = next;
            order.push_back(ni);
        }
    }
    return field;
}

std::vector<LatticePoint> minkowski_add(std::span<const LatticePoint> set, const Piece& piece) {
    std::vector<LatticePoint> out;
    out.reserve(set.size() * piece.size());
    for (auto s : set)
        for (auto m : piece.moves()) out.push_back(s + m);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<LatticePoint> fold_sumset(const Piece& piece, int h) {
    if (h < 1) throw std::invalid_argument("fold_sumset: h must be >= 1");
    std::vector<LatticePoint> acc(piece.moves().begin(), piece.moves().end());
    for (int k = 2; k <= h; ++k) acc = minkowski_add(acc, piece);
    return acc;
}

std::size_t ShellDecomposition::cumulative_size(int l) const {
    if (l < 0 || l > max_index) throw std::out_of_range("cumulative_size: shell index out of range");
    std::size_t n = 0;
    for (int i = 0; i <= l; ++i) n += shells[static_cast<std::size_t>(i)].size();
    return n;
}

ShellDecomposition shells(const Piece& piece, int h) {
    if (h < 1) throw std::invalid_argument("shells: h must be >= 1");
    // lA0 is the set of points at distance <= l, and a geodesic of length <= h
    // never leaves B_{h * max move norm}; no padding is needed.
    const auto reach = static_cast<std::int64_t>(h) * piece.max_move_norm();
    auto field = compute_field(piece, reach, 0);
    ShellDecomposition out{piece, h, std::vector<std::vector<LatticePoint>>(static_cast<std::size_t>(h) + 1)};
    for (auto x = -reach; x <= reach; ++x)
        for (auto y = -reach; y <= reach; ++y) {
            auto d = field.raw({x, y});
            if (d != DistanceField::kUnreachable && d <= h) out.shells[static_cast<std::size_t>(d)].push_back({x, y});
        }
    return out;
}

namespace {

std::int64_t cross(LatticePoint o, LatticePoint a, LatticePoint b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

}  // namespace

Rational hull_area(const Piece& piece) {
    std::vector<LatticePoint> pts(piece.moves().begin(), piece.moves().end());
    if (pts.size() < 3) throw std::invalid_argument("hull_area: fewer than 3 moves");
    // Andrew's monotone chain; pts are already sorted lexicographically.
    std::vector<LatticePoint> hull(2 * pts.size());
    std::size_t k = 0;
    for (auto p : pts) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
        hull[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    std::int64_t twice = 0;
    for (std::size_t i = 0; i < hull.size(); ++i) {
        auto p = hull[i], q = hull[(i + 1) % hull.size()];
        twice += p.x * q.y - q.x * p.y;
    }
    if (twice == 0) throw std::invalid_argument("hull_area: collinear move set");
    return Rational(twice, 2);
}

}  // namespace knightlab
