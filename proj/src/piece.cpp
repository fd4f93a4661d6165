#include "knightlab/piece.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace knightlab {

Piece::Piece(std::string name, std::vector<LatticePoint> moves) : name_(std::move(name)) {
    std::sort(moves.begin(), moves.end());
    moves.erase(std::unique(moves.begin(), moves.end()), moves.end());
    if (moves.empty()) throw std::invalid_argument("piece '" + name_ + "' has no moves");
    if (std::binary_search(moves.begin(), moves.end(), LatticePoint{0, 0}))
        throw std::invalid_argument("piece '" + name_ + "' contains the null move");
    moves_ = std::move(moves);
}

bool Piece::contains(LatticePoint m) const {
    return std::binary_search(moves_.begin(), moves_.end(), m);
}

bool Piece::is_symmetric() const {
    return std::all_of(moves_.begin(), moves_.end(), [this](LatticePoint m) {
        return contains({-m.x, m.y}) && contains({m.x, -m.y}) && contains({m.y, m.x});
    });
}

std::int64_t Piece::max_move_norm() const {
    std::int64_t best = 0;
    for (auto m : moves_) best = std::max(best, max_norm(m));
    return best;
}

std::int64_t Piece::max_move_one_norm() const {
    std::int64_t best = 0;
    for (auto m : moves_) best = std::max(best, one_norm(m));
    return best;
}

Piece symmetric_closure(LatticePoint g, std::string name) {
    if (g == LatticePoint{0, 0}) throw std::invalid_argument("symmetric_closure: zero generator");
    std::vector<LatticePoint> moves;
    for (int sx : {-1, 1})
        for (int sy : {-1, 1}) {
            moves.push_back({sx * g.x, sy * g.y});
            moves.push_back({sx * g.y, sy * g.x});
        }
    if (name.empty()) name = "S" + std::to_string(g.x) + "," + std::to_string(g.y);
    return Piece(std::move(name), std::move(moves));
}

Piece make_king() {
    std::vector<LatticePoint> moves;
    for (std::int64_t dx = -1; dx <= 1; ++dx)
        for (std::int64_t dy = -1; dy <= 1; ++dy)
            if (dx != 0 || dy != 0) moves.push_back({dx, dy});
    return Piece("K", std::move(moves));
}

Piece make_knight(KnightParams p) {
    if (p.a < 1 || p.b < 1) throw std::invalid_argument("make_knight: a and b must be >= 1");
    if (p.a == p.b) throw std::invalid_argument("make_knight: a == b gives a 4-move piece, never primitive");
    return symmetric_closure({p.a, p.b}, knight_name(p));
}

Piece make_taxicab() { return symmetric_closure({1, 0}, "T"); }

bool is_primitive_knight(KnightParams p) {
    return std::gcd(p.a, p.b) == 1 && (p.a + p.b) % 2 != 0;
}

std::string primitivity_violation(KnightParams p) {
    if (auto g = std::gcd(p.a, p.b); g != 1)
        return "gcd(" + std::to_string(p.a) + "," + std::to_string(p.b) + ") = " + std::to_string(g) + " != 1";
    if ((p.a + p.b) % 2 == 0)
        return "a+b = " + std::to_string(p.a + p.b) + " is even (parity)";
    return {};
}

std::string knight_name(KnightParams p) {
    return "N" + std::to_string(p.a) + "," + std::to_string(p.b);
}

}  // namespace knightlab
