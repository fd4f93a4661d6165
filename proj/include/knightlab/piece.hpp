#pragma once

#include <span>
#include <string>
#include <vector>

#include "knightlab/point.hpp"

namespace knightlab {

struct KnightParams {
    std::int64_t a = 1;
    std::int64_t b = 2;

    friend constexpr bool operator==(const KnightParams&, const KnightParams&) = default;
};

// A named finite move set. Moves are nonempty, unique, never the origin, and
// kept in lexicographic order so that equality and output are deterministic.
class Piece {
public:
    // Throws std::invalid_argument if the invariants above are violated by
    // `moves` (duplicates are removed, not rejected).
    Piece(std::string name, std::vector<LatticePoint> moves);

    const std::string& name() const { return name_; }
    std::span<const LatticePoint> moves() const { return moves_; }
    std::size_t size() const { return moves_.size(); }

    bool contains(LatticePoint m) const;
    // Invariant under sign changes of either coordinate and coordinate swap.
    bool is_symmetric() const;
    std::int64_t max_move_norm() const;
    std::int64_t max_move_one_norm() const;

    friend bool operator==(const Piece& l, const Piece& r) { return l.moves_ == r.moves_; }

private:
    std::string name_;
    std::vector<LatticePoint> moves_;
};

// {(+-a, +-b), (+-b, +-a)} for generator (a, b); throws on the zero generator.
Piece symmetric_closure(LatticePoint generator, std::string name = {});

Piece make_king();
// Requires a, b >= 1 and a != b.
Piece make_knight(KnightParams params);
Piece make_taxicab();

// gcd(a, b) == 1 and a + b odd.
bool is_primitive_knight(KnightParams params);

// Why a knight fails primitivity, or empty when it is primitive.
std::string primitivity_violation(KnightParams params);

std::string knight_name(KnightParams params);

}  // namespace knightlab
