#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "knightlab/closed_form.hpp"
#include "knightlab/reach.hpp"

namespace knightlab {

// BOX divides by |B_h| = (2h+1)^2 (origin included, distance 0);
// PUNCTURED divides by |B*_h| = 4h(h+1).
enum class Normalizer { Box, Punctured };

std::string to_string(Normalizer n);
Normalizer parse_normalizer(const std::string& text);

std::int64_t ball_size(std::int64_t h);
std::int64_t punctured_ball_size(std::int64_t h);
std::int64_t sphere_size(std::int64_t h);

enum class SumMode { Full, Octant };

// Sum of distances over B_radius. Octant mode folds the symmetry orbits and
// requires a symmetric piece. Throws std::domain_error on unreachable cells.
mpz_class box_distance_sum(const DistanceField& field, SumMode mode = SumMode::Full);

struct VelocityEstimate {
    std::string piece;
    std::int64_t h = 0;
    Normalizer normalizer = Normalizer::Box;
    Rational mean_distance;
    Rational velocity;  // (2h/3) / mean_distance
    double velocity_value() const { return velocity.to_double(); }
};

// Throws std::domain_error if some cell of B_h is unreachable.
VelocityEstimate empirical_velocity(const Piece& piece, std::int64_t h, Normalizer normalizer = Normalizer::Box);
VelocityEstimate empirical_velocity(const DistanceField& field, Normalizer normalizer = Normalizer::Box);

struct RelativeVelocity {
    std::string reference;
    std::string target;
    std::int64_t h = 0;
    std::size_t region_size = 0;  // |h A0| of the reference
    Rational mean_distance;        // mean target distance over h A0
    Rational velocity;             // (2h/3) / mean_distance
};

// Velocity of `target` measured over the regions h A0 of `reference`.
RelativeVelocity relative_velocity(const Piece& reference, const Piece& target, std::int64_t h);

struct ResidualReport {
    KnightParams params;
    std::int64_t h = 0;
    Rational max_abs_residual;
    LatticePoint argmax;  // lexicographically first maximiser in the octant
};

// max over reachable p in the octant of B_h of |distance(p) - knight_approx(p)|.
ResidualReport residual_report(KnightParams params, std::int64_t h);
ResidualReport residual_report(const DistanceField& field, KnightParams params);

// (max distance over B_{a+b}) / b.
Rational lemma1_check(KnightParams params);

// Exact ratio num/den with den > 0.
struct Ratio {
    std::int64_t num = 0;
    std::int64_t den = 1;
};

class CdfEstimate {
public:
    CdfEstimate(KnightParams params, std::int64_t h, std::vector<Ratio> samples);

    const KnightParams& params() const { return params_; }
    std::int64_t h() const { return h_; }
    std::size_t sample_count() const { return samples_.size(); }
    std::span<const Ratio> samples() const { return samples_; }

    // Fraction of samples <= t.
    Rational query(const Rational& t) const;
    double query(double t) const;
    // sup_t |query(t) - reference(t)|, exact in the location of the sup.
    double sup_gap(const PiecewiseCdf& reference) const;

private:
    KnightParams params_;
    std::int64_t h_;
    std::vector<Ratio> samples_;  // sorted ascending
};

// Ratios knight/king over B*_h (origin excluded).
CdfEstimate empirical_cdf(KnightParams params, std::int64_t h);
CdfEstimate empirical_cdf(const DistanceField& field, KnightParams params);

// |h A0| / h^2.
Rational khovanskii_fit(const Piece& piece, int h);
// Least-squares quadratic c2 l^2 + c1 l + c0 through |l A0| for l in [lo, hi];
// returns c2.
double khovanskii_leading_coefficient(const ShellDecomposition& decomposition, int lo, int hi);

}  // namespace knightlab
