#include "knightlab/estimators.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace knightlab {

std::string to_string(Normalizer n) { return n == Normalizer::Box ? "box" : "punctured"; }

Normalizer parse_normalizer(const std::string& text) {
    if (text == "box") return Normalizer::Box;
    if (text == "punctured") return Normalizer::Punctured;
    throw std::invalid_argument("unknown normalizer '" + text + "' (expected box|punctured)");
}

std::int64_t ball_size(std::int64_t h) { return (2 * h + 1) * (2 * h + 1); }
std::int64_t punctured_ball_size(std::int64_t h) { return 4 * h * (h + 1); }
std::int64_t sphere_size(std::int64_t h) { return h == 0 ? 1 : 8 * h; }

namespace {

std::int64_t checked(std::int32_t d, std::int64_t x, std::int64_t y) {
    if (d == DistanceField::kUnreachable)
        throw std::domain_error("unreachable cell (" + std::to_string(x) + "," + std::to_string(y) +
                                ") in B_h: piece is not primitive");
    return d;
}

// Each per-row partial sum is far below 2^63; rows accumulate in GMP.
mpz_class full_sum(const DistanceField& f) {
    mpz_class total = 0;
    const auto h = f.radius();
    for (auto x = -h; x <= h; ++x) {
        std::int64_t row = 0;
        for (auto y = -h; y <= h; ++y) row += checked(f.raw({x, y}), x, y);
        total += mpz_class(static_cast<long>(row));
    }
    return total;
}

mpz_class octant_sum(const DistanceField& f) {
    if (!f.piece().is_symmetric()) throw std::invalid_argument("octant sum requires a symmetric piece");
    mpz_class total = 0;
    const auto h = f.radius();
    for (std::int64_t x = 1; x <= h; ++x) {
        std::int64_t row = 4 * checked(f.raw({x, 0}), x, 0) + 4 * checked(f.raw({x, x}), x, x);
        for (std::int64_t y = 1; y < x; ++y) row += 8 * checked(f.raw({x, y}), x, y);
        total += mpz_class(static_cast<long>(row));
    }
    return total;
}

}  // namespace

mpz_class box_distance_sum(const DistanceField& field, SumMode mode) {
    return mode == SumMode::Full ? full_sum(field) : octant_sum(field);
}

VelocityEstimate empirical_velocity(const DistanceField& field, Normalizer normalizer) {
    const auto h = field.radius();
    auto count = normalizer == Normalizer::Box ? ball_size(h) : punctured_ball_size(h);
    auto mean = Rational::from_integers(box_distance_sum(field), mpz_class(static_cast<long>(count)));
    if (mean == Rational(0)) throw std::domain_error("empirical_velocity: zero mean distance");
    return {field.piece().name(), h, normalizer, mean, Rational(2 * h, 3) / mean};
}

VelocityEstimate empirical_velocity(const Piece& piece, std::int64_t h, Normalizer normalizer) {
    return empirical_velocity(compute_field(piece, h), normalizer);
}

RelativeVelocity relative_velocity(const Piece& reference, const Piece& target, std::int64_t h) {
    if (h < 1) throw std::invalid_argument("relative_velocity: h must be >= 1");
    auto region = shells(reference, static_cast<int>(h));
    const auto reach = h * reference.max_move_norm();
    auto field = compute_field(target, reach);
    mpz_class total = 0;
    std::size_t size = 0;
    for (const auto& shell : region.shells) {
        std::int64_t part = 0;
        for (auto p : shell) part += checked(field.raw(p), p.x, p.y);
        total += mpz_class(static_cast<long>(part));
        size += shell.size();
    }
    auto mean = Rational::from_integers(total, mpz_class(static_cast<unsigned long>(size)));
    if (mean == Rational(0)) throw std::domain_error("relative_velocity: zero mean distance");
    return {reference.name(), target.name(), h, size, mean, Rational(2 * h, 3) / mean};
}

ResidualReport residual_report(const DistanceField& field, KnightParams params) {
    knight_approx(params, {0, 0});  // validates params
    const auto h = field.radius();
    std::int64_t best_num = 0, best_den = 1;
    LatticePoint best_at{0, 0};
    for (std::int64_t x = 0; x <= h; ++x)
        for (std::int64_t y = 0; y <= x; ++y) {
            auto d = field.raw({x, y});
            if (d == DistanceField::kUnreachable) continue;
            std::int64_t num, den;
            if (params.b * y <= params.a * x) {
                num = x, den = params.b;
            } else {
                num = x + y, den = params.a + params.b;
            }
            auto diff = std::abs(d * den - num);
            if (diff * best_den > best_num * den) {
                best_num = diff, best_den = den;
                best_at = {x, y};
            }
        }
    return {params, h, Rational(best_num, best_den), best_at};
}

ResidualReport residual_report(KnightParams params, std::int64_t h) {
    return residual_report(compute_field(make_knight(params), h), params);
}

Rational lemma1_check(KnightParams params) {
    if (!is_primitive_knight(params)) throw std::invalid_argument("lemma1_check: " + primitivity_violation(params));
    auto field = compute_field(make_knight(params), params.a + params.b);
    return Rational(field.max_distance_in_box(), params.b);
}

namespace {

bool ratio_less(Ratio l, Ratio r) { return l.num * r.den < r.num * l.den; }
bool ratio_equal(Ratio l, Ratio r) { return l.num * r.den == r.num * l.den; }

}  // namespace

CdfEstimate::CdfEstimate(KnightParams params, std::int64_t h, std::vector<Ratio> samples)
    : params_(params), h_(h), samples_(std::move(samples)) {
    if (samples_.empty()) throw std::invalid_argument("CdfEstimate: no samples");
    std::sort(samples_.begin(), samples_.end(), ratio_less);
}

Rational CdfEstimate::query(const Rational& t) const {
    auto it = std::partition_point(samples_.begin(), samples_.end(),
                                   [&](Ratio r) { return Rational(r.num, r.den) <= t; });
    return Rational(static_cast<std::int64_t>(it - samples_.begin()), static_cast<std::int64_t>(samples_.size()));
}

double CdfEstimate::query(double t) const {
    auto it = std::partition_point(samples_.begin(), samples_.end(), [&](Ratio r) {
        return static_cast<double>(r.num) <= t * static_cast<double>(r.den);
    });
    return static_cast<double>(it - samples_.begin()) / static_cast<double>(samples_.size());
}

double CdfEstimate::sup_gap(const PiecewiseCdf& reference) const {
    // Between consecutive sample values the empirical CDF is flat and the
    // reference is monotone, so the sup is attained at a sample value or as a
    // one-sided limit there.
    const auto n = static_cast<double>(samples_.size());
    double gap = 0.0;
    double below = 0.0;  // empirical value on the open interval left of the current sample
    for (std::size_t i = 0; i < samples_.size();) {
        std::size_t j = i;
        while (j < samples_.size() && ratio_equal(samples_[j], samples_[i])) ++j;
        const auto t = samples_[i];
        const double at = static_cast<double>(j) / n;
        gap = std::max(gap, std::abs(below - reference.evaluate_left(t.num, t.den)));
        gap = std::max(gap, std::abs(at - reference.evaluate(t.num, t.den)));
        below = at;
        i = j;
    }
    // Right of the last sample the empirical CDF is 1 and the reference is
    // nondecreasing, already covered at the last sample.
    return gap;
}

CdfEstimate empirical_cdf(const DistanceField& field, KnightParams params) {
    const auto h = field.radius();
    std::vector<Ratio> samples;
    samples.reserve(static_cast<std::size_t>(punctured_ball_size(h)));
    for (auto x = -h; x <= h; ++x)
        for (auto y = -h; y <= h; ++y) {
            if (x == 0 && y == 0) continue;
            samples.push_back({checked(field.raw({x, y}), x, y), king_distance({x, y})});
        }
    return CdfEstimate(params, h, std::move(samples));
}

CdfEstimate empirical_cdf(KnightParams params, std::int64_t h) {
    if (!is_primitive_knight(params)) throw std::invalid_argument("empirical_cdf: " + primitivity_violation(params));
    return empirical_cdf(compute_field(make_knight(params), h), params);
}

Rational khovanskii_fit(const Piece& piece, int h) {
    auto decomposition = shells(piece, h);
    auto size = static_cast<std::int64_t>(decomposition.cumulative_size(h));
    return Rational(size, static_cast<std::int64_t>(h) * h);
}

double khovanskii_leading_coefficient(const ShellDecomposition& d, int lo, int hi) {
    if (lo < 0 || hi > d.max_index || hi - lo < 2)
        throw std::invalid_argument("khovanskii_leading_coefficient: need at least 3 indices in range");
    // Normal equations for least squares in the basis (l^2, l, 1).
    std::array<std::array<long double, 4>, 3> m{};
    std::size_t cumulative = d.cumulative_size(lo) - d.shells[static_cast<std::size_t>(lo)].size();
    for (int l = lo; l <= hi; ++l) {
        cumulative += d.shells[static_cast<std::size_t>(l)].size();
        const long double basis[3] = {static_cast<long double>(l) * l, static_cast<long double>(l), 1.0L};
        for (int r = 0; r < 3; ++r) {
            for (int c = 0; c < 3; ++c) m[r][c] += basis[r] * basis[c];
            m[r][3] += basis[r] * static_cast<long double>(cumulative);
        }
    }
    for (int col = 0; col < 3; ++col) {
        int pivot = col;
        for (int r = col + 1; r < 3; ++r)
            if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
        std::swap(m[col], m[pivot]);
        for (int r = 0; r < 3; ++r) {
            if (r == col) continue;
            auto factor = m[r][col] / m[col][col];
            for (int c = col; c < 4; ++c) m[r][c] -= factor * m[col][c];
        }
    }
    return static_cast<double>(m[0][3] / m[0][0]);
}

}  // namespace knightlab
