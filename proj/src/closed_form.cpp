#include "knightlab/closed_form.hpp"

#include <stdexcept>
#include <string>

namespace knightlab {

namespace {

void require_theorem_params(KnightParams p, const char* who) {
    if (!(p.b > p.a && p.a >= 1))
        throw std::invalid_argument(std::string(who) + ": requires b > a >= 1");
    if (auto why = primitivity_violation(p); !why.empty())
        throw std::invalid_argument(std::string(who) + ": non-primitive knight, " + why);
}

}  // namespace

std::int64_t king_distance(LatticePoint p) { return max_norm(p); }

Rational knight_approx(KnightParams params, LatticePoint p) {
    require_theorem_params(params, "knight_approx");
    auto q = to_octant(p);
    // y <= (a/b) x  <=>  b y <= a x
    if (params.b * q.y <= params.a * q.x) return Rational(q.x, params.b);
    return Rational(q.x + q.y, params.a + params.b);
}

Rational velocity_formula(KnightParams p) {
    require_theorem_params(p, "velocity_formula");
    mpz_class a = static_cast<long>(p.a), b = static_cast<long>(p.b);
    return Rational::from_integers(2 * (a + b) * b * b, a * a + 3 * b * b);
}

PiecewiseCdf::PiecewiseCdf(KnightParams params)
    : params_(params), t_low_(1, params.b), t_high_(2, params.a + params.b), slope_(params.a + params.b) {
    require_theorem_params(params, "PiecewiseCdf");
}

Rational PiecewiseCdf::operator()(const Rational& t) const {
    if (t < t_low_) return Rational(0);
    if (t > t_high_) return Rational(1);
    return slope_ * t - Rational(1);
}

double PiecewiseCdf::evaluate(std::int64_t num, std::int64_t den) const {
    const auto s = params_.a + params_.b;
    if (num * params_.b < den) return 0.0;
    if (num * s > 2 * den) return 1.0;
    return static_cast<double>(s * num - den) / static_cast<double>(den);
}

double PiecewiseCdf::evaluate_left(std::int64_t num, std::int64_t den) const {
    const auto s = params_.a + params_.b;
    if (num * params_.b <= den) return 0.0;
    if (num * s > 2 * den) return 1.0;
    return static_cast<double>(s * num - den) / static_cast<double>(den);
}

Rational PiecewiseCdf::mean() const {
    // 1 - D = 1 on [0, t_low), 2 - slope*t on [t_low, t_high], 0 beyond.
    Rational flat = t_low_;
    auto antiderivative = [&](const Rational& t) { return Rational(2) * t - slope_ * t * t / Rational(2); };
    return flat + antiderivative(t_high_) - antiderivative(t_low_);
}

Rational cdf(KnightParams params, const Rational& t) { return PiecewiseCdf(params)(t); }

Rational expected_ratio(KnightParams p) {
    require_theorem_params(p, "expected_ratio");
    mpz_class a = static_cast<long>(p.a), b = static_cast<long>(p.b);
    return Rational::from_integers(a * a + 3 * b * b, 2 * (a + b) * b * b);
}

Rational king_average_closed(std::int64_t h) {
    if (h < 1) throw std::invalid_argument("king_average_closed: h must be >= 1");
    return Rational(2 * h + 1, 3);
}

FiboSequence::FiboSequence(int up_to) {
    if (up_to < 2) up_to = 2;
    values_.resize(static_cast<std::size_t>(up_to) + 1);
    values_[0] = 0;
    values_[1] = 1;
    for (std::size_t i = 2; i < values_.size(); ++i) values_[i] = values_[i - 1] + values_[i - 2];
}

const mpz_class& FiboSequence::operator[](int n) const {
    if (n < 0 || n >= size()) throw std::out_of_range("FiboSequence: index " + std::to_string(n));
    return values_[static_cast<std::size_t>(n)];
}

FiboKnight fiboknight_params(int n) {
    if (n < 1) throw std::invalid_argument("fiboknight_params: n must be >= 1");
    if (n > 88) throw std::out_of_range("fiboknight_params: F_{n+2} exceeds 64 bits");
    FiboSequence fib(n + 2);
    KnightParams p{static_cast<std::int64_t>(fib[n + 1].get_si()), static_cast<std::int64_t>(fib[n + 2].get_si())};
    return {n, p, is_primitive_knight(p)};
}

Rational fiboknight_velocity_ratio(int n, int k) {
    if (k < 1) throw std::invalid_argument("fiboknight_velocity_ratio: k must be >= 1");
    auto lo = fiboknight_params(n);
    auto hi = fiboknight_params(n + k);
    if (!lo.primitive || !hi.primitive)
        throw std::invalid_argument("fiboknight_velocity_ratio: FN_" + std::to_string(lo.primitive ? n + k : n) +
                                    " is not primitive");
    return velocity_formula(hi.params) / velocity_formula(lo.params);
}

mpf_class golden_power(int k, mp_bitcnt_t precision) {
    mpf_class root5(5, precision);
    root5 = sqrt(root5);
    mpf_class phi((1 + root5) / 2, precision);
    mpf_class out(1, precision);
    for (int i = 0; i < k; ++i) out *= phi;
    return out;
}

}  // namespace knightlab
