#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "knightlab/piece.hpp"
#include "knightlab/rational.hpp"

namespace knightlab {

std::int64_t king_distance(LatticePoint p);

// Leading term of the (a,b)-knight distance, with p first reflected into the
// octant x >= y >= 0: x/b when y <= (a/b) x, else (x+y)/(a+b).
// Requires b > a and primitive params.
Rational knight_approx(KnightParams params, LatticePoint p);

// 2(a+b)b^2 / (a^2 + 3b^2). Requires b > a and primitive params.
Rational velocity_formula(KnightParams params);

// Limiting distribution of knight/king distance ratios:
// 0 for t < 1/b, (a+b)t - 1 on [1/b, 2/(a+b)], 1 above.
class PiecewiseCdf {
public:
    explicit PiecewiseCdf(KnightParams params);

    const KnightParams& params() const { return params_; }
    const Rational& t_low() const { return t_low_; }
    const Rational& t_high() const { return t_high_; }
    const Rational& slope() const { return slope_; }

    Rational operator()(const Rational& t) const;
    // Same value for t = num/den (den > 0); branch selection is exact.
    double evaluate(std::int64_t num, std::int64_t den) const;
    // Limit from the left at t.
    double evaluate_left(std::int64_t num, std::int64_t den) const;

    // Integral of 1 - D(t) over [0, inf), piece by piece in exact arithmetic.
    Rational mean() const;

private:
    KnightParams params_;
    Rational t_low_, t_high_, slope_;
};

Rational cdf(KnightParams params, const Rational& t);

// (a^2 + 3b^2) / (2(a+b)b^2).
Rational expected_ratio(KnightParams params);

// 2h/3 + 1/3. h >= 1.
Rational king_average_closed(std::int64_t h);

// F_1 = F_2 = 1; values()[n] = F_n, values()[0] = 0.
class FiboSequence {
public:
    explicit FiboSequence(int up_to);
    const mpz_class& operator[](int n) const;
    int size() const { return static_cast<int>(values_.size()); }

private:
    std::vector<mpz_class> values_;
};

struct FiboKnight {
    int n = 0;
    KnightParams params;
    bool primitive = false;
};

// (F_{n+1}, F_{n+2}); FN_1 is the ordinary knight. n >= 1, and F_{n+2} must
// fit in 64 bits (n <= 88).
FiboKnight fiboknight_params(int n);

// v(FN_{n+k}) / v(FN_n); throws std::invalid_argument unless both are primitive.
Rational fiboknight_velocity_ratio(int n, int k);

// phi^k as a high-precision float (precision in bits).
mpf_class golden_power(int k, mp_bitcnt_t precision = 256);

}  // namespace knightlab
