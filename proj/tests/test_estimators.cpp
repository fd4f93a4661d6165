#include <doctest.h>

#include <cmath>

#include "knightlab/estimators.hpp"
#include "oracles.hpp"

using namespace knightlab;

TEST_SUITE("estimators") {

TEST_CASE("ball and sphere sizes by enumeration") {
    for (std::int64_t h = 1; h <= 30; ++h) {
        std::int64_t ball = 0, sphere = 0;
        for (auto x = -h; x <= h; ++x)
            for (auto y = -h; y <= h; ++y) {
                ++ball;
                if (std::max(std::llabs(x), std::llabs(y)) == h) ++sphere;
            }
        CHECK(ball_size(h) == ball);
        CHECK(punctured_ball_size(h) == ball - 1);
        CHECK(sphere_size(h) == sphere);
    }
}

TEST_CASE("king mean over the punctured ball is 2h/3 + 1/3") {
    for (std::int64_t h = 1; h <= 60; ++h) {
        auto est = empirical_velocity(make_king(), h, Normalizer::Punctured);
        CHECK(est.mean_distance == king_average_closed(h));
    }
    CHECK(empirical_velocity(make_king(), 3, Normalizer::Punctured).mean_distance == Rational(7, 3));
}

TEST_CASE("king velocity tends to one") {
    auto v100 = empirical_velocity(make_king(), 100).velocity_value();
    auto v400 = empirical_velocity(make_king(), 400).velocity_value();
    CHECK(std::abs(v400 - 1) < std::abs(v100 - 1));
    CHECK(v400 == doctest::Approx(1).epsilon(0.01));
}

TEST_CASE("octant folding matches the full box sum") {
    for (const auto& piece : {make_knight({1, 2}), make_knight({2, 3}), make_king(), make_taxicab()}) {
        auto f = compute_field(piece, 100);
        CHECK(box_distance_sum(f, SumMode::Full) == box_distance_sum(f, SumMode::Octant));
    }
    Piece lopsided("L", {{1, 0}, {0, 1}, {-1, -1}});
    CHECK_THROWS_AS(box_distance_sum(compute_field(lopsided, 4), SumMode::Octant), std::invalid_argument);
}

TEST_CASE("velocity normalizers differ by O(1/h)") {
    auto gap = [](std::int64_t h) {
        auto f = compute_field(make_knight({1, 2}), h);
        return std::abs(empirical_velocity(f, Normalizer::Box).velocity_value() -
                        empirical_velocity(f, Normalizer::Punctured).velocity_value());
    };
    CHECK(gap(1000) < gap(100));
}

TEST_CASE("chess knight box mean against the classical distance") {
    const std::int64_t h = 40;
    std::int64_t total = 0;
    for (auto x = -h; x <= h; ++x)
        for (auto y = -h; y <= h; ++y) total += oracle::chess_knight_distance(x, y);
    auto est = empirical_velocity(make_knight({1, 2}), h);
    CHECK(est.mean_distance == Rational(total, ball_size(h)));
    CHECK(est.velocity == Rational(2 * h, 3) / Rational(total, ball_size(h)));
}

TEST_CASE("non-primitive pieces are rejected") {
    CHECK_THROWS_AS(empirical_velocity(make_knight({1, 3}), 5), std::domain_error);
    CHECK_THROWS_AS(empirical_cdf({1, 3}, 5), std::invalid_argument);
    CHECK_THROWS_AS(lemma1_check({2, 4}), std::invalid_argument);
}

TEST_CASE("relative velocity with the king as reference is the box velocity") {
    for (const auto& piece : {make_knight({1, 2}), make_knight({2, 3}), make_taxicab(), make_king()})
        for (std::int64_t h : {1, 7, 40}) {
            auto rel = relative_velocity(make_king(), piece, h);
            auto box = empirical_velocity(piece, h, Normalizer::Box);
            CHECK(rel.region_size == static_cast<std::size_t>(ball_size(h)));
            CHECK(rel.mean_distance == box.mean_distance);
            CHECK(rel.velocity == box.velocity);
        }
}

TEST_CASE("relative velocity against taxicab regions") {
    auto rel = relative_velocity(make_taxicab(), make_knight({1, 2}), 60);
    CHECK(rel.region_size == static_cast<std::size_t>(2 * 60 * 61 + 1));
    CHECK(std::isfinite(rel.velocity.to_double()));
    CHECK(rel.velocity > Rational(0));
    auto self = relative_velocity(make_taxicab(), make_taxicab(), 60);
    // mean of the 1-norm over the 1-norm ball: sum l*4l / (2h(h+1)+1)
    std::int64_t total = 0;
    for (std::int64_t l = 1; l <= 60; ++l) total += 4 * l * l;
    CHECK(self.mean_distance == Rational(total, 2 * 60 * 61 + 1));
}

TEST_CASE("residual near the origin and boundedness") {
    auto small = residual_report({1, 2}, 3);
    CHECK(small.max_abs_residual == Rational(8, 3));
    CHECK(small.argmax == LatticePoint{2, 2});
    auto r200 = residual_report({1, 2}, 200);
    auto r400 = residual_report({1, 2}, 400);
    CHECK(r200.max_abs_residual == r400.max_abs_residual);
    auto r23 = residual_report({2, 3}, 200);
    CHECK(r23.max_abs_residual / Rational(3) <= Rational(2));
    CHECK_THROWS_AS(residual_report({1, 3}, 10), std::invalid_argument);
}

TEST_CASE("lemma check on small boxes") {
    CHECK(lemma1_check({1, 2}) == Rational(2));
    auto f = compute_field(make_knight({1, 2}), 3);
    CHECK(f.max_distance_in_box() == 4);
    CHECK(*f.distance({1, 0}) <= 2 * 2);
    for (auto p : {KnightParams{2, 5}, KnightParams{3, 4}, KnightParams{4, 5}}) CHECK(lemma1_check(p) <= Rational(2));
}

TEST_CASE("empirical cdf basics") {
    auto est = empirical_cdf({1, 2}, 200);
    CHECK(est.sample_count() == static_cast<std::size_t>(punctured_ball_size(200)));
    // every knight distance is at least ||p||_inf / b
    CHECK(est.query(Rational(49, 100)) == Rational(0));
    CHECK(est.query(0.49) == 0.0);
    CHECK(est.query(Rational(2, 3) + Rational(1, 10)).to_double() > 0.999);
    // the largest ratio is 3, at (+-1, 0) and (0, +-1)
    CHECK(est.query(Rational(3)) == Rational(1));
    CHECK(est.query(Rational(29, 10)) < Rational(1));
    auto prev = Rational(0);
    for (int k = 0; k <= 100; ++k) {
        auto v = est.query(Rational(k, 100));
        CHECK(v >= prev);
        prev = v;
    }
    CHECK(est.query(3.0) == 1.0);
}

TEST_CASE("empirical cdf approaches the limit away from the atom at 1/b") {
    PiecewiseCdf ref({1, 2});
    auto coarse = empirical_cdf({1, 2}, 100), fine = empirical_cdf({1, 2}, 400);
    for (auto t : {Rational(11, 20), Rational(3, 5), Rational(13, 20)}) {
        auto e1 = abs(coarse.query(t) - ref(t)), e2 = abs(fine.query(t) - ref(t));
        CAPTURE(t.to_string());
        CHECK(e2 < e1);
        CHECK(e2.to_double() < 0.03);
    }
}

TEST_CASE("sup gap of a hand-built sample") {
    // samples 1/2, 1/2, 3/5, 2/3 against D_{1,2}
    CdfEstimate est({1, 2}, 1, {{2, 3}, {1, 2}, {3, 5}, {1, 2}});
    PiecewiseCdf ref({1, 2});
    // at 1/2: empirical 1/2, reference 1/2; left of 3/5: empirical 1/2 vs 4/5;
    // at 3/5: 3/4 vs 4/5; left of 2/3: 3/4 vs 1; at 2/3: 1 vs 1.
    CHECK(est.sup_gap(ref) == doctest::Approx(0.3));
}

TEST_CASE("khovanskii growth") {
    CHECK(khovanskii_fit(make_king(), 25) == Rational(51 * 51, 625));
    CHECK(std::abs(khovanskii_fit(make_taxicab(), 300).to_double() - 2.0) < 0.02 * 2.0);
    auto d = shells(make_knight({1, 2}), 60);
    CHECK(khovanskii_leading_coefficient(d, 30, 60) == doctest::Approx(14.0).epsilon(1e-6));
    auto t = shells(make_taxicab(), 40);
    CHECK(khovanskii_leading_coefficient(t, 20, 40) == doctest::Approx(2.0).epsilon(1e-9));
    CHECK_THROWS_AS(khovanskii_leading_coefficient(t, 10, 11), std::invalid_argument);
}

}
