#include <cmath>

#include "doctest.h"
#include "stohf/atom_model.hpp"
#include "stohf/optimizer.hpp"
#include "stohf/reference_data.hpp"

using namespace stohf;

TEST_CASE("initial guesses") {
    const Exponents he = initial_guess(2);
    CHECK(he.alpha == doctest::Approx(1.7));
    CHECK(std::abs(he.alpha - 1.6875) < 0.02);
    CHECK_FALSE(he.beta.has_value());

    const Exponents li = initial_guess(3);
    CHECK(li.beta.has_value());
    CHECK_FALSE(li.gamma.has_value());

    const Exponents carbon = initial_guess(6);
    const ReferenceRow& row = reference_row(6);
    CHECK(carbon.alpha / row.alpha > 0.5);
    CHECK(carbon.alpha / row.alpha < 2.0);
    CHECK(*carbon.beta / *row.beta > 0.5);
    CHECK(*carbon.beta / *row.beta < 2.0);
    CHECK(*carbon.gamma / *row.gamma > 0.5);
    CHECK(*carbon.gamma / *row.gamma < 2.0);

    CHECK_THROWS_AS(initial_guess(1), std::invalid_argument);
    CHECK_THROWS_AS(initial_guess(11), std::invalid_argument);
}

TEST_CASE("helium minimization hits the closed-form optimum") {
    const AtomResult result = minimize(2);
    CHECK(result.converged);
    CHECK(result.exponents.alpha == doctest::Approx(1.6875).epsilon(1e-6));
    CHECK(result.energy == doctest::Approx(-2.84766).epsilon(1e-5 / 2.84766));
    // stationarity by central finite difference on the raw exponent
    const double h = 1e-5;
    const double d =
        (energy(2, Exponents::he(result.exponents.alpha + h)) -
         energy(2, Exponents::he(result.exponents.alpha - h))) /
        (2 * h);
    CHECK(std::abs(d) <= 1e-6);
}

TEST_CASE("neon minimization reproduces the published row") {
    const AtomResult result = minimize(10);
    const ReferenceRow& row = reference_row(10);
    CHECK(result.converged);
    CHECK(std::abs(result.exponents.alpha - row.alpha) < 2e-3);
    CHECK(std::abs(*result.exponents.beta - *row.beta) < 2e-3);
    CHECK(std::abs(*result.exponents.gamma - *row.gamma) < 2e-3);
    CHECK(std::abs(result.energy - row.e_calc) < 2e-3);
}

TEST_CASE("minimization never ends above its starting point") {
    for (int Z : {3, 6, 9}) {
        const Exponents guess = initial_guess(Z);
        const AtomResult result = minimize(Z, guess);
        CHECK(result.energy <= energy(Z, guess));
        CHECK_FALSE(result.restart_disagreement);
    }
}

TEST_CASE("optimized energies decrease strictly with Z") {
    double previous = 0.0;
    for (int Z = 2; Z <= 10; ++Z) {
        const AtomResult result = minimize(Z);
        CHECK(result.energy < previous);
        previous = result.energy;
    }
}

TEST_CASE("virial ratio at every converged optimum") {
    for (int Z = 2; Z <= 10; ++Z) {
        const AtomResult result = minimize(Z);
        REQUIRE(result.converged);
        const EnergySplit split = energy_split(Z, result.exponents);
        CHECK(std::abs(2.0 * split.kinetic + split.potential) <=
              1e-5 * std::abs(result.energy));
    }
}

TEST_CASE("minimize is deterministic for a fixed seed") {
    OptimizerOptions opts;
    opts.seed = 7;
    const AtomResult a = minimize(7, opts);
    const AtomResult b = minimize(7, opts);
    CHECK(a.energy == b.energy);
    CHECK(a.exponents.alpha == b.exponents.alpha);
    CHECK(*a.exponents.gamma == *b.exponents.gamma);
    CHECK(a.evaluations == b.evaluations);
}

TEST_CASE("guesses outside the domain are rejected") {
    CHECK_THROWS_AS(minimize(2, Exponents::he(55.0), {}),
                    std::invalid_argument);
}

TEST_CASE("scan evaluates the grid in order") {
    const auto points = scan(
        2, {Exponents::he(1.0), Exponents::he(1.6875), Exponents::he(2.5)});
    REQUIRE(points.size() == 3);
    CHECK(points[1].second < points[0].second);
    CHECK(points[1].second < points[2].second);
    for (const auto& [exps, e] : points)
        CHECK(e == doctest::Approx(exps.alpha * exps.alpha - 4 * exps.alpha +
                                   5 * exps.alpha / 8));

    CHECK(scan(2, {}).empty());
}

TEST_CASE("published carbon exponents are a local minimum of the model") {
    const Exponents opt = reference_row(6).exponents();
    const double e0 = energy(6, opt);
    const Exponents bumped{opt.alpha * 1.01, *opt.beta * 1.01,
                           *opt.gamma * 1.01};
    CHECK(e0 <= energy(6, bumped));
}
