#include <cmath>
#include <random>

#include "doctest.h"
#include "stohf/quadrature_oracle.hpp"

using namespace stohf;
using oracle::radial_fn;

TEST_CASE("F0(1s,1s) reproduces the hand-integrated 5 alpha / 8") {
    for (double a : {0.3, 1.0, 27.0 / 16.0, 8.0}) {
        const auto f = radial_fn(OrbitalKind::S1, Exponents::he(a));
        CHECK(oracle::radial_Fk(0, f, f) ==
              doctest::Approx(5.0 * a / 8.0).epsilon(1e-9));
    }
}

TEST_CASE("F0(1s,2p) reproduces the closed-form Coulomb value") {
    const double a = 4.71099, g = 1.18716;
    const Exponents exps = Exponents::spd(a, 1.0, g);
    const double expected =
        a * g *
        (std::pow(a, 4) + 5 * std::pow(a, 3) * g + 10 * a * a * g * g +
         10 * a * g * g * g + 2 * std::pow(g, 4)) /
        (2 * std::pow(a + g, 5));
    CHECK(oracle::radial_Fk(0, radial_fn(OrbitalKind::S1, exps),
                            radial_fn(OrbitalKind::P2z, exps)) ==
          doctest::Approx(expected).epsilon(1e-9));
}

TEST_CASE("radial integrals are nonnegative and symmetric in their roles") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> zeta(0.2, 12.0);
    for (int i = 0; i < 10; ++i) {
        const Exponents exps{zeta(rng), zeta(rng), zeta(rng)};
        const auto s1 = radial_fn(OrbitalKind::S1, exps);
        const auto s2 = radial_fn(OrbitalKind::S2, exps);
        const auto p = radial_fn(OrbitalKind::P2z, exps);
        for (int l : {0, 1, 2}) {
            const double fwd = oracle::radial_Fk(l, s1, p);
            const double rev = oracle::radial_Fk(l, p, s1);
            CHECK(fwd >= 0.0);
            // swapping which coordinate carries which density must not move
            // the two-region result
            CHECK(std::abs(fwd - rev) < 1e-10);
        }
        CHECK(std::abs(oracle::radial_Fk(0, s1, s2) -
                       oracle::radial_Fk(0, s2, s1)) < 1e-10);
    }
}

TEST_CASE("G0 with identical densities equals F0") {
    const Exponents exps = Exponents::he(2.5);
    const auto f = radial_fn(OrbitalKind::S1, exps);
    CHECK(oracle::radial_Gk(0, f, f) ==
          doctest::Approx(oracle::radial_Fk(0, f, f)).epsilon(1e-11));
}

TEST_CASE("angular coefficients match the multipole selection rules") {
    using pair_list = std::vector<std::pair<int, double>>;

    const pair_list j1s2p = oracle::angular_coefficients(CoulombPair::J1s2p);
    REQUIRE(j1s2p.size() == 1);
    CHECK(j1s2p[0].first == 0);
    CHECK(j1s2p[0].second == doctest::Approx(1.0).epsilon(1e-10));

    const pair_list k1s2s =
        oracle::angular_coefficients(ExchangePair::K1s2s);
    REQUIRE(k1s2s.size() == 1);
    CHECK(k1s2s[0].first == 0);
    CHECK(k1s2s[0].second == doctest::Approx(1.0).epsilon(1e-10));

    const pair_list k1s2p =
        oracle::angular_coefficients(ExchangePair::K1s2p);
    REQUIRE(k1s2p.size() == 1);
    CHECK(k1s2p[0].first == 1);
    CHECK(k1s2p[0].second == doctest::Approx(1.0 / 3.0).epsilon(1e-10));

    const pair_list kpp =
        oracle::angular_coefficients(ExchangePair::K2p2pDiff);
    REQUIRE(kpp.size() == 1);
    CHECK(kpp[0].first == 2);
    CHECK(kpp[0].second == doctest::Approx(3.0 / 25.0).epsilon(1e-10));

    const pair_list jsame =
        oracle::angular_coefficients(CoulombPair::J2p2pSame);
    REQUIRE(jsame.size() == 2);
    CHECK(jsame[0] == std::pair{0, jsame[0].second});
    CHECK(jsame[0].second == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(jsame[1].first == 2);
    CHECK(jsame[1].second == doctest::Approx(4.0 / 25.0).epsilon(1e-10));

    const pair_list jdiff =
        oracle::angular_coefficients(CoulombPair::J2p2pDiff);
    REQUIRE(jdiff.size() == 2);
    CHECK(jdiff[1].first == 2);
    CHECK(jdiff[1].second == doctest::Approx(-2.0 / 25.0).epsilon(1e-10));
}

TEST_CASE("multipole orders above 2 never survive the angular integration") {
    for (CoulombPair pair : kAllCoulombPairs)
        for (const auto& [l, c] : oracle::angular_coefficients(pair))
            CHECK(l <= 2);
    for (ExchangePair pair : kAllExchangePairs)
        for (const auto& [l, c] : oracle::angular_coefficients(pair))
            CHECK(l <= 2);
}

TEST_CASE("oracle core reproduces the 2p closed form") {
    for (double g : {0.7, 1.51874, 6.0}) {
        CHECK(oracle::core(Subshell::P2, Exponents::spd(1, 1, g), 6) ==
              doctest::Approx(0.5 * (g * g - 6.0 * g)).epsilon(1e-9));
    }
}

TEST_CASE("oracle 2s core agrees with the closed form at alpha = beta") {
    const Exponents exps = Exponents::sp2(1.3, 1.3);
    CHECK(oracle::core(Subshell::S2, exps, 4) ==
          doctest::Approx(core(Subshell::S2, exps, 4)).epsilon(1e-8));
}

TEST_CASE("oracle 1s kinetic part is the positive alpha^2/2 term") {
    const Exponents exps = Exponents::he(1.6875);
    const CoreParts parts = oracle::core_parts(Subshell::S1, exps, 2);
    CHECK(parts.kinetic > 0.0);
    CHECK(parts.kinetic ==
          doctest::Approx(core_parts(Subshell::S1, exps, 2).kinetic)
              .epsilon(1e-9));
}

TEST_CASE("oracle Coulomb anchor at alpha = gamma = 1") {
    CHECK(oracle::coulomb(CoulombPair::J1s2p, Exponents::spd(1, 1, 1)) ==
          doctest::Approx(7.0 / 16.0).epsilon(1e-9));
}

TEST_CASE("oracle overlap of 1s and 2s vanishes by construction") {
    CHECK(std::abs(oracle::overlap(OrbitalKind::S1, OrbitalKind::S2,
                                   Exponents::sp2(3.1, 0.9))) < 1e-10);
}

TEST_CASE("oracle p-shell identity") {
    const Exponents exps = Exponents::spd(1.0, 1.0, 2.16972);
    const double same = oracle::coulomb(CoulombPair::J2p2pSame, exps);
    const double diff = oracle::coulomb(CoulombPair::J2p2pDiff, exps);
    const double k = oracle::exchange(ExchangePair::K2p2pDiff, exps);
    CHECK(same - diff == doctest::Approx(2.0 * k).epsilon(1e-8));
}

TEST_CASE("halving the tolerance moves results less than the estimate") {
    const Exponents exps = Exponents::spd(5.0, 2.0, 1.5);
    const auto s1 = radial_fn(OrbitalKind::S1, exps);
    const auto p = radial_fn(OrbitalKind::P2z, exps);
    const double loose = oracle::radial_Fk(0, s1, p, 1e-10);
    const double tight = oracle::radial_Fk(0, s1, p, 5e-11);
    CHECK(std::abs(loose - tight) < 1e-10);
}
