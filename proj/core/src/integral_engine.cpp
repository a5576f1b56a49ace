#include "stohf/integral_engine.hpp"

#include <algorithm>
#include <cmath>

namespace stohf {

namespace {

double pow5(double x) { double x2 = x * x; return x2 * x2 * x; }
double pow7(double x) { double x2 = x * x; return x2 * x2 * x2 * x; }
double pow9(double x) { double x2 = x * x; double x4 = x2 * x2; return x4 * x4 * x; }

// alpha^2 - alpha*beta + beta^2, the 2s normalization denominator.
// Strictly positive for all positive alpha, beta.
double s2_denom(double a, double b) { return a * a - a * b + b * b; }

// Slater-Condon radial integrals for the 2p shell (single exponent).
double f0_2p2p(double g) { return 93.0 * g / 256.0; }
double f2_2p2p(double g) { return 45.0 * g / 256.0; }

}  // namespace

const char* name(CoulombPair pair) {
    switch (pair) {
        case CoulombPair::J1s1s: return "J_1s1s";
        case CoulombPair::J2s2s: return "J_2s2s";
        case CoulombPair::J1s2s: return "J_1s2s";
        case CoulombPair::J1s2p: return "J_1s2p";
        case CoulombPair::J2s2p: return "J_2s2p";
        case CoulombPair::J2p2pSame: return "J_2p2p_same";
        case CoulombPair::J2p2pDiff: return "J_2p2p_diff";
    }
    return "?";
}

const char* name(ExchangePair pair) {
    switch (pair) {
        case ExchangePair::K1s2s: return "K_1s2s";
        case ExchangePair::K1s2p: return "K_1s2p";
        case ExchangePair::K2s2p: return "K_2s2p";
        case ExchangePair::K2p2pDiff: return "K_2p2p_diff";
    }
    return "?";
}

const char* name(Subshell sub) {
    switch (sub) {
        case Subshell::S1: return "1s";
        case Subshell::S2: return "2s";
        case Subshell::P2: return "2p";
    }
    return "?";
}

CoreParts core_parts(Subshell sub, const Exponents& exps, int Z) {
    if (Z < 1) throw std::invalid_argument("Z must be positive");
    const double z = static_cast<double>(Z);
    switch (sub) {
        case Subshell::S1: {
            const double a = exponent_for(Subshell::S1, exps);
            return {0.5 * a * a, -z * a};
        }
        case Subshell::S2: {
            const double b = exponent_for(Subshell::S2, exps);
            const double a = exps.alpha;
            const double d = s2_denom(a, b);
            const double t = b * b * (a * a - a * b + 7.0 * b * b) / (6.0 * d);
            const double v = -z * b * (a * a - 2.0 * a * b + 3.0 * b * b) / (2.0 * d);
            return {t, v};
        }
        case Subshell::P2: {
            const double g = exponent_for(Subshell::P2, exps);
            return {0.5 * g * g, -0.5 * z * g};
        }
    }
    throw std::invalid_argument("unknown subshell");
}

double core(Subshell sub, const Exponents& exps, int Z) {
    return core_parts(sub, exps, Z).total();
}

double coulomb(CoulombPair pair, const Exponents& exps) {
    switch (pair) {
        case CoulombPair::J1s1s: {
            const double a = exponent_for(Subshell::S1, exps);
            return 5.0 * a / 8.0;
        }
        case CoulombPair::J1s2s: {
            const double b = exponent_for(Subshell::S2, exps);
            const double a = exps.alpha;
            const double ab = a + b;
            const double num = ((a + b) * a * a * a + (4.0 * a + 2.0 * b) * b * b * b);
            return a * b * num / (2.0 * ab * ab * ab * s2_denom(a, b));
        }
        case CoulombPair::J2s2s: {
            const double b = exponent_for(Subshell::S2, exps);
            const double a = exps.alpha;
            const double d = s2_denom(a, b);
            const double num =
                (((93.0 * a - 244.0 * b) * a + 438.0 * b * b) * a - 420.0 * b * b * b) * a +
                245.0 * b * b * b * b;
            return b * num / (256.0 * d * d);
        }
        case CoulombPair::J1s2p: {
            const double a = exponent_for(Subshell::S1, exps);
            const double g = exponent_for(Subshell::P2, exps);
            const double num =
                (((a + 5.0 * g) * a + 10.0 * g * g) * a + 10.0 * g * g * g) * a +
                2.0 * g * g * g * g;
            return a * g * num / (2.0 * pow5(a + g));
        }
        case CoulombPair::J2s2p: {
            const double b = exponent_for(Subshell::S2, exps);
            const double g = exponent_for(Subshell::P2, exps);
            const double a = exps.alpha;
            // shared low-order part of the three bracket polynomials
            auto bracket = [b, g](double c4, double c5, double c6) {
                return ((((((b + 7.0 * g) * b + 21.0 * g * g) * b + 35.0 * g * g * g) * b +
                          c4 * g * g * g * g) * b +
                         c5 * g * g * g * g * g) * b +
                        c6 * g * g * g * g * g * g);
            };
            const double num = a * a * bracket(21.0, 7.0, 1.0) -
                               a * b * bracket(42.0, 14.0, 2.0) +
                               b * b * bracket(33.0, 21.0, 3.0);
            return b * g * num / (2.0 * pow7(b + g) * s2_denom(a, b));
        }
        case CoulombPair::J2p2pSame: {
            const double g = exponent_for(Subshell::P2, exps);
            return f0_2p2p(g) + (4.0 / 25.0) * f2_2p2p(g);
        }
        case CoulombPair::J2p2pDiff: {
            const double g = exponent_for(Subshell::P2, exps);
            return f0_2p2p(g) - (2.0 / 25.0) * f2_2p2p(g);
        }
    }
    throw std::invalid_argument("unknown Coulomb pair");
}

double exchange(ExchangePair pair, const Exponents& exps) {
    switch (pair) {
        case ExchangePair::K1s2s: {
            const double b = exponent_for(Subshell::S2, exps);
            const double a = exps.alpha;
            return 4.0 * a * a * a * pow5(b) / (pow5(a + b) * s2_denom(a, b));
        }
        case ExchangePair::K1s2p: {
            const double a = exponent_for(Subshell::S1, exps);
            const double g = exponent_for(Subshell::P2, exps);
            // 1/3 angular factor on G^1
            return 28.0 * a * a * a * pow5(g) / (3.0 * pow7(a + g));
        }
        case ExchangePair::K2s2p: {
            const double b = exponent_for(Subshell::S2, exps);
            const double g = exponent_for(Subshell::P2, exps);
            const double a = exps.alpha;
            const double quad = 185.0 * a * a + 76.0 * a * b - 294.0 * a * g +
                                17.0 * b * b - 42.0 * b * g + 126.0 * g * g;
            return 2.0 * pow5(b) * pow5(g) * quad /
                   (9.0 * pow9(b + g) * s2_denom(a, b));
        }
        case ExchangePair::K2p2pDiff: {
            const double g = exponent_for(Subshell::P2, exps);
            return (3.0 / 25.0) * f2_2p2p(g);
        }
    }
    throw std::invalid_argument("unknown exchange pair");
}

int IntegralSet::populated_count() const {
    int n = 1;  // h_1s always present
    if (h_2s) ++n;
    if (h_2p) ++n;
    for (const auto& v : coulomb)
        if (v) ++n;
    for (const auto& v : exchange)
        if (v) ++n;
    return n;
}

IntegralSet integral_set(const Exponents& exps, int Z) {
    if (Z < 2 || Z > 10) throw std::invalid_argument("Z must be in [2, 10]");
    const int n2s = std::clamp(Z - 2, 0, 2);
    const int n2p = std::clamp(Z - 4, 0, 6);
    if ((n2s > 0) != exps.beta.has_value() ||
        (n2p > 0) != exps.gamma.has_value())
        throw MissingExponent("exponent presence does not match Z");

    IntegralSet set;
    auto put_j = [&](CoulombPair p) {
        set.coulomb[static_cast<int>(p)] = coulomb(p, exps);
    };
    auto put_k = [&](ExchangePair p) {
        set.exchange[static_cast<int>(p)] = exchange(p, exps);
    };

    set.h_1s = core(Subshell::S1, exps, Z);
    put_j(CoulombPair::J1s1s);
    if (n2s > 0) {
        set.h_2s = core(Subshell::S2, exps, Z);
        put_j(CoulombPair::J1s2s);
        put_k(ExchangePair::K1s2s);
        if (n2s > 1) put_j(CoulombPair::J2s2s);
    }
    if (n2p > 0) {
        set.h_2p = core(Subshell::P2, exps, Z);
        put_j(CoulombPair::J1s2p);
        put_j(CoulombPair::J2s2p);
        put_k(ExchangePair::K1s2p);
        put_k(ExchangePair::K2s2p);
        if (n2p > 1) {
            put_j(CoulombPair::J2p2pDiff);
            put_k(ExchangePair::K2p2pDiff);
        }
        if (n2p > 3) put_j(CoulombPair::J2p2pSame);
    }
    return set;
}

}  // namespace stohf
