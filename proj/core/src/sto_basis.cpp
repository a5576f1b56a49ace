#include "stohf/sto_basis.hpp"

#include <cmath>

namespace stohf {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_range(double zeta, const char* name) {
    if (!(zeta > kMinExponent) || zeta > kMaxExponent)
        throw MissingExponent(std::string(name) + " out of range (0, 50]");
}

}  // namespace

Subshell subshell_of(OrbitalKind kind) {
    switch (kind) {
        case OrbitalKind::S1: return Subshell::S1;
        case OrbitalKind::S2: return Subshell::S2;
        default: return Subshell::P2;
    }
}

double exponent_for(Subshell sub, const Exponents& exps) {
    switch (sub) {
        case Subshell::S1:
            check_range(exps.alpha, "alpha");
            return exps.alpha;
        case Subshell::S2:
            if (!exps.beta) throw MissingExponent("beta required for 2s");
            check_range(exps.alpha, "alpha");
            check_range(*exps.beta, "beta");
            return *exps.beta;
        case Subshell::P2:
            if (!exps.gamma) throw MissingExponent("gamma required for 2p");
            check_range(*exps.gamma, "gamma");
            return *exps.gamma;
    }
    throw MissingExponent("unknown subshell");
}

std::function<double(double)> radial_part(OrbitalKind kind,
                                          const Exponents& exps) {
    switch (subshell_of(kind)) {
        case Subshell::S1: {
            const double a = exponent_for(Subshell::S1, exps);
            const double c = 2.0 * std::pow(a, 1.5);
            return [c, a](double r) { return c * std::exp(-a * r); };
        }
        case Subshell::S2: {
            const double b = exponent_for(Subshell::S2, exps);
            const double a = exps.alpha;
            // alpha^2 - alpha*beta + beta^2 > 0 for all positive a, b
            const double denom = a * a - a * b + b * b;
            const double c = 2.0 * std::sqrt(3.0 * std::pow(b, 5) / denom);
            const double k = (a + b) / 3.0;
            return [c, k, b](double r) {
                return c * (1.0 - k * r) * std::exp(-b * r);
            };
        }
        case Subshell::P2: {
            const double g = exponent_for(Subshell::P2, exps);
            const double c = 2.0 * std::pow(g, 2.5) / std::sqrt(3.0);
            return [c, g](double r) { return c * r * std::exp(-g * r); };
        }
    }
    throw MissingExponent("unknown orbital kind");
}

double angular_part(OrbitalKind kind, double theta, double phi) {
    const double s_norm = 1.0 / std::sqrt(4.0 * kPi);
    const double p_norm = std::sqrt(3.0 / (4.0 * kPi));
    switch (kind) {
        case OrbitalKind::S1:
        case OrbitalKind::S2: return s_norm;
        case OrbitalKind::P2x:
            return p_norm * std::sin(theta) * std::cos(phi);
        case OrbitalKind::P2y:
            return p_norm * std::sin(theta) * std::sin(phi);
        case OrbitalKind::P2z: return p_norm * std::cos(theta);
    }
    return 0.0;
}

double evaluate(OrbitalKind kind, const Exponents& exps, double r,
                double theta, double phi) {
    if (r < 0.0) throw std::invalid_argument("negative radius");
    return radial_part(kind, exps)(r) * angular_part(kind, theta, phi);
}

}  // namespace stohf
