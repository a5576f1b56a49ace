#pragma once

#include <functional>
#include <optional>
#include <stdexcept>

namespace stohf {

/// Variational orbital exponents in inverse bohr. beta is present iff the
/// atom has 2s electrons (Z >= 3), gamma iff it has 2p electrons (Z >= 5).
struct Exponents {
    double alpha = 0.0;
    std::optional<double> beta;
    std::optional<double> gamma;

    static Exponents he(double a) { return {a, {}, {}}; }
    static Exponents sp2(double a, double b) { return {a, b, {}}; }
    static Exponents spd(double a, double b, double g) { return {a, b, g}; }
};

// Exponents outside this range are rejected everywhere (overflow / loss of
// normalizability guard for the optimizer).
inline constexpr double kMinExponent = 0.0;   // exclusive
inline constexpr double kMaxExponent = 50.0;  // inclusive

enum class OrbitalKind { S1, S2, P2x, P2y, P2z };

enum class Subshell { S1, S2, P2 };

Subshell subshell_of(OrbitalKind kind);

/// Thrown when an operation needs an exponent the Exponents value does not
/// carry, or when a value lies outside (0, 50].
class MissingExponent : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Exponent for the subshell that `kind` belongs to (alpha for 1s, beta for
/// 2s, gamma for 2p). 2s additionally requires alpha for its
/// orthogonalization factor.
double exponent_for(Subshell sub, const Exponents& exps);

/// Pointwise amplitude of the named normalized orbital, bohr^{-3/2}.
double evaluate(OrbitalKind kind, const Exponents& exps, double r,
                double theta, double phi);

/// Normalized radial factor R(r) with ∫ R(r)^2 r^2 dr = 1, so that
/// evaluate() = R(r) * real spherical harmonic.
std::function<double(double)> radial_part(OrbitalKind kind,
                                          const Exponents& exps);

/// Real spherical harmonic carried by `kind` (1/sqrt(4pi) for s orbitals).
double angular_part(OrbitalKind kind, double theta, double phi);

}  // namespace stohf
