#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "stohf/integral_engine.hpp"
#include "stohf/sto_basis.hpp"

// Independent numerical route to every integral the engine evaluates in
// closed form. Test-path only; the optimizer never calls into here.
namespace stohf::oracle {

/// Radial function together with its slowest exponential decay rate, used
/// to place the integration cutoff (tail below 1e-14 at 40/decay).
struct RadialFn {
    std::function<double(double)> f;
    double decay = 1.0;
};

RadialFn radial_fn(OrbitalKind kind, const Exponents& exps);

/// Adaptive 1D quadrature (nested Gauss-Legendre 7/15 with bisection).
/// Throws std::runtime_error on non-convergence.
double integrate(const std::function<double(double)>& f, double lo, double hi,
                 double abs_tol);

/// Slater radial integral over the multipole kernel r_<^l / r_>^{l+1}
/// against the densities f_a(r1)^2 and f_b(r2)^2, split into the two
/// ordered regions r2 < r1 and r2 > r1.
double radial_Fk(int l, const RadialFn& fa, const RadialFn& fb,
                 double abs_tol = 1e-10);

/// Exchange-form radial integral: overlap density f_a f_b on both
/// coordinates.
double radial_Gk(int l, const RadialFn& fa, const RadialFn& fb,
                 double abs_tol = 1e-10);

/// Multipole weights from brute-force spherical quadrature of the real
/// orbital angular factors (l = 0..4, entries below 1e-10 dropped).
std::vector<std::pair<int, double>> angular_coefficients(CoulombPair pair);
std::vector<std::pair<int, double>> angular_coefficients(ExchangePair pair);

double core(Subshell sub, const Exponents& exps, int Z);
CoreParts core_parts(Subshell sub, const Exponents& exps, int Z);
double coulomb(CoulombPair pair, const Exponents& exps);
double exchange(ExchangePair pair, const Exponents& exps);
double overlap(OrbitalKind a, OrbitalKind b, const Exponents& exps);

}  // namespace stohf::oracle
