#pragma once

#include <vector>

#include "stohf/sto_basis.hpp"

namespace stohf {

struct OptimizerOptions {
    double energy_tol = 1e-10;      // hartree
    double param_tol = 1e-8;        // relative
    int max_evaluations = 10000;    // per restart
    int restarts = 3;
    unsigned seed = 42;             // restart perturbation RNG
};

struct AtomResult {
    int Z = 0;
    Exponents exponents;
    double energy = 0.0;  // hartree
    bool converged = false;
    int evaluations = 0;
    double wall_seconds = 0.0;
    // set when two restarts converge to parameters differing by more than
    // 1e-4 relative; the lower-energy result is still returned
    bool restart_disagreement = false;
    double stationarity = 0.0;  // max |dE/d log zeta| at the optimum
};

/// Slater-screening starting point for the given atom.
Exponents initial_guess(int Z);

/// Minimize E(alpha, beta, gamma) for one atom. Nelder-Mead on
/// log-exponents with restarts; deterministic for a fixed seed.
AtomResult minimize(int Z, const Exponents& guess,
                    const OptimizerOptions& opts = {});

AtomResult minimize(int Z, const OptimizerOptions& opts = {});

/// Energy at each grid point, order preserved.
std::vector<std::pair<Exponents, double>> scan(
    int Z, const std::vector<Exponents>& grid);

}  // namespace stohf
