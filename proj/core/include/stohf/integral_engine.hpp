#pragma once

#include <array>
#include <optional>

#include "stohf/sto_basis.hpp"

namespace stohf {

/// Distinct two-electron Coulomb integrals over the 1s/2s/2p shells.
/// J2p2pSame: both densities in one spatial p orbital. J2p2pDiff: two
/// distinct real p orbitals.
enum class CoulombPair {
    J1s1s,
    J2s2s,
    J1s2s,
    J1s2p,
    J2s2p,
    J2p2pSame,
    J2p2pDiff,
};

/// Distinct spatial exchange integrals. The spin overlap factor is applied
/// by the pair-counting rules in atom_model, not here.
enum class ExchangePair {
    K1s2s,
    K1s2p,
    K2s2p,
    K2p2pDiff,
};

inline constexpr std::array<CoulombPair, 7> kAllCoulombPairs = {
    CoulombPair::J1s1s,     CoulombPair::J2s2s,    CoulombPair::J1s2s,
    CoulombPair::J1s2p,     CoulombPair::J2s2p,    CoulombPair::J2p2pSame,
    CoulombPair::J2p2pDiff,
};

inline constexpr std::array<ExchangePair, 4> kAllExchangePairs = {
    ExchangePair::K1s2s,
    ExchangePair::K1s2p,
    ExchangePair::K2s2p,
    ExchangePair::K2p2pDiff,
};

const char* name(CoulombPair pair);
const char* name(ExchangePair pair);
const char* name(Subshell sub);

/// Kinetic and nuclear-attraction parts of a core integral, hartree.
struct CoreParts {
    double kinetic = 0.0;
    double potential = 0.0;
    double total() const { return kinetic + potential; }
};

/// One-electron core integral <psi|-1/2 nabla^2 - Z/r|psi>, split into T
/// and V for virial checks.
CoreParts core_parts(Subshell sub, const Exponents& exps, int Z);
double core(Subshell sub, const Exponents& exps, int Z);

/// Closed-form Coulomb integral, hartree. Symmetric in the two orbital
/// roles by construction.
double coulomb(CoulombPair pair, const Exponents& exps);

/// Closed-form spatial exchange integral (angular factor included), hartree.
double exchange(ExchangePair pair, const Exponents& exps);

/// Every distinct integral the energy functional of one atom needs.
/// Entries for shells the atom does not occupy are absent.
struct IntegralSet {
    double h_1s = 0.0;
    std::optional<double> h_2s;
    std::optional<double> h_2p;
    std::array<std::optional<double>, 7> coulomb;   // indexed by CoulombPair
    std::array<std::optional<double>, 4> exchange;  // indexed by ExchangePair

    std::optional<double> get(CoulombPair p) const {
        return coulomb[static_cast<int>(p)];
    }
    std::optional<double> get(ExchangePair p) const {
        return exchange[static_cast<int>(p)];
    }
    int populated_count() const;
};

IntegralSet integral_set(const Exponents& exps, int Z);

}  // namespace stohf
