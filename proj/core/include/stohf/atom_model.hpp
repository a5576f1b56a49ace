#pragma once

#include <map>
#include <string>
#include <vector>

#include "stohf/integral_engine.hpp"
#include "stohf/sto_basis.hpp"

namespace stohf {

enum class Spin { Up, Down };

/// Ground-state configuration of one atom, Z in [2, 10]. Open p shells are
/// Hund-filled: distinct real orbitals first, all unpaired spins up.
struct Occupation {
    int Z = 0;
    int n_1s = 0;
    int n_2s = 0;
    int n_2p = 0;
    std::vector<std::pair<OrbitalKind, Spin>> p_assignment;
    std::string term;  // e.g. "3P"

    std::string configuration_label() const;  // e.g. "1s2 2s2 2p2"
};

Occupation configuration(int Z);

/// Multiplicities of each core/Coulomb/exchange term in the
/// single-determinant energy expression. J counted once per electron pair,
/// K only for same-spin pairs.
struct PairCounts {
    std::map<Subshell, int> h;
    std::map<CoulombPair, int> j;
    std::map<ExchangePair, int> k;

    int total_j() const;
    bool operator==(const PairCounts&) const = default;
};

PairCounts pair_counts(const Occupation& occ);

/// How open/filled p shells enter the two-electron energy.
///
/// Averaged: every p-p electron pair contributes the spherically averaged
/// Coulomb repulsion (J_same + 2 J_diff)/3 = F^0 and no p-p exchange. This
/// is the model behind the published table and is the default everywhere.
///
/// Determinant: the exact dot product of pair_counts with the closed-form
/// integral values (J_same/J_diff/K_diff kept distinct).
enum class PShellModel { Averaged, Determinant };

/// Total energy E(alpha, beta, gamma), hartree.
double energy(int Z, const Exponents& exps,
              PShellModel model = PShellModel::Averaged);

struct EnergySplit {
    double kinetic = 0.0;
    double potential = 0.0;  // nuclear attraction + all J/K terms
    double total() const { return kinetic + potential; }
};

EnergySplit energy_split(int Z, const Exponents& exps,
                         PShellModel model = PShellModel::Averaged);

}  // namespace stohf
