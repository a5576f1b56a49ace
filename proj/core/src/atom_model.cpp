#include "stohf/atom_model.hpp"

#include <array>
#include <stdexcept>

namespace stohf {

namespace {

struct SpinOrbital {
    Subshell sub;
    OrbitalKind kind;
    Spin spin;
};

std::vector<SpinOrbital> spin_orbitals(const Occupation& occ) {
    std::vector<SpinOrbital> out;
    for (int i = 0; i < occ.n_1s; ++i)
        out.push_back({Subshell::S1, OrbitalKind::S1,
                       i == 0 ? Spin::Up : Spin::Down});
    for (int i = 0; i < occ.n_2s; ++i)
        out.push_back({Subshell::S2, OrbitalKind::S2,
                       i == 0 ? Spin::Up : Spin::Down});
    for (const auto& [kind, spin] : occ.p_assignment)
        out.push_back({Subshell::P2, kind, spin});
    return out;
}

CoulombPair coulomb_pair(const SpinOrbital& a, const SpinOrbital& b) {
    const std::pair<int, int> subs = std::minmax(static_cast<int>(a.sub),
                                                 static_cast<int>(b.sub));
    if (subs == std::pair{0, 0}) return CoulombPair::J1s1s;
    if (subs == std::pair{1, 1}) return CoulombPair::J2s2s;
    if (subs == std::pair{0, 1}) return CoulombPair::J1s2s;
    if (subs == std::pair{0, 2}) return CoulombPair::J1s2p;
    if (subs == std::pair{1, 2}) return CoulombPair::J2s2p;
    // both 2p
    return a.kind == b.kind ? CoulombPair::J2p2pSame
                            : CoulombPair::J2p2pDiff;
}

ExchangePair exchange_pair(const SpinOrbital& a, const SpinOrbital& b) {
    const std::pair<int, int> subs = std::minmax(static_cast<int>(a.sub),
                                                 static_cast<int>(b.sub));
    if (subs == std::pair{0, 1}) return ExchangePair::K1s2s;
    if (subs == std::pair{0, 2}) return ExchangePair::K1s2p;
    if (subs == std::pair{1, 2}) return ExchangePair::K2s2p;
    return ExchangePair::K2p2pDiff;
}

}  // namespace

std::string Occupation::configuration_label() const {
    std::string s = "1s" + std::to_string(n_1s);
    if (n_2s > 0) s += " 2s" + std::to_string(n_2s);
    if (n_2p > 0) s += " 2p" + std::to_string(n_2p);
    return s;
}

Occupation configuration(int Z) {
    if (Z < 2 || Z > 10) throw std::invalid_argument("Z must be in [2, 10]");
    static const std::array<const char*, 11> terms = {
        "", "", "1S", "2S", "1S", "2P", "3P", "4S", "3P", "2P", "1S"};
    Occupation occ;
    occ.Z = Z;
    occ.n_1s = std::min(Z, 2);
    occ.n_2s = std::clamp(Z - 2, 0, 2);
    occ.n_2p = std::clamp(Z - 4, 0, 6);
    occ.term = terms[Z];
    // Hund filling: px, py, pz all spin-up first, then pair up
    static const std::array<OrbitalKind, 3> p_orbitals = {
        OrbitalKind::P2x, OrbitalKind::P2y, OrbitalKind::P2z};
    for (int i = 0; i < occ.n_2p; ++i)
        occ.p_assignment.emplace_back(p_orbitals[i % 3],
                                      i < 3 ? Spin::Up : Spin::Down);
    return occ;
}

int PairCounts::total_j() const {
    int n = 0;
    for (const auto& [pair, count] : j) n += count;
    return n;
}

PairCounts pair_counts(const Occupation& occ) {
    PairCounts counts;
    if (occ.n_1s > 0) counts.h[Subshell::S1] = occ.n_1s;
    if (occ.n_2s > 0) counts.h[Subshell::S2] = occ.n_2s;
    if (occ.n_2p > 0) counts.h[Subshell::P2] = occ.n_2p;

    const auto orbitals = spin_orbitals(occ);
    for (std::size_t i = 0; i < orbitals.size(); ++i) {
        for (std::size_t j = i + 1; j < orbitals.size(); ++j) {
            counts.j[coulomb_pair(orbitals[i], orbitals[j])] += 1;
            if (orbitals[i].spin == orbitals[j].spin)
                counts.k[exchange_pair(orbitals[i], orbitals[j])] += 1;
        }
    }
    return counts;
}

double energy(int Z, const Exponents& exps, PShellModel model) {
    return energy_split(Z, exps, model).total();
}

EnergySplit energy_split(int Z, const Exponents& exps, PShellModel model) {
    const Occupation occ = configuration(Z);
    const PairCounts counts = pair_counts(occ);
    const IntegralSet ints = integral_set(exps, Z);

    EnergySplit split;
    for (const auto& [sub, n] : counts.h) {
        const CoreParts parts = core_parts(sub, exps, Z);
        split.kinetic += n * parts.kinetic;
        split.potential += n * parts.potential;
    }

    const bool average_pp = model == PShellModel::Averaged;
    // (J_same + 2 J_diff)/3 equals the l = 0 Slater-Condon term F^0
    const double j_pp_avg =
        occ.n_2p >= 2 && average_pp
            ? (coulomb(CoulombPair::J2p2pSame, exps) +
               2.0 * coulomb(CoulombPair::J2p2pDiff, exps)) /
                  3.0
            : 0.0;
    auto is_pp = [](CoulombPair p) {
        return p == CoulombPair::J2p2pSame || p == CoulombPair::J2p2pDiff;
    };

    for (const auto& [pair, n] : counts.j)
        split.potential +=
            n * (average_pp && is_pp(pair) ? j_pp_avg
                                           : ints.get(pair).value());
    for (const auto& [pair, n] : counts.k) {
        if (average_pp && pair == ExchangePair::K2p2pDiff) continue;
        split.potential -= n * ints.get(pair).value();
    }
    return split;
}

}  // namespace stohf
