// Acceptance gate: one line per criterion, exit status 0 only if all pass.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "stohf/atom_model.hpp"
#include "stohf/integral_engine.hpp"
#include "stohf/optimizer.hpp"
#include "stohf/quadrature_oracle.hpp"
#include "stohf/reference_data.hpp"
#include "stohf/report.hpp"

using namespace stohf;

namespace {

int failures = 0;

void report(int criterion, const char* title, bool ok,
            const std::string& detail) {
    std::printf("criterion %d %-4s %s%s%s\n", criterion, ok ? "PASS" : "FAIL",
                title, detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

// 1. Table reproduction: optimized exponents and energies within 2e-3 of the
//    published row for every Z, nine atoms in under 5 seconds.
void criterion_table() {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    for (int Z = 2; Z <= 10; ++Z) {
        const AtomResult result = minimize(Z);
        const ReferenceRow& row = reference_row(Z);
        auto check = [&](const char* what, double got, double want) {
            if (std::abs(got - want) <= 2e-3) return;
            ok = false;
            char buf[128];
            std::snprintf(buf, sizeof buf, "Z=%d %s %.6g vs %.6g; ", Z, what,
                          got, want);
            detail += buf;
        };
        check("alpha", result.exponents.alpha, row.alpha);
        if (row.beta) check("beta", result.exponents.beta.value_or(0), *row.beta);
        if (row.gamma)
            check("gamma", result.exponents.gamma.value_or(0), *row.gamma);
        check("E", result.energy, row.e_calc);
        if (!result.converged) {
            ok = false;
            detail += "Z=" + std::to_string(Z) + " not converged; ";
        }
    }
    const double elapsed = seconds_since(t0);
    if (elapsed >= 5.0) {
        ok = false;
        detail += "runtime " + std::to_string(elapsed) + "s >= 5s";
    }
    report(1, "table reproduction within 2e-3, nine atoms < 5 s", ok, detail);
}

// 2. Helium closed form: alpha = 27/16 and E = -(27/16)^2 within 1e-6.
void criterion_helium() {
    const AtomResult result = minimize(2);
    const bool ok = std::abs(result.exponents.alpha - 27.0 / 16.0) <= 1e-6 &&
                    std::abs(result.energy + 2.84765625) <= 1e-6;
    char buf[96];
    std::snprintf(buf, sizeof buf, "alpha=%.9g E=%.9g",
                  result.exponents.alpha, result.energy);
    report(2, "helium optimum 27/16 and -(27/16)^2 within 1e-6", ok, buf);
}

// 3. Differential test: 200 seeded tuples, every integral within 1e-7 of the
//    oracle, in under 60 seconds.
void criterion_differential() {
    const auto t0 = std::chrono::steady_clock::now();
    const VerifyReport vr = verify(200, 42);
    const double elapsed = seconds_since(t0);
    const bool ok = vr.passed() && elapsed < 60.0;
    char buf[96];
    std::snprintf(buf, sizeof buf, "max deviation %.3g, %.1f s",
                  vr.max_deviation, elapsed);
    report(3, "200-sample engine-vs-oracle agreement within 1e-7", ok, buf);
}

// 4. Anchor formulas: H_2p and J_1s2p closed forms to 1e-12 relative at 50
//    random points.
void criterion_anchors() {
    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> zeta(0.2, 12.0);
    bool ok = true;
    for (int i = 0; i < 50 && ok; ++i) {
        const double a = zeta(rng), g = zeta(rng);
        const int Z = 2 + i % 9;
        const double h2p = core(Subshell::P2, Exponents::spd(1, 1, g), Z);
        const double h2p_ref = 0.5 * (g * g - Z * g);
        if (std::abs(h2p - h2p_ref) > 1e-12 * std::max(1.0, std::abs(h2p_ref)))
            ok = false;
        const double j = coulomb(CoulombPair::J1s2p, Exponents::spd(a, 1, g));
        const double j_ref =
            a * g *
            (std::pow(a, 4) + 5 * std::pow(a, 3) * g + 10 * a * a * g * g +
             10 * a * g * g * g + 2 * std::pow(g, 4)) /
            (2 * std::pow(a + g, 5));
        if (std::abs(j - j_ref) > 1e-12 * j_ref) ok = false;
    }
    report(4, "H_2p and J_1s2p anchor formulas to 1e-12 at 50 points", ok, "");
}

// 5. Structural fidelity: the carbon thirteen-term functional and the global
//    pair-count sum rule.
void criterion_structure() {
    PairCounts expected;
    expected.h = {{Subshell::S1, 2}, {Subshell::S2, 2}, {Subshell::P2, 2}};
    expected.j = {{CoulombPair::J1s1s, 1}, {CoulombPair::J2s2s, 1},
                  {CoulombPair::J1s2s, 4}, {CoulombPair::J1s2p, 4},
                  {CoulombPair::J2s2p, 4}, {CoulombPair::J2p2pDiff, 1}};
    expected.k = {{ExchangePair::K1s2s, 2},
                  {ExchangePair::K1s2p, 2},
                  {ExchangePair::K2s2p, 2},
                  {ExchangePair::K2p2pDiff, 1}};
    bool ok = pair_counts(configuration(6)) == expected;
    for (int Z = 2; Z <= 10; ++Z)
        if (pair_counts(configuration(Z)).total_j() != Z * (Z - 1) / 2)
            ok = false;
    report(5, "carbon 13-term functional and pair-count sum rule", ok, "");
}

// 6. Virial property at every converged optimum.
void criterion_virial() {
    bool ok = true;
    std::string detail;
    for (int Z = 2; Z <= 10; ++Z) {
        const AtomResult result = minimize(Z);
        if (!result.converged) continue;
        const EnergySplit split = energy_split(Z, result.exponents);
        const double residual = std::abs(2 * split.kinetic + split.potential);
        if (residual > 1e-5 * std::abs(result.energy)) {
            ok = false;
            detail += "Z=" + std::to_string(Z) + "; ";
        }
    }
    report(6, "virial |2T+V| <= 1e-5 |E| at every optimum", ok, detail);
}

// 7. p-shell identity for 50 random gamma.
void criterion_p_identity() {
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> zeta(0.2, 12.0);
    bool ok = true;
    for (int i = 0; i < 50; ++i) {
        const Exponents exps = Exponents::spd(1, 1, zeta(rng));
        const double same = coulomb(CoulombPair::J2p2pSame, exps);
        const double diff = coulomb(CoulombPair::J2p2pDiff, exps);
        const double k = exchange(ExchangePair::K2p2pDiff, exps);
        if (std::abs(same - diff - 2 * k) > 1e-10 * same) ok = false;
    }
    report(7, "J_same - J_diff = 2 K_diff within 1e-10 for 50 gamma", ok, "");
}

// 8. Basis invariants over 200 random parameter tuples.
void criterion_basis() {
    std::mt19937 rng(888);
    std::uniform_real_distribution<double> zeta(0.2, 12.0);
    bool ok = true;
    for (int i = 0; i < 200; ++i) {
        const Exponents exps{zeta(rng), zeta(rng), zeta(rng)};
        for (OrbitalKind kind :
             {OrbitalKind::S1, OrbitalKind::S2, OrbitalKind::P2x,
              OrbitalKind::P2y, OrbitalKind::P2z})
            if (std::abs(oracle::overlap(kind, kind, exps) - 1.0) > 1e-10)
                ok = false;
        if (std::abs(oracle::overlap(OrbitalKind::S1, OrbitalKind::S2,
                                     exps)) > 1e-10)
            ok = false;
    }
    report(8, "normalization and <1s|2s> = 0 over 200 tuples", ok, "");
}

// 9. Comparison claim: gap to the best Hartree-Fock column <= 1.3% per row;
//    the Z=6 best-HF anomaly is flagged, not asserted.
void criterion_comparison() {
    const RunReport rr = run({2, 3, 4, 5, 6, 7, 8, 9, 10});
    bool ok = rr.rows.size() == 9;
    std::string detail;
    for (const auto& row : rr.rows) {
        if (row.gap_best_hf_percent > 1.3) {
            ok = false;
            detail += "Z=" + std::to_string(row.result.Z) + " gap " +
                      std::to_string(row.gap_best_hf_percent) + "%; ";
        }
        if (row.result.Z == 6 && !row.best_hf_anomaly) {
            ok = false;
            detail += "Z=6 anomaly not flagged; ";
        }
    }
    report(9, "gap to best HF <= 1.3% per row, Z=6 anomaly flagged", ok,
           detail);
}

}  // namespace

int main() {
    criterion_table();
    criterion_helium();
    criterion_differential();
    criterion_anchors();
    criterion_structure();
    criterion_virial();
    criterion_p_identity();
    criterion_basis();
    criterion_comparison();
    std::printf("%d/9 criteria passed\n", 9 - failures);
    return failures == 0 ? 0 : 1;
}
