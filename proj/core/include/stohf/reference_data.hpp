#pragma once

#include <array>
#include <optional>
#include <string>

#include "stohf/sto_basis.hpp"

namespace stohf {

/// One row of the published results table: optimal exponents, the
/// calculated single-determinant energy, a near-basis-limit Hartree-Fock
/// energy, and the exact nonrelativistic energy. All energies in hartree.
struct ReferenceRow {
    int Z = 0;
    std::string symbol;
    std::string configuration;  // e.g. "1s2 2s2 2p2 3P"
    double alpha = 0.0;
    std::optional<double> beta;
    std::optional<double> gamma;
    double e_calc = 0.0;
    double e_best_hf = 0.0;
    double e_exact = 0.0;

    Exponents exponents() const { return {alpha, beta, gamma}; }
};

const std::array<ReferenceRow, 9>& reference_table();
const ReferenceRow& reference_row(int Z);

/// Serialization of the reference table as whitespace-separated text,
/// one row per Z (the same format shipped in core/data/reference_table.txt).
std::string reference_table_text();
std::array<ReferenceRow, 9> parse_reference_table(const std::string& text);

}  // namespace stohf
