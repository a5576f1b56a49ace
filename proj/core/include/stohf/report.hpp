#pragma once

#include <string>
#include <vector>

#include "nlohmann/json.hpp"
#include "stohf/optimizer.hpp"
#include "stohf/reference_data.hpp"

namespace stohf {

enum class OutputFormat { Text, Csv, Json };

OutputFormat parse_format(const std::string& s);

/// One optimized atom joined with its published reference row.
struct ReportRow {
    AtomResult result;
    ReferenceRow reference;
    double delta_calc = 0.0;     // E_calc - paper E_calc
    double delta_best_hf = 0.0;  // E_calc - E_bestHF
    double delta_exact = 0.0;    // E_calc - E_exact
    double gap_best_hf_percent = 0.0;
    bool best_hf_anomaly = false;  // paper row where E_calc == E_bestHF
};

struct RunReport {
    std::vector<ReportRow> rows;
    OptimizerOptions options;
    std::string version;
};

/// Optimize each requested atom (ascending Z) and join with the reference
/// table.
RunReport run(const std::vector<int>& zs, const OptimizerOptions& opts = {});

bool all_converged(const RunReport& report);

std::string to_text(const RunReport& report);
std::string to_csv(const RunReport& report);
nlohmann::json to_json(const RunReport& report);
RunReport report_from_json(const nlohmann::json& j);

/// Comparison table against the paper columns, including the per-row
/// percent gap to the best Hartree-Fock energies.
std::string compare(const RunReport& report, OutputFormat format);

/// Z, E_calc, E_bestHF, E_exact series for external plotting.
std::string plot_data(const RunReport& report);

/// Differential test of every closed-form integral against the quadrature
/// oracle over seeded random exponent tuples in [0.2, 12].
struct VerifyCase {
    std::string integral;
    double engine = 0.0;
    double oracle = 0.0;
    double relative_deviation = 0.0;
};

struct VerifyReport {
    int samples = 0;
    unsigned seed = 0;
    double tolerance = 1e-7;
    double max_deviation = 0.0;
    VerifyCase worst;
    std::vector<std::string> failures;  // formatted per-case failures
    bool passed() const { return failures.empty(); }
};

VerifyReport verify(int samples, unsigned seed);
std::string to_text(const VerifyReport& report);

}  // namespace stohf
