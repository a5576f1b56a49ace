#include "stohf/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <stdexcept>

#include "stohf/atom_model.hpp"
#include "stohf/quadrature_oracle.hpp"

namespace stohf {

namespace {

constexpr const char* kVersion = "1.0.0";

// paper-table style: 6 significant figures
std::string sig6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string opt_sig6(const std::optional<double>& v) {
    return v ? sig6(*v) : std::string("-");
}

}  // namespace

OutputFormat parse_format(const std::string& s) {
    if (s == "text") return OutputFormat::Text;
    if (s == "csv") return OutputFormat::Csv;
    if (s == "json") return OutputFormat::Json;
    throw std::invalid_argument("unknown format: " + s);
}

RunReport run(const std::vector<int>& zs, const OptimizerOptions& opts) {
    std::vector<int> sorted = zs;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    RunReport report;
    report.options = opts;
    report.version = kVersion;
    for (int Z : sorted) {
        ReportRow row;
        row.result = minimize(Z, opts);
        row.reference = reference_row(Z);
        row.delta_calc = row.result.energy - row.reference.e_calc;
        row.delta_best_hf = row.result.energy - row.reference.e_best_hf;
        row.delta_exact = row.result.energy - row.reference.e_exact;
        row.gap_best_hf_percent =
            100.0 * std::abs(row.delta_best_hf) /
            std::abs(row.reference.e_best_hf);
        row.best_hf_anomaly =
            row.reference.e_calc == row.reference.e_best_hf;
        report.rows.push_back(std::move(row));
    }
    return report;
}

bool all_converged(const RunReport& report) {
    return std::all_of(report.rows.begin(), report.rows.end(),
                       [](const ReportRow& r) { return r.result.converged; });
}

std::string to_text(const RunReport& report) {
    std::ostringstream os;
    os << "Z  sym conf            alpha    beta     gamma    E_calc    "
          "E_paper   E_bestHF  E_exact\n";
    for (const auto& row : report.rows) {
        char line[256];
        std::snprintf(line, sizeof line,
                      "%-2d %-3s %-15s %-8s %-8s %-8s %-9s %-9s %-9s %s%s\n",
                      row.result.Z, row.reference.symbol.c_str(),
                      row.reference.configuration.c_str(),
                      sig6(row.result.exponents.alpha).c_str(),
                      opt_sig6(row.result.exponents.beta).c_str(),
                      opt_sig6(row.result.exponents.gamma).c_str(),
                      sig6(row.result.energy).c_str(),
                      sig6(row.reference.e_calc).c_str(),
                      sig6(row.reference.e_best_hf).c_str(),
                      sig6(row.reference.e_exact).c_str(),
                      row.result.converged ? "" : "  [NOT CONVERGED]");
        os << line;
    }
    return os.str();
}

std::string to_csv(const RunReport& report) {
    std::ostringstream os;
    os << "Z,symbol,configuration,alpha,beta,gamma,E_calc,E_paper,E_bestHF,"
          "E_exact\n";
    for (const auto& row : report.rows) {
        os << row.result.Z << ',' << row.reference.symbol << ",\""
           << row.reference.configuration << "\","
           << sig6(row.result.exponents.alpha) << ','
           << opt_sig6(row.result.exponents.beta) << ','
           << opt_sig6(row.result.exponents.gamma) << ','
           << sig6(row.result.energy) << ',' << sig6(row.reference.e_calc)
           << ',' << sig6(row.reference.e_best_hf) << ','
           << sig6(row.reference.e_exact) << '\n';
    }
    return os.str();
}

nlohmann::json to_json(const RunReport& report) {
    nlohmann::json j;
    j["version"] = report.version;
    j["options"] = {
        {"energy_tol", report.options.energy_tol},
        {"param_tol", report.options.param_tol},
        {"max_evaluations", report.options.max_evaluations},
        {"restarts", report.options.restarts},
        {"seed", report.options.seed},
    };
    j["rows"] = nlohmann::json::array();
    for (const auto& row : report.rows) {
        nlohmann::json exps = {{"alpha", row.result.exponents.alpha}};
        if (row.result.exponents.beta)
            exps["beta"] = *row.result.exponents.beta;
        if (row.result.exponents.gamma)
            exps["gamma"] = *row.result.exponents.gamma;
        j["rows"].push_back({
            {"Z", row.result.Z},
            {"symbol", row.reference.symbol},
            {"configuration", row.reference.configuration},
            {"exponents", exps},
            {"energy", row.result.energy},
            {"converged", row.result.converged},
            {"evaluations", row.result.evaluations},
            {"restart_disagreement", row.result.restart_disagreement},
            {"stationarity", row.result.stationarity},
            {"reference",
             {{"E_calc", row.reference.e_calc},
              {"E_bestHF", row.reference.e_best_hf},
              {"E_exact", row.reference.e_exact}}},
            {"delta_calc", row.delta_calc},
            {"delta_bestHF", row.delta_best_hf},
            {"delta_exact", row.delta_exact},
            {"gap_bestHF_percent", row.gap_best_hf_percent},
            {"bestHF_anomaly", row.best_hf_anomaly},
        });
    }
    return j;
}

RunReport report_from_json(const nlohmann::json& j) {
    RunReport report;
    report.version = j.at("version").get<std::string>();
    const auto& o = j.at("options");
    report.options.energy_tol = o.at("energy_tol").get<double>();
    report.options.param_tol = o.at("param_tol").get<double>();
    report.options.max_evaluations = o.at("max_evaluations").get<int>();
    report.options.restarts = o.at("restarts").get<int>();
    report.options.seed = o.at("seed").get<unsigned>();
    for (const auto& rj : j.at("rows")) {
        ReportRow row;
        row.result.Z = rj.at("Z").get<int>();
        const auto& exps = rj.at("exponents");
        row.result.exponents.alpha = exps.at("alpha").get<double>();
        if (exps.contains("beta"))
            row.result.exponents.beta = exps.at("beta").get<double>();
        if (exps.contains("gamma"))
            row.result.exponents.gamma = exps.at("gamma").get<double>();
        row.result.energy = rj.at("energy").get<double>();
        row.result.converged = rj.at("converged").get<bool>();
        row.result.evaluations = rj.at("evaluations").get<int>();
        row.result.restart_disagreement =
            rj.at("restart_disagreement").get<bool>();
        row.result.stationarity = rj.at("stationarity").get<double>();
        row.reference = reference_row(row.result.Z);
        row.delta_calc = rj.at("delta_calc").get<double>();
        row.delta_best_hf = rj.at("delta_bestHF").get<double>();
        row.delta_exact = rj.at("delta_exact").get<double>();
        row.gap_best_hf_percent = rj.at("gap_bestHF_percent").get<double>();
        row.best_hf_anomaly = rj.at("bestHF_anomaly").get<bool>();
        report.rows.push_back(std::move(row));
    }
    return report;
}

std::string compare(const RunReport& report, OutputFormat format) {
    if (format == OutputFormat::Json) {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& row : report.rows) {
            j.push_back({
                {"Z", row.result.Z},
                {"symbol", row.reference.symbol},
                {"E_calc", row.result.energy},
                {"E_paper", row.reference.e_calc},
                {"E_bestHF", row.reference.e_best_hf},
                {"E_exact", row.reference.e_exact},
                {"gap_bestHF_percent", row.gap_best_hf_percent},
                {"within_1_percent", row.gap_best_hf_percent <= 1.0},
                {"bestHF_anomaly", row.best_hf_anomaly},
            });
        }
        return j.dump(2) + "\n";
    }
    if (format == OutputFormat::Csv) {
        std::ostringstream os;
        os << "Z,symbol,configuration,alpha,beta,gamma,E_calc,E_paper,"
              "E_bestHF,E_exact,gap_bestHF_pct\n";
        for (const auto& row : report.rows) {
            os << row.result.Z << ',' << row.reference.symbol << ",\""
               << row.reference.configuration << "\","
               << sig6(row.result.exponents.alpha) << ','
               << opt_sig6(row.result.exponents.beta) << ','
               << opt_sig6(row.result.exponents.gamma) << ','
               << sig6(row.result.energy) << ','
               << sig6(row.reference.e_calc) << ','
               << sig6(row.reference.e_best_hf) << ','
               << sig6(row.reference.e_exact) << ','
               << sig6(row.gap_best_hf_percent) << '\n';
        }
        return os.str();
    }
    std::ostringstream os;
    os << "Z  sym  E_calc     E_paper    E_bestHF   E_exact      gap(bestHF)\n";
    for (const auto& row : report.rows) {
        char line[256];
        std::snprintf(line, sizeof line,
                      "%-2d %-4s %-10s %-10s %-10s %-12s %s%%%s\n",
                      row.result.Z, row.reference.symbol.c_str(),
                      sig6(row.result.energy).c_str(),
                      sig6(row.reference.e_calc).c_str(),
                      sig6(row.reference.e_best_hf).c_str(),
                      sig6(row.reference.e_exact).c_str(),
                      sig6(row.gap_best_hf_percent).c_str(),
                      row.best_hf_anomaly ? "  [bestHF anomaly]" : "");
        os << line;
    }
    return os.str();
}

std::string plot_data(const RunReport& report) {
    std::ostringstream os;
    os << "# Z E_calc E_bestHF E_exact\n";
    for (const auto& row : report.rows)
        os << row.result.Z << ' ' << sig6(row.result.energy) << ' '
           << sig6(row.reference.e_best_hf) << ' '
           << sig6(row.reference.e_exact) << '\n';
    return os.str();
}

VerifyReport verify(int samples, unsigned seed) {
    if (samples < 1) throw std::invalid_argument("samples must be >= 1");
    VerifyReport report;
    report.samples = samples;
    report.seed = seed;

    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> zeta(0.2, 12.0);

    auto record = [&](const std::string& label, double eng, double orc,
                      double denom) {
        const double dev = std::abs(eng - orc) / denom;
        if (dev > report.max_deviation) {
            report.max_deviation = dev;
            report.worst = {label, eng, orc, dev};
        }
        if (dev > report.tolerance) {
            char buf[160];
            std::snprintf(buf, sizeof buf,
                          "%s: engine=%.12g oracle=%.12g rel=%.3g",
                          label.c_str(), eng, orc, dev);
            report.failures.emplace_back(buf);
        }
    };

    for (int s = 0; s < samples; ++s) {
        const Exponents exps{zeta(rng), zeta(rng), zeta(rng)};
        const int Z = 2 + s % 9;

        for (Subshell sub : {Subshell::S1, Subshell::S2, Subshell::P2}) {
            const CoreParts eng = core_parts(sub, exps, Z);
            const CoreParts orc = oracle::core_parts(sub, exps, Z);
            const double scale =
                std::max(std::abs(eng.kinetic), std::abs(eng.potential));
            const std::string base = std::string("H_") + name(sub);
            record(base + ":T", eng.kinetic, orc.kinetic, scale);
            record(base + ":V", eng.potential, orc.potential, scale);
        }
        for (CoulombPair pair : kAllCoulombPairs) {
            const double eng = coulomb(pair, exps);
            record(name(pair), eng, oracle::coulomb(pair, exps),
                   std::abs(eng));
        }
        for (ExchangePair pair : kAllExchangePairs) {
            const double eng = exchange(pair, exps);
            record(name(pair), eng, oracle::exchange(pair, exps),
                   std::abs(eng));
        }
    }
    return report;
}

std::string to_text(const VerifyReport& report) {
    std::ostringstream os;
    os << "verify: " << report.samples << " samples, seed " << report.seed
       << ", tolerance " << report.tolerance << "\n";
    for (const auto& f : report.failures) os << "  FAIL " << f << "\n";
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "max relative deviation %.3g (%s: engine=%.12g "
                  "oracle=%.12g)\n",
                  report.max_deviation, report.worst.integral.c_str(),
                  report.worst.engine, report.worst.oracle);
    os << buf;
    os << (report.passed() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

}  // namespace stohf
