#include "stohf/optimizer.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>

#include "stohf/atom_model.hpp"

namespace stohf {

namespace {

int dimension_of(int Z) {
    if (Z < 2 || Z > 10) throw std::invalid_argument("Z must be in [2, 10]");
    return Z == 2 ? 1 : (Z <= 4 ? 2 : 3);
}

std::vector<double> to_logs(int Z, const Exponents& exps) {
    const int dim = dimension_of(Z);
    std::vector<double> logs{std::log(exps.alpha)};
    if (dim > 1) logs.push_back(std::log(exps.beta.value()));
    if (dim > 2) logs.push_back(std::log(exps.gamma.value()));
    return logs;
}

Exponents from_logs(int Z, const std::vector<double>& logs) {
    const int dim = dimension_of(Z);
    Exponents exps;
    exps.alpha = std::exp(logs[0]);
    if (dim > 1) exps.beta = std::exp(logs[1]);
    if (dim > 2) exps.gamma = std::exp(logs[2]);
    return exps;
}

struct NelderMeadResult {
    std::vector<double> x;
    double f = 0.0;
    int evaluations = 0;
    bool converged = false;
};

// Standard simplex with reflection/expansion/contraction/shrink; stops when
// the vertex value spread and the simplex extent both fall below tolerance.
NelderMeadResult nelder_mead(
    const std::function<double(const std::vector<double>&)>& f,
    std::vector<double> x0, double initial_scale, double f_tol, double x_tol,
    int max_evals) {
    const std::size_t n = x0.size();
    std::vector<std::vector<double>> verts(n + 1, x0);
    for (std::size_t i = 0; i < n; ++i)
        verts[i + 1][i] += initial_scale * std::max(1.0, std::abs(x0[i]));

    int evals = 0;
    auto eval = [&](const std::vector<double>& x) {
        ++evals;
        return f(x);
    };
    std::vector<double> fv(n + 1);
    for (std::size_t i = 0; i <= n; ++i) fv[i] = eval(verts[i]);

    auto order = [&] {
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = i; j > 0 && fv[j] < fv[j - 1]; --j) {
                std::swap(fv[j], fv[j - 1]);
                std::swap(verts[j], verts[j - 1]);
            }
    };
    order();

    NelderMeadResult result;
    while (evals < max_evals) {
        const double spread = fv[n] - fv[0];
        double extent = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            extent = std::max(extent, std::abs(verts[n][i] - verts[0][i]));
        if (spread <= f_tol && extent <= x_tol) {
            result.converged = true;
            break;
        }

        std::vector<double> centroid(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j)
                centroid[j] += verts[i][j] / static_cast<double>(n);
        }
        auto blend = [&](double t) {
            std::vector<double> x(n);
            for (std::size_t j = 0; j < n; ++j)
                x[j] = centroid[j] + t * (verts[n][j] - centroid[j]);
            return x;
        };

        auto xr = blend(-1.0);
        const double fr = eval(xr);
        if (fr < fv[0]) {
            auto xe = blend(-2.0);
            const double fe = eval(xe);
            if (fe < fr) {
                verts[n] = std::move(xe);
                fv[n] = fe;
            } else {
                verts[n] = std::move(xr);
                fv[n] = fr;
            }
        } else if (fr < fv[n - 1]) {
            verts[n] = std::move(xr);
            fv[n] = fr;
        } else {
            auto xc = blend(fr < fv[n] ? -0.5 : 0.5);
            const double fc = eval(xc);
            if (fc < std::min(fr, fv[n])) {
                verts[n] = std::move(xc);
                fv[n] = fc;
            } else {
                for (std::size_t i = 1; i <= n; ++i) {
                    for (std::size_t j = 0; j < n; ++j)
                        verts[i][j] =
                            verts[0][j] + 0.5 * (verts[i][j] - verts[0][j]);
                    fv[i] = eval(verts[i]);
                }
            }
        }
        order();
    }
    result.x = verts[0];
    result.f = fv[0];
    result.evaluations = evals;
    return result;
}

}  // namespace

Exponents initial_guess(int Z) {
    const int dim = dimension_of(Z);
    Exponents exps;
    exps.alpha = static_cast<double>(Z) - 0.3;
    if (dim > 1)
        exps.beta = std::max(0.5, (static_cast<double>(Z) - 2.0 - 0.85) / 2.0);
    if (dim > 2) exps.gamma = exps.beta;
    return exps;
}

AtomResult minimize(int Z, const Exponents& guess,
                    const OptimizerOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    const int dim = dimension_of(Z);
    const auto logs0 = to_logs(Z, guess);
    for (double v : logs0)
        if (!(std::exp(v) > kMinExponent) || std::exp(v) > kMaxExponent)
            throw std::invalid_argument("guess outside (0, 50]");

    auto objective = [Z](const std::vector<double>& logs) {
        for (double v : logs)
            if (std::exp(v) > kMaxExponent)
                return 1e30;  // keep trial points inside the domain
        return energy(Z, from_logs(Z, logs));
    };

    std::mt19937 rng(opts.seed);
    std::uniform_real_distribution<double> perturb(std::log(0.7),
                                                   std::log(1.4));

    AtomResult best;
    best.Z = Z;
    best.energy = 1e30;
    std::vector<std::vector<double>> optima;
    for (int restart = 0; restart < std::max(1, opts.restarts); ++restart) {
        std::vector<double> start = logs0;
        if (restart > 0)
            for (auto& v : start) v += perturb(rng);
        const auto nm = nelder_mead(objective, start, 0.05, opts.energy_tol,
                                    opts.param_tol, opts.max_evaluations);
        best.evaluations += nm.evaluations;
        optima.push_back(nm.x);
        if (nm.f < best.energy) {
            best.energy = nm.f;
            best.exponents = from_logs(Z, nm.x);
            best.converged = nm.converged;
        }
    }
    for (const auto& x : optima)
        for (int i = 0; i < dim; ++i)
            if (std::abs(x[i] - to_logs(Z, best.exponents)[i]) > 1e-4)
                best.restart_disagreement = true;

    // central-difference stationarity check in log-parameters
    const auto xbest = to_logs(Z, best.exponents);
    for (int i = 0; i < dim; ++i) {
        const double h = 1e-5 * std::max(1.0, std::abs(xbest[i]));
        auto xp = xbest, xm = xbest;
        xp[i] += h;
        xm[i] -= h;
        const double deriv = (objective(xp) - objective(xm)) / (2.0 * h);
        best.stationarity = std::max(best.stationarity, std::abs(deriv));
    }

    best.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    return best;
}

AtomResult minimize(int Z, const OptimizerOptions& opts) {
    return minimize(Z, initial_guess(Z), opts);
}

std::vector<std::pair<Exponents, double>> scan(
    int Z, const std::vector<Exponents>& grid) {
    std::vector<std::pair<Exponents, double>> out;
    out.reserve(grid.size());
    for (const auto& exps : grid) out.emplace_back(exps, energy(Z, exps));
    return out;
}

}  // namespace stohf
