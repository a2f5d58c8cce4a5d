#include "mbgap/asymptotics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "mbgap/dconst.hpp"
#include "mbgap/fredholm.hpp"

namespace mbgap::asymptotics {

double asymptotic_logdet(const AsymptoticExpansion& e, double s) {
    if (!(s > 0.0)) throw std::domain_error("asymptotic_logdet: requires s > 0");
    double val = -e.a * std::pow(s, 2.0 * e.rho) + e.b * std::pow(s, e.rho) +
                 e.c * std::log(s) + e.lnC;
    for (size_t j = 0; j < e.subleading.size(); ++j)
        val += e.subleading[j] * std::pow(s, -static_cast<double>(j + 1) * e.rho);
    return val;
}

AsymptoticExpansion build_expansion(const ModelParams& params) {
    const RhoAB lead = leading_constants(params);
    AsymptoticExpansion e;
    e.rho = lead.rho;
    e.a = lead.a;
    e.b = lead.b;
    e.c = c_constant(params);
    const double d = dconst::d_value(params);
    const double d1 = dconst::d_one(params.alpha);
    e.lnC = log_C_constant(params, d, d1);
    return e;
}

ComparisonReport compare(const ModelParams& params, const std::vector<double>& s_grid,
                         int m, double tol, int threads) {
    for (size_t i = 1; i < s_grid.size(); ++i)
        if (!(s_grid[i] > s_grid[i - 1]))
            throw std::invalid_argument("compare: s_grid must be increasing");
    ComparisonReport report{params, {}, true};
    if (s_grid.empty()) return report;
    const AsymptoticExpansion e = build_expansion(params);

    const size_t n = s_grid.size();
    std::vector<fredholm::DetResult> dets(n);
    std::vector<std::exception_ptr> errors(n);
    const int workers = std::clamp(threads, 1, static_cast<int>(n));
    auto job = [&](size_t i) {
        try {
            dets[i] = fredholm::fredholm_logdet(params, s_grid[i], m);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    };
    if (workers == 1) {
        for (size_t i = 0; i < n; ++i) job(i);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) job(i);
            });
        for (auto& t : pool) t.join();
    }
    for (size_t i = 0; i < n; ++i)
        if (errors[i]) std::rethrow_exception(errors[i]);

    double prev_abs = 0.0;
    for (size_t i = 0; i < n; ++i) {
        const double s = s_grid[i];
        const fredholm::DetResult& det = dets[i];
        if (det.est_error > tol)
            throw dconst::ConvergenceError("compare: determinant above tolerance at s=" +
                                               std::to_string(s),
                                           {det.log_det, det.est_error});
        ComparisonRow row;
        row.s = s;
        row.numerical_logdet = det.log_det;
        row.asymptotic_logdet = asymptotic_logdet(e, s);
        row.residual = row.numerical_logdet - row.asymptotic_logdet;
        row.est_error = det.est_error;
        // Residuals below tol are numerically indistinguishable from zero
        // (e.g. theta=1, alpha=0, where every correction term vanishes); they
        // do not count against the trend.
        if (i > 0 && std::abs(row.residual) >= prev_abs && std::abs(row.residual) > tol)
            report.residuals_decreasing = false;
        prev_abs = std::abs(row.residual);
        report.rows.push_back(row);
    }
    return report;
}

AsymptoticExpansion fit_subleading(const ComparisonReport& report,
                                   const AsymptoticExpansion& expansion, int n_coeffs) {
    if (n_coeffs == 0) return expansion;
    const int rows = static_cast<int>(report.rows.size());
    if (rows < n_coeffs + 1) throw std::invalid_argument("fit_subleading: too few rows");
    // Normal equations for residual ~ sum_j C_j s^{-j rho}.
    const int n = n_coeffs;
    std::vector<double> ata(static_cast<size_t>(n) * n, 0.0), atb(n, 0.0);
    for (const auto& row : report.rows) {
        std::vector<double> basis(n);
        for (int j = 0; j < n; ++j) basis[j] = std::pow(row.s, -(j + 1.0) * expansion.rho);
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) ata[j * n + k] += basis[j] * basis[k];
            atb[j] += basis[j] * row.residual;
        }
    }
    // Gaussian elimination with partial pivoting.
    for (int k = 0; k < n; ++k) {
        int piv = k;
        for (int i = k + 1; i < n; ++i)
            if (std::abs(ata[i * n + k]) > std::abs(ata[piv * n + k])) piv = i;
        if (std::abs(ata[piv * n + k]) < 1e-300)
            throw std::runtime_error("fit_subleading: rank-deficient design matrix");
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(ata[k * n + j], ata[piv * n + j]);
            std::swap(atb[k], atb[piv]);
        }
        for (int i = k + 1; i < n; ++i) {
            const double f = ata[i * n + k] / ata[k * n + k];
            for (int j = k; j < n; ++j) ata[i * n + j] -= f * ata[k * n + j];
            atb[i] -= f * atb[k];
        }
    }
    AsymptoticExpansion out = expansion;
    out.subleading.assign(n, 0.0);
    for (int i = n - 1; i >= 0; --i) {
        double v = atb[i];
        for (int j = i + 1; j < n; ++j) v -= ata[i * n + j] * out.subleading[j];
        out.subleading[i] = v / ata[i * n + i];
    }
    return out;
}

}  // namespace mbgap::asymptotics
