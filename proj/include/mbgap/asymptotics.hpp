#pragma once

#include <vector>

#include "mbgap/constants.hpp"

// The large-gap expansion ln det = -a s^{2 rho} + b s^rho + c ln s + ln C
// (+ empirically fitted subleading powers), and its comparison against the
// numerical Fredholm determinant.

namespace mbgap::asymptotics {

struct AsymptoticExpansion {
    double rho, a, b, c, lnC;
    std::vector<double> subleading;  // fitted C_j multiplying s^{-j rho}; empirical
};

struct ComparisonRow {
    double s;
    double numerical_logdet;
    double asymptotic_logdet;
    double residual;
    double est_error;
};

struct ComparisonReport {
    ModelParams params;
    std::vector<ComparisonRow> rows;
    bool residuals_decreasing;
};

double asymptotic_logdet(const AsymptoticExpansion& expansion, double s);

// Assembles rho, a, b, c from closed forms and ln C from d(theta, alpha);
// d goes through the rational closed form when theta is rational with a
// small denominator, else through the defining limit.
AsymptoticExpansion build_expansion(const ModelParams& params);

// threads caps the number of workers across the s-grid; rows come out in
// grid order regardless.
ComparisonReport compare(const ModelParams& params, const std::vector<double>& s_grid,
                         int m, double tol, int threads = 1);

// Least-squares fit of C_1..C_N to the residuals in the basis s^{-j rho}.
AsymptoticExpansion fit_subleading(const ComparisonReport& report,
                                   const AsymptoticExpansion& expansion, int n_coeffs);

}  // namespace mbgap::asymptotics
