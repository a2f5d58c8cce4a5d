#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "mbgap/constants.hpp"

// The constant d(theta, alpha) entering the multiplicative constant C,
// evaluated three independent ways: the defining limit (Richardson
// accelerated), the Barnes-G closed form for rational theta, and a fast
// assembly from zeta'(-1, .) with a Stirling-remainder tail sum.

namespace mbgap::dconst {

struct DLimitSettings {
    // Stops at 2^13: beyond that the bracket's ~theta N^2 ln N cancellation
    // exhausts even extended precision and the sequence turns noisy.
    std::vector<int> n_schedule = {128, 256, 512, 1024, 2048, 4096, 8192};
    int extrapolation_order = 3;
    double target_tol = 1e-8;
};

struct DLimitResult {
    double value;
    double error_estimate;
};

class ConvergenceError : public std::runtime_error {
  public:
    ConvergenceError(const std::string& what, std::vector<double> diagnostics)
        : std::runtime_error(what), table(std::move(diagnostics)) {}
    std::vector<double> table;
};

// Finite-N bracketed quantity: sum_{k<=N} lnGamma(1+alpha+k theta) minus the
// five-term counterterm polynomial in N, ln N.
double d_bracket(const ModelParams& params, long n);

// Richardson-extrapolated limit of d_bracket over the schedule.
DLimitResult d_limit(const ModelParams& params, const DLimitSettings& settings = {});

// Closed form for theta = p/q (p, q need not be coprime).
double d_rational(int p, int q, double alpha, bool reduce = false);

// d(1, alpha) = zeta'(-1) + (1+alpha)/2 ln(2pi) - ln G(2+alpha).
double d_one(double alpha);

// Residual of the theta <-> 1/theta symmetry relation; expected ~ 0.
double d_symmetry_residual(const ModelParams& params);

// Fast evaluation from zeta'(-1, 1+(1+alpha)/theta), lnGamma, psi and a
// rapidly convergent Stirling-remainder sum. Cross-checked against d_limit
// on every call; throws std::logic_error on disagreement beyond 1e-6.
double d_accelerated(const ModelParams& params, int remainder_terms = 5);

// d by the best route: closed form when theta is rational with a small
// denominator, otherwise the accelerated assembly.
double d_value(const ModelParams& params);

// Continued-fraction reconstruction of theta as p/q with q <= max_den.
// Returns true and fills p, q when |theta - p/q| <= tol * theta.
bool detect_rational(double theta, int max_den, double tol, int& p, int& q);

}  // namespace mbgap::dconst
