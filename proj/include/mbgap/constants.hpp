#pragma once

#include <complex>
#include <vector>

// Scalar constants of the hard-edge asymptotic expansion: the local-parametrix
// constants c1..c8, b1, b2, phi, the leading coefficients rho, a, b, the log
// constants c and ln C, the theta <-> 1/theta symmetry map, and the
// product-matrix constants c^(1), c^(2).

namespace mbgap {

using complex = std::complex<double>;

// The parameter pair (theta > 0, alpha > -1) of the point process.
struct ModelParams {
    double theta;
    double alpha;

    ModelParams(double theta_, double alpha_);
};

struct RHConstants {
    double c1, c2, c3, c4, c5, c6, c7, c8;
    double rho;       // theta / (1 + theta)
    double phi;       // arg b2, in (-pi/2, pi/2)
    complex b2;       // |b2| e^{i phi}
    complex b1;       // -conj(b2)
    double abs_b2;    // (1 + theta) theta^{(1-theta)/(1+theta)}
};

struct LeadingCoefficients {
    double rho, a, b, c, lnC;
};

RHConstants rh_constants(const ModelParams& params);

// (rho, a, b) of the leading exponential terms.
struct RhoAB {
    double rho, a, b;
};
RhoAB leading_constants(const ModelParams& params);

// Constant term K of the subleading expansion; defined for theta in (0,1],
// reflected through the symmetry map for theta > 1.
complex mathcal_k(const ModelParams& params);

// (2,2) element of R_1^(1): -i (1 - 12 c5 c6) / (12 (c1 + c2)).
complex r1_22(const ModelParams& params);

// c = -(6 alpha^2 - 6 alpha (theta-1) + (theta-1)^2) / (12 (1+theta))
double c_constant(const ModelParams& params);

// ln C given externally computed d(theta, alpha) and d(1, alpha).
double log_C_constant(const ModelParams& params, double d_value, double d_one_value);

// (theta, alpha) -> (1/theta, (1+alpha)/theta - 1); involution.
ModelParams symmetric_params(const ModelParams& params);

// c^(1) = (r-1)/(12(r+1)) - 1/(2(r+1)) sum nu_j^2, with |nu| = r.
double product_model_c1(int r, const std::vector<double>& nu);

// c^(2) = (r-q-1)/(12(r-q+1)) - 1/(2(r-q+1)) (sum nu_j^2 - sum mu_j^2).
double product_model_c2(int r, int q, const std::vector<double>& nu,
                        const std::vector<double>& mu);

}  // namespace mbgap
