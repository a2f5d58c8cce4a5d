#include "mbgap/constants.hpp"

#include <cmath>
#include <stdexcept>

#include "mbgap/specfun.hpp"

namespace mbgap {

ModelParams::ModelParams(double theta_, double alpha_) : theta(theta_), alpha(alpha_) {
    if (!(theta > 0.0)) throw std::domain_error("ModelParams: requires theta > 0");
    // alpha = -1 is admitted: d(theta, alpha) is still well-defined there.
    if (!(alpha >= -1.0)) throw std::domain_error("ModelParams: requires alpha > -1");
}

RHConstants rh_constants(const ModelParams& params) {
    const double th = params.theta;
    const double al = params.alpha;
    RHConstants k;
    k.c1 = 1.0;
    k.c2 = 1.0 / th;
    k.c3 = -(th + 1.0 + std::log(th)) / th;
    k.c4 = (th + (th - 1.0) * al - 1.0) / (2.0 * (th + 1.0));
    k.c5 = al / 2.0;
    k.c6 = (th - al - 1.0) / (2.0 * th);
    k.c7 = -(th - al - 1.0) / (2.0 * th) * std::log(th);
    k.c8 = (3.0 * (1.0 + al) * (1.0 + al) - 7.0 * th - 6.0 * al * th +
            3.0 * al * al * th + 2.0 * th * th) /
           (24.0 * th);
    k.rho = th / (1.0 + th);
    k.phi = std::asin((1.0 - th) / (1.0 + th));
    const double re_b2 = 2.0 * std::pow(th, (3.0 - th) / (2.0 * (1.0 + th)));
    k.abs_b2 = re_b2 / std::cos(k.phi);
    k.b2 = complex(re_b2, k.abs_b2 * std::sin(k.phi));
    k.b1 = -std::conj(k.b2);
    return k;
}

RhoAB leading_constants(const ModelParams& params) {
    const double th = params.theta;
    const double al = params.alpha;
    RhoAB out;
    out.rho = th / (1.0 + th);
    out.a = 0.25 * (1.0 + th) * (1.0 + th) * std::pow(th, (1.0 - 3.0 * th) / (1.0 + th));
    out.b = 0.5 * (1.0 + th) * (1.0 + 2.0 * al - th) * std::pow(th, -2.0 * th / (th + 1.0));
    return out;
}

complex mathcal_k(const ModelParams& params) {
    if (params.theta > 1.0) {
        // The closed form is derived for theta in (0,1]; reflect through the
        // symmetry map and use c(theta,alpha) = theta c(1/theta,alpha*):
        // K(theta) = i (c - r1_22/i) has no direct meaning for theta > 1, so
        // report the value reconstructed from the reflected c.
        const ModelParams sym = symmetric_params(params);
        const double c = params.theta * c_constant(sym);
        return r1_22(params) - complex(0.0, 1.0) * c;
    }
    const RHConstants k = rh_constants(params);
    const double al = params.alpha;
    const double inner = k.c8 - (k.c8 - (3.0 * al * al - 1.0) / 12.0) * k.b2.imag() / k.abs_b2;
    return complex(0.0, 0.5) * inner;
}

complex r1_22(const ModelParams& params) {
    const RHConstants k = rh_constants(params);
    return complex(0.0, -1.0) * (1.0 - 12.0 * k.c5 * k.c6) / (12.0 * (k.c1 + k.c2));
}

double c_constant(const ModelParams& params) {
    const double th = params.theta;
    const double al = params.alpha;
    return -(6.0 * al * al - 6.0 * al * (th - 1.0) + (th - 1.0) * (th - 1.0)) /
           (12.0 * (1.0 + th));
}

double log_C_constant(const ModelParams& params, double d_value, double d_one_value) {
    const double th = params.theta;
    const double al = params.alpha;
    const double lnG = specfun::log_barnes_g(1.0 + al);
    const double ln2pi = std::log(2.0 * 3.14159265358979323846264338327950288);
    return lnG - al / 2.0 * ln2pi + d_one_value - d_value +
           (24.0 * al * (al + 2.0) + 15.0 + 3.0 * th + 4.0 * th * th) /
               (24.0 * (1.0 + th)) * std::log(th) +
           (6.0 * al * th - 6.0 * al * (1.0 + al) - (th - 1.0) * (th - 1.0)) /
               (12.0 * th) * std::log(1.0 + th);
}

ModelParams symmetric_params(const ModelParams& params) {
    return ModelParams(1.0 / params.theta, (1.0 + params.alpha) / params.theta - 1.0);
}

double product_model_c1(int r, const std::vector<double>& nu) {
    if (r < 1) throw std::invalid_argument("product_model_c1: requires r >= 1");
    if (static_cast<int>(nu.size()) != r)
        throw std::invalid_argument("product_model_c1: nu must have length r");
    double sum2 = 0.0;
    for (double v : nu) sum2 += v * v;
    return (r - 1.0) / (12.0 * (r + 1.0)) - sum2 / (2.0 * (r + 1.0));
}

double product_model_c2(int r, int q, const std::vector<double>& nu,
                        const std::vector<double>& mu) {
    if (q >= r) throw std::invalid_argument("product_model_c2: requires q < r");
    if (static_cast<int>(nu.size()) != r || static_cast<int>(mu.size()) != q)
        throw std::invalid_argument("product_model_c2: length mismatch");
    double snu = 0.0, smu = 0.0;
    for (double v : nu) snu += v * v;
    for (double v : mu) smu += v * v;
    return (r - q - 1.0) / (12.0 * (r - q + 1.0)) - (snu - smu) / (2.0 * (r - q + 1.0));
}

}  // namespace mbgap
