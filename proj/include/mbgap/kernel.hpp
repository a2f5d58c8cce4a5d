#pragma once

#include <complex>
#include <vector>

#include "mbgap/constants.hpp"

// The limiting hard-edge kernel K(x,y) as a double contour integral over two
// conjugate-symmetric two-ray contours, with a residue-series oracle and the
// theta = 1 Bessel-kernel reference.

namespace mbgap::kernel {

// Two-ray contour geometry. gamma runs from e^{-i ray_angle} infinity through
// anchor_gamma to e^{+i ray_angle} infinity (upward); gamma-tilde mirrors it
// in the right half-plane through anchor_tilde.
struct ContourSpec {
    double anchor_gamma;
    double anchor_tilde;
    double ray_angle = 2.35619449019234492884698253745962716;  // 3 pi / 4
    double truncation_radius = 40.0;
    int nodes_per_ray = 96;
};

struct KernelQuadratureReport {
    double value;
    double imag_leak;   // |imaginary part| discarded from the quadrature sum
    double est_error;   // node-doubling difference
};

// F(z) = Gamma(z + alpha/2) / Gamma((alpha/2 + 1 - z)/theta); zeros of F
// (poles of the denominator argument) return exactly 0.
complex big_f(const ModelParams& params, complex z);

// Branch-consistent ln F, cut along (-inf,-alpha/2] u [1+alpha/2, inf).
complex ln_big_f(const ModelParams& params, complex z);

// Contour satisfying the crossing constraints, with truncation radius and
// node count sized for the requested tolerance at arguments >= x_min.
ContourSpec default_contour(const ModelParams& params, double x_min, double tol);

// Same, with the growth allowance taken from the largest argument too.
ContourSpec contour_for_range(const ModelParams& params, double x_min, double x_max,
                              double tol);

// Precomputed per-node data for a contour; reusable across (x, y).
struct ContourWorkspace {
    std::vector<complex> u_nodes, v_nodes;   // gamma resp. gamma-tilde
    std::vector<complex> u_factors;          // du-weight * F(u)
    std::vector<complex> v_factors;          // dv-weight / F(v)
    std::vector<complex> inv_diff;           // 1/(u_p - v_q), row-major p*Q+q
};

ContourWorkspace make_workspace(const ModelParams& params, const ContourSpec& contour);

// K(x,y) = 1/(4 pi^2) int_gamma du int_gammatilde dv F(u)/F(v) x^{-u} y^{v-1}/(u-v)
KernelQuadratureReport kernel_point(const ModelParams& params, const ContourSpec& contour,
                                    double x, double y);

// Kernel matrix over a grid (no node-doubling error estimate).
std::vector<double> kernel_matrix(const ModelParams& params, const ContourWorkspace& ws,
                                  const std::vector<double>& xs,
                                  const std::vector<double>& ys);

// Residue series over the poles of F(u) and the zeros of F(v):
//   K(x,y) = theta sum_{j,k} (-1)^{j+k} x^{alpha/2+j} y^{alpha/2+k theta}
//            / (j! k! Gamma((alpha+1+j)/theta) Gamma(alpha+1+k theta)
//               (alpha+1+j+k theta))
double kernel_series(const ModelParams& params, double x, double y, int max_terms = 200);

// K_Be(x,y) = [J_a(sqrt x) sqrt(y) J_a'(sqrt y) - sqrt(x) J_a'(sqrt x) J_a(sqrt y)]
//             / (2(x-y)); near-diagonal values by quadratic interpolation.
double bessel_kernel(double alpha, double x, double y);

}  // namespace mbgap::kernel
