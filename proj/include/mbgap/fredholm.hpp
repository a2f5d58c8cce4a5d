#pragma once

#include <vector>

#include "mbgap/constants.hpp"
#include "mbgap/kernel.hpp"

// Nystrom Fredholm determinant det(1 - K|[0,s]) with a power substitution
// x = s t^u absorbing the endpoint behavior, and the theta = 1 Bessel
// reference determinant.

namespace mbgap::fredholm {

enum class Transform { identity, square_substitution, power_substitution };

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    Transform transform = Transform::identity;
};

struct DetResult {
    double log_det;
    double det;
    int matrix_dim;
    double est_error;
};

// Gauss-Legendre nodes/weights on [a, b] by Newton iteration on P_n.
QuadratureRule gauss_legendre(int n, double a, double b);

// det(1 - K|[0,s]) at discretization m; est_error compares m with ceil(3m/2).
DetResult fredholm_logdet(const ModelParams& params, double s, int m,
                          const kernel::ContourSpec& contour);

// Convenience overload: contour sized internally for (s, m).
DetResult fredholm_logdet(const ModelParams& params, double s, int m);

// Nystrom determinant of the Bessel kernel on [0, S].
DetResult bessel_logdet(double alpha, double S, int m);

// log |det(I - M)| for a dense matrix M (row-major m x m) via LU with partial
// pivoting; throws if the determinant is not positive.
double logdet_one_minus(std::vector<double> m_matrix, int dim);

}  // namespace mbgap::fredholm
