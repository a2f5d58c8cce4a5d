#include "mbgap/fredholm.hpp"

#include <cmath>
#include <stdexcept>

namespace mbgap::fredholm {

QuadratureRule gauss_legendre(int n, double a, double b) {
    if (n < 1 || !(a < b)) throw std::domain_error("gauss_legendre: bad arguments");
    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        // Newton on P_n from the Tricomi initial guess.
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            if (n == 1) p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double pn = (n == 1) ? x : p1;
            pp = n * (x * pn - p0) / (x * x - 1.0);
            double dx = pn / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.nodes[i] = mid - half * x;
        rule.weights[i] = half * w;
        rule.nodes[n - 1 - i] = mid + half * x;
        rule.weights[n - 1 - i] = half * w;
    }
    return rule;
}

double logdet_one_minus(std::vector<double> m_matrix, int dim) {
    // LU with partial pivoting on A = I - M, accumulating sum ln|pivot|.
    std::vector<double>& a = m_matrix;
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) a[i * dim + j] = (i == j ? 1.0 : 0.0) - a[i * dim + j];
    double log_det = 0.0;
    double sign = 1.0;
    for (int k = 0; k < dim; ++k) {
        int piv = k;
        double best = std::abs(a[k * dim + k]);
        for (int i = k + 1; i < dim; ++i)
            if (std::abs(a[i * dim + k]) > best) {
                best = std::abs(a[i * dim + k]);
                piv = i;
            }
        if (best == 0.0) throw std::runtime_error("logdet_one_minus: singular matrix");
        if (piv != k) {
            for (int j = 0; j < dim; ++j) std::swap(a[k * dim + j], a[piv * dim + j]);
            sign = -sign;
        }
        const double pivot = a[k * dim + k];
        if (pivot < 0.0) sign = -sign;
        log_det += std::log(std::abs(pivot));
        for (int i = k + 1; i < dim; ++i) {
            const double f = a[i * dim + k] / pivot;
            a[i * dim + k] = f;
            for (int j = k + 1; j < dim; ++j) a[i * dim + j] -= f * a[k * dim + j];
        }
    }
    if (sign <= 0.0) throw std::runtime_error("logdet_one_minus: non-positive determinant");
    return log_det;
}

namespace {

// The kernel expands in powers y^{alpha/2 + k theta}; under x = s t^u the
// endpoint exponents u (alpha/2 + k theta) stay integral only when u theta
// does. The smallest such u keeps Gauss-Legendre spectral (e.g. u = 3 for
// theta = 2/3); otherwise fall back to the square substitution.
double substitution_exponent(double theta) {
    for (int u = 2; u <= 12; ++u) {
        const double ut = u * theta;
        if (std::abs(ut - std::round(ut)) < 1e-9) return static_cast<double>(u);
    }
    return 2.0;
}

// Nodes/weights on [0, s] under x = s t^u (Jacobian folded into the weights).
QuadratureRule power_substituted_rule(int m, double s, double u) {
    const QuadratureRule base = gauss_legendre(m, 0.0, 1.0);
    QuadratureRule rule;
    rule.transform = u == 2.0 ? Transform::square_substitution : Transform::power_substitution;
    rule.nodes.resize(m);
    rule.weights.resize(m);
    for (int i = 0; i < m; ++i) {
        const double t = base.nodes[i];
        rule.nodes[i] = s * std::pow(t, u);
        rule.weights[i] = u * s * std::pow(t, u - 1.0) * base.weights[i];
    }
    return rule;
}

double nystrom_logdet_mb(const ModelParams& params, const kernel::ContourWorkspace& ws,
                         double s, int m) {
    const QuadratureRule rule = power_substituted_rule(m, s, substitution_exponent(params.theta));
    const std::vector<double> kmat = kernel::kernel_matrix(params, ws, rule.nodes, rule.nodes);
    std::vector<double> scaled(static_cast<size_t>(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            scaled[i * m + j] = std::sqrt(rule.weights[i] * rule.weights[j]) * kmat[i * m + j];
    return logdet_one_minus(std::move(scaled), m);
}

DetResult finish(double log_coarse, double log_fine, int m) {
    DetResult res;
    res.log_det = log_coarse;
    res.det = std::exp(log_coarse);
    res.matrix_dim = m;
    res.est_error = std::abs(log_fine - log_coarse);
    if (!(res.det > 0.0) || res.det > 1.0 + 1e-10)
        throw std::runtime_error("fredholm: determinant outside (0, 1]");
    return res;
}

}  // namespace

DetResult fredholm_logdet(const ModelParams& params, double s, int m,
                          const kernel::ContourSpec& contour) {
    if (!(s > 0.0) || m < 4) throw std::domain_error("fredholm_logdet: bad arguments");
    const kernel::ContourWorkspace ws = kernel::make_workspace(params, contour);
    const double coarse = nystrom_logdet_mb(params, ws, s, m);
    const int m_fine = (3 * m + 1) / 2;
    const double fine = nystrom_logdet_mb(params, ws, s, m_fine);
    return finish(coarse, fine, m);
}

DetResult fredholm_logdet(const ModelParams& params, double s, int m) {
    const QuadratureRule rule = power_substituted_rule(m, s, substitution_exponent(params.theta));
    const double x_min = rule.nodes.front();
    const kernel::ContourSpec contour =
        kernel::contour_for_range(params, x_min, s, 1e-10);
    return fredholm_logdet(params, s, m, contour);
}

DetResult bessel_logdet(double alpha, double S, int m) {
    if (!(S > 0.0) || m < 4) throw std::domain_error("bessel_logdet: bad arguments");
    auto one = [&](int mm) {
        const QuadratureRule rule = power_substituted_rule(mm, S, 2.0);
        std::vector<double> scaled(static_cast<size_t>(mm) * mm);
        for (int i = 0; i < mm; ++i)
            for (int j = 0; j < mm; ++j)
                scaled[i * mm + j] = std::sqrt(rule.weights[i] * rule.weights[j]) *
                                     kernel::bessel_kernel(alpha, rule.nodes[i], rule.nodes[j]);
        return logdet_one_minus(std::move(scaled), mm);
    };
    return finish(one(m), one((3 * m + 1) / 2), m);
}

}  // namespace mbgap::fredholm
