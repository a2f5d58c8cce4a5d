#include "mbgap/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "mbgap/fredholm.hpp"
#include "mbgap/specfun.hpp"

namespace mbgap::kernel {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kFourPiSq = 4.0 * kPi * kPi;

double real_log_gamma(double x) {
    return specfun::log_gamma(std::complex<double>(x, 0.0)).real();
}

bool is_nonpositive_integer(complex w, double eps = 1e-12) {
    if (std::abs(w.imag()) > eps) return false;
    double r = w.real();
    return r <= eps && std::abs(r - std::round(r)) <= eps * (1.0 + std::abs(r));
}

}  // namespace

complex big_f(const ModelParams& params, complex z) {
    const double half_alpha = params.alpha / 2.0;
    const complex num_arg = z + half_alpha;
    const complex den_arg = (half_alpha + 1.0 - z) / params.theta;
    if (is_nonpositive_integer(num_arg))
        throw std::domain_error("big_f: pole of Gamma(z + alpha/2)");
    if (is_nonpositive_integer(den_arg)) return 0.0;
    return std::exp(specfun::log_gamma(num_arg) - specfun::log_gamma(den_arg));
}

complex ln_big_f(const ModelParams& params, complex z) {
    const double half_alpha = params.alpha / 2.0;
    if (z.imag() == 0.0 && (z.real() <= -half_alpha || z.real() >= 1.0 + half_alpha))
        throw std::domain_error("ln_big_f: z on a branch cut");
    return specfun::log_gamma(z + half_alpha) -
           specfun::log_gamma((half_alpha + 1.0 - z) / params.theta);
}

namespace {

// Log-magnitude of the gamma-contour integrand at ray parameter t for
// argument x (the v-side mirrors it with the opposite F sign).
double ray_log_mag_u(const ModelParams& params, const ContourSpec& c, double t, double x) {
    complex u = c.anchor_gamma + t * std::polar(1.0, c.ray_angle);
    return ln_big_f(params, u).real() - u.real() * std::log(x);
}

double ray_log_mag_v(const ModelParams& params, const ContourSpec& c, double t, double y) {
    complex v = c.anchor_tilde + t * std::polar(1.0, kPi - c.ray_angle);
    return -ln_big_f(params, v).real() + (v.real() - 1.0) * std::log(y);
}

}  // namespace

ContourSpec contour_for_range(const ModelParams& params, double x_min, double x_max,
                              double tol) {
    if (!(x_min > 0.0) || !(tol > 0.0) || !(x_max >= x_min))
        throw std::domain_error("contour_for_range: bad arguments");
    const double al = params.alpha;
    ContourSpec c;
    c.anchor_gamma = -al / 2.0 + (1.0 + al) / 3.0;
    c.anchor_tilde = -al / 2.0 + 2.0 * (1.0 + al) / 3.0;
    const double log_target = std::log(tol) - 6.0;
    double radius = 16.0;
    for (; radius < 400.0; radius += 8.0) {
        double worst = -1e300;
        for (double x : {x_min, x_max}) {
            worst = std::max(worst, ray_log_mag_u(params, c, radius, x));
            worst = std::max(worst, ray_log_mag_v(params, c, radius, x));
        }
        if (worst < log_target) break;
    }
    c.truncation_radius = radius;
    // Node count follows the oscillation budget: the phase along a ray grows
    // like |Im ln F| + r sin(angle) |ln x|.
    complex u_end = c.anchor_gamma + radius * std::polar(1.0, c.ray_angle);
    double lmax = std::max(std::abs(std::log(x_min)), std::abs(std::log(x_max)));
    double cycles = (std::abs(ln_big_f(params, u_end).imag()) +
                     radius * std::abs(std::sin(c.ray_angle)) * lmax) /
                    (2.0 * kPi);
    c.nodes_per_ray = std::clamp(static_cast<int>(6.0 * cycles) + 16, 64, 960);
    return c;
}

ContourSpec default_contour(const ModelParams& params, double x_min, double tol) {
    return contour_for_range(params, x_min, std::max(x_min, 1.0), tol);
}

ContourWorkspace make_workspace(const ModelParams& params, const ContourSpec& contour) {
    const int n = contour.nodes_per_ray;
    const auto rule = fredholm::gauss_legendre(n, 0.0, contour.truncation_radius);
    const complex dir_u = std::polar(1.0, contour.ray_angle);
    const complex dir_v = std::polar(1.0, kPi - contour.ray_angle);

    ContourWorkspace ws;
    ws.u_nodes.reserve(2 * n);
    ws.v_nodes.reserve(2 * n);
    ws.u_factors.reserve(2 * n);
    ws.v_factors.reserve(2 * n);
    // Upward orientation: lower ray enters with a minus sign.
    for (int i = 0; i < n; ++i) {
        const double t = rule.nodes[i];
        const double w = rule.weights[i];
        const complex uu = contour.anchor_gamma + t * dir_u;
        const complex ul = contour.anchor_gamma + t * std::conj(dir_u);
        ws.u_nodes.push_back(uu);
        ws.u_factors.push_back(w * dir_u * std::exp(ln_big_f(params, uu)));
        ws.u_nodes.push_back(ul);
        ws.u_factors.push_back(-w * std::conj(dir_u) * std::exp(ln_big_f(params, ul)));
        const complex vu = contour.anchor_tilde + t * dir_v;
        const complex vl = contour.anchor_tilde + t * std::conj(dir_v);
        ws.v_nodes.push_back(vu);
        ws.v_factors.push_back(w * dir_v * std::exp(-ln_big_f(params, vu)));
        ws.v_nodes.push_back(vl);
        ws.v_factors.push_back(-w * std::conj(dir_v) * std::exp(-ln_big_f(params, vl)));
    }
    const size_t p_count = ws.u_nodes.size(), q_count = ws.v_nodes.size();
    ws.inv_diff.resize(p_count * q_count);
    for (size_t p = 0; p < p_count; ++p)
        for (size_t q = 0; q < q_count; ++q)
            ws.inv_diff[p * q_count + q] = 1.0 / (ws.u_nodes[p] - ws.v_nodes[q]);
    return ws;
}

namespace {

complex eval_with_workspace(const ContourWorkspace& ws, double x, double y) {
    const size_t p_count = ws.u_nodes.size(), q_count = ws.v_nodes.size();
    const double lx = std::log(x), ly = std::log(y);
    std::vector<complex> b(q_count);
    for (size_t q = 0; q < q_count; ++q) {
        const complex e = (ws.v_nodes[q] - 1.0) * ly;
        if (e.real() > 700.0)
            throw std::runtime_error("kernel_point: overflow in y^{v-1} at node " +
                                     std::to_string(q));
        b[q] = ws.v_factors[q] * std::exp(e);
    }
    complex sum = 0.0;
    for (size_t p = 0; p < p_count; ++p) {
        const complex e = -ws.u_nodes[p] * lx;
        if (e.real() > 700.0)
            throw std::runtime_error("kernel_point: overflow in x^{-u} at node " +
                                     std::to_string(p));
        const complex a = ws.u_factors[p] * std::exp(e);
        complex inner = 0.0;
        const complex* row = &ws.inv_diff[p * q_count];
        for (size_t q = 0; q < q_count; ++q) inner += b[q] * row[q];
        sum += a * inner;
    }
    return sum / kFourPiSq;
}

}  // namespace

KernelQuadratureReport kernel_point(const ModelParams& params, const ContourSpec& contour,
                                    double x, double y) {
    if (!(x > 0.0 && y > 0.0)) throw std::domain_error("kernel_point: requires x, y > 0");
    const complex coarse = eval_with_workspace(make_workspace(params, contour), x, y);
    ContourSpec fine_spec = contour;
    fine_spec.nodes_per_ray *= 2;
    const complex fine = eval_with_workspace(make_workspace(params, fine_spec), x, y);
    KernelQuadratureReport rep;
    rep.value = fine.real();
    rep.imag_leak = std::abs(fine.imag());
    rep.est_error = std::abs(fine - coarse);
    return rep;
}

std::vector<double> kernel_matrix(const ModelParams& params, const ContourWorkspace& ws,
                                  const std::vector<double>& xs,
                                  const std::vector<double>& ys) {
    (void)params;
    const size_t p_count = ws.u_nodes.size(), q_count = ws.v_nodes.size();
    const size_t nx = xs.size(), ny = ys.size();
    std::vector<complex> a(p_count * nx), b(q_count * ny);
    for (size_t i = 0; i < nx; ++i) {
        const double lx = std::log(xs[i]);
        for (size_t p = 0; p < p_count; ++p)
            a[p * nx + i] = ws.u_factors[p] * std::exp(-ws.u_nodes[p] * lx);
    }
    for (size_t j = 0; j < ny; ++j) {
        const double ly = std::log(ys[j]);
        for (size_t q = 0; q < q_count; ++q)
            b[q * ny + j] = ws.v_factors[q] * std::exp((ws.v_nodes[q] - 1.0) * ly);
    }
    // T = inv_diff * B, then K = A^T T / (4 pi^2).
    std::vector<complex> t(p_count * ny, 0.0);
    for (size_t p = 0; p < p_count; ++p) {
        const complex* row = &ws.inv_diff[p * q_count];
        complex* trow = &t[p * ny];
        for (size_t q = 0; q < q_count; ++q) {
            const complex c = row[q];
            const complex* brow = &b[q * ny];
            for (size_t j = 0; j < ny; ++j) trow[j] += c * brow[j];
        }
    }
    std::vector<double> out(nx * ny);
    for (size_t i = 0; i < nx; ++i)
        for (size_t j = 0; j < ny; ++j) {
            complex sum = 0.0;
            for (size_t p = 0; p < p_count; ++p) sum += a[p * nx + i] * t[p * ny + j];
            out[i * ny + j] = (sum / kFourPiSq).real();
        }
    return out;
}

double kernel_series(const ModelParams& params, double x, double y, int max_terms) {
    if (!(x > 0.0 && y > 0.0)) throw std::domain_error("kernel_series: requires x, y > 0");
    const double th = params.theta;
    const double al = params.alpha;
    const double lx = std::log(x), ly = std::log(y);
    double sum = 0.0;
    double largest_tail = 0.0;
    bool converged = false;
    for (int j = 0; j < max_terms && !converged; ++j) {
        double row_max = 0.0;
        for (int k = 0; k < max_terms; ++k) {
            const double log_mag = std::log(th) + (al / 2.0 + j) * lx + (al / 2.0 + k * th) * ly -
                                   real_log_gamma(j + 1.0) - real_log_gamma(k + 1.0) -
                                   real_log_gamma((al + 1.0 + j) / th) -
                                   real_log_gamma(al + 1.0 + k * th) -
                                   std::log(al + 1.0 + j + k * th);
            const double term = (((j + k) % 2) ? -1.0 : 1.0) * std::exp(log_mag);
            sum += term;
            row_max = std::max(row_max, std::abs(term));
            if (std::abs(term) < 1e-18 * (1.0 + std::abs(sum)) && k > 2) break;
        }
        if (row_max < 1e-18 * (1.0 + std::abs(sum)) && j > 2) converged = true;
        largest_tail = row_max;
    }
    if (!converged && largest_tail > 1e-14 * (1.0 + std::abs(sum)))
        throw std::runtime_error("kernel_series: did not converge within max_terms");
    return sum;
}

double bessel_kernel(double alpha, double x, double y) {
    if (!(x > 0.0 && y > 0.0)) throw std::domain_error("bessel_kernel: requires x, y > 0");
    if (std::abs(x - y) < 1e-6) {
        // Diagonal values by quadratic extrapolation from points just outside
        // the near-diagonal band; one-sided so the stencil stays positive for
        // any x > 0.
        const double t0 = x + 2e-6, t1 = x + 1.1e-5, t2 = x + 2e-5;
        const double f0 = bessel_kernel(alpha, x, t0);
        const double f1 = bessel_kernel(alpha, x, t1);
        const double f2 = bessel_kernel(alpha, x, t2);
        const double l0 = (y - t1) * (y - t2) / ((t0 - t1) * (t0 - t2));
        const double l1 = (y - t0) * (y - t2) / ((t1 - t0) * (t1 - t2));
        const double l2 = (y - t0) * (y - t1) / ((t2 - t0) * (t2 - t1));
        return f0 * l0 + f1 * l1 + f2 * l2;
    }
    const double sx = std::sqrt(x), sy = std::sqrt(y);
    const double jx = specfun::bessel_j(alpha, sx);
    const double jy = specfun::bessel_j(alpha, sy);
    const double jpx = specfun::bessel_j_prime(alpha, sx);
    const double jpy = specfun::bessel_j_prime(alpha, sy);
    return (jx * sy * jpy - sx * jpx * jy) / (2.0 * (x - y));
}

}  // namespace mbgap::kernel
