#include "mbgap/specfun.hpp"

#include <array>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace mbgap::specfun {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kLnSqrt2Pi = 0.91893853320467274178032973640561764;

// Asymptotic series kick in once Re z >= this; empirically enough for
// ~1e-13 relative accuracy with 10 Bernoulli terms.
constexpr double kShiftThreshold = 12.0;

std::vector<double> bernoulli_table() {
    // B_n via the recurrence B_n = -1/(n+1) sum_{k<n} C(n+1,k) B_k.
    std::vector<double> b(61, 0.0);
    b[0] = 1.0;
    for (int n = 1; n <= 60; ++n) {
        double acc = 0.0;
        double binom = 1.0;  // C(n+1, 0)
        for (int k = 0; k < n; ++k) {
            acc += binom * b[k];
            binom *= static_cast<double>(n + 1 - k) / (k + 1);
        }
        b[n] = -acc / (n + 1);
    }
    return b;
}

const std::vector<double>& bernoulli_cache() {
    static const std::vector<double> table = bernoulli_table();
    return table;
}

bool on_negative_cut(complex z) {
    return z.imag() == 0.0 && z.real() <= 0.0;
}

// Stirling series for Re z >= kShiftThreshold.
complex log_gamma_asymptotic(complex z, int n_terms) {
    complex lz = std::log(z);
    complex sum = (z - 0.5) * lz - z + kLnSqrt2Pi;
    complex zinv2 = 1.0 / (z * z);
    complex zpow = 1.0 / z;
    for (int n = 1; n <= n_terms; ++n) {
        sum += bernoulli_number(2 * n) / ((2.0 * n - 1.0) * (2.0 * n)) * zpow;
        zpow *= zinv2;
    }
    return sum;
}

std::array<long double, 16> bernoulli_even_ext() {
    // B_0, B_2, ..., B_30 in long double via the defining recurrence.
    std::array<long double, 33> b{};
    b[0] = 1.0L;
    b[1] = -0.5L;
    for (int n = 2; n <= 32; ++n) {
        long double acc = 0.0L;
        long double binom = 1.0L;
        for (int k = 0; k < n; ++k) {
            acc += binom * b[k];
            binom *= static_cast<long double>(n + 1 - k) / (k + 1);
        }
        b[n] = -acc / (n + 1);
    }
    std::array<long double, 16> even{};
    for (int n = 0; n < 16; ++n) even[n] = b[2 * n];
    return even;
}

}  // namespace

long double log_gamma_ext(long double x) {
    if (!(x > 0.0L)) throw std::domain_error("log_gamma_ext: requires x > 0");
    static const std::array<long double, 16> b2n = bernoulli_even_ext();
    constexpr long double kLnSqrt2PiExt = 0.918938533204672741780329736405617639862L;
    long double shift = 0.0L;
    while (x < 16.0L) {
        shift += std::log(x);
        x += 1.0L;
    }
    long double sum = (x - 0.5L) * std::log(x) - x + kLnSqrt2PiExt;
    long double xinv2 = 1.0L / (x * x);
    long double xpow = 1.0L / x;
    for (int n = 1; n <= 12; ++n) {
        sum += b2n[n] / ((2.0L * n - 1.0L) * (2.0L * n)) * xpow;
        xpow *= xinv2;
    }
    return sum - shift;
}

double bernoulli_number(int n) {
    if (n < 0) throw std::domain_error("bernoulli_number: n must be >= 0");
    if (n > 60) throw std::overflow_error("bernoulli_number: n > 60 exceeds useful double range");
    return bernoulli_cache()[static_cast<size_t>(n)];
}

double bernoulli_polynomial(int n, double x) {
    if (n < 0) throw std::domain_error("bernoulli_polynomial: n must be >= 0");
    double sum = 0.0;
    double binom = 1.0;  // C(n, 0)
    double xpow = 1.0;
    for (int k = 0; k <= n; ++k) {
        sum += binom * bernoulli_number(n - k) * xpow;
        binom *= static_cast<double>(n - k) / (k + 1);
        xpow *= x;
    }
    return sum;
}

double stirling_remainder_bound(complex z, int n_terms) {
    // |D_N(z)| <= |B_{2N+2}| / ((2N+1)(2N+2) |z|^{2N+1}) / cos^{2N+2}(arg(z)/2)
    double r = std::abs(z);
    double c = std::cos(std::arg(z) / 2.0);
    int n = n_terms;
    return std::abs(bernoulli_number(2 * n + 2)) /
           ((2.0 * n + 1.0) * (2.0 * n + 2.0) * std::pow(r, 2 * n + 1) *
            std::pow(c, 2 * n + 2));
}

complex log_gamma(complex z, StirlingRemainderOrder order) {
    if (order.n < 1 || order.n > 30) throw std::domain_error("log_gamma: order.n out of range");
    if (on_negative_cut(z)) throw std::domain_error("log_gamma: z on the cut (-inf, 0]");
    // Shift into the asymptotic region: lnGamma(z) = lnGamma(z+m) - sum ln(z+k).
    complex shift = 0.0;
    while (z.real() < kShiftThreshold) {
        shift += std::log(z);
        z += 1.0;
    }
    return log_gamma_asymptotic(z, order.n) - shift;
}

complex digamma(complex z) {
    if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()))
        throw std::domain_error("digamma: pole at nonpositive integer");
    complex shift = 0.0;
    while (z.real() < kShiftThreshold) {
        shift += 1.0 / z;
        z += 1.0;
    }
    // psi(z) ~ ln z - 1/(2z) - sum B_{2k} / (2k z^{2k})
    complex sum = std::log(z) - 0.5 / z;
    complex zinv2 = 1.0 / (z * z);
    complex zpow = zinv2;
    for (int k = 1; k <= 10; ++k) {
        sum -= bernoulli_number(2 * k) / (2.0 * k) * zpow;
        zpow *= zinv2;
    }
    return sum - shift;
}

double log_barnes_g(double z0) {
    if (!(z0 > 0.0)) throw std::domain_error("log_barnes_g: requires z > 0");
    // G(z+1) = Gamma(z) G(z)  =>  ln G(z) = ln G(z+m) - sum_{k=0}^{m-1} lnGamma(z+k)
    // Intermediates reach ~w^2 ln w before cancelling, so use extended precision.
    long double z = z0;
    long double shift = 0.0L;
    while (z < 30.0L) {
        shift += log_gamma_ext(z);
        z += 1.0L;
    }
    // ln G(w+1) = w^2/4 + w lnGamma(w+1) - (w(w+1)/2 + 1/12) ln w - ln A
    //             + sum_k B_{2k+2} / (2k(2k+1)(2k+2) w^{2k}),   ln A = 1/12 - zeta'(-1)
    long double w = z - 1.0L;
    long double ln_a = 1.0L / 12.0L - static_cast<long double>(zeta_prime_m1_const());
    long double sum = w * w / 4.0L + w * log_gamma_ext(w + 1.0L) -
                      (w * (w + 1.0L) / 2.0L + 1.0L / 12.0L) * std::log(w) - ln_a;
    long double winv2 = 1.0L / (w * w);
    long double wpow = winv2;
    for (int k = 1; k <= 8; ++k) {
        sum += static_cast<long double>(bernoulli_number(2 * k + 2)) /
               (2.0L * k * (2.0L * k + 1.0L) * (2.0L * k + 2.0L)) * wpow;
        wpow *= winv2;
    }
    return static_cast<double>(sum - shift);
}

double zeta_prime_m1(double z0) {
    if (!(z0 > 0.0)) throw std::domain_error("zeta_prime_m1: requires z > 0");
    // zeta'(-1, z+1) - zeta'(-1, z) = z ln z; extended precision for the
    // same cancellation reason as log_barnes_g.
    long double z = z0;
    long double shift = 0.0L;
    while (z < 30.0L) {
        if (z != 1.0L) shift += z * std::log(z);
        z += 1.0L;
    }
    // NIST 25.11.44:
    // zeta'(-1,z) = 1/12 - z^2/4 + (1/12 - z/2 + z^2/2) ln z
    //               - sum_k B_{2k+2} / (2k(2k+1)(2k+2) z^{2k})
    long double lz = std::log(z);
    long double sum = 1.0L / 12.0L - z * z / 4.0L + (1.0L / 12.0L - z / 2.0L + z * z / 2.0L) * lz;
    long double zinv2 = 1.0L / (z * z);
    long double zpow = zinv2;
    for (int k = 1; k <= 8; ++k) {
        sum -= static_cast<long double>(bernoulli_number(2 * k + 2)) /
               (2.0L * k * (2.0L * k + 1.0L) * (2.0L * k + 2.0L)) * zpow;
        zpow *= zinv2;
    }
    return static_cast<double>(sum - shift);
}

double zeta_prime_m1_const() {
    static const double value = zeta_prime_m1(1.0);
    return value;
}

double hurwitz_zeta_int(int m, double z) {
    if (m < 2) throw std::domain_error("hurwitz_zeta_int: requires m >= 2");
    if (!(z > 0.0)) throw std::domain_error("hurwitz_zeta_int: requires z > 0");
    // Direct sum to z+K, then Euler-Maclaurin tail.
    double sum = 0.0;
    int k = 0;
    while (z + k < 40.0 || k < 8) {
        sum += std::pow(z + k, -m);
        ++k;
    }
    double a = z + k;  // tail starts at a
    // sum_{j>=0} (a+j)^{-m} = a^{1-m}/(m-1) + a^{-m}/2 + sum_r B_{2r}/(2r)! * (m)_{2r-1} a^{-m-2r+1}
    double tail = std::pow(a, 1 - m) / (m - 1) + 0.5 * std::pow(a, -m);
    double factor = 1.0;  // rising factorial (m)_{2r-1} / (2r)!
    double apow = std::pow(a, -m - 1);
    for (int r = 1; r <= 6; ++r) {
        // (m)_{2r-1} = m (m+1) ... (m+2r-2)
        double rising = 1.0;
        for (int j = 0; j < 2 * r - 1; ++j) rising *= (m + j);
        double fact = 1.0;
        for (int j = 2; j <= 2 * r; ++j) fact *= j;
        tail += bernoulli_number(2 * r) / fact * rising * apow;
        apow /= (a * a);
        (void)factor;
    }
    return sum + tail;
}

double bessel_j(double nu, double x) {
    if (!(nu > -1.0)) throw std::domain_error("bessel_j: requires nu > -1");
    if (x < 0.0) throw std::domain_error("bessel_j: requires x >= 0");
    if (x > 40.0) throw std::domain_error("bessel_j: x > 40 unsupported (ascending series only)");
    if (x == 0.0) {
        if (nu == 0.0) return 1.0;
        if (nu > 0.0) return 0.0;
        throw std::domain_error("bessel_j: J_nu(0) diverges for nu < 0");
    }
    // J_nu(x) = sum_m (-1)^m (x/2)^{nu+2m} / (m! Gamma(nu+m+1))
    double half = 0.5 * x;
    double log_first = nu * std::log(half) - log_gamma(complex(nu + 1.0, 0.0)).real();
    double term = std::exp(log_first);
    double sum = term;
    double h2 = half * half;
    for (int m = 1; m <= 200; ++m) {
        term *= -h2 / (m * (nu + m));
        sum += term;
        if (std::abs(term) < 1e-17 * (1.0 + std::abs(sum))) break;
    }
    return sum;
}

double bessel_j_prime(double nu, double x) {
    if (x == 0.0) throw std::domain_error("bessel_j_prime: x = 0 not supported");
    return nu / x * bessel_j(nu, x) - bessel_j(nu + 1.0, x);
}

}  // namespace mbgap::specfun
