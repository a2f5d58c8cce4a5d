#pragma once

#include <complex>

// Special functions used throughout: principal-branch log-Gamma and digamma
// on the cut plane, real-argument log Barnes G and zeta'(-1,z), Bernoulli
// numbers/polynomials and small-argument Bessel J. Double precision only.

namespace mbgap::specfun {

using complex = std::complex<double>;

// Number of Bernoulli correction terms kept in the Stirling series.
struct StirlingRemainderOrder {
    int n = 10;  // 1 <= n <= 30
};

// nth Bernoulli number (B_1 = -1/2 convention). Throws for n > 60.
double bernoulli_number(int n);

// B_n(x) = sum_k C(n,k) B_{n-k} x^k
double bernoulli_polynomial(int n, double x);

// Bound on the Stirling remainder |D_N(z)| after keeping N Bernoulli terms.
double stirling_remainder_bound(complex z, int n_terms);

// Principal-branch ln Gamma(z), cut along (-inf, 0].
complex log_gamma(complex z, StirlingRemainderOrder order = {});

// ln Gamma(x) for real x > 0 in extended precision. The d-limit bracket
// cancels ~N^2 ln N digits, which a double-only evaluation cannot survive.
long double log_gamma_ext(long double x);

// psi(z) = d/dz ln Gamma(z); poles at nonpositive integers.
complex digamma(complex z);

// ln G(z) for real z > 0, G the Barnes G-function.
double log_barnes_g(double z);

// zeta'(-1, z) for real z > 0 (u-derivative of Hurwitz zeta at u = -1).
double zeta_prime_m1(double z);

// zeta'(-1) = zeta_prime_m1(1); cached after first call.
double zeta_prime_m1_const();

// Hurwitz zeta(m, z) for integer m >= 2 and real z > 0.
double hurwitz_zeta_int(int m, double z);

// Bessel J_nu(x) by ascending series; supported for 0 <= x <= 40, nu > -1.
double bessel_j(double nu, double x);

// J_nu'(x) via J_nu' = (nu/x) J_nu - J_{nu+1}.
double bessel_j_prime(double nu, double x);

inline constexpr double euler_gamma = 0.57721566490153286060651209008240243104;

}  // namespace mbgap::specfun
