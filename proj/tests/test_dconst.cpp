#include <cmath>

#include "doctest.h"
#include "mbgap/dconst.hpp"
#include "mbgap/specfun.hpp"

using namespace mbgap;
using namespace mbgap::dconst;
using std::abs;

namespace {
// frozen 40-digit references (independent high-precision evaluation)
constexpr double kD_1_0 = 0.7535173895042218125664100761645984318729;
constexpr double kD_half_0 = 0.6629411662144609498190618794382873869100;
constexpr double kD_23_05 = 1.140106106635990989306237917211561542192;
constexpr double kD_32_2 = 2.629465855634200122682911427416211472964;
}  // namespace

TEST_CASE("d_bracket hand value at N=2, theta=1, alpha=0") {
    // lnGamma(2) + lnGamma(3) minus the counterterms evaluated by hand:
    // bracket = 5 - (41/12) ln 2 - ln(2 pi)
    const double expect = 5.0 - 41.0 / 12.0 * std::log(2.0) - std::log(2.0 * M_PI);
    CHECK(d_bracket(ModelParams(1.0, 0.0), 2) == doctest::Approx(expect).epsilon(1e-13));
}

TEST_CASE("d_bracket converges and is Cauchy") {
    const ModelParams p(1.0, -1.0);
    double prev_gap = 1e9;
    for (long n : {64L, 128L, 256L, 512L, 1024L}) {
        const double gap = abs(d_bracket(p, 2 * n) - d_bracket(p, n));
        CHECK(gap < prev_gap);
        prev_gap = gap;
    }
    CHECK(abs(d_bracket(p, 16384) - specfun::zeta_prime_m1_const()) < 1e-4);
}

TEST_CASE("d_limit known values") {
    CHECK(d_limit(ModelParams(1.0, -1.0)).value ==
          doctest::Approx(specfun::zeta_prime_m1_const()).epsilon(1e-9));
    const double d17 = d_limit(ModelParams(1.0, 0.7)).value;
    const double expect = specfun::zeta_prime_m1_const() + 1.7 / 2.0 * std::log(2.0 * M_PI) -
                          specfun::log_barnes_g(2.7);
    CHECK(d17 == doctest::Approx(expect).epsilon(1e-9));
    CHECK(d_limit(ModelParams(2.0 / 3.0, 0.5)).value ==
          doctest::Approx(d_rational(2, 3, 0.5)).epsilon(1e-9));
}

TEST_CASE("d_rational frozen references") {
    CHECK(d_rational(1, 1, 0.0) == doctest::Approx(kD_1_0).epsilon(1e-12));
    CHECK(d_rational(1, 2, 0.0) == doctest::Approx(kD_half_0).epsilon(1e-12));
    CHECK(d_rational(2, 3, 0.5) == doctest::Approx(kD_23_05).epsilon(1e-12));
    CHECK(d_rational(3, 2, 2.0) == doctest::Approx(kD_32_2).epsilon(1e-12));
}

TEST_CASE("d_rational properties") {
    for (double al : {-0.5, 0.3, 2.0}) {
        CHECK(d_rational(1, 1, al) == doctest::Approx(d_one(al)).epsilon(1e-12));
        // unreduced fractions give the same value
        CHECK(d_rational(2, 2, al) == doctest::Approx(d_rational(1, 1, al)).epsilon(1e-11));
        CHECK(d_rational(2, 4, al) ==
              doctest::Approx(d_rational(1, 2, al, /*reduce=*/true)).epsilon(1e-11));
    }
    CHECK(d_rational(1, 2, 0.0) == doctest::Approx(d_limit(ModelParams(0.5, 0.0)).value).epsilon(1e-8));
}

TEST_CASE("d_one") {
    CHECK(d_one(-1.0) == doctest::Approx(specfun::zeta_prime_m1_const()).epsilon(1e-13));
    CHECK(d_one(0.0) ==
          doctest::Approx(specfun::zeta_prime_m1_const() + std::log(2.0 * M_PI) / 2.0)
              .epsilon(1e-13));
    CHECK(d_one(1.3) == doctest::Approx(d_limit(ModelParams(1.0, 1.3)).value).epsilon(1e-8));
}

TEST_CASE("cross-method agreement on the rational grid") {
    const std::pair<int, int> fracs[] = {{1, 3}, {1, 2}, {2, 3}, {1, 1}, {3, 2}, {2, 1}, {3, 1}};
    for (auto [p, q] : fracs)
        for (double al : {-0.5, 0.0, 0.7, 2.0}) {
            const double th = static_cast<double>(p) / q;
            const double closed = d_rational(p, q, al);
            CHECK(d_limit(ModelParams(th, al)).value == doctest::Approx(closed).epsilon(1e-8));
            CHECK(d_accelerated(ModelParams(th, al)) == doctest::Approx(closed).epsilon(1e-10));
        }
}

TEST_CASE("d_accelerated validation gates") {
    CHECK(d_accelerated(ModelParams(1.0, 0.0)) == doctest::Approx(d_one(0.0)).epsilon(1e-11));
    CHECK(d_accelerated(ModelParams(0.5, 0.0)) ==
          doctest::Approx(d_rational(1, 2, 0.0)).epsilon(1e-11));
    const ModelParams irr(M_PI / 3.0, 0.4);
    CHECK(d_accelerated(irr) == doctest::Approx(d_limit(irr).value).epsilon(1e-9));
}

TEST_CASE("d symmetry residual") {
    CHECK(abs(d_symmetry_residual(ModelParams(1.0, 0.9))) < 1e-9);
    CHECK(abs(d_symmetry_residual(ModelParams(0.5, 0.2))) < 2e-7);
    // both sides through the closed form at theta = 2/3 <-> 3/2
    const double th = 2.0 / 3.0, al = 1.0;
    const double lhs = d_rational(2, 3, al);
    const double rhs = d_rational(3, 2, (1.0 + al) / th - 1.0) +
                       specfun::log_gamma(std::complex<double>((1.0 + al) / th, 0.0)).real() -
                       specfun::log_gamma(std::complex<double>(1.0 + al, 0.0)).real() +
                       (13.0 + 6.0 * al * al + th * (th - 3.0) + 6.0 * al * (th + 3.0)) /
                           (12.0 * th) * std::log(th);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
}

TEST_CASE("d is continuous in alpha") {
    for (double th : {0.4, 1.0, 2.5})
        for (double al : {-0.5, 0.0, 1.0, 3.0}) {
            const double d0 = d_accelerated(ModelParams(th, al));
            const double d1 = d_accelerated(ModelParams(th, al + 1e-6));
            CHECK(abs(d1 - d0) < 1e-4);
        }
}

TEST_CASE("rational detection") {
    int p = 0, q = 0;
    CHECK(detect_rational(0.5, 64, 1e-12, p, q));
    CHECK(p == 1);
    CHECK(q == 2);
    CHECK(detect_rational(2.0 / 3.0, 64, 1e-12, p, q));
    CHECK(p == 2);
    CHECK(q == 3);
    CHECK_FALSE(detect_rational(M_PI / 3.0, 64, 1e-12, p, q));
    CHECK(detect_rational(3.0, 64, 1e-12, p, q));
    CHECK(p == 3);
    CHECK(q == 1);
}

TEST_CASE("d_value routes to the closed form when possible") {
    CHECK(d_value(ModelParams(2.0 / 3.0, 0.5)) == doctest::Approx(kD_23_05).epsilon(1e-12));
    CHECK(d_value(ModelParams(M_PI / 3.0, 0.4)) ==
          doctest::Approx(d_limit(ModelParams(M_PI / 3.0, 0.4)).value).epsilon(1e-8));
}
