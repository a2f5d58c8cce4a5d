#include <cmath>

#include "doctest.h"
#include "mbgap/fredholm.hpp"

using namespace mbgap;
using namespace mbgap::fredholm;
using std::abs;

TEST_CASE("gauss_legendre basics") {
    const auto r1 = gauss_legendre(1, 2.0, 5.0);
    CHECK(r1.nodes.size() == 1);
    CHECK(r1.nodes[0] == doctest::Approx(3.5).epsilon(1e-15));
    CHECK(r1.weights[0] == doctest::Approx(3.0).epsilon(1e-15));
    // degree-3 exactness with n=2 on [0,1]
    const auto r2 = gauss_legendre(2, 0.0, 1.0);
    double ix2 = 0.0, ix3 = 0.0;
    for (size_t i = 0; i < r2.nodes.size(); ++i) {
        ix2 += r2.weights[i] * r2.nodes[i] * r2.nodes[i];
        ix3 += r2.weights[i] * r2.nodes[i] * r2.nodes[i] * r2.nodes[i];
    }
    CHECK(ix2 == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(ix3 == doctest::Approx(1.0 / 4.0).epsilon(1e-14));
    // symmetry about the midpoint, increasing nodes, positive weights
    for (int n : {3, 16, 64}) {
        const auto r = gauss_legendre(n, -1.0, 1.0);
        double wsum = 0.0;
        for (int i = 0; i < n; ++i) {
            CHECK(r.nodes[i] == doctest::Approx(-r.nodes[n - 1 - i]).epsilon(1e-13));
            CHECK(r.weights[i] == doctest::Approx(r.weights[n - 1 - i]).epsilon(1e-13));
            CHECK(r.weights[i] > 0.0);
            if (i) CHECK(r.nodes[i] > r.nodes[i - 1]);
            wsum += r.weights[i];
        }
        CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
    }
    CHECK_THROWS(gauss_legendre(0, 0.0, 1.0));
    CHECK_THROWS(gauss_legendre(4, 1.0, 1.0));
}

TEST_CASE("logdet_one_minus on known matrices") {
    // M = diag(1/2, 1/4): det(I - M) = 3/8
    std::vector<double> m = {0.5, 0.0, 0.0, 0.25};
    CHECK(logdet_one_minus(m, 2) == doctest::Approx(std::log(0.375)).epsilon(1e-14));
    // det(I - M) <= 0 must throw
    std::vector<double> bad = {2.0, 0.0, 0.0, 0.5};
    CHECK_THROWS(logdet_one_minus(bad, 2));
}

TEST_CASE("empty-interval limit") {
    const auto r = fredholm_logdet(ModelParams(1.0, 0.0), 1e-6, 12);
    CHECK(abs(r.log_det) < 1e-4);
    const auto rb = bessel_logdet(0.0, 1e-6, 12);
    CHECK(abs(rb.log_det) < 1e-4);
}

TEST_CASE("theta=1 path equals the Bessel path") {
    const auto direct = fredholm_logdet(ModelParams(1.0, 0.0), 2.0, 40);
    const auto bess = bessel_logdet(0.0, 8.0, 40);
    CHECK(direct.log_det == doctest::Approx(bess.log_det).epsilon(1e-6));
    const auto direct_a = fredholm_logdet(ModelParams(1.0, 1.0), 3.0, 40);
    const auto bess_a = bessel_logdet(1.0, 12.0, 40);
    CHECK(direct_a.log_det == doctest::Approx(bess_a.log_det).epsilon(1e-6));
}

TEST_CASE("monotonicity, range and discretization convergence") {
    const std::pair<double, double> grid[] = {{1.0, 0.0}, {0.5, 0.0}, {0.5, 1.0}};
    for (auto [th, al] : grid) {
        const ModelParams p(th, al);
        double prev = 1.0;
        for (double s : {1.0, 2.0, 5.0, 10.0, 20.0}) {
            const auto r = fredholm_logdet(p, s, 40);
            CHECK(r.log_det < prev);
            CHECK(r.det > 0.0);
            CHECK(r.det <= 1.0 + 1e-10);
            CHECK(r.det == doctest::Approx(std::exp(r.log_det)));
            prev = r.log_det;
            const auto r60 = fredholm_logdet(p, s, 60);
            CHECK(abs(r.log_det - r60.log_det) <= 1e-6);
        }
    }
}

TEST_CASE("est_error reflects the discretization difference") {
    const auto r = fredholm_logdet(ModelParams(0.5, 0.0), 5.0, 24);
    const auto fine = fredholm_logdet(ModelParams(0.5, 0.0), 5.0, 36);
    CHECK(r.est_error == doctest::Approx(abs(r.log_det - fine.log_det)).epsilon(1e-10));
    CHECK(r.matrix_dim == 24);
}

TEST_CASE("bessel determinant large-S trend") {
    // leading term of ln det for K_Be on [0,S] is -S/4
    const auto r = bessel_logdet(0.0, 80.0, 60);
    CHECK(r.log_det < -10.0);
    CHECK(abs(r.log_det / (-80.0 / 4.0) - 1.0) < 0.25);
}

TEST_CASE("preconditions") {
    CHECK_THROWS(fredholm_logdet(ModelParams(1.0, 0.0), -1.0, 20));
    CHECK_THROWS(fredholm_logdet(ModelParams(1.0, 0.0), 1.0, 2));
    CHECK_THROWS(bessel_logdet(0.0, 0.0, 20));
}
