#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wgspec/bessel.hpp"
#include "wgspec/errors.hpp"
#include "bessel_oracle.hpp"

#include <cmath>
#include <vector>

using namespace wgspec;
using wgspec::testing::OracleValue;

namespace {

constexpr double kPi = 3.14159265358979323846;

// Error relative to the envelope max(|value|, |derivative|), which stays
// bounded away from zero for cylinder functions (value and slope never
// vanish together).
double env_rel(const BesselValue& got, const OracleValue& want) {
    const double env = std::max({std::abs(want.value), std::abs(want.derivative), 1e-300});
    return std::max(std::abs(got.value - want.value), std::abs(got.derivative - want.derivative)) / env;
}

// Independent 50-term power series for J_0, used only to locate its first
// root without touching the production code path.
double j0_series50(double x) {
    const double q = -0.25 * x * x;
    double term = 1.0, sum = 1.0;
    for (int k = 1; k <= 50; ++k) {
        term *= q / (static_cast<double>(k) * k);
        sum += term;
    }
    return sum;
}

} // namespace

TEST_CASE("values at x=0") {
    CHECK(bessel_j(0, 0.0).value == 1.0);
    CHECK(bessel_j(0, 0.0).derivative == 0.0);
    CHECK(bessel_j(1, 0.0).value == 0.0);
    CHECK(bessel_j(1, 0.0).derivative == 0.5);
    CHECK(bessel_j(4, 0.0).value == 0.0);
}

TEST_CASE("first zero of J_0 located by the independent series") {
    double lo = 2.0, hi = 3.0;
    REQUIRE(j0_series50(lo) > 0.0);
    REQUIRE(j0_series50(hi) < 0.0);
    for (int i = 0; i < 80; ++i) {
        const double mid = 0.5 * (lo + hi);
        (j0_series50(mid) > 0.0 ? lo : hi) = mid;
    }
    const double root = 0.5 * (lo + hi);
    CHECK(std::abs(root - 2.404825557695773) < 1e-12);
    CHECK(std::abs(bessel_j(0, root).value) < 1e-14);
}

TEST_CASE("Y_0 is negative near the origin") {
    CHECK(bessel_y(0, 1e-4).value < -5.0);
    CHECK(bessel_y(0, 1e-2).value < -2.0);
}

TEST_CASE("J/Y Wronskian at x=1") {
    const auto j = bessel_j(0, 1.0);
    const auto y = bessel_y(0, 1.0);
    const double w = j.derivative * y.value - j.value * y.derivative;
    CHECK(std::abs(w - (-2.0 / kPi)) < 1e-13);
}

TEST_CASE("spot values against the extended-precision oracle") {
    CHECK(env_rel(bessel_j(1, 10.0), wgspec::testing::oracle_j(1, 10.0)) < 1e-12);
    CHECK(env_rel(bessel_y(1, 10.0), wgspec::testing::oracle_y(1, 10.0)) < 1e-12);
    CHECK(env_rel(bessel_k(3, 7.5), wgspec::testing::oracle_k(3, 7.5)) < 1e-12);
    CHECK(env_rel(bessel_i(3, 7.5), wgspec::testing::oracle_i(3, 7.5)) < 1e-12);
}

TEST_CASE("oracle sanity against pinned reference values") {
    CHECK(wgspec::testing::oracle_j(0, 1.0).value == doctest::Approx(0.76519768655796655145).epsilon(1e-15));
    CHECK(wgspec::testing::oracle_y(0, 1.0).value == doctest::Approx(0.08825696421567695798).epsilon(1e-14));
    CHECK(wgspec::testing::oracle_i(0, 1.0).value == doctest::Approx(1.26606587775200833560).epsilon(1e-15));
    CHECK(wgspec::testing::oracle_k(0, 1.0).value == doctest::Approx(0.42102443824070833334).epsilon(1e-15));
}

TEST_CASE("K family signs and asymptotic tail") {
    for (double x : {0.1, 1.0, 10.0}) {
        const auto k0 = bessel_k(0, x);
        CHECK(k0.value > 0.0);
        CHECK(k0.derivative < 0.0);
    }
    // I_m K_m' - I_m' K_m = -1/x at x = 2
    for (int m : {0, 1, 4}) {
        const auto i = bessel_i(m, 2.0);
        const auto k = bessel_k(m, 2.0);
        const double w = i.value * k.derivative - i.derivative * k.value;
        CHECK(std::abs(w + 0.5) < 1e-12);
    }
    // sqrt(x) K_0(x) e^x -> sqrt(pi/2); the deviation is ~1/(8x), so the
    // limit is within 1e-3 only from x ~ 160 up.
    const double t50 = std::sqrt(50.0) * bessel_k_scaled(0, 50.0).value;
    const double t400 = std::sqrt(400.0) * bessel_k_scaled(0, 400.0).value;
    const double lim = std::sqrt(kPi / 2.0);
    CHECK(std::abs(t50 - lim) < 4e-3);
    CHECK(std::abs(t400 - lim) < 1e-3);
    CHECK(std::abs(t400 - lim) < std::abs(t50 - lim));
}

TEST_CASE("three-term recurrences, m <= 20, x in [0.5, 50]") {
    const std::vector<double> xs = {0.5, 0.9, 1.7, 3.0, 5.5, 9.0, 16.0, 27.0, 41.0, 50.0};
    for (double x : xs) {
        for (int m = 1; m <= 19; ++m) {
            {
                const double a = bessel_j(m - 1, x).value;
                const double b = bessel_j(m, x).value;
                const double c = bessel_j(m + 1, x).value;
                const double pred = (2.0 * m / x) * b - a;
                const double scale = std::max({std::abs(a), std::abs((2.0 * m / x) * b), std::abs(c), 1e-300});
                CHECK(std::abs(c - pred) / scale < 1e-10);
            }
            {
                const double a = bessel_y(m - 1, x).value;
                const double b = bessel_y(m, x).value;
                const double c = bessel_y(m + 1, x).value;
                const double pred = (2.0 * m / x) * b - a;
                const double scale = std::max({std::abs(a), std::abs((2.0 * m / x) * b), std::abs(c), 1e-300});
                CHECK(std::abs(c - pred) / scale < 1e-10);
            }
            {
                const double a = bessel_i_scaled(m - 1, x).value;
                const double b = bessel_i_scaled(m, x).value;
                const double c = bessel_i_scaled(m + 1, x).value;
                const double pred = a - (2.0 * m / x) * b;
                const double scale = std::max({std::abs(a), std::abs((2.0 * m / x) * b), std::abs(c), 1e-300});
                CHECK(std::abs(c - pred) / scale < 1e-10);
            }
            {
                const double a = bessel_k_scaled(m - 1, x).value;
                const double b = bessel_k_scaled(m, x).value;
                const double c = bessel_k_scaled(m + 1, x).value;
                const double pred = a + (2.0 * m / x) * b;
                const double scale = std::max({std::abs(a), std::abs((2.0 * m / x) * b), std::abs(c), 1e-300});
                CHECK(std::abs(c - pred) / scale < 1e-10);
            }
        }
    }
}

TEST_CASE("Wronskian identities on a log grid x in [1e-2, 1e3]") {
    for (int i = 0; i <= 40; ++i) {
        const double x = 1e-2 * std::pow(1e5, i / 40.0);
        for (int m : {0, 1, 3, 8}) {
            const auto j = bessel_j(m, x);
            const auto y = bessel_y(m, x);
            const double wjy = j.value * y.derivative - j.derivative * y.value;
            const double sjy = std::abs(j.value * y.derivative) + std::abs(j.derivative * y.value) + 2.0 / (kPi * x);
            CHECK(std::abs(wjy - 2.0 / (kPi * x)) / sjy < 1e-10);

            const auto is = bessel_i_scaled(m, x);
            const auto ks = bessel_k_scaled(m, x);
            // e^{-x}I and e^{x}K: I K' - I' K = (Is Ks' - Is' Ks) with the
            // exponential factors cancelling.
            const double wik = is.value * ks.derivative - is.derivative * ks.value;
            const double sik = std::abs(is.value * ks.derivative) + std::abs(is.derivative * ks.value) + 1.0 / x;
            CHECK(std::abs(wik + 1.0 / x) / sik < 1e-10);
        }
    }
}

TEST_CASE("branch seams agree with the oracle to 1e-12") {
    const std::vector<double> seams = {1.8, 2.0, 2.2, 11.0, 12.0, 13.0, 0.9, 1.1,
                                       17.0, 18.0, 19.0, 43.0, 45.0, 47.0};
    for (double x : seams) {
        for (int m : {0, 1, 2, 5, 10}) {
            CHECK(env_rel(bessel_j(m, x), wgspec::testing::oracle_j(m, x)) < 1e-12);
            CHECK(env_rel(bessel_y(m, x), wgspec::testing::oracle_y(m, x)) < 1e-12);
            CHECK(env_rel(bessel_i_scaled(m, x), wgspec::testing::oracle_i_scaled(m, x)) < 1e-12);
            CHECK(env_rel(bessel_k_scaled(m, x), wgspec::testing::oracle_k_scaled(m, x)) < 1e-12);
        }
    }
}

TEST_CASE("accuracy vs oracle up to x = 1e4") {
    for (int i = 0; i <= 24; ++i) {
        const double x = 0.05 * std::pow(2e5, i / 24.0);
        for (int m : {0, 1, 2, 5, 10}) {
            CHECK(env_rel(bessel_j(m, x), wgspec::testing::oracle_j(m, x)) < 1e-12);
            CHECK(env_rel(bessel_y(m, x), wgspec::testing::oracle_y(m, x)) < 1e-12);
        }
    }
    // High order at moderate argument (series/Miller regime).
    for (int m : {25, 40}) {
        for (double x : {0.7, 6.0, 24.0}) {
            CHECK(env_rel(bessel_j(m, x), wgspec::testing::oracle_j(m, x)) < 1e-12);
            CHECK(env_rel(bessel_k_scaled(m, x), wgspec::testing::oracle_k_scaled(m, x)) < 1e-12);
        }
    }
}

TEST_CASE("domain and range errors") {
    CHECK_THROWS_AS(bessel_j(-1, 1.0), domain_error);
    CHECK_THROWS_AS(bessel_y(0, 0.0), domain_error);
    CHECK_THROWS_AS(bessel_k(0, -1.0), domain_error);
    CHECK_THROWS_AS(bessel_i(0, 800.0), numeric_error);
    CHECK_THROWS_AS(bessel_y(150, 0.5), numeric_error);

    const auto k = bessel_k(0, 800.0);
    CHECK(k.value == 0.0);
    CHECK(k.underflow);

    const auto ks = bessel_k_scaled(0, 800.0);
    CHECK(ks.value > 0.0);
    CHECK_FALSE(ks.underflow);
}
