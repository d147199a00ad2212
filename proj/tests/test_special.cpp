#include <doctest.h>

#include <cmath>

#include "wavediff/errors.hpp"
#include "wavediff/special.hpp"

using namespace wavediff;

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 6.28318530717958647692;
}  // namespace

TEST_CASE("gamma function values and recurrence") {
    CHECK(gamma_fn(0.5) == doctest::Approx(std::sqrt(kPi)).epsilon(1e-14));
    CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(gamma_fn(2.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(gamma_fn(3.0) == doctest::Approx(2.0).epsilon(1e-15));

    for (double x : {0.3, 0.9, 1.7, 3.4, 6.2}) {
        CHECK(gamma_fn(x + 1.0) == doctest::Approx(x * gamma_fn(x)).epsilon(1e-13));
    }

    CHECK_THROWS_AS(gamma_fn(0.0), InputError);
    CHECK_THROWS_AS(gamma_fn(-1.5), InputError);
}

TEST_CASE("power series at the origin and half-integer closed forms") {
    CHECK(bessel_j_series(0.0, 0.0) == doctest::Approx(1.0));
    CHECK(bessel_j_series(1.0, 0.0) == doctest::Approx(0.0));

    // sqrt(2/(pi z)) sin z, the nu = 1/2 closed form
    for (double z : {0.5, 1.0, kPi, 4.0, 10.0}) {
        double expected = std::sqrt(2.0 / (kPi * z)) * std::sin(z);
        CHECK(bessel_j_series(0.5, z) == doctest::Approx(expected).epsilon(1e-12));
    }
    CHECK(std::abs(bessel_j_series(0.5, kPi)) < 1e-12);
}

TEST_CASE("first zero of the order-0 series located by bisection") {
    // Bisection on the series itself: J_0(2) > 0 > J_0(3).
    double lo = 2.0, hi = 3.0;
    REQUIRE(bessel_j_series(0.0, lo) > 0.0);
    REQUIRE(bessel_j_series(0.0, hi) < 0.0);
    while (hi - lo > 1e-13) {
        double mid = 0.5 * (lo + hi);
        (bessel_j_series(0.0, mid) > 0.0 ? lo : hi) = mid;
    }
    double zero = 0.5 * (lo + hi);
    CHECK(zero == doctest::Approx(2.4048255577).epsilon(1e-9));
    CHECK(std::abs(bessel_j_series(0.0, zero)) < 1e-9);
}

TEST_CASE("series truncation and domain errors") {
    BesselEvalConfig tight;
    tight.series_max_terms = 3;
    CHECK_THROWS_AS(bessel_j_series(0.0, 20.0, tight), NumericError);

    BesselEvalConfig cfg;
    CHECK_THROWS_AS(bessel_j_series(0.0, 31.0, cfg), InputError);  // beyond the cutoff
    CHECK_THROWS_AS(bessel_j_series(0.5, -1.0, cfg), InputError);  // no real value there
    CHECK_THROWS_AS(bessel_j_series(-0.7, 1.0, cfg), InputError);

    // integer orders reflect by parity
    CHECK(bessel_j_series(1.0, -2.0) == doctest::Approx(-bessel_j_series(1.0, 2.0)));
    CHECK(bessel_j_series(2.0, -2.0) == doctest::Approx(bessel_j_series(2.0, 2.0)));
}

TEST_CASE("integral representation basics") {
    CHECK(bessel_j_integral(0.0, 0.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(bessel_j_integral(0.0, 1.0) ==
          doctest::Approx(bessel_j_series(0.0, 1.0)).epsilon(1e-10));

    double expected = std::sqrt(2.0 / (10.0 * kPi)) * std::sin(10.0);
    CHECK(bessel_j_integral(0.5, 10.0) == doctest::Approx(expected).epsilon(1e-10));

    CHECK_THROWS_AS(bessel_j_integral(-0.5, 1.0), InputError);
    // negative orders would make the integrand endpoint-singular
    CHECK_THROWS_AS(bessel_j_integral(-0.3, 1.0), InputError);
}

TEST_CASE("series and integral routes agree on a grid") {
    for (double nu : {0.0, 0.5, 1.0, 1.5, 2.0}) {
        for (double z = 0.0; z <= 30.0; z += 1.5) {
            double a = bessel_j_series(nu, z);
            double b = bessel_j_integral(nu, z);
            CHECK(std::abs(a - b) < 1e-9);
        }
    }
}

TEST_CASE("magnitude bound (z/2)^nu / Gamma(nu+1)") {
    for (double nu : {0.0, 0.5, 1.0, 2.5}) {
        for (double z = 0.25; z <= 28.0; z += 1.37) {
            double bound = std::pow(0.5 * z, nu) / gamma_fn(nu + 1.0);
            CHECK(std::abs(bessel_j(nu, z)) <= bound * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("regime split dispatches past the cutoff") {
    // Both regimes cross-checked against the standard library implementation.
    for (double nu : {0.0, 0.5, 1.0}) {
        for (double z : {5.0, 29.0, 31.0, 80.0, 200.0}) {
            CHECK(bessel_j(nu, z) == doctest::Approx(std::cyl_bessel_j(nu, z)).epsilon(5e-10));
        }
    }
}

TEST_CASE("sphere kernel removable singularities and exact small cases") {
    for (int d : {1, 2, 3, 5}) {
        CHECK(sphere_kernel(d, 1.0, 0.0) == doctest::Approx(1.0));
        CHECK(sphere_kernel(d, 0.0, 7.3) == doctest::Approx(1.0));
    }
    // d = 1 is a plain cosine
    for (double s : {0.1, 0.5, 2.0}) {
        CHECK(sphere_kernel(1, 0.8, s) == doctest::Approx(std::cos(kTwoPi * 0.8 * s)).epsilon(1e-15));
    }
    // d = 2 is J_0(2 pi r s)
    for (double s : {0.2, 1.0, 3.7}) {
        CHECK(sphere_kernel(2, 1.3, s) ==
              doctest::Approx(std::cyl_bessel_j(0.0, kTwoPi * 1.3 * s)).epsilon(1e-12));
    }
    // d = 3 collapses to sin(w)/w
    for (double s : {0.2, 1.0, 3.7}) {
        double w = kTwoPi * 0.9 * s;
        CHECK(sphere_kernel(3, 0.9, s) == doctest::Approx(std::sin(w) / w).epsilon(1e-12));
    }
}

TEST_CASE("sphere kernel is even in r, bounded, and continuous at zero") {
    for (int d : {1, 2, 3, 4}) {
        for (double r : {0.4, 1.0, 2.6}) {
            for (double s : {0.1, 0.9, 4.2, 11.0}) {
                double k = sphere_kernel(d, r, s);
                CHECK(k == sphere_kernel(d, -r, s));  // exact by construction
                CHECK(std::abs(k) <= 1.0 + 1e-12);
            }
        }
    }
    double prev = 1.0;
    for (double s = 1e-2; s > 1e-12; s *= 0.1) {
        double gap = std::abs(sphere_kernel(3, 2.0, s) - 1.0);
        CHECK(gap <= prev + 1e-15);
        prev = gap;
    }
    CHECK(prev < 1e-6);

    CHECK_THROWS_AS(sphere_kernel(0, 1.0, 1.0), InputError);
    CHECK_THROWS_AS(sphere_kernel(2, 1.0, -0.5), InputError);
}
