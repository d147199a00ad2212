#pragma once

namespace wavediff {

// Truncation and quadrature policy for the Bessel evaluators.
struct BesselEvalConfig {
    double series_abs_tol = 1e-15;  // stop once the next power-series term falls below this
    int series_max_terms = 200;     // hard cap before reporting non-convergence
    double quadrature_tol = 1e-12;  // adaptive-Simpson target for the integral form
    double series_cutoff_z = 30.0;  // |z| above which the integral form takes over
};

// Gamma function for x > 0.  Satisfies Gamma(x+1) = x Gamma(x).
double gamma_fn(double x);

// J_nu(z) by its power series
//
//   J_nu(z) = (z/2)^nu Sum_m (-1)^m / (m! Gamma(nu+m+1)) (z/2)^{2m},
//
// truncated when the next term drops below cfg.series_abs_tol.  The
// alternating terms grow to ~(e|z|/2)^{|z|}-sized magnitudes before decaying,
// so the recurrence and the accumulation run in compensated double-double
// arithmetic; plain doubles lose all but a few digits near |z| = 30.
//
// nu >= -1/2.  Negative z is only meaningful for integer nu (parity); for
// non-integer nu it is rejected.  Requires |z| <= cfg.series_cutoff_z.
double bessel_j_series(double nu, double z, const BesselEvalConfig& cfg = {});

// J_nu(z) by the Poisson integral representation
//
//   J_nu(z) = (z/2)^nu / (sqrt(pi) Gamma(nu+1/2)) Int_0^pi e^{iz cos t} sin^{2nu} t dt,
//
// valid for nu > -1/2, evaluated with adaptive Simpson quadrature.  The
// imaginary part of the quadrature vanishes analytically and is checked
// against cfg.quadrature_tol.
double bessel_j_integral(double nu, double z, const BesselEvalConfig& cfg = {});

// Regime-split evaluator: series for |z| <= cfg.series_cutoff_z, integral
// representation beyond.
double bessel_j(double nu, double z, const BesselEvalConfig& cfg = {});

// Fourier transform of the uniform probability measure on the sphere of
// radius |r| in R^d, evaluated at distance s >= 0 from the origin:
//
//   K_d(r, s) = Gamma(d/2) J_{d/2-1}(2 pi |r| s) / (pi |r| s)^{d/2-1},
//
// with the removable singularities filled in: K_d(r, 0) = K_d(0, s) = 1.
// Even in r.  For d = 1 this is exactly cos(2 pi r s).
double sphere_kernel(int d, double r, double s, const BesselEvalConfig& cfg = {});

}  // namespace wavediff
