#include "wavediff/special.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include "wavediff/errors.hpp"

namespace wavediff {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_config(const BesselEvalConfig& cfg) {
    if (!(cfg.series_abs_tol > 0) || !(cfg.quadrature_tol > 0) || !(cfg.series_cutoff_z > 0))
        throw InputError("BesselEvalConfig: tolerances and series_cutoff_z must be positive");
    if (cfg.series_max_terms <= 0)
        throw InputError("BesselEvalConfig: series_max_terms must be positive");
}

bool is_integer(double x) { return x == std::floor(x); }

// --- double-double helpers (Dekker/Knuth error-free transforms) ---

struct dd {
    double hi = 0.0;
    double lo = 0.0;
};

dd two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

dd two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

dd dd_add(dd a, dd b) {
    dd s = two_sum(a.hi, b.hi);
    return two_sum(s.hi, s.lo + a.lo + b.lo);
}

dd dd_mul(dd a, double b) {
    dd p = two_prod(a.hi, b);
    return two_sum(p.hi, p.lo + a.lo * b);
}

dd dd_div(dd a, double b) {
    double q = a.hi / b;
    dd p = two_prod(q, b);
    double r = ((a.hi - p.hi) - p.lo + a.lo) / b;
    return two_sum(q, r);
}

// Parity factor for J_nu at negative arguments: J_n(-z) = (-1)^n J_n(z) for
// integer n.  Non-integer orders have no real value at z < 0.
double negative_z_sign(double nu, double z, const char* op) {
    if (z >= 0) return 1.0;
    if (!is_integer(nu))
        throw InputError(std::string(op) + ": negative argument with non-integer order");
    return (static_cast<long long>(nu) % 2 == 0) ? 1.0 : -1.0;
}

// Adaptive Simpson for a complex integrand, classic tolerance-splitting form.
template <typename F>
std::complex<double> simpson_step(const F& f, double a, double b,
                                  std::complex<double> fa, std::complex<double> fm,
                                  std::complex<double> fb, std::complex<double> whole,
                                  double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    std::complex<double> flm = f(lm), frm = f(rm);
    std::complex<double> left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    std::complex<double> right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    std::complex<double> sum = left + right;
    if (std::abs(sum - whole) <= 15.0 * tol) return sum + (sum - whole) / 15.0;
    if (depth <= 0) throw NumericError("bessel_j_integral: adaptive Simpson depth cap reached");
    return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

template <typename F>
std::complex<double> adaptive_simpson(const F& f, double a, double b, double tol, int max_depth) {
    std::complex<double> fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    std::complex<double> whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_step(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

}  // namespace

double gamma_fn(double x) {
    if (!(x > 0)) throw InputError("gamma_fn: argument must be positive");
    return std::tgamma(x);
}

double bessel_j_series(double nu, double z, const BesselEvalConfig& cfg) {
    check_config(cfg);
    if (nu < -0.5) throw InputError("bessel_j_series: order must be >= -1/2");
    if (std::abs(z) > cfg.series_cutoff_z)
        throw InputError("bessel_j_series: |z| exceeds series_cutoff_z");
    double sign = negative_z_sign(nu, z, "bessel_j_series");
    double az = std::abs(z);

    double half = 0.5 * az;
    // Leading factor (z/2)^nu / Gamma(nu+1).  Its relative error scales the
    // whole sum and never gets amplified by the alternating cancellation.
    double t0 = (half == 0.0 && nu == 0.0) ? 1.0
                                           : std::pow(half, nu) / std::tgamma(nu + 1.0);
    if (az == 0.0) return nu == 0.0 ? 1.0 : 0.0;

    dd term{t0, 0.0};
    dd sum = term;
    double h2 = half * half;
    for (int m = 1; m <= cfg.series_max_terms; ++m) {
        term = dd_div(dd_mul(term, -h2), m * (nu + m));
        sum = dd_add(sum, term);
        if (std::abs(term.hi) < cfg.series_abs_tol) return sign * (sum.hi + sum.lo);
    }
    throw NumericError("bessel_j_series: no convergence within series_max_terms");
}

double bessel_j_integral(double nu, double z, const BesselEvalConfig& cfg) {
    check_config(cfg);
    if (!(nu > -0.5)) throw InputError("bessel_j_integral: order must be > -1/2");
    // sin^{2nu} is endpoint-singular for negative orders; closed quadrature
    // cannot sample it.  Nothing in this artifact needs that range (d = 1
    // bypasses the kernel ratio entirely), so reject it.
    if (nu < 0.0) throw InputError("bessel_j_integral: negative orders are not evaluated here");
    double sign = negative_z_sign(nu, z, "bessel_j_integral");
    double az = std::abs(z);

    auto integrand = [az, nu](double t) {
        double s = std::sin(t);
        double w = (nu == 0.0) ? 1.0 : std::pow(s, 2.0 * nu);
        return std::polar(w, az * std::cos(t));
    };
    std::complex<double> integral = adaptive_simpson(integrand, 0.0, kPi, cfg.quadrature_tol, 40);
    if (std::abs(integral.imag()) > cfg.quadrature_tol)
        throw NumericError("bessel_j_integral: imaginary part exceeds quadrature_tol");

    double prefactor = (az == 0.0 && nu == 0.0)
                           ? 1.0 / (std::sqrt(kPi) * std::tgamma(nu + 0.5))
                           : std::pow(0.5 * az, nu) / (std::sqrt(kPi) * std::tgamma(nu + 0.5));
    return sign * prefactor * integral.real();
}

double bessel_j(double nu, double z, const BesselEvalConfig& cfg) {
    if (std::abs(z) <= cfg.series_cutoff_z) return bessel_j_series(nu, z, cfg);
    return bessel_j_integral(nu, z, cfg);
}

double sphere_kernel(int d, double r, double s, const BesselEvalConfig& cfg) {
    if (d < 1) throw InputError("sphere_kernel: dimension must be >= 1");
    if (!(s >= 0)) throw InputError("sphere_kernel: s must be >= 0");
    if (d == 1) return std::cos(2.0 * kPi * r * s);

    double w = 2.0 * kPi * std::abs(r) * s;
    double nu = 0.5 * d - 1.0;
    if (w < 1e-8) {
        // First three terms of the even ratio; avoids 0/0 at the removable
        // singularity.
        double q = 0.25 * w * w;
        return 1.0 - q / (nu + 1.0) * (1.0 - q / (2.0 * (nu + 2.0)));
    }
    return gamma_fn(0.5 * d) * bessel_j(nu, w, cfg) / std::pow(0.5 * w, nu);
}

}  // namespace wavediff
