#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "wavediff/wave.hpp"

namespace wavediff {

struct ClosedAutocorrelation;  // closed_form.hpp

enum class Window {
    ball,             // B_R (in d = 1 the interval [-R, R])
    cube,             // [-R, R]^d
    nonneg_interval,  // [0, R], d = 1 only
};

// Finite-window replacement for every limit: which windows, at which radii,
// and with what quadrature / Monte Carlo budget.  Tensor quadrature is used
// for d <= 2, stratified Monte Carlo for d >= 3.
struct AveragingConfig {
    Window window = Window::ball;
    std::vector<double> radii{25.0, 50.0, 100.0, 200.0};  // strictly increasing
    int quad_points_radial = 32;        // Gauss-Legendre nodes per unit length
    int quad_points_angular = 256;      // uniform angular nodes (d = 2, ball)
    long long mc_samples = 4'000'000;   // samples per radius for d >= 3
    std::uint64_t rng_seed = 20250809;  // Monte Carlo stream seed
    int threads = 1;                    // worker threads; results do not depend on it
};

// One finite-window value per radius of the schedule.  extrapolated is the
// value at the largest radius; error_estimate is the gap between the last two
// radii (infinity when the schedule has a single entry).  std_errors carries
// per-radius Monte Carlo standard errors and stays empty on quadrature paths.
struct ConvergenceReport {
    std::vector<Complex> values;
    std::vector<double> std_errors;
    Complex extrapolated{0.0, 0.0};
    double error_estimate = std::numeric_limits<double>::infinity();
};

// Finite-window reflected Eberlein convolution
//   (1 / vol A_R) Int_{A_R} f(s) conj(g(s - x)) ds
// at each radius of the schedule.
ConvergenceReport eberlein_numeric(const WaveSpec& f, const WaveSpec& g,
                                   std::span<const double> x, const AveragingConfig& cfg);

// Finite-window Besicovitch seminorm  ((1 / vol A_R) Int_{A_R} |f|^p)^{1/p}.
ConvergenceReport besicovitch_seminorm_numeric(const WaveSpec& f, double p,
                                               const AveragingConfig& cfg);

// (1 / vol A_R) Int_{A_R} f conj(g); equals eberlein_numeric at x = 0.
ConvergenceReport mean_inner_product(const WaveSpec& f, const WaveSpec& g,
                                     const AveragingConfig& cfg);

// Windowed Fourier average of a closed-form autocorrelation,
//   (1 / vol A_R) Int_{A_R} e^{-2 pi i k.y} eta(y) dy,
// which isolates the point mass of the diffraction at k.
ConvergenceReport bragg_amplitude_numeric(const ClosedAutocorrelation& eta,
                                          std::span<const double> k, const AveragingConfig& cfg);

// (1 / vol B_R) |Int_{B_R} f(y) e^{-2 pi i k.y} dy|^2 for each grid point k.
// A point mass of the diffraction at k shows up as growth ~ vol(B_R).
std::vector<double> windowed_power_spectrum(const WaveSpec& f, double R,
                                            std::span<const std::vector<double>> grid,
                                            const AveragingConfig& cfg);

using ProfileFn = std::function<Complex(double)>;

// Both finite-R sides of the radial averages identity
//   (1/R) Int_0^R f(r) conj(g(r)) dr   vs   (d/R^d) Int_0^R f(r) conj(g(r)) r^{d-1} dr.
// The two agree in the limit R -> infinity.
std::pair<Complex, Complex> radial_mean_identity_check(const ProfileFn& fprof,
                                                       const ProfileFn& gprof, int d, double R,
                                                       int nodes_per_unit = 32);

}  // namespace wavediff
