#pragma once

#include <span>
#include <vector>

#include "wavediff/averaging.hpp"
#include "wavediff/measure.hpp"
#include "wavediff/special.hpp"
#include "wavediff/wave.hpp"

namespace wavediff {

// One closed-form autocorrelation term  weight * e^{2 pi i plane.x} * K_d(radial, ||x||).
struct AutocorrTerm {
    double weight = 0.0;  // |c|^2 of the source wave term
    std::vector<double> plane;
    double radial = 0.0;
};

// Exact autocorrelation of a WaveSpec as a finite term list.  Its value at
// x = 0 is the total weight, which equals the squared Besicovitch 2-seminorm
// of the source spec.
struct ClosedAutocorrelation {
    int dimension = 1;
    std::vector<AutocorrTerm> terms;

    double total_weight() const;
};

// True when the closed-form route is licensed for this spec: always in d >= 2;
// in d = 1 only for pure-plane or pure-spherical specs (mixed one-dimensional
// superpositions have nonvanishing cross terms and no closed form here).
bool closed_form_supported(const WaveSpec& spec);

// Termwise autocorrelation (|c_m|^2, a_m, r_m): cross terms between distinct
// merged (plane, radial) pairs vanish.  Throws UnsupportedError for mixed
// one-dimensional specs; the numeric oracle remains available for those.
ClosedAutocorrelation autocorrelation(const WaveSpec& spec);

Complex evaluate_autocorr(const ClosedAutocorrelation& eta, std::span<const double> x,
                          const BesselEvalConfig& cfg = {});

// One diffraction component per term: centre a_m, radius |r_m|, mass |c_m|^2.
DiffractionMeasure diffraction(const WaveSpec& spec);

// ||f-g||_{b,2} (||f-g||_{b,2} + 2 ||f||_{b,2}), evaluated exactly through
// Parseval on the merged coefficients.  Bounds sup_x |eta_f(x) - eta_g(x)|.
// The config parameter fixes the window family the seminorms refer to; the
// computation itself involves no numerics.
double autocorr_stability_bound(const WaveSpec& f, const WaveSpec& g, const AveragingConfig& cfg);

// Inverse construction: one wave term per component with coefficient
// phase * sqrt(mass), plane part = centre, radial frequency = radius.  With
// real_mode set (all components origin-centred spheres, phases +-1) each
// component becomes the real pair  xi sqrt(2C) cos(2 pi a ||x||).  Either way
// diffraction(synthesize_from_diffraction(mu, ...)) == mu.
WaveSpec synthesize_from_diffraction(const DiffractionMeasure& mu, std::span<const Complex> phases,
                                     bool real_mode = false);

}  // namespace wavediff
