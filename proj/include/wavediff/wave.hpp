#pragma once

#include <complex>
#include <span>
#include <utility>
#include <vector>

namespace wavediff {

using Complex = std::complex<double>;

// One unified wave term  c * e^{2 pi i a.x} * e^{2 pi i r ||x||}.
// radial = 0 gives a plane wave, plane = 0 a spherical wave.
struct WaveTerm {
    Complex coeff{1.0, 0.0};
    std::vector<double> plane;  // frequency a, cycles per unit length
    double radial = 0.0;        // radial frequency r, cycles per unit length
};

// Radial profile  s -> Sum_m c_m e^{2 pi i r_m s}  of a spec whose plane
// parts all vanish.  Lifting it back through s = ||x|| reproduces the spec.
class RadialProfile {
public:
    explicit RadialProfile(std::vector<std::pair<Complex, double>> modes)
        : modes_(std::move(modes)) {}

    Complex operator()(double s) const;
    const std::vector<std::pair<Complex, double>>& modes() const { return modes_; }

private:
    std::vector<std::pair<Complex, double>> modes_;  // (coefficient, radial frequency)
};

// Finite superposition of wave terms in a fixed dimension.  Immutable after
// construction; terms are canonically merged (coefficients of terms whose
// (plane, radial) data agree within kMergeTol are added, and merged terms
// with |coeff| < kDropTol are dropped).  The zero spec is legal everywhere.
class WaveSpec {
public:
    static constexpr double kMergeTol = 1e-12;
    static constexpr double kDropTol = 1e-15;

    WaveSpec(int dimension, std::vector<WaveTerm> terms);

    int dimension() const { return dimension_; }
    const std::vector<WaveTerm>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    // Sum_m c_m e^{2 pi i (a_m.x + r_m ||x||)}.  len(x) must equal dimension().
    Complex evaluate(std::span<const double> x) const;

    // The tilde map f~(x) = conj(f(-x)): coefficients conjugate, plane parts
    // survive the combined flip, radial frequencies negate.
    WaveSpec conjugate_reflect() const;

    // Requires every plane part to vanish; throws NotRadialError otherwise.
    RadialProfile radial_profile() const;

    bool is_radial() const;  // all plane parts zero
    bool is_plane() const;   // all radial frequencies zero

    // Sum of |c_m|; bounds |evaluate| everywhere.
    double coeff_abs_sum() const;

    // Largest ||a_m|| + |r_m|: an upper bound on the spec's oscillation rate
    // (cycles per unit length along any line).  Zero for the empty spec.
    double max_frequency() const;

private:
    int dimension_;
    std::vector<WaveTerm> terms_;
};

// alpha f + beta g as a merged spec; dimensions must agree.
WaveSpec linear_combination(Complex alpha, const WaveSpec& f, Complex beta, const WaveSpec& g);

}  // namespace wavediff
