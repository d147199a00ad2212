#pragma once

#include <span>
#include <utility>
#include <vector>

#include "wavediff/special.hpp"
#include "wavediff/wave.hpp"

namespace wavediff {

// One weighted component of a diffraction measure: radius = 0 encodes the
// point mass  mass * delta_center, radius > 0 the uniform probability measure
// on the sphere of that radius shifted to center, scaled by mass.
struct SphericalComponent {
    std::vector<double> center;
    double radius = 0.0;
    double mass = 0.0;
};

// Finite sum of weighted uniform sphere measures and point masses.  Immutable
// after construction.  Canonicalization at construction:
//   - in d = 1 every positive-radius component splits into the two point
//     masses mass/2 at center +- radius (the 0-sphere is the pair {-r, r});
//   - components sharing (center, radius) within kComponentTol merge, masses
//     adding; zero-mass components are dropped.
class DiffractionMeasure {
public:
    static constexpr double kComponentTol = 1e-12;

    DiffractionMeasure(int dimension, std::vector<SphericalComponent> components);

    int dimension() const { return dimension_; }
    const std::vector<SphericalComponent>& components() const { return components_; }
    bool empty() const { return components_.empty(); }

    // Sum_j mass_j e^{-2 pi i center_j.x} K_d(radius_j, ||x||).
    Complex fourier_at(std::span<const double> x, const BesselEvalConfig& cfg = {}) const;

    double total_mass() const;

    // Mass carried by the origin-centred sphere of radius rho: point masses at
    // distance rho plus origin-centred sphere components of radius rho.
    // Off-centre positive-radius components contribute nothing (their
    // intersection with the sphere is lower-dimensional).
    double sphere_mass(double rho) const;

private:
    int dimension_;
    std::vector<SphericalComponent> components_;
};

// Unique split mu = rc + rd with rc radially concentrated (point masses and
// origin-centred spheres; in d = 1 everything) and rd radially dispersed
// (off-centre positive-radius components; sphere_mass identically zero).
std::pair<DiffractionMeasure, DiffractionMeasure> radial_decompose(const DiffractionMeasure& mu);

// True iff no component of mu shares (center, radius) with one of nu.
// Distinct spheres/points of this class intersect in sets that are null for
// both uniform measures.
bool mutually_singular(const DiffractionMeasure& mu, const DiffractionMeasure& nu);

}  // namespace wavediff
