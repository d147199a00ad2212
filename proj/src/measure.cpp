#include "wavediff/measure.hpp"

#include <cmath>
#include <string>

#include "wavediff/errors.hpp"

namespace wavediff {

namespace {

constexpr double kTwoPi = 6.28318530717958647692;

bool same_component(const SphericalComponent& a, const SphericalComponent& b, double tol) {
    if (std::abs(a.radius - b.radius) > tol) return false;
    for (std::size_t i = 0; i < a.center.size(); ++i)
        if (std::abs(a.center[i] - b.center[i]) > tol) return false;
    return true;
}

double center_norm(const SphericalComponent& c) {
    double sum = 0.0;
    for (double x : c.center) sum += x * x;
    return std::sqrt(sum);
}

}  // namespace

DiffractionMeasure::DiffractionMeasure(int dimension, std::vector<SphericalComponent> components)
    : dimension_(dimension) {
    if (dimension < 1) throw InputError("DiffractionMeasure: dimension must be >= 1");

    std::vector<SphericalComponent> normalized;
    normalized.reserve(components.size());
    for (auto& c : components) {
        if (static_cast<int>(c.center.size()) != dimension)
            throw InputError("DiffractionMeasure: component center has wrong dimension");
        if (c.radius < 0) throw InputError("DiffractionMeasure: negative radius");
        if (c.mass < 0) throw InputError("DiffractionMeasure: negative mass");
        if (c.mass == 0) continue;
        if (dimension == 1 && c.radius > 0) {
            normalized.push_back({{c.center[0] - c.radius}, 0.0, 0.5 * c.mass});
            normalized.push_back({{c.center[0] + c.radius}, 0.0, 0.5 * c.mass});
        } else {
            normalized.push_back(std::move(c));
        }
    }

    components_.reserve(normalized.size());
    for (auto& c : normalized) {
        bool merged = false;
        for (auto& existing : components_) {
            if (same_component(existing, c, kComponentTol)) {
                existing.mass += c.mass;
                merged = true;
                break;
            }
        }
        if (!merged) components_.push_back(std::move(c));
    }
}

Complex DiffractionMeasure::fourier_at(std::span<const double> x,
                                       const BesselEvalConfig& cfg) const {
    if (static_cast<int>(x.size()) != dimension_)
        throw InputError("fourier_at: point has wrong dimension");
    double norm = 0.0;
    for (double xi : x) norm += xi * xi;
    norm = std::sqrt(norm);

    Complex sum{0.0, 0.0};
    for (const auto& c : components_) {
        double dot = 0.0;
        for (std::size_t i = 0; i < c.center.size(); ++i) dot += c.center[i] * x[i];
        sum += c.mass * std::polar(1.0, -kTwoPi * dot) * sphere_kernel(dimension_, c.radius, norm, cfg);
    }
    return sum;
}

double DiffractionMeasure::total_mass() const {
    double sum = 0.0;
    for (const auto& c : components_) sum += c.mass;
    return sum;
}

double DiffractionMeasure::sphere_mass(double rho) const {
    if (rho < 0) throw InputError("sphere_mass: rho must be >= 0");
    double sum = 0.0;
    for (const auto& c : components_) {
        if (c.radius == 0.0) {
            if (std::abs(center_norm(c) - rho) <= kComponentTol) sum += c.mass;
        } else if (center_norm(c) <= kComponentTol) {
            if (std::abs(c.radius - rho) <= kComponentTol) sum += c.mass;
        }
        // off-centre positive-radius: measure-zero overlap with any S_rho
    }
    return sum;
}

std::pair<DiffractionMeasure, DiffractionMeasure> radial_decompose(const DiffractionMeasure& mu) {
    std::vector<SphericalComponent> rc, rd;
    for (const auto& c : mu.components()) {
        bool concentrated = c.radius == 0.0 || center_norm(c) <= DiffractionMeasure::kComponentTol;
        (concentrated ? rc : rd).push_back(c);
    }
    return {DiffractionMeasure(mu.dimension(), std::move(rc)),
            DiffractionMeasure(mu.dimension(), std::move(rd))};
}

bool mutually_singular(const DiffractionMeasure& mu, const DiffractionMeasure& nu) {
    if (mu.dimension() != nu.dimension())
        throw InputError("mutually_singular: dimensions differ");
    for (const auto& a : mu.components())
        for (const auto& b : nu.components())
            if (same_component(a, b, DiffractionMeasure::kComponentTol)) return false;
    return true;
}

}  // namespace wavediff
