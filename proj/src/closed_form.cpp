#include "wavediff/closed_form.hpp"

#include <cmath>
#include <string>

#include "wavediff/errors.hpp"

namespace wavediff {

namespace {

constexpr double kTwoPi = 6.28318530717958647692;

void require_supported(const WaveSpec& spec, const char* op) {
    if (!closed_form_supported(spec))
        throw UnsupportedError(std::string(op) +
                               ": mixed plane/spherical superpositions in d = 1 have no closed "
                               "form here; use the numeric oracle");
}

}  // namespace

double ClosedAutocorrelation::total_weight() const {
    double sum = 0.0;
    for (const auto& t : terms) sum += t.weight;
    return sum;
}

bool closed_form_supported(const WaveSpec& spec) {
    if (spec.dimension() >= 2) return true;
    return spec.is_plane() || spec.is_radial();
}

ClosedAutocorrelation autocorrelation(const WaveSpec& spec) {
    require_supported(spec, "autocorrelation");
    ClosedAutocorrelation eta;
    eta.dimension = spec.dimension();
    eta.terms.reserve(spec.terms().size());
    for (const auto& t : spec.terms())
        eta.terms.push_back({std::norm(t.coeff), t.plane, t.radial});
    return eta;
}

Complex evaluate_autocorr(const ClosedAutocorrelation& eta, std::span<const double> x,
                          const BesselEvalConfig& cfg) {
    if (static_cast<int>(x.size()) != eta.dimension)
        throw InputError("evaluate_autocorr: point has wrong dimension");
    double norm = 0.0;
    for (double xi : x) norm += xi * xi;
    norm = std::sqrt(norm);

    Complex sum{0.0, 0.0};
    for (const auto& t : eta.terms) {
        double dot = 0.0;
        for (std::size_t i = 0; i < t.plane.size(); ++i) dot += t.plane[i] * x[i];
        sum += t.weight * std::polar(1.0, kTwoPi * dot) *
               sphere_kernel(eta.dimension, t.radial, norm, cfg);
    }
    return sum;
}

DiffractionMeasure diffraction(const WaveSpec& spec) {
    require_supported(spec, "diffraction");
    std::vector<SphericalComponent> components;
    components.reserve(spec.terms().size());
    for (const auto& t : spec.terms())
        components.push_back({t.plane, std::abs(t.radial), std::norm(t.coeff)});
    return DiffractionMeasure(spec.dimension(), std::move(components));
}

double autocorr_stability_bound(const WaveSpec& f, const WaveSpec& g, const AveragingConfig&) {
    if (f.dimension() != g.dimension())
        throw InputError("autocorr_stability_bound: dimensions differ");
    WaveSpec diff = linear_combination({1.0, 0.0}, f, {-1.0, 0.0}, g);
    require_supported(diff, "autocorr_stability_bound");
    require_supported(f, "autocorr_stability_bound");

    // Parseval on the merged coefficients: the unified terms are orthonormal.
    double diff_sq = 0.0, f_sq = 0.0;
    for (const auto& t : diff.terms()) diff_sq += std::norm(t.coeff);
    for (const auto& t : f.terms()) f_sq += std::norm(t.coeff);
    double dist = std::sqrt(diff_sq);
    return dist * (dist + 2.0 * std::sqrt(f_sq));
}

WaveSpec synthesize_from_diffraction(const DiffractionMeasure& mu, std::span<const Complex> phases,
                                     bool real_mode) {
    if (phases.size() != mu.components().size())
        throw InputError("synthesize_from_diffraction: need one phase per component");
    for (const auto& p : phases) {
        if (std::abs(std::abs(p) - 1.0) > 1e-12)
            throw InputError("synthesize_from_diffraction: phases must have unit modulus");
    }

    std::vector<WaveTerm> terms;
    for (std::size_t i = 0; i < phases.size(); ++i) {
        const auto& c = mu.components()[i];
        if (real_mode) {
            bool origin = true;
            for (double v : c.center)
                if (v != 0.0) origin = false;
            if (!origin || c.radius <= 0.0)
                throw InputError(
                    "synthesize_from_diffraction: real_mode needs origin-centred spheres");
            if (std::abs(phases[i].imag()) > 1e-12 || std::abs(std::abs(phases[i].real()) - 1.0) > 1e-12)
                throw InputError("synthesize_from_diffraction: real_mode phases must be +-1");
            // xi sqrt(2C) cos(2 pi a ||x||) split over radial frequencies +-a.
            Complex half = phases[i] * std::sqrt(2.0 * c.mass) * 0.5;
            terms.push_back({half, c.center, c.radius});
            terms.push_back({half, c.center, -c.radius});
        } else {
            terms.push_back({phases[i] * std::sqrt(c.mass), c.center, c.radius});
        }
    }
    return WaveSpec(mu.dimension(), std::move(terms));
}

}  // namespace wavediff
