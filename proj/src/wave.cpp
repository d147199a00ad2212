#include "wavediff/wave.hpp"

#include <cmath>
#include <string>

#include "wavediff/errors.hpp"

namespace wavediff {

namespace {

constexpr double kTwoPi = 6.28318530717958647692;

bool matches(const WaveTerm& a, const WaveTerm& b, double tol) {
    if (std::abs(a.radial - b.radial) > tol) return false;
    for (std::size_t i = 0; i < a.plane.size(); ++i)
        if (std::abs(a.plane[i] - b.plane[i]) > tol) return false;
    return true;
}

}  // namespace

Complex RadialProfile::operator()(double s) const {
    Complex sum{0.0, 0.0};
    for (const auto& [coeff, r] : modes_) sum += coeff * std::polar(1.0, kTwoPi * r * s);
    return sum;
}

WaveSpec::WaveSpec(int dimension, std::vector<WaveTerm> terms) : dimension_(dimension) {
    if (dimension < 1) throw InputError("WaveSpec: dimension must be >= 1");
    terms_.reserve(terms.size());
    for (auto& t : terms) {
        if (static_cast<int>(t.plane.size()) != dimension)
            throw InputError("WaveSpec: plane vector length " + std::to_string(t.plane.size()) +
                             " does not match dimension " + std::to_string(dimension));
        bool merged = false;
        for (auto& existing : terms_) {
            if (matches(existing, t, kMergeTol)) {
                existing.coeff += t.coeff;
                merged = true;
                break;
            }
        }
        if (!merged) terms_.push_back(std::move(t));
    }
    std::erase_if(terms_, [](const WaveTerm& t) { return std::abs(t.coeff) < kDropTol; });
}

Complex WaveSpec::evaluate(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != dimension_)
        throw InputError("WaveSpec::evaluate: point has wrong dimension");
    double norm = 0.0;
    for (double xi : x) norm += xi * xi;
    norm = std::sqrt(norm);

    Complex sum{0.0, 0.0};
    for (const auto& t : terms_) {
        double dot = 0.0;
        for (std::size_t i = 0; i < t.plane.size(); ++i) dot += t.plane[i] * x[i];
        sum += t.coeff * std::polar(1.0, kTwoPi * (dot + t.radial * norm));
    }
    return sum;
}

WaveSpec WaveSpec::conjugate_reflect() const {
    std::vector<WaveTerm> reflected = terms_;
    for (auto& t : reflected) {
        t.coeff = std::conj(t.coeff);
        t.radial = -t.radial;
    }
    return WaveSpec(dimension_, std::move(reflected));
}

RadialProfile WaveSpec::radial_profile() const {
    if (!is_radial())
        throw NotRadialError("radial_profile: spec has a nonzero plane part");
    std::vector<std::pair<Complex, double>> modes;
    modes.reserve(terms_.size());
    for (const auto& t : terms_) modes.emplace_back(t.coeff, t.radial);
    return RadialProfile(std::move(modes));
}

bool WaveSpec::is_radial() const {
    for (const auto& t : terms_)
        for (double a : t.plane)
            if (a != 0.0) return false;
    return true;
}

bool WaveSpec::is_plane() const {
    for (const auto& t : terms_)
        if (t.radial != 0.0) return false;
    return true;
}

double WaveSpec::coeff_abs_sum() const {
    double sum = 0.0;
    for (const auto& t : terms_) sum += std::abs(t.coeff);
    return sum;
}

double WaveSpec::max_frequency() const {
    double freq = 0.0;
    for (const auto& t : terms_) {
        double norm = 0.0;
        for (double a : t.plane) norm += a * a;
        freq = std::max(freq, std::sqrt(norm) + std::abs(t.radial));
    }
    return freq;
}

WaveSpec linear_combination(Complex alpha, const WaveSpec& f, Complex beta, const WaveSpec& g) {
    if (f.dimension() != g.dimension())
        throw InputError("linear_combination: dimensions differ");
    std::vector<WaveTerm> terms;
    terms.reserve(f.terms().size() + g.terms().size());
    for (auto t : f.terms()) {
        t.coeff *= alpha;
        terms.push_back(std::move(t));
    }
    for (auto t : g.terms()) {
        t.coeff *= beta;
        terms.push_back(std::move(t));
    }
    return WaveSpec(f.dimension(), std::move(terms));
}

}  // namespace wavediff
