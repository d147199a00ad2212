#include "wavediff/averaging.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <random>
#include <string>
#include <thread>

#include "wavediff/closed_form.hpp"
#include "wavediff/errors.hpp"

namespace wavediff {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 6.28318530717958647692;

// ---------------------------------------------------------------------------
// Gauss-Legendre rules
// ---------------------------------------------------------------------------

struct GLRule {
    std::vector<double> nodes;    // on (-1, 1)
    std::vector<double> weights;
};

// Newton iteration on P_n; nodes are symmetric, computed for one half.
GLRule make_gl_rule(int n) {
    GLRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.weights[i] = w;
        rule.nodes[n - 1 - i] = x;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

const GLRule& gl_rule(int n) {
    static std::mutex mtx;
    static std::map<int, GLRule> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, make_gl_rule(n)).first;
    return it->second;
}

// Composite rule over [a, b]: the interval is split at the given breakpoints
// and into panels of length <= 1, each carrying nodes_per_unit GL nodes.
struct Composite1D {
    std::vector<double> nodes;
    std::vector<double> weights;
};

Composite1D composite_gl(double a, double b, std::span<const double> breaks, int nodes_per_unit) {
    std::vector<double> edges{a, b};
    for (double t : breaks)
        if (t > a + 1e-14 && t < b - 1e-14) edges.push_back(t);
    std::sort(edges.begin(), edges.end());

    const GLRule& rule = gl_rule(nodes_per_unit);
    Composite1D out;
    out.nodes.reserve(static_cast<std::size_t>((b - a) * nodes_per_unit) + rule.nodes.size());
    out.weights.reserve(out.nodes.capacity());
    for (std::size_t e = 0; e + 1 < edges.size(); ++e) {
        double lo = edges[e], hi = edges[e + 1];
        if (hi - lo < 1e-14) continue;
        int panels = std::max(1, static_cast<int>(std::ceil(hi - lo)));
        double h = (hi - lo) / panels;
        for (int p = 0; p < panels; ++p) {
            double mid = lo + (p + 0.5) * h;
            for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
                out.nodes.push_back(mid + 0.5 * h * rule.nodes[i]);
                out.weights.push_back(0.5 * h * rule.weights[i]);
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Config validation and oscillation budgets
// ---------------------------------------------------------------------------

void validate_config(const AveragingConfig& cfg, int d) {
    if (cfg.radii.empty()) throw InputError("AveragingConfig: radius schedule is empty");
    double prev = 0.0;
    for (double r : cfg.radii) {
        if (!(r > prev)) throw InputError("AveragingConfig: radii must be positive and strictly increasing");
        prev = r;
    }
    if (cfg.quad_points_radial < 2) throw InputError("AveragingConfig: quad_points_radial must be >= 2");
    if (cfg.quad_points_angular < 8) throw InputError("AveragingConfig: quad_points_angular must be >= 8");
    if (cfg.mc_samples < 1) throw InputError("AveragingConfig: mc_samples must be >= 1");
    if (cfg.window == Window::nonneg_interval && d != 1)
        throw InputError("AveragingConfig: the [0, R] window is one-dimensional only");
    if (d >= 3 && cfg.window != Window::ball)
        throw InputError("AveragingConfig: d >= 3 supports ball windows only");
}

// The radial/axis budget: at least 10 nodes per period of the fastest term.
// Only the quadrature paths (d <= 2) consume these nodes, so only they are
// guarded; the Monte Carlo path is unbiased regardless of frequency.
void check_radial_budget(const AveragingConfig& cfg, int d, double cycles_per_unit) {
    if (d > 2) return;
    double needed = 10.0 * cycles_per_unit;
    if (cfg.quad_points_radial < needed)
        throw NumericError("averaging: oscillation budget exceeded; need quad_points_radial >= " +
                           std::to_string(static_cast<int>(std::ceil(needed))));
}

// Angular counterpart for the d = 2 polar grid.
void check_angular_budget(const AveragingConfig& cfg, double cycles_per_radian) {
    double needed = 10.0 * kTwoPi * cycles_per_radian;
    if (cfg.quad_points_angular < needed)
        throw NumericError("averaging: oscillation budget exceeded; need quad_points_angular >= " +
                           std::to_string(static_cast<int>(std::ceil(needed))));
}

double radial_frequency(const WaveSpec& spec) {
    double nu = 0.0;
    for (const auto& t : spec.terms()) nu = std::max(nu, std::abs(t.radial));
    return nu;
}

double pair_distance(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(s);
}

// Oscillation scales of the product integrand f(s) conj(g(s - x)): the planar
// factors combine into e^{2 pi i (a_j - a_k).s}, so only pairwise frequency
// differences matter; the radial factors never cancel.
struct PairFrequencies {
    double planar_diff = 0.0;  // max ||a_j - a_k|| over term pairs
    double radial_sum = 0.0;   // max |r_j| + |r_k|
    double g_radial = 0.0;     // max |r_k| over g alone

    double line() const { return planar_diff + radial_sum; }
};

PairFrequencies pair_frequencies(const WaveSpec& f, const WaveSpec& g) {
    PairFrequencies out;
    out.g_radial = radial_frequency(g);
    for (const auto& tf : f.terms()) {
        for (const auto& tg : g.terms()) {
            out.planar_diff = std::max(out.planar_diff, pair_distance(tf.plane, tg.plane));
            out.radial_sum = std::max(out.radial_sum, std::abs(tf.radial) + std::abs(tg.radial));
        }
    }
    return out;
}

double vec_norm(std::span<const double> x) {
    double s = 0.0;
    for (double xi : x) s += xi * xi;
    return std::sqrt(s);
}

// ---------------------------------------------------------------------------
// Quadrature window averages (d <= 2)
// ---------------------------------------------------------------------------

std::pair<double, double> interval_for(Window w, double R) {
    if (w == Window::nonneg_interval) return {0.0, R};
    return {-R, R};
}

template <typename H>
Complex quad_average_1d(Window w, double R, const AveragingConfig& cfg,
                        std::span<const double> breaks, H&& h) {
    auto [lo, hi] = interval_for(w, R);
    Composite1D q = composite_gl(lo, hi, breaks, cfg.quad_points_radial);
    Complex sum{0.0, 0.0};
    for (std::size_t i = 0; i < q.nodes.size(); ++i) {
        std::array<double, 1> pt{q.nodes[i]};
        sum += q.weights[i] * h(std::span<const double>(pt));
    }
    return sum / (hi - lo);
}

template <typename H>
Complex quad_average_2d_cube(double R, const AveragingConfig& cfg, H&& h) {
    Composite1D q = composite_gl(-R, R, {}, cfg.quad_points_radial);
    Complex sum{0.0, 0.0};
    for (std::size_t j = 0; j < q.nodes.size(); ++j) {
        Complex row{0.0, 0.0};
        for (std::size_t i = 0; i < q.nodes.size(); ++i) {
            std::array<double, 2> pt{q.nodes[i], q.nodes[j]};
            row += q.weights[i] * h(std::span<const double>(pt));
        }
        sum += q.weights[j] * row;
    }
    return sum / (4.0 * R * R);
}

template <typename H>
Complex quad_average_2d_ball(double R, const AveragingConfig& cfg,
                             std::span<const double> radial_breaks, H&& h) {
    Composite1D q = composite_gl(0.0, R, radial_breaks, cfg.quad_points_radial);
    int n_ang = cfg.quad_points_angular;
    Complex sum{0.0, 0.0};
    for (int j = 0; j < n_ang; ++j) {
        double phi = kTwoPi * (j + 0.5) / n_ang;  // midpoint rule: spectral on the circle
        double c = std::cos(phi), s = std::sin(phi);
        Complex ray{0.0, 0.0};
        for (std::size_t i = 0; i < q.nodes.size(); ++i) {
            double rho = q.nodes[i];
            std::array<double, 2> pt{rho * c, rho * s};
            ray += q.weights[i] * rho * h(std::span<const double>(pt));
        }
        sum += ray;
    }
    sum *= kTwoPi / n_ang;
    return sum / (kPi * R * R);
}

// ---------------------------------------------------------------------------
// Stratified Monte Carlo over balls (d >= 3)
// ---------------------------------------------------------------------------

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

struct McMoments {
    double sum_re = 0.0;
    double sum_im = 0.0;
    double sum_abs2 = 0.0;
};

// Mean of h over the ball B_R with the radius stratified over the sample
// index (inverse transform of the d rho^{d-1}/R^d density) and directions
// from normalized Gaussian vectors.  Chunks own independent RNG streams
// derived from (seed, radius index, chunk index), and chunk results combine
// in index order, so the value is bit-identical for any thread count.
// Each worker evaluates its own copy of h: integrands may carry scratch
// state and need not be synchronized.
template <typename H>
std::pair<Complex, double> mc_ball_average(int d, double R, const AveragingConfig& cfg,
                                           std::size_t radius_index, const H& h) {
    const long long n = cfg.mc_samples;
    const long long chunk_size = 1 << 16;
    const std::size_t n_chunks = static_cast<std::size_t>((n + chunk_size - 1) / chunk_size);
    std::vector<McMoments> partials(n_chunks);

    auto run_chunk = [&](std::size_t c, H& local_h) {
        std::uint64_t seed = splitmix64(cfg.rng_seed ^ splitmix64(0x9E37 * (radius_index + 1)) ^
                                        splitmix64(0xC2B2 * (c + 1)));
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        std::normal_distribution<double> gauss(0.0, 1.0);

        McMoments m;
        std::vector<double> pt(d);
        long long lo = static_cast<long long>(c) * chunk_size;
        long long hi = std::min(n, lo + chunk_size);
        for (long long i = lo; i < hi; ++i) {
            double u = (static_cast<double>(i) + unif(rng)) / static_cast<double>(n);
            double rho = R * std::pow(u, 1.0 / d);
            double norm2 = 0.0;
            do {
                norm2 = 0.0;
                for (int k = 0; k < d; ++k) {
                    pt[k] = gauss(rng);
                    norm2 += pt[k] * pt[k];
                }
            } while (norm2 == 0.0);
            double scale = rho / std::sqrt(norm2);
            for (int k = 0; k < d; ++k) pt[k] *= scale;

            Complex v = local_h(std::span<const double>(pt));
            m.sum_re += v.real();
            m.sum_im += v.imag();
            m.sum_abs2 += std::norm(v);
        }
        partials[c] = m;
    };

    int threads = std::max(1, cfg.threads);
    if (threads == 1 || n_chunks == 1) {
        H local = h;
        for (std::size_t c = 0; c < n_chunks; ++c) run_chunk(c, local);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                H local = h;
                for (std::size_t c = t; c < n_chunks; c += threads) run_chunk(c, local);
            });
        }
        for (auto& th : pool) th.join();
    }

    McMoments total;
    for (const auto& m : partials) {
        total.sum_re += m.sum_re;
        total.sum_im += m.sum_im;
        total.sum_abs2 += m.sum_abs2;
    }
    Complex mean{total.sum_re / n, total.sum_im / n};
    double var = std::max(0.0, total.sum_abs2 / n - std::norm(mean));
    return {mean, std::sqrt(var / n)};
}

// ---------------------------------------------------------------------------
// Report assembly
// ---------------------------------------------------------------------------

template <typename PerRadius>  // PerRadius: (R, radius index) -> pair<Complex, double stderr or -1>
ConvergenceReport run_schedule(const AveragingConfig& cfg, PerRadius&& per_radius) {
    ConvergenceReport report;
    report.values.reserve(cfg.radii.size());
    bool any_stderr = false;
    for (std::size_t i = 0; i < cfg.radii.size(); ++i) {
        auto [value, se] = per_radius(cfg.radii[i], i);
        report.values.push_back(value);
        if (se >= 0) any_stderr = true;
        report.std_errors.push_back(se >= 0 ? se : 0.0);
    }
    if (!any_stderr) report.std_errors.clear();
    report.extrapolated = report.values.back();
    if (report.values.size() >= 2)
        report.error_estimate =
            std::abs(report.values[report.values.size() - 1] - report.values[report.values.size() - 2]);
    return report;
}

// Dispatch one windowed average of an arbitrary integrand.
template <typename H>
std::pair<Complex, double> window_average(int d, double R, const AveragingConfig& cfg,
                                          std::size_t radius_index,
                                          std::span<const double> breaks_1d,
                                          std::span<const double> radial_breaks_2d, H&& h) {
    if (d == 1) return {quad_average_1d(cfg.window, R, cfg, breaks_1d, h), -1.0};
    if (d == 2) {
        if (cfg.window == Window::cube) return {quad_average_2d_cube(R, cfg, h), -1.0};
        return {quad_average_2d_ball(R, cfg, radial_breaks_2d, h), -1.0};
    }
    return mc_ball_average(d, R, cfg, radius_index, h);
}

}  // namespace

ConvergenceReport eberlein_numeric(const WaveSpec& f, const WaveSpec& g,
                                   std::span<const double> x, const AveragingConfig& cfg) {
    int d = f.dimension();
    if (g.dimension() != d) throw InputError("eberlein_numeric: spec dimensions differ");
    if (static_cast<int>(x.size()) != d) throw InputError("eberlein_numeric: x has wrong dimension");
    validate_config(cfg, d);
    PairFrequencies freq = pair_frequencies(f, g);
    check_radial_budget(cfg, d, freq.line());
    double xn = vec_norm(x);
    if (d == 2 && cfg.window == Window::ball)
        check_angular_budget(cfg, cfg.radii.back() * freq.planar_diff + xn * freq.g_radial);

    // the scratch buffer travels with the closure so Monte Carlo workers can
    // copy themselves an independent one
    auto h = [&f, &g, x, shifted = std::vector<double>(x.size())](
                 std::span<const double> s) mutable {
        for (std::size_t i = 0; i < s.size(); ++i) shifted[i] = s[i] - x[i];
        return f.evaluate(s) * std::conj(g.evaluate(shifted));
    };

    std::array<double, 2> breaks_1d{0.0, x.empty() ? 0.0 : x[0]};
    std::array<double, 1> radial_breaks{xn};
    return run_schedule(cfg, [&](double R, std::size_t i) {
        return window_average(d, R, cfg, i, breaks_1d, radial_breaks, h);
    });
}

ConvergenceReport besicovitch_seminorm_numeric(const WaveSpec& f, double p,
                                               const AveragingConfig& cfg) {
    if (!(p >= 1.0)) throw InputError("besicovitch_seminorm_numeric: p must be >= 1");
    int d = f.dimension();
    validate_config(cfg, d);
    PairFrequencies freq = pair_frequencies(f, f);
    check_radial_budget(cfg, d, freq.line());
    if (d == 2 && cfg.window == Window::ball)
        check_angular_budget(cfg, cfg.radii.back() * freq.planar_diff);

    auto h = [&](std::span<const double> s) {
        return Complex{std::pow(std::abs(f.evaluate(s)), p), 0.0};
    };

    std::array<double, 1> breaks_1d{0.0};
    ConvergenceReport report = run_schedule(cfg, [&](double R, std::size_t i) {
        return window_average(d, R, cfg, i, breaks_1d, {}, h);
    });
    for (auto& v : report.values) v = Complex{std::pow(v.real(), 1.0 / p), 0.0};
    report.extrapolated = report.values.back();
    if (report.values.size() >= 2)
        report.error_estimate =
            std::abs(report.values[report.values.size() - 1] - report.values[report.values.size() - 2]);
    // Monte Carlo standard errors propagate through the p-th root by the
    // delta method: d/dm (m^{1/p}) = m^{1/p-1}/p.
    if (!report.std_errors.empty()) {
        for (std::size_t i = 0; i < report.std_errors.size(); ++i) {
            double m = std::pow(report.values[i].real(), p);
            if (m > 0) report.std_errors[i] *= std::pow(m, 1.0 / p - 1.0) / p;
        }
    }
    return report;
}

ConvergenceReport mean_inner_product(const WaveSpec& f, const WaveSpec& g,
                                     const AveragingConfig& cfg) {
    std::vector<double> origin(f.dimension(), 0.0);
    return eberlein_numeric(f, g, origin, cfg);
}

ConvergenceReport bragg_amplitude_numeric(const ClosedAutocorrelation& eta,
                                          std::span<const double> k, const AveragingConfig& cfg) {
    int d = eta.dimension;
    if (static_cast<int>(k.size()) != d) throw InputError("bragg_amplitude_numeric: k has wrong dimension");
    validate_config(cfg, d);
    // The k-character combines with each term's plane part into
    // e^{2 pi i (a_m - k).y}; the kernel factor oscillates radially like r_m.
    double planar_diff = 0.0, line_freq = 0.0;
    for (const auto& t : eta.terms) {
        double diff = pair_distance(t.plane, k);
        planar_diff = std::max(planar_diff, diff);
        line_freq = std::max(line_freq, diff + std::abs(t.radial));
    }
    check_radial_budget(cfg, d, line_freq);
    if (d == 2 && cfg.window == Window::ball)
        check_angular_budget(cfg, cfg.radii.back() * planar_diff);

    auto h = [&](std::span<const double> y) {
        double dot = 0.0;
        for (std::size_t i = 0; i < y.size(); ++i) dot += k[i] * y[i];
        return std::polar(1.0, -kTwoPi * dot) * evaluate_autocorr(eta, y);
    };

    std::array<double, 1> breaks_1d{0.0};
    return run_schedule(cfg, [&](double R, std::size_t i) {
        return window_average(d, R, cfg, i, breaks_1d, {}, h);
    });
}

std::vector<double> windowed_power_spectrum(const WaveSpec& f, double R,
                                            std::span<const std::vector<double>> grid,
                                            const AveragingConfig& cfg) {
    int d = f.dimension();
    if (!(R > 0)) throw InputError("windowed_power_spectrum: R must be positive");
    AveragingConfig ball_cfg = cfg;
    ball_cfg.window = Window::ball;  // the spectrum is defined over B_R
    ball_cfg.radii = {R};
    validate_config(ball_cfg, d);

    double volume;
    if (d == 1) volume = 2.0 * R;
    else if (d == 2) volume = kPi * R * R;
    else volume = std::pow(kPi, 0.5 * d) * std::pow(R, d) / std::tgamma(0.5 * d + 1.0);

    std::vector<double> out;
    out.reserve(grid.size());
    std::array<double, 1> breaks_1d{0.0};
    for (const auto& k : grid) {
        if (static_cast<int>(k.size()) != d)
            throw InputError("windowed_power_spectrum: grid point has wrong dimension");
        double planar_diff = 0.0, line_freq = 0.0;
        for (const auto& t : f.terms()) {
            double diff = pair_distance(t.plane, k);
            planar_diff = std::max(planar_diff, diff);
            line_freq = std::max(line_freq, diff + std::abs(t.radial));
        }
        check_radial_budget(ball_cfg, d, line_freq);
        if (d == 2) check_angular_budget(ball_cfg, R * planar_diff);
        auto h = [&](std::span<const double> y) {
            double dot = 0.0;
            for (std::size_t i = 0; i < y.size(); ++i) dot += k[i] * y[i];
            return f.evaluate(y) * std::polar(1.0, -kTwoPi * dot);
        };
        auto [mean, se] = window_average(d, R, ball_cfg, 0, breaks_1d, {}, h);
        (void)se;
        out.push_back(volume * std::norm(mean));
    }
    return out;
}

std::pair<Complex, Complex> radial_mean_identity_check(const ProfileFn& fprof,
                                                       const ProfileFn& gprof, int d, double R,
                                                       int nodes_per_unit) {
    if (d < 1) throw InputError("radial_mean_identity_check: d must be >= 1");
    if (!(R > 0)) throw InputError("radial_mean_identity_check: R must be positive");
    if (nodes_per_unit < 2) throw InputError("radial_mean_identity_check: too few nodes");

    Composite1D q = composite_gl(0.0, R, {}, nodes_per_unit);
    Complex flat{0.0, 0.0}, weighted{0.0, 0.0};
    for (std::size_t i = 0; i < q.nodes.size(); ++i) {
        double r = q.nodes[i];
        Complex v = fprof(r) * std::conj(gprof(r));
        flat += q.weights[i] * v;
        weighted += q.weights[i] * v * std::pow(r, d - 1);
    }
    return {flat / R, weighted * (static_cast<double>(d) / std::pow(R, d))};
}

}  // namespace wavediff
