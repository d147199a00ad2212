#include "wavediff/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <random>
#include <sstream>

#include "wavediff/averaging.hpp"
#include "wavediff/builtins.hpp"
#include "wavediff/closed_form.hpp"
#include "wavediff/measure.hpp"
#include "wavediff/render.hpp"
#include "wavediff/wave.hpp"

namespace wavediff {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 6.28318530717958647692;

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

WaveSpec spherical_wave(int d, double r, Complex c = {1.0, 0.0}) {
    return WaveSpec(d, {{c, std::vector<double>(d, 0.0), r}});
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

// Accumulates the worst case over subchecks of one criterion.
struct Worst {
    double measured = 0.0;
    double bound = std::numeric_limits<double>::infinity();
    bool pass = true;

    void take(double value, double limit) {
        if (limit - value < bound - measured) {
            measured = value;
            bound = limit;
        }
        if (value > limit) pass = false;
    }
    void require(bool ok) {
        if (!ok) pass = false;
    }
};

CheckResult finish(int id, std::string name, Worst w, const Timer& t, std::string detail,
                   double runtime_limit = 0.0) {
    CheckResult r;
    r.id = id;
    r.name = std::move(name);
    r.seconds = t.seconds();
    if (runtime_limit > 0 && r.seconds > runtime_limit) {
        w.pass = false;
        detail += " [runtime " + fmt(r.seconds) + "s over " + fmt(runtime_limit) + "s limit]";
    }
    r.pass = w.pass;
    r.measured = w.measured;
    r.bound = std::isfinite(w.bound) ? w.bound : 0.0;
    r.margin = r.bound - r.measured;
    r.detail = std::move(detail);
    return r;
}

// 1. d = 1 spherical autocorrelation limit cos(2 pi x) at R = 200.
CheckResult check_autocorr_1d(const VerifyOptions&) {
    Timer t;
    WaveSpec f = spherical_wave(1, 1.0);
    AveragingConfig cfg;
    cfg.window = Window::ball;
    cfg.radii = {200.0};
    Worst w;
    std::ostringstream detail;
    for (double x : {0.0, 0.3, 0.7, 1.5}) {
        double v = std::abs(eberlein_numeric(f, f, std::vector<double>{x}, cfg).extrapolated -
                            Complex{std::cos(kTwoPi * x), 0.0});
        w.take(v, 0.02);
        detail << "x=" << x << " err=" << fmt(v) << "; ";
    }
    return finish(1, "autocorr_1d_spherical", w, t, detail.str(), 1.0);
}

// 2. d = 1 finite-window average equals the exact finite-L expression.
CheckResult check_finite_window_identity(const VerifyOptions&) {
    Timer t;
    WaveSpec f = spherical_wave(1, 1.0);
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> ux(0.25, 5.0);
    Worst w;
    std::ostringstream detail;
    for (double L : {10.0, 50.0}) {
        AveragingConfig cfg;
        cfg.window = Window::ball;
        cfg.radii = {L};
        double worst = 0.0;
        for (int i = 0; i < 10; ++i) {
            double x = ux(rng);
            Complex e = std::polar(1.0, kTwoPi * x);
            Complex exact = ((L - x) * e + L * std::conj(e) + (e - std::conj(e)) / Complex{0.0, 2.0 * kTwoPi}) /
                            (2.0 * L);
            Complex v = eberlein_numeric(f, f, std::vector<double>{x}, cfg).extrapolated;
            worst = std::max(worst, std::abs(v - exact));
        }
        w.take(worst, 1e-10);
        detail << "L=" << L << " worst=" << fmt(worst) << "; ";
    }
    return finish(2, "finite_window_identity_1d", w, t, detail.str(), 1.0);
}

// 3. d = 2 spherical autocorrelation limit J_0(2 pi s), error shrinking in R.
CheckResult check_autocorr_2d(const VerifyOptions&) {
    Timer t;
    WaveSpec f = spherical_wave(2, 1.0);
    AveragingConfig cfg;
    cfg.radii = {50.0, 200.0};
    Worst w;
    std::ostringstream detail;
    for (double s : {0.0, 0.5, 1.0, 2.0}) {
        auto rep = eberlein_numeric(f, f, std::vector<double>{s, 0.0}, cfg);
        double ref = std::cyl_bessel_j(0.0, kTwoPi * s);
        double err50 = std::abs(rep.values[0] - Complex{ref, 0.0});
        double err200 = std::abs(rep.values[1] - Complex{ref, 0.0});
        w.take(err200, 0.03);
        w.require(err200 < err50 || err200 <= 1e-10);
        detail << "s=" << s << " err50=" << fmt(err50) << " err200=" << fmt(err200) << "; ";
    }
    return finish(3, "autocorr_2d_spherical", w, t, detail.str(), 30.0);
}

// 4. d = 3 Monte Carlo autocorrelation against the half-order kernel.  The
// deviation is held to 3x the larger of the Monte Carlo standard error and
// the last-gap estimate (the finite-R truncation, O(1/R), dominates the
// 4e6-sample noise at R = 40).
CheckResult check_autocorr_3d(const VerifyOptions& opts) {
    Timer t;
    WaveSpec f = spherical_wave(3, 1.0);
    AveragingConfig cfg;
    cfg.radii = {10.0, 20.0, 40.0};
    cfg.mc_samples = 4'000'000;
    cfg.threads = opts.threads;
    Worst w;
    std::ostringstream detail;
    for (double s : {0.25, 0.5, 1.0, 1.5, 2.0}) {
        auto rep = eberlein_numeric(f, f, std::vector<double>{s, 0.0, 0.0}, cfg);
        double ref = std::tgamma(1.5) * std::cyl_bessel_j(0.5, kTwoPi * s) / std::pow(kPi * s, 0.5);
        double err = std::abs(rep.extrapolated - Complex{ref, 0.0});
        double tol = 3.0 * std::max(rep.std_errors.back(), rep.error_estimate);
        w.take(err, tol);
        detail << "s=" << s << " err=" << fmt(err) << " tol=" << fmt(tol) << "; ";
    }
    return finish(4, "autocorr_3d_monte_carlo", w, t, detail.str(), 60.0);
}

// 5. Distinct spherical frequencies are orthogonal in the mean.
CheckResult check_orthogonality(const VerifyOptions&) {
    Timer t;
    AveragingConfig cfg;
    cfg.radii = {50.0, 200.0};
    auto rep = mean_inner_product(spherical_wave(2, 1.0), spherical_wave(2, 2.0), cfg);
    Worst w;
    w.take(std::abs(rep.values[1]), 0.03);
    w.require(std::abs(rep.values[1]) < std::abs(rep.values[0]));
    std::ostringstream detail;
    detail << "|v(50)|=" << fmt(std::abs(rep.values[0])) << " |v(200)|=" << fmt(std::abs(rep.values[1]));
    return finish(5, "spherical_orthogonality_2d", w, t, detail.str());
}

// 6. Bragg amplitudes |c_m|^2 of a trigonometric polynomial.
CheckResult check_bragg(const VerifyOptions&) {
    Timer t;
    WaveSpec f(1, {{{1.0, 0.0}, {0.3}, 0.0}, {{0.5, 0.0}, {1.1}, 0.0}, {{0.0, 0.25}, {-0.7}, 0.0}});
    ClosedAutocorrelation eta = autocorrelation(f);
    AveragingConfig cfg;
    cfg.window = Window::cube;
    cfg.radii = {200.0};
    cfg.quad_points_radial = 40;
    Worst w;
    std::ostringstream detail;
    const double freqs[] = {0.3, 1.1, -0.7};
    const double amps[] = {1.0, 0.25, 0.0625};
    for (int i = 0; i < 3; ++i) {
        Complex v = bragg_amplitude_numeric(eta, std::vector<double>{freqs[i]}, cfg).extrapolated;
        double err = std::abs(v - Complex{amps[i], 0.0});
        w.take(err, 0.02);
        detail << "k=" << freqs[i] << " err=" << fmt(err) << "; ";
    }
    for (double k : {0.5, 2.0}) {
        double v = std::abs(bragg_amplitude_numeric(eta, std::vector<double>{k}, cfg).extrapolated);
        w.take(v, 0.02);
        detail << "off k=" << k << " |v|=" << fmt(v) << "; ";
    }
    return finish(6, "bragg_amplitudes", w, t, detail.str());
}

// 7. Coefficient recovery and Parseval for a 4-term spherical spec.
CheckResult check_parseval(const VerifyOptions&) {
    Timer t;
    const Complex coeffs[] = {{0.9, 0.0}, {0.0, 0.6}, {-0.5, 0.0}, {0.35, 0.35}};
    const double freqs[] = {0.6, 1.1, 1.7, 2.4};
    std::vector<WaveTerm> terms;
    for (int i = 0; i < 4; ++i) terms.push_back({coeffs[i], {0.0, 0.0}, freqs[i]});
    WaveSpec f(2, std::move(terms));

    AveragingConfig cfg;
    cfg.radii = {200.0};
    cfg.quad_points_radial = 64;
    Worst w;
    std::ostringstream detail;
    double mass = 0.0;
    for (int i = 0; i < 4; ++i) {
        Complex c = mean_inner_product(f, spherical_wave(2, freqs[i]), cfg).extrapolated;
        double err = std::abs(c - coeffs[i]);
        w.take(err, 0.02);
        mass += std::norm(coeffs[i]);
        detail << "c" << i << " err=" << fmt(err) << "; ";
    }
    double sn = besicovitch_seminorm_numeric(f, 2.0, cfg).extrapolated.real();
    double parseval_err = std::abs(sn * sn - mass);
    w.take(parseval_err, 0.05);
    detail << "|seminorm^2 - sum|c|^2|=" << fmt(parseval_err);
    return finish(7, "parseval_coefficients", w, t, detail.str());
}

// 8. The Parseval stability bound dominates the sup-distance of closed-form
// autocorrelations.  Exact inequality, no tolerance.
CheckResult check_stability_bound(const VerifyOptions&) {
    Timer t;
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    std::uniform_real_distribution<double> ua(-1.5, 1.5);
    std::uniform_real_distribution<double> ur(0.3, 1.2);
    std::uniform_real_distribution<double> ux(-2.0, 2.0);
    auto random_coeff = [&](double scale) {
        double m = scale * std::sqrt(u01(rng));
        return std::polar(m, kTwoPi * u01(rng));
    };
    auto random_term = [&]() {
        WaveTerm term;
        term.coeff = random_coeff(1.0);
        int kind = static_cast<int>(u01(rng) * 3.0);
        term.plane = (kind == 0 || kind == 2) ? std::vector<double>{ua(rng), ua(rng)}
                                              : std::vector<double>{0.0, 0.0};
        term.radial = (kind == 1 || kind == 2) ? (u01(rng) < 0.5 ? -1 : 1) * ur(rng) : 0.0;
        return term;
    };

    AveragingConfig cfg;
    Worst w;
    double worst_ratio = 0.0;
    for (int pair = 0; pair < 20; ++pair) {
        std::vector<WaveTerm> f_terms;
        int nf = 1 + static_cast<int>(u01(rng) * 3.0);
        for (int i = 0; i < nf; ++i) f_terms.push_back(random_term());
        std::vector<WaveTerm> g_terms = f_terms;
        for (auto& term : g_terms) term.coeff += random_coeff(0.2);
        if (u01(rng) < 0.5) g_terms.push_back(random_term());
        else if (g_terms.size() > 1) g_terms.pop_back();

        WaveSpec f(2, f_terms), g(2, g_terms);
        double bound = autocorr_stability_bound(f, g, cfg);
        ClosedAutocorrelation ef = autocorrelation(f), eg = autocorrelation(g);
        double sup = 0.0;
        for (int i = 0; i < 1000; ++i) {
            std::vector<double> x{ux(rng), ux(rng)};
            sup = std::max(sup, std::abs(evaluate_autocorr(ef, x) - evaluate_autocorr(eg, x)));
        }
        w.take(sup, bound);
        if (bound > 0) worst_ratio = std::max(worst_ratio, sup / bound);
    }
    return finish(8, "autocorr_stability_bound", w, t, "worst sup/bound = " + fmt(worst_ratio));
}

// 9. Radial lift inequality per radius: seminorm_d <= d^{1/p} seminorm_1.
CheckResult check_radial_lift(const VerifyOptions& opts) {
    Timer t;
    std::mt19937 rng(1234);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    std::uniform_real_distribution<double> ur(0.3, 1.4);
    Worst w;
    std::ostringstream detail;
    for (int d : {2, 3}) {
        AveragingConfig cfg;
        cfg.threads = opts.threads;
        if (d == 2) {
            cfg.radii = {25.0, 50.0, 100.0, 200.0};
            cfg.quad_points_angular = 64;
        } else {
            cfg.radii = {10.0, 20.0, 40.0};
            cfg.mc_samples = 1'000'000;
        }
        AveragingConfig cfg1 = cfg;
        cfg1.window = Window::cube;  // the 1D windows [-R, R]

        for (int s = 0; s < 5; ++s) {
            std::vector<WaveTerm> modes;
            int n = 1 + static_cast<int>(u01(rng) * 3.0);
            for (int i = 0; i < n; ++i) {
                double m = std::sqrt(u01(rng));
                double r = (u01(rng) < 0.5 ? -1 : 1) * ur(rng);
                modes.push_back({std::polar(m, kTwoPi * u01(rng)), {}, r});
            }
            auto with_dim = [&](int dim) {
                std::vector<WaveTerm> terms = modes;
                for (auto& term : terms) term.plane.assign(dim, 0.0);
                return WaveSpec(dim, std::move(terms));
            };
            for (double p : {1.0, 2.0}) {
                auto high = besicovitch_seminorm_numeric(with_dim(d), p, cfg);
                auto line = besicovitch_seminorm_numeric(with_dim(1), p, cfg1);
                double scale = std::pow(static_cast<double>(d), 1.0 / p);
                for (std::size_t i = 0; i < cfg.radii.size(); ++i)
                    w.take(high.values[i].real(), scale * line.values[i].real() + 1e-8);
            }
        }
        detail << "d=" << d << " ok; ";
    }
    return finish(9, "radial_lift_inequality", w, t, detail.str());
}

// 10. Both finite-R sides of the radial averages identity at R = 500.
CheckResult check_averages_identity(const VerifyOptions&) {
    Timer t;
    auto wave = [](double r) { return std::polar(1.0, kTwoPi * r); };
    auto [lhs, rhs] = radial_mean_identity_check(wave, wave, 2, 500.0);
    Worst w;
    w.take(std::abs(lhs - rhs), 0.04);
    w.take(std::abs(lhs - Complex{1.0, 0.0}), 0.04);
    w.take(std::abs(rhs - Complex{1.0, 0.0}), 0.04);
    std::ostringstream detail;
    detail << "lhs=" << fmt(lhs.real()) << " rhs=" << fmt(rhs.real());
    return finish(10, "radial_averages_identity", w, t, detail.str());
}

// 11. Radial decomposition on the 12-measure corpus: rc + rd = mu exactly and
// rd assigns no mass to any origin-centred sphere.
CheckResult check_measure_algebra(const VerifyOptions&) {
    Timer t;
    std::vector<DiffractionMeasure> corpus;
    corpus.emplace_back(2, std::vector<SphericalComponent>{{{0.0, 0.0}, 0.0, 1.0}});
    corpus.emplace_back(2, std::vector<SphericalComponent>{{{0.0, 0.0}, 1.0, 2.0}});
    corpus.emplace_back(2, std::vector<SphericalComponent>{{{1.0, 0.0}, 0.0, 1.0},
                                                           {{0.0, 0.0}, 1.0, 0.5},
                                                           {{3.0, 0.0}, 1.0, 1.0}});
    corpus.emplace_back(2, std::vector<SphericalComponent>{{{3.0, 0.0}, 1.0, 1.0}});
    corpus.emplace_back(2, std::vector<SphericalComponent>{{{0.0, 0.0}, 0.0, 1.0},
                                                           {{1.0, 0.0}, 0.0, 1.0},
                                                           {{0.0, 1.0}, 0.0, 1.0},
                                                           {{-1.0, 0.0}, 0.0, 1.0},
                                                           {{0.0, -1.0}, 0.0, 1.0}});
    corpus.push_back(diffraction(builtin_olympic()));
    corpus.emplace_back(1, std::vector<SphericalComponent>{{{0.0}, 2.0, 3.0}});
    corpus.emplace_back(1, std::vector<SphericalComponent>{{{0.5}, 1.5, 1.0}});
    corpus.emplace_back(1, std::vector<SphericalComponent>{{{0.7}, 0.0, 0.25}});
    corpus.emplace_back(3, std::vector<SphericalComponent>{{{0.0, 0.0, 0.0}, 1.0, 1.0}});
    corpus.emplace_back(3, std::vector<SphericalComponent>{{{1.0, 1.0, 1.0}, 0.5, 2.0},
                                                           {{0.0, 0.0, 0.0}, 0.0, 1.0}});
    corpus.push_back(diffraction(builtin_surprised()));

    std::mt19937 rng(5);
    std::uniform_real_distribution<double> urho(0.0, 5.0);
    Worst w;
    for (const auto& mu : corpus) {
        auto [rc, rd] = radial_decompose(mu);
        std::vector<SphericalComponent> merged = rc.components();
        merged.insert(merged.end(), rd.components().begin(), rd.components().end());
        DiffractionMeasure recombined(mu.dimension(), std::move(merged));

        w.require(recombined.components().size() == mu.components().size());
        for (const auto& c : mu.components()) {
            bool found = false;
            for (const auto& rcomp : recombined.components()) {
                if (rcomp.center == c.center && rcomp.radius == c.radius && rcomp.mass == c.mass)
                    found = true;
            }
            w.require(found);
        }

        std::vector<double> rhos;
        for (int i = 0; i < 200; ++i) rhos.push_back(urho(rng));
        for (const auto& c : mu.components()) {
            rhos.push_back(c.radius);
            double cn = 0.0;
            for (double v : c.center) cn += v * v;
            rhos.push_back(std::sqrt(cn));
        }
        for (double rho : rhos) w.take(rd.sphere_mass(rho), 0.0);
    }
    return finish(11, "radial_decomposition_corpus", w, t,
                  std::to_string(corpus.size()) + " measures, exact");
}

// 12. The rendered Olympic diffraction has exactly five ridge maxima at the
// predicted centres and radii.  Centres come from a known-radius circular
// Hough vote; radii are refit per centre as the median ray-maximum.
CheckResult check_olympic_figure(const VerifyOptions& opts) {
    Timer t;
    DiffractionMeasure mu = diffraction(builtin_olympic());
    const int n = 512;
    RenderConfig rc;
    rc.threads = opts.threads;
    ImageGrid grid = rasterize(mu, n, n, {-6.0, -6.0}, {6.0, 6.0}, rc);
    double pitch = grid.pixel_pitch();

    auto pixel_center = [&](int i, int j) {
        return std::array<double, 2>{grid.window_min[0] + (i + 0.5) * pitch,
                                     grid.window_max[1] - (j + 0.5) * pitch};
    };
    auto sample = [&](double x, double y) -> double {
        // bilinear in pixel-centre coordinates
        double fi = (x - grid.window_min[0]) / pitch - 0.5;
        double fj = (grid.window_max[1] - y) / pitch - 0.5;
        int i0 = static_cast<int>(std::floor(fi)), j0 = static_cast<int>(std::floor(fj));
        double ti = fi - i0, tj = fj - j0;
        auto at = [&](int i, int j) -> double {
            if (i < 0 || j < 0 || i >= n || j >= n) return 0.0;
            return grid.pixels[static_cast<std::size_t>(j) * n + i];
        };
        return (1 - ti) * (1 - tj) * at(i0, j0) + ti * (1 - tj) * at(i0 + 1, j0) +
               (1 - ti) * tj * at(i0, j0 + 1) + ti * tj * at(i0 + 1, j0 + 1);
    };

    const double ring_radius = mu.components().front().radius;
    std::vector<double> acc(static_cast<std::size_t>(n) * n, 0.0);
    const int votes = 720;
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            double v = grid.pixels[static_cast<std::size_t>(j) * n + i];
            if (v < 0.05) continue;
            auto [px, py] = pixel_center(i, j);
            for (int a = 0; a < votes; ++a) {
                double th = kTwoPi * a / votes;
                double cx = px + ring_radius * std::cos(th);
                double cy = py + ring_radius * std::sin(th);
                int ci = static_cast<int>(std::floor((cx - grid.window_min[0]) / pitch));
                int cj = static_cast<int>(std::floor((grid.window_max[1] - cy) / pitch));
                if (ci >= 0 && cj >= 0 && ci < n && cj < n)
                    acc[static_cast<std::size_t>(cj) * n + ci] += v;
            }
        }
    }

    double acc_max = *std::max_element(acc.begin(), acc.end());
    std::vector<std::array<double, 2>> peaks;
    for (int j = 1; j + 1 < n; ++j) {
        for (int i = 1; i + 1 < n; ++i) {
            double v = acc[static_cast<std::size_t>(j) * n + i];
            if (v < 0.5 * acc_max) continue;
            bool is_max = true;
            for (int dj = -1; dj <= 1 && is_max; ++dj)
                for (int di = -1; di <= 1; ++di) {
                    if (di == 0 && dj == 0) continue;
                    double u = acc[static_cast<std::size_t>(j + dj) * n + (i + di)];
                    if (u > v || (u == v && (dj < 0 || (dj == 0 && di < 0)))) {
                        is_max = false;
                        break;
                    }
                }
            if (!is_max) continue;
            // centroid refinement over a 5x5 patch
            double wx = 0.0, wy = 0.0, ws = 0.0;
            for (int dj = -2; dj <= 2; ++dj)
                for (int di = -2; di <= 2; ++di) {
                    int ii = i + di, jj = j + dj;
                    if (ii < 0 || jj < 0 || ii >= n || jj >= n) continue;
                    double u = acc[static_cast<std::size_t>(jj) * n + ii];
                    auto [px, py] = pixel_center(ii, jj);
                    wx += u * px;
                    wy += u * py;
                    ws += u;
                }
            peaks.push_back({wx / ws, wy / ws});
        }
    }

    Worst w;
    w.require(peaks.size() == mu.components().size());
    std::ostringstream detail;
    detail << peaks.size() << " ridge maxima; ";
    if (peaks.size() == mu.components().size()) {
        for (const auto& comp : mu.components()) {
            double best = std::numeric_limits<double>::infinity();
            std::array<double, 2> at{};
            for (const auto& p : peaks) {
                double dist = std::hypot(p[0] - comp.center[0], p[1] - comp.center[1]);
                if (dist < best) {
                    best = dist;
                    at = p;
                }
            }
            w.take(best, pitch);

            // median over rays of the maximum-intensity radius
            std::vector<double> ray_radii;
            for (int a = 0; a < votes; ++a) {
                double th = kTwoPi * a / votes;
                double best_v = -1.0, best_r = 0.0;
                for (double r = ring_radius - 1.0; r <= ring_radius + 1.0; r += 0.25 * pitch) {
                    double v = sample(at[0] + r * std::cos(th), at[1] + r * std::sin(th));
                    if (v > best_v) {
                        best_v = v;
                        best_r = r;
                    }
                }
                ray_radii.push_back(best_r);
            }
            std::nth_element(ray_radii.begin(), ray_radii.begin() + ray_radii.size() / 2,
                             ray_radii.end());
            double fitted = ray_radii[ray_radii.size() / 2];
            w.take(std::abs(fitted - comp.radius), pitch);
            detail << "(" << fmt(comp.center[0]) << "," << fmt(comp.center[1]) << ") dc=" << fmt(best)
                   << " dr=" << fmt(std::abs(fitted - comp.radius)) << "; ";
        }
    }
    return finish(12, "olympic_figure", w, t, detail.str(), 5.0);
}

// 13. Homometry: the 1D spherical wave and the balanced plane pair share one
// closed-form autocorrelation.
CheckResult check_homometry(const VerifyOptions& opts) {
    Timer t;
    ClosedAutocorrelation eta_sph = autocorrelation(spherical_wave(1, 1.0));
    double half = 1.0 / std::sqrt(2.0);
    ClosedAutocorrelation eta_pln = autocorrelation(
        WaveSpec(1, {{{half, 0.0}, {1.0}, 0.0}, {{half, 0.0}, {-1.0}, 0.0}}));
    if (opts.inject_fault)
        for (auto& term : eta_pln.terms) term.weight *= 1.001;

    Worst w;
    for (int i = 0; i < 1000; ++i) {
        std::vector<double> x{-5.0 + 10.0 * i / 999.0};
        w.take(std::abs(evaluate_autocorr(eta_sph, x) - evaluate_autocorr(eta_pln, x)), 1e-14);
    }
    return finish(13, "homometry_1d", w, t, "1000 grid points");
}

}  // namespace

std::vector<std::string> verify_check_names() {
    return {"autocorr_1d_spherical",     "finite_window_identity_1d", "autocorr_2d_spherical",
            "autocorr_3d_monte_carlo",   "spherical_orthogonality_2d", "bragg_amplitudes",
            "parseval_coefficients",     "autocorr_stability_bound",   "radial_lift_inequality",
            "radial_averages_identity",  "radial_decomposition_corpus", "olympic_figure",
            "homometry_1d"};
}

std::vector<CheckResult> run_verification(const VerifyOptions& opts) {
    using CheckFn = CheckResult (*)(const VerifyOptions&);
    const CheckFn checks[] = {check_autocorr_1d,      check_finite_window_identity,
                              check_autocorr_2d,      check_autocorr_3d,
                              check_orthogonality,    check_bragg,
                              check_parseval,         check_stability_bound,
                              check_radial_lift,      check_averages_identity,
                              check_measure_algebra,  check_olympic_figure,
                              check_homometry};
    const auto names = verify_check_names();
    std::vector<CheckResult> results;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (!opts.filter.empty() && names[i].find(opts.filter) == std::string::npos) continue;
        results.push_back(checks[i](opts));
    }
    return results;
}

}  // namespace wavediff
