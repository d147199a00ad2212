#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "wavediff/builtins.hpp"
#include "wavediff/closed_form.hpp"
#include "wavediff/errors.hpp"
#include "wavediff/measure.hpp"

using namespace wavediff;

namespace {
constexpr double kTwoPi = 6.28318530717958647692;
}

TEST_CASE("construction canonicalizes") {
    // shared (center, radius) merges
    DiffractionMeasure mu(2, {{{1.0, 0.0}, 0.5, 1.0}, {{1.0, 0.0}, 0.5, 2.0}});
    REQUIRE(mu.components().size() == 1);
    CHECK(mu.components()[0].mass == 3.0);

    // zero mass components vanish
    CHECK(DiffractionMeasure(2, {{{0.0, 0.0}, 1.0, 0.0}}).empty());

    CHECK_THROWS_AS(DiffractionMeasure(2, {{{0.0, 0.0}, 1.0, -1.0}}), InputError);
    CHECK_THROWS_AS(DiffractionMeasure(2, {{{0.0, 0.0}, -1.0, 1.0}}), InputError);
    CHECK_THROWS_AS(DiffractionMeasure(2, {{{0.0}, 0.0, 1.0}}), InputError);
}

TEST_CASE("one-dimensional components become point pairs") {
    DiffractionMeasure mu(1, {{{0.5}, 1.5, 1.0}});
    REQUIRE(mu.components().size() == 2);
    for (const auto& c : mu.components()) {
        CHECK(c.radius == 0.0);
        CHECK(c.mass == 0.5);
        CHECK((c.center[0] == -1.0 || c.center[0] == 2.0));
    }

    // origin-centred pair {-r, r}; the two points carry half the mass each
    DiffractionMeasure theta(1, {{{0.0}, 2.0, 3.0}});
    CHECK(theta.sphere_mass(2.0) == 3.0);
    CHECK(theta.sphere_mass(1.0) == 0.0);
}

TEST_CASE("fourier transform values") {
    // point mass at the origin transforms to 1 everywhere
    DiffractionMeasure delta(2, {{{0.0, 0.0}, 0.0, 1.0}});
    for (double s : {0.0, 0.7, 3.1}) {
        CHECK(std::abs(delta.fourier_at(std::vector<double>{s, -s}) - Complex{1.0, 0.0}) < 1e-15);
    }

    // origin sphere of radius r in d = 2 transforms to J_0(2 pi r ||x||)
    DiffractionMeasure theta(2, {{{0.0, 0.0}, 1.4, 1.0}});
    for (double s : {0.3, 1.0, 2.6}) {
        Complex v = theta.fourier_at(std::vector<double>{s, 0.0});
        CHECK(v.real() == doctest::Approx(std::cyl_bessel_j(0.0, kTwoPi * 1.4 * s)).epsilon(1e-12));
        CHECK(std::abs(v.imag()) < 1e-15);
    }

    // probability measure at the origin argument
    CHECK(theta.fourier_at(std::vector<double>{0.0, 0.0}) == Complex{1.0, 0.0});

    CHECK_THROWS_AS(theta.fourier_at(std::vector<double>{1.0}), InputError);
}

TEST_CASE("total mass and the transform at zero agree exactly") {
    DiffractionMeasure mu(2, {{{1.0, 2.0}, 0.0, 0.25}, {{0.0, 0.0}, 1.0, 2.5}, {{3.0, 0.0}, 1.0, 1.0}});
    CHECK(mu.total_mass() == 3.75);
    CHECK(mu.fourier_at(std::vector<double>{0.0, 0.0}).real() == 3.75);
}

TEST_CASE("sphere mass bookkeeping") {
    // lattice patch: four of the five points sit at distance one
    DiffractionMeasure patch(2, {{{0.0, 0.0}, 0.0, 1.0},
                                 {{1.0, 0.0}, 0.0, 1.0},
                                 {{0.0, 1.0}, 0.0, 1.0},
                                 {{-1.0, 0.0}, 0.0, 1.0},
                                 {{0.0, -1.0}, 0.0, 1.0}});
    CHECK(patch.sphere_mass(1.0) == 4.0);
    CHECK(patch.sphere_mass(0.0) == 1.0);
    CHECK(patch.sphere_mass(0.5) == 0.0);

    DiffractionMeasure theta(2, {{{0.0, 0.0}, 2.0, 3.0}});
    CHECK(theta.sphere_mass(2.0) == 3.0);

    // an off-centre circle meets every origin-centred circle in a null set
    DiffractionMeasure off(2, {{{5.0, 0.0}, 1.0, 1.0}});
    for (double rho = 0.0; rho <= 7.0; rho += 0.173) CHECK(off.sphere_mass(rho) == 0.0);
    CHECK(off.sphere_mass(4.0) == 0.0);
    CHECK(off.sphere_mass(6.0) == 0.0);

    CHECK_THROWS_AS(off.sphere_mass(-1.0), InputError);
}

TEST_CASE("radial decomposition") {
    // point + origin sphere: all concentrated
    DiffractionMeasure conc(2, {{{0.0, 0.0}, 1.0, 1.0}, {{1.0, 0.0}, 0.0, 1.0}});
    auto [rc1, rd1] = radial_decompose(conc);
    CHECK(rc1.components().size() == 2);
    CHECK(rd1.empty());

    // off-centre sphere: all dispersed
    DiffractionMeasure disp(2, {{{3.0, 0.0}, 1.0, 1.0}});
    auto [rc2, rd2] = radial_decompose(disp);
    CHECK(rc2.empty());
    CHECK(rd2.components().size() == 1);

    // empty splits into empties
    auto [rc3, rd3] = radial_decompose(DiffractionMeasure(2, {}));
    CHECK(rc3.empty());
    CHECK(rd3.empty());

    // decomposing either part again is a fixed point
    DiffractionMeasure mixed(3, {{{0.0, 0.0, 0.0}, 1.0, 1.0},
                                 {{1.0, 1.0, 1.0}, 0.5, 2.0},
                                 {{0.5, 0.0, 0.0}, 0.0, 0.75}});
    auto [rc, rd] = radial_decompose(mixed);
    auto [rc_rc, rc_rd] = radial_decompose(rc);
    auto [rd_rc, rd_rd] = radial_decompose(rd);
    CHECK(rc_rc.components().size() == rc.components().size());
    CHECK(rc_rd.empty());
    CHECK(rd_rc.empty());
    CHECK(rd_rd.components().size() == rd.components().size());

    // the dispersed part carries no origin-sphere mass anywhere
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(0.0, 6.0);
    for (int i = 0; i < 200; ++i) CHECK(rd.sphere_mass(u(rng)) == 0.0);
    for (const auto& c : rd.components()) CHECK(rd.sphere_mass(c.radius) == 0.0);

    // every 1D measure is radially concentrated
    DiffractionMeasure line(1, {{{0.4}, 1.0, 1.0}, {{0.0}, 0.5, 1.0}});
    auto [rc4, rd4] = radial_decompose(line);
    CHECK(rd4.empty());
    CHECK(rc4.total_mass() == 2.0);
}

TEST_CASE("mutual singularity") {
    DiffractionMeasure theta1(2, {{{0.0, 0.0}, 1.0, 1.0}});
    DiffractionMeasure point(2, {{{1.0, 0.0}, 0.0, 1.0}});
    CHECK(mutually_singular(theta1, point));

    CHECK_FALSE(mutually_singular(theta1, theta1));

    // same radius, different centres: at most two intersection points
    DiffractionMeasure shifted(2, {{{0.5, 0.0}, 1.0, 2.0}});
    CHECK(mutually_singular(theta1, shifted));

    DiffractionMeasure other_dim(3, {});
    CHECK_THROWS_AS(mutually_singular(theta1, other_dim), InputError);
}

TEST_CASE("diffraction transform matches the reflected autocorrelation") {
    // Fourier pair on this class: the transform of the diffraction measure
    // reproduces the closed-form autocorrelation at the reflected argument.
    std::vector<WaveSpec> corpus;
    corpus.push_back(builtin_surprised());
    corpus.push_back(builtin_olympic());
    corpus.emplace_back(1, std::vector<WaveTerm>{{{0.8, 0.0}, {0.0}, 0.7}, {{0.0, 0.5}, {0.0}, -1.3}});
    corpus.emplace_back(3, std::vector<WaveTerm>{{{1.0, 0.0}, {0.0, 0.0, 0.0}, 1.2},
                                                 {{0.0, -0.6}, {0.0, 0.0, 0.0}, 0.4}});

    std::mt19937 rng(29);
    std::uniform_real_distribution<double> u(-2.5, 2.5);
    for (const auto& spec : corpus) {
        DiffractionMeasure mu = diffraction(spec);
        ClosedAutocorrelation eta = autocorrelation(spec);
        for (int i = 0; i < 25; ++i) {
            std::vector<double> x(spec.dimension());
            for (auto& xi : x) xi = u(rng);
            std::vector<double> nx(x);
            for (auto& xi : nx) xi = -xi;
            CHECK(std::abs(mu.fourier_at(x) - evaluate_autocorr(eta, nx)) <= 1e-12);
        }
    }
}

TEST_CASE("transform is conjugate-symmetric for centre-symmetric measures") {
    DiffractionMeasure mu(2, {{{1.0, 0.5}, 0.0, 1.0},
                              {{-1.0, -0.5}, 0.0, 1.0},
                              {{0.0, 0.0}, 1.3, 0.7}});
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int i = 0; i < 25; ++i) {
        std::vector<double> x{u(rng), u(rng)};
        std::vector<double> nx{-x[0], -x[1]};
        CHECK(std::abs(mu.fourier_at(nx) - std::conj(mu.fourier_at(x))) < 1e-13);
    }
}
