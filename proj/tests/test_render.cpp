#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <string>

#include "wavediff/builtins.hpp"
#include "wavediff/closed_form.hpp"
#include "wavediff/errors.hpp"
#include "wavediff/render.hpp"

using namespace wavediff;

TEST_CASE("point mass peaks at the grid centre") {
    DiffractionMeasure mu(2, {{{0.0, 0.0}, 0.0, 1.0}});
    ImageGrid grid = rasterize(mu, 65, 65, {-2.0, -2.0}, {2.0, 2.0}, {});
    auto it = std::max_element(grid.pixels.begin(), grid.pixels.end());
    auto idx = static_cast<int>(it - grid.pixels.begin());
    CHECK(idx % 65 == 32);
    CHECK(idx / 65 == 32);
    CHECK(*it == 1.0);  // normalized
}

TEST_CASE("unit circle ridge sits one radius from the centre") {
    DiffractionMeasure mu(2, {{{0.0, 0.0}, 1.0, 1.0}});
    ImageGrid grid = rasterize(mu, 256, 256, {-2.0, -2.0}, {2.0, 2.0}, {});
    double pitch = grid.pixel_pitch();

    // every argmax-intensity pixel lies within half a pixel of the circle
    double peak = *std::max_element(grid.pixels.begin(), grid.pixels.end());
    for (int j = 0; j < 256; ++j) {
        for (int i = 0; i < 256; ++i) {
            if (grid.pixels[static_cast<std::size_t>(j) * 256 + i] < peak * (1.0 - 1e-9)) continue;
            double px = grid.window_min[0] + (i + 0.5) * pitch;
            double py = grid.window_max[1] - (j + 0.5) * pitch;
            CHECK(std::abs(std::hypot(px, py) - 1.0) <= 0.5 * pitch + 1e-12);
        }
    }
}

TEST_CASE("ridge radius is recovered within a pixel for narrow kernels") {
    for (double sigma_pitches : {1.0, 2.0}) {
        DiffractionMeasure mu(2, {{{0.0, 0.0}, 1.3, 1.0}});
        RenderConfig cfg;
        cfg.sigma = sigma_pitches * (6.0 / 300.0);
        ImageGrid grid = rasterize(mu, 300, 300, {-3.0, -3.0}, {3.0, 3.0}, cfg);
        double pitch = grid.pixel_pitch();
        double best_v = -1.0, best_r = 0.0;
        for (int j = 0; j < 300; ++j) {
            for (int i = 0; i < 300; ++i) {
                double v = grid.pixels[static_cast<std::size_t>(j) * 300 + i];
                if (v > best_v) {
                    best_v = v;
                    double px = grid.window_min[0] + (i + 0.5) * pitch;
                    double py = grid.window_max[1] - (j + 0.5) * pitch;
                    best_r = std::hypot(px, py);
                }
            }
        }
        CHECK(std::abs(best_r - 1.3) <= pitch);
    }
}

TEST_CASE("origin-centred measures render 90-degree symmetric") {
    DiffractionMeasure mu = diffraction(builtin_surprised());
    auto [rc, rd] = radial_decompose(mu);
    // keep only the origin-centred rings so the picture is exactly symmetric
    std::vector<SphericalComponent> rings;
    for (const auto& c : rc.components())
        if (c.radius > 0) rings.push_back(c);
    DiffractionMeasure sym(2, std::move(rings));

    const int n = 128;
    ImageGrid grid = rasterize(sym, n, n, {-4.0, -4.0}, {4.0, 4.0}, {});
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            // (i, j) -> rotated (j, n-1-i)
            double a = grid.pixels[static_cast<std::size_t>(j) * n + i];
            double b = grid.pixels[static_cast<std::size_t>(n - 1 - i) * n + j];
            CHECK(a == doctest::Approx(b).epsilon(1e-15));
        }
    }
}

TEST_CASE("doubling the masses doubles raw intensities exactly") {
    std::vector<SphericalComponent> comps{{{0.3, -0.2}, 0.8, 0.7}, {{-1.0, 0.5}, 0.0, 0.4}};
    std::vector<SphericalComponent> doubled = comps;
    for (auto& c : doubled) c.mass *= 2.0;

    RenderConfig raw;
    raw.normalize = false;
    ImageGrid a = rasterize(DiffractionMeasure(2, comps), 64, 64, {-2.0, -2.0}, {2.0, 2.0}, raw);
    ImageGrid b = rasterize(DiffractionMeasure(2, doubled), 64, 64, {-2.0, -2.0}, {2.0, 2.0}, raw);
    for (std::size_t i = 0; i < a.pixels.size(); ++i) CHECK(b.pixels[i] == 2.0 * a.pixels[i]);
}

TEST_CASE("graymap bytes are pinned") {
    ImageGrid one;
    one.width = 1;
    one.height = 1;
    one.window_min = {0.0, 0.0};
    one.window_max = {1.0, 1.0};
    one.pixels = {1.0};
    auto bytes = write_pgm(one);
    const std::string header = "P5\n1 1\n255\n";
    REQUIRE(bytes.size() == header.size() + 1);
    CHECK(std::equal(header.begin(), header.end(), bytes.begin()));
    CHECK(bytes.back() == 0xFF);

    ImageGrid two = one;
    two.width = 2;
    two.pixels = {0.0, 0.5};
    auto b2 = write_pgm(two);
    REQUIRE(b2.size() == std::string("P5\n2 1\n255\n").size() + 2);
    CHECK(b2[b2.size() - 2] == 0x00);
    CHECK(b2[b2.size() - 1] == 0x80);  // round-half-up: 127.5 -> 128

    // header round-trips
    int w = 0, h = 0, maxv = 0;
    REQUIRE(std::sscanf(reinterpret_cast<const char*>(b2.data()), "P5\n%d %d\n%d\n", &w, &h, &maxv) == 3);
    CHECK(w == 2);
    CHECK(h == 1);
    CHECK(maxv == 255);

    // text form quantizes identically
    auto ascii = write_pgm_ascii(two);
    std::string text(ascii.begin(), ascii.end());
    CHECK(text == "P2\n2 1\n255\n0 128\n");
}

TEST_CASE("one-dimensional measures render as a profile strip") {
    DiffractionMeasure mu(1, {{{0.0}, 1.0, 1.0}});  // point pair at -1 and 1
    ImageGrid grid = rasterize(mu, 200, 1, {-2.0, 0.0}, {2.0, 1.0}, {});
    REQUIRE(grid.pixels.size() == 200);
    double peak = *std::max_element(grid.pixels.begin(), grid.pixels.end());
    for (int i = 0; i < 200; ++i) {
        if (grid.pixels[i] < peak * (1.0 - 1e-9)) continue;
        double px = grid.window_min[0] + (i + 0.5) * grid.pixel_pitch();
        CHECK(std::abs(std::abs(px) - 1.0) <= 0.5 * grid.pixel_pitch() + 1e-12);
    }
}

TEST_CASE("render input validation") {
    DiffractionMeasure d3(3, {{{0.0, 0.0, 0.0}, 1.0, 1.0}});
    CHECK_THROWS_AS(rasterize(d3, 10, 10, {-1.0, -1.0}, {1.0, 1.0}, {}), UnsupportedError);

    DiffractionMeasure d2(2, {{{0.0, 0.0}, 0.0, 1.0}});
    CHECK_THROWS_AS(rasterize(d2, 10, 10, {1.0, -1.0}, {-1.0, 1.0}, {}), InputError);
    CHECK_THROWS_AS(rasterize(d2, 0, 10, {-1.0, -1.0}, {1.0, 1.0}, {}), InputError);

    RenderConfig bad;
    bad.gamma = 0.0;
    CHECK_THROWS_AS(rasterize(d2, 10, 10, {-1.0, -1.0}, {1.0, 1.0}, bad), InputError);
}
