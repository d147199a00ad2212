#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "wavediff/measure.hpp"

namespace wavediff {

// Rectangular grayscale intensity grid with its physical window.
struct ImageGrid {
    int width = 0;
    int height = 0;
    std::array<double, 2> window_min{0.0, 0.0};
    std::array<double, 2> window_max{0.0, 0.0};
    std::vector<double> pixels;  // row-major, width * height, nonnegative

    double pixel_pitch() const;  // physical extent of one pixel along x
};

struct RenderConfig {
    double sigma = 0.0;      // Gaussian width, physical units; <= 0 picks 1.5 pixel pitches
    double gamma = 0.5;      // display exponent applied after normalization
    bool normalize = true;   // scale to max 1 before applying gamma
    int threads = 1;         // row-parallel deposition; output does not depend on it
};

// Rasterize a diffraction measure: point components deposit a normalized 2D
// Gaussian spot, circle components a signed-distance Gaussian ridge with
// per-arc-length weight mass/(2 pi rho); both integrate to the component mass
// as sigma -> 0.  d = 2 only; d = 1 measures render as a height-1 intensity
// profile.  Higher dimensions are rejected.
ImageGrid rasterize(const DiffractionMeasure& mu, int width, int height,
                    std::array<double, 2> window_min, std::array<double, 2> window_max,
                    const RenderConfig& cfg);

// Binary portable graymap: header "P5\n{width} {height}\n255\n" followed by
// one byte per pixel, row-major, value round(255 * clamp(pixel, 0, 1)) with
// round-half-up.  Bit-exact for identical inputs.
std::vector<std::uint8_t> write_pgm(const ImageGrid& grid);

// Plain-text variant (P2) with identical quantization.
std::vector<std::uint8_t> write_pgm_ascii(const ImageGrid& grid);

}  // namespace wavediff
