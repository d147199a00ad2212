#include "wavediff/render.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>

#include "wavediff/errors.hpp"

namespace wavediff {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 6.28318530717958647692;

double gauss_2d(double t, double sigma) {
    return std::exp(-0.5 * t * t / (sigma * sigma)) / (kTwoPi * sigma * sigma);
}

double gauss_1d(double t, double sigma) {
    return std::exp(-0.5 * t * t / (sigma * sigma)) / (std::sqrt(kTwoPi) * sigma);
}

double deposit_2d(const DiffractionMeasure& mu, double px, double py, double sigma) {
    double v = 0.0;
    for (const auto& c : mu.components()) {
        double dist = std::hypot(std::abs(px - c.center[0]), std::abs(py - c.center[1]));
        if (c.radius == 0.0) {
            v += c.mass * gauss_2d(dist, sigma);
        } else {
            v += c.mass / (kTwoPi * c.radius) * gauss_1d(dist - c.radius, sigma);
        }
    }
    return v;
}

}  // namespace

double ImageGrid::pixel_pitch() const {
    return (window_max[0] - window_min[0]) / width;
}

ImageGrid rasterize(const DiffractionMeasure& mu, int width, int height,
                    std::array<double, 2> window_min, std::array<double, 2> window_max,
                    const RenderConfig& cfg) {
    if (mu.dimension() > 2) throw UnsupportedError("rasterize: only d = 1 and d = 2 render");
    if (width < 1 || height < 1) throw InputError("rasterize: empty grid");
    if (mu.dimension() == 1 && height != 1)
        throw InputError("rasterize: d = 1 measures render as height-1 profiles");
    if (!(window_min[0] < window_max[0]) || (mu.dimension() == 2 && !(window_min[1] < window_max[1])))
        throw InputError("rasterize: degenerate window");
    if (cfg.gamma <= 0) throw InputError("rasterize: gamma must be positive");

    ImageGrid grid;
    grid.width = width;
    grid.height = height;
    grid.window_min = window_min;
    grid.window_max = window_max;
    grid.pixels.assign(static_cast<std::size_t>(width) * height, 0.0);

    double pitch_x = (window_max[0] - window_min[0]) / width;
    double sigma = cfg.sigma > 0 ? cfg.sigma : 1.5 * pitch_x;

    if (mu.dimension() == 1) {
        for (int i = 0; i < width; ++i) {
            double px = window_min[0] + (i + 0.5) * pitch_x;
            double v = 0.0;
            for (const auto& c : mu.components()) v += c.mass * gauss_1d(px - c.center[0], sigma);
            grid.pixels[i] = v;
        }
    } else {
        double pitch_y = (window_max[1] - window_min[1]) / height;
        auto fill_rows = [&](int row_begin, int row_end) {
            for (int j = row_begin; j < row_end; ++j) {
                // row 0 at the top of the window, matching graymap order
                double py = window_max[1] - (j + 0.5) * pitch_y;
                for (int i = 0; i < width; ++i) {
                    double px = window_min[0] + (i + 0.5) * pitch_x;
                    grid.pixels[static_cast<std::size_t>(j) * width + i] =
                        deposit_2d(mu, px, py, sigma);
                }
            }
        };
        int threads = std::max(1, cfg.threads);
        if (threads == 1) {
            fill_rows(0, height);
        } else {
            std::vector<std::thread> pool;
            int rows_per = (height + threads - 1) / threads;
            for (int t = 0; t < threads; ++t) {
                int lo = t * rows_per, hi = std::min(height, lo + rows_per);
                if (lo < hi) pool.emplace_back(fill_rows, lo, hi);
            }
            for (auto& th : pool) th.join();
        }
    }

    if (cfg.normalize) {
        double peak = *std::max_element(grid.pixels.begin(), grid.pixels.end());
        if (peak > 0) {
            for (auto& p : grid.pixels) p = std::pow(p / peak, cfg.gamma);
        }
    }
    return grid;
}

namespace {

std::uint8_t quantize(double v) {
    double clamped = std::clamp(v, 0.0, 1.0);
    return static_cast<std::uint8_t>(std::floor(255.0 * clamped + 0.5));
}

}  // namespace

std::vector<std::uint8_t> write_pgm(const ImageGrid& grid) {
    std::string header = "P5\n" + std::to_string(grid.width) + " " + std::to_string(grid.height) +
                         "\n255\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    out.reserve(out.size() + grid.pixels.size());
    for (double p : grid.pixels) out.push_back(quantize(p));
    return out;
}

std::vector<std::uint8_t> write_pgm_ascii(const ImageGrid& grid) {
    std::string text = "P2\n" + std::to_string(grid.width) + " " + std::to_string(grid.height) +
                       "\n255\n";
    for (int j = 0; j < grid.height; ++j) {
        for (int i = 0; i < grid.width; ++i) {
            text += std::to_string(quantize(grid.pixels[static_cast<std::size_t>(j) * grid.width + i]));
            text += (i + 1 == grid.width) ? '\n' : ' ';
        }
    }
    return {text.begin(), text.end()};
}

}  // namespace wavediff
