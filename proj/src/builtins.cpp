#include "wavediff/builtins.hpp"

#include <cmath>

#include "wavediff/errors.hpp"

namespace wavediff {

WaveSpec builtin_surprised() {
    const double s = std::sqrt(2.0);
    std::vector<WaveTerm> terms{
        {{1.0, 0.0}, {0.0, 0.0}, 1.0},  // e^{2 pi i ||x||}
        {{1.0, 0.0}, {0.0, 0.0}, 3.0},  // e^{6 pi i ||x||}
        {{1.0, 0.0}, {-s, s}, 0.0},     // e^{-2 sqrt2 pi i (x1 - x2)}
        {{1.0, 0.0}, {s, s}, 0.0},      // e^{4 sqrt2 pi i x1} e^{-2 sqrt2 pi i (x1 - x2)}
    };
    return WaveSpec(2, std::move(terms));
}

WaveSpec builtin_olympic() {
    // The prefactor 1 + 2 cos(4 pi x1) + (1 + e^{4 pi i x1}) e^{-2 pi i (x1 + x2)}
    // expands into five unit plane waves; the common factor e^{4 pi i ||x||}
    // shifts each onto radial frequency 2.
    std::vector<WaveTerm> terms{
        {{1.0, 0.0}, {0.0, 0.0}, 2.0},
        {{1.0, 0.0}, {2.0, 0.0}, 2.0},
        {{1.0, 0.0}, {-2.0, 0.0}, 2.0},
        {{1.0, 0.0}, {-1.0, -1.0}, 2.0},
        {{1.0, 0.0}, {1.0, -1.0}, 2.0},
    };
    return WaveSpec(2, std::move(terms));
}

WaveSpec builtin_pinwheel_none() { return WaveSpec(2, {}); }

WaveSpec builtin_spec(const std::string& name) {
    if (name == "surprised") return builtin_surprised();
    if (name == "olympic") return builtin_olympic();
    if (name == "pinwheel-none") return builtin_pinwheel_none();
    throw InputError("unknown builtin spec: " + name);
}

std::vector<std::string> builtin_names() { return {"surprised", "olympic", "pinwheel-none"}; }

}  // namespace wavediff
