#pragma once

#include <string>
#include <vector>

#include "wavediff/wave.hpp"

namespace wavediff {

// Planar superposition whose diffraction is two concentric rings (radii 1 and
// 3) plus two point spots:
//   e^{2 pi i ||x||} + e^{6 pi i ||x||}
//     + (1 + e^{4 sqrt2 pi i x1}) e^{-2 sqrt2 pi i (x1 - x2)}.
WaveSpec builtin_surprised();

// Planar superposition whose diffraction is five unit-mass circles of radius
// 2 arranged as the Olympic rings:
//   (1 + 2 cos(4 pi x1) + (1 + e^{4 pi i x1}) e^{-2 pi i (x1 + x2)}) e^{4 pi i ||x||}.
WaveSpec builtin_olympic();

// Empty two-dimensional spec: a placeholder marking that no wave model is
// shipped for pinwheel-type structures.
WaveSpec builtin_pinwheel_none();

// Lookup by name ("surprised", "olympic", "pinwheel-none").
WaveSpec builtin_spec(const std::string& name);

std::vector<std::string> builtin_names();

}  // namespace wavediff
