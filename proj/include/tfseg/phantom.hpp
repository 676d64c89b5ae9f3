#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "tfseg/field.hpp"

namespace tfseg {

/// A tube: centerline polyline with a linearly interpolated radius profile.
/// Template expansion (helix, branching Y) happens at parse/build time, so
/// generation only ever sees capsule chains.
struct TubeSpec {
    std::vector<std::array<double, 3>> points; ///< z = 0 for 2-D
    double radius = 3.0;       ///< radius at the start of the centerline
    double radius_end = -1.0;  ///< radius at the end; < 0 means constant
    double intensity = 0.9;    ///< foreground level in (0,1]
};

struct NoiseSpec {
    double sigma = 0.0;
    std::uint64_t seed = 0;
};

struct PhantomSpec {
    std::array<int, 3> extents{64, 64, 1};
    int dims = 2;
    double background = 0.1;
    NoiseSpec noise;
    std::vector<TubeSpec> tubes;
};

/// Parse the plain-text phantom description (see README for the keys).
/// Errors name the offending key and line.
PhantomSpec parse_phantom_spec(const std::string& text);
PhantomSpec load_phantom_spec(const std::string& path);

/// Returns (image, ground truth). Truth is the union of tube interiors;
/// the image adds seeded Gaussian noise, clipped to [0,1]. Deterministic:
/// identical spec -> bit-identical output.
std::pair<ImageField, ImageField> gen_phantom(const PhantomSpec& spec);

/// Dice overlap 2|a&b| / (|a|+|b|); 1 when both masks are empty.
double dice(const ImageField& a, const ImageField& b);

/// Built-in specs used by tests and docs.
PhantomSpec branching_y_2d(int n = 256, double sigma = 0.05, std::uint64_t seed = 1234);
PhantomSpec helix_3d(int n = 64, double sigma = 0.05, std::uint64_t seed = 1234);

} // namespace tfseg
