#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tfseg/field.hpp"

namespace tfseg {

enum class ElementType : std::uint8_t { U8, U16, F32 };

/// Sidecar description of a raw volume payload.
struct VolumeHeader {
    std::array<int, 3> extents{1, 1, 1};
    ElementType type = ElementType::U8;
    bool big_endian = false;
    std::array<double, 3> spacing{1.0, 1.0, 1.0};
    std::string data_file; ///< optional payload path, relative to the header
};

/// Triangle mesh in volume index space.
struct Mesh {
    std::vector<std::array<double, 3>> vertices;
    std::vector<std::array<std::uint32_t, 3>> triangles;
    bool empty() const { return triangles.empty(); }
};

/// A closed polyline (first point implicitly follows the last).
using Polyline = std::vector<std::array<double, 2>>;

// ---- readers ----

/// 8/16-bit grayscale PGM (P2 or P5) or grayscale PNG. Raw intensities.
ImageField read_image2d(const std::string& path);

/// Raw payload + text sidecar header (extents/type/endian/spacing), x fastest.
ImageField read_volume3d(const std::string& data_path, const std::string& header_path);

VolumeHeader read_volume_header(const std::string& header_path);

// ---- writers ----

/// 2-D masks as P5 PGM with values {0,255}; 3-D as raw u8 {0,255} + sidecar.
/// For 3-D, `path` names the payload and the header goes to path + ".hdr".
void write_mask(const ImageField& mask, const std::string& path);

void write_pgm(const ImageField& f, const std::string& path, int maxval = 255);
void write_volume_raw_u8(const ImageField& f, const std::string& data_path,
                         const std::string& header_path,
                         std::array<double, 3> spacing = {1, 1, 1});

// ---- contours and surfaces ----

/// Marching squares at level 0.5; closed polylines in pixel coordinates.
std::vector<Polyline> contour2d(const ImageField& mask);

/// SVG 1.1 with the original image embedded as a grayscale PNG layer and the
/// contour polylines drawn on top.
void write_contour_svg(const std::vector<Polyline>& loops, const ImageField& background,
                       const std::string& path);

/// Marching cubes over the 256-case table; consistent outward orientation.
Mesh isosurface3d(const ImageField& field, double level);

/// Wavefront OBJ, v/f records only; vertices scaled by spacing.
void write_obj(const Mesh& mesh, const std::string& path,
               std::array<double, 3> spacing = {1, 1, 1});

} // namespace tfseg
