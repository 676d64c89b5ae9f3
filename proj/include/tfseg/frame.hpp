#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "tfseg/field.hpp"

namespace tfseg {

enum class BackendKind {
    BSplineFramelet, ///< single-level undecimated piecewise-linear framelet, 2-D/3-D
    DualTreeCWT2D,   ///< decimated dual-tree complex wavelet pyramid, 2-D only
};

/// A tight-frame transform definition: which filter bank, how many levels,
/// and for which dimensionality.
struct FrameBackend {
    BackendKind kind = BackendKind::BSplineFramelet;
    int levels = 1; ///< BSpline: fixed 1. DTCWT: decimation levels (default 4).
    int dims = 2;

    static FrameBackend bspline(int dims);
    static FrameBackend dtcwt(int levels = 4);

    bool operator==(const FrameBackend&) const = default;
};

/// One subband of frame coefficients.
struct Subband {
    std::string label;
    int level = 0;               ///< 1-based pyramid level; 0 for undecimated backends
    std::array<int, 3> extent{1, 1, 1};
    int dims = 2;
    bool lowpass = false;        ///< exempt from thresholding when lowpass_exempt is set
    int pair_id = -1;            ///< complex pair grouping; -1 for real subbands
    int component = 0;           ///< 0 = real part, 1 = imaginary part
    std::vector<double> data;    ///< x fastest, same layout as ImageField
};

/// Everything needed to invert exactly: the backend and the pre-transform
/// padding applied to reach a legal extent.
struct FrameGeometry {
    FrameBackend backend;
    std::array<int, 3> original{1, 1, 1};
    std::array<int, 3> padded{1, 1, 1};
    int dims = 2;

    bool operator==(const FrameGeometry&) const = default;
};

/// Frame coefficients of one image, organized by subband.
struct CoefficientSet {
    FrameGeometry geometry;
    std::vector<Subband> subbands;

    std::size_t total_coefficients() const {
        std::size_t n = 0;
        for (const auto& s : subbands) n += s.data.size();
        return n;
    }
};

/// Per-coefficient soft threshold, scalar broadcast by default. When
/// per_subband is non-empty it must match the subband count of the target
/// coefficient set and overrides the scalar per subband.
struct ThresholdVector {
    double lambda = 0.1;
    bool lowpass_exempt = true;
    std::vector<double> per_subband;

    static ThresholdVector uniform(double lam, bool exempt = true) {
        return ThresholdVector{lam, exempt, {}};
    }
};

/// Mirrored (half-sample symmetric) same-length correlation of a 1-D signal
/// with a filter: out[i] = sum_m taps[m] * x[mirror(i + m - center)], where
/// center = taps.size()/2. This is the filter-matrix action used to build
/// the framelet transform.
std::vector<double> conv_sym(std::span<const double> signal, std::span<const double> taps);

CoefficientSet analyze(const ImageField& f, const FrameBackend& backend);

ImageField synthesize(const CoefficientSet& coeffs);

CoefficientSet soft_threshold(const CoefficientSet& coeffs, const ThresholdVector& t);
void soft_threshold_inplace(CoefficientSet& coeffs, const ThresholdVector& t);

/// synthesize(soft_threshold(analyze(f))) in one call.
ImageField denoise(const ImageField& f, const FrameBackend& backend, const ThresholdVector& t);

/// Dense row-major matrix, used by the oracle path.
struct DenseMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<double> a;
    double& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    double at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

/// Materialize the analysis operator as an explicit matrix built directly
/// from the filter taps and mirror indexing (independent of analyze()).
/// Rows follow analyze()'s subband order; columns index pixels x fastest.
/// BSpline only; capped at 4096 pixels.
DenseMatrix dense_frame_matrix(const FrameBackend& backend, std::array<int, 3> shape);

/// Subband layout (labels/flags/extents) that analyze() would produce for
/// this backend and image shape, without computing coefficients.
std::vector<Subband> subband_layout(const FrameBackend& backend, std::array<int, 3> shape);

} // namespace tfseg
