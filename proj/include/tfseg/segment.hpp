#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "tfseg/field.hpp"
#include "tfseg/frame.hpp"

namespace tfseg {

/// Pixels still to be classified, stored as a boolean mask over the field.
struct CandidateSet {
    std::array<int, 3> extent{1, 1, 1};
    int dims = 2;
    std::vector<std::uint8_t> mask;
    std::size_t count = 0;

    static CandidateSet empty_like(const ImageField& f) {
        CandidateSet s;
        s.extent = f.extents();
        s.dims = f.dims();
        s.mask.assign(f.size(), 0);
        return s;
    }
};

/// Per-iteration range statistics of the candidate values.
struct RangeEstimate {
    double mu = 0;
    double mu_minus = 0;
    double mu_plus = 0;
    double alpha = 0;
    double beta = 0;
    bool has_inrange = false; ///< some candidate value lies in [alpha, beta]
    double big_m = 0;         ///< max of in-range candidate values (valid when has_inrange)
    double small_m = 0;       ///< min of in-range candidate values (valid when has_inrange)
};

struct SegmentParams {
    double epsilon = 0.003;                       ///< gradient threshold
    double lambda = 0.1;                          ///< soft threshold
    FrameBackend backend = FrameBackend::dtcwt(4);
    int max_iters = 0;                            ///< 0 = automatic (theoretical bound)
    bool lowpass_exempt = true;

    static SegmentParams defaults2d();
    static SegmentParams defaults3d();
};

struct IterationRecord {
    int iter = 0;
    std::size_t lambda_card = 0;
    bool has_range = false; ///< false only on the terminal |Lambda| = 0 row
    double alpha = 0, beta = 0, mu = 0, mu_minus = 0, mu_plus = 0;
    double wall_ms = 0;
};

/// Convergence history. Serializes to a two-column text table (header |Omega|,
/// rows i vs |Lambda(i)|) and to a key-value format; neither includes wall
/// times, so identical runs produce identical files.
struct IterationStats {
    std::size_t omega = 0;
    int iterations = 0; ///< executed iterations (the terminal row is not one)
    std::vector<IterationRecord> rows;

    std::string table_text() const;
    std::string kv_text(const SegmentParams& p, std::array<int, 3> extent, int dims) const;
};

ImageField normalize_dynamic_range(const ImageField& f);

/// Sum over axes of |forward difference|, trailing border replicated.
ImageField gradient_l1(const ImageField& f);

CandidateSet init_candidates(const ImageField& f, double epsilon);

RangeEstimate compute_range(const ImageField& f, const CandidateSet& lam);

/// eq5 threshold-stretch over the whole field; fills M/m in the returned
/// RangeEstimate copy.
std::pair<ImageField, RangeEstimate> threshold_stretch(const ImageField& f,
                                                       const CandidateSet& lam,
                                                       const RangeEstimate& r);

CandidateSet next_candidates(const ImageField& f_half);

/// Masked tight-frame denoise: pixels outside lam_next are bit-identical to
/// f_half; candidate pixels get the denoised value (which may leave [0,1]).
ImageField masked_denoise(const ImageField& f_half, const CandidateSet& lam_next,
                          const FrameBackend& backend, double lambda,
                          bool lowpass_exempt = true);

/// Observer invoked once per iteration, after the stretch step. Receives the
/// iteration index, the stretched field, and the next candidate set.
using IterationObserver =
    std::function<void(int iter, const ImageField& f_half, const CandidateSet& next)>;

/// Full segmentation loop. Input is a raw field; it is normalized to [0,1]
/// first. Returns the exact-binary result and the per-iteration history.
std::pair<ImageField, IterationStats> segment(const ImageField& f, const SegmentParams& p,
                                              const IterationObserver& observer = {});

/// One unmasked denoising pass over a binary mask (display smoothing).
/// Returns the real-valued field; callers re-threshold if they need a mask.
ImageField smooth_binary(const ImageField& mask, const FrameBackend& backend, double lambda,
                         bool lowpass_exempt = true);

} // namespace tfseg
