#pragma once

#include <cstddef>

namespace tfseg::kernels {

/// The data-parallel inner loops of the transform and segmentation passes.
///
/// Every entry has a scalar reference implementation and (on x86-64) an AVX2
/// variant. The two are required to produce bit-identical results: each lane
/// performs the same operation sequence as the scalar loop, kernels are built
/// with FP contraction disabled, and reductions are not vectorized. Tests
/// enforce the equivalence with exact comparisons.
struct Ops {
    /// 3-tap mirrored correlation along a contiguous signal:
    /// y[i] = c0*x[m(i-1)] + c1*x[i] + c2*x[m(i+1)], half-sample mirror m.
    void (*conv3)(const double* x, double* y, int n, double c0, double c1, double c2);

    /// Exact adjoint of conv3 (zero-extended reversed correlation + boundary fold).
    void (*conv3_adjoint)(const double* x, double* y, int n, double c0, double c1, double c2);

    /// y[i] = c0*a[i] + c1*b[i] + c2*c[i]
    void (*weighted_sum3)(const double* a, const double* b, const double* c,
                          double* y, int n, double c0, double c1, double c2);

    /// y[i] += s * x[i]
    void (*axpy)(double* y, const double* x, int n, double s);

    /// In-place soft threshold: v = sgn(v) * max(|v| - lam, 0).
    void (*shrink_real)(double* v, int n, double lam);

    /// In-place complex magnitude shrinkage on (re, im) pairs:
    /// scale each pair by max(mag - lam, 0)/mag (zero when mag <= lam).
    void (*shrink_pair)(double* re, double* im, int n, double lam);

    /// Linear contrast stretch: y = f<=a ? 0 : f>=b ? 1 : clamp((f-m)/(M-m), 0, 1).
    /// Requires a < b and M > m.
    void (*stretch)(const double* f, double* y, int n,
                    double a, double b, double m, double M);

    const char* name;
};

/// The dispatched kernel table (AVX2 when the CPU supports it, else scalar).
/// The environment variable TFSEG_SIMD (values: "scalar", "avx2") forces a
/// specific table; forcing an unsupported one falls back to scalar.
const Ops& ops();

const Ops& scalar_ops();

/// Null when AVX2 is unavailable on this machine.
const Ops* avx2_ops();

} // namespace tfseg::kernels
