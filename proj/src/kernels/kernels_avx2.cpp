// AVX2 kernels, 4 lanes of double. Each lane performs the same operation
// sequence as the scalar reference (mul/add, no FMA), so results are
// bit-identical; remainders run the scalar expressions.

#include "tfseg/kernels.hpp"

#if defined(__AVX2__)

#include <immintrin.h>

#include <cmath>

namespace tfseg::kernels {
namespace {

void conv3_v(const double* x, double* y, int n, double c0, double c1, double c2) {
    if (n == 1) {
        y[0] = (c0 * x[0] + c1 * x[0]) + c2 * x[0];
        return;
    }
    y[0] = (c0 * x[0] + c1 * x[0]) + c2 * x[1];
    const __m256d v0 = _mm256_set1_pd(c0);
    const __m256d v1 = _mm256_set1_pd(c1);
    const __m256d v2 = _mm256_set1_pd(c2);
    int i = 1;
    for (; i + 4 <= n - 1; i += 4) {
        __m256d a = _mm256_loadu_pd(x + i - 1);
        __m256d b = _mm256_loadu_pd(x + i);
        __m256d c = _mm256_loadu_pd(x + i + 1);
        __m256d t = _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(v0, a), _mm256_mul_pd(v1, b)),
                                  _mm256_mul_pd(v2, c));
        _mm256_storeu_pd(y + i, t);
    }
    for (; i < n - 1; ++i)
        y[i] = (c0 * x[i - 1] + c1 * x[i]) + c2 * x[i + 1];
    y[n - 1] = (c0 * x[n - 2] + c1 * x[n - 1]) + c2 * x[n - 1];
}

void conv3_adj_v(const double* x, double* y, int n, double c0, double c1, double c2) {
    if (n == 1) {
        y[0] = (c0 * x[0] + c1 * x[0]) + c2 * x[0];
        return;
    }
    y[0] = (c0 * x[1] + c1 * x[0]) + c2 * 0.0;
    const __m256d v0 = _mm256_set1_pd(c0);
    const __m256d v1 = _mm256_set1_pd(c1);
    const __m256d v2 = _mm256_set1_pd(c2);
    int i = 1;
    for (; i + 4 <= n - 1; i += 4) {
        __m256d a = _mm256_loadu_pd(x + i + 1);
        __m256d b = _mm256_loadu_pd(x + i);
        __m256d c = _mm256_loadu_pd(x + i - 1);
        __m256d t = _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(v0, a), _mm256_mul_pd(v1, b)),
                                  _mm256_mul_pd(v2, c));
        _mm256_storeu_pd(y + i, t);
    }
    for (; i < n - 1; ++i)
        y[i] = (c0 * x[i + 1] + c1 * x[i]) + c2 * x[i - 1];
    y[n - 1] = (c0 * 0.0 + c1 * x[n - 1]) + c2 * x[n - 2];
    y[0] += c0 * x[0];
    y[n - 1] += c2 * x[n - 1];
}

void wsum3_v(const double* a, const double* b, const double* c,
             double* y, int n, double c0, double c1, double c2) {
    const __m256d v0 = _mm256_set1_pd(c0);
    const __m256d v1 = _mm256_set1_pd(c1);
    const __m256d v2 = _mm256_set1_pd(c2);
    int i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d t = _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(v0, _mm256_loadu_pd(a + i)),
                                                _mm256_mul_pd(v1, _mm256_loadu_pd(b + i))),
                                  _mm256_mul_pd(v2, _mm256_loadu_pd(c + i)));
        _mm256_storeu_pd(y + i, t);
    }
    for (; i < n; ++i)
        y[i] = (c0 * a[i] + c1 * b[i]) + c2 * c[i];
}

void axpy_v(double* y, const double* x, int n, double s) {
    const __m256d vs = _mm256_set1_pd(s);
    int i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d t = _mm256_add_pd(_mm256_loadu_pd(y + i),
                                  _mm256_mul_pd(vs, _mm256_loadu_pd(x + i)));
        _mm256_storeu_pd(y + i, t);
    }
    for (; i < n; ++i)
        y[i] += s * x[i];
}

void shrink_real_v(double* v, int n, double lam) {
    const __m256d vlam = _mm256_set1_pd(lam);
    const __m256d zero = _mm256_setzero_pd();
    const __m256d signmask = _mm256_set1_pd(-0.0);
    int i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d x = _mm256_loadu_pd(v + i);
        __m256d mag = _mm256_andnot_pd(signmask, x);
        __m256d d = _mm256_max_pd(_mm256_sub_pd(mag, vlam), zero);
        __m256d out = _mm256_or_pd(d, _mm256_and_pd(x, signmask));
        _mm256_storeu_pd(v + i, out);
    }
    for (; i < n; ++i) {
        double d = std::fabs(v[i]) - lam;
        if (d < 0.0) d = 0.0;
        v[i] = std::copysign(d, v[i]);
    }
}

void shrink_pair_v(double* re, double* im, int n, double lam) {
    const __m256d vlam = _mm256_set1_pd(lam);
    const __m256d zero = _mm256_setzero_pd();
    int i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d r = _mm256_loadu_pd(re + i);
        __m256d m = _mm256_loadu_pd(im + i);
        __m256d m2 = _mm256_add_pd(_mm256_mul_pd(r, r), _mm256_mul_pd(m, m));
        __m256d mag = _mm256_sqrt_pd(m2);
        __m256d d = _mm256_sub_pd(mag, vlam);
        __m256d pos = _mm256_cmp_pd(d, zero, _CMP_GT_OQ);
        __m256d scale = _mm256_and_pd(_mm256_div_pd(d, mag), pos);
        _mm256_storeu_pd(re + i, _mm256_mul_pd(r, scale));
        _mm256_storeu_pd(im + i, _mm256_mul_pd(m, scale));
    }
    for (; i < n; ++i) {
        double m2 = re[i] * re[i] + im[i] * im[i];
        double mag = std::sqrt(m2);
        double d = mag - lam;
        double scale = d > 0.0 ? d / mag : 0.0;
        re[i] = re[i] * scale;
        im[i] = im[i] * scale;
    }
}

void stretch_v(const double* f, double* y, int n,
               double a, double b, double m, double M) {
    const double den = M - m;
    const __m256d va = _mm256_set1_pd(a);
    const __m256d vb = _mm256_set1_pd(b);
    const __m256d vm = _mm256_set1_pd(m);
    const __m256d vden = _mm256_set1_pd(den);
    const __m256d zero = _mm256_setzero_pd();
    const __m256d one = _mm256_set1_pd(1.0);
    int i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d v = _mm256_loadu_pd(f + i);
        __m256d t = _mm256_div_pd(_mm256_sub_pd(v, vm), vden);
        t = _mm256_min_pd(_mm256_max_pd(t, zero), one);
        __m256d lo = _mm256_cmp_pd(v, va, _CMP_LE_OQ);
        __m256d hi = _mm256_cmp_pd(v, vb, _CMP_GE_OQ);
        t = _mm256_blendv_pd(t, zero, lo);
        t = _mm256_blendv_pd(t, one, hi);
        _mm256_storeu_pd(y + i, t);
    }
    for (; i < n; ++i) {
        double v = f[i];
        if (v <= a) {
            y[i] = 0.0;
        } else if (v >= b) {
            y[i] = 1.0;
        } else {
            double t = (v - m) / den;
            if (t < 0.0) t = 0.0;
            if (t > 1.0) t = 1.0;
            y[i] = t;
        }
    }
}

} // namespace

const Ops* avx2_ops() {
    static const Ops table{
        conv3_v, conv3_adj_v, wsum3_v, axpy_v,
        shrink_real_v, shrink_pair_v, stretch_v, "avx2",
    };
    return &table;
}

} // namespace tfseg::kernels

#else

namespace tfseg::kernels {
const Ops* avx2_ops() { return nullptr; }
} // namespace tfseg::kernels

#endif
