// Scalar reference kernels. The AVX2 variants mirror these operation for
// operation; FP contraction is disabled for both translation units so the
// two paths stay bit-identical.

#include "tfseg/kernels.hpp"

#include <cmath>

namespace tfseg::kernels {
namespace {

void conv3_s(const double* x, double* y, int n, double c0, double c1, double c2) {
    if (n == 1) {
        y[0] = (c0 * x[0] + c1 * x[0]) + c2 * x[0];
        return;
    }
    y[0] = (c0 * x[0] + c1 * x[0]) + c2 * x[1];
    for (int i = 1; i < n - 1; ++i)
        y[i] = (c0 * x[i - 1] + c1 * x[i]) + c2 * x[i + 1];
    y[n - 1] = (c0 * x[n - 2] + c1 * x[n - 1]) + c2 * x[n - 1];
}

void conv3_adj_s(const double* x, double* y, int n, double c0, double c1, double c2) {
    // adjoint of conv3_s: reversed correlation on zero extension, then fold
    // the two mirror contributions back onto the border samples
    if (n == 1) {
        y[0] = (c0 * x[0] + c1 * x[0]) + c2 * x[0];
        return;
    }
    y[0] = (c0 * x[1] + c1 * x[0]) + c2 * 0.0;
    for (int i = 1; i < n - 1; ++i)
        y[i] = (c0 * x[i + 1] + c1 * x[i]) + c2 * x[i - 1];
    y[n - 1] = (c0 * 0.0 + c1 * x[n - 1]) + c2 * x[n - 2];
    y[0] += c0 * x[0];
    y[n - 1] += c2 * x[n - 1];
}

void wsum3_s(const double* a, const double* b, const double* c,
             double* y, int n, double c0, double c1, double c2) {
    for (int i = 0; i < n; ++i)
        y[i] = (c0 * a[i] + c1 * b[i]) + c2 * c[i];
}

void axpy_s(double* y, const double* x, int n, double s) {
    for (int i = 0; i < n; ++i)
        y[i] += s * x[i];
}

void shrink_real_s(double* v, int n, double lam) {
    for (int i = 0; i < n; ++i) {
        double d = std::fabs(v[i]) - lam;
        if (d < 0.0) d = 0.0;
        v[i] = std::copysign(d, v[i]);
    }
}

void shrink_pair_s(double* re, double* im, int n, double lam) {
    for (int i = 0; i < n; ++i) {
        double m2 = re[i] * re[i] + im[i] * im[i];
        double mag = std::sqrt(m2);
        double d = mag - lam;
        double scale = d > 0.0 ? d / mag : 0.0;
        re[i] = re[i] * scale;
        im[i] = im[i] * scale;
    }
}

void stretch_s(const double* f, double* y, int n,
               double a, double b, double m, double M) {
    const double den = M - m;
    for (int i = 0; i < n; ++i) {
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

const Ops& scalar_ops() {
    static const Ops table{
        conv3_s, conv3_adj_s, wsum3_s, axpy_s,
        shrink_real_s, shrink_pair_s, stretch_s, "scalar",
    };
    return table;
}

} // namespace tfseg::kernels
