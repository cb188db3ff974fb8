#include <cmath>

#include "lppl/kernels.hpp"

// Reference kernels. These define the semantics the SIMD variants are
// tested against; keep them straightforward.

namespace lppl::kernels {

namespace {

void fill_basis_scalar(double tc, double t0, int n, double m, double omega,
                       double* pw, double* oc, double* os) {
    for (int i = 0; i < n; ++i) {
        double dt = tc - (t0 + i);
        double u = std::log(dt);
        double f = std::exp(m * u);  // (tc - t)^m, same route as the SIMD path
        double g = omega * u;
        pw[i] = f;
        oc[i] = f * std::cos(g);
        os[i] = f * std::sin(g);
    }
}

double dot_scalar(const double* a, const double* b, int n) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
}

void axpy_scalar(double alpha, const double* x, double* y, int n) {
    for (int i = 0; i < n; ++i) y[i] += alpha * x[i];
}

double residual_sse_scalar(const double* y, const double* pw, const double* oc,
                           const double* os, int n, double a, double b,
                           double c1, double c2) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
        double r = y[i] - a - b * pw[i] - c1 * oc[i] - c2 * os[i];
        s += r * r;
    }
    return s;
}

} // namespace

const Kernels& scalar_kernels() {
    static const Kernels k{"scalar", &fill_basis_scalar, &dot_scalar, &axpy_scalar,
                           &residual_sse_scalar};
    return k;
}

} // namespace lppl::kernels
