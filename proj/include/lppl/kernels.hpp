#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace lppl::kernels {

// Hot inner loops of the calibration, provided as interchangeable variants.
// The scalar variant is the reference; SIMD variants must agree with it to
// the tolerances pinned in the equivalence tests. Selection happens once at
// startup (best supported variant) and can be overridden via set_active().
//
// fill_basis: for i in [0, n)
//   dt    = tc - (t0 + i)                (caller guarantees dt > 0)
//   pw[i] = exp(m * ln(dt))              (power-law factor (tc-t)^m)
//   oc[i] = pw[i] * cos(omega * ln(dt))
//   os[i] = pw[i] * sin(omega * ln(dt))
// Arguments are expected to stay within |m*ln(dt)| < 30 and
// |omega*ln(dt)| < 1e6; the calibration bounds keep them far inside.
struct Kernels {
    const char* name;
    void (*fill_basis)(double tc, double t0, int n, double m, double omega,
                       double* pw, double* oc, double* os);
    double (*dot)(const double* a, const double* b, int n);
    void (*axpy)(double alpha, const double* x, double* y, int n);
    // Sum over i of (y[i] - a - b*pw[i] - c1*oc[i] - c2*os[i])^2.
    double (*residual_sse)(const double* y, const double* pw, const double* oc,
                           const double* os, int n, double a, double b,
                           double c1, double c2);
};

// Reference implementation, always available.
const Kernels& scalar_kernels();

// AVX2+FMA implementation, or nullptr when not compiled in or not
// supported by the CPU.
const Kernels* avx2_kernels();

// Every variant usable on this machine, reference first.
std::vector<const Kernels*> available_kernels();

// Currently selected variant (defaults to the last entry of
// available_kernels(), i.e. the widest supported one).
const Kernels& active_kernels();

// Select by name: "auto", "scalar", or "avx2". Returns false (and leaves
// the selection unchanged) when the variant is unknown or unsupported.
bool set_active_kernels(std::string_view name);

} // namespace lppl::kernels
