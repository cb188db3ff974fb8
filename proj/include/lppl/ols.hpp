#pragma once

#include <optional>
#include <span>
#include <vector>

namespace lppl {

// One calibration window over a LogSeries: samples at integer days
// t1..t2 inclusive, y[i] = log-price at day t1 + i.
struct DesignWindow {
    int t1 = 0;
    int t2 = 0;
    std::span<const double> y;

    int n_samples() const { return t2 - t1 + 1; }
};

// Solution of the linear subproblem at fixed (tc, m, omega).
struct LinearFit {
    double a = 0.0;
    double b = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;
    double sse = 0.0;  // minimized residual sum of squares
};

// Scratch buffers reused across the many solves of one window fit.
class OlsWorkspace {
public:
    void resize(int n);

    std::vector<double> pw, oc, os;  // basis columns
    std::vector<double> qr;          // 4 columns, column-major, destroyed by QR
    std::vector<double> qty;         // y copy, transformed in place
};

// Ordinary least squares for [1, f, f*cos g, f*sin g] with f = (tc-t)^m and
// g = omega*ln(tc-t), via Householder QR. Returns nullopt when the design is
// numerically rank-deficient (degenerate window), never throws for that.
//
// Pre: tc > window.t2, m > 0, omega > 0, window.n_samples() >= 5.
std::optional<LinearFit> solve_linear(const DesignWindow& window, double tc,
                                      double m, double omega, OlsWorkspace& ws);

// Convenience overload with a private workspace.
std::optional<LinearFit> solve_linear(const DesignWindow& window, double tc,
                                      double m, double omega);

} // namespace lppl
