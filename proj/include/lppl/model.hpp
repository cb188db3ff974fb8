#pragma once

#include <cmath>

namespace lppl {

// Full LPPL parameter vector in the linearized form
//   ln p(t) ~ A + (tc - t)^m * (B + C1*cos(w*ln(tc - t)) + C2*sin(w*ln(tc - t))).
// B < 0 means super-exponential rise (positive bubble), B > 0 a
// super-exponential fall (negative bubble).
struct LpplParams {
    double a = 0.0;      // log-price level at the critical time
    double b = 0.0;      // power-law amplitude; sign encodes bubble polarity
    double c1 = 0.0;     // oscillation amplitude, cosine component
    double c2 = 0.0;     // oscillation amplitude, sine component
    double tc = 0.0;     // critical time, real day offset
    double m = 0.0;      // power-law exponent
    double omega = 0.0;  // log-periodic angular frequency

    // Derived amplitude/phase of the oscillation term.
    double c() const { return std::sqrt(c1 * c1 + c2 * c2); }
    double phi() const { return std::atan2(c2, c1); }
};

// Phase form: A + B*(tc-t)^m + C*(tc-t)^m * cos(w*ln(tc-t) - phi).
// Throws std::domain_error when t >= tc.
double evaluate_phi_form(double a, double b, double c, double tc, double m,
                         double omega, double phi, double t);

// Linearized form of the same model; equals evaluate_phi_form with
// c1 = C*cos(phi), c2 = C*sin(phi). Throws std::domain_error when t >= tc.
double evaluate(const LpplParams& params, double t);

} // namespace lppl
