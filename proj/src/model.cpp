#include "lppl/model.hpp"

#include <stdexcept>

namespace lppl {

namespace {

double time_to_critical(double tc, double t) {
    double dt = tc - t;
    if (!(dt > 0.0)) {
        throw std::domain_error("LPPL model undefined at t >= tc (tc - t = " +
                                std::to_string(dt) + ")");
    }
    return dt;
}

} // namespace

double evaluate_phi_form(double a, double b, double c, double tc, double m,
                         double omega, double phi, double t) {
    double dt = time_to_critical(tc, t);
    double f = std::pow(dt, m);
    return a + b * f + c * f * std::cos(omega * std::log(dt) - phi);
}

double evaluate(const LpplParams& p, double t) {
    double dt = time_to_critical(p.tc, t);
    double f = std::pow(dt, p.m);
    double g = p.omega * std::log(dt);
    return p.a + f * (p.b + p.c1 * std::cos(g) + p.c2 * std::sin(g));
}

} // namespace lppl
