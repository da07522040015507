#pragma once

#include "asymm_osc/spectrum.hpp"

namespace asymm_osc {

// Classical asymmetric oscillator with m = 1: stiffness omega_plus^2 on
// x >= 0 and omega_minus^2 on x < 0.
struct ClassicalState {
    double omega_plus = 1.0;
    double omega_minus = 1.0;
    double amplitude_right = 1.0; // A+, right turning point
    double amplitude_left = 1.0;  // A- = (omega_plus/omega_minus) A+
    double energy = 0.5;          // omega_plus^2 A+^2 / 2
    double period = 0.0;          // pi/omega_minus + pi/omega_plus
};

struct PhasePoint {
    double x;
    double v;
};

namespace classical {

// pi/omega_minus + pi/omega_plus. DomainError on non-positive frequency.
double period(double omega_plus, double omega_minus);

// State with right-hand amplitude A+ (DomainError unless all inputs > 0).
ClassicalState make_state(double omega_plus, double omega_minus, double amplitude_right);

// Piecewise-sinusoidal orbit starting at x(0) = 0 moving right, T-periodic.
PhasePoint trajectory(const ClassicalState& state, double t);

// Time-spent density on (-A-, A+); DomainError at or beyond the turning points.
double classical_density(const ClassicalState& state, double x);

// Classical orbit at the energy of a solved quantum level.
ClassicalState match_energy(const OscillatorConfig& config, const EigenRecord& record);

} // namespace classical
} // namespace asymm_osc
