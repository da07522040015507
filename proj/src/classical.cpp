#include "asymm_osc/classical.hpp"

#include "asymm_osc/errors.hpp"

#include <cmath>
#include <numbers>

namespace asymm_osc::classical {

namespace {
constexpr double kPi = std::numbers::pi;
}

double period(double omega_plus, double omega_minus) {
    if (!(omega_plus > 0.0) || !(omega_minus > 0.0)) {
        throw DomainError("period: frequencies must be positive");
    }
    return kPi / omega_minus + kPi / omega_plus;
}

ClassicalState make_state(double omega_plus, double omega_minus, double amplitude_right) {
    if (!(amplitude_right > 0.0)) {
        throw DomainError("make_state: amplitude must be positive");
    }
    ClassicalState st;
    st.omega_plus = omega_plus;
    st.omega_minus = omega_minus;
    st.period = period(omega_plus, omega_minus);
    st.amplitude_right = amplitude_right;
    st.amplitude_left = omega_plus / omega_minus * amplitude_right;
    st.energy = 0.5 * omega_plus * omega_plus * amplitude_right * amplitude_right;
    return st;
}

PhasePoint trajectory(const ClassicalState& state, double t) {
    if (t < 0.0) {
        throw DomainError("trajectory: t must be non-negative");
    }
    const double right_half = kPi / state.omega_plus;
    double tau = std::fmod(t, state.period);
    if (tau <= right_half) {
        const double phase = state.omega_plus * tau;
        return {state.amplitude_right * std::sin(phase),
                state.omega_plus * state.amplitude_right * std::cos(phase)};
    }
    const double phase = state.omega_minus * (tau - right_half);
    return {-state.amplitude_left * std::sin(phase), -state.omega_minus * state.amplitude_left * std::cos(phase)};
}

double classical_density(const ClassicalState& state, double x) {
    if (!(x > -state.amplitude_left && x < state.amplitude_right)) {
        throw DomainError("classical_density: x outside the open classical region");
    }
    if (x >= 0.0) {
        const double a = state.amplitude_right;
        return 2.0 / (state.period * state.omega_plus * std::sqrt((a - x) * (a + x)));
    }
    const double a = state.amplitude_left;
    return 2.0 / (state.period * state.omega_minus * std::sqrt((a - x) * (a + x)));
}

ClassicalState match_energy(const OscillatorConfig& config, const EigenRecord& record) {
    config.validate();
    const double e = spectrum::energy(config, record.nu_plus);
    return make_state(config.omega_plus, config.omega_minus(), std::sqrt(2.0 * e) / config.omega_plus);
}

} // namespace asymm_osc::classical
