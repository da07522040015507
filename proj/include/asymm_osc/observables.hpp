#pragma once

#include "asymm_osc/quadrature.hpp"
#include "asymm_osc/wavefun.hpp"

#include <vector>

namespace asymm_osc {

// <x>(t) for the equal-weight superposition (|n> + |k>)/sqrt(2):
//   center + amplitude cos(frequency t).
struct BeatSignal {
    struct Sample {
        double t;
        double value;
    };

    int n = 0;
    int k = 0;
    double omega_plus = 1.0;
    double center = 0.0;    // (<n|x|n> + <k|x|k>)/2
    double amplitude = 0.0; // <n|x|k>
    double frequency = 0.0; // omega_plus |nu_n - nu_k|
    std::vector<Sample> samples;
};

namespace observables {

// Integral of psi_a psi_b over the real line. Both must share the same config.
double inner_product(const PiecewiseEigenfunction& a, const PiecewiseEigenfunction& b,
                     const QuadratureSettings& settings = {});

// <a|x|b>; symmetric in its arguments.
double x_matrix_element(const PiecewiseEigenfunction& a, const PiecewiseEigenfunction& b,
                        const QuadratureSettings& settings = {});

double mean_position(const PiecewiseEigenfunction& psi, const QuadratureSettings& settings = {});

// Row-major size x size matrices over a basis.
std::vector<std::vector<double>> gram_matrix(const std::vector<PiecewiseEigenfunction>& basis,
                                             const QuadratureSettings& settings = {});
std::vector<std::vector<double>> x_matrix(const std::vector<PiecewiseEigenfunction>& basis,
                                          const QuadratureSettings& settings = {});

// Closed-form beat signal sampled at t_i = i t_max / (steps - 1).
// PreconditionError if n == k, t_max <= 0 or steps < 2.
BeatSignal beat_signal(const OscillatorConfig& config, int n, int k, double t_max, int steps,
                       const QuadratureSettings& settings = {},
                       ScaleConvention convention = ScaleConvention::eq6_scale);

// Same signal from the time-evolved superposition: integrates x |psi(t, x)|^2
// with psi(t) = (e^{-i E_n t} psi_n + e^{-i E_k t} psi_k)/sqrt(2) at time t.
double evolved_mean_position(const PiecewiseEigenfunction& psi_n, const PiecewiseEigenfunction& psi_k, double t,
                             const QuadratureSettings& settings = {});

} // namespace observables
} // namespace asymm_osc
