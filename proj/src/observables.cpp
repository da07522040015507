#include "asymm_osc/observables.hpp"

#include "asymm_osc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace asymm_osc::observables {

namespace {

void require_same_config(const PiecewiseEigenfunction& a, const PiecewiseEigenfunction& b) {
    if (a.config().s != b.config().s || a.config().omega_plus != b.config().omega_plus ||
        a.convention() != b.convention()) {
        throw PreconditionError("eigenfunctions belong to different oscillator configurations");
    }
}

double weighted_overlap(const PiecewiseEigenfunction& a, const PiecewiseEigenfunction& b, bool with_x,
                        const QuadratureSettings& settings) {
    require_same_config(a, b);
    const double left = std::max(a.left_cut(), b.left_cut());
    const double right = std::max(a.right_cut(), b.right_cut());
    const int panels = 16 + a.record().n + b.record().n;
    const auto integrand = [&](double x) {
        const double v = a(x) * b(x);
        return with_x ? x * v : v;
    };
    return wavefun::integrate_line(integrand, left, right, settings, panels);
}

std::vector<std::vector<double>> symmetric_matrix(const std::vector<PiecewiseEigenfunction>& basis, bool with_x,
                                                  const QuadratureSettings& settings) {
    const std::size_t size = basis.size();
    std::vector<std::vector<double>> m(size, std::vector<double>(size, 0.0));
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = i; j < size; ++j) {
            m[i][j] = m[j][i] = weighted_overlap(basis[i], basis[j], with_x, settings);
        }
    }
    return m;
}

} // namespace

double inner_product(const PiecewiseEigenfunction& a, const PiecewiseEigenfunction& b,
                     const QuadratureSettings& settings) {
    return weighted_overlap(a, b, false, settings);
}

double x_matrix_element(const PiecewiseEigenfunction& a, const PiecewiseEigenfunction& b,
                        const QuadratureSettings& settings) {
    // order the pair so <a|x|b> and <b|x|a> run the identical computation
    if (b.record().n < a.record().n) {
        return weighted_overlap(b, a, true, settings);
    }
    return weighted_overlap(a, b, true, settings);
}

double mean_position(const PiecewiseEigenfunction& psi, const QuadratureSettings& settings) {
    return x_matrix_element(psi, psi, settings);
}

std::vector<std::vector<double>> gram_matrix(const std::vector<PiecewiseEigenfunction>& basis,
                                             const QuadratureSettings& settings) {
    return symmetric_matrix(basis, false, settings);
}

std::vector<std::vector<double>> x_matrix(const std::vector<PiecewiseEigenfunction>& basis,
                                          const QuadratureSettings& settings) {
    return symmetric_matrix(basis, true, settings);
}

BeatSignal beat_signal(const OscillatorConfig& config, int n, int k, double t_max, int steps,
                       const QuadratureSettings& settings, ScaleConvention convention) {
    config.validate();
    if (n == k) {
        throw PreconditionError("beat_signal: n and k must differ");
    }
    if (n < 0 || k < 0) {
        throw PreconditionError("beat_signal: state indices must be non-negative");
    }
    if (!(t_max > 0.0)) {
        throw PreconditionError("beat_signal: t_max must be positive");
    }
    if (steps < 2) {
        throw PreconditionError("beat_signal: steps must be >= 2");
    }
    const auto records = spectrum::solve_spectrum(config, std::max(n, k) + 1);
    const auto psi_n = wavefun::build_eigenfunction(config, records[n], convention, settings);
    const auto psi_k = wavefun::build_eigenfunction(config, records[k], convention, settings);

    BeatSignal beat;
    beat.n = n;
    beat.k = k;
    beat.omega_plus = config.omega_plus;
    beat.center = 0.5 * (mean_position(psi_n, settings) + mean_position(psi_k, settings));
    beat.amplitude = x_matrix_element(psi_n, psi_k, settings);
    beat.frequency = config.omega_plus * std::abs(records[n].nu_plus - records[k].nu_plus);
    beat.samples.reserve(steps);
    for (int i = 0; i < steps; ++i) {
        const double t = (i == steps - 1) ? t_max : t_max * i / (steps - 1);
        beat.samples.push_back({t, beat.center + beat.amplitude * std::cos(beat.frequency * t)});
    }
    return beat;
}

double evolved_mean_position(const PiecewiseEigenfunction& psi_n, const PiecewiseEigenfunction& psi_k, double t,
                             const QuadratureSettings& settings) {
    require_same_config(psi_n, psi_k);
    using namespace std::complex_literals;
    const std::complex<double> phase_n = std::exp(-1.0i * psi_n.record().energy * t);
    const std::complex<double> phase_k = std::exp(-1.0i * psi_k.record().energy * t);
    const double left = std::max(psi_n.left_cut(), psi_k.left_cut());
    const double right = std::max(psi_n.right_cut(), psi_k.right_cut());
    const int panels = 16 + psi_n.record().n + psi_k.record().n;
    const auto integrand = [&](double x) {
        const std::complex<double> amp = (phase_n * psi_n(x) + phase_k * psi_k(x)) / std::sqrt(2.0);
        return x * std::norm(amp);
    };
    return wavefun::integrate_line(integrand, left, right, settings, panels);
}

} // namespace asymm_osc::observables
