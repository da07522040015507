#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace asymm_osc {

// Frequency ratio s = omega_plus / omega_minus and the right-hand frequency.
// Natural units hbar = m = 1 throughout.
struct OscillatorConfig {
    double s = 1.0;
    double omega_plus = 1.0;

    double omega_minus() const { return omega_plus / s; }
    // Throws PreconditionError unless s >= 1 and omega_plus > 0.
    void validate() const;
};

struct EigenRecord {
    int n = 0;
    double nu_plus = 0.0;
    double nu_minus = 0.0;
    double energy = 0.0; // omega_plus (nu_plus + 1/2)
    bool glued_hermite = false;
};

enum class PoleFamily {
    native,   // F(nu_plus) pole at 2M + 1
    composed, // F(nu_minus) pole at (4M + 3)/(2s) - 1/2
    both,     // the two coincide within kCoincidenceTol
};

struct Pole {
    double position = 0.0;
    PoleFamily family = PoleFamily::native;
};

// Sorted asymptote positions of h(nu) = F(nu) + F(nu_minus)/sqrt(s) in
// (lower, window_max]. Each open gap between consecutive poles, and the
// ground interval (lower, poles.front()), holds exactly one eigenvalue;
// every `both` pole is itself an (odd-glued) eigenvalue.
struct BracketLattice {
    static constexpr double kCoincidenceTol = 1e-9;

    double lower = -0.5;
    double window_max = 0.0;
    std::vector<Pole> poles;

    std::size_t coincident_count() const;
};

namespace spectrum {

// F(nu) = Gamma((1 - nu)/2) / Gamma(-nu/2). PoleError at nu = 1, 3, 5, ...
double f_ratio(double nu);

// nu_minus = s nu_plus + (s - 1)/2
double nu_minus(const OscillatorConfig& config, double nu_plus);

// omega_plus (nu_plus + 1/2)
double energy(const OscillatorConfig& config, double nu_plus);

// h(nu) = F(nu) + F(nu_minus(nu))/sqrt(s); strictly decreasing between poles.
double pole_ratio_residual(const OscillatorConfig& config, double nu_plus);

// Matching determinant
//   1/(G((1-nu_-)/2) G(-nu_+/2)) + s^{-1/2} / (G(-nu_-/2) G((1-nu_+)/2)),
// an entire function of nu_plus.
double eigen_residual(const OscillatorConfig& config, double nu_plus);

BracketLattice build_brackets(const OscillatorConfig& config, double window_max);

// Lowest `count` eigenvalues in increasing order. Throws ConvergenceError if
// a bracket fails to converge and PreconditionError on bad input.
std::vector<EigenRecord> solve_spectrum(const OscillatorConfig& config, int count);

// Smallest (m, n), m, n <= 100, with |s - (4m + 3)/(4n + 3)| <= 1e-9.
std::optional<std::pair<int, int>> detect_glued_ratio(double s);

} // namespace spectrum
} // namespace asymm_osc
