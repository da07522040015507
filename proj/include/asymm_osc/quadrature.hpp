#pragma once

#include <functional>

namespace asymm_osc {

// How far the integration domain extends into the decaying tails.
struct TailCut {
    enum class Rule {
        envelope, // cut where 2^{|nu|/2} (1+xi)^{max(nu,0)} e^{-xi^2/4} < abs_tol
        fixed,    // use `radius` (in units of the scaled argument xi)
    };
    Rule rule = Rule::envelope;
    double radius = 40.0;
};

struct QuadratureSettings {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    int max_subdivisions = 2000;
    TailCut tail_cut{};

    // Throws PreconditionError unless tolerances are positive and
    // max_subdivisions >= 16.
    void validate() const;
};

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;
    int evaluations = 0;
};

// Globally adaptive 7/15-point Gauss-Kronrod quadrature on [a, b]. The
// interval is first cut into `initial_panels` pieces. Throws
// ConvergenceError when the subdivision budget runs out.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureSettings& settings, int initial_panels = 8);

} // namespace asymm_osc
