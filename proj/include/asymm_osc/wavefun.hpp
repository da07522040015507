#pragma once

#include "asymm_osc/quadrature.hpp"
#include "asymm_osc/specfun.hpp"
#include "asymm_osc/spectrum.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace asymm_osc {

// Argument scale of each branch: xi = k x with
//   eq6_scale:  k = sqrt(2 omega)  (the Weber substitution, hbar = m = 1)
//   sec4_scale: k = sqrt(omega)
enum class ScaleConvention { eq6_scale, sec4_scale };

std::string_view to_string(ScaleConvention convention);
std::optional<ScaleConvention> parse_convention(std::string_view text);

// psi(x) = sign * coeff_right * D_{nu+}(scale_right x) / norm   for x >= 0
//        = sign * coeff_left  * D_{nu-}(-scale_left x) / norm   for x < 0
class PiecewiseEigenfunction {
public:
    PiecewiseEigenfunction(const OscillatorConfig& config, const EigenRecord& record, ScaleConvention convention,
                           double coeff_right, double coeff_left, double norm, int sign,
                           const QuadratureSettings& settings);

    const OscillatorConfig& config() const { return config_; }
    const EigenRecord& record() const { return record_; }
    ScaleConvention convention() const { return convention_; }
    double coeff_right() const { return coeff_right_; }
    double coeff_left() const { return coeff_left_; }
    double scale_right() const { return scale_right_; }
    double scale_left() const { return scale_left_; }
    double norm() const { return norm_; }
    int sign() const { return sign_; }

    // Truncation radii in x where the tails are dropped.
    double right_cut() const { return right_cut_; }
    double left_cut() const { return left_cut_; } // positive; domain is [-left_cut, right_cut]

    // Normalized psi(x) (right branch at x = 0). RangeError if |x| scale > 40.
    double operator()(double x) const;
    double derivative(double x) const;

    // |psi(0+) - psi(0-)| relative to |psi(0)|.
    double value_mismatch() const;
    // |psi'(0+) - psi'(0-)| relative to |psi'(0+)| + |psi'(0-)| + scale_right |psi(0)|.
    double derivative_mismatch() const;

    PiecewiseEigenfunction with_norm(double norm) const;

private:
    OscillatorConfig config_;
    EigenRecord record_;
    ScaleConvention convention_;
    double coeff_right_;
    double coeff_left_;
    double scale_right_;
    double scale_left_;
    double norm_;
    int sign_;
    double right_cut_;
    double left_cut_;
    std::shared_ptr<const specfun::PcfEvaluator> right_;
    std::shared_ptr<const specfun::PcfEvaluator> left_;
};

namespace wavefun {

// Branch argument scale k (xi = k x) for frequency omega.
double argument_scale(double omega, ScaleConvention convention);

// Tail radius in xi for order nu under the settings' tail rule (capped at
// specfun::kMaxArgument).
double tail_radius(double nu, const QuadratureSettings& settings);

// Integral of f over [-left_cut, right_cut], split at x = 0.
double integrate_line(const std::function<double(double)>& f, double left_cut, double right_cut,
                      const QuadratureSettings& settings, int panels_per_half = 16);

// Glued, normalized, sign-fixed eigenfunction for a solved record.
// Throws InconsistencyError if the matching residuals at x = 0 exceed 1e-6.
PiecewiseEigenfunction build_eigenfunction(const OscillatorConfig& config, const EigenRecord& record,
                                           ScaleConvention convention = ScaleConvention::eq6_scale,
                                           const QuadratureSettings& settings = {});

// Convenience: solve the spectrum and build the first `count` eigenfunctions.
std::vector<PiecewiseEigenfunction> build_basis(const OscillatorConfig& config, int count,
                                                ScaleConvention convention = ScaleConvention::eq6_scale,
                                                const QuadratureSettings& settings = {});

double eval(const PiecewiseEigenfunction& psi, double x);

// Rescales so the integral of psi^2 is 1.
PiecewiseEigenfunction normalize(const PiecewiseEigenfunction& psi, const QuadratureSettings& settings);

// Integral of psi^2 over the truncated line.
double norm_squared(const PiecewiseEigenfunction& psi, const QuadratureSettings& settings);

// Number of sign changes on [-search_radius, search_radius] (clipped to the
// tail cuts). Throws ResolutionError if the grid cannot separate the zeros.
int count_zeros(const PiecewiseEigenfunction& psi, double search_radius);

struct DensitySample {
    double x;
    double psi;
    double density; // psi^2
};

std::vector<DensitySample> density_grid(const PiecewiseEigenfunction& psi, double x_min, double x_max,
                                        int samples);

} // namespace wavefun
} // namespace asymm_osc
