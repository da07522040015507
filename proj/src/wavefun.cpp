#include "asymm_osc/wavefun.hpp"

#include "asymm_osc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace asymm_osc {

std::string_view to_string(ScaleConvention convention) {
    return convention == ScaleConvention::eq6_scale ? "eq6-scale" : "sec4-scale";
}

std::optional<ScaleConvention> parse_convention(std::string_view text) {
    if (text == "eq6-scale" || text == "eq6") {
        return ScaleConvention::eq6_scale;
    }
    if (text == "sec4-scale" || text == "sec4") {
        return ScaleConvention::sec4_scale;
    }
    return std::nullopt;
}

PiecewiseEigenfunction::PiecewiseEigenfunction(const OscillatorConfig& config, const EigenRecord& record,
                                               ScaleConvention convention, double coeff_right,
                                               double coeff_left, double norm, int sign,
                                               const QuadratureSettings& settings)
    : config_(config),
      record_(record),
      convention_(convention),
      coeff_right_(coeff_right),
      coeff_left_(coeff_left),
      scale_right_(wavefun::argument_scale(config.omega_plus, convention)),
      scale_left_(wavefun::argument_scale(config.omega_minus(), convention)),
      norm_(norm),
      sign_(sign < 0 ? -1 : 1),
      right_cut_(wavefun::tail_radius(record.nu_plus, settings) / scale_right_),
      left_cut_(wavefun::tail_radius(record.nu_minus, settings) / scale_left_),
      right_(std::make_shared<const specfun::PcfEvaluator>(record.nu_plus)),
      left_(std::make_shared<const specfun::PcfEvaluator>(record.nu_minus)) {}

double PiecewiseEigenfunction::operator()(double x) const {
    const double amp = sign_ / norm_;
    if (x >= 0.0) {
        return amp * coeff_right_ * right_->value(scale_right_ * x);
    }
    return amp * coeff_left_ * left_->value(-scale_left_ * x);
}

double PiecewiseEigenfunction::derivative(double x) const {
    const double amp = sign_ / norm_;
    if (x >= 0.0) {
        return amp * coeff_right_ * scale_right_ * (*right_)(scale_right_ * x).derivative;
    }
    return -amp * coeff_left_ * scale_left_ * (*left_)(-scale_left_ * x).derivative;
}

double PiecewiseEigenfunction::value_mismatch() const {
    const double right = coeff_right_ * specfun::pcf_d_at_zero(record_.nu_plus);
    const double left = coeff_left_ * specfun::pcf_d_at_zero(record_.nu_minus);
    const double scale = std::max(std::abs(right), std::abs(left));
    return scale > 0.0 ? std::abs(right - left) / scale : 0.0;
}

double PiecewiseEigenfunction::derivative_mismatch() const {
    const double right = coeff_right_ * scale_right_ * specfun::pcf_d_prime_at_zero(record_.nu_plus);
    const double left = -coeff_left_ * scale_left_ * specfun::pcf_d_prime_at_zero(record_.nu_minus);
    const double value = std::abs(coeff_right_ * specfun::pcf_d_at_zero(record_.nu_plus));
    const double scale = std::abs(right) + std::abs(left) + scale_right_ * value;
    return scale > 0.0 ? std::abs(right - left) / scale : 0.0;
}

PiecewiseEigenfunction PiecewiseEigenfunction::with_norm(double norm) const {
    PiecewiseEigenfunction copy = *this;
    copy.norm_ = norm;
    return copy;
}

namespace wavefun {

namespace {

constexpr double kMatchTolerance = 1e-6;

} // namespace

double argument_scale(double omega, ScaleConvention convention) {
    return convention == ScaleConvention::eq6_scale ? std::sqrt(2.0 * omega) : std::sqrt(omega);
}

double tail_radius(double nu, const QuadratureSettings& settings) {
    if (settings.tail_cut.rule == TailCut::Rule::fixed) {
        return std::min(settings.tail_cut.radius, specfun::kMaxArgument);
    }
    // log of 2^{|nu|/2} (1 + xi)^{max(nu, 0)} e^{-xi^2/4}
    const double target = std::log(settings.abs_tol);
    const auto log_envelope = [nu](double xi) {
        return 0.5 * std::abs(nu) * std::numbers::ln2 + std::max(nu, 0.0) * std::log1p(xi) - 0.25 * xi * xi;
    };
    double xi = 2.0 * std::sqrt(std::max(nu + 0.5, 0.0));
    while (xi < specfun::kMaxArgument && log_envelope(xi) >= target) {
        xi += 0.125;
    }
    return std::min(xi, specfun::kMaxArgument);
}

double integrate_line(const std::function<double(double)>& f, double left_cut, double right_cut,
                      const QuadratureSettings& settings, int panels_per_half) {
    // split the tolerance between the halves
    QuadratureSettings half = settings;
    half.abs_tol = 0.5 * settings.abs_tol;
    const double left = integrate(f, -left_cut, 0.0, half, panels_per_half).value;
    const double right = integrate(f, 0.0, right_cut, half, panels_per_half).value;
    return left + right;
}

PiecewiseEigenfunction build_eigenfunction(const OscillatorConfig& config, const EigenRecord& record,
                                           ScaleConvention convention, const QuadratureSettings& settings) {
    config.validate();
    settings.validate();
    const double sr = argument_scale(config.omega_plus, convention);
    const double sl = argument_scale(config.omega_minus(), convention);
    const double d_plus = specfun::pcf_d_at_zero(record.nu_plus);
    const double d_minus = specfun::pcf_d_at_zero(record.nu_minus);
    const double dp_plus = specfun::pcf_d_prime_at_zero(record.nu_plus);
    const double dp_minus = specfun::pcf_d_prime_at_zero(record.nu_minus);

    // Null vector of the matching system. The value row gives
    // (coeff_right, coeff_left) = (D_{nu-}(0), D_{nu+}(0)); when both
    // boundary values vanish (odd-glued) the derivative row is used instead.
    double coeff_right = d_minus;
    double coeff_left = d_plus;
    const double value_row = std::hypot(d_plus, d_minus);
    const double slope_row = std::hypot(sr * dp_plus, sl * dp_minus) / sr;
    if (value_row <= 1e-12 * slope_row) {
        coeff_right = -sl * dp_minus;
        coeff_left = sr * dp_plus;
    }
    if (coeff_right == 0.0) {
        throw InconsistencyError("build_eigenfunction: degenerate matching coefficients for nu_plus=" +
                                 std::to_string(record.nu_plus));
    }
    // D_nu(z) > 0 for large z, so the sign of coeff_right fixes psi(+inf) > 0
    const int sign = coeff_right > 0.0 ? 1 : -1;
    PiecewiseEigenfunction raw(config, record, convention, coeff_right, coeff_left, 1.0, sign, settings);
    if (raw.value_mismatch() > kMatchTolerance || raw.derivative_mismatch() > kMatchTolerance) {
        throw InconsistencyError("build_eigenfunction: matching residual at x=0 too large for nu_plus=" +
                                 std::to_string(record.nu_plus) + " (not an eigenvalue?)");
    }
    return normalize(raw, settings);
}

std::vector<PiecewiseEigenfunction> build_basis(const OscillatorConfig& config, int count,
                                                ScaleConvention convention, const QuadratureSettings& settings) {
    std::vector<PiecewiseEigenfunction> basis;
    for (const EigenRecord& rec : spectrum::solve_spectrum(config, count)) {
        basis.push_back(build_eigenfunction(config, rec, convention, settings));
    }
    return basis;
}

double eval(const PiecewiseEigenfunction& psi, double x) { return psi(x); }

double norm_squared(const PiecewiseEigenfunction& psi, const QuadratureSettings& settings) {
    const int panels = 16 + 2 * psi.record().n;
    return integrate_line([&psi](double x) { const double v = psi(x); return v * v; }, psi.left_cut(),
                          psi.right_cut(), settings, panels);
}

PiecewiseEigenfunction normalize(const PiecewiseEigenfunction& psi, const QuadratureSettings& settings) {
    const double n2 = norm_squared(psi, settings);
    if (!(n2 > 0.0) || !std::isfinite(n2)) {
        throw ConvergenceError("normalize: non-positive norm");
    }
    return psi.with_norm(psi.norm() * std::sqrt(n2));
}

namespace {

// Zeros located on a uniform grid with `cells` cells over [lo, hi].
std::vector<double> locate_zeros(const PiecewiseEigenfunction& psi, double lo, double hi, int cells) {
    std::vector<double> zeros;
    const double step = (hi - lo) / cells;
    double last_x = lo;
    double last_v = psi(lo);
    bool pending_zero = false; // an exact zero sample since the last nonzero one
    double zero_x = 0.0;
    for (int i = 1; i <= cells; ++i) {
        const double x = (i == cells) ? hi : lo + i * step;
        const double v = psi(x);
        if (v == 0.0) {
            if (!pending_zero) {
                pending_zero = true;
                zero_x = x;
            }
            continue;
        }
        if (last_v != 0.0 && (v > 0.0) != (last_v > 0.0)) {
            if (pending_zero) {
                zeros.push_back(zero_x);
            } else {
                // bisection confirms a genuine crossing inside the cell
                double a = last_x;
                double b = x;
                double fa = last_v;
                for (int it = 0; it < 60 && b - a > 1e-14 * (1.0 + std::abs(a)); ++it) {
                    const double m = 0.5 * (a + b);
                    const double fm = psi(m);
                    if (fm == 0.0) {
                        a = b = m;
                        break;
                    }
                    if ((fm > 0.0) == (fa > 0.0)) {
                        a = m;
                        fa = fm;
                    } else {
                        b = m;
                    }
                }
                zeros.push_back(0.5 * (a + b));
            }
        }
        pending_zero = false;
        last_x = x;
        last_v = v;
    }
    return zeros;
}

} // namespace

int count_zeros(const PiecewiseEigenfunction& psi, double search_radius) {
    if (!(search_radius > 0.0)) {
        throw PreconditionError("count_zeros: search_radius must be positive");
    }
    const double lo = -std::min(search_radius, psi.left_cut());
    const double hi = std::min(search_radius, psi.right_cut());
    std::vector<double> previous;
    bool have_previous = false;
    for (int cells = 512; cells <= (1 << 17); cells *= 2) {
        std::vector<double> zeros = locate_zeros(psi, lo, hi, cells);
        if (have_previous && zeros.size() == previous.size()) {
            double min_gap = HUGE_VAL;
            for (std::size_t i = 1; i < zeros.size(); ++i) {
                min_gap = std::min(min_gap, zeros[i] - zeros[i - 1]);
            }
            if (min_gap > 4.0 * (hi - lo) / cells) {
                return static_cast<int>(zeros.size());
            }
        }
        previous = std::move(zeros);
        have_previous = true;
    }
    throw ResolutionError("count_zeros: zeros closer than the finest grid step");
}

std::vector<DensitySample> density_grid(const PiecewiseEigenfunction& psi, double x_min, double x_max,
                                        int samples) {
    if (samples < 2) {
        throw PreconditionError("density_grid: samples must be >= 2");
    }
    if (!(x_max > x_min)) {
        throw PreconditionError("density_grid: x_max must exceed x_min");
    }
    std::vector<DensitySample> grid;
    grid.reserve(samples);
    const double step = (x_max - x_min) / (samples - 1);
    for (int i = 0; i < samples; ++i) {
        const double x = (i == samples - 1) ? x_max : x_min + i * step;
        const double v = psi(x);
        grid.push_back({x, v, v * v});
    }
    return grid;
}

} // namespace wavefun
} // namespace asymm_osc
