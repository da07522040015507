#include "asymm_osc/specfun.hpp"

#include "asymm_osc/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace asymm_osc::specfun {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrtPi = 1.7724538509055160273;
constexpr double kSqrt2Pi = 2.5066282746310005024;

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

// Lanczos approximation, g = 7, nine terms.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

// Gamma(x) for x >= 0.5.
double gamma_lanczos(double x) {
    const double xm = x - 1.0;
    double acc = kLanczos[0];
    for (std::size_t i = 1; i < kLanczos.size(); ++i) {
        acc += kLanczos[i] / (xm + static_cast<double>(i));
    }
    const double t = xm + kLanczosG + 0.5;
    // t^(xm + 1/2) split in two halves so it does not overflow before e^-t.
    const double half_pow = std::pow(t, 0.5 * (xm + 0.5));
    return kSqrt2Pi * half_pow * (half_pow * std::exp(-t)) * acc;
}

// ---------------------------------------------------------------------------
// Kummer series

struct SeriesResult {
    double sum;
    double abs_sum; // sum of |terms|, measures cancellation
};

constexpr int kKummerMaxTerms = 2000;

SeriesResult kummer_series(double a, double b, double z) {
    double term = 1.0;
    double sum = 1.0;
    double abs_sum = 1.0;
    int small_run = 0;
    for (int k = 0; k < kKummerMaxTerms; ++k) {
        term *= (a + k) / (b + k) * z / (k + 1);
        if (term == 0.0) {
            return {sum, abs_sum};
        }
        sum += term;
        abs_sum += std::abs(term);
        const double tol = 1e-17 * std::max(std::abs(sum), 1e-6 * abs_sum);
        small_run = std::abs(term) <= tol ? small_run + 1 : 0;
        if (small_run >= 2) {
            return {sum, abs_sum};
        }
    }
    throw ConvergenceError("kummer_m: series did not converge for a=" + std::to_string(a) +
                           " b=" + std::to_string(b) + " z=" + std::to_string(z));
}

// ---------------------------------------------------------------------------
// Parabolic cylinder function machinery

constexpr double kKummerRadius = 1.5;
constexpr double kMaxCancellation = 1e3;

void check_box(double nu, double z) {
    if (!(std::abs(nu) <= kMaxOrder)) {
        throw RangeError("pcf: order " + std::to_string(nu) + " outside |nu| <= 60");
    }
    if (!(z >= 0.0 && z <= kMaxArgument)) {
        throw RangeError("pcf: argument " + std::to_string(z) + " outside [0, 40]");
    }
}

// D_nu(z) by the even/odd Kummer decomposition; `cond` receives the
// cancellation factor of the final subtraction.
double d_kummer(double nu, double z, double& cond) {
    const double w = 0.5 * z * z;
    const double c1 = kSqrtPi * recip_gamma(0.5 * (1.0 - nu));
    const double c2 = kSqrt2Pi * z * recip_gamma(-0.5 * nu);
    const SeriesResult m1 = c1 != 0.0 ? kummer_series(-0.5 * nu, 0.5, w) : SeriesResult{0.0, 0.0};
    const SeriesResult m2 =
        c2 != 0.0 ? kummer_series(0.5 * (1.0 - nu), 1.5, w) : SeriesResult{0.0, 0.0};
    const double bracket = c1 * m1.sum - c2 * m2.sum;
    const double spread = std::abs(c1) * m1.abs_sum + std::abs(c2) * m2.abs_sum;
    cond = bracket != 0.0 ? spread / std::abs(bracket) : HUGE_VAL;
    return std::exp2(0.5 * nu) * std::exp(-0.25 * z * z) * bracket;
}

bool kummer_route(double nu, double z, PcfPoint& out) {
    double cond0 = 0.0;
    double cond1 = 0.0;
    const double d0 = d_kummer(nu, z, cond0);
    const double d1 = d_kummer(nu + 1.0, z, cond1);
    // D'_nu = (z/2) D_nu - D_{nu+1}
    const double deriv = 0.5 * z * d0 - d1;
    const double spread = std::abs(0.5 * z * d0) + std::abs(d1);
    const double cond_d = deriv != 0.0 ? spread / std::abs(deriv) : HUGE_VAL;
    if (cond0 > kMaxCancellation || cond1 * cond_d > kMaxCancellation) {
        return false;
    }
    out = {nu, z, d0, deriv};
    return true;
}

// Large-z expansion D_nu(z) ~ z^nu e^{-z^2/4} S(z),
// S = sum_k (-1)^k (-nu)_{2k} / (k! (2 z^2)^k). Returns false when the
// terms grow before they become negligible.
bool asymptotic_series(double nu, double z, double& s, double& ds) {
    const double z2 = z * z;
    double t = 1.0;
    s = 1.0;
    ds = 0.0;
    double max_term = 1.0;
    for (int k = 0; k < 600; ++k) {
        t *= -(nu - 2.0 * k) * (nu - 2.0 * k - 1.0) / (2.0 * (k + 1) * z2);
        if (t == 0.0) {
            return true;
        }
        const double dt = -2.0 * (k + 1) * t / z;
        s += t;
        ds += dt;
        max_term = std::max(max_term, std::abs(t));
        if (max_term > 10.0) {
            return false;
        }
        if (std::abs(t) < 1e-17 * std::abs(s) && std::abs(dt) < 1e-17 * (std::abs(ds) + std::abs(s))) {
            return true;
        }
    }
    return false;
}

double find_start_radius(double nu) {
    double z = 2.0 * std::sqrt(std::abs(nu) + 0.5) + 8.0;
    double s = 0.0;
    double ds = 0.0;
    while (!asymptotic_series(nu, z, s, ds)) {
        z *= 1.2;
        if (z > 400.0) {
            throw ConvergenceError("pcf: no asymptotic starting radius for nu=" + std::to_string(nu));
        }
    }
    return z;
}

struct Scaled {
    double y;
    double dy;
    double log_scale;
};

Scaled asymptotic_start(double nu, double z) {
    double s = 0.0;
    double ds = 0.0;
    asymptotic_series(nu, z, s, ds);
    Scaled st{s, (nu / z - 0.5 * z) * s + ds, nu * std::log(z) - 0.25 * z * z};
    return st;
}

void renormalize(Scaled& st) {
    const double m = std::abs(st.y) + std::abs(st.dy);
    if (m > 0.0 && std::isfinite(m)) {
        st.y /= m;
        st.dy /= m;
        st.log_scale += std::log(m);
    }
}

double max_step(double z0, double a) { return std::min(1.0, 1.5 / std::sqrt(0.25 * z0 * z0 + std::abs(a) + 1.0)); }

// One Taylor step of y'' = (z^2/4 - a) y from z0 to z0 + h. The local
// expansion is exact (entire solution); with d_m = c_m h^m,
//   m (m-1) d_m = h^2 [q0 d_{m-2} + (z0/2) h d_{m-3} + (h^2/4) d_{m-4}].
void taylor_step(double a, double z0, double h, Scaled& st) {
    const double q0 = 0.25 * z0 * z0 - a;
    const double h2 = h * h;
    const double lin = 0.5 * z0 * h;
    const double quad = 0.25 * h2;
    // d[m-1], d[m-2], d[m-3], d[m-4]
    double d1 = st.dy * h;
    double d2 = st.y;
    double d3 = 0.0;
    double d4 = 0.0;
    double ysum = d2 + d1;
    double dsum = d1; // sum m d_m
    int small_run = 0;
    for (int m = 2; m < 500; ++m) {
        const double dm = h2 / (static_cast<double>(m) * (m - 1)) * (q0 * d2 + lin * d3 + quad * d4);
        ysum += dm;
        dsum += m * dm;
        const double tol = 1e-18 * (std::abs(ysum) + std::abs(dsum));
        small_run = std::abs(dm) * m <= tol ? small_run + 1 : 0;
        if (small_run >= 4) {
            st.y = ysum;
            st.dy = dsum / h;
            return;
        }
        d4 = d3;
        d3 = d2;
        d2 = d1;
        d1 = dm;
    }
    throw ConvergenceError("pcf: Taylor step did not converge");
}

Scaled integrate_inward(double nu, double from, double to, Scaled st) {
    const double a = nu + 0.5;
    double z0 = from;
    while (z0 > to) {
        const double h = std::max(to - z0, -max_step(z0, a));
        taylor_step(a, z0, h, st);
        z0 = (h == to - z0) ? to : z0 + h;
        renormalize(st);
    }
    return st;
}

PcfPoint from_scaled(double nu, double z, const Scaled& st) {
    const double e = std::exp(st.log_scale);
    return {nu, z, st.y * e, st.dy * e};
}

PcfPoint exact_at_zero(double nu) { return {nu, 0.0, pcf_d_at_zero(nu), pcf_d_prime_at_zero(nu)}; }

} // namespace

// ---------------------------------------------------------------------------

double sin_pi(double x) {
    if (!std::isfinite(x)) {
        return std::nan("");
    }
    // reduce to r in [-1, 1], sin(pi x) = sin(pi r)
    double r = x - 2.0 * std::round(0.5 * x);
    if (r == 0.0 || r == 1.0 || r == -1.0) {
        return 0.0;
    }
    if (r > 0.5) {
        r = 1.0 - r;
    } else if (r < -0.5) {
        r = -1.0 - r;
    }
    return std::sin(kPi * r);
}

double gamma(double x) {
    if (std::isnan(x)) {
        return x;
    }
    if (is_nonpositive_integer(x)) {
        throw PoleError("gamma: pole at x=" + std::to_string(x));
    }
    if (x < 0.5) {
        return kPi / (sin_pi(x) * gamma_lanczos(1.0 - x));
    }
    return gamma_lanczos(x);
}

double recip_gamma(double x) {
    if (std::isnan(x)) {
        return x;
    }
    if (is_nonpositive_integer(x)) {
        return 0.0;
    }
    if (x < 0.5) {
        return sin_pi(x) * gamma_lanczos(1.0 - x) / kPi;
    }
    return 1.0 / gamma_lanczos(x);
}

double kummer_m(double a, double b, double z) {
    if (is_nonpositive_integer(b)) {
        throw DomainError("kummer_m: b=" + std::to_string(b) + " is a non-positive integer");
    }
    if (!(std::abs(z) <= 100.0)) {
        throw RangeError("kummer_m: |z| > 100");
    }
    if (z < 0.0 && !is_nonpositive_integer(a)) {
        // M(a, b, z) = e^z M(b - a, b, -z)
        return std::exp(z) * kummer_series(b - a, b, -z).sum;
    }
    return kummer_series(a, b, z).sum;
}

double pcf_d_at_zero(double nu) { return kSqrtPi * std::exp2(0.5 * nu) * recip_gamma(0.5 * (1.0 - nu)); }

double pcf_d_prime_at_zero(double nu) {
    return -kSqrtPi * std::exp2(0.5 * (nu + 1.0)) * recip_gamma(-0.5 * nu);
}

} // namespace asymm_osc::specfun

namespace asymm_osc::specfun {

PcfPoint pcf(double nu, double z) {
    check_box(nu, z);
    if (z == 0.0) {
        return exact_at_zero(nu);
    }
    PcfPoint out;
    if (z <= kKummerRadius && kummer_route(nu, z, out)) {
        return out;
    }
    const double start = find_start_radius(nu);
    Scaled st = asymptotic_start(nu, std::max(z, start));
    renormalize(st);
    if (z < start) {
        st = integrate_inward(nu, start, z, st);
    }
    return from_scaled(nu, z, st);
}

double pcf_d(double nu, double z) { return pcf(nu, z).value; }

double pcf_d_prime(double nu, double z) { return pcf(nu, z).derivative; }

PcfEvaluator::PcfEvaluator(double nu) : nu_(nu), start_(0.0) {
    check_box(nu, 0.0);
    start_ = find_start_radius(nu);
    Scaled st = asymptotic_start(nu, start_);
    renormalize(st);
    const double a = nu + 0.5;
    double z0 = start_;
    nodes_.push_back({z0, st.y, st.dy, st.log_scale});
    while (z0 > 0.0) {
        const double h = std::max(-z0, -max_step(z0, a));
        taylor_step(a, z0, h, st);
        z0 = (h == -z0) ? 0.0 : z0 + h;
        renormalize(st);
        nodes_.push_back({z0, st.y, st.dy, st.log_scale});
    }
}

PcfPoint PcfEvaluator::operator()(double z) const {
    check_box(nu_, z);
    if (z == 0.0) {
        return exact_at_zero(nu_);
    }
    PcfPoint out;
    if (z <= kKummerRadius && kummer_route(nu_, z, out)) {
        return out;
    }
    if (z >= start_) {
        Scaled st = asymptotic_start(nu_, z);
        renormalize(st);
        return from_scaled(nu_, z, st);
    }
    // first node strictly below z; the one before it is the checkpoint above
    const auto below = std::partition_point(nodes_.begin(), nodes_.end(),
                                            [z](const Node& n) { return n.z >= z; });
    const Node& above = *(below - 1);
    Scaled st{above.y, above.dy, above.log_scale};
    if (above.z != z) {
        taylor_step(nu_ + 0.5, above.z, z - above.z, st);
        renormalize(st);
    }
    return from_scaled(nu_, z, st);
}

double hermite_h(int n, double x) {
    if (n < 0 || n > 60) {
        throw PreconditionError("hermite_h: order must be in [0, 60]");
    }
    double h_prev = 1.0;
    if (n == 0) {
        return h_prev;
    }
    double h = 2.0 * x;
    for (int k = 1; k < n; ++k) {
        const double next = 2.0 * x * h - 2.0 * k * h_prev;
        h_prev = h;
        h = next;
    }
    return h;
}

double hermite_h_explicit(int n, double x) {
    if (n < 0 || n > 60) {
        throw PreconditionError("hermite_h_explicit: order must be in [0, 60]");
    }
    // n! / (k! (n-2k)!) built incrementally from the k = 0 term.
    double coeff = 1.0;
    double sum = 0.0;
    const double two_x = 2.0 * x;
    for (int k = 0; 2 * k <= n; ++k) {
        if (k > 0) {
            coeff *= -static_cast<double>(n - 2 * k + 2) * (n - 2 * k + 1) / k;
        }
        sum += coeff * std::pow(two_x, n - 2 * k);
    }
    return sum;
}

} // namespace asymm_osc::specfun
