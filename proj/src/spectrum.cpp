#include "asymm_osc/spectrum.hpp"

#include "asymm_osc/errors.hpp"
#include "asymm_osc/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace asymm_osc {

void OscillatorConfig::validate() const {
    if (!std::isfinite(s) || s < 1.0) {
        throw PreconditionError("frequency ratio s = omega_plus/omega_minus must be >= 1 (got " +
                                std::to_string(s) +
                                "); swap the two frequencies so the stiffer spring is on the right");
    }
    if (!std::isfinite(omega_plus) || omega_plus <= 0.0) {
        throw PreconditionError("omega_plus must be positive (got " + std::to_string(omega_plus) + ")");
    }
}

std::size_t BracketLattice::coincident_count() const {
    return static_cast<std::size_t>(
        std::count_if(poles.begin(), poles.end(), [](const Pole& p) { return p.family == PoleFamily::both; }));
}

namespace spectrum {

namespace {

constexpr int kMaxIterations = 300;
constexpr double kRootTol = 1e-14;
constexpr double kIntegerTol = 1e-9;

bool near_integer(double x, double& rounded) {
    rounded = std::round(x);
    return std::abs(x - rounded) <= kIntegerTol;
}

// Brent's method on [a, b] with f(a) > 0 > f(b), both finite.
template <class F>
double brent(F&& f, double a, double b, double fa, double fb, int& iterations) {
    double c = a;
    double fc = fa;
    double d = b - a;
    double e = d;
    for (; iterations < kMaxIterations; ++iterations) {
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if (std::abs(fc) < std::abs(fb)) {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        const double tol = 2.0 * std::numeric_limits<double>::epsilon() * std::abs(b) + 0.5 * kRootTol;
        const double xm = 0.5 * (c - b);
        if (std::abs(xm) <= tol || fb == 0.0) {
            return b;
        }
        if (std::abs(e) >= tol && std::abs(fa) > std::abs(fb)) {
            double p;
            double q;
            const double s = fb / fa;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                const double qq = fa / fc;
                const double r = fb / fc;
                p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) {
                q = -q;
            }
            p = std::abs(p);
            if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol * q), std::abs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += std::abs(d) > tol ? d : (xm > 0.0 ? tol : -tol);
        fb = f(b);
    }
    throw ConvergenceError("solve_spectrum: root did not converge within " + std::to_string(kMaxIterations) +
                           " iterations");
}

// Root of the decreasing h on the open interval (lo, hi). h(lo+) is +inf
// unless `lo_value` is given and h(hi-) is -inf.
double solve_interval(const OscillatorConfig& config, double lo, double hi,
                      std::optional<double> lo_value) {
    auto h = [&](double nu) { return pole_ratio_residual(config, nu); };
    double f_lo = lo_value.value_or(std::numeric_limits<double>::infinity());
    double f_hi = -std::numeric_limits<double>::infinity();
    int iterations = 0;
    // bisect until both ends carry finite values
    while (!std::isfinite(f_lo) || !std::isfinite(f_hi)) {
        if (++iterations > kMaxIterations) {
            throw ConvergenceError("solve_spectrum: could not bracket root in (" + std::to_string(lo) + ", " +
                                   std::to_string(hi) + ")");
        }
        const double mid = 0.5 * (lo + hi);
        const double f = h(mid);
        if (f == 0.0) {
            return mid;
        }
        if (f > 0.0) {
            lo = mid;
            f_lo = f;
        } else {
            hi = mid;
            f_hi = f;
        }
    }
    return brent(h, lo, hi, f_lo, f_hi, iterations);
}

EigenRecord make_record(const OscillatorConfig& config, int n, double nu) {
    EigenRecord rec;
    rec.n = n;
    double nu_int = 0.0;
    double nm_int = 0.0;
    const double nm = nu_minus(config, nu);
    if (near_integer(nu, nu_int) && near_integer(nm, nm_int) && nu_int >= 0.0 && nm_int >= 0.0 &&
        std::fmod(nu_int - nm_int, 2.0) == 0.0) {
        rec.glued_hermite = true;
        nu = nu_int + 0.0; // no negative zero
    }
    rec.nu_plus = nu;
    rec.nu_minus = nu_minus(config, nu);
    rec.energy = energy(config, nu);
    return rec;
}

} // namespace

double f_ratio(double nu) {
    const double upper = 0.5 * (1.0 - nu);
    if (upper <= 0.0 && upper == std::floor(upper)) {
        throw PoleError("f_ratio: pole at nu=" + std::to_string(nu));
    }
    return specfun::gamma(upper) * specfun::recip_gamma(-0.5 * nu);
}

double nu_minus(const OscillatorConfig& config, double nu_plus) {
    return config.s * nu_plus + 0.5 * (config.s - 1.0);
}

double energy(const OscillatorConfig& config, double nu_plus) { return config.omega_plus * (nu_plus + 0.5); }

double pole_ratio_residual(const OscillatorConfig& config, double nu_plus) {
    return f_ratio(nu_plus) + f_ratio(nu_minus(config, nu_plus)) / std::sqrt(config.s);
}

double eigen_residual(const OscillatorConfig& config, double nu_plus) {
    using specfun::recip_gamma;
    const double nm = nu_minus(config, nu_plus);
    return recip_gamma(0.5 * (1.0 - nm)) * recip_gamma(-0.5 * nu_plus) +
           recip_gamma(-0.5 * nm) * recip_gamma(0.5 * (1.0 - nu_plus)) / std::sqrt(config.s);
}

BracketLattice build_brackets(const OscillatorConfig& config, double window_max) {
    config.validate();
    if (!(window_max > 0.0)) {
        throw PreconditionError("build_brackets: window_max must be positive");
    }
    BracketLattice lattice;
    lattice.window_max = window_max;
    std::vector<Pole> raw;
    for (int m = 0; 2.0 * m + 1.0 <= window_max; ++m) {
        raw.push_back({2.0 * m + 1.0, PoleFamily::native});
    }
    for (int m = 0;; ++m) {
        const double p = (4.0 * m + 3.0) / (2.0 * config.s) - 0.5;
        if (p > window_max) {
            break;
        }
        raw.push_back({p, PoleFamily::composed});
    }
    std::sort(raw.begin(), raw.end(), [](const Pole& a, const Pole& b) { return a.position < b.position; });
    for (const Pole& p : raw) {
        if (!lattice.poles.empty()) {
            Pole& last = lattice.poles.back();
            if (last.family != p.family && last.family != PoleFamily::both &&
                p.position - last.position <= BracketLattice::kCoincidenceTol) {
                // keep the native (exact odd integer) position
                if (p.family == PoleFamily::native) {
                    last.position = p.position;
                }
                last.family = PoleFamily::both;
                continue;
            }
        }
        lattice.poles.push_back(p);
    }
    return lattice;
}

std::vector<EigenRecord> solve_spectrum(const OscillatorConfig& config, int count) {
    config.validate();
    if (count < 1) {
        throw PreconditionError("solve_spectrum: count must be >= 1");
    }
    double window = 2.0 * count / (1.0 + config.s) + 2.0;
    for (;;) {
        const BracketLattice lattice = build_brackets(config, window);
        std::vector<double> roots;
        double lo = lattice.lower;
        std::optional<double> lo_value = pole_ratio_residual(config, lo);
        for (const Pole& pole : lattice.poles) {
            if (static_cast<int>(roots.size()) >= count) {
                break;
            }
            roots.push_back(solve_interval(config, lo, pole.position, lo_value));
            if (pole.family == PoleFamily::both && static_cast<int>(roots.size()) < count) {
                roots.push_back(pole.position);
            }
            lo = pole.position;
            lo_value.reset();
        }
        if (static_cast<int>(roots.size()) >= count) {
            std::vector<EigenRecord> records;
            records.reserve(count);
            for (int n = 0; n < count; ++n) {
                records.push_back(make_record(config, n, roots[n]));
            }
            return records;
        }
        window *= 2.0;
    }
}

std::optional<std::pair<int, int>> detect_glued_ratio(double s) {
    if (!std::isfinite(s) || s < 1.0) {
        throw PreconditionError("detect_glued_ratio: s must be >= 1");
    }
    for (int n = 0; n <= 100; ++n) {
        const double m = std::round((s * (4.0 * n + 3.0) - 3.0) / 4.0);
        if (m < 0.0 || m > 100.0) {
            continue;
        }
        if (std::abs(s - (4.0 * m + 3.0) / (4.0 * n + 3.0)) <= 1e-9) {
            return std::make_pair(static_cast<int>(m), n);
        }
    }
    return std::nullopt;
}

} // namespace spectrum
} // namespace asymm_osc
