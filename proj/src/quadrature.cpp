#include "asymm_osc/quadrature.hpp"

#include "asymm_osc/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <string>
#include <vector>

namespace asymm_osc {

namespace {

// Kronrod abscissae on [0, 1]; odd indices are the Gauss nodes.
constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a;
    double b;
    double value;
    double error;
    bool operator<(const Panel& other) const { return error < other.error; }
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double kronrod = fc * kKronrodWeights[7];
    double gauss = fc * kGaussWeights[3];
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kNodes[i];
        const double pair = f(center - dx) + f(center + dx);
        kronrod += kKronrodWeights[i] * pair;
        if (i % 2 == 1) {
            gauss += kGaussWeights[i / 2] * pair;
        }
    }
    return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

} // namespace

void QuadratureSettings::validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) {
        throw PreconditionError("quadrature tolerances must be positive");
    }
    if (max_subdivisions < 16) {
        throw PreconditionError("max_subdivisions must be >= 16");
    }
}

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureSettings& settings, int initial_panels) {
    settings.validate();
    QuadratureResult result;
    if (a == b) {
        return result;
    }
    initial_panels = std::clamp(initial_panels, 1, settings.max_subdivisions);
    std::priority_queue<Panel> panels;
    double total = 0.0;
    double error = 0.0;
    const double width = (b - a) / initial_panels;
    for (int i = 0; i < initial_panels; ++i) {
        const double lo = a + i * width;
        const double hi = (i + 1 == initial_panels) ? b : lo + width;
        Panel p = gk15(f, lo, hi);
        total += p.value;
        error += p.error;
        panels.push(p);
    }
    int count = initial_panels;
    result.evaluations = 15 * initial_panels;
    while (error > std::max(settings.abs_tol, settings.rel_tol * std::abs(total))) {
        if (count >= settings.max_subdivisions) {
            throw ConvergenceError("integrate: subdivision limit " + std::to_string(settings.max_subdivisions) +
                                   " reached on [" + std::to_string(a) + ", " + std::to_string(b) +
                                   "], error estimate " + std::to_string(error));
        }
        const Panel worst = panels.top();
        panels.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        const Panel left = gk15(f, worst.a, mid);
        const Panel right = gk15(f, mid, worst.b);
        result.evaluations += 30;
        ++count;
        panels.push(left);
        panels.push(right);
        total += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        if (count % 64 == 0) {
            // re-sum so rounding in the running totals cannot drift
            total = 0.0;
            error = 0.0;
            for (auto copy = panels; !copy.empty(); copy.pop()) {
                total += copy.top().value;
                error += copy.top().error;
            }
        }
    }
    result.value = total;
    result.error = error;
    return result;
}

} // namespace asymm_osc
