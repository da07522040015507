#pragma once

#include <vector>

// Real-argument special functions: Gamma, 1/Gamma, Kummer's M, parabolic
// cylinder functions D_nu(z) on z >= 0, and Hermite polynomials.
//
// All free functions are pure. PcfEvaluator is immutable after construction
// and may be shared between threads.

namespace asymm_osc::specfun {

// Supported evaluation box of the parabolic cylinder functions.
inline constexpr double kMaxOrder = 60.0;    // |nu| <= kMaxOrder
inline constexpr double kMaxArgument = 40.0; // 0 <= z <= kMaxArgument

// sin(pi x), exactly zero at integers.
double sin_pi(double x);

// Gamma(x). Throws PoleError at x in {0, -1, -2, ...}.
double gamma(double x);

// 1/Gamma(x). Entire: exactly 0 at non-positive integers, never throws.
double recip_gamma(double x);

// Kummer's confluent hypergeometric function M(a, b, z) = 1F1(a; b; z).
// Throws DomainError when b is a non-positive integer, RangeError when
// |z| > 100 and ConvergenceError if the series fails to settle.
double kummer_m(double a, double b, double z);

struct PcfPoint {
    double nu = 0.0;
    double z = 0.0;
    double value = 0.0;      // D_nu(z)
    double derivative = 0.0; // dD_nu/dz
};

// D_nu(0) = sqrt(pi) 2^{nu/2} / Gamma((1 - nu)/2)
double pcf_d_at_zero(double nu);
// D'_nu(0) = -sqrt(pi) 2^{(nu+1)/2} / Gamma(-nu/2)
double pcf_d_prime_at_zero(double nu);

// D_nu(z) and D'_nu(z) for |nu| <= kMaxOrder, 0 <= z <= kMaxArgument.
// Throws RangeError outside that box.
PcfPoint pcf(double nu, double z);
double pcf_d(double nu, double z);
double pcf_d_prime(double nu, double z);

// Fixed-order evaluator. Integrates the Weber equation once from the
// asymptotic region down to z = 0 and keeps the checkpoints, so each later
// evaluation costs a single short Taylor step.
class PcfEvaluator {
public:
    explicit PcfEvaluator(double nu);

    double order() const { return nu_; }
    // Radius beyond which the asymptotic series is used directly.
    double asymptotic_radius() const { return start_; }

    PcfPoint operator()(double z) const;
    double value(double z) const { return (*this)(z).value; }

private:
    struct Node {
        double z;
        double y;         // value mantissa
        double dy;        // derivative mantissa
        double log_scale; // D = y * exp(log_scale)
    };

    double nu_;
    double start_;
    std::vector<Node> nodes_; // descending in z, nodes_.front().z == start_
};

// Physicists' Hermite polynomial H_n(x) by the three-term recurrence.
// Requires 0 <= n <= 60 (PreconditionError otherwise).
double hermite_h(int n, double x);

// H_n(x) from the explicit sum  sum_k (-1)^k n! / (k! (n-2k)!) (2x)^{n-2k}.
double hermite_h_explicit(int n, double x);

} // namespace asymm_osc::specfun
