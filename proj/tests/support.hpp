#pragma once

#include <array>
#include <cmath>
#include <numbers>

namespace support {

// Physicists' Hermite polynomial in long double, independent of the library.
inline long double hermite(int n, long double x) {
    long double a = 1.0L;
    if (n == 0) {
        return a;
    }
    long double b = 2.0L * x;
    for (int k = 1; k < n; ++k) {
        const long double c = 2.0L * x * b - 2.0L * k * a;
        a = b;
        b = c;
    }
    return b;
}

// D_n(z) = 2^{-n/2} e^{-z^2/4} H_n(z / sqrt 2) for integer n.
inline double pcf_integer_oracle(int n, double z) {
    const long double zz = z;
    return static_cast<double>(std::pow(2.0L, -0.5L * n) * std::exp(-zz * zz / 4.0L) *
                               hermite(n, zz / std::sqrt(2.0L)));
}

// Normalized symmetric-oscillator eigenfunction with frequency omega.
inline double hermite_function(int n, double omega, double x) {
    long double fact = 1.0L;
    for (int k = 2; k <= n; ++k) {
        fact *= k;
    }
    const long double y = std::sqrt(static_cast<long double>(omega)) * x;
    const long double c = std::pow(omega / std::numbers::pi_v<long double>, 0.25L) /
                          std::sqrt(std::pow(2.0L, n) * fact);
    return static_cast<double>(c * hermite(n, y) * std::exp(-y * y / 2.0L));
}

struct SpectrumRow {
    double s;
    std::array<double, 8> nu;
};

// Reference first eight nu_+ for several ratios (s = 5 handled separately).
inline const std::array<SpectrumRow, 6> kTable1 = {{
    {1.0, {0, 1, 2, 3, 4, 5, 6, 7}},
    {1.4, {-0.0815358, 0.748707, 1.5841, 2.41625, 3.25019, 4.08329, 4.91663, 5.75007}},
    {std::sqrt(5.0), {-0.183585, 0.423418, 1.04532, 1.66393, 2.2807, 2.89906, 3.51751, 4.13516}},
    {std::sqrt(11.0), {-0.256549, 0.192094, 0.656273, 1.12213, 1.58579, 2.0482, 2.51118, 2.97491}},
    {4.0, {-0.286739, 0.0982773, 0.497364, 0.899531, 1.3008, 1.70056, 2.09984, 2.49961}},
    {std::sqrt(30.0), {-0.330956, -0.0361063, 0.269545, 0.578901, 0.889065, 1.19877, 1.50768, 1.81608}},
}};

// The s = 5 reference row; it omits the root at nu = 2.
inline constexpr std::array<double, 8> kTable1Ratio5 = {-0.318944, 0,       0.330721, 0.665139,
                                                       1,         1.33404, 1.66719,  2.33301};

// Reference <sqrt5, i| x |sqrt5, j>.
inline constexpr std::array<std::array<double, 8>, 8> kTable2 = {{
    {-0.1321, -0.4213, -0.0536, 0.0161, -0.0040, -0.0001, -0.0009, 0.0006},
    {-0.4213, -0.2530, 0.5851, -0.0696, 0.0180, -0.0036, 0.0005, -0.0010},
    {-0.0536, 0.5851, -0.3303, -0.7189, 0.0791, -0.0198, -0.0041, -0.0003},
    {0.0161, -0.0696, -0.7189, -0.3858, -0.8320, 0.0903, 0.0230, -0.0049},
    {-0.0041, 0.0180, 0.0791, -0.8320, -0.4380, -0.9286, -0.1010, 0.0253},
    {-0.0001, -0.0036, -0.0198, 0.0903, 0.9286, -0.4862, 1.0171, -0.1090},
    {-0.0010, 0.0005, -0.0041, 0.0230, -0.1010, 1.0171, -0.5272, -1.0995},
    {0.0006, 0.0010, -0.0003, -0.0049, 0.0253, -0.1090, -1.0995, -0.5562},
}};

// Length scale under which the x-matrix is compared with kTable2.
inline const double kTable2OmegaPlus = 2.0 * std::sqrt(5.0);

inline bool rel_close(double a, double b, double rel, double abs_floor = 0.0) {
    return std::abs(a - b) <= rel * std::abs(b) + abs_floor;
}

} // namespace support
