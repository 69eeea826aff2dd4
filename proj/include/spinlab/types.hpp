#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace spinlab {

using Complex = std::complex<double>;

/// Spin quantum number, stored as 2s so that half-integer spins stay exact.
struct SpinQuantum {
    int doubled = 0;

    constexpr int dimension() const noexcept { return doubled + 1; }
    constexpr double value() const noexcept { return 0.5 * doubled; }
    constexpr bool is_integer() const noexcept { return doubled % 2 == 0; }

    friend constexpr bool operator==(SpinQuantum, SpinQuantum) noexcept = default;
    friend constexpr auto operator<=>(SpinQuantum, SpinQuantum) noexcept = default;
};

constexpr SpinQuantum spin_from_doubled(int doubled) noexcept { return SpinQuantum{doubled}; }

// Library-wide default tolerances. Callers may override per operation.
inline constexpr double kCertificationTol = 1e-10;  // moment residuals counted as zero
inline constexpr double kSearchTol = 1e-8;          // search declares success below this
inline constexpr double kRankTol = 1e-9;            // relative singular-value cutoff
inline constexpr double kMatchTol = 1e-6;           // point-multiset matching

struct DegreeMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct UnsupportedFamily : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ClosureOverflow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidRank : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ZeroPolynomial : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Binomial coefficient C(n, k) as a double. The running product after step i
/// equals C(n-k+i, i), an integer, so every intermediate is exact in long
/// double up to C(62, 31); beyond that the result degrades gracefully.
inline double binomial_coefficient(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    if (k > n - k) k = n - k;
    long double acc = 1.0L;
    for (int i = 1; i <= k; ++i) {
        acc = acc * static_cast<long double>(n - k + i) / static_cast<long double>(i);
    }
    return static_cast<double>(acc);
}

}  // namespace spinlab
