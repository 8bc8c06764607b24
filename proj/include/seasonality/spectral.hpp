#pragma once

// Direct (O(T^2)) discrete Fourier analysis of a short monthly series.
// X_k = sum_t x_t exp(-2 pi i k t / T), unnormalized; the DC bin k = 0 is not reported.

#include "seasonality/types.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

namespace seasonality {

template <typename Scalar>
struct SpectralBin {
    int k = 0;
    Scalar frequency = 0;  // cycles per sample (month), k / T
    Scalar magnitude = 0;
};

template <typename Scalar>
struct SpectralPeak {
    Scalar frequency = 0;
    Scalar period = 0;  // 1 / frequency, in samples
    Scalar amplitude = 0;
};

/// Complex DFT coefficient for bin k.
template <typename Derived>
std::complex<typename Derived::Scalar> dft_coefficient(const Eigen::MatrixBase<Derived>& x, Eigen::Index k) {
    using Scalar = typename Derived::Scalar;
    const Eigen::Index n = x.size();
    std::complex<Scalar> acc(0, 0);
    for (Eigen::Index t = 0; t < n; ++t) {
        // reduce k t mod n first so the angle stays small
        const auto phase = static_cast<Scalar>((k * t) % n) / static_cast<Scalar>(n);
        const Scalar angle = -Scalar(2) * std::numbers::pi_v<Scalar> * phase;
        acc += x(t) * std::complex<Scalar>(std::cos(angle), std::sin(angle));
    }
    return acc;
}

/// |X_k| for k = 1 .. floor(T/2).
template <typename Derived>
std::vector<SpectralBin<typename Derived::Scalar>> dft_magnitudes(const Eigen::MatrixBase<Derived>& x) {
    using Scalar = typename Derived::Scalar;
    const Eigen::Index n = x.size();
    if (n < 4) throw ValidationError("series too short");
    if (!x.allFinite()) throw ValidationError("dft: series has a non-finite value");
    std::vector<SpectralBin<Scalar>> bins;
    bins.reserve(static_cast<std::size_t>(n / 2));
    for (Eigen::Index k = 1; k <= n / 2; ++k) {
        bins.push_back({static_cast<int>(k), static_cast<Scalar>(k) / static_cast<Scalar>(n),
                        std::abs(dft_coefficient(x, k))});
    }
    return bins;
}

/// The `count` largest-magnitude bins, descending; equal magnitudes keep the lower frequency first.
template <typename Derived>
std::vector<SpectralPeak<typename Derived::Scalar>> top_peaks(const Eigen::MatrixBase<Derived>& x, int count) {
    using Scalar = typename Derived::Scalar;
    if (count < 1) throw ValidationError("top_peaks: count must be >= 1");
    if (x.size() >= 4 && count > x.size() / 2) {
        throw ValidationError("top_peaks: count exceeds the " + std::to_string(x.size() / 2) + " available bins");
    }
    auto bins = dft_magnitudes(x);
    std::sort(bins.begin(), bins.end(), [](const auto& a, const auto& b) {
        if (a.magnitude != b.magnitude) return a.magnitude > b.magnitude;
        return a.k < b.k;
    });
    std::vector<SpectralPeak<Scalar>> peaks;
    for (int i = 0; i < count; ++i) {
        const auto& b = bins[static_cast<std::size_t>(i)];
        peaks.push_back({b.frequency, Scalar(1) / b.frequency, b.magnitude});
    }
    return peaks;
}

}  // namespace seasonality
