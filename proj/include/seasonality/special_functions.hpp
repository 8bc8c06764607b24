#pragma once

// Regularized incomplete gamma and beta functions, and the distribution functions built on
// them. Continued fractions use the modified Lentz method.

#include "seasonality/types.hpp"

#include <cmath>
#include <limits>

namespace seasonality {

namespace detail {

template <typename Scalar>
inline constexpr Scalar kEps = std::numeric_limits<Scalar>::epsilon();

template <typename Scalar>
inline constexpr Scalar kTiny = std::numeric_limits<Scalar>::min() / std::numeric_limits<Scalar>::epsilon();

inline constexpr int kMaxIterations = 10000;

// P(a, x) by its power series; converges quickly for x < a + 1.
template <typename Scalar>
Scalar gamma_p_series(Scalar a, Scalar x) {
    Scalar ap = a;
    Scalar term = Scalar(1) / a;
    Scalar sum = term;
    for (int n = 0; n < kMaxIterations; ++n) {
        ap += Scalar(1);
        term *= x / ap;
        sum += term;
        if (std::abs(term) < std::abs(sum) * kEps<Scalar>) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Q(a, x) by continued fraction; converges quickly for x >= a + 1.
template <typename Scalar>
Scalar gamma_q_fraction(Scalar a, Scalar x) {
    Scalar b = x + Scalar(1) - a;
    Scalar c = Scalar(1) / kTiny<Scalar>;
    Scalar d = Scalar(1) / b;
    Scalar h = d;
    for (int i = 1; i < kMaxIterations; ++i) {
        const Scalar an = -static_cast<Scalar>(i) * (static_cast<Scalar>(i) - a);
        b += Scalar(2);
        d = an * d + b;
        if (std::abs(d) < kTiny<Scalar>) d = kTiny<Scalar>;
        c = b + an / c;
        if (std::abs(c) < kTiny<Scalar>) c = kTiny<Scalar>;
        d = Scalar(1) / d;
        const Scalar delta = d * c;
        h *= delta;
        if (std::abs(delta - Scalar(1)) < kEps<Scalar>) break;
    }
    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

// Continued fraction for I_x(a, b); accurate for x < (a + 1) / (a + b + 2).
template <typename Scalar>
Scalar beta_fraction(Scalar a, Scalar b, Scalar x) {
    const Scalar qab = a + b;
    const Scalar qap = a + Scalar(1);
    const Scalar qam = a - Scalar(1);
    Scalar c = Scalar(1);
    Scalar d = Scalar(1) - qab * x / qap;
    if (std::abs(d) < kTiny<Scalar>) d = kTiny<Scalar>;
    d = Scalar(1) / d;
    Scalar h = d;
    for (int m = 1; m < kMaxIterations; ++m) {
        const auto mm = static_cast<Scalar>(m);
        const Scalar m2 = Scalar(2) * mm;
        Scalar aa = mm * (b - mm) * x / ((qam + m2) * (a + m2));
        d = Scalar(1) + aa * d;
        if (std::abs(d) < kTiny<Scalar>) d = kTiny<Scalar>;
        c = Scalar(1) + aa / c;
        if (std::abs(c) < kTiny<Scalar>) c = kTiny<Scalar>;
        d = Scalar(1) / d;
        h *= d * c;
        aa = -(a + mm) * (qab + mm) * x / ((a + m2) * (qap + m2));
        d = Scalar(1) + aa * d;
        if (std::abs(d) < kTiny<Scalar>) d = kTiny<Scalar>;
        c = Scalar(1) + aa / c;
        if (std::abs(c) < kTiny<Scalar>) c = kTiny<Scalar>;
        d = Scalar(1) / d;
        const Scalar delta = d * c;
        h *= delta;
        if (std::abs(delta - Scalar(1)) < kEps<Scalar>) break;
    }
    return h;
}

}  // namespace detail

/// Regularized lower incomplete gamma P(a, x).
template <typename Scalar>
Scalar gamma_p(Scalar a, Scalar x) {
    if (!(a > Scalar(0)) || x < Scalar(0)) throw ValidationError("gamma_p: requires a > 0 and x >= 0");
    if (x == Scalar(0)) return Scalar(0);
    if (std::isinf(x)) return Scalar(1);
    return x < a + Scalar(1) ? detail::gamma_p_series(a, x) : Scalar(1) - detail::gamma_q_fraction(a, x);
}

/// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x).
template <typename Scalar>
Scalar gamma_q(Scalar a, Scalar x) {
    if (!(a > Scalar(0)) || x < Scalar(0)) throw ValidationError("gamma_q: requires a > 0 and x >= 0");
    if (x == Scalar(0)) return Scalar(1);
    if (std::isinf(x)) return Scalar(0);
    return x < a + Scalar(1) ? Scalar(1) - detail::gamma_p_series(a, x) : detail::gamma_q_fraction(a, x);
}

/// Regularized incomplete beta I_x(a, b).
template <typename Scalar>
Scalar incomplete_beta(Scalar a, Scalar b, Scalar x) {
    if (!(a > Scalar(0)) || !(b > Scalar(0))) throw ValidationError("incomplete_beta: requires a, b > 0");
    if (x < Scalar(0) || x > Scalar(1)) throw ValidationError("incomplete_beta: x outside [0, 1]");
    if (x == Scalar(0)) return Scalar(0);
    if (x == Scalar(1)) return Scalar(1);
    const Scalar log_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) + a * std::log(x) +
                             b * std::log1p(-x);
    const Scalar front = std::exp(log_front);
    if (x < (a + Scalar(1)) / (a + b + Scalar(2))) return front * detail::beta_fraction(a, b, x) / a;
    return Scalar(1) - front * detail::beta_fraction(b, a, Scalar(1) - x) / b;
}

/// Two-sided tail P(|T| >= |t|) of Student's t with `dof` degrees of freedom.
template <typename Scalar>
Scalar t_two_sided_p(Scalar t, int dof) {
    if (dof < 1) throw ValidationError("t distribution: dof must be >= 1");
    if (std::isinf(t)) return Scalar(0);
    const auto nu = static_cast<Scalar>(dof);
    return incomplete_beta(nu / Scalar(2), Scalar(0.5), nu / (nu + t * t));
}

/// Student's t cumulative distribution function.
template <typename Scalar>
Scalar t_cdf(Scalar t, int dof) {
    const Scalar tail = t_two_sided_p(t, dof) / Scalar(2);
    return t > Scalar(0) ? Scalar(1) - tail : tail;
}

template <typename Scalar>
Scalar normal_cdf(Scalar z) {
    return Scalar(0.5) * std::erfc(-z / std::sqrt(Scalar(2)));
}

/// Two-sided tail P(|Z| >= |z|) of the standard normal.
template <typename Scalar>
Scalar normal_two_sided_p(Scalar z) {
    return std::erfc(std::abs(z) / std::sqrt(Scalar(2)));
}

template <typename Scalar>
Scalar chi_square_cdf(Scalar x, int dof) {
    if (dof < 1) throw ValidationError("chi-square distribution: dof must be >= 1");
    return gamma_p(static_cast<Scalar>(dof) / Scalar(2), x / Scalar(2));
}

/// Upper tail P(X >= x) of chi-square with `dof` degrees of freedom.
template <typename Scalar>
Scalar chi_square_sf(Scalar x, int dof) {
    if (dof < 1) throw ValidationError("chi-square distribution: dof must be >= 1");
    return gamma_q(static_cast<Scalar>(dof) / Scalar(2), x / Scalar(2));
}

}  // namespace seasonality
