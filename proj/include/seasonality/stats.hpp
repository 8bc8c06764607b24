#pragma once

// Descriptive footers and one-sample significance tests over monthly vectors.
// NaN entries (undefined months) are skipped; `n` is the number of remaining entries.

#include "seasonality/special_functions.hpp"
#include "seasonality/types.hpp"

#include <cmath>
#include <vector>

namespace seasonality {

enum class TestKind { chi_square, t_one_sample, z_one_sample };

inline const char* to_string(TestKind k) noexcept {
    switch (k) {
        case TestKind::chi_square: return "chi_square";
        case TestKind::t_one_sample: return "t_one_sample";
        case TestKind::z_one_sample: return "z_one_sample";
    }
    return "unknown";
}

template <typename Scalar>
struct TestResult {
    Scalar statistic = 0;
    Scalar p_value = 1;
    int dof = 0;  // 0 for the z-test
    Scalar hypothesized_value = 0;
    TestKind kind = TestKind::chi_square;
};

/// Mean, sample standard deviation (n - 1) and the mean +/- 2 sd band.
template <typename Scalar>
struct DescriptiveStats {
    Scalar mean = 0;
    Scalar std_dev = 0;
    Scalar band_low = 0;
    Scalar band_high = 0;
    Eigen::Index n = 0;
};

namespace detail {

template <typename Derived>
std::vector<typename Derived::Scalar> defined_values(const Eigen::MatrixBase<Derived>& x) {
    std::vector<typename Derived::Scalar> v;
    v.reserve(static_cast<std::size_t>(x.size()));
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        if (!std::isnan(x(i))) v.push_back(x(i));
    }
    return v;
}

}  // namespace detail

template <typename Derived>
DescriptiveStats<typename Derived::Scalar> describe(const Eigen::MatrixBase<Derived>& x) {
    using Scalar = typename Derived::Scalar;
    const auto v = detail::defined_values(x);
    if (v.size() < 2) throw ValidationError("describe: needs at least 2 values");
    const Eigen::Map<const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>> m(v.data(), static_cast<Eigen::Index>(v.size()));
    DescriptiveStats<Scalar> d;
    d.n = m.size();
    d.mean = m.mean();
    d.std_dev = std::sqrt((m.array() - d.mean).square().sum() / static_cast<Scalar>(d.n - 1));
    d.band_low = d.mean - Scalar(2) * d.std_dev;
    d.band_high = d.mean + Scalar(2) * d.std_dev;
    return d;
}

/// Pearson goodness-of-fit of integer counts against equal expected counts T/n, dof n - 1.
template <typename Derived>
TestResult<double> chi_square_uniform(const Eigen::MatrixBase<Derived>& counts) {
    const Eigen::VectorXd o = counts.template cast<double>();
    if (o.size() < 2) throw ValidationError("chi_square_uniform: needs at least 2 categories");
    if ((o.array() < 0.0).any()) throw ValidationError("chi_square_uniform: negative count");
    const double total = o.sum();
    if (!(total > 0.0)) throw ValidationError("chi_square_uniform: zero total");
    const double expected = total / static_cast<double>(o.size());
    TestResult<double> r;
    r.kind = TestKind::chi_square;
    r.dof = static_cast<int>(o.size()) - 1;
    r.hypothesized_value = expected;
    r.statistic = (o.array() - expected).square().sum() / expected;
    r.p_value = chi_square_sf(r.statistic, r.dof);
    return r;
}

/// t = (mean - k) / (s / sqrt(n)) with the sample standard deviation; two-sided p, n - 1 dof.
template <typename Derived>
TestResult<typename Derived::Scalar> t_one_sample(const Eigen::MatrixBase<Derived>& x,
                                                  typename Derived::Scalar k) {
    using Scalar = typename Derived::Scalar;
    const auto d = describe(x);
    if (!(d.std_dev > Scalar(0))) throw ValidationError("degenerate sample");
    TestResult<Scalar> r;
    r.kind = TestKind::t_one_sample;
    r.dof = static_cast<int>(d.n) - 1;
    r.hypothesized_value = k;
    r.statistic = (d.mean - k) / (d.std_dev / std::sqrt(static_cast<Scalar>(d.n)));
    r.p_value = t_two_sided_p(r.statistic, r.dof);
    return r;
}

/// z = (mean - k) / (sigma / sqrt(n)) for a known sigma; two-sided normal p.
template <typename Derived>
TestResult<typename Derived::Scalar> z_one_sample(const Eigen::MatrixBase<Derived>& x,
                                                  typename Derived::Scalar k,
                                                  typename Derived::Scalar sigma) {
    using Scalar = typename Derived::Scalar;
    if (!(sigma > Scalar(0))) throw ValidationError("z_one_sample: sigma must be > 0");
    const auto v = detail::defined_values(x);
    if (v.empty()) throw ValidationError("z_one_sample: no values");
    Scalar mean(0);
    for (auto s : v) mean += s;
    mean /= static_cast<Scalar>(v.size());
    TestResult<Scalar> r;
    r.kind = TestKind::z_one_sample;
    r.hypothesized_value = k;
    r.statistic = (mean - k) / (sigma / std::sqrt(static_cast<Scalar>(v.size())));
    r.p_value = normal_two_sided_p(r.statistic);
    return r;
}

}  // namespace seasonality
