#pragma once

// Entropy, Hill diversity and inequality indices over a vector of category weights.
//
// All functions accept any Eigen dense vector expression. NaN entries mark missing
// categories (e.g. an acceptance ratio for a month without submissions); they are skipped
// and do not count toward the number of categories. Logarithms are natural.

#include "seasonality/probability.hpp"
#include "seasonality/types.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace seasonality {

namespace detail {

template <typename Derived>
Eigen::Index check_weights(const Eigen::MatrixBase<Derived>& z, const char* op) {
    Eigen::Index defined = 0;
    for (Eigen::Index i = 0; i < z.size(); ++i) {
        const auto v = z(i);
        if (std::isnan(v)) continue;
        if (v < 0 || !std::isfinite(v)) throw ValidationError(std::string(op) + ": negative or infinite entry");
        ++defined;
    }
    return defined;
}

template <typename Scalar>
Scalar plogp(Scalar p) {
    return p > Scalar(0) ? p * std::log(p) : Scalar(0);
}

}  // namespace detail

/// Number of non-missing entries.
template <typename Derived>
Eigen::Index category_count(const Eigen::MatrixBase<Derived>& z) {
    return detail::check_weights(z, "category_count");
}

/// Shannon entropy -sum p ln p with 0 ln 0 = 0. The input need not sum to one.
template <typename Derived>
typename Derived::Scalar entropy(const Eigen::MatrixBase<Derived>& p) {
    using Scalar = typename Derived::Scalar;
    detail::check_weights(p, "entropy");
    Scalar h(0);
    for (Eigen::Index i = 0; i < p.size(); ++i) {
        if (!std::isnan(p(i))) h -= detail::plogp(p(i));
    }
    return h;
}

/// Per-category terms -p_i ln p_i; missing entries stay NaN.
template <typename Derived>
auto monthly_entropy_terms(const Eigen::MatrixBase<Derived>& p) {
    using Scalar = typename Derived::Scalar;
    detail::check_weights(p, "monthly_entropy_terms");
    Eigen::Matrix<Scalar, Derived::RowsAtCompileTime, 1> terms(p.size());
    for (Eigen::Index i = 0; i < p.size(); ++i) {
        terms(i) = std::isnan(p(i)) ? p(i) : -detail::plogp(p(i));
    }
    return terms;
}

/// Hill number of order q: (sum p_i^q)^(1/(1-q)), with q = 1 taken as exp(H).
/// Zero entries are absent categories, so q = 0 counts the positive entries.
template <typename Derived>
typename Derived::Scalar diversity(const Eigen::MatrixBase<Derived>& p, typename Derived::Scalar q) {
    using Scalar = typename Derived::Scalar;
    if (!(q >= Scalar(0))) throw ValidationError("diversity: order q must be >= 0");
    if (q == Scalar(1)) return std::exp(entropy(p));
    detail::check_weights(p, "diversity");
    Scalar s(0);
    for (Eigen::Index i = 0; i < p.size(); ++i) {
        if (!std::isnan(p(i)) && p(i) > Scalar(0)) s += std::pow(p(i), q);
    }
    const Scalar d = std::pow(s, Scalar(1) / (Scalar(1) - q));
    if (!std::isfinite(d)) throw ValidationError("diversity: non-finite result");
    return d;
}

/// exp(-H) = prod p_i^p_i.
template <typename Derived>
typename Derived::Scalar exponential_entropy(const Eigen::MatrixBase<Derived>& p) {
    return std::exp(-entropy(p));
}

/// ln N - H, N the number of categories.
template <typename Derived>
typename Derived::Scalar theil(const Eigen::MatrixBase<Derived>& p) {
    using Scalar = typename Derived::Scalar;
    const auto n = detail::check_weights(p, "theil");
    return std::log(static_cast<Scalar>(n)) - entropy(p);
}

/// Herfindahl-Hirschman concentration, sum p_i^2.
template <typename Derived>
typename Derived::Scalar hhi(const Eigen::MatrixBase<Derived>& p) {
    using Scalar = typename Derived::Scalar;
    detail::check_weights(p, "hhi");
    Scalar s(0);
    for (Eigen::Index i = 0; i < p.size(); ++i) {
        if (!std::isnan(p(i))) s += p(i) * p(i);
    }
    return s;
}

enum class GiniEstimator {
    /// sum_i sum_j |z_i - z_j| / (2 n sum z): twice the Lorenz-curve gap of the n-step curve.
    population,
    /// population x n / (n - 1).
    sample,
};

inline const char* to_string(GiniEstimator e) noexcept {
    return e == GiniEstimator::population ? "population" : "sample";
}

namespace detail {

template <typename Derived>
std::vector<typename Derived::Scalar> sorted_defined(const Eigen::MatrixBase<Derived>& z, const char* op) {
    using Scalar = typename Derived::Scalar;
    check_weights(z, op);
    std::vector<Scalar> v;
    v.reserve(static_cast<std::size_t>(z.size()));
    for (Eigen::Index i = 0; i < z.size(); ++i) {
        if (!std::isnan(z(i))) v.push_back(z(i));
    }
    std::sort(v.begin(), v.end());
    Scalar total(0);
    for (auto x : v) total += x;
    if (!(total > Scalar(0))) throw ValidationError(std::string(op) + ": vector has no positive entry");
    return v;
}

}  // namespace detail

/// Gini coefficient of the raw weights (scale-free).
template <typename Derived>
typename Derived::Scalar gini(const Eigen::MatrixBase<Derived>& z,
                              GiniEstimator estimator = GiniEstimator::population) {
    using Scalar = typename Derived::Scalar;
    const auto v = detail::sorted_defined(z, "gini");
    const auto n = static_cast<Scalar>(v.size());
    // For ascending v: sum_i sum_j |v_i - v_j| = 2 sum_i (2i - n + 1) v_i, i 0-based.
    Scalar weighted(0);
    Scalar total(0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        weighted += (Scalar(2) * static_cast<Scalar>(i) - n + Scalar(1)) * v[i];
        total += v[i];
    }
    Scalar g = weighted / (n * total);
    if (estimator == GiniEstimator::sample) {
        if (v.size() < 2) throw ValidationError("gini: sample estimator needs two categories");
        g *= n / (n - Scalar(1));
    }
    return g;
}

template <typename Scalar>
struct LorenzPoint {
    Scalar population = 0;
    Scalar value = 0;
};

/// Lorenz curve of the ascending-sorted weights: n + 1 points from (0,0) to (1,1).
template <typename Derived>
std::vector<LorenzPoint<typename Derived::Scalar>> lorenz(const Eigen::MatrixBase<Derived>& z) {
    using Scalar = typename Derived::Scalar;
    const auto v = detail::sorted_defined(z, "lorenz");
    Scalar total(0);
    for (auto x : v) total += x;
    const auto n = static_cast<Scalar>(v.size());
    std::vector<LorenzPoint<Scalar>> pts;
    pts.reserve(v.size() + 1);
    pts.push_back({Scalar(0), Scalar(0)});
    Scalar running(0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        running += v[i];
        pts.push_back({static_cast<Scalar>(i + 1) / n, running / total});
    }
    pts.back().value = Scalar(1);
    return pts;
}

/// Every index for one distribution (one column of a share or conditional table).
template <typename Scalar>
struct IndexReport {
    Scalar entropy_H = 0;
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> monthly_terms;
    Scalar diversity_q1 = 0;
    /// (q, ^qD) for each requested order.
    std::vector<std::pair<Scalar, Scalar>> hill;
    Scalar exponential_entropy = 0;
    Scalar theil = 0;
    Scalar hhi = 0;
    Scalar gini = 0;
    Eigen::Index n_categories = 0;
};

/// Indices of a share vector. The input is normalized first, so raw counts work as well.
template <typename Derived>
IndexReport<typename Derived::Scalar> index_report(const Eigen::MatrixBase<Derived>& z,
                                                   std::span<const typename Derived::Scalar> hill_orders,
                                                   GiniEstimator estimator = GiniEstimator::population) {
    using Scalar = typename Derived::Scalar;
    const auto p = normalize(z);
    IndexReport<Scalar> r;
    r.n_categories = category_count(p);
    r.entropy_H = entropy(p);
    r.monthly_terms = monthly_entropy_terms(p);
    r.diversity_q1 = diversity(p, Scalar(1));
    for (auto q : hill_orders) r.hill.emplace_back(q, diversity(p, q));
    r.exponential_entropy = exponential_entropy(p);
    r.theil = theil(p);
    r.hhi = hhi(p);
    r.gini = gini(z, estimator);
    return r;
}

/// Indices of an unnormalized acceptance-ratio vector. Entropy, monthly terms and ^1D use the
/// raw ratios; the other Hill orders, exponential entropy, Theil, HHI and Gini use the
/// normalized ratios. This is the mixed convention of the published conditional tables.
template <typename Derived>
IndexReport<typename Derived::Scalar> conditional_index_report(
    const Eigen::MatrixBase<Derived>& ratios, std::span<const typename Derived::Scalar> hill_orders,
    GiniEstimator estimator = GiniEstimator::population) {
    using Scalar = typename Derived::Scalar;
    const auto p = normalize(ratios);
    IndexReport<Scalar> r;
    r.n_categories = category_count(ratios);
    r.entropy_H = entropy(ratios);
    r.monthly_terms = monthly_entropy_terms(ratios);
    r.diversity_q1 = diversity(ratios, Scalar(1));
    for (auto q : hill_orders) r.hill.emplace_back(q, q == Scalar(1) ? r.diversity_q1 : diversity(p, q));
    r.exponential_entropy = exponential_entropy(p);
    r.theil = theil(p);
    r.hhi = hhi(p);
    r.gini = gini(ratios, estimator);
    return r;
}

}  // namespace seasonality
