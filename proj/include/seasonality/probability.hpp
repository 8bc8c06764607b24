#pragma once

#include "seasonality/ingest.hpp"
#include "seasonality/types.hpp"

#include <cmath>
#include <vector>

namespace seasonality {

/// Monthly shares q(m,y) = N(m,y) / N(y) for each year, plus the cumulated distribution
/// q(m) = C(m) / sum C with C(m) = sum_y N(m,y).
struct ShareTable {
    std::vector<int> years;
    MonthGrid<double> per_year;
    MonthVector<double> cumulated;
    Eigen::Matrix<long, 1, Eigen::Dynamic> totals;
    MonthVector<long> cumulated_counts;
};

struct UndefinedCell {
    int year = 0;
    int month = 0;  // 1-based
};

/// Acceptance ratios p(m,y) = accepted / submitted, left unnormalized. A month with no
/// submissions holds NaN with `defined` false; such cells are skipped by every consumer.
struct ConditionalTable {
    std::vector<int> years;
    MonthGrid<double> per_year;
    Eigen::Array<bool, 12, Eigen::Dynamic> defined;
    MonthVector<double> cumulated;
    Eigen::Array<bool, 12, 1> cumulated_defined;
    /// Column sums of the defined ratios (not 1 in general).
    Eigen::Matrix<double, 1, Eigen::Dynamic> sums;
    double cumulated_sum = 0.0;
    std::vector<UndefinedCell> undefined;
};

ShareTable shares(const CountMatrix& matrix);

ConditionalTable conditional(const CountMatrix& submitted, const CountMatrix& accepted);

/// p_i = z_i / sum z. NaN entries stay NaN and are left out of the sum.
template <typename Derived>
auto normalize(const Eigen::MatrixBase<Derived>& z) {
    using Scalar = typename Derived::Scalar;
    using Vector = Eigen::Matrix<Scalar, Derived::RowsAtCompileTime, 1>;
    Vector v = z;
    Scalar total(0);
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (std::isnan(v(i))) continue;
        if (v(i) < Scalar(0)) throw ValidationError("normalize: negative entry");
        total += v(i);
    }
    if (!(total > Scalar(0))) throw ValidationError("normalize: vector has no positive entry");
    return Vector(v / total);
}

}  // namespace seasonality
