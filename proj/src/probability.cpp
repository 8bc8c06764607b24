#include "seasonality/probability.hpp"

#include <limits>
#include <string>

namespace seasonality {

ShareTable shares(const CountMatrix& matrix) {
    matrix.validate();
    ShareTable t;
    t.years = matrix.years;
    t.totals = matrix.totals();
    for (Eigen::Index y = 0; y < t.totals.cols(); ++y) {
        if (t.totals(y) == 0) throw ValidationError("empty year " + std::to_string(matrix.years[y]));
    }
    const MonthGrid<double> counts = matrix.counts.cast<double>();
    t.per_year = counts.array().rowwise() / t.totals.cast<double>().array();
    t.cumulated_counts = matrix.counts.rowwise().sum();
    t.cumulated = t.cumulated_counts.cast<double>() / static_cast<double>(t.cumulated_counts.sum());
    return t;
}

ConditionalTable conditional(const CountMatrix& submitted, const CountMatrix& accepted) {
    CountPair{"", submitted, accepted}.validate();
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    const auto ncols = submitted.counts.cols();

    ConditionalTable t;
    t.years = submitted.years;
    t.per_year.resize(kMonths, ncols);
    t.defined.resize(kMonths, ncols);
    t.sums = Eigen::Matrix<double, 1, Eigen::Dynamic>::Zero(ncols);

    for (Eigen::Index y = 0; y < ncols; ++y) {
        for (Eigen::Index m = 0; m < kMonths; ++m) {
            const long ns = submitted.counts(m, y);
            const long na = accepted.counts(m, y);
            if (ns == 0) {
                // validate() guarantees na <= ns, so this is the 0/0 case
                t.per_year(m, y) = nan;
                t.defined(m, y) = false;
                t.undefined.push_back({submitted.years[y], static_cast<int>(m) + 1});
                continue;
            }
            t.per_year(m, y) = static_cast<double>(na) / static_cast<double>(ns);
            t.defined(m, y) = true;
            t.sums(y) += t.per_year(m, y);
        }
    }

    const MonthVector<long> cs = submitted.counts.rowwise().sum();
    const MonthVector<long> ca = accepted.counts.rowwise().sum();
    for (Eigen::Index m = 0; m < kMonths; ++m) {
        t.cumulated_defined(m) = cs(m) > 0;
        t.cumulated(m) = cs(m) > 0 ? static_cast<double>(ca(m)) / static_cast<double>(cs(m)) : nan;
        if (t.cumulated_defined(m)) t.cumulated_sum += t.cumulated(m);
    }
    return t;
}

}  // namespace seasonality
