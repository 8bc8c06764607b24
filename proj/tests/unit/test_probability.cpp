#include <doctest.h>

#include "fixture.hpp"

#include <seasonality/probability.hpp>

#include <cmath>

using namespace seasonality;
using doctest::Approx;

namespace {

CountMatrix matrix_of(std::vector<int> years, CountGrid counts, Outcome outcome = Outcome::submitted) {
    return {std::move(years), std::move(counts), outcome};
}

}  // namespace

TEST_CASE("shares of JSCS submitted") {
    const auto t = shares(fixture::jscs().submitted);
    CHECK(std::abs(t.per_year(0, 0) - 0.08202) < 5e-6);
    CHECK(std::abs(t.per_year(11, 0) - 0.12618) < 5e-6);
    CHECK(std::abs(t.cumulated(0) - 0.09091) < 5e-6);
    CHECK(t.cumulated_counts.sum() == 913);
    CHECK(t.totals(0) == 317);
    for (Eigen::Index y = 0; y < t.per_year.cols(); ++y) CHECK(std::abs(t.per_year.col(y).sum() - 1.0) < 1e-12);
    CHECK(std::abs(t.cumulated.sum() - 1.0) < 1e-12);
}

TEST_CASE("shares of equal counts are uniform") {
    const auto t = shares(matrix_of({2020}, CountGrid::Constant(12, 1, 7)));
    CHECK(((t.per_year.array() - 1.0 / 12.0).abs() < 1e-15).all());
}

TEST_CASE("shares rejects an empty year") {
    CountGrid g = CountGrid::Constant(12, 2, 3);
    g.col(1).setZero();
    CHECK_THROWS_WITH_AS(shares(matrix_of({2020, 2021}, g)), doctest::Contains("empty year"), ValidationError);
}

TEST_CASE("conditional ratios of JSCS") {
    const auto pair = fixture::jscs();
    const auto c = conditional(pair.submitted, pair.accepted);
    CHECK(std::abs(c.per_year(0, 0) - 0.6923) < 5e-5);
    CHECK(std::abs(c.cumulated(0) - 0.6024) < 5e-5);
    CHECK(std::abs(c.sums(0) - 6.0767) < 5e-4);
    CHECK(c.undefined.empty());
    CHECK(c.defined.all());
}

TEST_CASE("conditional with accepted == submitted is all ones") {
    const CountGrid g = CountGrid::Constant(12, 2, 4);
    const auto c = conditional(matrix_of({2020, 2021}, g), matrix_of({2020, 2021}, g, Outcome::accepted));
    CHECK((c.per_year.array() == 1.0).all());
    CHECK(c.sums(0) == 12.0);
    CHECK(c.cumulated_sum == 12.0);
}

TEST_CASE("conditional marks 0/0 cells undefined") {
    CountGrid s = CountGrid::Constant(12, 2, 5);
    CountGrid a = CountGrid::Constant(12, 2, 2);
    s(3, 1) = 0;
    a(3, 1) = 0;
    const auto c = conditional(matrix_of({2020, 2021}, s), matrix_of({2020, 2021}, a, Outcome::accepted));
    CHECK_FALSE(c.defined(3, 1));
    CHECK(std::isnan(c.per_year(3, 1)));
    REQUIRE(c.undefined.size() == 1);
    CHECK(c.undefined[0].year == 2021);
    CHECK(c.undefined[0].month == 4);
    CHECK(c.sums(1) == Approx(11 * 0.4));
    // cumulated April still has the 2020 submissions
    CHECK(c.cumulated_defined(3));
    CHECK(c.cumulated(3) == Approx(0.4));
}

TEST_CASE("conditional rejects accepted without submissions") {
    CountGrid s = CountGrid::Constant(12, 1, 5);
    CountGrid a = CountGrid::Constant(12, 1, 2);
    s(0, 0) = 0;
    CHECK_THROWS_AS(conditional(matrix_of({2020}, s), matrix_of({2020}, a, Outcome::accepted)), ValidationError);
}

TEST_CASE("normalize") {
    CHECK((normalize(MonthVector<double>::Ones()).array() == 1.0 / 12.0).all());
    MonthVector<double> two = MonthVector<double>::Zero();
    two(0) = 2.0;
    const auto n = normalize(two);
    CHECK(n(0) == 1.0);
    CHECK(n.tail(11).isZero());
    CHECK_THROWS_AS(normalize(MonthVector<double>::Zero()), ValidationError);
}

TEST_CASE("normalized JSCS cumulated conditionals divide by the column sum") {
    const auto pair = fixture::jscs();
    const auto c = conditional(pair.submitted, pair.accepted);
    CHECK(std::abs(c.cumulated_sum - 5.5375) < 5e-4);
    const auto p = normalize(c.cumulated);
    CHECK(p.sum() == Approx(1.0));
    CHECK(p(0) == Approx(c.cumulated(0) / c.cumulated_sum));
}
