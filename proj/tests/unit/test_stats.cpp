#include <doctest.h>

#include "fixture.hpp"
#include "oracles.hpp"

#include <seasonality/probability.hpp>
#include <seasonality/stats.hpp>

#include <cmath>

using namespace seasonality;
using doctest::Approx;

namespace {

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

std::vector<long> to_std(const MonthVector<long>& v) { return {v.data(), v.data() + v.size()}; }

}  // namespace

TEST_CASE("describe") {
    SUBCASE("JSCS 2012 submitted shares") {
        const MonthVector<double> s = shares(fixture::jscs().submitted).per_year.col(0);
        const auto d = describe(s);
        CHECK(d.n == 12);
        CHECK(near(d.mean, 0.08333, 5e-6));
        CHECK(near(d.std_dev, 0.02359, 5e-6));
        CHECK(near(d.band_low, 0.03616, 1e-5));
        CHECK(near(d.band_high, 0.13051, 1e-5));
    }
    SUBCASE("constant vector collapses the band") {
        const auto d = describe(MonthVector<double>::Constant(0.25));
        CHECK(d.std_dev == 0.0);
        CHECK(d.band_low == 0.25);
        CHECK(d.band_high == 0.25);
    }
    SUBCASE("JSCS cumulated acceptance ratios") {
        const auto p = fixture::jscs();
        const auto d = describe(conditional(p.submitted, p.accepted).cumulated);
        CHECK(near(d.mean, 0.4615, 5e-5));
        CHECK(near(d.std_dev, 0.0770, 5e-5));
    }
    SUBCASE("needs two values") {
        CHECK_THROWS_AS(describe(Eigen::Matrix<double, 1, 1>::Constant(1.0)), ValidationError);
    }
}

TEST_CASE("chi_square_uniform") {
    SUBCASE("JSCS 2012 reconstructed counts") {
        MonthVector<long> c;
        c << 26, 15, 19, 31, 26, 22, 31, 22, 21, 38, 26, 40;
        const auto r = chi_square_uniform(c);
        CHECK(r.kind == TestKind::chi_square);
        CHECK(r.dof == 11);
        CHECK(r.statistic == Approx(oracle::chi_square_uniform_terms(to_std(c))).epsilon(1e-14));
        CHECK(near(r.statistic, 23.278, 0.02));
        CHECK(r.p_value == Approx(1.0 - oracle::chi_square_cdf_quadrature(r.statistic, 11)).epsilon(1e-6));
    }
    SUBCASE("uniform counts") {
        const auto r = chi_square_uniform(MonthVector<long>::Constant(9));
        CHECK(r.statistic == 0.0);
        CHECK(r.p_value == Approx(1.0));
    }
    SUBCASE("Entropy cumulated counts") {
        const MonthVector<long> c = fixture::entropy_journal().submitted.counts.rowwise().sum();
        CHECK(near(chi_square_uniform(c).statistic, 20.236, 0.05));
    }
    SUBCASE("zero total") {
        CHECK_THROWS_AS(chi_square_uniform(MonthVector<long>::Zero()), ValidationError);
    }
}

TEST_CASE("chi-square distribution anchor") {
    // 4.5748 is the 5% lower quantile of chi-square with 11 dof.
    CHECK(near(chi_square_cdf(4.5748, 11), 0.05, 1e-4));
    CHECK(chi_square_cdf(4.5748, 11) == Approx(oracle::chi_square_cdf_quadrature(4.5748, 11)).epsilon(1e-8));
    CHECK(near(chi_square_sf(19.675, 11), 0.05, 1e-4));
    for (double x : {0.5, 3.0, 11.0, 25.0, 60.0}) {
        CHECK(chi_square_cdf(x, 11) + chi_square_sf(x, 11) == Approx(1.0).epsilon(1e-14));
        CHECK(std::abs(chi_square_cdf(x, 11) - oracle::chi_square_cdf_quadrature(x, 11)) < 1e-10);
    }
}

TEST_CASE("special function identities") {
    for (double x : {0.01, 0.7, 2.0, 9.5}) CHECK(gamma_p(1.0, x) == Approx(1.0 - std::exp(-x)).epsilon(1e-14));
    for (double a : {0.5, 2.0, 5.5}) CHECK(incomplete_beta(a, a, 0.5) == Approx(0.5).epsilon(1e-13));
    for (double x : {0.05, 0.3, 0.8}) {
        CHECK(incomplete_beta(2.5, 0.5, x) + incomplete_beta(0.5, 2.5, 1.0 - x) == Approx(1.0).epsilon(1e-13));
    }
    CHECK(incomplete_beta(1.0, 1.0, 0.37) == Approx(0.37).epsilon(1e-14));
    CHECK_THROWS_AS(incomplete_beta(1.0, 1.0, 1.5), ValidationError);
    CHECK_THROWS_AS(gamma_p(0.0, 1.0), ValidationError);
}

TEST_CASE("t_cdf") {
    CHECK(t_cdf(0.0, 11) == 0.5);
    CHECK(near(t_cdf(2.201, 11), 0.975, 1e-3));
    CHECK(t_cdf(1e9, 11) == Approx(1.0));
    CHECK(t_cdf(std::numeric_limits<double>::infinity(), 11) == 1.0);
    for (double t : {-4.0, -1.3, 0.4, 2.201, 3.4641}) {
        CHECK(std::abs(t_cdf(t, 11) - oracle::t_cdf_quadrature(t, 11)) < 1e-10);
    }
    CHECK(std::abs(t_cdf(1.0, 1) - 0.75) < 1e-14);  // Cauchy
    CHECK_THROWS_AS(t_cdf(1.0, 0), ValidationError);
}

TEST_CASE("t_one_sample") {
    SUBCASE("against its own mean") {
        const MonthVector<double> s = shares(fixture::jscs().submitted).per_year.col(0);
        const auto r = t_one_sample(s, s.mean());
        CHECK(std::abs(r.statistic) < 1e-12);
        CHECK(r.p_value == Approx(1.0));
    }
    SUBCASE("mean 0.5, sd 0.1, n 12, k 0.4") {
        MonthVector<double> x;
        const double d = 0.1 * std::sqrt(11.0 / 12.0);
        for (int i = 0; i < 12; ++i) x(i) = 0.5 + (i % 2 ? d : -d);
        const auto dsc = describe(x);
        CHECK(dsc.mean == Approx(0.5).epsilon(1e-14));
        CHECK(dsc.std_dev == Approx(0.1).epsilon(1e-14));
        const auto r = t_one_sample(x, 0.4);
        CHECK(near(r.statistic, 3.4641, 5e-5));
        CHECK(r.dof == 11);
        CHECK(r.p_value == Approx(2.0 * (1.0 - oracle::t_cdf_quadrature(r.statistic, 11))).epsilon(1e-7));
    }
    SUBCASE("JSCS 2012 shares against zero") {
        const MonthVector<double> s = shares(fixture::jscs().submitted).per_year.col(0);
        CHECK(near(t_one_sample(s, 0.0).statistic, 12.22, 0.02));
    }
    SUBCASE("degenerate sample") {
        CHECK_THROWS_WITH_AS(t_one_sample(MonthVector<double>::Constant(0.3), 0.2), "degenerate sample",
                             ValidationError);
    }
}

TEST_CASE("z_one_sample") {
    const MonthVector<double> x = MonthVector<double>::LinSpaced(12, 0.1, 0.9);
    SUBCASE("mean equals the null") {
        const auto r = z_one_sample(x, x.mean(), 0.2);
        CHECK(std::abs(r.statistic) < 1e-13);
        CHECK(r.p_value == Approx(1.0));
    }
    SUBCASE("normal quantile") {
        CHECK(near(normal_two_sided_p(1.96), 0.05, 2e-4));
        CHECK(normal_cdf(0.0) == 0.5);
    }
    SUBCASE("direct formula on the Entropy cumulated footer values") {
        MonthVector<double> y = MonthVector<double>::Constant(0.4856);
        const auto r = z_one_sample(y, 0.5, 0.0432);
        CHECK(r.statistic == Approx((0.4856 - 0.5) / (0.0432 / std::sqrt(12.0))).epsilon(1e-14));
        // the printed z / p pair (2.190, 0.0285) is internally consistent as a two-sided normal tail
        CHECK(near(normal_two_sided_p(2.190), 0.0285, 1e-4));
    }
    SUBCASE("sigma must be positive") {
        CHECK_THROWS_AS(z_one_sample(x, 0.5, 0.0), ValidationError);
        CHECK_THROWS_AS(z_one_sample(x, 0.5, -1.0), ValidationError);
    }
}
