#include "seasonality/report.hpp"

#include <span>
#include <string>

namespace seasonality {

namespace {

std::string cumulated_label(const std::vector<int>& years) {
    return "[" + std::to_string(years.front()) + "-" + std::to_string(years.back()) + "]";
}

template <typename F>
auto with_context(const std::string& where, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const ValidationError& e) {
        throw ValidationError(where + ": " + e.what());
    }
}

std::optional<TestResult<double>> maybe_t_test(const MonthVector<double>& x, double k) {
    const auto d = describe(x);
    if (!(d.std_dev > 0.0)) return std::nullopt;
    return t_one_sample(x, k);
}

void fill_footer(TableColumn& c, double t_null) {
    c.footer = describe(c.values);
    c.t_test = maybe_t_test(c.values, t_null);
}

ShareColumn share_column(std::string label, bool cumulated, const MonthVector<long>& counts, long total,
                         const MonthVector<double>& shares, const BundleConfig& cfg) {
    ShareColumn c;
    c.label = std::move(label);
    c.cumulated = cumulated;
    c.values = shares;
    c.counts = counts;
    c.total = total;
    c.chi_square = chi_square_uniform(counts);
    c.indices = index_report(shares, std::span<const double>(cfg.hill_orders), cfg.gini);
    fill_footer(c, cfg.t_null);
    return c;
}

std::vector<ShareColumn> share_columns(const std::string& table, const CountMatrix& m, const ShareTable& t,
                                       const BundleConfig& cfg) {
    std::vector<ShareColumn> cols;
    for (Eigen::Index y = 0; y < m.counts.cols(); ++y) {
        const auto label = std::to_string(t.years[y]);
        cols.push_back(with_context(table + "[" + label + "]", [&] {
            return share_column(label, false, m.counts.col(y), t.totals(y), t.per_year.col(y), cfg);
        }));
    }
    const auto label = cumulated_label(t.years);
    cols.push_back(with_context(table + label, [&] {
        return share_column(label, true, t.cumulated_counts, t.cumulated_counts.sum(), t.cumulated, cfg);
    }));
    return cols;
}

ConditionalColumn conditional_column(std::string label, bool cumulated, const MonthVector<double>& ratios,
                                     const Eigen::Array<bool, 12, 1>& defined, double sum,
                                     const BundleConfig& cfg) {
    ConditionalColumn c;
    c.label = std::move(label);
    c.cumulated = cumulated;
    c.values = ratios;
    c.defined = defined;
    c.sum = sum;
    c.indices = conditional_index_report(ratios, std::span<const double>(cfg.hill_orders), cfg.gini);
    c.conditional_entropy = c.indices.entropy_H;
    fill_footer(c, cfg.t_null);
    if (cfg.z_sigma) c.z_test = z_one_sample(ratios, cfg.z_null.value_or(cfg.t_null), *cfg.z_sigma);
    return c;
}

EntropyTermColumn entropy_term_column(const ConditionalColumn& src, double t_null) {
    EntropyTermColumn c;
    c.label = src.label;
    c.cumulated = src.cumulated;
    c.values = src.indices.monthly_terms;
    c.defined = src.defined;
    c.conditional_entropy = src.conditional_entropy;
    fill_footer(c, t_null);
    return c;
}

Eigen::VectorXd chronological(const CountMatrix& m) {
    const Eigen::MatrixXd grid = m.counts.cast<double>();
    return Eigen::Map<const Eigen::VectorXd>(grid.data(), grid.size());
}

}  // namespace

AnalysisBundle build_bundle(const CountPair& counts, const BundleConfig& config) {
    counts.validate();
    for (double q : config.hill_orders) {
        if (!(q >= 0.0)) throw ValidationError("Hill order " + std::to_string(q) + " must be >= 0");
    }
    if (config.z_sigma && !(*config.z_sigma > 0.0)) throw ValidationError("z sigma must be > 0");

    AnalysisBundle b;
    b.journal = counts.journal;
    b.years = counts.submitted.years;
    b.config = config;

    b.submitted_table = with_context("t1_submitted", [&] { return shares(counts.submitted); });
    b.accepted_table = with_context("t2_accepted", [&] { return shares(counts.accepted); });
    b.conditional_table = conditional(counts.submitted, counts.accepted);

    b.submitted = share_columns("t1_submitted", counts.submitted, b.submitted_table, config);
    b.accepted = share_columns("t2_accepted", counts.accepted, b.accepted_table, config);

    const auto& ct = b.conditional_table;
    for (Eigen::Index y = 0; y < ct.per_year.cols(); ++y) {
        const auto label = std::to_string(ct.years[y]);
        b.conditional.push_back(with_context("t3_conditional[" + label + "]", [&] {
            return conditional_column(label, false, ct.per_year.col(y), ct.defined.col(y), ct.sums(y), config);
        }));
    }
    const auto label = cumulated_label(ct.years);
    b.conditional.push_back(with_context("t3_conditional" + label, [&] {
        return conditional_column(label, true, ct.cumulated, ct.cumulated_defined, ct.cumulated_sum, config);
    }));
    for (const auto& c : b.conditional) {
        b.monthly_entropy.push_back(
            with_context("t4_monthly_entropy[" + c.label + "]", [&] { return entropy_term_column(c, config.t_null); }));
    }

    b.submitted_series = chronological(counts.submitted);
    b.accepted_series = chronological(counts.accepted);
    b.submitted_peaks = with_context("t6_fourier[N_s]", [&] { return top_peaks(b.submitted_series, config.peak_count); });
    b.accepted_peaks = with_context("t6_fourier[N_a]", [&] { return top_peaks(b.accepted_series, config.peak_count); });
    return b;
}

}  // namespace seasonality
