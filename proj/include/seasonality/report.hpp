#pragma once

#include "seasonality/indices.hpp"
#include "seasonality/ingest.hpp"
#include "seasonality/probability.hpp"
#include "seasonality/spectral.hpp"
#include "seasonality/stats.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace seasonality {

struct BundleConfig {
    std::vector<double> hill_orders{1.0, 2.0};
    /// Hypothesized mean of every one-sample t row.
    double t_null = 0.0833333;
    /// Known sigma of the conditional-table z row; no z row without it.
    std::optional<double> z_sigma;
    /// Hypothesized mean of the z row; falls back to t_null.
    std::optional<double> z_null;
    GiniEstimator gini = GiniEstimator::population;
    int peak_count = 2;
};

/// One column of a publication table: a single year, or all years cumulated.
struct TableColumn {
    std::string label;
    bool cumulated = false;
    MonthVector<double> values;
    Eigen::Array<bool, 12, 1> defined = Eigen::Array<bool, 12, 1>::Constant(true);
    DescriptiveStats<double> footer;
    /// Absent when the column has zero spread.
    std::optional<TestResult<double>> t_test;
};

struct ShareColumn : TableColumn {
    long total = 0;
    MonthVector<long> counts;
    TestResult<double> chi_square;
    IndexReport<double> indices;
};

struct ConditionalColumn : TableColumn {
    double sum = 0.0;
    double conditional_entropy = 0.0;
    std::optional<TestResult<double>> z_test;
    IndexReport<double> indices;
};

/// Monthly entropy terms -p ln p of one conditional column.
struct EntropyTermColumn : TableColumn {
    double conditional_entropy = 0.0;
};

struct AnalysisBundle {
    std::string journal;
    std::vector<int> years;
    BundleConfig config;

    ShareTable submitted_table;
    ShareTable accepted_table;
    ConditionalTable conditional_table;

    /// Per-year columns in year order, then the cumulated column.
    std::vector<ShareColumn> submitted;
    std::vector<ShareColumn> accepted;
    std::vector<ConditionalColumn> conditional;
    std::vector<EntropyTermColumn> monthly_entropy;

    /// Chronological monthly series (Jan of the first year first).
    Eigen::VectorXd submitted_series;
    Eigen::VectorXd accepted_series;
    std::vector<SpectralPeak<double>> submitted_peaks;
    std::vector<SpectralPeak<double>> accepted_peaks;

    [[nodiscard]] bool empty() const noexcept { return years.empty() || submitted.empty(); }
};

AnalysisBundle build_bundle(const CountPair& counts, const BundleConfig& config = {});

enum class RenderFormat { csv, json, md };

RenderFormat parse_render_format(std::string_view name);
std::string_view file_extension(RenderFormat format) noexcept;

struct Document {
    std::string name;  // t1_submitted ... t6_fourier
    std::string body;
};

/// The six publication tables. Numbers are rounded half away from zero to `precision`
/// decimals; undefined cells render as NA (csv, md) or null (json).
std::vector<Document> render(const AnalysisBundle& bundle, RenderFormat format, int precision);

/// Decimal rendering of x rounded half away from zero to `precision` places.
std::string format_fixed(double x, int precision);

/// Parsed CSV document: header cells plus data rows.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

CsvTable parse_csv(std::string_view text);

}  // namespace seasonality
