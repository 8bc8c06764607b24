#pragma once

#include "seasonality/types.hpp"

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace seasonality {

enum class Decision { accepted, rejected };
enum class Outcome { submitted, accepted };

struct CalendarDate {
    int year = 0;
    int month = 0;
    int day = 0;

    /// Parses strict ISO-8601 `YYYY-MM-DD`; throws ValidationError on a bad or non-existent date.
    static CalendarDate parse(std::string_view text);

    friend bool operator==(const CalendarDate&, const CalendarDate&) = default;
};

/// One submission and its final editorial decision.
struct EventRecord {
    std::string journal;
    CalendarDate submitted_at;
    Decision decision = Decision::rejected;

    friend bool operator==(const EventRecord&, const EventRecord&) = default;
};

/// Inclusive year interval, written `y0:y1` on the command line.
struct YearRange {
    int first = 0;
    int last = 0;

    static YearRange parse(std::string_view text);
    [[nodiscard]] bool contains(int year) const noexcept { return year >= first && year <= last; }
    [[nodiscard]] std::vector<int> years() const;
};

/// Monthly event counts: 12 rows (Jan..Dec) by one column per year.
struct CountMatrix {
    std::vector<int> years;
    CountGrid counts;
    Outcome outcome = Outcome::submitted;

    [[nodiscard]] Eigen::Matrix<long, 1, Eigen::Dynamic> totals() const {
        return counts.colwise().sum();
    }
    [[nodiscard]] Eigen::Index year_count() const noexcept { return counts.cols(); }

    /// Shape, year ordering and non-negativity.
    void validate() const;
};

/// The submitted/accepted matrices of one journal over one year range.
struct CountPair {
    std::string journal;
    CountMatrix submitted;
    CountMatrix accepted;

    /// Both matrices valid, same years, accepted <= submitted element-wise.
    void validate() const;
};

struct RoundingAdjustment {
    int year = 0;
    int month = 0;  // 1-based
    long rounded = 0;
    long adjusted = 0;
};

struct ShareReconstruction {
    CountMatrix matrix;
    std::vector<RoundingAdjustment> adjustments;
};

/// Reads event-csv (`journal,submitted_at,decision`). Decision tokens are case-insensitive.
std::vector<EventRecord> parse_events(std::istream& in);

/// Counts the events of `journal` that fall in `years`. Throws "empty selection" when none do.
CountPair aggregate(std::span<const EventRecord> events, std::string_view journal, YearRange years);

/// Reads counts-csv (`journal,year,month,submitted,accepted`) for one journal and year range.
/// Every (year, month) cell of the range must be present exactly once.
CountPair parse_counts(std::istream& in, std::string_view journal, YearRange years);

/// Writes a pair back out as counts-csv.
void write_counts(std::ostream& out, const CountPair& pair);

/// Inverts share = count / total: rounds share x total to the nearest integer and, when the
/// column then misses its total by one, moves the entry with the largest rounding residual.
ShareReconstruction counts_from_shares(std::span<const int> years,
                                       std::span<const long> totals,
                                       const MonthGrid<double>& shares,
                                       Outcome outcome = Outcome::submitted);

std::string_view to_string(Decision d) noexcept;
std::string_view to_string(Outcome o) noexcept;

}  // namespace seasonality
