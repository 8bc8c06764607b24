#include "seasonality/ingest.hpp"

#include "csv.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>

namespace seasonality {

namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

Decision parse_decision(std::string_view token) {
    const auto t = lower(token);
    if (t == "accepted") return Decision::accepted;
    if (t == "rejected") return Decision::rejected;
    throw ValidationError("unknown decision token '" + std::string(token) + "'");
}

void expect_header(std::istream& in, std::string_view expected) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError(1, "missing header, expected '" + std::string(expected) + "'");
    if (csv::split(line) != csv::split(expected)) {
        throw ParseError(1, "bad header '" + std::string(csv::trim(line)) + "', expected '" +
                                std::string(expected) + "'");
    }
}

}  // namespace

CalendarDate CalendarDate::parse(std::string_view text) {
    text = csv::trim(text);
    if (text.size() != 10 || text[4] != '-' || text[7] != '-') {
        throw ValidationError("date '" + std::string(text) + "' is not YYYY-MM-DD");
    }
    const auto y = csv::parse_int<int>(text.substr(0, 4));
    const auto m = csv::parse_int<int>(text.substr(5, 2));
    const auto d = csv::parse_int<int>(text.substr(8, 2));
    if (!y || !m || !d) throw ValidationError("date '" + std::string(text) + "' is not YYYY-MM-DD");
    if (*m < 1 || *m > 12) throw ValidationError("invalid month in date '" + std::string(text) + "'");
    const std::chrono::year_month_day ymd{std::chrono::year{*y}, std::chrono::month{static_cast<unsigned>(*m)},
                                          std::chrono::day{static_cast<unsigned>(*d)}};
    if (!ymd.ok()) throw ValidationError("invalid day in date '" + std::string(text) + "'");
    return {*y, *m, *d};
}

YearRange YearRange::parse(std::string_view text) {
    const auto colon = text.find(':');
    std::optional<int> a;
    std::optional<int> b;
    if (colon == std::string_view::npos) {
        a = b = csv::parse_int<int>(csv::trim(text));
    } else {
        a = csv::parse_int<int>(csv::trim(text.substr(0, colon)));
        b = csv::parse_int<int>(csv::trim(text.substr(colon + 1)));
    }
    if (!a || !b) throw ValidationError("year range '" + std::string(text) + "' is not y0:y1");
    if (*a > *b) throw ValidationError("year range '" + std::string(text) + "' is reversed");
    return {*a, *b};
}

std::vector<int> YearRange::years() const {
    std::vector<int> out(static_cast<std::size_t>(last - first + 1));
    std::iota(out.begin(), out.end(), first);
    return out;
}

void CountMatrix::validate() const {
    if (years.empty()) throw ValidationError("count matrix has no years");
    if (static_cast<Eigen::Index>(years.size()) != counts.cols()) {
        throw ValidationError("count matrix has " + std::to_string(counts.cols()) + " columns for " +
                              std::to_string(years.size()) + " years");
    }
    if (!std::is_sorted(years.begin(), years.end()) ||
        std::adjacent_find(years.begin(), years.end()) != years.end()) {
        throw ValidationError("count matrix years must be strictly increasing");
    }
    if ((counts.array() < 0).any()) throw ValidationError("count matrix has a negative entry");
}

void CountPair::validate() const {
    submitted.validate();
    accepted.validate();
    if (submitted.years != accepted.years) throw ValidationError("submitted and accepted years differ");
    for (Eigen::Index y = 0; y < submitted.counts.cols(); ++y) {
        for (Eigen::Index m = 0; m < kMonths; ++m) {
            if (accepted.counts(m, y) > submitted.counts(m, y)) {
                throw ValidationError("accepted exceeds submitted in " + std::string(kMonthNames[m]) + " " +
                                      std::to_string(submitted.years[y]));
            }
        }
    }
}

std::vector<EventRecord> parse_events(std::istream& in) {
    expect_header(in, "journal,submitted_at,decision");
    std::vector<EventRecord> events;
    std::string line;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (csv::is_blank(line)) continue;
        const auto fields = csv::split(line);
        if (fields.size() != 3) {
            throw ParseError(lineno, "expected 3 columns, found " + std::to_string(fields.size()));
        }
        try {
            events.push_back({fields[0], CalendarDate::parse(fields[1]), parse_decision(fields[2])});
        } catch (const ParseError&) {
            throw;
        } catch (const ValidationError& e) {
            throw ParseError(lineno, e.what());
        }
    }
    return events;
}

CountPair aggregate(std::span<const EventRecord> events, std::string_view journal, YearRange range) {
    const auto years = range.years();
    const auto ncols = static_cast<Eigen::Index>(years.size());
    CountPair pair{std::string(journal),
                   {years, CountGrid::Zero(kMonths, ncols), Outcome::submitted},
                   {years, CountGrid::Zero(kMonths, ncols), Outcome::accepted}};
    std::size_t selected = 0;
    for (const auto& e : events) {
        if (e.journal != journal || !range.contains(e.submitted_at.year)) continue;
        const Eigen::Index col = e.submitted_at.year - range.first;
        const Eigen::Index row = e.submitted_at.month - 1;
        ++pair.submitted.counts(row, col);
        if (e.decision == Decision::accepted) ++pair.accepted.counts(row, col);
        ++selected;
    }
    if (selected == 0) throw ValidationError("empty selection");
    return pair;
}

CountPair parse_counts(std::istream& in, std::string_view journal, YearRange range) {
    expect_header(in, "journal,year,month,submitted,accepted");
    const auto years = range.years();
    const auto ncols = static_cast<Eigen::Index>(years.size());
    CountGrid submitted = CountGrid::Constant(kMonths, ncols, -1);
    CountGrid accepted = CountGrid::Zero(kMonths, ncols);

    std::string line;
    std::size_t lineno = 1;
    std::size_t selected = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (csv::is_blank(line)) continue;
        const auto f = csv::split(line);
        if (f.size() != 5) throw ParseError(lineno, "expected 5 columns, found " + std::to_string(f.size()));
        const auto year = csv::parse_int<int>(f[1]);
        const auto month = csv::parse_int<int>(f[2]);
        const auto ns = csv::parse_int<long>(f[3]);
        const auto na = csv::parse_int<long>(f[4]);
        if (!year) throw ParseError(lineno, "bad year '" + f[1] + "'");
        if (!month || *month < 1 || *month > 12) throw ParseError(lineno, "invalid month '" + f[2] + "'");
        if (!ns || *ns < 0) throw ParseError(lineno, "bad submitted count '" + f[3] + "'");
        if (!na || *na < 0) throw ParseError(lineno, "bad accepted count '" + f[4] + "'");
        if (*na > *ns) throw ParseError(lineno, "accepted exceeds submitted");
        if (f[0] != journal || !range.contains(*year)) continue;

        const Eigen::Index col = *year - range.first;
        const Eigen::Index row = *month - 1;
        if (submitted(row, col) >= 0) throw ParseError(lineno, "duplicate row for " + f[1] + "-" + f[2]);
        submitted(row, col) = *ns;
        accepted(row, col) = *na;
        ++selected;
    }
    if (selected == 0) throw ValidationError("empty selection");
    for (Eigen::Index col = 0; col < ncols; ++col) {
        for (Eigen::Index row = 0; row < kMonths; ++row) {
            if (submitted(row, col) < 0) {
                throw ValidationError("missing counts row for " + std::string(journal) + " " +
                                      std::to_string(years[col]) + "-" + std::to_string(row + 1));
            }
        }
    }
    CountPair pair{std::string(journal), {years, std::move(submitted), Outcome::submitted},
                   {years, std::move(accepted), Outcome::accepted}};
    pair.validate();
    return pair;
}

void write_counts(std::ostream& out, const CountPair& pair) {
    out << "journal,year,month,submitted,accepted\n";
    for (std::size_t y = 0; y < pair.submitted.years.size(); ++y) {
        const auto col = static_cast<Eigen::Index>(y);
        for (Eigen::Index m = 0; m < kMonths; ++m) {
            out << pair.journal << ',' << pair.submitted.years[y] << ',' << (m + 1) << ','
                << pair.submitted.counts(m, col) << ',' << pair.accepted.counts(m, col) << '\n';
        }
    }
}

ShareReconstruction counts_from_shares(std::span<const int> years, std::span<const long> totals,
                                       const MonthGrid<double>& shares, Outcome outcome) {
    const auto ncols = shares.cols();
    if (static_cast<Eigen::Index>(years.size()) != ncols || static_cast<Eigen::Index>(totals.size()) != ncols) {
        throw ValidationError("years, totals and share columns disagree in length");
    }
    ShareReconstruction out{{std::vector<int>(years.begin(), years.end()), CountGrid(kMonths, ncols), outcome}, {}};
    for (Eigen::Index col = 0; col < ncols; ++col) {
        const long total = totals[col];
        const std::string where = "year " + std::to_string(years[col]);
        if (total < 0) throw ValidationError("negative total for " + where);
        if ((shares.col(col).array() < 0.0).any()) throw ValidationError("negative share for " + where);
        if (std::abs(shares.col(col).sum() - 1.0) > 5e-4) throw ValidationError("inconsistent shares for " + where);

        const Eigen::Matrix<double, 12, 1> exact = shares.col(col) * static_cast<double>(total);
        for (Eigen::Index m = 0; m < kMonths; ++m) out.matrix.counts(m, col) = std::lround(exact(m));

        const long gap = total - out.matrix.counts.col(col).sum();
        if (gap == 0) continue;
        if (std::abs(gap) > 1) throw ValidationError("inconsistent shares for " + where);

        // Residual exact - rounded: the entry that lost the most moves up, or the one that gained most moves down.
        const Eigen::Matrix<double, 12, 1> residual = exact - out.matrix.counts.col(col).cast<double>();
        Eigen::Index pick = 0;
        if (gap > 0) {
            residual.maxCoeff(&pick);
        } else {
            residual.minCoeff(&pick);
        }
        const long before = out.matrix.counts(pick, col);
        out.matrix.counts(pick, col) += gap;
        if (out.matrix.counts(pick, col) < 0) throw ValidationError("inconsistent shares for " + where);
        out.adjustments.push_back({years[col], static_cast<int>(pick) + 1, before, out.matrix.counts(pick, col)});
    }
    out.matrix.validate();
    return out;
}

std::string_view to_string(Decision d) noexcept {
    return d == Decision::accepted ? "accepted" : "rejected";
}

std::string_view to_string(Outcome o) noexcept {
    return o == Outcome::accepted ? "accepted" : "submitted";
}

}  // namespace seasonality
