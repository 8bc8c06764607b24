#include "seasonality/report.hpp"

#include "csv.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace seasonality {

namespace {

using json = nlohmann::ordered_json;

struct Cell {
    std::optional<double> value;
    bool integer = false;
};

Cell number(double v) { return {std::isnan(v) ? std::nullopt : std::optional<double>(v), false}; }
Cell integer(long v) { return {static_cast<double>(v), true}; }
Cell missing() { return {}; }

struct Row {
    std::vector<std::string> keys;
    std::vector<Cell> cells;
};

// Rows keyed by one or more leading label columns, one value column per header entry.
struct Table {
    std::string name;
    std::vector<std::string> key_header;
    std::vector<std::string> value_header;
    std::vector<Row> rows;
    json meta = json::object();
    // JSON nesting: value column outermost (per-year tables) or keys outermost (t6).
    bool columns_outer = true;
};

std::string cell_text(const Cell& c, int precision) {
    if (!c.value) return "NA";
    if (c.integer) return std::to_string(std::llround(*c.value));
    return format_fixed(*c.value, precision);
}

json cell_json(const Cell& c, int precision) {
    if (!c.value) return nullptr;
    if (c.integer) return std::llround(*c.value);
    return std::stod(format_fixed(*c.value, precision));
}

template <typename Column>
std::vector<std::string> labels(const std::vector<Column>& cols) {
    std::vector<std::string> out;
    for (const auto& c : cols) out.push_back(c.label);
    return out;
}

template <typename Column, typename F>
Row row_of(std::string key, const std::vector<Column>& cols, F&& f) {
    Row r{{std::move(key)}, {}};
    for (const auto& c : cols) r.cells.push_back(f(c));
    return r;
}

template <typename Column>
void add_month_rows(Table& t, const std::vector<Column>& cols) {
    for (Eigen::Index m = 0; m < kMonths; ++m) {
        t.rows.push_back(row_of(std::string(kMonthNames[m]), cols, [m](const auto& c) {
            return c.defined(m) ? number(c.values(m)) : missing();
        }));
    }
}

template <typename Column>
void add_footer_rows(Table& t, const std::vector<Column>& cols) {
    t.rows.push_back(row_of("mean", cols, [](const auto& c) { return number(c.footer.mean); }));
    t.rows.push_back(row_of("std_dev", cols, [](const auto& c) { return number(c.footer.std_dev); }));
    t.rows.push_back(row_of("mu_minus_2sigma", cols, [](const auto& c) { return number(c.footer.band_low); }));
    t.rows.push_back(row_of("mu_plus_2sigma", cols, [](const auto& c) { return number(c.footer.band_high); }));
    t.rows.push_back(row_of("t_stat", cols, [](const auto& c) {
        return c.t_test ? number(c.t_test->statistic) : missing();
    }));
    t.rows.push_back(row_of("t_p_value", cols, [](const auto& c) {
        return c.t_test ? number(c.t_test->p_value) : missing();
    }));
}

json base_meta(const AnalysisBundle& b, int precision) {
    return {{"journal", b.journal}, {"years", b.years}, {"precision", precision}};
}

Table share_table(std::string name, const std::vector<ShareColumn>& cols, const AnalysisBundle& b, int precision) {
    Table t{std::move(name), {"row"}, labels(cols), {}, base_meta(b, precision)};
    t.meta["t_null"] = b.config.t_null;
    t.rows.push_back(row_of("N", cols, [](const auto& c) { return integer(c.total); }));
    add_month_rows(t, cols);
    t.rows.push_back(row_of("chi2", cols, [](const auto& c) { return number(c.chi_square.statistic); }));
    t.rows.push_back(row_of("chi2_p_value", cols, [](const auto& c) { return number(c.chi_square.p_value); }));
    t.rows.push_back(row_of("entropy", cols, [](const auto& c) { return number(c.indices.entropy_H); }));
    add_footer_rows(t, cols);
    return t;
}

Table conditional_table(const AnalysisBundle& b, int precision) {
    const auto& cols = b.conditional;
    Table t{"t3_conditional", {"row"}, labels(cols), {}, base_meta(b, precision)};
    t.meta["t_null"] = b.config.t_null;
    json undefined = json::array();
    for (const auto& u : b.conditional_table.undefined) undefined.push_back({{"year", u.year}, {"month", u.month}});
    t.meta["undefined_cells"] = undefined;
    add_month_rows(t, cols);
    t.rows.push_back(row_of("c_entropy", cols, [](const auto& c) { return number(c.conditional_entropy); }));
    t.rows.push_back(row_of("sum", cols, [](const auto& c) { return number(c.sum); }));
    add_footer_rows(t, cols);
    if (b.config.z_sigma) {
        t.meta["z_sigma"] = *b.config.z_sigma;
        t.meta["z_null"] = b.config.z_null.value_or(b.config.t_null);
        t.rows.push_back(row_of("z_stat", cols, [](const auto& c) { return number(c.z_test->statistic); }));
        t.rows.push_back(row_of("z_p_value", cols, [](const auto& c) { return number(c.z_test->p_value); }));
    }
    return t;
}

Table entropy_term_table(const AnalysisBundle& b, int precision) {
    const auto& cols = b.monthly_entropy;
    Table t{"t4_monthly_entropy", {"row"}, labels(cols), {}, base_meta(b, precision)};
    t.meta["t_null"] = b.config.t_null;
    add_month_rows(t, cols);
    t.rows.push_back(row_of("c_entropy", cols, [](const auto& c) { return number(c.conditional_entropy); }));
    add_footer_rows(t, cols);
    return t;
}

std::string hill_label(double q) {
    std::ostringstream s;
    s << "D_" << q;
    return s.str();
}

template <typename Column>
void add_index_block(Table& t, const std::string& block, const std::vector<Column>& cols,
                     const std::vector<double>& orders) {
    auto add = [&](const std::string& index, auto f) {
        Row r{{block, index}, {}};
        for (const auto& c : cols) r.cells.push_back(number(f(c.indices)));
        t.rows.push_back(std::move(r));
    };
    for (std::size_t i = 0; i < orders.size(); ++i) {
        add(hill_label(orders[i]), [i](const auto& ix) { return ix.hill[i].second; });
    }
    add("e_entropy", [](const auto& ix) { return ix.exponential_entropy; });
    add("theil", [](const auto& ix) { return ix.theil; });
    add("hhi", [](const auto& ix) { return ix.hhi; });
    add("gini", [](const auto& ix) { return ix.gini; });
}

Table index_table(const AnalysisBundle& b, int precision) {
    Table t{"t5_indices", {"block", "index"}, labels(b.submitted), {}, base_meta(b, precision)};
    t.meta["gini_estimator"] = to_string(b.config.gini);
    t.meta["theil_definition"] = "ln(N) - H";
    t.meta["conditional_convention"] =
        "D_1 from the unnormalized acceptance ratios; other orders, e_entropy, theil, hhi and gini from the "
        "normalized ratios";
    add_index_block(t, "submitted", b.submitted, b.config.hill_orders);
    add_index_block(t, "accepted", b.accepted, b.config.hill_orders);
    add_index_block(t, "conditional", b.conditional, b.config.hill_orders);
    return t;
}

Table fourier_table(const AnalysisBundle& b, int precision) {
    Table t{"t6_fourier", {"series", "rank"}, {"amplitude", "frequency", "period"}, {}, base_meta(b, precision)};
    t.columns_outer = false;
    t.meta["series_length"] = b.submitted_series.size();
    auto add = [&t](const std::string& series, const std::vector<SpectralPeak<double>>& peaks) {
        for (std::size_t i = 0; i < peaks.size(); ++i) {
            t.rows.push_back({{series, std::to_string(i + 1)},
                              {number(peaks[i].amplitude), number(peaks[i].frequency), number(peaks[i].period)}});
        }
    };
    add("N_s", b.submitted_peaks);
    add("N_a", b.accepted_peaks);
    return t;
}

std::string to_csv(const Table& t, int precision) {
    std::string out;
    auto header = t.key_header;
    header.insert(header.end(), t.value_header.begin(), t.value_header.end());
    for (std::size_t i = 0; i < header.size(); ++i) out += (i ? "," : "") + header[i];
    out += '\n';
    for (const auto& r : t.rows) {
        std::string line;
        for (std::size_t i = 0; i < r.keys.size(); ++i) line += (i ? "," : "") + r.keys[i];
        for (const auto& c : r.cells) line += "," + cell_text(c, precision);
        out += line + '\n';
    }
    return out;
}

std::string to_json(const Table& t, int precision) {
    json data = json::object();
    for (const auto& r : t.rows) {
        for (std::size_t c = 0; c < r.cells.size(); ++c) {
            json* node = &data;
            if (t.columns_outer) node = &(*node)[t.value_header[c]];
            for (const auto& k : r.keys) node = &(*node)[k];
            if (!t.columns_outer) node = &(*node)[t.value_header[c]];
            *node = cell_json(r.cells[c], precision);
        }
    }
    json doc = {{"table", t.name}, {"meta", t.meta}, {"data", data}};
    return doc.dump(2) + '\n';
}

std::string to_markdown(const Table& t, int precision) {
    std::vector<std::vector<std::string>> grid;
    auto header = t.key_header;
    header.insert(header.end(), t.value_header.begin(), t.value_header.end());
    grid.push_back(header);
    for (const auto& r : t.rows) {
        auto line = r.keys;
        for (const auto& c : r.cells) line.push_back(cell_text(c, precision));
        grid.push_back(std::move(line));
    }
    std::vector<std::size_t> width(header.size(), 3);
    for (const auto& line : grid) {
        for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
    }
    const auto nkeys = t.key_header.size();
    auto emit = [&](const std::vector<std::string>& line) {
        std::string s = "|";
        for (std::size_t i = 0; i < line.size(); ++i) {
            const auto pad = std::string(width[i] - line[i].size(), ' ');
            s += " " + (i < nkeys ? line[i] + pad : pad + line[i]) + " |";
        }
        return s + '\n';
    };

    std::string out = "## " + t.name + "\n\n";
    for (const auto& [key, value] : t.meta.items()) {
        out += "- " + key + ": " + (value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
    }
    out += '\n' + emit(grid.front());
    std::string rule = "|";
    for (std::size_t i = 0; i < width.size(); ++i) {
        rule += i < nkeys ? " " + std::string(width[i], '-') + " |" : " " + std::string(width[i] - 1, '-') + ": |";
    }
    out += rule + '\n';
    for (std::size_t i = 1; i < grid.size(); ++i) out += emit(grid[i]);
    return out;
}

}  // namespace

RenderFormat parse_render_format(std::string_view name) {
    if (name == "csv") return RenderFormat::csv;
    if (name == "json") return RenderFormat::json;
    if (name == "md") return RenderFormat::md;
    throw ValidationError("unknown format '" + std::string(name) + "', expected csv, json or md");
}

std::string_view file_extension(RenderFormat format) noexcept {
    switch (format) {
        case RenderFormat::csv: return ".csv";
        case RenderFormat::json: return ".json";
        case RenderFormat::md: return ".md";
    }
    return "";
}

std::string format_fixed(double x, int precision) {
    if (precision < 0 || precision > 17) throw ValidationError("precision out of range");
    if (!std::isfinite(x)) return std::isnan(x) ? "NA" : (x > 0 ? "inf" : "-inf");

    // Near-exact decimal expansion, then round the digit string by hand: the printf family
    // rounds exact ties to even, we want them away from zero.
    char buf[512];
    std::snprintf(buf, sizeof buf, "%.40f", std::abs(x));
    std::string digits(buf);
    const auto dot = digits.find('.');
    std::string intpart = digits.substr(0, dot);
    std::string frac = digits.substr(dot + 1);
    std::string kept = intpart + frac.substr(0, static_cast<std::size_t>(precision));
    if (frac[static_cast<std::size_t>(precision)] >= '5') {
        int i = static_cast<int>(kept.size()) - 1;
        for (; i >= 0; --i) {
            if (kept[static_cast<std::size_t>(i)] == '9') {
                kept[static_cast<std::size_t>(i)] = '0';
            } else {
                ++kept[static_cast<std::size_t>(i)];
                break;
            }
        }
        if (i < 0) {
            kept.insert(kept.begin(), '1');
            intpart.insert(intpart.begin(), '0');
        }
    }
    std::string out = kept.substr(0, intpart.size());
    if (precision > 0) out += "." + kept.substr(intpart.size());
    const bool zero = std::all_of(kept.begin(), kept.end(), [](char c) { return c == '0'; });
    return (x < 0 && !zero ? "-" : "") + out;
}

std::vector<Document> render(const AnalysisBundle& bundle, RenderFormat format, int precision) {
    if (precision < 1 || precision > 12) throw ValidationError("precision must be in 1..12");
    if (bundle.empty()) throw ValidationError("cannot render an empty bundle");

    const std::vector<Table> tables = {
        share_table("t1_submitted", bundle.submitted, bundle, precision),
        share_table("t2_accepted", bundle.accepted, bundle, precision),
        conditional_table(bundle, precision),
        entropy_term_table(bundle, precision),
        index_table(bundle, precision),
        fourier_table(bundle, precision),
    };
    std::vector<Document> docs;
    for (const auto& t : tables) {
        switch (format) {
            case RenderFormat::csv: docs.push_back({t.name, to_csv(t, precision)}); break;
            case RenderFormat::json: docs.push_back({t.name, to_json(t, precision)}); break;
            case RenderFormat::md: docs.push_back({t.name, to_markdown(t, precision)}); break;
        }
    }
    return docs;
}

CsvTable parse_csv(std::string_view text) {
    CsvTable t;
    std::size_t start = 0;
    bool first = true;
    while (start < text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        const auto line = text.substr(start, end - start);
        start = end + 1;
        if (csv::is_blank(line)) continue;
        if (first) {
            t.header = csv::split(line);
            first = false;
        } else {
            t.rows.push_back(csv::split(line));
        }
    }
    return t;
}

}  // namespace seasonality
