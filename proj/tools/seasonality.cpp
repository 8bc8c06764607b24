// seasonality: monthly seasonality report for journal submission/acceptance data.
//
//   seasonality analyze --input counts.csv --format counts --journal JSCS --years 2012:2014 \
//       --emit csv --out reports/jscs
//
// Exit codes: 0 success, 1 validation error, 2 I/O error.

#include "seasonality/report.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace seasonality;

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitIo = 2;

std::vector<double> parse_orders(const std::string& text) {
    std::vector<double> orders;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            const double q = std::stod(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            orders.push_back(q);
        } catch (const std::logic_error&) {
            throw ValidationError("bad Hill order '" + item + "'");
        }
    }
    if (orders.empty()) throw ValidationError("--q needs at least one order");
    return orders;
}

struct AnalyzeOptions {
    std::string input;
    std::string format = "counts";
    std::string journal;
    std::string years;
    std::string q = "1,2";
    int precision = 5;
    std::string emit = "csv";
    std::string out = ".";
    double t_null = 0.0833333;
    std::optional<double> z_sigma;
    std::optional<double> z_null;
};

int run_analyze(const AnalyzeOptions& o) {
    const auto range = YearRange::parse(o.years);
    const auto emit = parse_render_format(o.emit);
    if (o.format != "events" && o.format != "counts") {
        throw ValidationError("unknown input format '" + o.format + "', expected events or counts");
    }
    BundleConfig cfg;
    cfg.hill_orders = parse_orders(o.q);
    cfg.t_null = o.t_null;
    cfg.z_sigma = o.z_sigma;
    cfg.z_null = o.z_null;

    std::ifstream in(o.input);
    if (!in) throw IoError("cannot open input '" + o.input + "'");
    CountPair counts;
    if (o.format == "events") {
        const auto events = parse_events(in);
        counts = aggregate(events, o.journal, range);
    } else {
        counts = parse_counts(in, o.journal, range);
    }

    const auto bundle = build_bundle(counts, cfg);
    const auto docs = render(bundle, emit, o.precision);

    std::error_code ec;
    fs::create_directories(o.out, ec);
    if (ec) throw IoError("cannot create output directory '" + o.out + "': " + ec.message());
    for (const auto& d : docs) {
        const auto path = fs::path(o.out) / (d.name + std::string(file_extension(emit)));
        std::ofstream f(path, std::ios::binary);
        if (!f || !(f << d.body) || !f.flush()) throw IoError("cannot write '" + path.string() + "'");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Seasonality of monthly submission and acceptance counts: shares, entropy, diversity, "
                 "inequality indices, significance tests and Fourier peaks."};
    app.set_version_flag("--version", std::string("seasonality ") + SEASONALITY_VERSION);
    app.require_subcommand(1);

    AnalyzeOptions o;
    auto* analyze = app.add_subcommand("analyze", "Build the six report tables for one journal");
    analyze->add_option("--input", o.input, "Input CSV file")->required();
    analyze->add_option("--format", o.format, "Input layout: events or counts")
        ->check(CLI::IsMember({"events", "counts"}))
        ->capture_default_str();
    analyze->add_option("--journal", o.journal, "Journal label to select")->required();
    analyze->add_option("--years", o.years, "Inclusive year range y0:y1")->required();
    analyze->add_option("--q", o.q, "Comma-separated Hill orders")->capture_default_str();
    analyze->add_option("--precision", o.precision, "Decimal places in the output (1-12)")->capture_default_str();
    analyze->add_option("--emit", o.emit, "Output format: csv, json or md")
        ->check(CLI::IsMember({"csv", "json", "md"}))
        ->capture_default_str();
    analyze->add_option("--out", o.out, "Output directory")->capture_default_str();
    analyze->add_option("--t-null", o.t_null, "Hypothesized mean of the t rows")->capture_default_str();
    analyze->add_option("--z-sigma", o.z_sigma, "Known sigma for the conditional z row");
    analyze->add_option("--z-null", o.z_null, "Hypothesized mean of the z row (default: --t-null)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitValidation;
    }

    try {
        return run_analyze(o);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    }
}
