#pragma once

#include "published_tables.hpp"

#include <seasonality/ingest.hpp>

#include <fstream>
#include <string>

#ifndef SEASONALITY_TEST_DATA_DIR
#error "SEASONALITY_TEST_DATA_DIR must be defined"
#endif

namespace fixture {

inline std::string data_path(const std::string& name) { return std::string(SEASONALITY_TEST_DATA_DIR) + "/" + name; }

/// The bundled counts for one journal, read through the counts-csv reader.
inline seasonality::CountPair load(const published::JournalColumns& j) {
    std::ifstream in(data_path("journal_counts.csv"));
    if (!in) throw seasonality::IoError("fixture missing: " + data_path("journal_counts.csv"));
    return seasonality::parse_counts(in, j.journal, {j.first_year, j.first_year + 2});
}

inline seasonality::CountPair jscs() { return load(published::kJournals[0]); }
inline seasonality::CountPair entropy_journal() { return load(published::kJournals[1]); }

}  // namespace fixture
