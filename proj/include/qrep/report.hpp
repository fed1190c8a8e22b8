#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qrep/census.hpp"
#include "qrep/corpus.hpp"
#include "qrep/quiver.hpp"
#include "qrep/roots.hpp"
#include "qrep/tables.hpp"

namespace qrep {

// Plain-text layouts and the equivalent structured (JSON) documents.
// Both carry the same numbers.

std::string format_census(const CensusReport& r);
nlohmann::json census_json(const CensusReport& r);

std::string format_corpus(const CorpusReport& r);
nlohmann::json corpus_json(const CorpusReport& r);

std::string format_e_table(const std::vector<ETableRow>& rows);
nlohmann::json e_table_json(const std::vector<ETableRow>& rows);

std::string format_split_table(const std::vector<SplitRow>& rows);
nlohmann::json split_table_json(const std::vector<SplitRow>& rows);

// Histogram as ordered (height, count) pairs.
nlohmann::json histogram_json(const HeightHistogram& h);
std::string format_histogram(const HeightHistogram& h);

}  // namespace qrep
