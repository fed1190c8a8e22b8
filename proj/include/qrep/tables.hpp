#pragma once

#include <map>
#include <string>
#include <vector>

#include "qrep/census.hpp"

namespace qrep {

// e_Q(s) for s = 1 .. t_Q, by the fast path and by pure-oracle recount.
struct ETableRow {
    std::string name;
    int n = 0;
    std::vector<int> fast;
    std::vector<int> oracle;
    bool agrees() const { return fast == oracle; }
};

ETableRow e_table_row(const Quiver& q, const CensusConfig& cfg = {});
// Rows for tE6, tE7, tE8.
std::vector<ETableRow> euclidean_e_table(const CensusConfig& cfg = {});

// Thin / non-thin exceptional counts at the given lengths.
struct SplitRow {
    std::string name;
    int n = 0;
    std::map<int, ExceptionalSplit> split;
};

SplitRow split_row(const Quiver& q, const std::vector<int>& lengths, const CensusConfig& cfg = {});

}  // namespace qrep
