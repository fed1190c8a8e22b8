#include "qrep/tables.hpp"

namespace qrep {

ETableRow e_table_row(const Quiver& q, const CensusConfig& cfg) {
    ETableRow row{q.name(), q.n(), {}, {}};
    for (int s = 1; s <= threshold_scan_limit(q, false); ++s) {
        row.fast.push_back(exceptional_count(q, s, cfg));
        row.oracle.push_back(e_split_oracle(q, s, cfg).total());
        if (s >= 2 && row.fast.back() >= q.n()) break;
    }
    return row;
}

std::vector<ETableRow> euclidean_e_table(const CensusConfig& cfg) {
    std::vector<ETableRow> rows;
    for (int m : {6, 7, 8}) rows.push_back(e_table_row(preset("tE", {m}), cfg));
    return rows;
}

SplitRow split_row(const Quiver& q, const std::vector<int>& lengths, const CensusConfig& cfg) {
    SplitRow row{q.name(), q.n(), {}};
    for (int t : lengths) row.split[t] = e_split(q, t, cfg);
    return row;
}

}  // namespace qrep
