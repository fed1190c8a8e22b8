#include "qrep/report.hpp"

#include <iomanip>
#include <sstream>

namespace qrep {

namespace {

const char* yes(bool b) { return b ? "yes" : "no"; }

nlohmann::json split_json(const ExceptionalSplit& s) {
    return {{"e", s.total()}, {"thin", s.thin}, {"nonthin", s.nonthin}};
}

}  // namespace

std::string format_census(const CensusReport& r) {
    std::ostringstream out;
    out << "quiver " << (r.name.empty() ? "-" : r.name) << "  n=" << r.n << "  arrows=" << r.arrows
        << "  field=F_" << r.field << "\n";
    out << "  " << r.quiver_text << "\n";
    out << "class: " << r.graph_class << " (" << (r.rep_finite ? "representation-finite" : "representation-infinite")
        << ")\n";
    out << "   t  e(t) e'(t) e''(t) roots  indec  nonthin-indec  family\n";
    for (const LengthRow& row : r.rows) {
        out << std::setw(4) << row.t << std::setw(6) << row.e.total() << std::setw(6) << row.e.thin << std::setw(7)
            << row.e.nonthin << std::setw(6) << row.roots << std::setw(7) << row.indecomposable << std::setw(15)
            << row.nonthin_indecomposable << "  " << (row.infinite_family ? "yes" : "no");
        if (row.e_recount) out << "  recount " << row.e_recount->total();
        out << "\n";
    }
    out << "t_Q = " << (r.t_q ? std::to_string(*r.t_q) : "none") << "  (case: " << r.case_label << ", expected "
        << (r.expected_t_q ? std::to_string(*r.expected_t_q) : "none") << ")\n";
    const TheoremVerdicts& v = r.verdicts;
    out << "(i)   representation-infinite: " << yes(v.rep_infinite) << "\n";
    out << "(ii)  n indecomposables of one length >= 2: " << yes(v.many_indecomposables);
    if (v.ii_length) out << " (t = " << v.ii_length << ")";
    out << "\n";
    out << "(iii) threshold condition: " << yes(v.threshold) << "\n";
    out << "equivalences: (i)<=>(ii) " << yes(v.i_ii()) << ", (ii)<=>(iii) " << yes(v.ii_iii()) << ", (i)<=>(iii) "
        << yes(v.i_iii()) << "\n";
    out << "engines agree: " << yes(r.engines_agree) << "  audit: " << (r.audit_ok ? "ok" : "FAILED") << "\n";
    out << "verdict: " << (r.ok() ? "PASS" : "FAIL") << "\n";
    return out.str();
}

nlohmann::json census_json(const CensusReport& r) {
    nlohmann::json rows = nlohmann::json::array();
    for (const LengthRow& row : r.rows) {
        nlohmann::json j = {{"t", row.t},
                            {"e", row.e.total()},
                            {"e_thin", row.e.thin},
                            {"e_nonthin", row.e.nonthin},
                            {"e_oracle", row.e_oracle},
                            {"roots", row.roots},
                            {"imaginary_roots", row.imaginary_roots},
                            {"indecomposable", row.indecomposable},
                            {"nonthin_indecomposable", row.nonthin_indecomposable},
                            {"infinite_family", row.infinite_family},
                            {"all_exceptional", row.all_exceptional}};
        if (row.e_recount) j["e_recount"] = split_json(*row.e_recount);
        rows.push_back(std::move(j));
    }
    const TheoremVerdicts& v = r.verdicts;
    return {{"name", r.name},
            {"quiver", r.quiver_text},
            {"n", r.n},
            {"arrows", r.arrows},
            {"field", r.field},
            {"class", r.graph_class},
            {"rep_finite", r.rep_finite},
            {"rows", rows},
            {"t_q", r.t_q ? nlohmann::json(*r.t_q) : nlohmann::json(nullptr)},
            {"case", r.case_label},
            {"expected_t_q", r.expected_t_q ? nlohmann::json(*r.expected_t_q) : nlohmann::json(nullptr)},
            {"verdicts",
             {{"i", v.rep_infinite},
              {"ii", v.many_indecomposables},
              {"ii_length", v.ii_length},
              {"iii", v.threshold},
              {"i_ii", v.i_ii()},
              {"ii_iii", v.ii_iii()},
              {"i_iii", v.i_iii()}}},
            {"engines_agree", r.engines_agree},
            {"audit_ok", r.audit_ok},
            {"ok", r.ok()}};
}

std::string format_corpus(const CorpusReport& r) {
    std::ostringstream out;
    out << "corpus up to n=" << r.n_max << ", orientations: "
        << (r.mode == OrientationMode::all ? "all" : "one per tree") << "\n";
    out << "   n  trees  rep-infinite  unicyclic  quivers\n";
    for (const auto& [n, s] : r.by_size)
        out << std::setw(4) << n << std::setw(7) << s.trees << std::setw(14) << s.rep_infinite_trees << std::setw(11)
            << s.unicyclic_graphs << std::setw(9) << s.quivers << "\n";
    out << "verified quivers: " << r.reports.size() << "\n";
    out << "orientation mismatches: " << r.orientation_mismatches << "\n";
    out << "failures: " << r.failures.size() << "\n";
    for (const auto& f : r.failures) out << "  " << f << "\n";
    out << "verdict: " << (r.ok() ? "PASS" : "FAIL") << "\n";
    return out.str();
}

nlohmann::json corpus_json(const CorpusReport& r) {
    nlohmann::json sizes = nlohmann::json::array();
    for (const auto& [n, s] : r.by_size)
        sizes.push_back({{"n", n},
                         {"trees", s.trees},
                         {"rep_infinite_trees", s.rep_infinite_trees},
                         {"unicyclic_graphs", s.unicyclic_graphs},
                         {"quivers", s.quivers}});
    nlohmann::json quivers = nlohmann::json::array();
    for (const auto& c : r.reports)
        quivers.push_back({{"name", c.name},
                           {"quiver", c.quiver_text},
                           {"t_q", c.t_q ? nlohmann::json(*c.t_q) : nlohmann::json(nullptr)},
                           {"ok", c.ok()}});
    return {{"n_max", r.n_max},
            {"orientations", r.mode == OrientationMode::all ? "all" : "one-per-tree"},
            {"sizes", sizes},
            {"quivers", quivers},
            {"orientation_mismatches", r.orientation_mismatches},
            {"failures", r.failures},
            {"ok", r.ok()}};
}

std::string format_e_table(const std::vector<ETableRow>& rows) {
    std::size_t width = 0;
    for (const auto& r : rows) width = std::max(width, r.fast.size());
    std::ostringstream out;
    out << "Q \\ s ";
    for (std::size_t s = 1; s <= width; ++s) out << std::setw(3) << s;
    out << "\n";
    for (const auto& r : rows) {
        out << std::left << std::setw(6) << r.name << std::right;
        for (int v : r.fast) out << std::setw(3) << v;
        out << "\n";
    }
    bool agree = true;
    for (const auto& r : rows) agree = agree && r.agrees();
    out << "pure-oracle recount: " << (agree ? "agrees" : "DISAGREES") << "\n";
    return out.str();
}

nlohmann::json e_table_json(const std::vector<ETableRow>& rows) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : rows)
        j.push_back({{"name", r.name}, {"n", r.n}, {"e", r.fast}, {"e_oracle", r.oracle}, {"agrees", r.agrees()}});
    return {{"table", j}};
}

std::string format_split_table(const std::vector<SplitRow>& rows) {
    std::ostringstream out;
    std::vector<int> lengths;
    if (!rows.empty())
        for (const auto& [t, s] : rows.front().split) lengths.push_back(t);
    out << std::left << std::setw(10) << "Q" << std::right << std::setw(4) << "n";
    for (int t : lengths)
        out << std::setw(7) << ("e'(" + std::to_string(t) + ")") << std::setw(8) << ("e''(" + std::to_string(t) + ")");
    out << "\n";
    for (const auto& r : rows) {
        out << std::left << std::setw(10) << r.name << std::right << std::setw(4) << r.n;
        for (const auto& [t, s] : r.split) out << std::setw(7) << s.thin << std::setw(8) << s.nonthin;
        out << "\n";
    }
    return out.str();
}

nlohmann::json split_table_json(const std::vector<SplitRow>& rows) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json splits = nlohmann::json::array();
        for (const auto& [t, s] : r.split) {
            auto e = split_json(s);
            e["t"] = t;
            splits.push_back(std::move(e));
        }
        j.push_back({{"name", r.name}, {"n", r.n}, {"split", splits}});
    }
    return {{"table", j}};
}

nlohmann::json histogram_json(const HeightHistogram& h) {
    nlohmann::json j = nlohmann::json::array();
    for (auto [t, c] : h) j.push_back({t, c});
    return j;
}

std::string format_histogram(const HeightHistogram& h) {
    std::ostringstream out;
    out << "height count\n";
    for (auto [t, c] : h) out << std::setw(6) << t << std::setw(6) << c << "\n";
    return out.str();
}

}  // namespace qrep
