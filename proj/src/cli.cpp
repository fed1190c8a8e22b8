#include "qrep/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "qrep/census.hpp"
#include "qrep/corpus.hpp"
#include "qrep/errors.hpp"
#include "qrep/report.hpp"
#include "qrep/roots.hpp"
#include "qrep/tables.hpp"

namespace qrep {

namespace {

struct Options {
    std::string source;
    std::string lengths;
    std::string which;
    std::vector<std::string> extra;
    int field = 2;
    int height = kDefaultHeightBound;
    int n_max = 8;
    std::string orientations = "one";
    std::string format = "text";
    bool audit = false;
};

// Preset name, inline "n; i->j ..." text, or a file in that format.
Quiver load_quiver(const std::string& source) {
    std::string preset_error;
    try {
        return preset(source);
    } catch (const QuiverError&) {
        throw;
    } catch (const InputError& e) {
        preset_error = e.what();
    }
    if (source.find(';') != std::string::npos) return parse_quiver(source);
    if (!std::filesystem::is_regular_file(source))
        throw InputError(preset_error + "; '" + source + "' is not inline quiver text or a readable file either");
    std::ifstream in(source);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_quiver(buf.str()).renamed(std::filesystem::path(source).filename().string());
}

// "5" or "2-6"; empty means 1..min(n,7).
std::vector<int> parse_lengths(const std::string& range, const Quiver& q) {
    int lo = 1, hi = threshold_scan_limit(q, false);
    if (!range.empty()) {
        auto dash = range.find('-');
        try {
            lo = std::stoi(range.substr(0, dash));
            hi = dash == std::string::npos ? lo : std::stoi(range.substr(dash + 1));
        } catch (const std::exception&) {
            throw InputError("length must be 't' or 'a-b', got '" + range + "'");
        }
        if (lo < 1 || hi < lo) throw InputError("invalid length range '" + range + "'");
    }
    std::vector<int> out;
    for (int t = lo; t <= hi; ++t) out.push_back(t);
    return out;
}

CensusConfig census_config(const Options& o) {
    CensusConfig cfg;
    cfg.field = PrimeField(o.field);
    cfg.audit = o.audit;
    return cfg;
}

void emit(std::ostream& out, const Options& o, const std::string& text, const nlohmann::json& doc) {
    if (o.format == "structured")
        out << doc.dump(2) << "\n";
    else
        out << text;
}

int cmd_classify(const Options& o, std::ostream& out) {
    Quiver q = load_quiver(o.source);
    GraphClass c = classify_graph(q);
    bool finite = c.kind == DiagramKind::Dynkin;
    std::ostringstream text;
    text << c.str() << "\n" << (finite ? "representation-finite" : "representation-infinite") << "\n";
    nlohmann::json doc = {{"quiver", q.to_text()}, {"class", c.str()}, {"rep_finite", finite}, {"witness", c.witness}};
    if (q.is_tree())
        if (auto prof = arm_profile(q)) {
            text << "arms at vertex " << prof->center << ":";
            for (int a : prof->arms) text << " " << a;
            text << "\n";
            doc["arm_profile"] = {{"center", prof->center}, {"arms", prof->arms}};
        }
    emit(out, o, text.str(), doc);
    return kExitOk;
}

int cmd_roots(const Options& o, std::ostream& out) {
    Quiver q = load_quiver(o.source);
    if (is_representation_finite(q)) {
        KostantReport k = kostant_check(q);
        std::ostringstream text;
        text << format_histogram(k.histogram);
        text << "total positive roots: " << k.total << " (reflection closure: " << k.closure_total << ")\n";
        text << "max count at height >= 2: " << k.max_count_above_one << " (bound n-1 = " << q.n() - 1 << ")\n";
        text << "kostant bound: " << (k.bound_holds ? "holds" : "VIOLATED")
             << ", closure cross-check: " << (k.closure_agrees ? "agrees" : "DISAGREES") << "\n";
        emit(out, o, text.str(),
             {{"histogram", histogram_json(k.histogram)},
              {"total", k.total},
              {"closure_total", k.closure_total},
              {"highest_height", k.highest_height},
              {"max_count_above_one", k.max_count_above_one},
              {"bound_holds", k.bound_holds},
              {"closure_agrees", k.closure_agrees}});
        return k.ok() ? kExitOk : kExitVerificationFailed;
    }
    auto roots = positive_roots_up_to_height(q, o.height);
    auto h = height_histogram(roots);
    std::ostringstream text;
    text << format_histogram(h) << "positive roots up to height " << o.height << ": " << roots.size() << "\n";
    emit(out, o, text.str(), {{"height_bound", o.height}, {"histogram", histogram_json(h)}, {"total", roots.size()}});
    return kExitOk;
}

int cmd_count(const Options& o, std::ostream& out, bool split) {
    Quiver q = load_quiver(o.source);
    CensusConfig cfg = census_config(o);
    std::ostringstream text;
    nlohmann::json rows = nlohmann::json::array();
    text << (split ? "t  e'(t)  e''(t)\n" : "t  e(t)\n");
    for (int t : parse_lengths(o.lengths, q)) {
        ExceptionalSplit s = e_split(q, t, cfg);
        if (split) {
            text << t << "  " << s.thin << "  " << s.nonthin << "\n";
            rows.push_back({{"t", t}, {"thin", s.thin}, {"nonthin", s.nonthin}});
        } else {
            text << t << "  " << s.total() << "\n";
            rows.push_back({{"t", t}, {"e", s.total()}});
        }
    }
    emit(out, o, text.str(), {{"quiver", q.to_text()}, {"n", q.n()}, {"rows", rows}});
    return kExitOk;
}

int cmd_tq(const Options& o, std::ostream& out) {
    Quiver q = load_quiver(o.source);
    auto t = t_q(q, census_config(o));
    emit(out, o, (t ? std::to_string(*t) : "none") + "\n",
         {{"quiver", q.to_text()}, {"t_q", t ? nlohmann::json(*t) : nlohmann::json(nullptr)}});
    return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
    Quiver q = load_quiver(o.source);
    CensusReport r = verify_theorem(q, census_config(o));
    emit(out, o, format_census(r), census_json(r));
    return r.ok() ? kExitOk : kExitVerificationFailed;
}

int cmd_corpus(const Options& o, std::ostream& out) {
    OrientationMode mode = o.orientations == "all" ? OrientationMode::all : OrientationMode::one_per_tree;
    CorpusReport r = corpus_verify(o.n_max, mode, census_config(o));
    emit(out, o, format_corpus(r), corpus_json(r));
    return r.ok() ? kExitOk : kExitVerificationFailed;
}

int cmd_tables(const Options& o, std::ostream& out) {
    CensusConfig cfg = census_config(o);
    if (o.which == "tE") {
        auto rows = euclidean_e_table(cfg);
        emit(out, o, format_e_table(rows), e_table_json(rows));
        for (const auto& r : rows)
            if (!r.agrees()) return kExitVerificationFailed;
        return kExitOk;
    }
    if (o.which == "remark") {
        std::vector<std::string> names = o.extra;
        if (names.empty()) names = {"T5,4,2", "T7,3,2"};
        std::vector<SplitRow> rows;
        for (const auto& name : names) {
            Quiver q = load_quiver(name);
            std::vector<int> lengths;
            for (int t : {5, 6, 7})
                if (t <= q.n()) lengths.push_back(t);
            rows.push_back(split_row(q, lengths, cfg));
        }
        emit(out, o, format_split_table(rows), split_table_json(rows));
        return kExitOk;
    }
    throw InputError("unknown table '" + o.which + "' (expected tE or remark)");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exceptional representations of quivers: e_Q(t), t_Q and theorem verification"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--field", o.field, "prime field order (2, 3, 5, 7)")->check(CLI::IsMember({2, 3, 5, 7}));
    app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "structured"}));
    app.add_option("--height", o.height, "height bound for root scans")->check(CLI::Range(1, 64));
    app.add_option("--orientations", o.orientations, "corpus orientation mode")
        ->check(CLI::IsMember({"one", "all"}));
    app.add_flag("--audit", o.audit, "extended t_Q scan and pure-oracle recount");

    auto source_cmd = [&](const char* name, const char* help) {
        auto* c = app.add_subcommand(name, help);
        c->add_option("quiver", o.source, "preset (A5, tE6, T5,4,2, ...), inline '3; 0->1 1->2', or file")
            ->required();
        return c;
    };
    auto* classify = source_cmd("classify", "Dynkin/Euclidean classification and representation type");
    auto* roots = source_cmd("roots", "positive-root height histogram; Kostant check for Dynkin quivers");
    auto* count = source_cmd("count", "e(t), the number of exceptional classes of length t");
    count->add_option("-t,--length", o.lengths, "length t or range a-b");
    auto* split = source_cmd("split", "thin / non-thin exceptional counts e'(t), e''(t)");
    split->add_option("-t,--length", o.lengths, "length t or range a-b");
    auto* tq = source_cmd("tq", "the invariant t_Q");
    auto* verify = source_cmd("verify", "check the equivalence of (i), (ii), (iii) on one quiver");
    auto* corpus = app.add_subcommand("corpus", "verify every tree and unicyclic quiver up to a size");
    corpus->add_option("--nmax", o.n_max, "largest vertex count")->check(CLI::Range(1, 64));
    auto* tables = app.add_subcommand("tables", "regenerate the tE table (tE) or the thin/non-thin table (remark)");
    tables->add_option("table", o.which, "tE or remark")->required();
    tables->add_option("quivers", o.extra, "T presets for the remark table");

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    try {
        if (classify->parsed()) return cmd_classify(o, out);
        if (roots->parsed()) return cmd_roots(o, out);
        if (count->parsed()) return cmd_count(o, out, false);
        if (split->parsed()) return cmd_count(o, out, true);
        if (tq->parsed()) return cmd_tq(o, out);
        if (verify->parsed()) return cmd_verify(o, out);
        if (corpus->parsed()) return cmd_corpus(o, out);
        if (tables->parsed()) return cmd_tables(o, out);
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return kExitBudgetExceeded;
    } catch (const QuiverError& e) {
        err << "invalid quiver: " << e.what() << "\n";
        return kExitInputError;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}

}  // namespace qrep
