#include "qrep/census.hpp"

#include <algorithm>
#include <queue>

#include "parallel.hpp"
#include "qrep/errors.hpp"
#include "qrep/roots.hpp"

namespace qrep {

int threshold_scan_limit(const Quiver& q, bool audit) { return std::min(q.n(), audit ? 9 : 7); }

namespace {

void require_connected(const Quiver& q) {
    if (!q.is_connected()) throw InputError("census operations need a connected quiver");
}

void require_length(int t) {
    if (t < 1) throw InputError("length must be >= 1");
}

// Compositions of `total` into `parts` positive summands, lexicographic.
void compositions(int total, int parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (parts == 1) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int x = 1; x <= total - (parts - 1); ++x) {
        cur.push_back(x);
        compositions(total - x, parts - 1, cur, out);
        cur.pop_back();
    }
}

// Thin vectors supported on a subset whose induced graph has a cycle, plus
// non-thin real roots: the candidates needing oracle calls.
std::vector<DimVector> oracle_candidates(const Quiver& q, int t) {
    std::vector<DimVector> out;
    for (const DimVector& d : connected_candidates(q, t)) {
        auto supp = d.support();
        if (d.is_thin() && induced_edge_count(q, supp) == static_cast<int>(supp.size()) - 1) continue;
        if (tits_form(q, d) != 1) continue;
        if (classify_vector(q, d).verdict != RootVerdict::PositiveRealRoot) continue;
        out.push_back(d);
    }
    return out;
}

ExceptionalSplit oracle_sum(const Quiver& q, const std::vector<DimVector>& cands, const CensusConfig& cfg) {
    std::vector<int> counts(cands.size(), 0);
    detail::for_each_index(static_cast<long>(cands.size()), cfg.exec, [&](long k) {
        counts[k] = count_exceptional(q, cands[k], cfg.field, cfg.oracle);
    });
    ExceptionalSplit s;
    for (std::size_t k = 0; k < cands.size(); ++k) (cands[k].is_thin() ? s.thin : s.nonthin) += counts[k];
    return s;
}

}  // namespace

std::vector<DimVector> connected_candidates(const Quiver& q, int t) {
    require_length(t);
    std::vector<DimVector> out;
    for (int k = 1; k <= std::min(t, q.n()); ++k) {
        std::vector<std::vector<int>> comps;
        std::vector<int> cur;
        compositions(t, k, cur, comps);
        for (const auto& subset : connected_subquivers(q, k))
            for (const auto& comp : comps) {
                DimVector d(static_cast<std::size_t>(q.n()));
                for (int i = 0; i < k; ++i) d[subset[i]] = comp[i];
                out.push_back(std::move(d));
            }
    }
    return out;
}

int thin_count(const Quiver& q, int t) {
    if (!q.is_tree()) throw InputError("thin_count needs a tree quiver");
    return static_cast<int>(connected_subquivers(q, t).size());
}

ExceptionalSplit e_split(const Quiver& q, int t, const CensusConfig& cfg) {
    require_connected(q);
    require_length(t);
    ExceptionalSplit s;
    if (t <= q.n())
        for (const auto& subset : connected_subquivers(q, t))
            if (induced_edge_count(q, subset) == t - 1) ++s.thin;
    ExceptionalSplit extra = oracle_sum(q, oracle_candidates(q, t), cfg);
    s.thin += extra.thin;
    s.nonthin += extra.nonthin;
    return s;
}

int exceptional_count(const Quiver& q, int t, const CensusConfig& cfg) { return e_split(q, t, cfg).total(); }

ExceptionalSplit e_split_oracle(const Quiver& q, int t, const CensusConfig& cfg) {
    require_connected(q);
    return oracle_sum(q, connected_candidates(q, t), cfg);
}

std::optional<int> t_q(const Quiver& q, const CensusConfig& cfg) {
    require_connected(q);
    for (int t = 2; t <= threshold_scan_limit(q, false); ++t)
        if (exceptional_count(q, t, cfg) >= q.n()) return t;
    return std::nullopt;
}

// ---------------------------------------------------------------------------

namespace {

struct RootTally {
    int roots = 0;
    int imaginary = 0;
    long indecomposable = 0;
    long nonthin_indecomposable = 0;
    int exceptional = 0;
};

RootTally tally_roots(const Quiver& q, const std::vector<DimVector>& roots, const CensusConfig& cfg) {
    std::vector<ClassCounts> counts(roots.size());
    std::vector<char> imaginary(roots.size(), 0);
    detail::for_each_index(static_cast<long>(roots.size()), cfg.exec, [&](long k) {
        imaginary[k] = classify_vector(q, roots[k]).verdict == RootVerdict::ImaginaryRoot;
        counts[k] = class_counts(q, roots[k], cfg.field, cfg.oracle);
    });
    RootTally t;
    for (std::size_t k = 0; k < roots.size(); ++k) {
        ++t.roots;
        t.imaginary += imaginary[k];
        t.indecomposable += counts[k].indecomposable;
        if (!roots[k].is_thin()) t.nonthin_indecomposable += counts[k].indecomposable;
        t.exceptional += counts[k].exceptional;
    }
    return t;
}

std::vector<DimVector> roots_of_height(const std::vector<DimVector>& roots, int t) {
    std::vector<DimVector> out;
    for (const auto& r : roots)
        if (r.height() == t) out.push_back(r);
    return out;
}

}  // namespace

IndecomposableCount indecomposable_count(const Quiver& q, int t, const CensusConfig& cfg) {
    require_connected(q);
    require_length(t);
    auto roots = roots_of_height(positive_roots_up_to_height(q, t, cfg.exec), t);
    if (is_representation_finite(q)) return {static_cast<long>(roots.size()), false};
    RootTally tally = tally_roots(q, roots, cfg);
    return {tally.indecomposable, tally.imaginary > 0};
}

// ---------------------------------------------------------------------------

LemmaReport lemma_check(const Quiver& q, const std::vector<Vertex>& subquiver, int t, const CensusConfig& cfg) {
    require_connected(q);
    if (subquiver.empty() || !induces_connected(q, subquiver))
        throw InputError("lemma_check needs a vertex subset inducing a connected subquiver");
    Subquiver sub = induced_subquiver(q, subquiver);
    const int n_sub = sub.quiver.n();
    if (t < 2 || t > n_sub) throw InputError("lemma_check needs 2 <= t <= size of the subquiver");

    LemmaReport rep;
    rep.t = t;
    rep.n = q.n();
    rep.n_sub = n_sub;
    rep.e_q = exceptional_count(q, t, cfg);
    rep.e_sub = exceptional_count(sub.quiver, t, cfg);
    rep.holds = rep.e_q >= rep.e_sub + rep.n - rep.n_sub;

    // Peel off the vertex farthest from the subquiver (the rest stays
    // connected); each step contributes a thin exceptional through it.
    std::vector<char> in_sub(q.n(), 0), alive(q.n(), 1);
    for (Vertex v : sub.to_parent) in_sub[v] = 1;
    for (int step = 0; step < q.n() - n_sub; ++step) {
        std::vector<int> dist(q.n(), -1);
        std::queue<Vertex> bfs;
        for (Vertex v : sub.to_parent) {
            dist[v] = 0;
            bfs.push(v);
        }
        while (!bfs.empty()) {
            Vertex v = bfs.front();
            bfs.pop();
            for (Vertex w : q.neighbors(v))
                if (alive[w] && dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    bfs.push(w);
                }
        }
        Vertex omega = -1;
        for (Vertex v = 0; v < q.n(); ++v)
            if (alive[v] && !in_sub[v] && (omega < 0 || dist[v] > dist[omega])) omega = v;

        std::vector<Vertex> current;
        for (Vertex v = 0; v < q.n(); ++v)
            if (alive[v]) current.push_back(v);
        Subquiver cur = induced_subquiver(q, current);
        LemmaWitness w{omega, {}};
        for (const auto& s : connected_subquivers(cur.quiver, t)) {
            std::vector<Vertex> mapped;
            for (Vertex v : s) mapped.push_back(cur.to_parent[v]);
            if (std::find(mapped.begin(), mapped.end(), omega) == mapped.end()) continue;
            if (induced_edge_count(q, mapped) != t - 1) continue;
            w.support = std::move(mapped);
            break;
        }
        rep.witnesses.push_back(std::move(w));
        alive[omega] = 0;
    }
    return rep;
}

// ---------------------------------------------------------------------------

namespace {

// The proof's case analysis: the value t_Q must take.
std::pair<std::string, std::optional<int>> proof_case(const Quiver& q, bool rep_finite) {
    if (rep_finite) return {"representation-finite", std::nullopt};
    if (!q.is_tree()) return {"not a tree", 2};
    auto prof = arm_profile(q);
    if (!prof || prof->arms.size() > 3) return {"contains tD subquiver", 3};
    const int p = prof->arms[0], qq = prof->arms[1], r = prof->arms[2];
    std::string t = "T" + std::to_string(p) + "," + std::to_string(qq) + "," + std::to_string(r);
    if (r >= 3) return {t + " with r >= 3", 4};
    if (qq >= 4) return {t + " with q >= 4, r = 2", 5};
    return {t + " with q = 3, r = 2, p >= 6", 7};
}

}  // namespace

CensusReport verify_theorem(const Quiver& q, const CensusConfig& cfg) {
    require_connected(q);
    CensusReport rep;
    rep.name = q.name();
    rep.quiver_text = q.to_text();
    rep.n = q.n();
    rep.arrows = static_cast<int>(q.arrows().size());
    rep.field = cfg.field.order();
    GraphClass cls = classify_graph(q);
    rep.graph_class = cls.str();
    rep.rep_finite = cls.kind == DiagramKind::Dynkin;
    std::tie(rep.case_label, rep.expected_t_q) = proof_case(q, rep.rep_finite);

    const int n = q.n();
    const int limit = threshold_scan_limit(q, false);
    const int audit_limit = threshold_scan_limit(q, cfg.audit);
    auto roots = positive_roots_up_to_height(q, audit_limit, cfg.exec);

    auto make_row = [&](int t) {
        LengthRow row;
        row.t = t;
        row.e = e_split(q, t, cfg);
        RootTally tally = tally_roots(q, roots_of_height(roots, t), cfg);
        row.e_oracle = tally.exceptional;
        row.roots = tally.roots;
        row.imaginary_roots = tally.imaginary;
        row.indecomposable = tally.indecomposable;
        row.nonthin_indecomposable = tally.nonthin_indecomposable;
        row.infinite_family = tally.imaginary > 0;
        row.all_exceptional = !row.infinite_family && tally.indecomposable == tally.exceptional;
        if (cfg.audit) row.e_recount = e_split_oracle(q, t, cfg);
        return row;
    };

    for (int t = 1; t <= limit; ++t) {
        rep.rows.push_back(make_row(t));
        if (t >= 2 && rep.rows.back().e.total() >= n) {
            rep.t_q = t;
            break;
        }
    }
    if (cfg.audit && !rep.t_q)
        for (int t = limit + 1; t <= audit_limit; ++t) {
            rep.rows.push_back(make_row(t));
            if (rep.rows.back().e.total() >= n) rep.audit_ok = false;
        }

    for (const LengthRow& row : rep.rows) {
        if (row.e.total() != row.e_oracle) rep.engines_agree = false;
        if (row.e_recount && !(*row.e_recount == row.e)) rep.audit_ok = false;
    }

    TheoremVerdicts& v = rep.verdicts;
    v.rep_infinite = !rep.rep_finite;
    for (const LengthRow& row : rep.rows)
        if (row.t >= 2 && row.t <= limit && (row.indecomposable >= n || row.infinite_family)) {
            v.ii_length = row.t;
            break;
        }
    if (!v.ii_length && rep.rep_finite) {
        // Beyond the oracle's range the count of length-t indecomposables
        // is the count of height-t positive roots (Gabriel).
        for (auto [t, c] : kostant_check(q, cfg.exec).histogram)
            if (t > limit && c >= n) {
                v.ii_length = t;
                break;
            }
    }
    v.many_indecomposables = v.ii_length > 0;

    if (rep.t_q) {
        bool ok = true;
        for (const LengthRow& row : rep.rows) {
            if (row.t > *rep.t_q) break;
            if (row.t >= 2 && row.t < *rep.t_q && row.e.total() != n - 1) ok = false;
            if (!row.all_exceptional) ok = false;
        }
        v.threshold = ok;
    }
    return rep;
}

}  // namespace qrep
