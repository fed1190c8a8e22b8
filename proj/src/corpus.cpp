#include "qrep/corpus.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "parallel.hpp"
#include "qrep/errors.hpp"

namespace qrep {

namespace {

using Adj = std::vector<std::vector<int>>;

Adj adjacency(const Quiver& q) {
    Adj adj(q.n());
    for (Vertex v = 0; v < q.n(); ++v) adj[v] = q.neighbors(v);
    return adj;
}

// AHU encoding of the subtree at v, ignoring `blocked` neighbors.
std::string ahu(const Adj& adj, int v, int parent, const std::vector<char>& blocked) {
    std::vector<std::string> kids;
    for (int w : adj[v])
        if (w != parent && !blocked[w]) kids.push_back(ahu(adj, w, v, blocked));
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (auto& k : kids) s += k;
    return s + ")";
}

// Vertices left after repeatedly stripping leaves: the center(s) of a tree
// or the cycle of a unicyclic graph.
std::vector<int> strip_leaves(const Adj& adj, bool tree) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> deg(n);
    std::vector<char> gone(n, 0);
    for (int v = 0; v < n; ++v) deg[v] = static_cast<int>(adj[v].size());
    int left = n;
    std::vector<int> layer;
    for (int v = 0; v < n; ++v)
        if (deg[v] <= 1) layer.push_back(v);
    while (!layer.empty() && (!tree || left > 2)) {
        std::vector<int> next;
        for (int v : layer) {
            gone[v] = 1;
            --left;
            for (int w : adj[v])
                if (!gone[w] && --deg[w] == 1) next.push_back(w);
        }
        layer = std::move(next);
    }
    std::vector<int> core;
    for (int v = 0; v < n; ++v)
        if (!gone[v]) core.push_back(v);
    return core;
}

// BFS labeling from `roots` (already ordered), children ordered by their
// AHU encodings; returns old -> new and the parent of every non-root.
struct Labeling {
    std::vector<int> order;   // new -> old
    std::vector<int> parent;  // by old index, -1 for roots
};

Labeling bfs_label(const Adj& adj, const std::vector<int>& roots, const std::vector<char>& blocked_root_edges) {
    const int n = static_cast<int>(adj.size());
    Labeling lab;
    lab.parent.assign(n, -1);
    std::vector<char> seen(n, 0);
    std::queue<int> bfs;
    for (int r : roots) {
        seen[r] = 1;
        lab.order.push_back(r);
    }
    for (int r : roots) bfs.push(r);
    while (!bfs.empty()) {
        int v = bfs.front();
        bfs.pop();
        std::vector<std::pair<std::string, int>> kids;
        for (int w : adj[v])
            if (!seen[w] && !blocked_root_edges[w]) kids.push_back({ahu(adj, w, v, blocked_root_edges), w});
        std::sort(kids.begin(), kids.end());
        for (auto& [key, w] : kids) {
            seen[w] = 1;
            lab.parent[w] = v;
            lab.order.push_back(w);
            bfs.push(w);
        }
    }
    return lab;
}

struct TreeCanon {
    std::string key;
    int root;
};

TreeCanon tree_canon(const Adj& adj) {
    std::vector<char> none(adj.size(), 0);
    auto c = strip_leaves(adj, true);
    if (c.size() == 1) return {ahu(adj, c[0], -1, none), c[0]};
    std::string a = ahu(adj, c[0], c[1], none), b = ahu(adj, c[1], c[0], none);
    int root = ahu(adj, c[0], -1, none) <= ahu(adj, c[1], -1, none) ? c[0] : c[1];
    return {"[" + std::min(a, b) + std::max(a, b) + "]", root};
}

Quiver tree_quiver(const Adj& adj, std::string name) {
    const int n = static_cast<int>(adj.size());
    TreeCanon canon = tree_canon(adj);
    Labeling lab = bfs_label(adj, {canon.root}, std::vector<char>(n, 0));
    std::vector<int> label(n);
    for (int k = 0; k < n; ++k) label[lab.order[k]] = k;
    std::vector<Arrow> arrows;
    for (int k = 1; k < n; ++k) arrows.push_back({label[lab.parent[lab.order[k]]], k});
    return Quiver(n, std::move(arrows), std::move(name));
}

struct CycleCanon {
    std::string key;
    std::vector<int> cycle;  // cycle vertices in canonical order
};

CycleCanon cycle_canon(const Adj& adj) {
    const int n = static_cast<int>(adj.size());
    auto core = strip_leaves(adj, false);
    std::vector<char> on_cycle(n, 0);
    for (int v : core) on_cycle[v] = 1;
    // Walk the cycle.
    std::vector<int> walk{core.front()};
    int prev = -1;
    while (true) {
        int v = walk.back(), next = -1;
        for (int w : adj[v])
            if (on_cycle[w] && w != prev) {
                next = w;
                break;
            }
        if (next == walk.front()) break;
        prev = v;
        walk.push_back(next);
    }
    const int k = static_cast<int>(walk.size());
    std::vector<std::string> hang(k);
    for (int i = 0; i < k; ++i) hang[i] = ahu(adj, walk[i], -1, on_cycle);

    CycleCanon best;
    for (int dir = 0; dir < 2; ++dir)
        for (int s = 0; s < k; ++s) {
            std::vector<int> cyc;
            std::string key;
            for (int i = 0; i < k; ++i) {
                int idx = dir == 0 ? (s + i) % k : (s - i + k) % k;
                cyc.push_back(walk[idx]);
                key += hang[idx] + "|";
            }
            if (best.cycle.empty() || key < best.key) best = {key, cyc};
        }
    best.key = "C" + std::to_string(k) + ":" + best.key;
    return best;
}

Quiver unicyclic_quiver(const Adj& adj, std::string name) {
    const int n = static_cast<int>(adj.size());
    CycleCanon canon = cycle_canon(adj);
    std::vector<char> on_cycle(n, 0);
    for (int v : canon.cycle) on_cycle[v] = 1;
    Labeling lab = bfs_label(adj, canon.cycle, on_cycle);
    std::vector<int> label(n);
    for (int i = 0; i < n; ++i) label[lab.order[i]] = i;
    const int k = static_cast<int>(canon.cycle.size());
    std::vector<Arrow> arrows;
    for (int i = 0; i + 1 < k; ++i) arrows.push_back({i, i + 1});
    arrows.push_back({0, k - 1});
    for (int i = k; i < n; ++i) arrows.push_back({label[lab.parent[lab.order[i]]], i});
    return Quiver(n, std::move(arrows), std::move(name));
}

std::map<std::string, Adj> trees_by_key(int n) {
    std::map<std::string, Adj> cur{{"()", Adj(1)}};
    for (int size = 2; size <= n; ++size) {
        std::map<std::string, Adj> next;
        for (const auto& [key, adj] : cur)
            for (int v = 0; v < size - 1; ++v) {
                Adj bigger = adj;
                bigger.emplace_back();
                bigger[v].push_back(size - 1);
                bigger[size - 1].push_back(v);
                next.emplace(tree_canon(bigger).key, std::move(bigger));
            }
        cur = std::move(next);
    }
    return cur;
}

}  // namespace

std::string canonical_key(const Quiver& q) {
    if (!q.is_connected()) throw InputError("canonical_key needs a connected quiver");
    Adj adj = adjacency(q);
    if (q.is_tree()) return tree_canon(adj).key;
    if (static_cast<int>(q.arrows().size()) == q.n()) return cycle_canon(adj).key;
    throw InputError("canonical_key supports trees and unicyclic graphs only");
}

std::vector<Quiver> unlabeled_trees(int n) {
    if (n < 1) throw InputError("trees need at least one vertex");
    std::vector<Quiver> out;
    int idx = 0;
    for (const auto& [key, adj] : trees_by_key(n))
        out.push_back(tree_quiver(adj, "tree" + std::to_string(n) + "." + std::to_string(++idx)));
    return out;
}

std::vector<Quiver> unicyclic_graphs(int n) {
    if (n < 3) throw InputError("unicyclic graphs need at least three vertices");
    std::map<std::string, Adj> found;
    for (const auto& [key, adj] : trees_by_key(n))
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                if (std::find(adj[u].begin(), adj[u].end(), v) != adj[u].end()) continue;
                Adj g = adj;
                g[u].push_back(v);
                g[v].push_back(u);
                found.emplace(cycle_canon(g).key, std::move(g));
            }
    std::vector<Quiver> out;
    int idx = 0;
    for (const auto& [key, adj] : found)
        out.push_back(unicyclic_quiver(adj, "cyc" + std::to_string(n) + "." + std::to_string(++idx)));
    return out;
}

namespace {

std::vector<Quiver> orientations_over(const Quiver& q, const std::vector<int>& arrow_ids) {
    if (arrow_ids.size() > 24) throw BudgetExceeded("too many arrows to enumerate orientations");
    std::vector<Quiver> out;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << arrow_ids.size()); ++m) {
        std::uint64_t mask = 0;
        for (std::size_t b = 0; b < arrow_ids.size(); ++b)
            if (m >> b & 1) mask |= std::uint64_t{1} << arrow_ids[b];
        try {
            Quiver r = q.reoriented(mask);
            out.push_back(r.renamed(q.name() + "/o" + std::to_string(mask)));
        } catch (const QuiverError&) {
        }
    }
    return out;
}

}  // namespace

std::vector<Quiver> acyclic_orientations(const Quiver& q) {
    std::vector<int> ids(q.arrows().size());
    for (std::size_t k = 0; k < ids.size(); ++k) ids[k] = static_cast<int>(k);
    return orientations_over(q, ids);
}

std::vector<Quiver> cycle_orientations(const Quiver& q) {
    auto core = strip_leaves(adjacency(q), false);
    std::vector<char> on_cycle(q.n(), 0);
    for (int v : core) on_cycle[v] = 1;
    std::vector<int> ids;
    for (std::size_t k = 0; k < q.arrows().size(); ++k)
        if (on_cycle[q.arrows()[k].source] && on_cycle[q.arrows()[k].target]) ids.push_back(static_cast<int>(k));
    return orientations_over(q, ids);
}

// ---------------------------------------------------------------------------

CorpusReport corpus_verify(int n_max, OrientationMode mode, const CensusConfig& cfg) {
    if (n_max < 1) throw InputError("corpus size must be >= 1");
    if (n_max > kCorpusSizeBudget)
        throw BudgetExceeded("corpus size " + std::to_string(n_max) + " exceeds the budget of " +
                             std::to_string(kCorpusSizeBudget));
    CorpusReport out;
    out.n_max = n_max;
    out.mode = mode;

    struct Job {
        Quiver quiver;
        int group;
    };
    std::vector<Job> jobs;
    int group = 0;
    for (int n = 1; n <= n_max; ++n) {
        CorpusSizeStats& st = out.by_size[n];
        for (const Quiver& tree : unlabeled_trees(n)) {
            ++st.trees;
            if (!is_representation_finite(tree)) ++st.rep_infinite_trees;
            if (mode == OrientationMode::all)
                for (Quiver& o : acyclic_orientations(tree)) jobs.push_back({std::move(o), group});
            else
                jobs.push_back({tree, group});
            ++group;
        }
        if (n >= 3)
            for (const Quiver& g : unicyclic_graphs(n)) {
                ++st.unicyclic_graphs;
                for (Quiver& o : cycle_orientations(g)) jobs.push_back({std::move(o), group});
                ++group;
            }
    }

    CensusConfig inner = cfg;
    if (cfg.exec == Exec::parallel) inner.exec = Exec::serial;  // parallel over quivers instead
    out.reports.resize(jobs.size());
    detail::for_each_index(static_cast<long>(jobs.size()), cfg.exec,
                           [&](long k) { out.reports[k] = verify_theorem(jobs[k].quiver, inner); });

    std::map<int, std::vector<int>> e_table_of_group;
    for (std::size_t k = 0; k < jobs.size(); ++k) {
        const CensusReport& r = out.reports[k];
        ++out.by_size[r.n].quivers;
        auto fail = [&](const std::string& what) { out.failures.push_back(r.name + " [" + r.quiver_text + "]: " + what); };
        if (!r.verdicts.equivalent()) fail("conditions (i), (ii), (iii) disagree");
        if (!r.case_agrees()) fail("t_Q disagrees with the case analysis (" + r.case_label + ")");
        if (!r.engines_agree) fail("fast-path e(t) disagrees with the oracle");
        if (!r.audit_ok) fail("audit recount or extended scan failed");
        if (!r.rows.empty() && r.rows[0].e.total() != r.n) fail("e(1) != n");
        if (r.rows.size() >= 2 && r.rows[1].e.total() != r.arrows) fail("e(2) != number of arrows");

        // Rows stop at t_Q, which is 2 on cycles, so only the
        // orientation-invariant part of a cyclic e-table is compared.
        std::vector<int> table;
        for (const LengthRow& row : r.rows) {
            table.push_back(row.e.thin);
            table.push_back(row.e.nonthin);
        }
        auto [it, fresh] = e_table_of_group.emplace(jobs[k].group, table);
        if (!fresh && it->second != table) ++out.orientation_mismatches;
    }
    return out;
}

}  // namespace qrep
