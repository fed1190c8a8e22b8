#include <algorithm>
#include <limits>
#include <queue>

#include "qrep/errors.hpp"
#include "qrep/quiver.hpp"

namespace qrep {

std::string Diagram::str() const {
    const char* s = series == Series::A ? "A" : series == Series::D ? "D" : "E";
    return (euclidean ? "t" : "") + std::string(s) + std::to_string(rank);
}

std::string GraphClass::str() const {
    switch (kind) {
    case DiagramKind::Dynkin:
        return "Dynkin " + type.str();
    case DiagramKind::Euclidean:
        return "Euclidean " + type.str();
    case DiagramKind::Beyond:
        break;
    }
    std::string w;
    for (Vertex v : witness) w += (w.empty() ? "" : ",") + std::to_string(v);
    return "beyond Euclidean, " + type.str() + " witness {" + w + "}";
}

namespace {

std::vector<int> bfs_dist(const Quiver& q, Vertex src) {
    std::vector<int> dist(q.n(), -1);
    std::queue<Vertex> bfs;
    dist[src] = 0;
    bfs.push(src);
    while (!bfs.empty()) {
        Vertex v = bfs.front();
        bfs.pop();
        for (Vertex w : q.neighbors(v))
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                bfs.push(w);
            }
    }
    return dist;
}

// Vertices on the tree path from a to b, a first.
std::vector<Vertex> tree_path(const Quiver& q, Vertex a, Vertex b) {
    std::vector<int> dist = bfs_dist(q, b);
    std::vector<Vertex> p{a};
    while (p.back() != b)
        for (Vertex w : q.neighbors(p.back()))
            if (dist[w] == dist[p.back()] - 1) {
                p.push_back(w);
                break;
            }
    return p;
}

// Walks outward from the center along one arm; the first vertex is the
// neighbor of the center.
std::vector<Vertex> arm_vertices(const Quiver& q, Vertex center, Vertex first) {
    std::vector<Vertex> arm{first};
    Vertex prev = center;
    while (q.degree(arm.back()) == 2) {
        const auto& nb = q.neighbors(arm.back());
        Vertex next = nb[0] == prev ? nb[1] : nb[0];
        prev = arm.back();
        arm.push_back(next);
    }
    return arm;
}

// Shortest cycle; chordless, so it induces a tA subgraph.
std::vector<Vertex> shortest_cycle(const Quiver& q) {
    std::vector<Vertex> best;
    for (Vertex s = 0; s < q.n(); ++s) {
        std::vector<int> dist(q.n(), -1), parent(q.n(), -1);
        std::queue<Vertex> bfs;
        dist[s] = 0;
        bfs.push(s);
        while (!bfs.empty()) {
            Vertex v = bfs.front();
            bfs.pop();
            for (Vertex w : q.neighbors(v)) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    bfs.push(w);
                } else if (w != parent[v]) {
                    // v and w close a cycle through their BFS ancestors.
                    std::vector<Vertex> a{v}, b{w};
                    while (a.back() != b.back()) {
                        if (dist[a.back()] >= dist[b.back()])
                            a.push_back(parent[a.back()]);
                        else
                            b.push_back(parent[b.back()]);
                    }
                    b.pop_back();
                    a.insert(a.end(), b.begin(), b.end());
                    std::sort(a.begin(), a.end());
                    bool distinct = std::adjacent_find(a.begin(), a.end()) == a.end();
                    if (distinct && (best.empty() || a.size() < best.size() || (a.size() == best.size() && a < best)))
                        best = a;
                }
            }
        }
    }
    return best;
}

GraphClass beyond(Diagram type, std::vector<Vertex> witness) {
    std::sort(witness.begin(), witness.end());
    return {DiagramKind::Beyond, type, std::move(witness)};
}

std::vector<Vertex> all_vertices(const Quiver& q) {
    std::vector<Vertex> v(q.n());
    for (Vertex i = 0; i < q.n(); ++i) v[i] = i;
    return v;
}

GraphClass classify_tree(const Quiver& q) {
    const int n = q.n();
    std::vector<Vertex> branch;
    for (Vertex v = 0; v < n; ++v)
        if (q.degree(v) >= 3) branch.push_back(v);

    if (branch.empty()) return {DiagramKind::Dynkin, {Series::A, n, false}, {}};

    for (Vertex v : branch)
        if (q.degree(v) >= 4) {
            if (n == 5) return {DiagramKind::Euclidean, {Series::D, 4, true}, all_vertices(q)};
            const auto& nb = q.neighbors(v);
            return beyond({Series::D, 4, true}, {v, nb[0], nb[1], nb[2], nb[3]});
        }

    if (branch.size() >= 2) {
        // Closest pair of branch vertices; the path between them has only
        // degree-2 interior vertices, so path + two outside neighbors at
        // each end is a tD subgraph.
        Vertex ba = -1, bb = -1;
        int bestd = std::numeric_limits<int>::max();
        for (std::size_t i = 0; i < branch.size(); ++i) {
            auto dist = bfs_dist(q, branch[i]);
            for (std::size_t j = i + 1; j < branch.size(); ++j)
                if (dist[branch[j]] < bestd) {
                    bestd = dist[branch[j]];
                    ba = branch[i];
                    bb = branch[j];
                }
        }
        std::vector<Vertex> p = tree_path(q, ba, bb);
        std::vector<Vertex> witness = p;
        auto add_ends = [&](Vertex end, Vertex inner) {
            int added = 0;
            for (Vertex w : q.neighbors(end))
                if (w != inner && added < 2) {
                    witness.push_back(w);
                    ++added;
                }
        };
        add_ends(ba, p[1]);
        add_ends(bb, p[p.size() - 2]);
        Diagram type{Series::D, static_cast<int>(witness.size()) - 1, true};
        if (static_cast<int>(witness.size()) == n) return {DiagramKind::Euclidean, type, all_vertices(q)};
        return beyond(type, witness);
    }

    // One branch vertex of degree 3: T_pqr.
    Vertex c = branch.front();
    std::vector<std::vector<Vertex>> arms;
    for (Vertex w : q.neighbors(c)) arms.push_back(arm_vertices(q, c, w));
    std::stable_sort(arms.begin(), arms.end(), [](const auto& x, const auto& y) { return x.size() > y.size(); });
    const int p = static_cast<int>(arms[0].size()) + 1, qq = static_cast<int>(arms[1].size()) + 1,
              r = static_cast<int>(arms[2].size()) + 1;

    if (r == 2 && qq == 2) return {DiagramKind::Dynkin, {Series::D, n, false}, {}};
    if (r == 2 && qq == 3 && p <= 5) return {DiagramKind::Dynkin, {Series::E, n, false}, {}};

    auto take = [&](int a, int b, int cc, int rank) {
        std::vector<Vertex> w{c};
        w.insert(w.end(), arms[0].begin(), arms[0].begin() + a);
        w.insert(w.end(), arms[1].begin(), arms[1].begin() + b);
        w.insert(w.end(), arms[2].begin(), arms[2].begin() + cc);
        Diagram type{Series::E, rank, true};
        if (static_cast<int>(w.size()) == n) return GraphClass{DiagramKind::Euclidean, type, all_vertices(q)};
        return beyond(type, w);
    };
    if (r >= 3) return take(2, 2, 2, 6);
    if (qq >= 4) return take(3, 3, 1, 7);
    return take(5, 2, 1, 8);  // r == 2, q == 3, p >= 6
}

}  // namespace

GraphClass classify_graph(const Quiver& q) {
    if (!q.is_connected()) throw InputError("classification needs a connected quiver");
    const int n = q.n();
    if (static_cast<int>(q.arrows().size()) == n - 1) return classify_tree(q);

    bool cycle = static_cast<int>(q.arrows().size()) == n;
    for (Vertex v = 0; v < n && cycle; ++v) cycle = q.degree(v) == 2;
    if (cycle) return {DiagramKind::Euclidean, {Series::A, n - 1, true}, all_vertices(q)};
    auto c = shortest_cycle(q);
    return beyond({Series::A, static_cast<int>(c.size()) - 1, true}, c);
}

bool is_representation_finite(const Quiver& q) { return classify_graph(q).kind == DiagramKind::Dynkin; }

std::optional<ArmProfile> arm_profile(const Quiver& q) {
    if (!q.is_tree()) throw InputError("arm profile needs a tree");
    std::optional<Vertex> center;
    for (Vertex v = 0; v < q.n(); ++v)
        if (q.degree(v) >= 3) {
            if (center) return std::nullopt;
            center = v;
        }
    if (!center) return std::nullopt;
    ArmProfile prof{*center, {}};
    for (Vertex w : q.neighbors(*center))
        prof.arms.push_back(static_cast<int>(arm_vertices(q, *center, w).size()) + 1);
    std::sort(prof.arms.rbegin(), prof.arms.rend());
    return prof;
}

}  // namespace qrep
