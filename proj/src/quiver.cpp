#include "qrep/quiver.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <utility>

#include "qrep/errors.hpp"

namespace qrep {

DimVector DimVector::unit(std::size_t n, Vertex i) {
    DimVector d(n);
    d[static_cast<std::size_t>(i)] = 1;
    return d;
}

int DimVector::height() const noexcept { return std::accumulate(c_.begin(), c_.end(), 0); }

bool DimVector::is_zero() const noexcept {
    return std::all_of(c_.begin(), c_.end(), [](int x) { return x == 0; });
}

bool DimVector::is_nonnegative() const noexcept {
    return std::all_of(c_.begin(), c_.end(), [](int x) { return x >= 0; });
}

bool DimVector::is_thin() const noexcept {
    return std::all_of(c_.begin(), c_.end(), [](int x) { return x <= 1; });
}

std::vector<Vertex> DimVector::support() const {
    std::vector<Vertex> s;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] > 0) s.push_back(static_cast<Vertex>(i));
    return s;
}

std::string DimVector::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(c_[i]);
    }
    return s + ")";
}

// ---------------------------------------------------------------------------

Quiver::Quiver(int n, std::vector<Arrow> arrows, std::string name)
    : n_(n), arrows_(std::move(arrows)), name_(std::move(name)), adj_(static_cast<std::size_t>(std::max(n, 0))) {
    using K = QuiverError::Kind;
    if (n < 1) throw QuiverError(K::BadVertex, "a quiver needs at least one vertex");
    std::set<std::pair<Vertex, Vertex>> edges;
    for (const Arrow& a : arrows_) {
        if (a.source < 0 || a.source >= n || a.target < 0 || a.target >= n)
            throw QuiverError(K::BadVertex, "arrow " + std::to_string(a.source) + "->" + std::to_string(a.target) +
                                                " refers to a vertex outside 0.." + std::to_string(n - 1));
        if (a.source == a.target) throw QuiverError(K::Loop, "loop at vertex " + std::to_string(a.source));
        auto key = std::minmax(a.source, a.target);
        if (!edges.insert(key).second)
            throw QuiverError(K::MultipleArrow, "multiple arrows between vertices " + std::to_string(key.first) +
                                                    " and " + std::to_string(key.second));
        adj_[a.source].push_back(a.target);
        adj_[a.target].push_back(a.source);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());

    // Kahn's algorithm; leftover vertices sit on an oriented cycle.
    std::vector<int> indeg(n, 0);
    std::vector<std::vector<Vertex>> out(n);
    for (const Arrow& a : arrows_) {
        ++indeg[a.target];
        out[a.source].push_back(a.target);
    }
    std::vector<Vertex> stack;
    for (Vertex v = 0; v < n; ++v)
        if (!indeg[v]) stack.push_back(v);
    int seen = 0;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        ++seen;
        for (Vertex w : out[v])
            if (--indeg[w] == 0) stack.push_back(w);
    }
    if (seen != n) throw QuiverError(K::DirectedCycle, "the arrows contain an oriented cycle");
}

Quiver Quiver::renamed(std::string name) const {
    Quiver q = *this;
    q.name_ = std::move(name);
    return q;
}

bool Quiver::adjacent(Vertex u, Vertex v) const {
    const auto& nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

bool Quiver::is_connected() const {
    std::vector<char> seen(n_, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : adj_[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == n_;
}

bool Quiver::is_tree() const { return static_cast<int>(arrows_.size()) == n_ - 1 && is_connected(); }

Quiver Quiver::reoriented(std::uint64_t mask) const {
    std::vector<Arrow> arrows = arrows_;
    for (std::size_t k = 0; k < arrows.size() && k < 64; ++k)
        if (mask >> k & 1) std::swap(arrows[k].source, arrows[k].target);
    return Quiver(n_, std::move(arrows), name_);
}

std::string Quiver::to_text() const {
    std::string s = std::to_string(n_) + ";";
    for (const Arrow& a : arrows_) s += " " + std::to_string(a.source) + "->" + std::to_string(a.target);
    return s;
}

// ---------------------------------------------------------------------------

namespace {

bool parse_int(std::string_view s, int& out) {
    if (s.empty()) return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Quiver parse_quiver(std::string_view text) {
    using K = QuiverError::Kind;
    // '#' starts a comment running to the end of the line.
    std::string clean;
    bool comment = false;
    for (char c : text) {
        if (c == '#') comment = true;
        if (c == '\n') comment = false;
        if (!comment) clean += c;
    }
    std::string_view body = clean;
    auto semi = body.find(';');
    if (semi == std::string_view::npos) throw QuiverError(K::Syntax, "expected '<n>; <arrows>'");
    int n = 0;
    if (!parse_int(trim(body.substr(0, semi)), n) || n < 1)
        throw QuiverError(K::Syntax, "vertex count must be a positive integer");

    std::vector<Arrow> arrows;
    std::istringstream in{std::string(body.substr(semi + 1))};
    std::string tok;
    while (in >> tok) {
        auto arrow = tok.find("->");
        Arrow a;
        if (arrow == std::string::npos || !parse_int(std::string_view(tok).substr(0, arrow), a.source) ||
            !parse_int(std::string_view(tok).substr(arrow + 2), a.target))
            throw QuiverError(K::Syntax, "malformed arrow '" + tok + "', expected i->j");
        arrows.push_back(a);
    }
    return Quiver(n, std::move(arrows));
}

// ---------------------------------------------------------------------------

namespace {

// Center 0, then each arm's vertices outward; arm lengths count the
// vertices besides the center.
Quiver star_like(const std::vector<int>& arm_tails, std::string name) {
    int n = 1 + std::accumulate(arm_tails.begin(), arm_tails.end(), 0);
    std::vector<Arrow> arrows;
    Vertex next = 1;
    for (int len : arm_tails) {
        Vertex prev = 0;
        for (int k = 0; k < len; ++k) {
            arrows.push_back({prev, next});
            prev = next++;
        }
    }
    return Quiver(n, std::move(arrows), std::move(name));
}

Quiver path(int n, std::string name) {
    std::vector<Arrow> arrows;
    for (Vertex i = 0; i + 1 < n; ++i) arrows.push_back({i, i + 1});
    return Quiver(n, std::move(arrows), std::move(name));
}

Quiver t_shape(int p, int q, int r, std::string name) { return star_like({p - 1, q - 1, r - 1}, std::move(name)); }

void need(bool ok, const std::string& msg) {
    if (!ok) throw InputError(msg);
}

std::string t_name(int p, int q, int r) {
    return "T" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r);
}

}  // namespace

Quiver preset(std::string_view family, const std::vector<int>& params) {
    auto one = [&](const char* what) {
        need(params.size() == 1, std::string(what) + " takes one parameter");
        return params[0];
    };
    std::string fam(family);
    if (fam == "A") {
        int n = one("A");
        need(n >= 1, "A_n needs n >= 1");
        return path(n, "A" + std::to_string(n));
    }
    if (fam == "D") {
        int n = one("D");
        need(n >= 4, "D_n needs n >= 4");
        return t_shape(n - 2, 2, 2, "D" + std::to_string(n));
    }
    if (fam == "E") {
        int n = one("E");
        need(n >= 6 && n <= 8, "E_n needs n in 6..8");
        return t_shape(n - 3, 3, 2, "E" + std::to_string(n));
    }
    if (fam == "tA") {
        int m = one("tA");
        need(m >= 2, "tA_m needs m >= 2 (smaller cycles need loops or double arrows)");
        std::vector<Arrow> arrows;
        for (Vertex i = 0; i < m; ++i) arrows.push_back({i, i + 1});
        arrows.push_back({0, m});
        return Quiver(m + 1, std::move(arrows), "tA" + std::to_string(m));
    }
    if (fam == "tD") {
        int m = one("tD");
        need(m >= 4, "tD_m needs m >= 4");
        std::string name = "tD" + std::to_string(m);
        if (m == 4) return star_like({1, 1, 1, 1}, name);
        // Path 0..m-4, two leaves at each end.
        int inner = m - 3;
        std::vector<Arrow> arrows;
        for (Vertex i = 0; i + 1 < inner; ++i) arrows.push_back({i, i + 1});
        arrows.push_back({0, inner});
        arrows.push_back({0, inner + 1});
        arrows.push_back({inner - 1, inner + 2});
        arrows.push_back({inner - 1, inner + 3});
        return Quiver(m + 1, std::move(arrows), name);
    }
    if (fam == "tE") {
        int m = one("tE");
        if (m == 6) return t_shape(3, 3, 3, "tE6");
        if (m == 7) return t_shape(4, 4, 2, "tE7");
        if (m == 8) return t_shape(6, 3, 2, "tE8");
        throw InputError("tE_m needs m in 6..8");
    }
    if (fam == "T") {
        need(params.size() == 3, "T takes three parameters p,q,r");
        int p = params[0], q = params[1], r = params[2];
        need(p >= q && q >= r && r >= 2, "T_pqr needs p >= q >= r >= 2");
        return t_shape(p, q, r, t_name(p, q, r));
    }
    if (fam == "S") {
        int k = one("S");
        need(k >= 1, "a star needs at least one leaf");
        return star_like(std::vector<int>(static_cast<std::size_t>(k), 1), "S" + std::to_string(k));
    }
    throw InputError("unknown preset family '" + fam + "'");
}

Quiver preset(std::string_view name) {
    std::string_view family;
    for (std::string_view f : {"tA", "tD", "tE", "A", "D", "E", "T", "S"})
        if (name.substr(0, f.size()) == f) {
            family = f;
            break;
        }
    if (family.empty()) throw InputError("unknown preset '" + std::string(name) + "'");
    std::vector<int> params;
    std::string_view rest = name.substr(family.size());
    while (true) {
        auto comma = rest.find(',');
        int v = 0;
        if (!parse_int(rest.substr(0, comma), v)) throw InputError("unknown preset '" + std::string(name) + "'");
        params.push_back(v);
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    return preset(family, params);
}

// ---------------------------------------------------------------------------

bool induces_connected(const Quiver& q, const std::vector<Vertex>& vertices) {
    if (vertices.empty()) return false;
    std::vector<char> in(q.n(), 0), seen(q.n(), 0);
    for (Vertex v : vertices) in[v] = 1;
    std::vector<Vertex> stack{vertices.front()};
    seen[vertices.front()] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : q.neighbors(v))
            if (in[w] && !seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == vertices.size();
}

int induced_edge_count(const Quiver& q, const std::vector<Vertex>& vertices) {
    std::vector<char> in(q.n(), 0);
    for (Vertex v : vertices) in[v] = 1;
    int e = 0;
    for (const Arrow& a : q.arrows()) e += in[a.source] && in[a.target];
    return e;
}

std::vector<std::vector<Vertex>> connected_subquivers(const Quiver& q, int t) {
    if (t < 1 || t > q.n())
        throw InputError("subquiver size " + std::to_string(t) + " outside 1.." + std::to_string(q.n()));
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> comb(static_cast<std::size_t>(t));
    std::iota(comb.begin(), comb.end(), 0);
    const int n = q.n();
    while (true) {
        if (induces_connected(q, comb)) out.push_back(comb);
        int i = t - 1;
        while (i >= 0 && comb[i] == n - t + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < t; ++j) comb[j] = comb[j - 1] + 1;
    }
    return out;
}

Subquiver induced_subquiver(const Quiver& q, const std::vector<Vertex>& vertices) {
    std::vector<Vertex> sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InputError("vertex subset has repeated vertices");
    std::vector<Vertex> to_child(q.n(), -1);
    for (std::size_t k = 0; k < sorted.size(); ++k) {
        Vertex v = sorted[k];
        if (v < 0 || v >= q.n()) throw InputError("invalid vertex " + std::to_string(v));
        to_child[v] = static_cast<Vertex>(k);
    }
    std::vector<Arrow> arrows;
    for (const Arrow& a : q.arrows())
        if (to_child[a.source] >= 0 && to_child[a.target] >= 0) arrows.push_back({to_child[a.source], to_child[a.target]});
    return {Quiver(static_cast<int>(sorted.size()), std::move(arrows)), std::move(sorted)};
}

Subquiver delete_vertex(const Quiver& q, Vertex v) {
    if (v < 0 || v >= q.n()) throw InputError("invalid vertex " + std::to_string(v));
    if (q.n() == 1) throw InputError("cannot delete the only vertex");
    std::vector<Vertex> keep;
    for (Vertex w = 0; w < q.n(); ++w)
        if (w != v) keep.push_back(w);
    return induced_subquiver(q, keep);
}

// ---------------------------------------------------------------------------

namespace {
void check_dims(const Quiver& q, const DimVector& d) {
    if (static_cast<int>(d.size()) != q.n())
        throw InputError("dimension vector " + d.str() + " has " + std::to_string(d.size()) + " entries, quiver has " +
                         std::to_string(q.n()) + " vertices");
}
}  // namespace

int euler_form(const Quiver& q, const DimVector& d, const DimVector& e) {
    check_dims(q, d);
    check_dims(q, e);
    int s = 0;
    for (int i = 0; i < q.n(); ++i) s += d[i] * e[i];
    for (const Arrow& a : q.arrows()) s -= d[a.source] * e[a.target];
    return s;
}

int tits_form(const Quiver& q, const DimVector& d) { return euler_form(q, d, d); }

int symmetric_form(const Quiver& q, const DimVector& d, const DimVector& e) {
    return euler_form(q, d, e) + euler_form(q, e, d);
}

}  // namespace qrep
