#include "qrep/roots.hpp"

#include <algorithm>
#include <set>

#include "qrep/errors.hpp"

namespace qrep {

namespace {

// (d, e_i) for every vertex i.
std::vector<int> pairings(const Quiver& q, const DimVector& d) {
    std::vector<int> b(q.n());
    for (Vertex i = 0; i < q.n(); ++i) {
        int s = 2 * d[i];
        for (Vertex j : q.neighbors(i)) s -= d[j];
        b[i] = s;
    }
    return b;
}

bool is_unit(const DimVector& d) {
    int ones = 0;
    for (int x : d.coords()) {
        if (x != 0 && x != 1) return false;
        ones += x;
    }
    return ones == 1;
}

bool height_order(const DimVector& a, const DimVector& b) {
    int ha = a.height(), hb = b.height();
    return ha != hb ? ha < hb : a < b;
}

// Depth-first scan over coordinates, carrying the running height and the
// running value of the Tits form so each leaf costs O(degree).
class RootScan {
public:
    RootScan(const Quiver& q, int max_height) : q_(q), h_(max_height), lower_(q.n()) {
        for (Vertex k = 0; k < q.n(); ++k)
            for (Vertex j : q.neighbors(k))
                if (j < k) lower_[k].push_back(j);
    }

    void run(std::vector<int>& d, int k, int height, int form, std::vector<DimVector>& out) const {
        const int n = q_.n();
        if (k == n) {
            if (height >= 1 && form <= 1) consider(d, out);
            return;
        }
        for (int x = 0; height + x <= h_; ++x) {
            int delta = x * x;
            for (Vertex j : lower_[k]) delta -= d[j] * x;
            d[k] = x;
            run(d, k + 1, height + x, form + delta, out);
        }
        d[k] = 0;
    }

    // Prefix of the first `depth` coordinates with its height and form.
    struct Prefix {
        std::vector<int> d;
        int height;
        int form;
    };

    std::vector<Prefix> prefixes(int depth) const {
        std::vector<Prefix> out;
        std::vector<int> d(q_.n(), 0);
        collect(d, 0, depth, 0, 0, out);
        return out;
    }

private:
    void collect(std::vector<int>& d, int k, int depth, int height, int form, std::vector<Prefix>& out) const {
        if (k == depth) {
            out.push_back({d, height, form});
            return;
        }
        for (int x = 0; height + x <= h_; ++x) {
            int delta = x * x;
            for (Vertex j : lower_[k]) delta -= d[j] * x;
            d[k] = x;
            collect(d, k + 1, depth, height + x, form + delta, out);
        }
        d[k] = 0;
    }

    void consider(const std::vector<int>& d, std::vector<DimVector>& out) const {
        DimVector v(d);
        if (!induces_connected(q_, v.support())) return;
        if (classify_vector(q_, v).verdict != RootVerdict::NotRoot) out.push_back(std::move(v));
    }

    const Quiver& q_;
    int h_;
    std::vector<std::vector<Vertex>> lower_;
};

}  // namespace

DimVector reflect(const Quiver& q, const DimVector& d, Vertex i) {
    if (i < 0 || i >= q.n()) throw InputError("invalid vertex " + std::to_string(i));
    if (static_cast<int>(d.size()) != q.n()) throw InputError("dimension vector size mismatch");
    int b = 2 * d[i];
    for (Vertex j : q.neighbors(i)) b -= d[j];
    DimVector r = d;
    r[i] -= b;
    return r;
}

RootClassification classify_vector(const Quiver& q, const DimVector& d) {
    if (static_cast<int>(d.size()) != q.n()) throw InputError("dimension vector size mismatch");
    if (!d.is_nonnegative() || d.is_zero()) throw InputError("classify_vector needs a nonzero nonnegative vector");
    RootClassification out;
    DimVector cur = d;
    while (true) {
        if (is_unit(cur)) {
            out.verdict = RootVerdict::PositiveRealRoot;
            return out;
        }
        if (!induces_connected(q, cur.support())) return out;
        auto b = pairings(q, cur);
        Vertex best = -1;
        for (Vertex i = 0; i < q.n(); ++i)
            if (b[i] > 0 && (best < 0 || b[i] > b[best])) best = i;
        if (best < 0) {
            out.verdict = RootVerdict::ImaginaryRoot;
            return out;
        }
        cur[best] -= b[best];
        out.trace.push_back(best);
        if (cur[best] < 0) return out;
    }
}

std::vector<DimVector> positive_roots_up_to_height(const Quiver& q, int max_height, Exec exec) {
    if (max_height < 1) throw InputError("height bound must be >= 1");
    RootScan scan(q, max_height);
    std::vector<DimVector> roots;
    if (exec == Exec::serial) {
        std::vector<int> d(q.n(), 0);
        scan.run(d, 0, 0, 0, roots);
    } else {
        auto prefixes = scan.prefixes(std::min(q.n(), 2));
        std::vector<std::vector<DimVector>> parts(prefixes.size());
        const long count = static_cast<long>(prefixes.size());
#pragma omp parallel for schedule(dynamic)
        for (long k = 0; k < count; ++k) {
            auto& pre = prefixes[k];
            std::vector<int> d = pre.d;
            scan.run(d, std::min(q.n(), 2), pre.height, pre.form, parts[k]);
        }
        for (auto& p : parts) roots.insert(roots.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
    }
    std::sort(roots.begin(), roots.end(), height_order);
    return roots;
}

std::vector<DimVector> reflection_closure(const Quiver& q, int max_height) {
    std::set<DimVector> seen;
    std::vector<DimVector> frontier;
    for (Vertex i = 0; i < q.n(); ++i) {
        frontier.push_back(DimVector::unit(q.n(), i));
        seen.insert(frontier.back());
    }
    while (!frontier.empty()) {
        std::vector<DimVector> next;
        for (const auto& r : frontier) {
            auto b = pairings(q, r);
            for (Vertex i = 0; i < q.n(); ++i) {
                if (b[i] >= 0 || r.height() - b[i] > max_height) continue;
                DimVector s = r;
                s[i] -= b[i];
                if (seen.insert(s).second) next.push_back(std::move(s));
            }
        }
        frontier = std::move(next);
    }
    std::vector<DimVector> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), height_order);
    return out;
}

HeightHistogram height_histogram(const std::vector<DimVector>& roots) {
    HeightHistogram h;
    for (const auto& r : roots) ++h[r.height()];
    return h;
}

KostantReport kostant_check(const Quiver& q, Exec exec) {
    if (!is_representation_finite(q)) throw InputError("kostant_check needs a Dynkin quiver");
    KostantReport rep;
    auto closure = reflection_closure(q, 4 * q.n() + 32);
    rep.closure_histogram = height_histogram(closure);
    rep.closure_total = static_cast<int>(closure.size());
    rep.highest_height = closure.back().height();

    // One past the highest root: the scan must come up empty there.
    auto scanned = positive_roots_up_to_height(q, rep.highest_height + 1, exec);
    rep.histogram = height_histogram(scanned);
    rep.total = static_cast<int>(scanned.size());
    rep.closure_agrees = scanned == closure;

    rep.bound_holds = true;
    for (auto [t, c] : rep.histogram)
        if (t >= 2) {
            rep.max_count_above_one = std::max(rep.max_count_above_one, c);
            if (c > q.n() - 1) rep.bound_holds = false;
        }
    return rep;
}

}  // namespace qrep
