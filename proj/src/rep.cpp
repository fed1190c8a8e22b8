#include "qrep/rep.hpp"

#include <stdexcept>

#include "qrep/errors.hpp"

namespace qrep {

Rep::Rep(std::shared_ptr<const Quiver> quiver, PrimeField field, DimVector dim, std::vector<Matrix> maps)
    : quiver_(std::move(quiver)), field_(field), dim_(std::move(dim)), maps_(std::move(maps)) {
    const Quiver& q = *quiver_;
    if (static_cast<int>(dim_.size()) != q.n() || !dim_.is_nonnegative())
        throw InputError("representation dimension vector " + dim_.str() + " does not fit the quiver");
    if (maps_.size() != q.arrows().size()) throw InputError("one matrix per arrow expected");
    for (std::size_t k = 0; k < maps_.size(); ++k) {
        const Arrow& a = q.arrows()[k];
        const Matrix& m = maps_[k];
        if (m.rows != dim_[a.target] || m.cols != dim_[a.source])
            throw InputError("matrix for arrow " + std::to_string(k) + " has the wrong shape");
        for (Elem x : m.a)
            if (x >= field_.order()) throw InputError("matrix entry outside F_" + std::to_string(field_.order()));
    }
}

Rep Rep::zero(std::shared_ptr<const Quiver> quiver, PrimeField field, DimVector dim) {
    std::vector<Matrix> maps;
    for (const Arrow& a : quiver->arrows()) maps.emplace_back(dim[a.target], dim[a.source]);
    return Rep(std::move(quiver), field, std::move(dim), std::move(maps));
}

Rep Rep::simple(std::shared_ptr<const Quiver> quiver, PrimeField field, Vertex i) {
    auto n = static_cast<std::size_t>(quiver->n());
    return zero(std::move(quiver), field, DimVector::unit(n, i));
}

Rep Rep::thin(std::shared_ptr<const Quiver> quiver, PrimeField field, const std::vector<Vertex>& vertices) {
    DimVector d(static_cast<std::size_t>(quiver->n()));
    for (Vertex v : vertices) d[v] = 1;
    std::vector<Matrix> maps;
    for (const Arrow& a : quiver->arrows()) {
        Matrix m(d[a.target], d[a.source]);
        if (d[a.source] && d[a.target]) m(0, 0) = 1;
        maps.push_back(std::move(m));
    }
    return Rep(std::move(quiver), field, std::move(d), std::move(maps));
}

std::vector<Elem> Rep::flatten() const {
    std::vector<Elem> out;
    for (const Matrix& m : maps_) out.insert(out.end(), m.a.begin(), m.a.end());
    return out;
}

Rep direct_sum(const Rep& m, const Rep& n) {
    if (!(m.quiver() == n.quiver()) || !(m.field() == n.field()))
        throw InputError("direct sum of representations of different quivers or fields");
    const Quiver& q = m.quiver();
    DimVector d(static_cast<std::size_t>(q.n()));
    for (int i = 0; i < q.n(); ++i) d[i] = m.dim()[i] + n.dim()[i];
    std::vector<Matrix> maps;
    for (std::size_t k = 0; k < q.arrows().size(); ++k) {
        const Matrix &x = m.maps()[k], &y = n.maps()[k];
        Matrix s(x.rows + y.rows, x.cols + y.cols);
        for (int r = 0; r < x.rows; ++r)
            for (int c = 0; c < x.cols; ++c) s(r, c) = x(r, c);
        for (int r = 0; r < y.rows; ++r)
            for (int c = 0; c < y.cols; ++c) s(x.rows + r, x.cols + c) = y(r, c);
        maps.push_back(std::move(s));
    }
    return Rep(m.quiver_ptr(), m.field(), std::move(d), std::move(maps));
}

// ---------------------------------------------------------------------------

namespace {

void check_compatible(const Rep& m, const Rep& n) {
    if (!(m.quiver() == n.quiver())) throw InputError("representations of different quivers");
    if (!(m.field() == n.field())) throw InputError("representations over different fields");
}

// Matrix of (f_i)_i -> (f_j M_a - N_a f_i)_a. Columns: entries of every
// f_i (N_i x M_i, row-major, vertices in order). Rows: entries of every
// arrow component (N_j x M_i, row-major, arrows in order).
Matrix commutator_system(const Rep& m, const Rep& n, std::vector<int>& offset) {
    const Quiver& q = m.quiver();
    const PrimeField& f = m.field();
    const DimVector &d = m.dim(), &e = n.dim();
    offset.assign(q.n() + 1, 0);
    for (int i = 0; i < q.n(); ++i) offset[i + 1] = offset[i] + e[i] * d[i];
    int rows = 0;
    for (const Arrow& a : q.arrows()) rows += e[a.target] * d[a.source];

    Matrix sys(rows, offset[q.n()]);
    int row = 0;
    for (std::size_t k = 0; k < q.arrows().size(); ++k) {
        const Arrow& a = q.arrows()[k];
        const Matrix &ma = m.maps()[k], &na = n.maps()[k];
        const int i = a.source, j = a.target;
        for (int r = 0; r < e[j]; ++r)
            for (int c = 0; c < d[i]; ++c, ++row) {
                // (f_j M_a)_{rc} = sum_s f_j[r][s] M_a[s][c]
                for (int s = 0; s < d[j]; ++s)
                    sys(row, offset[j] + r * d[j] + s) = f.add(sys(row, offset[j] + r * d[j] + s), ma(s, c));
                // -(N_a f_i)_{rc} = -sum_s N_a[r][s] f_i[s][c]
                for (int s = 0; s < e[i]; ++s)
                    sys(row, offset[i] + s * d[i] + c) = f.sub(sys(row, offset[i] + s * d[i] + c), na(r, s));
            }
    }
    return sys;
}

}  // namespace

HomSpace hom(const Rep& m, const Rep& n) {
    check_compatible(m, n);
    std::vector<int> offset;
    Matrix sys = commutator_system(m, n, offset);
    const Quiver& q = m.quiver();
    HomSpace out;
    for (const auto& v : nullspace(m.field(), std::move(sys))) {
        Morphism phi;
        for (int i = 0; i < q.n(); ++i) {
            Matrix fi(n.dim()[i], m.dim()[i]);
            std::copy(v.begin() + offset[i], v.begin() + offset[i + 1], fi.a.begin());
            phi.push_back(std::move(fi));
        }
        out.basis.push_back(std::move(phi));
    }
    return out;
}

int ext1_dim(const Rep& m, const Rep& n) {
    check_compatible(m, n);
    int e = hom(m, n).dim() - euler_form(m.quiver(), m.dim(), n.dim());
    if (e < 0) throw std::logic_error("negative Ext^1 dimension; Hom computation is inconsistent");
    return e;
}

int ext1_dim_cokernel(const Rep& m, const Rep& n) {
    check_compatible(m, n);
    std::vector<int> offset;
    Matrix sys = commutator_system(m, n, offset);
    return sys.rows - rank(m.field(), std::move(sys));
}

// ---------------------------------------------------------------------------

namespace {

bool is_identity(const Morphism& f) {
    for (const Matrix& m : f)
        if (!(m == Matrix::identity(m.rows))) return false;
    return true;
}

bool is_zero(const Morphism& f) {
    for (const Matrix& m : f)
        if (!m.is_zero()) return false;
    return true;
}

Morphism compose(const PrimeField& fld, const Morphism& f, const Morphism& g) {
    Morphism r;
    for (std::size_t i = 0; i < f.size(); ++i) r.push_back(multiply(fld, f[i], g[i]));
    return r;
}

bool is_nilpotent(const PrimeField& fld, const Morphism& f) {
    for (const Matrix& m : f) {
        Matrix p = m;
        for (int k = 1; k < m.rows && !p.is_zero(); ++k) p = multiply(fld, p, m);
        if (!p.is_zero()) return false;
    }
    return true;
}

bool is_invertible(const PrimeField& fld, const Morphism& f) {
    for (const Matrix& m : f)
        if (rank(fld, m) != m.rows) return false;
    return true;
}

Morphism combine(const PrimeField& fld, const std::vector<Morphism>& basis, const std::vector<Elem>& coef) {
    Morphism r;
    for (const Matrix& m : basis.front()) r.emplace_back(m.rows, m.cols);
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if (!coef[k]) continue;
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = add(fld, r[i], scale(fld, coef[k], basis[k][i]));
    }
    return r;
}

// An endomorphism neither nilpotent nor invertible splits M (Fitting).
bool fitting_splits(const PrimeField& fld, const std::vector<Morphism>& basis) {
    const std::size_t b = basis.size();
    std::vector<Elem> coef(b, 0);
    auto test = [&]() {
        Morphism f = combine(fld, basis, coef);
        return !is_nilpotent(fld, f) && !is_invertible(fld, f);
    };
    for (std::size_t i = 0; i < b; ++i) {
        coef.assign(b, 0);
        coef[i] = 1;
        if (test()) return true;
        for (std::size_t j = i + 1; j < b; ++j) {
            coef[j] = 1;
            if (test()) return true;
            coef[j] = 0;
        }
    }
    return false;
}

}  // namespace

bool is_indecomposable(const Rep& m, const OracleConfig& cfg) {
    if (m.dim().is_zero()) return false;
    const PrimeField& fld = m.field();
    HomSpace end = hom(m, m);
    if (end.dim() == 1) return true;
    if (fitting_splits(fld, end.basis)) return false;

    std::uint64_t total = 1;
    for (int k = 0; k < end.dim(); ++k) {
        total *= static_cast<std::uint64_t>(fld.order());
        if (total > cfg.idempotent_cap)
            throw BudgetExceeded("endomorphism ring of dimension " + std::to_string(end.dim()) +
                                 " is too large for the exhaustive idempotent search");
    }
    std::vector<Elem> coef(end.basis.size(), 0);
    for (std::uint64_t code = 1; code < total; ++code) {
        std::uint64_t c = code;
        for (auto& x : coef) {
            x = static_cast<Elem>(c % fld.order());
            c /= fld.order();
        }
        Morphism e = combine(fld, end.basis, coef);
        if (compose(fld, e, e) == e && !is_zero(e) && !is_identity(e)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------

std::uint64_t tuple_space_size(const Quiver& q, const DimVector& d, int p) {
    std::uint64_t total = 1;
    constexpr std::uint64_t cap = std::uint64_t{1} << 62;
    for (const Arrow& a : q.arrows())
        for (int k = 0; k < d[a.source] * d[a.target]; ++k) {
            total *= static_cast<std::uint64_t>(p);
            if (total > cap) return cap;
        }
    return total;
}

namespace {

// Orbit walk over the matrix tuples, encoded as base-p integers whose
// order is the lexicographic order of the flattened tuples.
class OrbitWalker {
public:
    OrbitWalker(const Quiver& q, const DimVector& d, const PrimeField& f) : q_(q), d_(d), f_(f) {
        for (const Arrow& a : q.arrows()) {
            offset_.push_back(entries_);
            entries_ += d[a.source] * d[a.target];
        }
        pow_.assign(entries_ + 1, 1);
        for (int k = 1; k <= entries_; ++k) pow_[k] = pow_[k - 1] * static_cast<std::uint64_t>(f.order());
        // GL_k(F_p) is generated by the transvections I + E_kl and diag(w,1,..,1).
        for (Vertex v = 0; v < q.n(); ++v) {
            for (int k = 0; k < d[v]; ++k)
                for (int l = 0; l < d[v]; ++l)
                    if (k != l) gens_.push_back({v, k, l, false});
            if (d[v] > 0 && f.order() > 2) gens_.push_back({v, 0, 0, true});
        }
    }

    std::uint64_t size() const { return pow_[entries_]; }

    void decode(std::uint64_t code, std::vector<Elem>& x) const {
        x.resize(entries_);
        for (int k = entries_ - 1; k >= 0; --k) {
            x[k] = static_cast<Elem>(code % f_.order());
            code /= f_.order();
        }
    }

    std::uint64_t encode(const std::vector<Elem>& x) const {
        std::uint64_t c = 0;
        for (Elem e : x) c = c * f_.order() + e;
        return c;
    }

    // Walks the orbit of `start`, marking visited codes; returns its size.
    std::uint64_t walk(std::uint64_t start, std::vector<std::uint64_t>& visited) const {
        std::vector<std::uint64_t> stack{start};
        mark(visited, start);
        std::uint64_t size = 1;
        std::vector<Elem> x, y;
        while (!stack.empty()) {
            std::uint64_t c = stack.back();
            stack.pop_back();
            decode(c, x);
            for (const Gen& g : gens_) {
                y = x;
                apply(g, y);
                std::uint64_t nc = encode(y);
                if (!test(visited, nc)) {
                    mark(visited, nc);
                    ++size;
                    stack.push_back(nc);
                }
            }
        }
        return size;
    }

    std::vector<Matrix> maps(const std::vector<Elem>& x) const {
        std::vector<Matrix> out;
        for (std::size_t k = 0; k < q_.arrows().size(); ++k) {
            const Arrow& a = q_.arrows()[k];
            Matrix m(d_[a.target], d_[a.source]);
            std::copy(x.begin() + offset_[k], x.begin() + offset_[k] + m.rows * m.cols, m.a.begin());
            out.push_back(std::move(m));
        }
        return out;
    }

private:
    struct Gen {
        Vertex v;
        int k, l;
        bool scaling;
    };

    static bool test(const std::vector<std::uint64_t>& bits, std::uint64_t c) { return bits[c >> 6] >> (c & 63) & 1; }
    static void mark(std::vector<std::uint64_t>& bits, std::uint64_t c) { bits[c >> 6] |= std::uint64_t{1} << (c & 63); }

    // Acts by h at vertex v: M_a -> h M_a for arrows into v and
    // M_a -> M_a h^{-1} for arrows out of v.
    void apply(const Gen& g, std::vector<Elem>& x) const {
        const auto& arrows = q_.arrows();
        for (std::size_t a = 0; a < arrows.size(); ++a) {
            const int rows = d_[arrows[a].target], cols = d_[arrows[a].source];
            Elem* m = x.data() + offset_[a];
            if (arrows[a].target == g.v) {
                for (int c = 0; c < cols; ++c) {
                    Elem& dst = m[g.k * cols + c];
                    dst = g.scaling ? f_.mul(dst, f_.primitive()) : f_.add(dst, m[g.l * cols + c]);
                }
            }
            if (arrows[a].source == g.v) {
                for (int r = 0; r < rows; ++r) {
                    if (g.scaling) {
                        Elem& dst = m[r * cols + g.k];
                        dst = f_.mul(dst, f_.inv(f_.primitive()));
                    } else {
                        Elem& dst = m[r * cols + g.l];
                        dst = f_.sub(dst, m[r * cols + g.k]);
                    }
                }
            }
        }
    }

    const Quiver& q_;
    const DimVector& d_;
    const PrimeField& f_;
    int entries_ = 0;
    std::vector<int> offset_;
    std::vector<std::uint64_t> pow_;
    std::vector<Gen> gens_;
};

void check_request(const Quiver& q, const DimVector& d, const PrimeField& field, const OracleConfig& cfg) {
    if (static_cast<int>(d.size()) != q.n() || !d.is_nonnegative() || d.is_zero())
        throw InputError("need a nonzero nonnegative dimension vector for this quiver, got " + d.str());
    if (tuple_space_size(q, d, field.order()) > cfg.tuple_budget)
        throw BudgetExceeded("dimension vector " + d.str() + " over F_" + std::to_string(field.order()) +
                             " exceeds the tuple budget of " + std::to_string(cfg.tuple_budget));
}

}  // namespace

std::vector<IsoClass> enumerate_iso_classes(const Quiver& q, const DimVector& d, const PrimeField& field,
                                            const OracleConfig& cfg) {
    check_request(q, d, field, cfg);
    auto qp = std::make_shared<const Quiver>(q);
    OrbitWalker walker(q, d, field);
    const std::uint64_t total = walker.size();
    std::vector<std::uint64_t> visited((total + 63) / 64, 0);
    std::vector<IsoClass> out;
    std::vector<Elem> x;
    for (std::uint64_t code = 0; code < total; ++code) {
        if (visited[code >> 6] >> (code & 63) & 1) continue;
        // Every smaller code is already visited, so `code` is the orbit minimum.
        std::uint64_t size = walker.walk(code, visited);
        walker.decode(code, x);
        Rep rep(qp, field, d, walker.maps(x));
        int end_dim = hom(rep, rep).dim();
        out.push_back({std::move(rep), size, end_dim});
    }
    return out;
}

ClassCounts class_counts(const Quiver& q, const DimVector& d, const PrimeField& field, const OracleConfig& cfg) {
    ClassCounts counts;
    const int form = tits_form(q, d);
    for (const IsoClass& c : enumerate_iso_classes(q, d, field, cfg)) {
        ++counts.classes;
        const bool schur = c.end_dim == 1;
        if (!(schur || is_indecomposable(c.rep, cfg))) continue;
        ++counts.indecomposable;
        if (!schur) continue;
        const int ext = c.end_dim - form;
        if (cfg.verify_ext && ext != ext1_dim_cokernel(c.rep, c.rep))
            throw std::logic_error("Euler identity failed for " + d.str());
        if (ext == 0) ++counts.exceptional;
    }
    return counts;
}

int count_indecomposables(const Quiver& q, const DimVector& d, const PrimeField& field, const OracleConfig& cfg) {
    return class_counts(q, d, field, cfg).indecomposable;
}

int count_exceptional(const Quiver& q, const DimVector& d, const PrimeField& field, const OracleConfig& cfg) {
    check_request(q, d, field, cfg);
    const int form = tits_form(q, d);
    int count = 0;
    for (const IsoClass& c : enumerate_iso_classes(q, d, field, cfg)) {
        if (c.end_dim != 1) continue;
        const int ext = c.end_dim - form;
        if (cfg.verify_ext && ext != ext1_dim_cokernel(c.rep, c.rep))
            throw std::logic_error("Euler identity failed for " + d.str());
        if (ext == 0) ++count;
    }
    return count;
}

}  // namespace qrep
