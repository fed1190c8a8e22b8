#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "qrep/field.hpp"
#include "qrep/quiver.hpp"

namespace qrep {

// Representation over F_p: one dim[target] x dim[source] matrix per arrow.
class Rep {
public:
    Rep(std::shared_ptr<const Quiver> quiver, PrimeField field, DimVector dim, std::vector<Matrix> maps);

    static Rep zero(std::shared_ptr<const Quiver> quiver, PrimeField field, DimVector dim);
    static Rep simple(std::shared_ptr<const Quiver> quiver, PrimeField field, Vertex i);
    // Thin representation with support `vertices`: 1 on arrows inside the
    // support. Indecomposable iff the support is connected.
    static Rep thin(std::shared_ptr<const Quiver> quiver, PrimeField field, const std::vector<Vertex>& vertices);

    const Quiver& quiver() const noexcept { return *quiver_; }
    const std::shared_ptr<const Quiver>& quiver_ptr() const noexcept { return quiver_; }
    const PrimeField& field() const noexcept { return field_; }
    const DimVector& dim() const noexcept { return dim_; }
    const std::vector<Matrix>& maps() const noexcept { return maps_; }

    // Row-major entries of every map, arrows in order.
    std::vector<Elem> flatten() const;

    bool operator==(const Rep& o) const { return field_ == o.field_ && dim_ == o.dim_ && maps_ == o.maps_; }

private:
    std::shared_ptr<const Quiver> quiver_;
    PrimeField field_;
    DimVector dim_;
    std::vector<Matrix> maps_;
};

Rep direct_sum(const Rep& m, const Rep& n);

// A morphism: one matrix per vertex, f_i : M_i -> N_i.
using Morphism = std::vector<Matrix>;

struct HomSpace {
    std::vector<Morphism> basis;
    int dim() const { return static_cast<int>(basis.size()); }
};

struct OracleConfig {
    std::uint64_t tuple_budget = std::uint64_t{1} << 24;     // raw matrix tuples per dimension vector
    std::uint64_t idempotent_cap = std::uint64_t{1} << 16;   // End elements scanned for idempotents
    bool verify_ext = false;  // also compute Ext^1 as an explicit cokernel and compare
};

// Solves f_j M_a = N_a f_i for every arrow a: i -> j.
HomSpace hom(const Rep& m, const Rep& n);

// dim Hom(M,N) - <dim M, dim N> (hereditary Euler identity).
int ext1_dim(const Rep& m, const Rep& n);
// Cokernel of (f_i) -> (f_j M_a - N_a f_i), computed from its rank.
int ext1_dim_cokernel(const Rep& m, const Rep& n);

bool is_indecomposable(const Rep& m, const OracleConfig& cfg = {});

struct IsoClass {
    Rep rep;                  // lexicographically least flattened tuple in the orbit
    std::uint64_t orbit_size;
    int end_dim;
};

// One representative per orbit of prod_i GL(d_i, F_p) on the matrix tuples.
std::vector<IsoClass> enumerate_iso_classes(const Quiver& q, const DimVector& d, const PrimeField& field,
                                            const OracleConfig& cfg = {});

struct ClassCounts {
    int classes = 0;
    int indecomposable = 0;
    int exceptional = 0;  // dim End = 1 and Ext^1(M,M) = 0
};

// Single enumeration producing all three counts.
ClassCounts class_counts(const Quiver& q, const DimVector& d, const PrimeField& field, const OracleConfig& cfg = {});

int count_indecomposables(const Quiver& q, const DimVector& d, const PrimeField& field, const OracleConfig& cfg = {});
int count_exceptional(const Quiver& q, const DimVector& d, const PrimeField& field, const OracleConfig& cfg = {});

// Raw tuple count p^(sum_a d_s d_t), saturating at 2^62.
std::uint64_t tuple_space_size(const Quiver& q, const DimVector& d, int p);

}  // namespace qrep
