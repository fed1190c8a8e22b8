#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qrep {

using Vertex = int;

struct Arrow {
    Vertex source = 0;
    Vertex target = 0;
    auto operator<=>(const Arrow&) const = default;
};

// Integer vector indexed by vertices. Coordinates of a dimension vector are
// nonnegative; reflections may produce negative ones.
class DimVector {
public:
    DimVector() = default;
    explicit DimVector(std::size_t n) : c_(n, 0) {}
    explicit DimVector(std::vector<int> coords) : c_(std::move(coords)) {}
    DimVector(std::initializer_list<int> coords) : c_(coords) {}

    static DimVector unit(std::size_t n, Vertex i);

    std::size_t size() const noexcept { return c_.size(); }
    int operator[](std::size_t i) const { return c_[i]; }
    int& operator[](std::size_t i) { return c_[i]; }
    const std::vector<int>& coords() const noexcept { return c_; }

    int height() const noexcept;
    bool is_zero() const noexcept;
    bool is_nonnegative() const noexcept;
    bool is_thin() const noexcept;  // every coordinate <= 1
    std::vector<Vertex> support() const;

    std::string str() const;  // "(2,1,1)"

    auto operator<=>(const DimVector&) const = default;

private:
    std::vector<int> c_;
};

// Finite loop-free quiver without multiple arrows and without oriented
// cycles. Construction validates all three; connectedness is a predicate.
class Quiver {
public:
    Quiver(int n, std::vector<Arrow> arrows, std::string name = {});

    int n() const noexcept { return n_; }
    const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
    const std::string& name() const noexcept { return name_; }
    Quiver renamed(std::string name) const;

    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(static_cast<std::size_t>(v)); }
    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
    bool adjacent(Vertex u, Vertex v) const;

    bool is_connected() const;
    bool is_tree() const;  // connected with n-1 arrows

    // Same underlying graph, arrow k reversed when bit k of mask is set.
    // Throws QuiverError if the result has an oriented cycle.
    Quiver reoriented(std::uint64_t mask) const;

    std::string to_text() const;  // "3; 0->1 1->2"

    bool operator==(const Quiver& o) const { return n_ == o.n_ && arrows_ == o.arrows_; }

private:
    int n_;
    std::vector<Arrow> arrows_;
    std::string name_;
    std::vector<std::vector<Vertex>> adj_;
};

// Induced subquiver together with the map new index -> parent index.
struct Subquiver {
    Quiver quiver;
    std::vector<Vertex> to_parent;
};

Quiver parse_quiver(std::string_view text);

// Presets with arrows pointing away from the center (or left end).
// family: "A", "D", "E", "tA", "tD", "tE", "T" (p,q,r), "S" (star, k leaves).
Quiver preset(std::string_view family, const std::vector<int>& params);
// CLI spelling: A5, D4, E8, tA3, tD4, tE6, T5,4,2, S4.
Quiver preset(std::string_view name);

// ---- classification -------------------------------------------------------

enum class DiagramKind { Dynkin, Euclidean, Beyond };
enum class Series { A, D, E };

struct Diagram {
    Series series = Series::A;
    int rank = 0;  // Dynkin: vertex count; Euclidean: vertex count - 1
    bool euclidean = false;
    std::string str() const;  // "A5", "tD4"
    bool operator==(const Diagram&) const = default;
};

struct GraphClass {
    DiagramKind kind = DiagramKind::Dynkin;
    Diagram type;                 // the diagram itself (Dynkin/Euclidean) or the witness type (Beyond)
    std::vector<Vertex> witness;  // empty for Dynkin; induces a Euclidean subgraph otherwise
    std::string str() const;
};

GraphClass classify_graph(const Quiver& q);
bool is_representation_finite(const Quiver& q);

struct ArmProfile {
    Vertex center = 0;
    std::vector<int> arms;  // vertex counts including the center, descending
    bool is_T() const { return arms.size() == 3; }
};

std::optional<ArmProfile> arm_profile(const Quiver& q);

// ---- subquivers -----------------------------------------------------------

// All size-t vertex sets inducing a connected subquiver, each sorted,
// in lexicographic order.
std::vector<std::vector<Vertex>> connected_subquivers(const Quiver& q, int t);
bool induces_connected(const Quiver& q, const std::vector<Vertex>& vertices);
int induced_edge_count(const Quiver& q, const std::vector<Vertex>& vertices);

Subquiver induced_subquiver(const Quiver& q, const std::vector<Vertex>& vertices);
Subquiver delete_vertex(const Quiver& q, Vertex v);

// ---- forms ----------------------------------------------------------------

// <d,e> = sum_i d_i e_i - sum_{a:i->j} d_i e_j
int euler_form(const Quiver& q, const DimVector& d, const DimVector& e);
int tits_form(const Quiver& q, const DimVector& d);
// (d,e) = <d,e> + <e,d>; depends only on the underlying graph.
int symmetric_form(const Quiver& q, const DimVector& d, const DimVector& e);

}  // namespace qrep
