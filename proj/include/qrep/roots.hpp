#pragma once

#include <map>
#include <vector>

#include "qrep/exec.hpp"
#include "qrep/quiver.hpp"

namespace qrep {

// Root system of the symmetric form of the underlying graph. Every
// function here depends on the graph only, never on the orientation.

enum class RootVerdict { PositiveRealRoot, ImaginaryRoot, NotRoot };

struct RootClassification {
    RootVerdict verdict = RootVerdict::NotRoot;
    std::vector<Vertex> trace;  // simple reflections applied during descent
};

// Height -> number of positive roots of that height.
using HeightHistogram = std::map<int, int>;

// s_i(d) = d - (d, e_i) e_i
DimVector reflect(const Quiver& q, const DimVector& d, Vertex i);

// Descent: reflect at the vertex with the largest (d, e_i) > 0 (smallest
// index on ties) until d is simple (real root), leaves the positive cone or
// its support disconnects (not a root), or every (d, e_i) <= 0 with
// connected support (fundamental set: imaginary root).
RootClassification classify_vector(const Quiver& q, const DimVector& d);

inline constexpr int kDefaultHeightBound = 12;

// All positive roots of height <= max_height, by exhaustive scan of the
// nonnegative vectors of that height range. Sorted by height, then lex.
std::vector<DimVector> positive_roots_up_to_height(const Quiver& q, int max_height, Exec exec = Exec::parallel);

// Positive real roots of height <= max_height reached from the simple roots
// by height-increasing reflections. Independent of the scan above.
std::vector<DimVector> reflection_closure(const Quiver& q, int max_height);

HeightHistogram height_histogram(const std::vector<DimVector>& roots);

struct KostantReport {
    HeightHistogram histogram;        // from the exhaustive scan
    HeightHistogram closure_histogram;
    int total = 0;
    int closure_total = 0;
    int highest_height = 0;
    int max_count_above_one = 0;      // max over t >= 2
    bool bound_holds = false;         // count(t) <= n - 1 for all t >= 2
    bool closure_agrees = false;
    bool ok() const { return bound_holds && closure_agrees; }
};

// Requires a Dynkin quiver.
KostantReport kostant_check(const Quiver& q, Exec exec = Exec::parallel);

}  // namespace qrep
