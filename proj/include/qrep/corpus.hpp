#pragma once

#include <map>
#include <string>
#include <vector>

#include "qrep/census.hpp"
#include "qrep/exec.hpp"
#include "qrep/quiver.hpp"

namespace qrep {

// Canonical string of the underlying graph of a tree (AHU encoding at the
// center) or of a connected unicyclic graph (cycle of rooted trees up to
// rotation and reflection). Equal keys iff isomorphic underlying graphs.
std::string canonical_key(const Quiver& q);

// One representative per isomorphism class of trees on n vertices,
// vertices numbered breadth-first from the center, arrows pointing away
// from it. Sorted by canonical key.
std::vector<Quiver> unlabeled_trees(int n);

// One representative per isomorphism class of connected unicyclic graphs on
// n >= 3 vertices: cycle vertices 0..k-1, hanging trees oriented away from
// the cycle, cycle oriented like the tA preset.
std::vector<Quiver> unicyclic_graphs(int n);

// Every acyclic orientation of the underlying graph (arrow k reversed per
// bit k of a mask, masks ascending).
std::vector<Quiver> acyclic_orientations(const Quiver& q);

// Acyclic re-orientations of the cycle arrows only (unicyclic_graphs layout).
std::vector<Quiver> cycle_orientations(const Quiver& q);

enum class OrientationMode { one_per_tree, all };

struct CorpusSizeStats {
    int trees = 0;
    int rep_infinite_trees = 0;
    int unicyclic_graphs = 0;
    int quivers = 0;  // verified quivers of this size (all orientations counted)
};

struct CorpusReport {
    int n_max = 0;
    OrientationMode mode = OrientationMode::one_per_tree;
    std::map<int, CorpusSizeStats> by_size;
    std::vector<CensusReport> reports;           // canonical order: size, trees before unicyclic, key, orientation
    std::vector<std::string> failures;           // one line per failed check
    int orientation_mismatches = 0;              // e-tables differing across orientations of one graph
    bool ok() const { return failures.empty() && orientation_mismatches == 0; }
};

inline constexpr int kCorpusSizeBudget = 9;

CorpusReport corpus_verify(int n_max, OrientationMode mode, const CensusConfig& cfg = {});

}  // namespace qrep
