#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qrep/exec.hpp"
#include "qrep/field.hpp"
#include "qrep/quiver.hpp"
#include "qrep/rep.hpp"

namespace qrep {

struct CensusConfig {
    PrimeField field{2};
    OracleConfig oracle;
    bool audit = false;  // extend threshold scans to min(n,9) and recount e(t) by pure oracle
    Exec exec = Exec::parallel;
};

// Largest length scanned for t_Q: min(n, 7), or min(n, 9) in audit mode.
int threshold_scan_limit(const Quiver& q, bool audit);

// Nonnegative vectors of height t with connected support, ordered by
// support size, then support, then coordinates.
std::vector<DimVector> connected_candidates(const Quiver& q, int t);

// Number of connected t-vertex subtrees of a tree quiver; each carries a
// unique thin indecomposable, which is exceptional.
int thin_count(const Quiver& q, int t);

struct ExceptionalSplit {
    int thin = 0;     // e'(t)
    int nonthin = 0;  // e''(t)
    int total() const { return thin + nonthin; }
    bool operator==(const ExceptionalSplit&) const = default;
};

// Fast path: thin vectors with tree support count 1 each without oracle
// calls; every other candidate that is a positive real root goes through
// count_exceptional.
ExceptionalSplit e_split(const Quiver& q, int t, const CensusConfig& cfg = {});
int exceptional_count(const Quiver& q, int t, const CensusConfig& cfg = {});

// Pure oracle: count_exceptional summed over every connected candidate.
ExceptionalSplit e_split_oracle(const Quiver& q, int t, const CensusConfig& cfg = {});

// Smallest t in [2, min(n,7)] with e(t) >= n; none for representation-finite quivers.
std::optional<int> t_q(const Quiver& q, const CensusConfig& cfg = {});

struct IndecomposableCount {
    long count = 0;
    bool infinite_family = false;  // an imaginary root of this height exists
};

// Representation-finite: positive roots of height t. Otherwise oracle
// counts over the positive roots of height t.
IndecomposableCount indecomposable_count(const Quiver& q, int t, const CensusConfig& cfg = {});

struct LemmaWitness {
    Vertex deleted;               // vertex of Q outside the subquiver
    std::vector<Vertex> support;  // connected tree support of size t through it (Q indices)
};

struct LemmaReport {
    int t = 0;
    int n = 0;
    int n_sub = 0;
    int e_q = 0;
    int e_sub = 0;
    bool holds = false;  // e_q >= e_sub + n - n_sub
    std::vector<LemmaWitness> witnesses;
};

LemmaReport lemma_check(const Quiver& q, const std::vector<Vertex>& subquiver, int t, const CensusConfig& cfg = {});

// ---- theorem verification -------------------------------------------------

struct LengthRow {
    int t = 0;
    ExceptionalSplit e;               // fast path
    int e_oracle = 0;                 // exceptional classes found by the oracle over roots of height t
    int roots = 0;                    // positive roots of height t
    int imaginary_roots = 0;
    long indecomposable = 0;          // oracle classes over F_p, summed over roots of height t
    long nonthin_indecomposable = 0;
    bool infinite_family = false;
    bool all_exceptional = false;     // every indecomposable of length t is exceptional
    std::optional<ExceptionalSplit> e_recount;  // audit mode: pure-oracle recount
};

struct TheoremVerdicts {
    bool rep_infinite = false;  // (i)
    bool many_indecomposables = false;  // (ii)
    bool threshold = false;     // (iii)
    int ii_length = 0;          // a length witnessing (ii), 0 if none
    bool i_ii() const { return rep_infinite == many_indecomposables; }
    bool ii_iii() const { return many_indecomposables == threshold; }
    bool i_iii() const { return rep_infinite == threshold; }
    bool equivalent() const { return i_ii() && ii_iii() && i_iii(); }
};

struct CensusReport {
    std::string name;
    std::string quiver_text;
    int n = 0;
    int arrows = 0;
    std::string graph_class;
    bool rep_finite = false;
    int field = 2;
    std::vector<LengthRow> rows;  // t = 1 .. last computed length
    std::optional<int> t_q;
    std::string case_label;       // which proof case the quiver falls into
    std::optional<int> expected_t_q;
    TheoremVerdicts verdicts;
    bool engines_agree = true;    // fast-path e(t) equals oracle exceptional count for every row
    bool audit_ok = true;

    bool case_agrees() const { return t_q == expected_t_q; }
    bool ok() const { return verdicts.equivalent() && case_agrees() && engines_agree && audit_ok; }
};

CensusReport verify_theorem(const Quiver& q, const CensusConfig& cfg = {});

}  // namespace qrep
