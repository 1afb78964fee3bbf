#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "degseq/classification.hpp"
#include "degseq/graph.hpp"
#include "degseq/sequence.hpp"

namespace degseq {

// Every realization of a degree sequence, sorted by edge-set lexicographic
// order.  A realization binds label i to degree d_i exactly.
struct realization_set {
    degree_sequence sequence;
    std::vector<labeled_graph> graphs;
};

// One realization via Havel-Hakimi: repeatedly satisfy the vertex with the
// largest remaining degree (smallest label on ties), connecting it to the
// other vertices of largest remaining degree (again smallest label first).
// Deterministic; throws not_graphic when no realization exists.
labeled_graph realize(const degree_sequence& d);

// Exhaustive backtracking over vertex pairs in lexicographic order with
// remaining-degree pruning.  Throws too_large when d.n() > cap and
// not_graphic when the sequence has no realization at all.
realization_set enumerate_realizations(const degree_sequence& d, int cap = 10);

// Vertices a,b,c,d with edges ab and cd but neither ad nor bc.  A graph is
// a threshold graph iff it has no such configuration.
struct alternating_cycle {
    int a = 0, b = 0, c = 0, d = 0;
    bool operator==(const alternating_cycle&) const = default;
};

// Lexicographically least witness tuple, or nullopt for threshold graphs.
std::optional<alternating_cycle> find_alternating_four_cycle(const labeled_graph& g);

// Edge-count form of delta_k evaluated on a realization g of d:
//   delta_k = 2 e(A) + 2 nonedges(B) + e(A,C) + nonedges(B,C)
// where B = {1..k}, c_choice lists the members of C (each with degree at
// least k) and A is the rest of {k+1..n} (each with degree at most k).
// Vertices of degree exactly k may sit on either side.  Throws
// invalid_partition when c_choice violates those bounds.
long long delta_by_partition_counts(const labeled_graph& g, const degree_sequence& d, int k,
                                    const std::vector<int>& c_choice);

// Ground-truth classification by enumeration, with the envelope graphs it
// induces: intersection holds the edges present in every realization and
// union_graph the edges present in at least one.
struct oracle_classification {
    classification_matrix matrix;
    labeled_graph intersection;
    labeled_graph union_graph;
    size_t realization_count = 0;
};

oracle_classification forced_pairs_oracle(const degree_sequence& d, int cap = 10);

} // namespace degseq
