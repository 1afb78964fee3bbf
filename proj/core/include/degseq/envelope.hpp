#pragma once

#include <string>
#include <vector>

#include "degseq/graph.hpp"
#include "degseq/sequence.hpp"

namespace degseq {

// One vertex-addition step when growing a threshold graph: a new isolated
// vertex, or a new vertex adjacent to everything already present.  The
// first step of a sequence builds a single vertex either way.
enum class creation_step : char {
    isolated = 'I',
    dominating = 'D',
};

// Steps applied left to right, one vertex each.
using creation_sequence = std::vector<creation_step>;

std::string to_string(const creation_sequence& c);
creation_sequence creation_from_string(const std::string& text); // throws parse_error

// Builds the threshold graph a creation sequence describes.  Vertices are
// labeled so the degree list is nonincreasing in the label, ties broken by
// creation order.  Throws empty_creation when c has no steps.
labeled_graph build_threshold_graph(const creation_sequence& c);

// One canonical component: a clique side B and an independent side A, both
// listed by ascending vertex label.  Single-vertex components leave the
// other side empty.
struct skeleton_component {
    std::vector<int> clique;      // B_j
    std::vector<int> independent; // A_j
};

// Canonical decomposition data read off the Erdos-Gallai zero list.
// `blocks` lists components outermost first.  When the sequence is split
// the innermost component is the last block and the tail sets stay empty;
// otherwise the leftover vertices form an indecomposable tail described by
// the four envelope sets below.
struct canonical_skeleton {
    std::vector<skeleton_component> blocks;
    bool split = false;
    int p = 0; // last Erdos-Gallai zero
    int q = 0; // largest k in 0..n with delta_k <= 1
    std::vector<int> tail_vertices;
    std::vector<int> tail_intersection_clique;      // {v in tail : v <= q}
    std::vector<int> tail_intersection_independent; // rest of the tail
    std::vector<int> tail_union_independent; // {v : some k with delta_k <= 1 has d_v <= k < v}
    std::vector<int> tail_union_clique;       // rest of the tail
};

// All of these require a graphic input and throw not_graphic otherwise.

// Split sequences have delta_m = 0: every realization splits into a clique
// on the first m vertices and an independent set on the rest.
bool is_split_sequence(const degree_sequence& d);

// Threshold sequences have delta_k = 0 for every k in 1..m and exactly one
// realization.
bool is_threshold_sequence(const degree_sequence& d);

// 0 followed by every k in 1..m with delta_k = 0, ascending.
std::vector<int> eg_zero_list(const degree_sequence& d);

canonical_skeleton compute_skeleton(const degree_sequence& d);

// A threshold envelope: the graph on the original labels together with a
// creation sequence building an isomorphic copy.
struct envelope_result {
    labeled_graph graph;
    creation_sequence creation;
};

// Intersection envelope I(d): edges lying in every realization.
envelope_result intersection_envelope(const degree_sequence& d);

// Union envelope U(d): edges lying in at least one realization.
envelope_result union_envelope(const degree_sequence& d);

} // namespace degseq
