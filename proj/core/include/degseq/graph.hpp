#pragma once

#include <string>
#include <utility>
#include <vector>

#include "degseq/errors.hpp"
#include "degseq/sequence.hpp"

namespace degseq {

// Simple undirected graph on vertices 1..n.  Edges are stored as sorted
// (i, j) pairs with i < j; the edge list is canonicalized on construction,
// so two graphs are equal iff they have the same n and edge set.
class labeled_graph {
  public:
    explicit labeled_graph(int n);
    labeled_graph(int n, std::vector<std::pair<int, int>> edges);

    int n() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool has_edge(int i, int j) const;
    int degree(int v) const;

    // Degrees by label, index 0 holding the degree of vertex 1.
    int_list degree_list() const;

    bool operator==(const labeled_graph& other) const = default;

  private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
};

// Graphviz rendering: "graph G { ... }" with one line per vertex that has
// no incident edge and one "i -- j;" line per edge, both ascending.
std::string write_dot(const labeled_graph& g);

} // namespace degseq
