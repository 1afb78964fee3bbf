#include "degseq/graph.hpp"

#include <algorithm>
#include <sstream>

namespace degseq {

labeled_graph::labeled_graph(int n) : n_(n) {
    if (n < 0)
        throw error("vertex count must be nonnegative");
}

labeled_graph::labeled_graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
    if (n < 0)
        throw error("vertex count must be nonnegative");
    for (auto& [i, j] : edges) {
        if (i > j)
            std::swap(i, j);
        if (i < 1 || j > n || i == j)
            throw bad_pair("edge {" + std::to_string(i) + "," + std::to_string(j) +
                           "} is not a vertex pair of a graph on " + std::to_string(n) +
                           " vertices");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw bad_pair("duplicate edge in edge list");
    edges_ = std::move(edges);
}

bool labeled_graph::has_edge(int i, int j) const {
    if (i > j)
        std::swap(i, j);
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(i, j));
}

int labeled_graph::degree(int v) const {
    int deg = 0;
    for (const auto& [i, j] : edges_)
        deg += (i == v) + (j == v);
    return deg;
}

int_list labeled_graph::degree_list() const {
    int_list degrees(static_cast<size_t>(n_), 0);
    for (const auto& [i, j] : edges_) {
        ++degrees[static_cast<size_t>(i - 1)];
        ++degrees[static_cast<size_t>(j - 1)];
    }
    return degrees;
}

std::string write_dot(const labeled_graph& g) {
    const int_list degrees = g.degree_list();
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 1; v <= g.n(); ++v)
        if (degrees[static_cast<size_t>(v - 1)] == 0)
            out << "  " << v << ";\n";
    for (const auto& [i, j] : g.edges())
        out << "  " << i << " -- " << j << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace degseq
