#include "degseq/realization.hpp"

#include <algorithm>
#include <string>

#include "degseq/graphicality.hpp"

namespace degseq {

labeled_graph realize(const degree_sequence& d) {
    if (!is_graphic(d))
        throw not_graphic("sequence is not graphic");
    const int n = d.n();
    int_list residual = d.terms();
    std::vector<std::pair<int, int>> edges;

    for (;;) {
        int u = 0;
        for (int v = 1; v <= n; ++v)
            if (residual[static_cast<size_t>(v - 1)] > 0 &&
                (u == 0 ||
                 residual[static_cast<size_t>(v - 1)] > residual[static_cast<size_t>(u - 1)]))
                u = v;
        if (u == 0)
            break;
        const int want = residual[static_cast<size_t>(u - 1)];
        residual[static_cast<size_t>(u - 1)] = 0;

        // snapshot the other positive-residual vertices, largest residual
        // first with the smallest label winning ties, then take `want`
        std::vector<int> targets;
        for (int v = 1; v <= n; ++v)
            if (v != u && residual[static_cast<size_t>(v - 1)] > 0)
                targets.push_back(v);
        std::stable_sort(targets.begin(), targets.end(), [&](int a, int b) {
            return residual[static_cast<size_t>(a - 1)] > residual[static_cast<size_t>(b - 1)];
        });
        if (static_cast<int>(targets.size()) < want)
            throw internal_error("Havel-Hakimi ran out of vertices on a graphic sequence");
        for (int t = 0; t < want; ++t) {
            const int v = targets[static_cast<size_t>(t)];
            --residual[static_cast<size_t>(v - 1)];
            edges.emplace_back(std::min(u, v), std::max(u, v));
        }
    }
    return labeled_graph(n, std::move(edges));
}

namespace {

struct enumerator {
    int n = 0;
    std::vector<int> residual;            // degree still needed per vertex, 0-based
    std::vector<int> open;                // undecided pairs still touching each vertex
    std::vector<std::pair<int, int>> pairs;
    std::vector<std::pair<int, int>> chosen;
    std::vector<labeled_graph>* out = nullptr;

    void run(size_t next) {
        if (next == pairs.size()) {
            for (int v = 0; v < n; ++v)
                if (residual[static_cast<size_t>(v)] != 0)
                    return;
            out->emplace_back(n, chosen);
            return;
        }
        const auto [i, j] = pairs[next];
        --open[static_cast<size_t>(i)];
        --open[static_cast<size_t>(j)];

        if (residual[static_cast<size_t>(i)] > 0 && residual[static_cast<size_t>(j)] > 0) {
            --residual[static_cast<size_t>(i)];
            --residual[static_cast<size_t>(j)];
            chosen.emplace_back(i + 1, j + 1);
            run(next + 1);
            chosen.pop_back();
            ++residual[static_cast<size_t>(i)];
            ++residual[static_cast<size_t>(j)];
        }
        if (residual[static_cast<size_t>(i)] <= open[static_cast<size_t>(i)] &&
            residual[static_cast<size_t>(j)] <= open[static_cast<size_t>(j)])
            run(next + 1);

        ++open[static_cast<size_t>(i)];
        ++open[static_cast<size_t>(j)];
    }
};

} // namespace

realization_set enumerate_realizations(const degree_sequence& d, int cap) {
    const int n = d.n();
    if (n > cap)
        throw too_large("n = " + std::to_string(n) + " exceeds enumeration cap " +
                        std::to_string(cap));
    if (!is_graphic(d))
        throw not_graphic("sequence is not graphic");

    enumerator e;
    e.n = n;
    e.residual = d.terms();
    e.open.assign(static_cast<size_t>(n), n - 1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            e.pairs.emplace_back(i, j);

    std::vector<labeled_graph> graphs;
    e.out = &graphs;
    e.run(0);
    if (graphs.empty())
        throw internal_error("graphic sequence produced no realizations");
    std::sort(graphs.begin(), graphs.end(),
              [](const labeled_graph& a, const labeled_graph& b) { return a.edges() < b.edges(); });
    return realization_set{d, std::move(graphs)};
}

std::optional<alternating_cycle> find_alternating_four_cycle(const labeled_graph& g) {
    const int n = g.n();
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
            if (b == a || !g.has_edge(a, b))
                continue;
            for (int c = 1; c <= n; ++c) {
                if (c == a || c == b)
                    continue;
                for (int d = 1; d <= n; ++d) {
                    if (d == a || d == b || d == c)
                        continue;
                    if (g.has_edge(c, d) && !g.has_edge(a, d) && !g.has_edge(b, c))
                        return alternating_cycle{a, b, c, d};
                }
            }
        }
    return std::nullopt;
}

long long delta_by_partition_counts(const labeled_graph& g, const degree_sequence& d, int k,
                                    const std::vector<int>& c_choice) {
    const int n = d.n();
    if (g.n() != n || g.degree_list() != d.terms())
        throw invalid_partition("graph does not realize the sequence");
    if (k < 0 || k > n)
        throw invalid_partition("k must lie in 0..n");

    // side: 0 = B (first k), 1 = A, 2 = C
    std::vector<int> side(static_cast<size_t>(n) + 1, 1);
    for (int v = 1; v <= k; ++v)
        side[static_cast<size_t>(v)] = 0;
    for (int v : c_choice) {
        if (v <= k || v > n)
            throw invalid_partition("C must be a subset of {k+1..n}");
        side[static_cast<size_t>(v)] = 2;
    }
    for (int v = k + 1; v <= n; ++v) {
        if (side[static_cast<size_t>(v)] == 2 && d.term(v) < k)
            throw invalid_partition("vertex " + std::to_string(v) +
                                    " has degree below k but was placed in C");
        if (side[static_cast<size_t>(v)] == 1 && d.term(v) > k)
            throw invalid_partition("vertex " + std::to_string(v) +
                                    " has degree above k but was left in A");
    }

    long long edges_a = 0, edges_b = 0, edges_ac = 0, edges_bc = 0;
    long long count_a = 0, count_c = 0;
    for (int v = k + 1; v <= n; ++v)
        (side[static_cast<size_t>(v)] == 1 ? count_a : count_c) += 1;
    for (const auto& [i, j] : g.edges()) {
        const int si = side[static_cast<size_t>(i)];
        const int sj = side[static_cast<size_t>(j)];
        if (si == 1 && sj == 1)
            ++edges_a;
        else if (si == 0 && sj == 0)
            ++edges_b;
        else if ((si == 1 && sj == 2) || (si == 2 && sj == 1))
            ++edges_ac;
        else if ((si == 0 && sj == 2) || (si == 2 && sj == 0))
            ++edges_bc;
    }
    const long long nonedges_b = static_cast<long long>(k) * (k - 1) / 2 - edges_b;
    const long long nonedges_bc = static_cast<long long>(k) * count_c - edges_bc;
    return 2 * edges_a + 2 * nonedges_b + edges_ac + nonedges_bc;
}

oracle_classification forced_pairs_oracle(const degree_sequence& d, int cap) {
    const realization_set set = enumerate_realizations(d, cap);
    const int n = d.n();

    std::vector<std::pair<int, int>> always, ever;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            bool in_all = true, in_some = false;
            for (const labeled_graph& g : set.graphs) {
                if (g.has_edge(i, j))
                    in_some = true;
                else
                    in_all = false;
            }
            if (in_all)
                always.emplace_back(i, j);
            if (in_some)
                ever.emplace_back(i, j);
        }

    classification_matrix matrix(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            matrix.set(i, j, pair_class::unforced);
    for (const auto& [i, j] : always)
        matrix.set(i, j, pair_class::forced_edge);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            const bool in_some =
                std::binary_search(ever.begin(), ever.end(), std::make_pair(i, j));
            if (!in_some)
                matrix.set(i, j, pair_class::forced_non_edge);
        }

    return oracle_classification{std::move(matrix), labeled_graph(n, std::move(always)),
                                 labeled_graph(n, std::move(ever)), set.graphs.size()};
}

} // namespace degseq
