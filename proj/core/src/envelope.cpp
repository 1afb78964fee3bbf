#include "degseq/envelope.hpp"

#include <algorithm>
#include <numeric>

#include "degseq/classification.hpp"
#include "degseq/graphicality.hpp"

namespace degseq {

std::string to_string(const creation_sequence& c) {
    std::string out;
    out.reserve(c.size());
    for (creation_step s : c)
        out.push_back(static_cast<char>(s));
    return out;
}

creation_sequence creation_from_string(const std::string& text) {
    creation_sequence c;
    c.reserve(text.size());
    for (char ch : text) {
        if (ch == 'I')
            c.push_back(creation_step::isolated);
        else if (ch == 'D')
            c.push_back(creation_step::dominating);
        else
            throw parse_error(std::string("creation step must be I or D, got '") + ch + "'");
    }
    return c;
}

labeled_graph build_threshold_graph(const creation_sequence& c) {
    if (c.empty())
        throw empty_creation("creation sequence has no steps");
    const int n = static_cast<int>(c.size());

    // grow on temporary ids 1..n in creation order
    std::vector<std::pair<int, int>> raw_edges;
    for (int v = 2; v <= n; ++v)
        if (c[static_cast<size_t>(v - 1)] == creation_step::dominating)
            for (int u = 1; u < v; ++u)
                raw_edges.emplace_back(u, v);

    std::vector<int> degree(static_cast<size_t>(n) + 1, 0);
    for (const auto& [u, v] : raw_edges) {
        ++degree[static_cast<size_t>(u)];
        ++degree[static_cast<size_t>(v)];
    }

    // relabel by descending degree, creation order on ties
    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 1);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return degree[static_cast<size_t>(a)] > degree[static_cast<size_t>(b)];
    });
    std::vector<int> label(static_cast<size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i)
        label[static_cast<size_t>(order[static_cast<size_t>(i)])] = i + 1;

    for (auto& [u, v] : raw_edges) {
        u = label[static_cast<size_t>(u)];
        v = label[static_cast<size_t>(v)];
    }
    return labeled_graph(n, std::move(raw_edges));
}

namespace {

void check_graphic(const degree_sequence& d) {
    if (!is_graphic(d))
        throw not_graphic("sequence is not graphic");
}

} // namespace

bool is_split_sequence(const degree_sequence& d) {
    check_graphic(d);
    const eg_profile p = compute_eg_profile(d);
    return p.delta[static_cast<size_t>(p.m)] == 0;
}

bool is_threshold_sequence(const degree_sequence& d) {
    check_graphic(d);
    const eg_profile p = compute_eg_profile(d);
    for (int k = 1; k <= p.m; ++k)
        if (p.delta[static_cast<size_t>(k)] != 0)
            return false;
    return true;
}

std::vector<int> eg_zero_list(const degree_sequence& d) {
    check_graphic(d);
    return compute_eg_profile(d).eg_zeros;
}

canonical_skeleton compute_skeleton(const degree_sequence& d) {
    check_graphic(d);
    const int n = d.n();
    const eg_profile prof = compute_eg_profile(d);
    const std::vector<int>& zeros = prof.eg_zeros;

    canonical_skeleton sk;
    sk.p = zeros.back();
    sk.q = 0;
    for (int k = 0; k <= n; ++k)
        if (prof.delta[static_cast<size_t>(k)] <= 1)
            sk.q = k;
    sk.split = prof.delta[static_cast<size_t>(prof.m)] == 0;

    // Vertices past every block whose degree equals some Erdos-Gallai zero
    // form single-vertex components on the independent side; one such with
    // degree t sits just inside the block ending at position t.
    auto singletons_at = [&](int t) {
        std::vector<int> s;
        for (int v = sk.p + 1; v <= n; ++v)
            if (d.term(v) == t)
                s.push_back(v);
        return s;
    };

    for (size_t z = 0; z + 1 < zeros.size(); ++z) {
        const int t = zeros[z];
        const int t_next = zeros[z + 1];
        for (int v : singletons_at(t))
            sk.blocks.push_back(skeleton_component{{}, {v}});
        skeleton_component block;
        for (int v = t + 1; v <= t_next; ++v)
            block.clique.push_back(v);
        for (int v = sk.p + 1; v <= n; ++v)
            if (d.term(v) > t && d.term(v) < t_next)
                block.independent.push_back(v);
        sk.blocks.push_back(std::move(block));
    }
    for (int v : singletons_at(sk.p))
        sk.blocks.push_back(skeleton_component{{}, {v}});

    if (!sk.split) {
        // leftover vertices: past every block, degree above the last zero
        for (int v = sk.p + 1; v <= n; ++v)
            if (d.term(v) > sk.p)
                sk.tail_vertices.push_back(v);
        // A tail vertex v sits on the isolated side of the union envelope
        // exactly when some index k with slack at most one has d_v <= k < v:
        // joining v to any later tail vertex would push the k-th left-hand
        // side past a right-hand side that loses one for each endpoint whose
        // degree is at most k.  The rule is monotone in v, so the clique side
        // stays an initial segment of the tail.
        auto union_isolated = [&](int v) {
            for (int k = d.term(v); k < v; ++k)
                if (prof.delta[static_cast<size_t>(k)] <= 1)
                    return true;
            return false;
        };
        for (int v : sk.tail_vertices) {
            if (v <= sk.q)
                sk.tail_intersection_clique.push_back(v);
            else
                sk.tail_intersection_independent.push_back(v);
            if (union_isolated(v))
                sk.tail_union_independent.push_back(v);
            else
                sk.tail_union_clique.push_back(v);
        }
        if (sk.tail_vertices.empty())
            throw internal_error("non-split sequence produced an empty tail");
    }

    // every vertex must land in exactly one part
    std::vector<int> seen(static_cast<size_t>(n) + 1, 0);
    for (const skeleton_component& b : sk.blocks) {
        for (int v : b.clique)
            ++seen[static_cast<size_t>(v)];
        for (int v : b.independent)
            ++seen[static_cast<size_t>(v)];
    }
    for (int v : sk.tail_vertices)
        ++seen[static_cast<size_t>(v)];
    for (int v = 1; v <= n; ++v)
        if (seen[static_cast<size_t>(v)] != 1)
            throw internal_error("skeleton does not partition the vertex set");

    return sk;
}

namespace {

// Composition factors outermost first, as (step, count) runs; reading the
// runs innermost first yields the creation sequence.
creation_sequence creation_from_runs(const std::vector<std::pair<creation_step, int>>& runs) {
    creation_sequence c;
    for (auto it = runs.rbegin(); it != runs.rend(); ++it)
        for (int i = 0; i < it->second; ++i)
            c.push_back(it->first);
    return c;
}

labeled_graph envelope_graph(const degree_sequence& d, bool intersection) {
    const classification_matrix matrix = classify_pairs(d);
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= d.n(); ++i)
        for (int j = i + 1; j <= d.n(); ++j) {
            const pair_class c = matrix.at(i, j);
            const bool keep = intersection ? c == pair_class::forced_edge
                                           : c != pair_class::forced_non_edge;
            if (keep)
                edges.emplace_back(i, j);
        }
    return labeled_graph(d.n(), std::move(edges));
}

} // namespace

envelope_result intersection_envelope(const degree_sequence& d) {
    const canonical_skeleton sk = compute_skeleton(d);
    std::vector<std::pair<creation_step, int>> runs;
    for (const skeleton_component& b : sk.blocks) {
        runs.emplace_back(creation_step::isolated, static_cast<int>(b.independent.size()));
        runs.emplace_back(creation_step::dominating, static_cast<int>(b.clique.size()));
    }
    if (!sk.split) {
        runs.emplace_back(creation_step::isolated,
                          static_cast<int>(sk.tail_intersection_independent.size()));
        runs.emplace_back(creation_step::dominating,
                          static_cast<int>(sk.tail_intersection_clique.size()));
    }
    return envelope_result{envelope_graph(d, true),
                           creation_from_runs(runs)};
}

envelope_result union_envelope(const degree_sequence& d) {
    const canonical_skeleton sk = compute_skeleton(d);
    std::vector<std::pair<creation_step, int>> runs;
    for (const skeleton_component& b : sk.blocks) {
        runs.emplace_back(creation_step::dominating, static_cast<int>(b.clique.size()));
        runs.emplace_back(creation_step::isolated, static_cast<int>(b.independent.size()));
    }
    if (!sk.split) {
        runs.emplace_back(creation_step::dominating,
                          static_cast<int>(sk.tail_union_clique.size()));
        runs.emplace_back(creation_step::isolated,
                          static_cast<int>(sk.tail_union_independent.size()));
    }
    return envelope_result{envelope_graph(d, false),
                           creation_from_runs(runs)};
}

} // namespace degseq
