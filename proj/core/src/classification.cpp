#include "degseq/classification.hpp"

#include <string>

namespace degseq {

namespace {

void check_pair(const degree_sequence& d, int i, int j) {
    if (i < 1 || j < 1 || i == j || i > d.n() || j > d.n())
        throw bad_pair("{" + std::to_string(i) + "," + std::to_string(j) +
                       "} is not a vertex pair for n = " + std::to_string(d.n()));
}

void check_graphic(const degree_sequence& d) {
    if (!is_graphic(d))
        throw not_graphic("sequence is not graphic");
}

} // namespace

size_t classification_matrix::index(int i, int j) const {
    if (i > j)
        std::swap(i, j);
    if (i < 1 || j > n_ || i == j)
        throw bad_pair("{" + std::to_string(i) + "," + std::to_string(j) +
                       "} is not a vertex pair for n = " + std::to_string(n_));
    // pairs (i,*) occupy a row of length n-i starting after the first i-1 rows
    const size_t row_start = static_cast<size_t>(i - 1) * n_ -
                             static_cast<size_t>(i) * (i - 1) / 2;
    return row_start + static_cast<size_t>(j - i - 1);
}

int_list perturbed_plus(const degree_sequence& d, int i, int j) {
    check_pair(d, i, j);
    int_list out = d.terms();
    ++out[static_cast<size_t>(i - 1)];
    ++out[static_cast<size_t>(j - 1)];
    return out;
}

int_list perturbed_minus(const degree_sequence& d, int i, int j) {
    check_pair(d, i, j);
    int_list out = d.terms();
    --out[static_cast<size_t>(i - 1)];
    --out[static_cast<size_t>(j - 1)];
    return out;
}

pair_class classify_pair_via_graphicality(const degree_sequence& d, int i, int j) {
    check_graphic(d);
    const bool edge_forced = !is_graphic(perturbed_plus(d, i, j));
    const bool non_edge_forced = !is_graphic(perturbed_minus(d, i, j));
    if (edge_forced && non_edge_forced)
        throw internal_error("pair classified as both forced edge and forced non-edge");
    if (edge_forced)
        return pair_class::forced_edge;
    if (non_edge_forced)
        return pair_class::forced_non_edge;
    return pair_class::unforced;
}

pair_class classify_pair_via_deltas(const degree_sequence& d, const eg_profile& profile,
                                    int i, int j) {
    check_pair(d, i, j);
    if (i > j)
        std::swap(i, j);
    const int n = d.n();
    const int di = d.term(i);
    const int dj = d.term(j);

    bool edge_forced = false;
    bool non_edge_forced = false;
    for (int k = 0; k <= n; ++k) {
        const long long delta = profile.delta[static_cast<size_t>(k)];
        if (delta > 1)
            continue;
        if (j <= k)
            edge_forced = true;
        if (delta == 0 && i <= k && k < j && k <= dj)
            edge_forced = true;
        // Non-strict di <= k: when k = di both decremented terms lower the
        // right-hand side, so slack 1 already forces the non-edge.
        if (di <= k && k < i)
            non_edge_forced = true;
        if (delta == 0 && k < i && dj <= k && k < di)
            non_edge_forced = true;
    }
    if (edge_forced && non_edge_forced)
        throw internal_error("pair classified as both forced edge and forced non-edge");
    if (edge_forced)
        return pair_class::forced_edge;
    if (non_edge_forced)
        return pair_class::forced_non_edge;
    return pair_class::unforced;
}

pair_class classify_pair_via_deltas(const degree_sequence& d, int i, int j) {
    check_graphic(d);
    return classify_pair_via_deltas(d, compute_eg_profile(d), i, j);
}

classification_matrix classify_pairs(const degree_sequence& d, classify_method method) {
    check_graphic(d);
    const int n = d.n();
    classification_matrix matrix(n);
    if (method == classify_method::deltas) {
        const eg_profile profile = compute_eg_profile(d);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                matrix.set(i, j, classify_pair_via_deltas(d, profile, i, j));
    } else {
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                matrix.set(i, j, classify_pair_via_graphicality(d, i, j));
    }
    return matrix;
}

} // namespace degseq
