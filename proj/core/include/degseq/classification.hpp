#pragma once

#include <cstddef>
#include <vector>

#include "degseq/graphicality.hpp"
#include "degseq/sequence.hpp"

namespace degseq {

// Status of a vertex pair {i,j} across all realizations of a degree
// sequence: present in every one, absent from every one, or neither.
enum class pair_class {
    forced_edge,
    forced_non_edge,
    unforced,
};

// Symmetric n x n table of pair_class values, one per unordered pair.
class classification_matrix {
  public:
    explicit classification_matrix(int n)
        : n_(n), entries_(static_cast<size_t>(n) * (n > 0 ? n - 1 : 0) / 2,
                          pair_class::unforced) {}

    int n() const { return n_; }
    size_t pair_count() const { return entries_.size(); }

    pair_class at(int i, int j) const { return entries_[index(i, j)]; }
    void set(int i, int j, pair_class c) { entries_[index(i, j)] = c; }

    bool operator==(const classification_matrix& other) const = default;

  private:
    size_t index(int i, int j) const;

    int n_ = 0;
    std::vector<pair_class> entries_;
};

// d with terms i and j each raised by one, order untouched (may be
// nonmonotone); the input positions keep their meaning.  1 <= i < j <= n.
int_list perturbed_plus(const degree_sequence& d, int i, int j);

// d with terms i and j each lowered by one; entries may reach -1.
int_list perturbed_minus(const degree_sequence& d, int i, int j);

// Pair classification by perturbation: {i,j} is a forced edge iff
// perturbed_plus(d,i,j) is not graphic, and a forced non-edge iff
// perturbed_minus(d,i,j) is not graphic.  Requires d graphic.
pair_class classify_pair_via_graphicality(const degree_sequence& d, int i, int j);

// Pair classification from the Erdos-Gallai profile alone.  {i,j} with
// i < j is a forced edge iff some k in 0..n has
//   (1) delta_k <= 1 and j <= k, or
//   (2) delta_k  = 0 and i <= k < j and k <= d_j;
// and a forced non-edge iff some k in 0..n has
//   (3) delta_k <= 1 and d_i <= k < i, or
//   (4) delta_k  = 0 and k < i and d_j <= k < d_i.
// Lowering d_i and d_j drops the k-th right-hand side by one for each of
// the two terms that is at most k, so slack 1 suffices once k >= d_i.
// Requires d graphic.
pair_class classify_pair_via_deltas(const degree_sequence& d, int i, int j);
pair_class classify_pair_via_deltas(const degree_sequence& d, const eg_profile& profile,
                                    int i, int j);

enum class classify_method {
    deltas,
    graphicality,
};

// Classification of every pair; the delta method shares one profile across
// all pairs.  Requires d graphic.
classification_matrix classify_pairs(const degree_sequence& d,
                                     classify_method method = classify_method::deltas);

} // namespace degseq
