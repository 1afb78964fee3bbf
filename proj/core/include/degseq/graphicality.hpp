#pragma once

#include <vector>

#include "degseq/sequence.hpp"

namespace degseq {

// Erdos-Gallai profile of a degree sequence d = (d_1 >= ... >= d_n):
//   lhs[k]   = d_1 + ... + d_k
//   rhs[k]   = k(k-1) + sum_{l>k} min(k, d_l)
//   delta[k] = rhs[k] - lhs[k]
// for k = 0..n, with lhs[0] = rhs[0] = delta[0] = 0.  m is the largest i
// with d_i >= i-1 (0 for the empty sequence); d is graphic iff its sum is
// even and delta[k] >= 0 for all k in 1..m.  eg_zeros lists 0 followed by
// every k in 1..m with delta[k] = 0, ascending.
struct eg_profile {
    std::vector<long long> lhs;
    std::vector<long long> rhs;
    std::vector<long long> delta;
    int m = 0;
    std::vector<int> eg_zeros;
};

eg_profile compute_eg_profile(const degree_sequence& d);

// Total graphicality test: accepts any integer list.  Negative terms and
// odd sums fail; otherwise the list is sorted nonincreasing and the
// Erdos-Gallai inequalities are checked for k = 1..m.
bool is_graphic(const int_list& raw);

bool is_graphic(const degree_sequence& d);

// Degree sequence of the complement graph: term i of the result is
// n - 1 - d_{n+1-i}, so result label i corresponds to input label n+1-i.
degree_sequence complement_sequence(const degree_sequence& d);

} // namespace degseq
