#pragma once

#include <vector>

#include "degseq/sequence.hpp"

namespace degseq {

// These operations work on partitions: nonincreasing lists of nonnegative
// integers.  Unlike degree_sequence there is no upper bound on the terms,
// since moves in the dominance order may push a term past n-1 (the result
// is then simply not graphic).  Non-partition arguments throw
// invalid_partition.

// a majorizes b: equal length, equal sum, and every prefix sum of a is at
// least the matching prefix sum of b.  Length or sum mismatch gives false.
bool majorizes(const int_list& a, const int_list& b);

// All partitions one unit transformation above b: subtract 1 at some
// position q, add 1 at some earlier position p, keep the result a
// partition.  Sorted ascending as lists; no duplicates.
std::vector<int_list> unit_transformations(const int_list& b);

// A unit transformation together with its positions, 1-based.
struct cover_step {
    int_list sequence;
    int p = 0;
    int q = 0;
};

// The covers of b in the dominance order: unit transformations with
// q = p + 1 or b_p = b_q (Brylawski's characterization).  Sorted ascending
// by result.
std::vector<cover_step> elementary_covers(const int_list& b);

struct lift_step {
    int p = 0; // position increased, 1-based
    int q = 0; // position decreased
    bool operator==(const lift_step&) const = default;
};

// Result of lift_to_decomposable: a graphic target with delta_k = 0 for
// some k in 1..m, reached from the input by the recorded cover steps.
// steps is empty when the input already qualifies.
struct lift_result {
    degree_sequence target;
    std::vector<lift_step> steps;
};

// Climbs from a graphic sequence with some delta_k = 1 (k >= 1) to the
// nearest split-or-decomposable sequence along at most three cover steps,
// each validated to be a cover with a graphic, nonincreasing intermediate.
// Returns the input itself when it already has a positive Erdos-Gallai
// zero.  Throws not_graphic, or no_forced_structure when every positive k
// has delta_k >= 2.
lift_result lift_to_decomposable(const degree_sequence& e);

} // namespace degseq
