#pragma once

#include <stdexcept>
#include <string>

namespace degseq {

// Base class for everything this library throws on purpose.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input is not sorted in nonincreasing order.
struct not_sorted : error {
    using error::error;
};

// A term is negative or too large for the number of vertices.
struct term_out_of_range : error {
    using error::error;
};

// Vertex pair {i,j} is out of range or not a pair at all.
struct bad_pair : error {
    using error::error;
};

// Operation requires a graphic sequence and the input is not one.
struct not_graphic : error {
    using error::error;
};

// Input exceeds a size cap (exhaustive enumeration, overflow guard).
struct too_large : error {
    using error::error;
};

// A creation sequence must hold at least one step.
struct empty_creation : error {
    using error::error;
};

// Malformed sequence text.
struct parse_error : error {
    using error::error;
};

// A list that must be a partition (nonincreasing, nonnegative) is not,
// or a clique/independent-set assignment violates its degree bounds.
struct invalid_partition : error {
    using error::error;
};

// lift_to_decomposable needs some positive k with delta_k <= 1.
struct no_forced_structure : error {
    using error::error;
};

// A consistency check that should be unreachable fired; indicates a bug.
struct internal_error : error {
    using error::error;
};

} // namespace degseq
