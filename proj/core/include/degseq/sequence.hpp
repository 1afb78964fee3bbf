#pragma once

#include <vector>

#include "degseq/errors.hpp"

namespace degseq {

// Raw integer list; may be unsorted or out of range until validated.
using int_list = std::vector<int>;

// A validated degree sequence: terms sorted nonincreasing, each term in
// [0, n-1] where n is the length.  Vertex labels are 1..n and label i is
// permanently bound to term i; lengths 0 and 1 are legal.  Instances are
// immutable once constructed, so sharing across threads is safe.
class degree_sequence {
  public:
    // Validates `raw` and wraps it.  Throws not_sorted or term_out_of_range.
    static degree_sequence validate(int_list raw);

    int n() const { return static_cast<int>(terms_.size()); }

    // Degree of vertex `label`, 1-based.
    int term(int label) const { return terms_[static_cast<size_t>(label - 1)]; }

    const int_list& terms() const { return terms_; }

    long long sum() const;

    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    bool operator==(const degree_sequence& other) const = default;

  private:
    explicit degree_sequence(int_list terms) : terms_(std::move(terms)) {}

    int_list terms_;
};

// Free-function form of degree_sequence::validate.
degree_sequence validate_sequence(const int_list& raw);

} // namespace degseq
