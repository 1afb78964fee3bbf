#pragma once

#include <string>
#include <string_view>

#include "degseq/sequence.hpp"

namespace degseq {

// Parses comma-separated terms, each either an integer or value^multiplicity
// with multiplicity >= 1: "2,2,1,1,0" or "15^5,6^7,3^7".  Spaces around
// tokens are ignored.  Throws parse_error on anything else; validation
// (sortedness, ranges) is the caller's business.
int_list parse_sequence(std::string_view text);

// "2,2,1,1,0"; empty string for the empty list.
std::string format_sequence(const int_list& terms);

} // namespace degseq
