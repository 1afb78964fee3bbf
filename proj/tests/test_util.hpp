#pragma once

// Shared generators for exhaustive small-n sweeps.

#include <vector>

#include "degseq/graphicality.hpp"
#include "degseq/sequence.hpp"

namespace sweep {

inline void nonincreasing_rec(int length, int cap, degseq::int_list& prefix,
                              std::vector<degseq::int_list>& out) {
    if (static_cast<int>(prefix.size()) == length) {
        out.push_back(prefix);
        return;
    }
    const int high = prefix.empty() ? cap : prefix.back();
    for (int t = high; t >= 0; --t) {
        prefix.push_back(t);
        nonincreasing_rec(length, cap, prefix, out);
        prefix.pop_back();
    }
}

// Every nonincreasing list of the given length with terms in [0, cap].
inline std::vector<degseq::int_list> nonincreasing_lists(int length, int cap) {
    std::vector<degseq::int_list> out;
    degseq::int_list prefix;
    nonincreasing_rec(length, cap, prefix, out);
    return out;
}

// Every graphic degree sequence of length exactly n.
inline std::vector<degseq::degree_sequence> graphic_sequences(int n) {
    std::vector<degseq::degree_sequence> out;
    for (const degseq::int_list& terms : nonincreasing_lists(n, n > 0 ? n - 1 : 0))
        if (degseq::is_graphic(terms))
            out.push_back(degseq::validate_sequence(terms));
    return out;
}

// Every partition of `total` into exactly `length` parts, zeros allowed.
inline std::vector<degseq::int_list> partitions_of(int total, int length) {
    std::vector<degseq::int_list> out;
    for (degseq::int_list& terms : nonincreasing_lists(length, total)) {
        long long sum = 0;
        for (int t : terms)
            sum += t;
        if (sum == total)
            out.push_back(std::move(terms));
    }
    return out;
}

} // namespace sweep
