#include "degseq/graphicality.hpp"

#include <algorithm>

namespace degseq {

namespace {

// Profile of an already-sorted nonincreasing list; shared by the
// degree_sequence entry point and the total is_graphic test.
eg_profile profile_of_sorted(const int_list& d) {
    const int n = static_cast<int>(d.size());
    eg_profile p;
    p.lhs.assign(static_cast<size_t>(n) + 1, 0);
    p.rhs.assign(static_cast<size_t>(n) + 1, 0);
    p.delta.assign(static_cast<size_t>(n) + 1, 0);

    // suffix[i] = d_i + ... + d_n (1-based), suffix[n+1] = 0
    std::vector<long long> suffix(static_cast<size_t>(n) + 2, 0);
    for (int i = n; i >= 1; --i)
        suffix[static_cast<size_t>(i)] =
            suffix[static_cast<size_t>(i) + 1] + d[static_cast<size_t>(i - 1)];

    for (int k = 1; k <= n; ++k) {
        p.lhs[static_cast<size_t>(k)] =
            p.lhs[static_cast<size_t>(k - 1)] + d[static_cast<size_t>(k - 1)];
        // first position l > k with d_l < k; entries before it contribute k each
        const auto begin = d.begin() + k;
        const auto split = std::lower_bound(begin, d.end(), k,
                                            [](int term, int value) { return term >= value; });
        const long long big = split - begin;
        const long long small_sum = suffix[static_cast<size_t>(split - d.begin()) + 1];
        p.rhs[static_cast<size_t>(k)] =
            static_cast<long long>(k) * (k - 1) + big * k + small_sum;
        p.delta[static_cast<size_t>(k)] =
            p.rhs[static_cast<size_t>(k)] - p.lhs[static_cast<size_t>(k)];
    }

    p.m = 0;
    for (int i = 1; i <= n; ++i) {
        if (d[static_cast<size_t>(i - 1)] >= i - 1)
            p.m = i;
        else
            break;
    }

    p.eg_zeros.push_back(0);
    for (int k = 1; k <= p.m; ++k)
        if (p.delta[static_cast<size_t>(k)] == 0)
            p.eg_zeros.push_back(k);
    return p;
}

} // namespace

eg_profile compute_eg_profile(const degree_sequence& d) {
    return profile_of_sorted(d.terms());
}

bool is_graphic(const int_list& raw) {
    long long sum = 0;
    for (int t : raw) {
        if (t < 0)
            return false;
        sum += t;
    }
    if (sum % 2 != 0)
        return false;
    int_list sorted = raw;
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    const eg_profile p = profile_of_sorted(sorted);
    for (int k = 1; k <= p.m; ++k)
        if (p.delta[static_cast<size_t>(k)] < 0)
            return false;
    return true;
}

bool is_graphic(const degree_sequence& d) {
    if (d.sum() % 2 != 0)
        return false;
    const eg_profile p = compute_eg_profile(d);
    for (int k = 1; k <= p.m; ++k)
        if (p.delta[static_cast<size_t>(k)] < 0)
            return false;
    return true;
}

degree_sequence complement_sequence(const degree_sequence& d) {
    const int n = d.n();
    int_list out(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i)
        out[static_cast<size_t>(i - 1)] = n - 1 - d.term(n + 1 - i);
    return validate_sequence(out);
}

} // namespace degseq
