#include "degseq/dominance.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <set>
#include <string>

#include "degseq/graphicality.hpp"

namespace degseq {

namespace {

void require_partition(const int_list& v, const char* who) {
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0)
            throw invalid_partition(std::string(who) + ": negative term");
        if (i > 0 && v[i - 1] < v[i])
            throw invalid_partition(std::string(who) + ": terms must be nonincreasing");
    }
}

// maximal runs of equal values: (value, first, last), positions 1-based
struct run {
    int value = 0;
    int first = 0;
    int last = 0;
};

std::vector<run> runs_of(const int_list& v) {
    std::vector<run> runs;
    for (size_t i = 0; i < v.size(); ++i) {
        if (!runs.empty() && runs.back().value == v[i])
            runs.back().last = static_cast<int>(i) + 1;
        else
            runs.push_back({v[i], static_cast<int>(i) + 1, static_cast<int>(i) + 1});
    }
    return runs;
}

// Every unit transformation adds 1 at the first position of some run and
// subtracts 1 at the last position of a later (or the same) run; anything
// else breaks the nonincreasing order.
std::vector<cover_step> moves_above(const int_list& b, bool covers_only) {
    std::vector<cover_step> out;
    const std::vector<run> runs = runs_of(b);
    for (size_t i = 0; i < runs.size(); ++i)
        for (size_t j = i; j < runs.size(); ++j) {
            const int p = runs[i].first;
            const int q = runs[j].last;
            if (p >= q || b[static_cast<size_t>(q - 1)] < 1)
                continue;
            if (covers_only && q != p + 1 && b[static_cast<size_t>(p - 1)] != b[static_cast<size_t>(q - 1)])
                continue;
            int_list next = b;
            ++next[static_cast<size_t>(p - 1)];
            --next[static_cast<size_t>(q - 1)];
            out.push_back(cover_step{std::move(next), p, q});
        }
    std::sort(out.begin(), out.end(),
              [](const cover_step& a, const cover_step& b) { return a.sequence < b.sequence; });
    return out;
}

} // namespace

bool majorizes(const int_list& a, const int_list& b) {
    require_partition(a, "majorizes");
    require_partition(b, "majorizes");
    if (a.size() != b.size())
        return false;
    long long prefix_a = 0, prefix_b = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        prefix_a += a[i];
        prefix_b += b[i];
        if (prefix_a < prefix_b)
            return false;
    }
    return prefix_a == prefix_b;
}

std::vector<int_list> unit_transformations(const int_list& b) {
    require_partition(b, "unit_transformations");
    std::vector<int_list> out;
    for (cover_step& step : moves_above(b, false))
        out.push_back(std::move(step.sequence));
    return out;
}

std::vector<cover_step> elementary_covers(const int_list& b) {
    require_partition(b, "elementary_covers");
    return moves_above(b, true);
}

namespace {

int first_equal(const int_list& v, int value) {
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] == value)
            return static_cast<int>(i) + 1;
    return 0;
}

int last_equal(const int_list& v, int value) {
    for (size_t i = v.size(); i > 0; --i)
        if (v[i - 1] == value)
            return static_cast<int>(i);
    return 0;
}

// One cover step of the lift, applied in place with full validation.
void apply_lift_step(int_list& v, int p, int q, std::vector<lift_step>& steps) {
    if (p < 1 || q <= p || q > static_cast<int>(v.size()))
        throw internal_error("lift step positions out of order");
    if (q != p + 1 && v[static_cast<size_t>(p - 1)] != v[static_cast<size_t>(q - 1)])
        throw internal_error("lift step is not a cover");
    if (v[static_cast<size_t>(q - 1)] < 1)
        throw internal_error("lift step would drive a term negative");
    ++v[static_cast<size_t>(p - 1)];
    --v[static_cast<size_t>(q - 1)];
    for (size_t i = 1; i < v.size(); ++i)
        if (v[i - 1] < v[i])
            throw internal_error("lift step broke the nonincreasing order");
    if (!is_graphic(v))
        throw internal_error("lift intermediate is not graphic");
    steps.push_back(lift_step{p, q});
}

bool has_positive_zero(const int_list& v) {
    const eg_profile prof = compute_eg_profile(validate_sequence(v));
    return prof.eg_zeros.size() > 1;
}

// Last resort: breadth-first search of the cover upset to depth three.
// The direct construction below is expected to make this unreachable.
lift_result lift_by_search(const degree_sequence& e) {
    std::fprintf(stderr,
                 "lift_to_decomposable: direct construction failed; "
                 "falling back to exhaustive search\n");
    struct node {
        int_list seq;
        std::vector<lift_step> steps;
    };
    std::deque<node> queue{{e.terms(), {}}};
    std::set<int_list> seen{e.terms()};
    while (!queue.empty()) {
        node cur = std::move(queue.front());
        queue.pop_front();
        if (cur.steps.size() >= 3)
            continue;
        for (cover_step& step : elementary_covers(cur.seq)) {
            if (!is_graphic(step.sequence) || !seen.insert(step.sequence).second)
                continue;
            node next{std::move(step.sequence), cur.steps};
            next.steps.push_back(lift_step{step.p, step.q});
            if (has_positive_zero(next.seq))
                return lift_result{validate_sequence(next.seq), std::move(next.steps)};
            queue.push_back(std::move(next));
        }
    }
    throw internal_error("no decomposable sequence within three covers");
}

} // namespace

lift_result lift_to_decomposable(const degree_sequence& e) {
    if (!is_graphic(e))
        throw not_graphic("sequence is not graphic");
    const eg_profile prof = compute_eg_profile(e);
    if (prof.eg_zeros.size() > 1)
        return lift_result{e, {}};

    int k = 0;
    for (int i = 1; i <= e.n(); ++i)
        if (prof.delta[static_cast<size_t>(i)] == 1) {
            k = i;
            break;
        }
    if (k == 0)
        throw no_forced_structure("every positive k has delta_k >= 2");
    if (k > prof.m || k >= e.n())
        throw internal_error("delta_k = 1 outside 1..m");

    // Raise the smallest degree among the first k vertices, lower the
    // largest degree after them.  delta_k is odd, so that largest degree
    // exceeds k; the unit move lands exactly on delta_k = 0.
    const int db = e.term(k);
    const int dc = e.term(k + 1);
    if (dc <= k)
        throw internal_error("no vertex of degree above k after position k");
    const auto count = [&](int value) {
        return std::count(e.terms().begin(), e.terms().end(), value);
    };
    const long long mult_b = count(db);
    const long long mult_c = count(dc);

    int_list cur = e.terms();
    std::vector<lift_step> steps;
    try {
        if (db == dc) {
            apply_lift_step(cur, first_equal(cur, db), last_equal(cur, db), steps);
        } else if (mult_b == 1 && mult_c == 1) {
            apply_lift_step(cur, k, k + 1, steps);
        } else if (mult_b > 1 && (mult_c == 1 || db == dc + 1)) {
            apply_lift_step(cur, first_equal(cur, db), k, steps);
            apply_lift_step(cur, first_equal(cur, db - 1), last_equal(cur, dc), steps);
        } else if (mult_b == 1 && mult_c > 1) {
            apply_lift_step(cur, k + 1, last_equal(cur, dc), steps);
            apply_lift_step(cur, first_equal(cur, db), last_equal(cur, dc + 1), steps);
        } else {
            apply_lift_step(cur, first_equal(cur, db), k, steps);
            apply_lift_step(cur, first_equal(cur, dc), last_equal(cur, dc), steps);
            apply_lift_step(cur, first_equal(cur, db - 1), last_equal(cur, dc + 1), steps);
        }
        if (!has_positive_zero(cur))
            throw internal_error("lift target has no positive Erdos-Gallai zero");
    } catch (const internal_error&) {
        return lift_by_search(e);
    }
    return lift_result{validate_sequence(cur), std::move(steps)};
}

} // namespace degseq
