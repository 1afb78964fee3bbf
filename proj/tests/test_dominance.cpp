#include <doctest.h>

#include <algorithm>
#include <set>

#include "degseq/classification.hpp"
#include "degseq/dominance.hpp"
#include "degseq/envelope.hpp"
#include "degseq/graphicality.hpp"
#include "degseq/parse.hpp"
#include "degseq/sequence.hpp"
#include "test_util.hpp"

using namespace degseq;

TEST_CASE("majorizes on fixed examples") {
    CHECK(majorizes({4, 1, 1}, {2, 2, 2}));
    CHECK_FALSE(majorizes({2, 2, 2}, {4, 1, 1}));
    CHECK(majorizes({3, 1, 1, 1}, {3, 1, 1, 1}));
    CHECK_FALSE(majorizes({3, 1, 1, 1}, {2, 2, 2, 0}));
    CHECK_FALSE(majorizes({2, 2, 2, 0}, {3, 1, 1, 1}));
    CHECK_FALSE(majorizes({2, 1}, {2, 1, 0}));   // length mismatch
    CHECK_FALSE(majorizes({3, 1}, {2, 1}));      // sum mismatch
    CHECK(majorizes({}, {}));
    CHECK_THROWS_AS(majorizes({1, 2}, {2, 1}), invalid_partition);
    CHECK_THROWS_AS(majorizes({2, 1}, {1, 2}), invalid_partition);
    CHECK_THROWS_AS(majorizes({0, -1}, {0, -1}), invalid_partition);
}

TEST_CASE("unit transformations on fixed examples") {
    CHECK(unit_transformations({3, 3, 3, 3, 2}) ==
          std::vector<int_list>{{4, 3, 3, 2, 2}, {4, 3, 3, 3, 1}});
    CHECK(unit_transformations({1, 1}) == std::vector<int_list>{{2, 0}});
    CHECK(unit_transformations({2, 0}).empty());
    CHECK(unit_transformations({2, 1, 1}) == std::vector<int_list>{{2, 2, 0}, {3, 1, 0}});
    CHECK(unit_transformations({}).empty());
    CHECK_THROWS_AS(unit_transformations({1, 2}), invalid_partition);
}

TEST_CASE("elementary covers on fixed examples") {
    const std::vector<cover_step> one = elementary_covers({3, 3, 3, 3, 2});
    REQUIRE(one.size() == 1);
    CHECK(one[0].sequence == int_list{4, 3, 3, 2, 2});
    CHECK(one[0].p == 1);
    CHECK(one[0].q == 4);

    const std::vector<cover_step> pair = elementary_covers({2, 2});
    REQUIRE(pair.size() == 1);
    CHECK(pair[0].sequence == int_list{3, 1});
    CHECK(pair[0].p == 1);
    CHECK(pair[0].q == 2);

    const std::vector<cover_step> chain = elementary_covers({2, 1, 0});
    REQUIRE(chain.size() == 1);
    CHECK(chain[0].sequence == int_list{3, 0, 0});

    CHECK(elementary_covers({1, 1}).size() == 1);
    CHECK(elementary_covers({2, 0}).empty());

    // The non-elementary unit transformation is not a cover.
    for (const cover_step& c : elementary_covers({3, 3, 3, 3, 2}))
        CHECK(c.sequence != int_list{4, 3, 3, 3, 1});
}

TEST_CASE("majorization equals reachability by unit transformations") {
    for (const auto& [total, length] : {std::pair{8, 4}, std::pair{10, 5}}) {
        const std::vector<int_list> family = sweep::partitions_of(total, length);
        for (const int_list& b : family) {
            std::set<int_list> reached{b};
            std::vector<int_list> frontier{b};
            while (!frontier.empty()) {
                const int_list cur = std::move(frontier.back());
                frontier.pop_back();
                for (int_list& next : unit_transformations(cur))
                    if (reached.insert(next).second)
                        frontier.push_back(std::move(next));
            }
            for (const int_list& a : family)
                CHECK(majorizes(a, b) == (reached.count(a) > 0));
        }
    }
}

TEST_CASE("covers are exactly the minimal strict majorizers") {
    for (const auto& [total, length] : {std::pair{8, 4}, std::pair{9, 4}}) {
        const std::vector<int_list> family = sweep::partitions_of(total, length);
        for (const int_list& b : family) {
            std::vector<int_list> superiors;
            for (const int_list& a : family)
                if (a != b && majorizes(a, b))
                    superiors.push_back(a);
            std::vector<int_list> minimal;
            for (const int_list& a : superiors) {
                bool intermediate = false;
                for (const int_list& c : superiors)
                    if (c != a && majorizes(a, c))
                        intermediate = true;
                if (!intermediate)
                    minimal.push_back(a);
            }
            std::sort(minimal.begin(), minimal.end());
            std::vector<int_list> listed;
            for (const cover_step& c : elementary_covers(b))
                listed.push_back(c.sequence);
            CHECK(listed == minimal);
        }
    }
}

TEST_CASE("cover steps satisfy the adjacency-or-equality rule") {
    for (const auto& [total, length] : {std::pair{8, 4}, std::pair{10, 5}}) {
        for (const int_list& b : sweep::partitions_of(total, length))
            for (const cover_step& c : elementary_covers(b)) {
                CHECK((c.q == c.p + 1 ||
                       b[static_cast<size_t>(c.p - 1)] == b[static_cast<size_t>(c.q - 1)]));
                int_list moved = b;
                moved[static_cast<size_t>(c.p - 1)] += 1;
                moved[static_cast<size_t>(c.q - 1)] -= 1;
                CHECK(moved == c.sequence);
                CHECK(majorizes(c.sequence, b));
            }
    }
}

TEST_CASE("graphic partitions are downward closed under majorization") {
    for (int length = 2; length <= 5; ++length)
        for (int total = 2; total <= 8; total += 2) {
            const std::vector<int_list> family = sweep::partitions_of(total, length);
            for (const int_list& a : family) {
                if (!is_graphic(a))
                    continue;
                for (const int_list& b : family)
                    if (majorizes(a, b))
                        CHECK(is_graphic(b));
            }
        }
}

TEST_CASE("forced pairs and decomposability persist on graphic covers") {
    for (int n = 2; n <= 6; ++n)
        for (const degree_sequence& d : sweep::graphic_sequences(n)) {
            const classification_matrix below = classify_pairs(d);
            const bool below_split = is_split_sequence(d);
            const bool below_decomposable = eg_zero_list(d).size() > 1;
            for (const cover_step& c : elementary_covers(d.terms())) {
                if (!is_graphic(c.sequence))
                    continue;
                const degree_sequence up = validate_sequence(c.sequence);
                const classification_matrix above = classify_pairs(up);
                for (int i = 1; i <= n; ++i)
                    for (int j = i + 1; j <= n; ++j)
                        if (below.at(i, j) != pair_class::unforced)
                            CHECK(above.at(i, j) == below.at(i, j));
                if (below_split)
                    CHECK(is_split_sequence(up));
                if (below_decomposable)
                    CHECK(eg_zero_list(up).size() > 1);
            }
        }
}

TEST_CASE("lift returns immediately on decomposable input") {
    const lift_result r = lift_to_decomposable(validate_sequence({2, 2, 1, 1, 0}));
    CHECK(r.steps.empty());
    CHECK(r.target.terms() == int_list{2, 2, 1, 1, 0});
}

TEST_CASE("lift refuses sequences with no slack-one index") {
    CHECK_THROWS_AS(lift_to_decomposable(validate_sequence({1, 1, 1, 1})),
                    no_forced_structure);
    CHECK_THROWS_AS(lift_to_decomposable(validate_sequence({1, 1, 1, 1, 0})),
                    no_forced_structure);
    CHECK_THROWS_AS(lift_to_decomposable(validate_sequence({1, 1, 1})), not_graphic);
}

TEST_CASE("lift of the 19-term tower sequence takes three covers") {
    const degree_sequence s = validate_sequence(parse_sequence("15^5,6^7,3^7"));
    const lift_result r = lift_to_decomposable(s);
    CHECK(r.target.terms() == parse_sequence("16,15^4,6^6,5,3^7"));
    REQUIRE(r.steps.size() == 3);
    CHECK(r.steps[0] == lift_step{1, 5});
    CHECK(r.steps[1] == lift_step{6, 12});
    CHECK(r.steps[2] == lift_step{5, 6});
    CHECK(eg_zero_list(r.target).size() > 1);
    CHECK(majorizes(r.target.terms(), s.terms()));
}

TEST_CASE("lift needs three covers across the tower family") {
    for (int j = 0; j <= 2; ++j) {
        int_list terms;
        terms.insert(terms.end(), 5, 15 + 2 * j);
        terms.insert(terms.end(), static_cast<size_t>(7 + 2 * j), 6);
        terms.insert(terms.end(), 7, 3);
        const degree_sequence s = validate_sequence(terms);
        const lift_result r = lift_to_decomposable(s);
        CHECK(r.steps.size() == 3);
        CHECK(is_graphic(r.target));
        CHECK(eg_zero_list(r.target).size() > 1);
        CHECK(majorizes(r.target.terms(), terms));
    }
}

TEST_CASE("lift reaches a decomposable target along validated covers") {
    for (int n = 0; n <= 6; ++n)
        for (const degree_sequence& d : sweep::graphic_sequences(n)) {
            const eg_profile p = compute_eg_profile(d);
            const bool decomposable = p.eg_zeros.size() > 1;
            bool slack_one = false;
            for (int k = 1; k <= n; ++k)
                slack_one = slack_one || p.delta[static_cast<size_t>(k)] == 1;

            if (decomposable) {
                CHECK(lift_to_decomposable(d).steps.empty());
                continue;
            }
            if (!slack_one) {
                CHECK_THROWS_AS(lift_to_decomposable(d), no_forced_structure);
                continue;
            }
            const lift_result r = lift_to_decomposable(d);
            CHECK(r.steps.size() >= 1);
            CHECK(r.steps.size() <= 3);
            CHECK(eg_zero_list(r.target).size() > 1);
            CHECK(majorizes(r.target.terms(), d.terms()));

            int_list cur = d.terms();
            for (const lift_step& step : r.steps) {
                bool found = false;
                for (const cover_step& c : elementary_covers(cur))
                    if (c.p == step.p && c.q == step.q) {
                        cur = c.sequence;
                        found = true;
                        break;
                    }
                CHECK(found);
                CHECK(is_graphic(cur));
            }
            CHECK(cur == r.target.terms());
        }
}
