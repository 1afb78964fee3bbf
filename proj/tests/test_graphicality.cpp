#include <doctest.h>

#include <vector>

#include "degseq/graphicality.hpp"
#include "degseq/parse.hpp"
#include "degseq/sequence.hpp"
#include "test_util.hpp"

using namespace degseq;

namespace {
std::vector<long long> deltas(const int_list& terms) {
    return compute_eg_profile(validate_sequence(terms)).delta;
}
} // namespace

TEST_CASE("profile of 2,2,1,1,0") {
    const eg_profile p = compute_eg_profile(validate_sequence({2, 2, 1, 1, 0}));
    CHECK(p.lhs == std::vector<long long>{0, 2, 4, 5, 6, 6});
    CHECK(p.rhs == std::vector<long long>{0, 3, 4, 7, 12, 20});
    CHECK(p.delta == std::vector<long long>{0, 1, 0, 2, 6, 14});
    CHECK(p.m == 2);
    CHECK(p.eg_zeros == std::vector<int>{0, 2});
}

TEST_CASE("profile of 3,1,1,1,0") {
    const eg_profile p = compute_eg_profile(validate_sequence({3, 1, 1, 1, 0}));
    CHECK(p.delta == std::vector<long long>{0, 0, 0, 2, 6, 14});
    CHECK(p.m == 2);
    CHECK(p.eg_zeros == std::vector<int>{0, 1, 2});
}

TEST_CASE("profile of 1,1,1,1") {
    const eg_profile p = compute_eg_profile(validate_sequence({1, 1, 1, 1}));
    CHECK(p.delta == std::vector<long long>{0, 2, 2, 4, 8});
    CHECK(p.m == 2);
    CHECK(p.eg_zeros == std::vector<int>{0});
}

TEST_CASE("profile of 7,6,3,3,3,3,1,1,1") {
    const eg_profile p = compute_eg_profile(validate_sequence({7, 6, 3, 3, 3, 3, 1, 1, 1}));
    CHECK(p.delta == std::vector<long long>{0, 1, 0, 2, 2, 4, 8, 18, 30, 44});
    CHECK(p.m == 4);
    CHECK(p.eg_zeros == std::vector<int>{0, 2});
}

TEST_CASE("profile of degenerate sequences") {
    const eg_profile empty = compute_eg_profile(validate_sequence({}));
    CHECK(empty.delta == std::vector<long long>{0});
    CHECK(empty.m == 0);
    CHECK(empty.eg_zeros == std::vector<int>{0});

    const eg_profile one = compute_eg_profile(validate_sequence({0}));
    CHECK(one.delta == std::vector<long long>{0, 0});
    CHECK(one.m == 1);
    CHECK(one.eg_zeros == std::vector<int>{0, 1});
}

TEST_CASE("profile of the 19-term tower sequence") {
    const eg_profile p = compute_eg_profile(validate_sequence(parse_sequence("15^5,6^7,3^7")));
    CHECK(p.m == 7);
    for (int k = 1; k <= 7; ++k) {
        const std::vector<long long> rhs{18, 36, 54, 65, 76, 87, 93};
        CHECK(p.rhs[static_cast<size_t>(k)] == rhs[static_cast<size_t>(k - 1)]);
    }
    const std::vector<long long> head{0, 3, 6, 9, 5, 1, 6, 6};
    for (int k = 0; k <= 7; ++k)
        CHECK(p.delta[static_cast<size_t>(k)] == head[static_cast<size_t>(k)]);
    CHECK(p.eg_zeros == std::vector<int>{0});
}

TEST_CASE("is_graphic on known sequences") {
    CHECK(is_graphic(int_list{2, 2, 1, 1, 0}));
    CHECK(is_graphic(int_list{3, 1, 1, 1, 0}));
    CHECK(is_graphic(int_list{1, 1, 1, 1}));
    CHECK(is_graphic(int_list{7, 6, 3, 3, 3, 3, 1, 1, 1}));
    CHECK(is_graphic(int_list{}));
    CHECK(is_graphic(int_list{0}));
    CHECK_FALSE(is_graphic(int_list{1, 1, 1}));    // odd sum
    CHECK_FALSE(is_graphic(int_list{3, 3, 1, 1})); // fails at k = 2
    CHECK_FALSE(is_graphic(int_list{3, 1}));       // term exceeds n-1
    CHECK_FALSE(is_graphic(int_list{2, -1, 1}));
}

TEST_CASE("is_graphic sorts unsorted input") {
    CHECK(is_graphic(int_list{1, 2, 1}));
    CHECK(is_graphic(int_list{0, 1, 1, 2, 2}));
}

TEST_CASE("complement of known sequences") {
    CHECK(complement_sequence(validate_sequence({2, 2, 1, 1, 0})).terms() ==
          int_list{4, 3, 3, 2, 2});
    CHECK(complement_sequence(validate_sequence({3, 1, 1, 1, 0})).terms() ==
          int_list{4, 3, 3, 3, 1});
    CHECK(complement_sequence(validate_sequence({})).terms() == int_list{});
    CHECK(complement_sequence(validate_sequence({0})).terms() == int_list{0});
}

TEST_CASE("complement is a graphicality-preserving involution") {
    for (int n = 0; n <= 6; ++n)
        for (const degree_sequence& d : sweep::graphic_sequences(n)) {
            const degree_sequence c = complement_sequence(d);
            CHECK(is_graphic(c));
            CHECK(complement_sequence(c) == d);
        }
}

TEST_CASE("graphic sequences have nonnegative delta everywhere") {
    for (int n = 0; n <= 7; ++n)
        for (const degree_sequence& d : sweep::graphic_sequences(n)) {
            const eg_profile p = compute_eg_profile(d);
            for (int k = 1; k <= n; ++k)
                CHECK(p.delta[static_cast<size_t>(k)] >= 0);
        }
}

TEST_CASE("delta is at least two past the strong index") {
    for (int n = 0; n <= 7; ++n)
        for (const degree_sequence& d : sweep::graphic_sequences(n)) {
            const eg_profile p = compute_eg_profile(d);
            for (int k = p.m + 1; k <= n; ++k)
                CHECK(p.delta[static_cast<size_t>(k)] >= 2);
        }
}
