#include <doctest.h>

#include <random>

#include "monoforge/core.hpp"
#include "oracle.hpp"

using namespace monoforge;

TEST_CASE("normalize splits off the common monomial part") {
    SUBCASE("disjoint supports stay put") {
        auto p = normalize({3, 2, 0, 0}, {0, 0, 5, 1});
        CHECK(p.A == ExponentVector{3, 2, 0, 0});
        CHECK(p.B == ExponentVector{0, 0, 5, 1});
        CHECK(p.C == ExponentVector{0, 0, 0, 0});
    }
    SUBCASE("common factor moves to C") {
        auto p = normalize({2, 1}, {2, 0});
        CHECK(p.A == ExponentVector{0, 1});
        CHECK(p.B == ExponentVector{0, 0});
        CHECK(p.C == ExponentVector{2, 0});
    }
    SUBCASE("single shared slot") {
        auto p = normalize({1, 1, 0}, {1, 0, 1});
        CHECK(p.A == ExponentVector{0, 1, 0});
        CHECK(p.B == ExponentVector{0, 0, 1});
        CHECK(p.C == ExponentVector{1, 0, 0});
    }
}

TEST_CASE("normalize rejects the zero polynomial but not a scaled monomial") {
    CHECK_THROWS_AS(normalize({2, 1}, {2, 1}, "1"), DegenerateZeroError);
    auto p = normalize({2, 1}, {2, 1}, "3");
    CHECK(entry_sum(p.A) == 0);
    CHECK(entry_sum(p.B) == 0);
    CHECK(p.C == ExponentVector{2, 1});
}

TEST_CASE("iota") {
    CHECK(iota({4, 4, 4, 0}, {0, 0, 0, 7}) == IotaTuple{4, 3, 7, 1});
    CHECK(iota({0, 0}, {0, 0}) == IotaTuple{0, 2, 0, 2});
    CHECK(iota({3, 2, 0, 0}, {0, 0, 5, 1}) == IotaTuple{3, 1, 5, 1});
}

TEST_CASE("iota ordering is lexicographic") {
    // the paper's running comparison: (a,2,b,1) < (a,3,b,1)
    CHECK(IotaTuple{4, 2, 7, 1} < IotaTuple{4, 3, 7, 1});
    CHECK(IotaTuple{3, 9, 9, 9} < IotaTuple{4, 1, 0, 0});
    CHECK(IotaTuple{4, 3, 7, 1} == IotaTuple{4, 3, 7, 1});
}

TEST_CASE("inv_pair") {
    CHECK(inv_pair({1, 2, 0, 0, 0}, {0, 0, 3, 2, 1}) == InvPair{3, 6});
    CHECK(inv_pair({0, 0}, {0, 0}) == InvPair{0, 0});
    CHECK(inv_pair({3, 2, 0, 0}, {0, 0, 5, 1}) == InvPair{5, 6});
    CHECK(InvPair{3, 3} < InvPair{3, 6});
    CHECK(InvPair{3, 4} < InvPair{3, 6});
}

TEST_CASE("normalize reconstruction and idempotence on random pairs") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 2000; ++iter) {
        auto [A_raw, B_raw] = testing::random_raw_pair(rng);
        auto p = normalize(A_raw, B_raw);
        const int n = static_cast<int>(A_raw.size());
        for (int i = 0; i < n; ++i) {
            CHECK(p.A[i] * p.B[i] == 0);
            CHECK(p.A[i] + p.C[i] == A_raw[i]);
            CHECK(p.B[i] + p.C[i] == B_raw[i]);
            CHECK(p.A[i] >= 0);
            CHECK(p.B[i] >= 0);
            CHECK(p.C[i] >= 0);
        }
        // applying normalize to its own output changes nothing
        bool already_zero = entry_sum(p.A) == 0 && entry_sum(p.B) == 0;
        if (!already_zero) {
            auto q = normalize(p.A, p.B);
            CHECK(q.A == p.A);
            CHECK(q.B == p.B);
            CHECK(entry_sum(q.C) == 0);
        }
    }
}
