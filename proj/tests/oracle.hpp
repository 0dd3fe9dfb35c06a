#pragma once

// Test-only oracles and generators, kept independent of the engine's
// transform path: the substitution oracle works on the raw exponent pair and
// refactors it from scratch.

#include <algorithm>
#include <random>
#include <vector>

#include "monoforge/core.hpp"

namespace monoforge::testing {

// Literal substitution x_j -> x_i * x_j (j in I \ {i}) applied to the raw
// monomial pair (A + C, B + C), then the common part is factored off again.
// Returns (A', B', C').
struct OracleResult {
    ExponentVector A, B, C;
};

inline OracleResult substitution_oracle(const BinomialState& s, const std::vector<int>& center,
                                        int chart_var) {
    const int n = s.n();
    ExponentVector a_raw(n), b_raw(n);
    for (int i = 0; i < n; ++i) {
        a_raw[i] = s.A[i] + s.C[i];
        b_raw[i] = s.B[i] + s.C[i];
    }
    // exponent image of the substitution: slot chart_var collects the center sum
    Exp sa = 0, sb = 0;
    for (int j : center) {
        sa += a_raw[j];
        sb += b_raw[j];
    }
    a_raw[chart_var] = sa;
    b_raw[chart_var] = sb;
    OracleResult r;
    r.A.resize(n);
    r.B.resize(n);
    r.C.resize(n);
    for (int i = 0; i < n; ++i) {
        r.C[i] = std::min(a_raw[i], b_raw[i]);
        r.A[i] = a_raw[i] - r.C[i];
        r.B[i] = b_raw[i] - r.C[i];
    }
    return r;
}

// Raw exponent pair with n <= max_n and entries <= max_entry; supports may
// overlap (normalize has to split them). Never the all-zero pair on both
// sides together.
inline std::pair<ExponentVector, ExponentVector> random_raw_pair(std::mt19937_64& rng,
                                                                 int max_n = 6,
                                                                 int max_entry = 6) {
    const int n = std::uniform_int_distribution<int>(1, max_n)(rng);
    ExponentVector A(n, 0), B(n, 0);
    for (int i = 0; i < n; ++i) {
        switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
            case 0: A[i] = std::uniform_int_distribution<int>(1, max_entry)(rng); break;
            case 1: B[i] = std::uniform_int_distribution<int>(1, max_entry)(rng); break;
            case 2:
                A[i] = std::uniform_int_distribution<int>(1, max_entry)(rng);
                B[i] = std::uniform_int_distribution<int>(1, max_entry)(rng);
                break;
            default: break;
        }
    }
    bool zero = true;
    for (int i = 0; i < n; ++i)
        if (A[i] != B[i]) zero = false;
    if (zero) A[0] += 1;
    return {A, B};
}

// Normalized state (A_i B_i = 0) with random C and E on top.
inline BinomialState random_state(std::mt19937_64& rng, int max_n = 6, int max_entry = 6) {
    const int n = std::uniform_int_distribution<int>(1, max_n)(rng);
    BinomialState s;
    s.A.assign(n, 0);
    s.B.assign(n, 0);
    s.C.assign(n, 0);
    s.E.assign(n, 0);
    bool nonzero = false;
    for (int i = 0; i < n; ++i) {
        const int side = std::uniform_int_distribution<int>(0, 2)(rng);
        const Exp val = std::uniform_int_distribution<int>(1, max_entry)(rng);
        if (side == 0) {
            s.A[i] = val;
            nonzero = true;
        } else if (side == 1) {
            s.B[i] = val;
            nonzero = true;
        }
        s.C[i] = std::uniform_int_distribution<int>(0, 2)(rng);
        s.E[i] = static_cast<std::uint8_t>(std::uniform_int_distribution<int>(0, 1)(rng));
    }
    if (!nonzero) s.A[0] = 1;
    return s;
}

// A random admissible center for a transform call: at least two slots, each
// carrying a nonzero exponent on one of the sides.
inline std::vector<int> random_center(std::mt19937_64& rng, const BinomialState& s) {
    std::vector<int> touched;
    for (int i = 0; i < s.n(); ++i)
        if (s.A[i] + s.B[i] > 0) touched.push_back(i);
    if (touched.size() < 2) return {};
    std::shuffle(touched.begin(), touched.end(), rng);
    const int size =
        std::uniform_int_distribution<int>(2, static_cast<int>(touched.size()))(rng);
    touched.resize(size);
    std::sort(touched.begin(), touched.end());
    return touched;
}

}  // namespace monoforge::testing
