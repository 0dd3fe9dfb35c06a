#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "monoforge/errors.hpp"

namespace monoforge {

using Exp = std::int64_t;

// One exponent slot per variable; the length is fixed for a whole run.
using ExponentVector = std::vector<Exp>;

Exp entry_sum(const ExponentVector& v);
Exp max_entry(const ExponentVector& v);

// Indices (0-based) of the nonzero entries, ascending.
std::vector<int> support(const ExponentVector& v);

// Smallest index attaining max_entry(v). Requires a nonempty vector.
int first_argmax(const ExponentVector& v);

// The termination measure for modes 2-4: (max A, its multiplicity, max B, its
// multiplicity), compared lexicographically.
struct IotaTuple {
    Exp alpha = 0;
    int a_count = 0;
    Exp beta = 0;
    int b_count = 0;

    auto operator<=>(const IotaTuple&) const = default;
};

// The termination measure for mode 1: (min, max) of the two entry sums.
struct InvPair {
    Exp m = 0;
    Exp M = 0;

    auto operator<=>(const InvPair&) const = default;
};

// Chart-local data of the total transform x^C (x^A - rho x^B) with
// A_i B_i = 0 in every slot. E flags the exceptional variables. The
// coefficient tag is carried for display only; it never enters the
// combinatorics.
struct BinomialState {
    ExponentVector A;
    ExponentVector B;
    ExponentVector C;
    std::vector<std::uint8_t> E;
    std::string rho = "1";

    int n() const { return static_cast<int>(A.size()); }

    bool operator==(const BinomialState&) const = default;
};

struct NormalizedPair {
    ExponentVector A;
    ExponentVector B;
    ExponentVector C;
};

// Splits a raw exponent pair into (A, B, C) with C_i = min(A_raw_i, B_raw_i),
// so that A_i B_i = 0 everywhere and A + C, B + C reproduce the input.
// Throws DegenerateZeroError when the input contracts to 0 - 0 with rho = 1;
// with rho != 1 the all-zero pair is returned (the input was a monomial
// times a nonzero constant).
NormalizedPair normalize(const ExponentVector& A_raw, const ExponentVector& B_raw,
                         const std::string& rho = "1");

// Convenience: normalized state with no exceptional slots yet.
BinomialState make_root_state(const ExponentVector& A_raw, const ExponentVector& B_raw,
                              const std::string& rho = "1");

IotaTuple iota(const ExponentVector& A, const ExponentVector& B);
InvPair inv_pair(const ExponentVector& A, const ExponentVector& B);

inline IotaTuple iota(const BinomialState& s) { return iota(s.A, s.B); }
inline InvPair inv_pair(const BinomialState& s) { return inv_pair(s.A, s.B); }

}  // namespace monoforge
