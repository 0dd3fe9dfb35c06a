#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "monoforge/engine.hpp"

namespace monoforge {

using BigInt = boost::multiprecision::cpp_int;

// Worst-case bounds for a single run, next to the realized numbers.
// chart_bound grows like n^depth, hence the arbitrary-precision type.
struct BoundReport {
    Mode mode = Mode::Codim2;
    BigInt depth_bound;
    BigInt chart_bound;
    int depth_actual = 0;
    int total_actual = 0;
    bool bound_applicable = true;
};

// Longest-path bound for the blowup tree of `mode` started at `state`.
// Mode 1 uses d(m, M) with (m, M) the inv pair. Modes 2-4 use
// (alpha + beta - 4)(n - 1) + a + b + 1, which is meaningful only when
// min{alpha, beta} >= 2; outside that domain the returned flag is false and
// the value falls back to a + b + 1. Finished states report 0.
std::pair<BigInt, bool> depth_bound(const BinomialState& state, Mode mode);

// Chart-count bound: n^d for mode 1, 2^d for mode 2, 4^d for modes 3-4,
// where d is the depth bound above. Finished states report 1.
BigInt chart_bound(const BinomialState& state, Mode mode);

// Convenience: bounds plus the actual depth/total of a finished run.
BoundReport make_bound_report(const BinomialState& root_state, const RunResult& run);

}  // namespace monoforge
