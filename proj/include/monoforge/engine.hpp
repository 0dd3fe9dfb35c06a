#pragma once

#include <optional>
#include <vector>

#include "monoforge/core.hpp"

namespace monoforge {

// Center-selection strategy. Numeric values follow the mode parameter of the
// main loop, so they appear verbatim in CLI flags and JSON output.
enum class Mode : int {
    MaxOrd = 1,       // centers inside the locus of maximal order
    Codim2 = 2,       // codimension-two centers at the maximal exponents
    MinCodim = 3,     // minimal codimension inside the singular locus
    Exceptional = 4,  // codim-2 centers in an exceptional divisor, else mode 3
};

constexpr Mode kAllModes[] = {Mode::MaxOrd, Mode::Codim2, Mode::MinCodim, Mode::Exceptional};

Mode mode_from_int(int m);
const char* mode_name(Mode m);

// One ancestry step: the 1-based list index of the predecessor chart and the
// 1-based ordinal of this chart among its siblings. The root carries (0, -1).
struct PathStep {
    int parent = 0;
    int ordinal = -1;

    bool operator==(const PathStep&) const = default;
};

// A node of the blowup tree. `center` holds 0-based variable slots, sorted
// ascending; it is absent exactly when the chart is final.
struct Chart {
    BinomialState state;
    std::optional<IotaTuple> iota_val;
    std::optional<std::vector<int>> center;
    int parent = 0;    // 1-based index of the predecessor chart, 0 for the root
    int ordinal = -1;  // 1-based ordinal among the siblings, -1 for the root
    int depth = 0;
    bool finished = false;
};

struct Stats {
    int total = 0;
    int leaves = 0;
    int max_depth = 0;

    bool operator==(const Stats&) const = default;
};

// The chart list in the exact order the sequential main loop appends to it;
// charts[0] is the root (chart number 1).
struct RunResult {
    std::vector<Chart> charts;
    Mode mode = Mode::Codim2;
    Stats stats;

    // Full ancestry of chart `index` (1-based), starting with (0, -1).
    std::vector<PathStep> path_of(int index) const;
};

// True iff x^C (x^A - rho x^B) already has the locally-monomial shape:
// one side is empty, or one side is a single bare variable whose slot is
// exceptional-free in C. The coefficient plays no role.
bool check_finished(const BinomialState& s);
bool check_finished(const ExponentVector& A, const ExponentVector& B, const ExponentVector& C);

// Exponent transform in the X_i-chart of the blowup with center
// {x_j | j in I}: slot i of A, B receives the center sum minus delta,
// slot i of C receives the center sum plus delta, where delta is the
// smaller of the two center sums. Marks slot i exceptional.
BinomialState transform(const BinomialState& s, const std::vector<int>& center, int chart_var);

// The four center strategies. All require !check_finished(s) and return the
// 0-based slot set of the next center, sorted ascending. Ties always resolve
// to the smallest index.
std::vector<int> center_maxord(const BinomialState& s);
std::vector<int> center_codim2(const BinomialState& s);
std::vector<int> center_mincodim(const BinomialState& s);
std::vector<int> center_exceptional(const BinomialState& s);

std::vector<int> compute_center(const BinomialState& s, Mode mode);

// Runs the full monomialization loop on a raw exponent pair. The chart list
// is produced in FIFO order: a chart's successors are appended, one per
// center variable in ascending slot order, when the chart is expanded.
// threads > 1 expands independent charts concurrently but reproduces the
// sequential list exactly.
RunResult monomialize(const ExponentVector& A_raw, const ExponentVector& B_raw, Mode mode,
                      const std::string& rho = "1", int threads = 1);

}  // namespace monoforge
