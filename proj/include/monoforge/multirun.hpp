#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monoforge/engine.hpp"

namespace monoforge {

// One raw input binomial of a sequential run.
struct RawBinomial {
    ExponentVector A_raw;
    ExponentVector B_raw;
    std::string rho = "1";
};

// A chart of a sequential run. Every binomial is carried as the raw exponent
// pair of its total transform; among the binomials at or after the parent's
// phase, the first one whose normalization is not yet locally monomial is the
// active binomial and drives the center selection. Phases never go back:
// a blowup made for a later binomial can break an earlier one again, in which
// case the chart ends as a leaf that is not final.
struct MultiChart {
    std::vector<RawBinomial> raw;
    int active_index = 0;  // 0-based; == #binomials on a leaf
    BinomialState active;  // normalize(raw[active_index]) with the chart's E
    std::optional<IotaTuple> iota_val;
    std::optional<std::vector<int>> center;
    int parent = 0;
    int ordinal = -1;
    int depth = 0;
    bool finished = false;  // every binomial passes the finished check here
    // Leaf-only report: whether the factored product of all total transforms
    // already has the single-binomial locally-monomial shape. Purely
    // informational; a product of several nontrivial factors normally fails it.
    bool product_condition = false;

    bool is_leaf() const { return active_index == static_cast<int>(raw.size()); }
};

struct MultiRunResult {
    std::vector<MultiChart> charts;
    Mode mode = Mode::Codim2;
    Stats stats;     // stats.leaves counts the final charts
    int stalled = 0; // leaves where an earlier binomial came undone again

    std::vector<PathStep> path_of(int index) const;
};

// Monomializes f_1, then the total transform of f_2 in every final chart,
// and so on. All binomials must share the same variable count. Chart order
// is the same FIFO order as the single-binomial loop; finishing one binomial
// activates the next within the same chart.
MultiRunResult sequential_monomialize(const std::vector<RawBinomial>& fs, Mode mode,
                                      int threads = 1);

}  // namespace monoforge
