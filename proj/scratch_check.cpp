// Temporary validation harness (deleted before finalizing).
#include <cstdio>
#include <vector>

#include "monoforge/engine.hpp"

using namespace monoforge;

static ExponentVector ev(std::vector<Exp> v) { return v; }

static void row(const char* name, const ExponentVector& A, const ExponentVector& B) {
    std::printf("%-28s", name);
    for (Mode m : kAllModes) {
        RunResult r = monomialize(A, B, m);
        std::printf("  %7d/%-7d", r.stats.leaves, r.stats.total);
    }
    std::printf("\n");
}

int main() {
    // Fig 2 rows 1-10 (product-of-distinct-variables block)
    row("1 x1x2-x3x4", ev({1, 1, 0, 0}), ev({0, 0, 1, 1}));
    row("2 x1x2-x3x4x5", ev({1, 1, 0, 0, 0}), ev({0, 0, 1, 1, 1}));
    row("3 x1x2-x3..x6", ev({1, 1, 0, 0, 0, 0}), ev({0, 0, 1, 1, 1, 1}));
    row("4 x1x2x3-x4x5x6", ev({1, 1, 1, 0, 0, 0}), ev({0, 0, 0, 1, 1, 1}));
    row("5 x1x2x3-x4..x7", ev({1, 1, 1, 0, 0, 0, 0}), ev({0, 0, 0, 1, 1, 1, 1}));
    row("9 x1..x4-x5..x9", ev({1, 1, 1, 1, 0, 0, 0, 0, 0}), ev({0, 0, 0, 0, 1, 1, 1, 1, 1}));
    // Fig 2 rows 11, 14, 19, 22, 24
    row("11 x1x2-x3^2", ev({1, 1, 0}), ev({0, 0, 2}));
    row("14 x1x2x3-x4^4", ev({1, 1, 1, 0}), ev({0, 0, 0, 4}));
    row("19 x1x2x3-x4^3", ev({1, 1, 1, 0}), ev({0, 0, 0, 3}));
    row("22 x1x2x3x4-x5^5", ev({1, 1, 1, 1, 0}), ev({0, 0, 0, 0, 5}));
    row("24 x1..x6-x7^5", ev({1, 1, 1, 1, 1, 1, 0}), ev({0, 0, 0, 0, 0, 0, 5}));
    // Fig 3 rows 25, 40, 41, 42, 44
    row("25 x1^2-x2^3x3^4", ev({2, 0, 0}), ev({0, 3, 4}));
    row("40 x1^2x2^3-x4x5^2x6^2", ev({2, 3, 0, 0, 0, 0}), ev({0, 0, 0, 1, 2, 2}));
    row("41 x1x2^2x3^3-x4x5^2x6^3", ev({1, 2, 3, 0, 0, 0}), ev({0, 0, 0, 1, 2, 3}));
    row("42 x1^2x2^2x3^2-x4x5^2x6^3", ev({2, 2, 2, 0, 0, 0}), ev({0, 0, 0, 1, 2, 3}));
    row("44 row44", ev({1, 2, 3, 4, 0, 0, 0, 0}), ev({0, 0, 0, 0, 1, 2, 3, 4}));
    // Fig 4 rows 41.2 / 41.3
    row("41.2", ev({3, 1, 2, 0, 0, 0}), ev({0, 0, 0, 3, 1, 2}));
    row("41.3", ev({2, 1, 3, 0, 0, 0}), ev({0, 0, 0, 2, 1, 3}));

    // Figure 1 tree: y^2 - x^3 over (x, y)
    RunResult fig1 = monomialize(ev({0, 2}), ev({3, 0}), Mode::Codim2);
    std::printf("fig1: total=%d leaves=%d depth=%d\n", fig1.stats.total, fig1.stats.leaves,
                fig1.stats.max_depth);
    for (std::size_t i = 0; i < fig1.charts.size(); ++i) {
        const Chart& c = fig1.charts[i];
        std::printf("  chart %zu: A=(%lld,%lld) B=(%lld,%lld) C=(%lld,%lld) parent=%d ord=%d fin=%d\n",
                    i + 1, c.state.A[0], c.state.A[1], c.state.B[0], c.state.B[1], c.state.C[0],
                    c.state.C[1], c.parent, c.ordinal, (int)c.finished);
    }
    return 0;
}
