// Temporary: validate the §7 order-dependence numbers (deleted before finalizing).
#include <cstdio>

#include "monoforge/multirun.hpp"

using namespace monoforge;

int main() {
    // over (x, y, z, v)
    RawBinomial f1{{0, 0, 0, 2}, {0, 4, 1, 0}, "1"};  // v^2 - y^4 z
    RawBinomial f2{{2, 1, 0, 0}, {0, 0, 3, 0}, "1"};  // x^2 y - z^3

    MultiRunResult r12 = sequential_monomialize({f1, f2}, Mode::Codim2);
    std::printf("(f1,f2) over (x,y,z,v): final=%d total=%d depth=%d\n", r12.stats.leaves,
                r12.stats.total, r12.stats.max_depth);

    MultiRunResult r21 = sequential_monomialize({f2, f1}, Mode::Codim2);
    std::printf("(f2,f1) over (x,y,z,v): final=%d total=%d depth=%d\n", r21.stats.leaves,
                r21.stats.total, r21.stats.max_depth);

    // first-appearance variable order for the list (f1, f2): (v, y, z, x)
    RawBinomial g1{{2, 0, 0, 0}, {0, 4, 1, 0}, "1"};  // v^2 - y^4 z
    RawBinomial g2{{0, 1, 0, 2}, {0, 0, 3, 0}, "1"};  // x^2 y - z^3
    MultiRunResult ra = sequential_monomialize({g1, g2}, Mode::Codim2);
    std::printf("(f1,f2) over (v,y,z,x): final=%d total=%d\n", ra.stats.leaves, ra.stats.total);

    // single-element list should equal engine.monomialize
    MultiRunResult s1 = sequential_monomialize({f1}, Mode::Codim2);
    RunResult e1 = monomialize(f1.A_raw, f1.B_raw, Mode::Codim2);
    std::printf("single f1: multi %d/%d engine %d/%d\n", s1.stats.leaves, s1.stats.total,
                e1.stats.leaves, e1.stats.total);
    return 0;
}
