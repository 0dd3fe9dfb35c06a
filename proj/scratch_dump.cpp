// Temporary: dump mode-3 case decisions for row 42 (deleted before finalizing).
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "monoforge/engine.hpp"

using namespace monoforge;

static std::string vec(const ExponentVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

int main(int argc, char** argv) {
    ExponentVector A = {2, 2, 2, 0, 0, 0}, B = {0, 0, 0, 1, 2, 3};
    if (argc > 1 && std::string(argv[1]) == "44") {
        A = {1, 2, 3, 4, 0, 0, 0, 0};
        B = {0, 0, 0, 0, 1, 2, 3, 4};
    }
    RunResult r = monomialize(A, B, Mode::MinCodim);
    std::printf("total=%d leaves=%d\n", r.stats.total, r.stats.leaves);
    std::map<std::string, int> cases;
    for (std::size_t i = 0; i < r.charts.size(); ++i) {
        const Chart& c = r.charts[i];
        if (c.finished) continue;
        const auto& s = c.state;
        Exp alpha = max_entry(s.A), beta = max_entry(s.B);
        Exp minsum = std::min(entry_sum(s.A), entry_sum(s.B));
        const char* which = "i";
        if (std::min(alpha, beta) >= 2 || minsum == 1)
            which = "i";
        else if (alpha == 1 && beta >= 2)
            which = "ii";
        else if (alpha >= 2 && beta == 1)
            which = "iii";
        else
            which = "iv";
        cases[which]++;
        if (std::string(which) != "i") {
            std::string ctr;
            for (int j : *c.center) ctr += std::to_string(j + 1) + " ";
            std::printf("chart %3zu case %-3s A=%s B=%s C=%s E=%s center={%s}\n", i + 1, which,
                        vec(s.A).c_str(), vec(s.B).c_str(), vec(s.C).c_str(),
                        vec(ExponentVector(s.E.begin(), s.E.end())).c_str(), ctr.c_str());
        }
    }
    for (auto& [k, v] : cases) std::printf("case %s: %d charts\n", k.c_str(), v);
    return 0;
}
