#include "monoforge/engine.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "fifo_expand.hpp"

namespace monoforge {

Mode mode_from_int(int m) {
    switch (m) {
        case 1: return Mode::MaxOrd;
        case 2: return Mode::Codim2;
        case 3: return Mode::MinCodim;
        case 4: return Mode::Exceptional;
        default: throw std::out_of_range("mode must be 1, 2, 3 or 4");
    }
}

const char* mode_name(Mode m) {
    switch (m) {
        case Mode::MaxOrd: return "max.ord.";
        case Mode::Codim2: return "codim.2";
        case Mode::MinCodim: return "min.codim";
        case Mode::Exceptional: return "exc.";
    }
    return "?";
}

std::vector<PathStep> RunResult::path_of(int index) const {
    std::vector<PathStep> path;
    for (int i = index; i >= 1; i = charts[i - 1].parent)
        path.push_back(PathStep{charts[i - 1].parent, charts[i - 1].ordinal});
    std::reverse(path.begin(), path.end());
    return path;
}

bool check_finished(const ExponentVector& A, const ExponentVector& B, const ExponentVector& C) {
    const Exp sa = entry_sum(A);
    const Exp sb = entry_sum(B);
    if (std::min(sa, sb) == 0) return true;
    const int n = static_cast<int>(A.size());
    if (sa == 1) {
        for (int i = 0; i < n; ++i)
            if (A[i] == 1 && C[i] == 0) return true;
    }
    if (sb == 1) {
        for (int i = 0; i < n; ++i)
            if (B[i] == 1 && C[i] == 0) return true;
    }
    return false;
}

bool check_finished(const BinomialState& s) { return check_finished(s.A, s.B, s.C); }

BinomialState transform(const BinomialState& s, const std::vector<int>& center, int chart_var) {
    if (std::find(center.begin(), center.end(), chart_var) == center.end())
        throw InvalidChartError("chart variable is not part of the center");

    Exp sum_a = 0, sum_b = 0, sum_c = 0;
    for (int j : center) {
        sum_a += s.A[j];
        sum_b += s.B[j];
        sum_c += s.C[j];
    }
    const Exp delta = std::min(sum_a, sum_b);

    BinomialState out = s;
    out.A[chart_var] = sum_a - delta;
    out.B[chart_var] = sum_b - delta;
    out.C[chart_var] = sum_c + delta;
    out.E[chart_var] = 1;
    return out;
}

namespace {

// Greedy cover-then-prune over one side: accumulate support indices of `big`
// (ascending) until their sum reaches `target`, then drop every index whose
// removal keeps the sum at or above `target`.
std::vector<int> accumulate_and_prune(const ExponentVector& big, Exp target) {
    std::vector<int> J;
    Exp acc = 0;
    for (int j = 0; j < static_cast<int>(big.size()); ++j) {
        if (big[j] == 0) continue;
        J.push_back(j);
        acc += big[j];
        if (acc >= target) break;
    }
    std::vector<int> kept;
    for (std::size_t k = 0; k < J.size(); ++k) {
        if (acc - big[J[k]] >= target)
            acc -= big[J[k]];
        else
            kept.push_back(J[k]);
    }
    return kept;
}

std::vector<int> sorted_union(std::vector<int> a, const std::vector<int>& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    return a;
}

}  // namespace

std::vector<int> center_maxord(const BinomialState& s) {
    const Exp sa = entry_sum(s.A);
    const Exp sb = entry_sum(s.B);
    if (sa == sb) return sorted_union(support(s.A), support(s.B));
    if (sa < sb) return sorted_union(support(s.A), accumulate_and_prune(s.B, sa));
    return sorted_union(support(s.B), accumulate_and_prune(s.A, sb));
}

std::vector<int> center_codim2(const BinomialState& s) {
    const int i1 = first_argmax(s.A);
    const int i2 = first_argmax(s.B);
    return {std::min(i1, i2), std::max(i1, i2)};
}

namespace {

// Largest slot carrying a unit exponent. In cases (ii)-(iv) the side being
// enlarged has maximum 1 and entry sum >= 2, so this slot exists and differs
// from the first one. Taking the last unit here (rather than the second one)
// is what reproduces the reference chart counts for mixed-exponent inputs.
int last_slot_with_one(const ExponentVector& v) {
    for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i)
        if (v[i] == 1) return i;
    assert(false && "cases (ii)-(iv) guarantee a unit exponent");
    return -1;
}

}  // namespace

std::vector<int> center_mincodim(const BinomialState& s) {
    const Exp alpha = max_entry(s.A);
    const Exp beta = max_entry(s.B);
    const int i1 = first_argmax(s.A);
    const int i2 = first_argmax(s.B);
    std::vector<int> I = {i1, i2};

    const Exp min_sum = std::min(entry_sum(s.A), entry_sum(s.B));
    if (std::min(alpha, beta) >= 2 || min_sum == 1) {
        // case (i): the codim-2 center already sits in the singular locus
    } else if (alpha == 1 && beta >= 2) {
        I.push_back(last_slot_with_one(s.A));  // case (ii)
    } else if (alpha >= 2 && beta == 1) {
        I.push_back(last_slot_with_one(s.B));  // case (iii)
    } else {
        I.push_back(last_slot_with_one(s.A));  // case (iv)
        I.push_back(last_slot_with_one(s.B));
    }
    std::sort(I.begin(), I.end());
    return I;
}

std::vector<int> center_exceptional(const BinomialState& s) {
    const Exp alpha = max_entry(s.A);
    const Exp beta = max_entry(s.B);
    const int i1 = first_argmax(s.A);
    const int i2 = first_argmax(s.B);
    if (std::min(alpha, beta) >= 2 || std::min(entry_sum(s.A), entry_sum(s.B)) == 1 ||
        s.E[i1] + s.E[i2] > 0)
        return {std::min(i1, i2), std::max(i1, i2)};
    return center_mincodim(s);
}

std::vector<int> compute_center(const BinomialState& s, Mode mode) {
    switch (mode) {
        case Mode::MaxOrd: return center_maxord(s);
        case Mode::Codim2: return center_codim2(s);
        case Mode::MinCodim: return center_mincodim(s);
        case Mode::Exceptional: return center_exceptional(s);
    }
    throw std::out_of_range("bad mode");
}

namespace {

Chart finish_chart(BinomialState state, Mode mode) {
    Chart c;
    c.finished = check_finished(state);
    if (!c.finished) {
        c.iota_val = iota(state);
        c.center = compute_center(state, mode);
    }
    c.state = std::move(state);
    return c;
}

Chart make_successor(const Chart& parent, int parent_index, int rank, Mode mode) {
    const std::vector<int>& I = *parent.center;
    Chart child = finish_chart(transform(parent.state, I, I[rank]), mode);
    child.parent = parent_index;
    child.ordinal = rank + 1;
    child.depth = parent.depth + 1;
    return child;
}

}  // namespace

RunResult monomialize(const ExponentVector& A_raw, const ExponentVector& B_raw, Mode mode,
                      const std::string& rho, int threads) {
    RunResult result;
    result.mode = mode;

    NormalizedPair p = normalize(A_raw, B_raw, rho);
    BinomialState root;
    root.A = std::move(p.A);
    root.B = std::move(p.B);
    root.C = std::move(p.C);
    root.E.assign(A_raw.size(), 0);
    root.rho = rho;
    result.charts.push_back(finish_chart(std::move(root), mode));

    detail::expand_fifo(
        result.charts,
        [mode](const Chart& chart, int index) {
            std::vector<Chart> successors;
            if (!chart.finished) {
                successors.reserve(chart.center->size());
                for (std::size_t r = 0; r < chart.center->size(); ++r)
                    successors.push_back(make_successor(chart, index, static_cast<int>(r), mode));
            }
            return successors;
        },
        threads);

    result.stats.total = static_cast<int>(result.charts.size());
    for (const Chart& c : result.charts) {
        if (c.finished) ++result.stats.leaves;
        result.stats.max_depth = std::max(result.stats.max_depth, c.depth);
    }
    return result;
}

}  // namespace monoforge
