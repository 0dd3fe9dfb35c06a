#include "monoforge/multirun.hpp"

#include <algorithm>
#include <stdexcept>

#include "fifo_expand.hpp"

namespace monoforge {

std::vector<PathStep> MultiRunResult::path_of(int index) const {
    std::vector<PathStep> path;
    for (int i = index; i >= 1; i = charts[i - 1].parent)
        path.push_back(PathStep{charts[i - 1].parent, charts[i - 1].ordinal});
    std::reverse(path.begin(), path.end());
    return path;
}

namespace {

// Image of a raw exponent vector under the X_var-chart substitution of the
// blowup with center I: slot var collects the center sum, the rest is kept.
ExponentVector map_raw(const ExponentVector& v, const std::vector<int>& I, int var) {
    ExponentVector out = v;
    Exp s = 0;
    for (int j : I) s += v[j];
    out[var] = s;
    return out;
}

// The factored product of all total transforms is x^{sum of C_k} times the
// product of the strict transforms. It has the single-binomial finished
// shape only if at most one factor is a genuine binomial and that factor
// passes the finished check against the product's full monomial part.
bool product_condition(const std::vector<RawBinomial>& raw, int n) {
    ExponentVector C_total(n, 0);
    std::vector<NormalizedPair> nontrivial;
    for (const RawBinomial& f : raw) {
        NormalizedPair p = normalize(f.A_raw, f.B_raw, f.rho);
        for (int i = 0; i < n; ++i) C_total[i] += p.C[i];
        if (entry_sum(p.A) != 0 || entry_sum(p.B) != 0) nontrivial.push_back(std::move(p));
    }
    if (nontrivial.empty()) return true;
    if (nontrivial.size() > 1) return false;
    return check_finished(nontrivial[0].A, nontrivial[0].B, C_total);
}

// Derives the per-chart data from the raw pairs: starting at the parent's
// phase, the first binomial whose normalized total transform fails the
// finished check becomes active. Phases never move backwards, so a chart can
// end as a leaf whose earlier binomials came undone again; such a leaf does
// not count as final.
MultiChart make_chart(std::vector<RawBinomial> raw, std::vector<std::uint8_t> E, Mode mode,
                      int phase) {
    const int n = static_cast<int>(E.size());
    const int m = static_cast<int>(raw.size());
    MultiChart c;
    c.active_index = m;
    bool earlier_ok = true;
    for (int k = 0; k < m; ++k) {
        NormalizedPair p = normalize(raw[k].A_raw, raw[k].B_raw, raw[k].rho);
        const bool fin = check_finished(p.A, p.B, p.C);
        if (k < phase) {
            earlier_ok = earlier_ok && fin;
        } else if (c.active_index == m && !fin) {
            c.active_index = k;
            c.active.A = std::move(p.A);
            c.active.B = std::move(p.B);
            c.active.C = std::move(p.C);
            c.active.E = E;
            c.active.rho = raw[k].rho;
        }
    }
    c.finished = c.active_index == m && earlier_ok;
    c.raw = std::move(raw);
    if (c.is_leaf()) {
        c.product_condition = product_condition(c.raw, n);
        c.active.A.assign(n, 0);
        c.active.B.assign(n, 0);
        c.active.C.assign(n, 0);
        c.active.E = std::move(E);
    } else {
        c.iota_val = iota(c.active);
        c.center = compute_center(c.active, mode);
    }
    return c;
}

}  // namespace

MultiRunResult sequential_monomialize(const std::vector<RawBinomial>& fs, Mode mode,
                                      int threads) {
    if (fs.empty()) throw std::invalid_argument("sequential_monomialize: empty binomial list");
    const std::size_t n = fs.front().A_raw.size();
    for (const RawBinomial& f : fs)
        if (f.A_raw.size() != n || f.B_raw.size() != n)
            throw DimensionMismatchError("binomials live over different variable counts");

    MultiRunResult result;
    result.mode = mode;
    result.charts.push_back(make_chart(fs, std::vector<std::uint8_t>(n, 0), mode, 0));

    detail::expand_fifo(
        result.charts,
        [mode](const MultiChart& chart, int index) {
            std::vector<MultiChart> successors;
            if (chart.is_leaf()) return successors;
            const std::vector<int>& I = *chart.center;
            successors.reserve(I.size());
            for (std::size_t rank = 0; rank < I.size(); ++rank) {
                const int var = I[rank];
                std::vector<RawBinomial> raw = chart.raw;
                for (RawBinomial& f : raw) {
                    f.A_raw = map_raw(f.A_raw, I, var);
                    f.B_raw = map_raw(f.B_raw, I, var);
                }
                std::vector<std::uint8_t> E = chart.active.E;
                E[var] = 1;
                MultiChart child = make_chart(std::move(raw), std::move(E), mode, chart.active_index);
                child.parent = index;
                child.ordinal = static_cast<int>(rank) + 1;
                child.depth = chart.depth + 1;
                successors.push_back(std::move(child));
            }
            return successors;
        },
        threads);

    result.stats.total = static_cast<int>(result.charts.size());
    for (const MultiChart& c : result.charts) {
        if (c.finished) ++result.stats.leaves;
        if (c.is_leaf() && !c.finished) ++result.stalled;
        result.stats.max_depth = std::max(result.stats.max_depth, c.depth);
    }
    return result;
}

}  // namespace monoforge
