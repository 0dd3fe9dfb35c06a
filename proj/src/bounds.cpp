#include "monoforge/bounds.hpp"

namespace monoforge {

namespace {

// d(m, M) = 2^{m-1} M + m - 1 - sum_{l=1}^{m-1} 2^{m-l-1} (m - l + 1), m >= 1.
BigInt longest_path_maxord(Exp m, Exp M) {
    BigInt d = (BigInt(1) << static_cast<unsigned>(m - 1)) * M + m - 1;
    for (Exp l = 1; l <= m - 1; ++l)
        d -= (BigInt(1) << static_cast<unsigned>(m - l - 1)) * (m - l + 1);
    return d;
}

}  // namespace

std::pair<BigInt, bool> depth_bound(const BinomialState& state, Mode mode) {
    if (check_finished(state)) return {BigInt(0), true};

    if (mode == Mode::MaxOrd) {
        const InvPair inv = inv_pair(state);
        return {longest_path_maxord(inv.m, inv.M), true};
    }

    const IotaTuple it = iota(state);
    const Exp n = state.n();
    if (std::min(it.alpha, it.beta) >= 2) {
        BigInt d = BigInt(it.alpha + it.beta - 4) * (n - 1) + it.a_count + it.b_count + 1;
        return {d, true};
    }
    // The lemma's counting argument needs alpha, beta >= 2; with a unit
    // maximum the formula can go negative. Fall back to the case analysis
    // of the unit-exponent branches: a + b + 1 blowups suffice.
    return {BigInt(it.a_count + it.b_count + 1), false};
}

BigInt chart_bound(const BinomialState& state, Mode mode) {
    if (check_finished(state)) return BigInt(1);
    const BigInt d = depth_bound(state, mode).first;
    if (d > 4'000'000)
        throw std::overflow_error("chart bound exceeds representable size (depth bound " +
                                  d.str() + ")");
    const unsigned exp = d.convert_to<unsigned>();
    switch (mode) {
        case Mode::MaxOrd: return boost::multiprecision::pow(BigInt(state.n()), exp);
        case Mode::Codim2: return BigInt(1) << exp;
        case Mode::MinCodim:
        case Mode::Exceptional: return boost::multiprecision::pow(BigInt(4), exp);
    }
    return BigInt(0);
}

BoundReport make_bound_report(const BinomialState& root_state, const RunResult& run) {
    BoundReport r;
    r.mode = run.mode;
    auto [d, ok] = depth_bound(root_state, run.mode);
    r.depth_bound = d;
    r.bound_applicable = ok;
    r.chart_bound = chart_bound(root_state, run.mode);
    r.depth_actual = run.stats.max_depth;
    r.total_actual = run.stats.total;
    return r;
}

}  // namespace monoforge
