#include "monoforge/core.hpp"

#include <algorithm>
#include <cassert>

namespace monoforge {

Exp entry_sum(const ExponentVector& v) {
    Exp s = 0;
    for (Exp e : v) s += e;
    return s;
}

Exp max_entry(const ExponentVector& v) {
    Exp m = 0;
    for (Exp e : v) m = std::max(m, e);
    return m;
}

std::vector<int> support(const ExponentVector& v) {
    std::vector<int> idx;
    for (int i = 0; i < static_cast<int>(v.size()); ++i)
        if (v[i] > 0) idx.push_back(i);
    return idx;
}

int first_argmax(const ExponentVector& v) {
    assert(!v.empty());
    int best = 0;
    for (int i = 1; i < static_cast<int>(v.size()); ++i)
        if (v[i] > v[best]) best = i;
    return best;
}

NormalizedPair normalize(const ExponentVector& A_raw, const ExponentVector& B_raw,
                         const std::string& rho) {
    assert(A_raw.size() == B_raw.size());
    const std::size_t n = A_raw.size();
    NormalizedPair out;
    out.A.resize(n);
    out.B.resize(n);
    out.C.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Exp c = std::min(A_raw[i], B_raw[i]);
        out.C[i] = c;
        out.A[i] = A_raw[i] - c;
        out.B[i] = B_raw[i] - c;
    }
    if (entry_sum(out.A) == 0 && entry_sum(out.B) == 0 && rho == "1")
        throw DegenerateZeroError("binomial x^A - x^A is identically zero");
    return out;
}

BinomialState make_root_state(const ExponentVector& A_raw, const ExponentVector& B_raw,
                              const std::string& rho) {
    NormalizedPair p = normalize(A_raw, B_raw, rho);
    BinomialState s;
    s.A = std::move(p.A);
    s.B = std::move(p.B);
    s.C = std::move(p.C);
    s.E.assign(A_raw.size(), 0);
    s.rho = rho;
    return s;
}

IotaTuple iota(const ExponentVector& A, const ExponentVector& B) {
    IotaTuple t;
    t.alpha = max_entry(A);
    t.beta = max_entry(B);
    for (Exp e : A)
        if (e == t.alpha) ++t.a_count;
    for (Exp e : B)
        if (e == t.beta) ++t.b_count;
    return t;
}

InvPair inv_pair(const ExponentVector& A, const ExponentVector& B) {
    const Exp sa = entry_sum(A);
    const Exp sb = entry_sum(B);
    return InvPair{std::min(sa, sb), std::max(sa, sb)};
}

}  // namespace monoforge
