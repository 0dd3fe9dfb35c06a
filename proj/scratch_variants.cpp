// Temporary: sweep center_mincodim variants against all table rows (deleted before finalizing).
#include <algorithm>
#include <cstdio>
#include <vector>

#include "monoforge/core.hpp"
#include "monoforge/engine.hpp"

using namespace monoforge;

// slot pick styles: 0 = first argmax, 1 = last argmax, 2 = first >=2, 3 = last >=2
static int pick_slot(const ExponentVector& v, int style) {
    const int n = (int)v.size();
    Exp mx = 0;
    for (Exp e : v) mx = std::max(mx, e);
    switch (style) {
        case 0:
            for (int i = 0; i < n; ++i)
                if (v[i] == mx) return i;
            break;
        case 1:
            for (int i = n - 1; i >= 0; --i)
                if (v[i] == mx) return i;
            break;
        case 2:
            for (int i = 0; i < n; ++i)
                if (v[i] >= 2) return i;
            break;
        case 3:
            for (int i = n - 1; i >= 0; --i)
                if (v[i] >= 2) return i;
            break;
    }
    return -1;
}

static int next_one(const ExponentVector& v, int after) {
    for (int i = after + 1; i < (int)v.size(); ++i)
        if (v[i] == 1) return i;
    return -1;
}
static int first_one(const ExponentVector& v) {
    for (int i = 0; i < (int)v.size(); ++i)
        if (v[i] == 1) return i;
    return -1;
}

static int g_ii = 0, g_iii = 0;
static int g_u_ii = 0, g_u_iii = 0, g_u_iv = 0;  // 0 = first two units, 1 = last two, 2 = first+last

static std::vector<int> pick_units(const ExponentVector& v, int style) {
    std::vector<int> ones;
    for (int i = 0; i < (int)v.size(); ++i)
        if (v[i] == 1) ones.push_back(i);
    if (style == 0) return {ones[0], ones[1]};
    if (style == 1) return {ones[(int)ones.size() - 2], ones[(int)ones.size() - 1]};
    return {ones.front(), ones.back()};
}

static std::vector<int> v_mincodim(const BinomialState& s) {
    const Exp alpha = max_entry(s.A), beta = max_entry(s.B);
    const int i1 = first_argmax(s.A), i2 = first_argmax(s.B);
    const Exp minsum = std::min(entry_sum(s.A), entry_sum(s.B));
    std::vector<int> I;
    if (std::min(alpha, beta) >= 2 || minsum == 1) {
        I = {i1, i2};
    } else if (alpha == 1 && beta >= 2) {
        I = pick_units(s.A, g_u_ii);
        I.push_back(pick_slot(s.B, g_ii));
    } else if (alpha >= 2 && beta == 1) {
        I = pick_units(s.B, g_u_iii);
        I.push_back(pick_slot(s.A, g_iii));
    } else {
        I = pick_units(s.A, g_u_iv);
        auto bu = pick_units(s.B, g_u_iv);
        I.insert(I.end(), bu.begin(), bu.end());
    }
    std::sort(I.begin(), I.end());
    I.erase(std::unique(I.begin(), I.end()), I.end());
    return I;
}

static std::vector<int> v_exceptional(const BinomialState& s) {
    const Exp alpha = max_entry(s.A), beta = max_entry(s.B);
    const int i1 = first_argmax(s.A), i2 = first_argmax(s.B);
    if (std::min(alpha, beta) >= 2 || std::min(entry_sum(s.A), entry_sum(s.B)) == 1 ||
        s.E[i1] + s.E[i2] > 0)
        return {std::min(i1, i2), std::max(i1, i2)};
    return v_mincodim(s);
}

static Stats run(const ExponentVector& A, const ExponentVector& B, bool exc) {
    struct Node {
        BinomialState s;
        std::vector<int> center;
        bool fin;
        int depth;
    };
    std::vector<Node> L;
    BinomialState root = make_root_state(A, B);
    Node r{root, {}, check_finished(root), 0};
    if (!r.fin) r.center = exc ? v_exceptional(root) : v_mincodim(root);
    L.push_back(std::move(r));
    for (std::size_t i = 0; i < L.size(); ++i) {
        if (L[i].fin) continue;
        auto I = L[i].center;
        int d = L[i].depth;
        for (int var : I) {
            BinomialState ns = transform(L[i].s, I, var);
            Node c{ns, {}, check_finished(ns), d + 1};
            if (!c.fin) c.center = exc ? v_exceptional(ns) : v_mincodim(ns);
            L.push_back(std::move(c));
        }
    }
    Stats st;
    st.total = (int)L.size();
    for (auto& n : L)
        if (n.fin) ++st.leaves;
    return st;
}

struct Row {
    const char* name;
    ExponentVector A, B;
    int e3[2], e4[2];
};

int main() {
    std::vector<Row> rows;
    auto prod = [](int lo, int hi, int n) {
        ExponentVector v(n, 0);
        for (int i = lo; i <= hi; ++i) v[i - 1] = 1;
        return v;
    };
    auto mono = [](int var, int e, int n) {
        ExponentVector v(n, 0);
        v[var - 1] = e;
        return v;
    };
    auto expo = [](std::vector<std::pair<int, int>> ve, int n) {
        ExponentVector v(n, 0);
        for (auto [var, e] : ve) v[var - 1] = e;
        return v;
    };
    auto ramp = [&](int from, int to, int e0, int n) {
        std::vector<std::pair<int, int>> ve;
        for (int v = from, e = e0; v <= to; ++v, ++e) ve.push_back({v, e});
        return expo(ve, n);
    };
    rows.push_back({"4", prod(1, 3, 6), prod(4, 6, 6), {40, 53}, {40, 53}});
    rows.push_back({"5", prod(1, 3, 7), prod(4, 7, 7), {124, 165}, {124, 165}});
    rows.push_back({"10", prod(1, 5, 10), prod(6, 10, 10), {6688, 8917}, {6688, 8917}});
    rows.push_back({"14", prod(1, 3, 4), mono(4, 4, 4), {21, 31}, {21, 38}});
    rows.push_back({"17", prod(1, 6, 7), mono(7, 4, 7), {1365, 2047}, {1365, 2698}});
    rows.push_back({"19", prod(1, 3, 4), mono(4, 3, 4), {19, 30}, {13, 22}});
    rows.push_back({"20", prod(1, 4, 5), mono(5, 3, 5), {104, 164}, {40, 72}});
    rows.push_back({"21", prod(1, 3, 4), mono(4, 5, 4), {43, 67}, {31, 58}});
    rows.push_back({"22", prod(1, 4, 5), mono(5, 5, 5), {364, 565}, {156, 304}});
    rows.push_back({"23", prod(1, 5, 6), mono(6, 5, 6), {3381, 5223}, {781, 1546}});
    rows.push_back({"24", prod(1, 6, 7), mono(7, 5, 7), {32782, 50521}, {3906, 7780}});
    rows.push_back({"27", mono(1, 2, 5), ramp(2, 5, 3, 5), {15, 28}, {15, 29}});
    rows.push_back({"28", mono(1, 2, 11), ramp(2, 11, 3, 11), {98, 180}, {98, 195}});
    rows.push_back({"29", mono(1, 2, 16), ramp(2, 16, 3, 16), {582, 1036}, {582, 1163}});
    rows.push_back({"30", prod(1, 2, 4), ramp(3, 4, 3, 4), {8, 12}, {8, 13}});
    rows.push_back({"31", prod(1, 2, 5), ramp(3, 5, 3, 5), {16, 24}, {13, 22}});
    rows.push_back({"32", prod(1, 2, 6), ramp(3, 6, 3, 6), {22, 33}, {19, 33}});
    rows.push_back({"33", prod(1, 2, 12), ramp(3, 12, 3, 12), {132, 198}, {76, 141}});
    rows.push_back({"34", prod(1, 2, 17), ramp(3, 17, 3, 17), {652, 978}, {151, 286}});
    rows.push_back({"39", expo({{1, 1}, {2, 2}}, 4), expo({{3, 1}, {4, 2}}, 4), {2, 3}, {2, 3}});
    rows.push_back({"40", expo({{1, 2}, {2, 3}}, 6), expo({{4, 1}, {5, 2}, {6, 2}}, 6), {22, 42}, {24, 47}});
    rows.push_back({"41", expo({{1, 1}, {2, 2}, {3, 3}}, 6), expo({{4, 1}, {5, 2}, {6, 3}}, 6), {16, 29}, {16, 29}});
    rows.push_back({"42", expo({{1, 2}, {2, 2}, {3, 2}}, 6), expo({{4, 1}, {5, 2}, {6, 3}}, 6), {108, 191}, {115, 218}});
    rows.push_back({"43", expo({{1, 2}, {2, 3}, {3, 3}}, 7), expo({{4, 1}, {5, 2}, {6, 2}, {7, 3}}, 7), {104, 196}, {124, 246}});
    rows.push_back({"44", expo({{1, 1}, {2, 2}, {3, 3}, {4, 4}}, 8), expo({{5, 1}, {6, 2}, {7, 3}, {8, 4}}, 8), {206, 371}, {213, 392}});
    rows.push_back({"41.2", expo({{1, 3}, {2, 1}, {3, 2}}, 6), expo({{4, 3}, {5, 1}, {6, 2}}, 6), {16, 29}, {12, 23}});
    rows.push_back({"41.3", expo({{1, 2}, {2, 1}, {3, 3}}, 6), expo({{4, 2}, {5, 1}, {6, 3}}, 6), {14, 25}, {14, 25}});
    rows.push_back({"27.2", mono(1, 2, 5), expo({{2, 5}, {3, 3}, {4, 6}, {5, 4}}, 5), {15, 28}, {15, 29}});
    rows.push_back({"28.2", mono(1, 2, 11), expo({{2, 11}, {3, 9}, {4, 7}, {5, 5}, {6, 3}, {7, 12}, {8, 10}, {9, 8}, {10, 6}, {11, 4}}, 11), {98, 180}, {98, 195}});
    rows.push_back({"33.2", prod(1, 2, 12), expo({{3, 12}, {4, 11}, {5, 10}, {6, 9}, {7, 8}, {8, 7}, {9, 6}, {10, 5}, {11, 4}, {12, 3}}, 12), {132, 198}, {76, 141}});
    rows.push_back({"38.2", mono(1, 2, 17), expo({{2, 1}, {3, 2}, {4, 2}, {5, 2}, {6, 2}, {7, 2}, {8, 2}, {9, 2}, {10, 2}, {11, 2}, {12, 2}, {13, 2}, {14, 2}, {15, 2}, {16, 2}, {17, 2}}, 17), {16, 31}, {16, 31}});

    for (int uii = 0; uii < 3; ++uii) {
        for (int uiii = 0; uiii < 3; ++uiii) {
          for (int uiv = 0; uiv < 3; ++uiv) {
            g_u_ii = uii; g_u_iii = uiii; g_u_iv = uiv;
            g_ii = 0; g_iii = 0;
            int bad3 = 0, bad4 = 0;
            const char* worst = "";
            for (auto& r : rows) {
                Stats s3 = run(r.A, r.B, false);
                if (s3.leaves != r.e3[0] || s3.total != r.e3[1]) {
                    ++bad3;
                    worst = r.name;
                }
                Stats s4 = run(r.A, r.B, true);
                if (s4.leaves != r.e4[0] || s4.total != r.e4[1]) {
                    ++bad4;
                    worst = r.name;
                }
            }
            std::printf("u_ii=%d u_iii=%d u_iv=%d -> bad mode3=%d bad mode4=%d (last bad: %s)\n",
                        uii, uiii, uiv, bad3, bad4, worst);
          }
        }
    }
    return 0;
}
