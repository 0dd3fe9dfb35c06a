// Temporary: full Fig 2/3/4 sweep against expected values (deleted before finalizing).
#include <cstdio>
#include <string>
#include <vector>

#include "monoforge/engine.hpp"

using namespace monoforge;

struct Row {
    const char* name;
    ExponentVector A, B;
    int exp[4][2];  // per mode: {leaves, total}; -1 = no expectation
};

static ExponentVector prod(int lo, int hi, int n) {  // x_lo..x_hi, each exponent 1
    ExponentVector v(n, 0);
    for (int i = lo; i <= hi; ++i) v[i - 1] = 1;
    return v;
}
static ExponentVector mono(int var, int e, int n) {
    ExponentVector v(n, 0);
    v[var - 1] = e;
    return v;
}
static ExponentVector expo(std::vector<std::pair<int, int>> ve, int n) {
    ExponentVector v(n, 0);
    for (auto [var, e] : ve) v[var - 1] = e;
    return v;
}

int main() {
    std::vector<Row> rows;
    // ---- Fig 2 ----
    rows.push_back({"1", prod(1, 2, 4), prod(3, 4, 4), {{4, 5}, {2, 3}, {4, 5}, {4, 5}}});
    rows.push_back({"2", prod(1, 2, 5), prod(3, 5, 5), {{10, 13}, {3, 5}, {10, 13}, {10, 13}}});
    rows.push_back({"3", prod(1, 2, 6), prod(3, 6, 6), {{22, 29}, {4, 7}, {22, 29}, {22, 29}}});
    rows.push_back({"4", prod(1, 3, 6), prod(4, 6, 6), {{60, 79}, {6, 11}, {40, 53}, {40, 53}}});
    rows.push_back({"5", prod(1, 3, 7), prod(4, 7, 7), {{246, 325}, {10, 19}, {124, 165}, {124, 165}}});
    rows.push_back({"6", prod(1, 3, 8), prod(4, 8, 8), {{876, 1159}, {15, 29}, {340, 453}, {340, 453}}});
    rows.push_back({"7", prod(1, 4, 8), prod(5, 8, 8), {{1968, 2601}, {20, 39}, {496, 661}, {496, 661}}});
    rows.push_back({"9", prod(1, 4, 9), prod(5, 9, 9), {{11376, 15041}, {35, 69}, {1672, 2229}, {124, 165}}});
    rows.push_back({"10", prod(1, 5, 10), prod(6, 10, 10), {{113760, 150411}, {70, 139}, {6688, 8917}, {6688, 8917}}});
    rows.push_back({"11", prod(1, 2, 3), mono(3, 2, 3), {{3, 4}, {3, 5}, {3, 4}, {3, 4}}});
    rows.push_back({"12", prod(1, 3, 4), mono(4, 2, 4), {{7, 10}, {7, 13}, {7, 10}, {7, 10}}});
    rows.push_back({"13", prod(1, 4, 5), mono(5, 2, 5), {{15, 22}, {15, 29}, {15, 22}, {15, 22}}});
    rows.push_back({"14", prod(1, 3, 4), mono(4, 4, 4), {{21, 33}, {21, 41}, {21, 31}, {21, 38}}});
    rows.push_back({"15", prod(1, 4, 5), mono(5, 4, 5), {{85, 134}, {85, 169}, {85, 127}, {85, 162}}});
    rows.push_back({"16", prod(1, 5, 6), mono(6, 4, 6), {{341, 538}, {341, 681}, {341, 511}, {341, 666}}});
    rows.push_back({"17", prod(1, 6, 7), mono(7, 4, 7), {{1365, 2154}, {1365, 2729}, {1365, 2047}, {1365, 2698}}});
    rows.push_back({"18", prod(1, 2, 3), mono(3, 3, 3), {{4, 6}, {4, 7}, {4, 6}, {4, 6}}});
    rows.push_back({"19", prod(1, 3, 4), mono(4, 3, 4), {{13, 20}, {13, 25}, {19, 30}, {13, 22}}});
    rows.push_back({"20", prod(1, 4, 5), mono(5, 3, 5), {{40, 62}, {40, 79}, {104, 164}, {40, 72}}});
    rows.push_back({"21", prod(1, 3, 4), mono(4, 5, 4), {{31, 47}, {31, 61}, {43, 67}, {31, 58}}});
    rows.push_back({"22", prod(1, 4, 5), mono(5, 5, 5), {{236, 364}, {156, 311}, {364, 565}, {156, 304}}});
    rows.push_back({"23", prod(1, 5, 6), mono(6, 5, 6), {{1181, 1822}, {781, 1561}, {3381, 5223}, {781, 1546}}});
    rows.push_back({"24", prod(1, 6, 7), mono(7, 5, 7), {{5906, 9112}, {3906, 7811}, {32782, 50521}, {3906, 7780}}});
    // ---- Fig 3 ----
    auto ramp = [&](int from, int to, int e0) {  // x_from^e0 * x_{from+1}^{e0+1} ...
        std::vector<std::pair<int, int>> ve;
        for (int v = from, e = e0; v <= to; ++v, ++e) ve.push_back({v, e});
        return ve;
    };
    rows.push_back({"25", mono(1, 2, 3), expo(ramp(2, 3, 3), 3), {{6, 11}, {6, 11}, {6, 11}, {6, 11}}});
    rows.push_back({"26", mono(1, 2, 4), expo(ramp(2, 4, 3), 4), {{12, 22}, {12, 23}, {12, 22}, {12, 23}}});
    rows.push_back({"27", mono(1, 2, 5), expo(ramp(2, 5, 3), 5), {{18, 34}, {15, 29}, {15, 28}, {15, 29}}});
    rows.push_back({"28", mono(1, 2, 11), expo(ramp(2, 11, 3), 11), {{288, 560}, {98, 195}, {98, 180}, {98, 195}}});
    rows.push_back({"29", mono(1, 2, 16), expo(ramp(2, 16, 3), 16), {{2304, 4480}, {582, 1163}, {582, 1036}, {582, 1163}}});
    rows.push_back({"30", prod(1, 2, 4), expo(ramp(3, 4, 3), 4), {{8, 12}, {8, 15}, {8, 12}, {8, 13}}});
    rows.push_back({"31", prod(1, 2, 5), expo(ramp(3, 5, 3), 5), {{16, 24}, {13, 25}, {16, 24}, {13, 22}}});
    rows.push_back({"32", prod(1, 2, 6), expo(ramp(3, 6, 3), 6), {{28, 42}, {19, 37}, {22, 33}, {19, 33}}});
    rows.push_back({"33", prod(1, 2, 12), expo(ramp(3, 12, 3), 12), {{512, 768}, {76, 151}, {132, 198}, {76, 141}}});
    rows.push_back({"34", prod(1, 2, 17), expo(ramp(3, 17, 3), 17), {{4096, 6144}, {151, 301}, {652, 978}, {151, 286}}});
    auto sq_then_lin = [&](int n) {  // x2^2 ... x_{n-1}^2 x_n
        std::vector<std::pair<int, int>> ve;
        for (int v = 2; v < n; ++v) ve.push_back({v, 2});
        ve.push_back({n, 1});
        return ve;
    };
    rows.push_back({"35", mono(1, 2, 3), expo(sq_then_lin(3), 3), {{2, 3}, {2, 3}, {2, 3}, {2, 3}}});
    rows.push_back({"36", mono(1, 2, 4), expo(sq_then_lin(4), 4), {{3, 5}, {3, 5}, {3, 5}, {3, 5}}});
    rows.push_back({"37", mono(1, 2, 12), expo(sq_then_lin(12), 12), {{11, 21}, {11, 21}, {11, 21}, {11, 21}}});
    rows.push_back({"38", mono(1, 2, 17), expo(sq_then_lin(17), 17), {{16, 31}, {16, 31}, {16, 31}, {16, 31}}});
    rows.push_back({"39", expo({{1, 1}, {2, 2}}, 4), expo({{3, 1}, {4, 2}}, 4), {{6, 9}, {2, 3}, {2, 3}, {2, 3}}});
    rows.push_back({"40", expo({{1, 2}, {2, 3}}, 6), expo({{4, 1}, {5, 2}, {6, 2}}, 6), {{146, 264}, {24, 47}, {22, 42}, {24, 47}}});
    rows.push_back({"41", expo({{1, 1}, {2, 2}, {3, 3}}, 6), expo({{4, 1}, {5, 2}, {6, 3}}, 6), {{385, 677}, {26, 51}, {16, 29}, {16, 29}}});
    rows.push_back({"42", expo({{1, 2}, {2, 2}, {3, 2}}, 6), expo({{4, 1}, {5, 2}, {6, 3}}, 6), {{1486, 2677}, {154, 307}, {108, 191}, {115, 218}}});
    rows.push_back({"43", expo({{1, 2}, {2, 3}, {3, 3}}, 7), expo({{4, 1}, {5, 2}, {6, 2}, {7, 3}}, 7), {{18702, 34262}, {126, 251}, {104, 196}, {124, 246}}});
    rows.push_back({"44", expo({{1, 1}, {2, 2}, {3, 3}, {4, 4}}, 8), expo({{5, 1}, {6, 2}, {7, 3}, {8, 4}}, 8), {{107062, 196798}, {260, 519}, {206, 371}, {213, 392}}});
    // ---- Fig 4 variants ----
    rows.push_back({"27.2", mono(1, 2, 5), expo({{2, 5}, {3, 3}, {4, 6}, {5, 4}}, 5), {{20, 38}, {15, 29}, {15, 28}, {15, 29}}});
    rows.push_back({"27.3", mono(1, 2, 5), expo({{2, 6}, {3, 5}, {4, 4}, {5, 3}}, 5), {{15, 28}, {15, 29}, {15, 28}, {15, 29}}});
    rows.push_back({"28.2", mono(1, 2, 11), expo({{2, 11}, {3, 9}, {4, 7}, {5, 5}, {6, 3}, {7, 12}, {8, 10}, {9, 8}, {10, 6}, {11, 4}}, 11), {{414, 812}, {98, 195}, {98, 180}, {98, 195}}});
    rows.push_back({"28.3", mono(1, 2, 11), expo({{2, 12}, {3, 11}, {4, 10}, {5, 9}, {6, 8}, {7, 7}, {8, 6}, {9, 5}, {10, 4}, {11, 3}}, 11), {{141, 266}, {98, 195}, {98, 180}, {98, 195}}});
    rows.push_back({"28.4", mono(1, 2, 11), expo({{2, 12}, {3, 10}, {4, 8}, {5, 6}, {6, 4}, {7, 11}, {8, 9}, {9, 7}, {10, 5}, {11, 3}}, 11), {{114, 212}, {98, 195}, {98, 180}, {98, 195}}});
    rows.push_back({"31.2", prod(1, 2, 5), expo({{3, 3}, {4, 5}, {5, 4}}, 5), {{20, 30}, {13, 25}, {16, 24}, {13, 22}}});
    rows.push_back({"32.2", prod(1, 2, 6), expo({{3, 6}, {4, 5}, {5, 4}, {6, 3}}, 6), {{22, 33}, {19, 37}, {22, 33}, {19, 33}}});
    rows.push_back({"33.2", prod(1, 2, 12), expo({{3, 12}, {4, 11}, {5, 10}, {6, 9}, {7, 8}, {8, 7}, {9, 6}, {10, 5}, {11, 4}, {12, 3}}, 12), {{218, 327}, {76, 151}, {132, 198}, {76, 141}}});
    rows.push_back({"38.2", mono(1, 2, 17), expo({{2, 1}, {3, 2}, {4, 2}, {5, 2}, {6, 2}, {7, 2}, {8, 2}, {9, 2}, {10, 2}, {11, 2}, {12, 2}, {13, 2}, {14, 2}, {15, 2}, {16, 2}, {17, 2}}, 17), {{16, 31}, {16, 31}, {16, 31}, {16, 31}}});
    rows.push_back({"41.2", expo({{1, 3}, {2, 1}, {3, 2}}, 6), expo({{4, 3}, {5, 1}, {6, 2}}, 6), {{244, 427}, {12, 23}, {16, 29}, {12, 23}}});
    rows.push_back({"41.3", expo({{1, 2}, {2, 1}, {3, 3}}, 6), expo({{4, 2}, {5, 1}, {6, 3}}, 6), {{274, 483}, {19, 37}, {14, 25}, {14, 25}}});

    int bad = 0;
    for (const Row& r : rows) {
        for (int m = 0; m < 4; ++m) {
            RunResult res = monomialize(r.A, r.B, kAllModes[m]);
            if (res.stats.leaves != r.exp[m][0] || res.stats.total != r.exp[m][1]) {
                std::printf("MISMATCH row %-5s mode %d: expected %d/%d got %d/%d\n", r.name, m + 1,
                            r.exp[m][0], r.exp[m][1], res.stats.leaves, res.stats.total);
                ++bad;
            }
        }
    }
    std::printf("%d mismatching cells\n", bad);
    return bad != 0;
}
