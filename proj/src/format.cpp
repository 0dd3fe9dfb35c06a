#include "monoforge/format.hpp"

namespace monoforge {

std::string monomial_text(const ExponentVector& v, const std::vector<std::string>& vars) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += vars[i];
        if (v[i] > 1) s += "^" + std::to_string(v[i]);
    }
    return s.empty() ? "1" : s;
}

std::string total_transform_text(const BinomialState& s, const std::vector<std::string>& vars) {
    std::string rho = s.rho;
    std::string op = " - ";
    if (!rho.empty() && rho[0] == '-') {
        op = " + ";
        rho = rho.substr(1);
    }
    std::string right = monomial_text(s.B, vars);
    if (rho != "1") right = right == "1" ? rho : rho + "*" + right;
    const std::string core = monomial_text(s.A, vars) + op + right;
    if (entry_sum(s.C) == 0) return core;
    return monomial_text(s.C, vars) + "*(" + core + ")";
}

std::vector<std::string> default_variables(int n) {
    std::vector<std::string> vars;
    vars.reserve(n);
    for (int i = 1; i <= n; ++i) vars.push_back("x" + std::to_string(i));
    return vars;
}

}  // namespace monoforge
