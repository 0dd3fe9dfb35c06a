#include "monoforge/serialize.hpp"

#include <chrono>
#include <json.hpp>

#include "monoforge/format.hpp"

namespace monoforge {

namespace {

using nlohmann::json;

json vec_json(const ExponentVector& v) { return json(v); }

json flags_json(const std::vector<std::uint8_t>& e) {
    json a = json::array();
    for (std::uint8_t x : e) a.push_back(static_cast<int>(x));
    return a;
}

json iota_json(const IotaTuple& t) { return json::array({t.alpha, t.a_count, t.beta, t.b_count}); }

json center_json(const std::vector<int>& c) {
    json a = json::array();
    for (int i : c) a.push_back(i + 1);
    return a;
}

std::string timestamp_now() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&t));
    return buf;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string run_to_json(const RunResult& run, const std::vector<std::string>& variables,
                        bool timestamps) {
    json j;
    j["version"] = 1;
    j["mode"] = static_cast<int>(run.mode);
    j["n"] = variables.size();
    j["variables"] = variables;
    j["stats"] = {{"total", run.stats.total},
                  {"leaves", run.stats.leaves},
                  {"max_depth", run.stats.max_depth}};
    json charts = json::array();
    for (std::size_t i = 0; i < run.charts.size(); ++i) {
        const Chart& c = run.charts[i];
        json jc;
        jc["index"] = i + 1;
        jc["A"] = vec_json(c.state.A);
        jc["B"] = vec_json(c.state.B);
        jc["C"] = vec_json(c.state.C);
        jc["E"] = flags_json(c.state.E);
        jc["iota"] = c.iota_val ? iota_json(*c.iota_val) : json();
        jc["center"] = c.center ? center_json(*c.center) : json();
        jc["parent"] = c.parent;
        jc["ordinal"] = c.ordinal;
        jc["finished"] = c.finished;
        charts.push_back(std::move(jc));
    }
    j["charts"] = std::move(charts);
    if (timestamps) j["generated_at"] = timestamp_now();
    return dump(j);
}

std::string multirun_to_json(const MultiRunResult& run, const std::vector<std::string>& variables,
                             bool timestamps) {
    json j;
    j["version"] = 1;
    j["mode"] = static_cast<int>(run.mode);
    j["n"] = variables.size();
    j["variables"] = variables;
    j["stats"] = {{"total", run.stats.total},
                  {"final", run.stats.leaves},
                  {"stalled", run.stalled},
                  {"max_depth", run.stats.max_depth}};
    json charts = json::array();
    for (std::size_t i = 0; i < run.charts.size(); ++i) {
        const MultiChart& c = run.charts[i];
        json jc;
        jc["index"] = i + 1;
        json bins = json::array();
        for (const RawBinomial& f : c.raw)
            bins.push_back({{"A_raw", vec_json(f.A_raw)}, {"B_raw", vec_json(f.B_raw)}, {"rho", f.rho}});
        jc["binomials"] = std::move(bins);
        jc["E"] = flags_json(c.active.E);
        jc["active"] = c.is_leaf() ? json() : json(c.active_index + 1);
        jc["center"] = c.center ? center_json(*c.center) : json();
        jc["parent"] = c.parent;
        jc["ordinal"] = c.ordinal;
        jc["finished"] = c.finished;
        jc["product_condition"] = c.is_leaf() ? json(c.product_condition) : json();
        charts.push_back(std::move(jc));
    }
    j["charts"] = std::move(charts);
    if (timestamps) j["generated_at"] = timestamp_now();
    return dump(j);
}

std::string bound_report_to_json(const BoundReport& report, const std::string& expression,
                                 int n, bool holds) {
    json j;
    j["version"] = 1;
    j["expression"] = expression;
    j["mode"] = static_cast<int>(report.mode);
    j["n"] = n;
    j["depth_bound"] = report.depth_bound.str();
    j["chart_bound"] = report.chart_bound.str();
    j["depth_actual"] = report.depth_actual;
    j["total_actual"] = report.total_actual;
    j["bound_applicable"] = report.bound_applicable;
    j["holds"] = holds;
    return dump(j);
}

std::string run_to_dot(const RunResult& run, const std::vector<std::string>& variables) {
    std::string out = "digraph blowup_tree {\n  node [shape=box];\n";
    for (std::size_t i = 0; i < run.charts.size(); ++i) {
        const Chart& c = run.charts[i];
        std::string label;
        if (c.parent == 0) {
            label = "f = " + total_transform_text(c.state, variables);
        } else {
            const Chart& par = run.charts[c.parent - 1];
            const int var = (*par.center)[c.ordinal - 1];
            label = "D+(" + variables[var] + "): " + total_transform_text(c.state, variables);
        }
        out += "  c" + std::to_string(i + 1) + " [label=\"" + label + "\"];\n";
    }
    for (std::size_t i = 0; i < run.charts.size(); ++i) {
        const Chart& c = run.charts[i];
        if (c.parent != 0)
            out += "  c" + std::to_string(c.parent) + " -> c" + std::to_string(i + 1) + ";\n";
    }
    out += "}\n";
    return out;
}

}  // namespace monoforge
