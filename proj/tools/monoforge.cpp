#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "monoforge/bounds.hpp"
#include "monoforge/corpus.hpp"
#include "monoforge/engine.hpp"
#include "monoforge/format.hpp"
#include "monoforge/multirun.hpp"
#include "monoforge/parser.hpp"
#include "monoforge/serialize.hpp"

namespace {

using namespace monoforge;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitEngine = 3;
constexpr int kExitMismatch = 4;

int env_threads() {
    const char* v = std::getenv("MONOFORGE_THREADS");
    if (!v) return 1;
    const int t = std::atoi(v);
    return t > 0 ? t : 1;
}

std::optional<std::vector<std::string>> split_vars(const std::string& csv) {
    if (csv.empty()) return std::nullopt;
    std::vector<std::string> vars;
    std::string cur;
    for (char c : csv) {
        if (c == ',') {
            if (!cur.empty()) vars.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty()) vars.push_back(cur);
    return vars;
}

void write_artifact(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << content;
}

int cmd_monomialize(const std::string& expr, int mode_int, const std::string& vars_csv,
                    const std::string& json_path, const std::string& dot_path, bool timestamps) {
    const ParsedBinomial b = parse(expr, split_vars(vars_csv));
    const Mode mode = mode_from_int(mode_int);
    const RunResult run = monomialize(b.A_raw, b.B_raw, mode, b.rho, env_threads());
    if (!json_path.empty()) write_artifact(json_path, run_to_json(run, b.variables, timestamps));
    if (!dot_path.empty()) write_artifact(dot_path, run_to_dot(run, b.variables));
    std::cout << "mode=" << mode_int << " leaves=" << run.stats.leaves
              << " total=" << run.stats.total << " depth=" << run.stats.max_depth << "\n";
    return kExitOk;
}

int cmd_compare(const std::string& expr, const std::string& vars_csv) {
    const ParsedBinomial b = parse(expr, split_vars(vars_csv));
    std::cout << "# " << render(b) << "\n";
    std::cout << "mode  name       leaves  total  depth\n";
    for (Mode m : kAllModes) {
        const RunResult run = monomialize(b.A_raw, b.B_raw, m, b.rho, env_threads());
        std::printf("%-5d %-10s %6d %6d %6d\n", static_cast<int>(m), mode_name(m),
                    run.stats.leaves, run.stats.total, run.stats.max_depth);
    }
    return kExitOk;
}

int cmd_batch(const std::string& path, bool check) {
    const std::vector<CorpusEntry> entries = load_corpus_file(path);
    const CorpusReport report = run_corpus(entries, env_threads());
    for (const CorpusCell& c : report.cells) {
        const char* status = nullptr;
        switch (c.status) {
            case CellStatus::Pass: status = "pass"; break;
            case CellStatus::Fail: status = "FAIL"; break;
            case CellStatus::Skipped: status = "skip"; break;
            case CellStatus::Recorded: status = "rec "; break;
        }
        std::printf("row %3d mode %d: %s got %d/%d", c.row, static_cast<int>(c.mode), status,
                    c.leaves, c.total);
        if (c.expected) std::printf(" expected %d/%d", c.expected->first, c.expected->second);
        if (!c.note.empty()) std::printf("  (%s)", c.note.c_str());
        std::printf("\n");
    }
    std::printf("rows=%zu mismatches=%d\n", entries.size(), report.mismatches);
    if (check && report.mismatches > 0) return kExitMismatch;
    return kExitOk;
}

int cmd_bounds(const std::string& expr, int mode_int, const std::string& vars_csv, bool as_json) {
    const ParsedBinomial b = parse(expr, split_vars(vars_csv));
    const Mode mode = mode_from_int(mode_int);
    const BinomialState root = make_root_state(b.A_raw, b.B_raw, b.rho);
    const RunResult run = monomialize(b.A_raw, b.B_raw, mode, b.rho, env_threads());
    const BoundReport r = make_bound_report(root, run);
    const bool holds = !r.bound_applicable ||
                       (BigInt(r.depth_actual) <= r.depth_bound && BigInt(r.total_actual) <= r.chart_bound);
    if (as_json) {
        std::cout << bound_report_to_json(r, render(b), b.variables.size(), holds);
    } else {
        std::cout << "mode=" << mode_int << " depth_bound=" << r.depth_bound.str()
                  << " chart_bound=" << r.chart_bound.str() << " depth_actual=" << r.depth_actual
                  << " total_actual=" << r.total_actual
                  << " applicable=" << (r.bound_applicable ? "true" : "false")
                  << " holds=" << (holds ? "true" : "false") << "\n";
    }
    return kExitOk;
}

int cmd_sequence(const std::vector<std::string>& exprs, int mode_int,
                 const std::vector<int>& order, const std::string& vars_csv,
                 const std::string& json_path, bool timestamps) {
    std::vector<std::string> ordered = exprs;
    if (!order.empty()) {
        if (order.size() != exprs.size())
            throw std::runtime_error("--order must permute all expressions");
        ordered.clear();
        std::vector<bool> seen(exprs.size(), false);
        for (int k : order) {
            if (k < 1 || k > static_cast<int>(exprs.size()) || seen[k - 1])
                throw std::runtime_error("--order must be a permutation of 1.." +
                                         std::to_string(exprs.size()));
            seen[k - 1] = true;
            ordered.push_back(exprs[k - 1]);
        }
    }
    const std::vector<ParsedBinomial> parsed = parse_all(ordered, split_vars(vars_csv));
    std::vector<RawBinomial> fs;
    fs.reserve(parsed.size());
    for (const ParsedBinomial& b : parsed) fs.push_back({b.A_raw, b.B_raw, b.rho});
    const Mode mode = mode_from_int(mode_int);
    const MultiRunResult run = sequential_monomialize(fs, mode, env_threads());
    if (!json_path.empty())
        write_artifact(json_path, multirun_to_json(run, parsed.front().variables, timestamps));
    std::cout << "final=" << run.stats.leaves << " total=" << run.stats.total
              << " stalled=" << run.stalled << " depth=" << run.stats.max_depth << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"monoforge: local monomialization of binomials via blowups"};
    app.require_subcommand(1);

    std::string expr, vars_csv, json_path, dot_path, corpus_path;
    std::vector<std::string> exprs;
    std::vector<int> order;
    int mode_int = 2;
    bool timestamps = false, check = false, as_json = false;

    CLI::App* mono = app.add_subcommand("monomialize", "run one strategy on one binomial");
    mono->add_option("expr", expr, "binomial, e.g. \"x1^3*x2^2 - x3^5*x4\"")->required();
    mono->add_option("-m,--mode", mode_int, "center strategy 1..4")->required()
        ->check(CLI::Range(1, 4));
    mono->add_option("--vars", vars_csv, "comma-separated variable order");
    mono->add_option("--json", json_path, "write the chart list as JSON ('-' = stdout)");
    mono->add_option("--dot", dot_path, "write the blowup tree as DOT ('-' = stdout)");
    mono->add_flag("--timestamps", timestamps, "include a generation timestamp in JSON");

    CLI::App* cmp = app.add_subcommand("compare", "run all four strategies");
    cmp->add_option("expr", expr)->required();
    cmp->add_option("--vars", vars_csv);

    CLI::App* batch = app.add_subcommand("batch", "run a corpus file");
    batch->add_option("corpus", corpus_path, "corpus file path")->required();
    batch->add_flag("--check", check, "exit 4 unless every expectation matches");

    CLI::App* bounds = app.add_subcommand("bounds", "worst-case bounds vs. an actual run");
    bounds->add_option("expr", expr)->required();
    bounds->add_option("-m,--mode", mode_int)->required()->check(CLI::Range(1, 4));
    bounds->add_option("--vars", vars_csv);
    bounds->add_flag("--json", as_json, "emit a JSON report");

    CLI::App* seq = app.add_subcommand("sequence", "monomialize several binomials in order");
    seq->add_option("exprs", exprs, "binomials over one shared variable set")->required();
    seq->add_option("-m,--mode", mode_int)->required()->check(CLI::Range(1, 4));
    seq->add_option("--order", order, "1-based permutation of the input list");
    seq->add_option("--vars", vars_csv);
    seq->add_option("--json", json_path);
    seq->add_flag("--timestamps", timestamps);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitParse;
    }

    try {
        if (mono->parsed())
            return cmd_monomialize(expr, mode_int, vars_csv, json_path, dot_path, timestamps);
        if (cmp->parsed()) return cmd_compare(expr, vars_csv);
        if (batch->parsed()) return cmd_batch(corpus_path, check);
        if (bounds->parsed()) return cmd_bounds(expr, mode_int, vars_csv, as_json);
        if (seq->parsed())
            return cmd_sequence(exprs, mode_int, order, vars_csv, json_path, timestamps);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitEngine;
    }
    return kExitOk;
}
