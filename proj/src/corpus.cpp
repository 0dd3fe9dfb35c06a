#include "monoforge/corpus.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "monoforge/parser.hpp"

namespace monoforge {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void bad_line(int line_no, const std::string& what) {
    throw std::runtime_error("corpus line " + std::to_string(line_no) + ": " + what);
}

std::pair<int, int> parse_pair(const std::string& v, int line_no) {
    const auto slash = v.find('/');
    if (slash == std::string::npos) bad_line(line_no, "expected leaves/total, got '" + v + "'");
    try {
        const int leaves = std::stoi(trim(v.substr(0, slash)));
        const int total = std::stoi(trim(v.substr(slash + 1)));
        if (leaves < 0 || total < 0) bad_line(line_no, "negative chart count");
        return {leaves, total};
    } catch (const std::invalid_argument&) {
        bad_line(line_no, "malformed leaves/total pair '" + v + "'");
    } catch (const std::out_of_range&) {
        bad_line(line_no, "chart count out of range in '" + v + "'");
    }
}

}  // namespace

std::vector<CorpusEntry> load_corpus(std::istream& in) {
    std::vector<CorpusEntry> entries;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;

        CorpusEntry e;
        e.line_no = line_no;
        std::stringstream ss(stripped);
        std::string field;
        bool first = true;
        while (std::getline(ss, field, ';')) {
            field = trim(field);
            if (first) {
                e.expression = field;
                first = false;
                continue;
            }
            if (field.empty()) continue;
            if (field == "record-only") {
                e.record_only = true;
                continue;
            }
            const auto eq = field.find('=');
            if (eq == std::string::npos) bad_line(line_no, "malformed field '" + field + "'");
            const std::string key = trim(field.substr(0, eq));
            const std::string value = trim(field.substr(eq + 1));
            if (key.size() == 5 && key.rfind("mode", 0) == 0 && key[4] >= '1' && key[4] <= '4') {
                e.expected[key[4] - '1'] = parse_pair(value, line_no);
            } else if (key.size() == 10 && key.rfind("skip-mode", 0) == 0 && key[9] >= '1' &&
                       key[9] <= '4') {
                if (value.empty()) bad_line(line_no, "skip marker needs a reason");
                e.skip_reason[key[9] - '1'] = value;
            } else {
                bad_line(line_no, "unknown field '" + key + "'");
            }
        }
        if (e.expression.empty()) bad_line(line_no, "missing expression");
        const bool any = e.expected[0] || e.expected[1] || e.expected[2] || e.expected[3];
        if (!any && !e.record_only)
            bad_line(line_no, "no expectations; mark the line record-only if that is intended");
        entries.push_back(std::move(e));
    }
    return entries;
}

std::vector<CorpusEntry> load_corpus_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open corpus file '" + path + "'");
    return load_corpus(in);
}

CorpusReport run_corpus(const std::vector<CorpusEntry>& entries, int threads) {
    CorpusReport report;
    report.cells.resize(entries.size() * 4);

    const auto run_row = [&](std::size_t r) {
        const CorpusEntry& e = entries[r];
        const ParsedBinomial b = parse(e.expression);
        for (int m = 0; m < 4; ++m) {
            CorpusCell& cell = report.cells[r * 4 + m];
            cell.row = static_cast<int>(r) + 1;
            cell.mode = kAllModes[m];
            cell.expected = e.expected[m];
            const RunResult run = monomialize(b.A_raw, b.B_raw, kAllModes[m], b.rho);
            cell.leaves = run.stats.leaves;
            cell.total = run.stats.total;
            if (e.skip_reason[m]) {
                cell.status = CellStatus::Skipped;
                cell.note = *e.skip_reason[m];
            } else if (!e.expected[m]) {
                cell.status = CellStatus::Recorded;
            } else if (cell.leaves == e.expected[m]->first && cell.total == e.expected[m]->second) {
                cell.status = CellStatus::Pass;
            } else {
                cell.status = CellStatus::Fail;
            }
        }
    };

    if (threads <= 1 || entries.size() < 2) {
        for (std::size_t r = 0; r < entries.size(); ++r) run_row(r);
    } else {
        const int workers = static_cast<int>(
            std::min<std::size_t>(static_cast<std::size_t>(threads), entries.size()));
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (std::size_t r = w; r < entries.size(); r += workers) run_row(r);
            });
        for (auto& t : pool) t.join();
    }

    for (const CorpusCell& c : report.cells)
        if (c.status == CellStatus::Fail) ++report.mismatches;
    return report;
}

}  // namespace monoforge
