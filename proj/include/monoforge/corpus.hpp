#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "monoforge/engine.hpp"

namespace monoforge {

// One line of a corpus file:
//   expr ; mode1=l/t ; mode2=l/t ; mode3=l/t ; mode4=l/t [; skip-modeK=reason]
// Any subset of the four expectations may be present; a line with none must
// say `record-only` instead. Full-line '#' comments and blank lines are
// ignored.
struct CorpusEntry {
    std::string expression;
    std::optional<std::pair<int, int>> expected[4];  // {leaves, total} per mode
    std::optional<std::string> skip_reason[4];
    bool record_only = false;
    int line_no = 0;
};

std::vector<CorpusEntry> load_corpus(std::istream& in);
std::vector<CorpusEntry> load_corpus_file(const std::string& path);

enum class CellStatus { Pass, Fail, Skipped, Recorded };

struct CorpusCell {
    int row = 0;  // 1-based entry ordinal
    Mode mode = Mode::MaxOrd;
    CellStatus status = CellStatus::Recorded;
    std::optional<std::pair<int, int>> expected;
    int leaves = 0;
    int total = 0;
    std::string note;  // skip reason, if any
};

struct CorpusReport {
    std::vector<CorpusCell> cells;  // 4 per row, corpus order
    int mismatches = 0;
};

// Runs every entry under all four modes. Rows are independent and may be
// processed by several workers; the report always follows corpus order.
CorpusReport run_corpus(const std::vector<CorpusEntry>& entries, int threads = 1);

}  // namespace monoforge
