#pragma once

#include <string>
#include <vector>

#include "monoforge/bounds.hpp"
#include "monoforge/engine.hpp"
#include "monoforge/multirun.hpp"

namespace monoforge {

// JSON schema v1: { version, mode, n, variables, charts:[{index, A, B, C, E,
// iota|null, center|null, parent, ordinal, finished}], stats }. Keys are
// sorted and no volatile data is included, so equal runs serialize to equal
// bytes. Variable indices in `center` are 1-based, matching chart indices.
std::string run_to_json(const RunResult& run, const std::vector<std::string>& variables,
                        bool timestamps = false);

std::string multirun_to_json(const MultiRunResult& run, const std::vector<std::string>& variables,
                             bool timestamps = false);

std::string bound_report_to_json(const BoundReport& report, const std::string& expression,
                                 int n, bool holds);

// Directed tree in Graphviz format; one box per chart labeled with the
// total transform, root labeled with the input binomial.
std::string run_to_dot(const RunResult& run, const std::vector<std::string>& variables);

}  // namespace monoforge
