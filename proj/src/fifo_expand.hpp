#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace monoforge::detail {

// Drives the main worklist loop: charts [next, size) form a wave whose
// successor blocks may be computed concurrently; blocks are spliced back in
// chart order, so the final list equals the single-threaded one element-wise.
template <typename Chart, typename MakeSuccessors>
void expand_fifo(std::vector<Chart>& charts, MakeSuccessors make_successors, int threads) {
    std::size_t next = 0;
    while (next < charts.size()) {
        const std::size_t wave_begin = next;
        const std::size_t wave_end = charts.size();
        const std::size_t wave_size = wave_end - wave_begin;

        if (threads <= 1 || wave_size < 2) {
            for (std::size_t i = wave_begin; i < wave_end; ++i) {
                auto successors = make_successors(charts[i], static_cast<int>(i) + 1);
                for (auto& c : successors) charts.push_back(std::move(c));
            }
        } else {
            std::vector<std::vector<Chart>> blocks(wave_size);
            const int workers = static_cast<int>(
                std::min<std::size_t>(static_cast<std::size_t>(threads), wave_size));
            std::vector<std::thread> pool;
            pool.reserve(workers);
            for (int w = 0; w < workers; ++w) {
                pool.emplace_back([&, w] {
                    for (std::size_t i = wave_begin + w; i < wave_end; i += workers)
                        blocks[i - wave_begin] =
                            make_successors(charts[i], static_cast<int>(i) + 1);
                });
            }
            for (auto& t : pool) t.join();
            for (auto& block : blocks)
                for (auto& c : block) charts.push_back(std::move(c));
        }
        next = wave_end;
    }
}

}  // namespace monoforge::detail
