#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <thread>
#include <vector>

#include "centlab/axioms.hpp"

namespace centlab::detail {

struct ScanOutcome {
    std::uint64_t checked = 0;
    std::uint64_t vacuous = 0;
    std::optional<std::uint64_t> violation_index;
    std::optional<Witness> witness;
};

/**
 * Scans indices [0, count) through `fn`, which returns the verdict for that
 * index or nullopt for indices that are not part of the stream. With
 * short_circuit the scan stops at the lowest violating index. The outcome is
 * identical to a sequential scan regardless of `jobs`: blocks are dispatched
 * in ascending order, a block is skipped only when it starts above an already
 * known violation, and counts are merged over indices up to the winner.
 */
inline ScanOutcome ordered_scan(std::uint64_t count, int jobs, bool short_circuit,
                                const std::function<std::optional<AxiomVerdict>(std::uint64_t)> &fn) {
    ScanOutcome outcome;
    if (count == 0) {
        return outcome;
    }

    if (jobs <= 1) {
        for (std::uint64_t i = 0; i < count; ++i) {
            auto verdict = fn(i);
            if (!verdict) {
                continue;
            }
            ++outcome.checked;
            if (verdict->status == CheckStatus::violated) {
                if (!outcome.violation_index) {
                    outcome.violation_index = i;
                    outcome.witness = std::move(verdict->witness);
                }
                if (short_circuit) {
                    break;
                }
            } else if (verdict->vacuous) {
                ++outcome.vacuous;
            }
        }
        return outcome;
    }

    struct BlockScan {
        bool processed = false;
        std::uint64_t checked = 0;
        std::uint64_t vacuous = 0;
        std::optional<std::uint64_t> violation_index;
        std::optional<Witness> witness;
    };

    const std::uint64_t block_size =
        std::max<std::uint64_t>(1, std::min<std::uint64_t>(4096, count / (std::uint64_t(jobs) * 8) + 1));
    const std::uint64_t block_count = (count + block_size - 1) / block_size;
    std::vector<BlockScan> blocks(block_count);

    std::atomic<std::uint64_t> next_block{0};
    std::atomic<std::uint64_t> best_index{~std::uint64_t{0}};

    auto worker = [&]() {
        while (true) {
            const std::uint64_t b = next_block.fetch_add(1);
            if (b >= block_count) {
                return;
            }
            const std::uint64_t begin = b * block_size;
            const std::uint64_t end = std::min(count, begin + block_size);
            if (short_circuit && begin > best_index.load()) {
                continue; // entirely above a known violation
            }
            BlockScan &scan = blocks[b];
            scan.processed = true;
            for (std::uint64_t i = begin; i < end; ++i) {
                if (short_circuit && i > best_index.load()) {
                    break;
                }
                auto verdict = fn(i);
                if (!verdict) {
                    continue;
                }
                ++scan.checked;
                if (verdict->status == CheckStatus::violated) {
                    scan.violation_index = i;
                    scan.witness = std::move(verdict->witness);
                    std::uint64_t seen = best_index.load();
                    while (i < seen && !best_index.compare_exchange_weak(seen, i)) {
                    }
                    if (short_circuit) {
                        break;
                    }
                } else if (verdict->vacuous) {
                    ++scan.vacuous;
                }
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int t = 0; t < jobs; ++t) {
        pool.emplace_back(worker);
    }
    for (auto &thread : pool) {
        thread.join();
    }

    // Merge in ascending block order; stop at the first violating block.
    for (std::uint64_t b = 0; b < block_count; ++b) {
        const BlockScan &scan = blocks[b];
        outcome.checked += scan.checked;
        outcome.vacuous += scan.vacuous;
        if (scan.violation_index) {
            if (!outcome.violation_index || *scan.violation_index < *outcome.violation_index) {
                outcome.violation_index = scan.violation_index;
                outcome.witness = scan.witness;
            }
            if (short_circuit) {
                break;
            }
        }
    }
    return outcome;
}

} // namespace centlab::detail
