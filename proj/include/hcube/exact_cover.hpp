#pragma once

// Exact cover search (Algorithm X on dancing links).
//
// Universe elements are opaque ids 0..universe_size-1 and blocks are
// referred to by their index, so one engine serves vertex partitions of
// cubes, edge decompositions and grid instances alike.
//
// The search is iterative with an explicit stack. Column choice is minimum
// remaining candidates, ties broken by the lowest element id; rows within a
// column are tried in block order. The first certificate found is therefore
// deterministic.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hcube/cube.hpp"

namespace hcube {

struct ExactCoverInstance {
    std::size_t universe_size = 0;
    std::vector<std::vector<std::uint32_t>> blocks;

    void validate() const {
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            const auto& block = blocks[b];
            if (block.empty()) throw Error("block " + std::to_string(b) + " is empty");
            std::vector<bool> seen(universe_size, false);
            for (auto e : block) {
                if (e >= universe_size) {
                    throw Error("block " + std::to_string(b) + " has element outside the universe");
                }
                if (seen[e]) throw Error("block " + std::to_string(b) + " repeats an element");
                seen[e] = true;
            }
        }
    }
};

/// Indices of the chosen blocks, in the order the search selected them.
struct PartitionCertificate {
    std::vector<std::size_t> blocks;
};

enum class SolveStatus {
    found,         // certificate returned
    exhausted,     // complete search, no exact cover exists
    inconclusive,  // node budget ran out first
};

struct SolverConfig {
    std::uint64_t node_budget = 100'000'000;
    std::uint64_t progress_interval = std::uint64_t{1} << 22;
    std::function<void(std::uint64_t nodes)> progress;
};

struct SolveResult {
    SolveStatus status = SolveStatus::exhausted;
    PartitionCertificate certificate;
    std::uint64_t nodes = 0;
};

namespace detail {

class DancingLinks {
public:
    explicit DancingLinks(const ExactCoverInstance& inst) {
        const auto cols = inst.universe_size;
        // node 0 is the root, nodes 1..cols are column headers
        std::size_t total = 1 + cols;
        for (const auto& b : inst.blocks) total += b.size();
        left_.resize(total);
        right_.resize(total);
        up_.resize(total);
        down_.resize(total);
        col_.resize(total);
        row_.resize(total, 0);
        size_.assign(cols + 1, 0);
        for (std::size_t i = 0; i <= cols; ++i) {
            left_[i] = i == 0 ? cols : i - 1;
            right_[i] = i == cols ? 0 : i + 1;
            up_[i] = down_[i] = i;
            col_[i] = i;
        }
        std::size_t next = cols + 1;
        for (std::size_t b = 0; b < inst.blocks.size(); ++b) {
            std::size_t first = next;
            for (auto e : inst.blocks[b]) {
                const std::size_t c = static_cast<std::size_t>(e) + 1;
                const std::size_t node = next++;
                col_[node] = c;
                row_[node] = b;
                up_[node] = up_[c];
                down_[node] = c;
                down_[up_[c]] = node;
                up_[c] = node;
                ++size_[c];
                left_[node] = node == first ? node : node - 1;
                right_[node] = first;
                if (node != first) right_[node - 1] = node;
                left_[first] = node;
            }
        }
    }

    SolveResult solve(const SolverConfig& config) {
        SolveResult result;
        std::vector<std::size_t> stack;  // selected row node per level
        std::vector<std::size_t> chosen_col;

        bool descend = true;
        std::size_t node = 0;
        while (true) {
            if (descend) {
                if (right_[0] == 0) {
                    result.status = SolveStatus::found;
                    for (auto r : stack) result.certificate.blocks.push_back(row_[r]);
                    return result;
                }
                const std::size_t c = best_column();
                if (size_[c] == 0) {
                    descend = false;
                    if (stack.empty()) break;
                    node = stack.back();
                    continue;
                }
                cover(c);
                chosen_col.push_back(c);
                node = down_[c];
            } else {
                // leave the row at `node`, advance to the next one in its column
                stack.pop_back();
                for (std::size_t j = left_[node]; j != node; j = left_[j]) uncover(col_[j]);
                node = down_[node];
            }

            const std::size_t c = chosen_col.back();
            if (node == c) {
                uncover(c);
                chosen_col.pop_back();
                descend = false;
                if (stack.empty()) break;
                node = stack.back();
                continue;
            }

            if (result.nodes >= config.node_budget) {
                result.status = SolveStatus::inconclusive;
                return result;
            }
            ++result.nodes;
            if (config.progress && config.progress_interval != 0 &&
                result.nodes % config.progress_interval == 0) {
                config.progress(result.nodes);
            }
            stack.push_back(node);
            for (std::size_t j = right_[node]; j != node; j = right_[j]) cover(col_[j]);
            descend = true;
        }
        result.status = SolveStatus::exhausted;
        return result;
    }

private:
    std::size_t best_column() const {
        std::size_t best = right_[0];
        for (std::size_t c = right_[0]; c != 0; c = right_[c]) {
            if (size_[c] < size_[best]) best = c;
            if (size_[best] == 0) break;
        }
        return best;
    }

    void cover(std::size_t c) {
        right_[left_[c]] = right_[c];
        left_[right_[c]] = left_[c];
        for (std::size_t i = down_[c]; i != c; i = down_[i]) {
            for (std::size_t j = right_[i]; j != i; j = right_[j]) {
                down_[up_[j]] = down_[j];
                up_[down_[j]] = up_[j];
                --size_[col_[j]];
            }
        }
    }

    void uncover(std::size_t c) {
        for (std::size_t i = up_[c]; i != c; i = up_[i]) {
            for (std::size_t j = left_[i]; j != i; j = left_[j]) {
                ++size_[col_[j]];
                down_[up_[j]] = j;
                up_[down_[j]] = j;
            }
        }
        right_[left_[c]] = c;
        left_[right_[c]] = c;
    }

    std::vector<std::size_t> left_, right_, up_, down_, col_, row_, size_;
};

}  // namespace detail

inline SolveResult solve_exact_cover(const ExactCoverInstance& instance, const SolverConfig& config = {}) {
    instance.validate();
    detail::DancingLinks dlx(instance);
    return dlx.solve(config);
}

/// True iff the chosen blocks are pairwise disjoint and cover the universe.
inline bool verify_partition(const PartitionCertificate& cert, const ExactCoverInstance& instance) {
    std::vector<bool> covered(instance.universe_size, false);
    std::size_t count = 0;
    for (auto b : cert.blocks) {
        if (b >= instance.blocks.size()) throw Error("unknown block id " + std::to_string(b));
        for (auto e : instance.blocks[b]) {
            if (e >= instance.universe_size || covered[e]) return false;
            covered[e] = true;
            ++count;
        }
    }
    return count == instance.universe_size;
}

inline const char* to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::found: return "found";
        case SolveStatus::exhausted: return "exhausted";
        case SolveStatus::inconclusive: return "inconclusive";
    }
    return "?";
}

}  // namespace hcube
