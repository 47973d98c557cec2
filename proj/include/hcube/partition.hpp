#pragma once

// Partitions of {0,1}^n into copies of a pattern, found by exact cover.

#include <string>
#include <vector>

#include "hcube/covers.hpp"
#include "hcube/exact_cover.hpp"
#include "hcube/induced.hpp"
#include "hcube/isometry.hpp"

namespace hcube {

enum class CopyMode { isometric, induced };

inline constexpr int kDefaultMaxInducedDimension = 5;

/// All A in {0,1}^n with Q_n[A] isomorphic to Q_k[H].
inline std::vector<PointSet> enumerate_induced_copies(const PointSet& h, int n,
                                                      int max_n = kDefaultMaxInducedDimension) {
    if (h.empty()) throw Error("enumerate_induced_copies: empty pattern");
    if (n < 1) throw Error("enumerate_induced_copies: n must be positive");
    if (n > max_n) {
        throw Error("enumerate_induced_copies: n = " + std::to_string(n) + " exceeds limit " +
                    std::to_string(max_n));
    }
    const auto sets = enumerate_induced_copies(cube_induced_graph(h), cube_graph(n));
    std::vector<PointSet> out;
    out.reserve(sets.size());
    for (const auto& s : sets) {
        std::vector<Word> words(s.begin(), s.end());
        out.push_back(PointSet::from_words(n, words));
    }
    return out;
}

inline std::vector<PointSet> enumerate_copies(const PointSet& pattern, int n, CopyMode mode,
                                              int max_induced_n = kDefaultMaxInducedDimension) {
    return mode == CopyMode::isometric ? enumerate_isometric_copies(pattern, n)
                                       : enumerate_induced_copies(pattern, n, max_induced_n);
}

/// Universe = the 2^n points (by word), one block per copy.
inline ExactCoverInstance cube_partition_instance(int n, const std::vector<PointSet>& copies) {
    if (n < 0 || n > 24) throw Error("cube_partition_instance: dimension out of range");
    ExactCoverInstance inst;
    inst.universe_size = std::size_t{1} << n;
    inst.blocks.reserve(copies.size());
    for (const auto& c : copies) {
        if (c.dimension() != n) throw Error("copy dimension mismatch");
        std::vector<std::uint32_t> block;
        for (const auto& p : c) block.push_back(static_cast<std::uint32_t>(p.bits()));
        inst.blocks.push_back(std::move(block));
    }
    return inst;
}

struct CubePartitionResult {
    SolveResult search;
    std::vector<PointSet> blocks;  // chosen copies, canonically sorted
};

inline CubePartitionResult solve_cube_partition(const PointSet& pattern, int n, CopyMode mode,
                                                const SolverConfig& config = {},
                                                int max_induced_n = kDefaultMaxInducedDimension) {
    if (pattern.dimension() > n) throw Error("pattern dimension exceeds n");
    const auto copies = enumerate_copies(pattern, n, mode, max_induced_n);
    const auto inst = cube_partition_instance(n, copies);
    CubePartitionResult out{solve_exact_cover(inst, config), {}};
    for (auto b : out.search.certificate.blocks) out.blocks.push_back(copies[b]);
    std::sort(out.blocks.begin(), out.blocks.end());
    return out;
}

/// Weight 1 on each block.
inline WeightFunction partition_weights(const PointSet& pattern, int n, const std::vector<PointSet>& blocks) {
    WeightFunction w(n, pattern);
    for (const auto& b : blocks) w.add(b, 1);
    return w;
}

/// A partition of {0,1}^n lifted to {0,1}^{n+1}: every block copied into
/// both parallel subcubes (last coordinate 0 and 1).
inline std::vector<PointSet> double_partition(const std::vector<PointSet>& blocks) {
    std::vector<PointSet> out;
    out.reserve(2 * blocks.size());
    for (int bit = 0; bit <= 1; ++bit) {
        for (const auto& b : blocks) {
            std::vector<Point> pts;
            for (const auto& p : b) pts.push_back(append(p, bit));
            out.emplace_back(b.dimension() + 1, std::move(pts));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Is `block` a copy of `pattern` under the given notion?
inline bool is_copy(const PointSet& pattern, const PointSet& block, CopyMode mode) {
    if (mode == CopyMode::isometric) return is_isometric_copy(pattern, block);
    return block.size() == pattern.size() && isomorphic(cube_induced_graph(pattern), cube_induced_graph(block));
}

/// Blocks are copies of the pattern, pairwise disjoint, and cover {0,1}^n.
inline bool verify_cube_partition(const PointSet& pattern, int n, const std::vector<PointSet>& blocks,
                                  CopyMode mode) {
    for (const auto& b : blocks) {
        if (b.dimension() != n || !is_copy(pattern, b, mode)) return false;
    }
    PartitionCertificate cert;
    for (std::size_t i = 0; i < blocks.size(); ++i) cert.blocks.push_back(i);
    return verify_partition(cert, cube_partition_instance(n, blocks));
}

inline const char* to_string(CopyMode m) { return m == CopyMode::isometric ? "isometric" : "induced"; }

}  // namespace hcube
