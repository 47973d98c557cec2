#pragma once

// Edge decompositions of Q_n into paths.
//
// For every even-weight x, the path that flips coordinates 1, 2, ..., n in
// turn runs from x to its antipode. The edge flipping coordinate i at a
// vertex y is used exactly once: by the path from the even vertex among
// y, y + e_i after undoing coordinates 1..i-1. Cutting every such path into
// consecutive runs of k edges gives a decomposition into copies of P_{k+1}
// whenever k divides n.

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "hcube/cube.hpp"
#include "hcube/exact_cover.hpp"

namespace hcube {

struct CubePath {
    std::vector<Point> vertices;

    std::size_t edge_count() const { return vertices.empty() ? 0 : vertices.size() - 1; }
};

struct EdgeDecomposition {
    int n = 0;
    std::vector<CubePath> paths;
};

inline EdgeDecomposition antipodal_path_family(int n) {
    if (n < 1 || n > 24) throw Error("antipodal_path_family: n out of range");
    EdgeDecomposition dec{n, {}};
    for (Word w = 0; w < (Word{1} << n); ++w) {
        Point x(n, w);
        if (parity(x) != Parity::even) continue;
        CubePath path;
        path.vertices.push_back(x);
        for (int c = 1; c <= n; ++c) path.vertices.push_back(path.vertices.back().flipped(c));
        dec.paths.push_back(std::move(path));
    }
    return dec;
}

/// Each antipodal path cut into n/k consecutive segments of k edges.
inline EdgeDecomposition split_into_paths(int n, int k) {
    if (k < 1) throw Error("split_into_paths: k must be positive");
    if (n % k != 0) throw Error("split_into_paths: k = " + std::to_string(k) + " does not divide n = " +
                                std::to_string(n));
    EdgeDecomposition dec{n, {}};
    for (const auto& path : antipodal_path_family(n).paths) {
        for (int start = 0; start < n; start += k) {
            CubePath seg;
            seg.vertices.assign(path.vertices.begin() + start, path.vertices.begin() + start + k + 1);
            dec.paths.push_back(std::move(seg));
        }
    }
    return dec;
}

/// Dense edge id in [0, n * 2^(n-1)) of {x, x + e_c}: (c - 1) * 2^(n-1) plus
/// the lower endpoint with bit c deleted.
inline std::size_t cube_edge_id(const Point& a, const Point& b) {
    if (hamming_distance(a, b) != 1) throw Error("points are not adjacent");
    const int n = a.dimension();
    const int bit = std::countr_zero(a.bits() ^ b.bits());
    const int coord = n - bit;
    const Word low = std::min(a.bits(), b.bits());
    const Word squeezed = ((low >> (bit + 1)) << bit) | (low & detail::low_mask(bit));
    return (static_cast<std::size_t>(coord - 1) << (n - 1)) + static_cast<std::size_t>(squeezed);
}

inline std::size_t cube_edge_count(int n) { return static_cast<std::size_t>(n) << (n - 1); }

/// Paths are simple walks along cube edges and together use every edge of
/// Q_n exactly once.
inline bool is_exact_edge_decomposition(const EdgeDecomposition& dec) {
    const int n = dec.n;
    if (n < 1 || n > 24) return false;
    std::vector<unsigned char> used(cube_edge_count(n), 0);
    std::size_t total = 0;
    for (const auto& path : dec.paths) {
        if (path.vertices.size() < 2) return false;
        std::set<Point> distinct;
        for (const auto& v : path.vertices) {
            if (v.dimension() != n || !distinct.insert(v).second) return false;
        }
        for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i) {
            if (hamming_distance(path.vertices[i], path.vertices[i + 1]) != 1) return false;
            auto& slot = used[cube_edge_id(path.vertices[i], path.vertices[i + 1])];
            if (slot) return false;
            slot = 1;
            ++total;
        }
    }
    return total == cube_edge_count(n);
}

enum class Feasibility { feasible, infeasible, out_of_scope };

/// For odd n, E(Q_n) splits into copies of P_{k+1} iff k <= n and k | 2^{n-1} n.
/// Even n is not covered by that characterization.
inline Feasibility feasibility_predicate(int n, long long k) {
    if (n < 1) throw Error("feasibility_predicate: n must be positive");
    if (k < 1) throw Error("feasibility_predicate: k must be positive");
    if (n % 2 == 0) return Feasibility::out_of_scope;
    if (k > n) return Feasibility::infeasible;
    // k = 2^a * b with b odd: b must divide n, and 2^a must divide 2^{n-1} * n.
    const int a = std::countr_zero(static_cast<unsigned long long>(k));
    const long long b = k >> a;
    const int n_twos = std::countr_zero(static_cast<unsigned>(n));
    return (n % b == 0 && a <= n - 1 + n_twos) ? Feasibility::feasible : Feasibility::infeasible;
}

inline const char* to_string(Feasibility f) {
    switch (f) {
        case Feasibility::feasible: return "true";
        case Feasibility::infeasible: return "false";
        case Feasibility::out_of_scope: return "out-of-scope";
    }
    return "?";
}

/// Exact-cover instance: universe E(Q_n) by edge id, one block per (unordered)
/// path with k edges.
inline ExactCoverInstance path_cover_instance(int n, int k) {
    if (n < 1 || n > 10 || k < 1) throw Error("path_cover_instance: arguments out of range");
    std::set<std::vector<std::uint32_t>> blocks;
    std::vector<Point> walk;
    std::function<void()> extend = [&] {
        if (static_cast<int>(walk.size()) == k + 1) {
            if (walk.front() < walk.back()) {  // each undirected path once
                std::vector<std::uint32_t> edges;
                for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
                    edges.push_back(static_cast<std::uint32_t>(cube_edge_id(walk[i], walk[i + 1])));
                }
                std::sort(edges.begin(), edges.end());
                blocks.insert(std::move(edges));
            }
            return;
        }
        for (int c = 1; c <= n; ++c) {
            Point next = walk.back().flipped(c);
            if (std::find(walk.begin(), walk.end(), next) != walk.end()) continue;
            walk.push_back(next);
            extend();
            walk.pop_back();
        }
    };
    for (Word w = 0; w < (Word{1} << n); ++w) {
        walk.assign(1, Point(n, w));
        extend();
    }
    ExactCoverInstance inst;
    inst.universe_size = cube_edge_count(n);
    inst.blocks.assign(blocks.begin(), blocks.end());
    return inst;
}

}  // namespace hcube
