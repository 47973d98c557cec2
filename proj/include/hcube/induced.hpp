#pragma once

// Small undirected graphs and enumeration of induced copies of a pattern
// graph inside a host graph.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <queue>
#include <set>
#include <vector>

#include "hcube/cube.hpp"

namespace hcube {

class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(std::size_t vertices)
        : adj_(vertices), matrix_(vertices * vertices, false) {}

    std::size_t size() const { return adj_.size(); }

    void add_edge(std::uint32_t u, std::uint32_t v) {
        if (u >= size() || v >= size() || u == v) throw Error("add_edge: bad vertex");
        if (adjacent(u, v)) return;
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        matrix_[u * size() + v] = matrix_[v * size() + u] = true;
    }

    bool adjacent(std::uint32_t u, std::uint32_t v) const { return matrix_[u * size() + v]; }
    const std::vector<std::uint32_t>& neighbors(std::uint32_t v) const { return adj_[v]; }
    std::size_t degree(std::uint32_t v) const { return adj_[v].size(); }

    std::size_t edge_count() const {
        std::size_t s = 0;
        for (const auto& a : adj_) s += a.size();
        return s / 2;
    }

    /// Subgraph induced on `vertices`, relabelled 0..|vertices|-1 in the given order.
    SimpleGraph induced(const std::vector<std::uint32_t>& vertices) const {
        SimpleGraph g(vertices.size());
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            for (std::size_t j = i + 1; j < vertices.size(); ++j) {
                if (adjacent(vertices[i], vertices[j])) {
                    g.add_edge(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
                }
            }
        }
        return g;
    }

    bool connected() const {
        if (adj_.empty()) return true;
        std::vector<bool> seen(size(), false);
        std::queue<std::uint32_t> q;
        q.push(0);
        seen[0] = true;
        std::size_t count = 1;
        while (!q.empty()) {
            auto u = q.front();
            q.pop();
            for (auto v : adj_[u]) {
                if (!seen[v]) {
                    seen[v] = true;
                    ++count;
                    q.push(v);
                }
            }
        }
        return count == size();
    }

private:
    std::vector<std::vector<std::uint32_t>> adj_;
    std::vector<bool> matrix_;
};

/// Q_n restricted to the points of `s`, vertices in canonical point order.
inline SimpleGraph cube_induced_graph(const PointSet& s) {
    SimpleGraph g(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            if (hamming_distance(s[i], s[j]) == 1) {
                g.add_edge(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
            }
        }
    }
    return g;
}

/// Q_n on all 2^n words.
inline SimpleGraph cube_graph(int n) {
    if (n < 0 || n > 20) throw Error("cube_graph: dimension out of range");
    SimpleGraph g(std::size_t{1} << n);
    for (Word w = 0; w < (Word{1} << n); ++w) {
        for (int b = 0; b < n; ++b) {
            Word u = w ^ (Word{1} << b);
            if (u > w) g.add_edge(static_cast<std::uint32_t>(w), static_cast<std::uint32_t>(u));
        }
    }
    return g;
}

/// Every vertex set A of `host` with host[A] isomorphic to `pattern`,
/// each as a sorted vertex list, in lexicographic order.
///
/// Pattern vertices are placed in BFS order per component, so every vertex
/// after the first of its component is drawn from the neighbours of an
/// already-placed vertex. Candidates must agree on adjacency with every
/// earlier placement and have enough degree.
inline std::vector<std::vector<std::uint32_t>> enumerate_induced_copies(const SimpleGraph& pattern,
                                                                        const SimpleGraph& host) {
    const std::size_t k = pattern.size();
    std::set<std::vector<std::uint32_t>> found;
    if (k == 0 || k > host.size()) return {};

    std::vector<std::uint32_t> order;
    std::vector<int> anchor;  // index into `order` of an earlier neighbour, or -1
    std::vector<bool> placed(k, false);
    for (std::uint32_t s = 0; s < k; ++s) {
        if (placed[s]) continue;
        std::queue<std::uint32_t> q;
        q.push(s);
        placed[s] = true;
        anchor.push_back(-1);
        order.push_back(s);
        while (!q.empty()) {
            auto u = q.front();
            q.pop();
            const int u_pos = static_cast<int>(std::find(order.begin(), order.end(), u) - order.begin());
            for (auto v : pattern.neighbors(u)) {
                if (placed[v]) continue;
                placed[v] = true;
                order.push_back(v);
                anchor.push_back(u_pos);
                q.push(v);
            }
        }
    }

    std::vector<std::uint32_t> image(k);
    std::vector<bool> used(host.size(), false);
    std::vector<std::uint32_t> all(host.size());
    for (std::uint32_t v = 0; v < host.size(); ++v) all[v] = v;

    std::function<void(std::size_t)> extend = [&](std::size_t depth) {
        if (depth == k) {
            std::vector<std::uint32_t> set(image.begin(), image.end());
            std::sort(set.begin(), set.end());
            found.insert(std::move(set));
            return;
        }
        const auto p = order[depth];
        const auto& candidates =
            anchor[depth] < 0 ? all : host.neighbors(image[static_cast<std::size_t>(anchor[depth])]);
        for (auto v : candidates) {
            if (used[v] || host.degree(v) < pattern.degree(p)) continue;
            bool ok = true;
            for (std::size_t e = 0; e < depth && ok; ++e) {
                ok = pattern.adjacent(p, order[e]) == host.adjacent(v, image[e]);
            }
            if (!ok) continue;
            used[v] = true;
            image[depth] = v;
            extend(depth + 1);
            used[v] = false;
        }
    };
    extend(0);
    return {found.begin(), found.end()};
}

/// True iff the two graphs are isomorphic (small graphs only).
inline bool isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
    if (a.size() != b.size() || a.edge_count() != b.edge_count()) return false;
    return !enumerate_induced_copies(a, b).empty();
}

}  // namespace hcube
