#pragma once

// Grid graphs P_l^n on [l]^n = {0,...,l-1}^n, parity counting, the snake
// Hamiltonian path, and the odd-l counterexample to vertex partitions.
//
// For odd l the numbers A_n, B_n of even and odd vertices differ by exactly
// one, so A_n is never a multiple of l. A connected pattern H with l even
// and l^2 - l odd vertices has a unique bipartition, so each induced copy of
// H covers either l or l^2 - l even vertices. A partition into copies would
// therefore cover a multiple of l even vertices: impossible.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "hcube/cube.hpp"
#include "hcube/induced.hpp"

namespace hcube {

inline constexpr int kMaxGridSide = 36;

class GridPoint {
public:
    GridPoint(int side, std::vector<int> coords) : side_(side), coords_(std::move(coords)) {
        if (side_ < 2 || side_ > kMaxGridSide) throw Error("grid side out of range");
        for (int c : coords_) {
            if (c < 0 || c >= side_) throw Error("grid coordinate out of range");
        }
    }

    /// Digits "0".."9", "a".."z"; coordinate 1 first.
    static GridPoint parse(int side, std::string_view text) {
        std::vector<int> coords;
        for (char ch : text) {
            int v = (ch >= '0' && ch <= '9') ? ch - '0' : (ch >= 'a' && ch <= 'z') ? ch - 'a' + 10 : -1;
            if (v < 0) throw Error("bad grid digit in '" + std::string(text) + "'");
            coords.push_back(v);
        }
        return GridPoint(side, std::move(coords));
    }

    int side() const { return side_; }
    int dimension() const { return static_cast<int>(coords_.size()); }
    const std::vector<int>& coords() const { return coords_; }

    int coordinate_sum() const {
        int s = 0;
        for (int c : coords_) s += c;
        return s;
    }
    bool even() const { return coordinate_sum() % 2 == 0; }

    std::string to_string() const {
        std::string out;
        for (int c : coords_) out.push_back(static_cast<char>(c < 10 ? '0' + c : 'a' + c - 10));
        return out;
    }

    friend auto operator<=>(const GridPoint&, const GridPoint&) = default;

private:
    int side_;
    std::vector<int> coords_;
};

inline bool grid_adjacent(const GridPoint& x, const GridPoint& y) {
    if (x.side() != y.side() || x.dimension() != y.dimension()) throw Error("grid_adjacent: shape mismatch");
    int total = 0;
    for (int i = 0; i < x.dimension(); ++i) {
        total += std::abs(x.coords()[static_cast<std::size_t>(i)] - y.coords()[static_cast<std::size_t>(i)]);
    }
    return total == 1;
}

namespace detail {

inline std::uint64_t grid_size(int l, int n) {
    if (l < 2 || l > kMaxGridSide || n < 0) throw Error("grid shape out of range");
    std::uint64_t s = 1;
    for (int i = 0; i < n; ++i) {
        if (s > (std::uint64_t{1} << 40) / static_cast<std::uint64_t>(l)) throw Error("grid too large");
        s *= static_cast<std::uint64_t>(l);
    }
    return s;
}

}  // namespace detail

/// Mixed-radix id with coordinate 1 most significant.
inline std::uint32_t grid_index(const GridPoint& p) {
    std::uint64_t id = 0;
    for (int c : p.coords()) id = id * static_cast<std::uint64_t>(p.side()) + static_cast<std::uint64_t>(c);
    return static_cast<std::uint32_t>(id);
}

inline GridPoint grid_point(int l, int n, std::uint32_t id) {
    std::vector<int> coords(static_cast<std::size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        coords[static_cast<std::size_t>(i)] = static_cast<int>(id % static_cast<std::uint32_t>(l));
        id /= static_cast<std::uint32_t>(l);
    }
    return GridPoint(l, std::move(coords));
}

inline SimpleGraph grid_graph(int l, int n) {
    const auto size = detail::grid_size(l, n);
    if (size > 200'000) throw Error("grid_graph: too many vertices");
    SimpleGraph g(static_cast<std::size_t>(size));
    std::uint32_t stride = 1;
    for (int axis = n - 1; axis >= 0; --axis) {
        for (std::uint32_t v = 0; v < size; ++v) {
            if ((v / stride) % static_cast<std::uint32_t>(l) + 1 < static_cast<std::uint32_t>(l)) {
                g.add_edge(v, v + stride);
            }
        }
        stride *= static_cast<std::uint32_t>(l);
    }
    return g;
}

struct ParityCount {
    int side = 0;
    int n = 0;
    std::uint64_t even = 0;  // A_n
    std::uint64_t odd = 0;   // B_n
};

/// Even/odd vertex counts of P_l^n for odd l, by the one-axis recurrence.
inline ParityCount parity_counts(int l, int n) {
    if (l < 3 || l % 2 == 0) throw Error("parity_counts: side must be odd and at least 3");
    if (n < 1) throw Error("parity_counts: n must be positive");
    detail::grid_size(l, n);
    const std::uint64_t even_digits = static_cast<std::uint64_t>(l + 1) / 2;
    const std::uint64_t odd_digits = static_cast<std::uint64_t>(l) / 2;
    std::uint64_t a = 1, b = 0;
    for (int i = 0; i < n; ++i) {
        const std::uint64_t na = a * even_digits + b * odd_digits;
        const std::uint64_t nb = a * odd_digits + b * even_digits;
        a = na;
        b = nb;
    }
    return {l, n, a, b};
}

/// Boustrophedon Hamiltonian path through [l]^n.
inline std::vector<GridPoint> snake_path(int l, int n) {
    if (n < 1) throw Error("snake_path: n must be positive");
    const auto size = detail::grid_size(l, n);
    if (size > 10'000'000) throw Error("snake_path: grid too large");
    std::vector<GridPoint> path;
    path.reserve(static_cast<std::size_t>(size));
    // Reflected mixed-radix Gray code: digit i runs backwards whenever the
    // number formed by the more significant digits is odd.
    for (std::uint64_t idx = 0; idx < size; ++idx) {
        std::vector<int> raw(static_cast<std::size_t>(n));
        std::uint64_t t = idx;
        for (int i = n - 1; i >= 0; --i) {
            raw[static_cast<std::size_t>(i)] = static_cast<int>(t % static_cast<std::uint64_t>(l));
            t /= static_cast<std::uint64_t>(l);
        }
        std::vector<int> coords(static_cast<std::size_t>(n));
        int prefix_parity = 0;
        for (std::size_t i = 0; i < raw.size(); ++i) {
            coords[i] = prefix_parity == 0 ? raw[i] : l - 1 - raw[i];
            prefix_parity = (prefix_parity * l + raw[i]) % 2;
        }
        path.emplace_back(l, std::move(coords));
    }
    return path;
}

/// Size l^2, connected in P_l^m, exactly l even and l^2 - l odd vertices.
inline bool is_counterexample_pattern(int l, int m, const std::vector<GridPoint>& vertices) {
    if (vertices.size() != static_cast<std::size_t>(l) * static_cast<std::size_t>(l)) return false;
    std::vector<std::uint32_t> ids;
    std::size_t even = 0;
    for (const auto& v : vertices) {
        if (v.side() != l || v.dimension() != m) return false;
        ids.push_back(grid_index(v));
        if (v.even()) ++even;
    }
    std::vector<std::uint32_t> sorted = ids;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    if (even != static_cast<std::size_t>(l)) return false;
    // connectivity by flood fill over grid adjacency
    std::vector<bool> seen(vertices.size(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        auto u = stack.back();
        stack.pop_back();
        for (std::size_t w = 0; w < vertices.size(); ++w) {
            if (!seen[w] && grid_adjacent(vertices[u], vertices[w])) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == vertices.size();
}

enum class SearchStatus { found, none, inconclusive };

struct CounterexampleSearch {
    SearchStatus status = SearchStatus::none;
    int m = 0;
    std::vector<GridPoint> vertices;  // sorted by grid index
    std::uint64_t nodes = 0;
};

/// Smallest m <= m_max for which P_l^m has a connected vertex set with l even
/// and l^2 - l odd vertices, found by anchored growth of connected sets.
inline CounterexampleSearch find_counterexample_H(int l, int m_max, std::uint64_t node_budget = 50'000'000) {
    if (l < 3 || l % 2 == 0) throw Error("find_counterexample_H: side must be odd and at least 3");
    const std::size_t want_even = static_cast<std::size_t>(l);
    const std::size_t want_odd = static_cast<std::size_t>(l) * static_cast<std::size_t>(l - 1);
    CounterexampleSearch result;
    for (int m = 1; m <= m_max; ++m) {
        const auto counts = parity_counts(l, m);
        if (counts.even < want_even || counts.odd < want_odd) continue;
        const SimpleGraph g = grid_graph(l, m);
        const auto size = static_cast<std::uint32_t>(g.size());
        std::vector<bool> is_even(size);
        for (std::uint32_t v = 0; v < size; ++v) is_even[v] = grid_point(l, m, v).even();

        std::vector<std::uint32_t> chosen;
        std::vector<int> state(size, 0);  // 0 free, 1 chosen, 2 excluded, 3 in frontier
        bool out_of_budget = false;
        bool done = false;

        // Branch on the first frontier vertex: take it or exclude it for good.
        std::function<void(std::vector<std::uint32_t>&, std::size_t, std::size_t, std::uint32_t)> grow =
            [&](std::vector<std::uint32_t>& frontier, std::size_t evens, std::size_t odds, std::uint32_t anchor) {
                if (done || out_of_budget) return;
                if (++result.nodes > node_budget) {
                    out_of_budget = true;
                    return;
                }
                if (evens == want_even && odds == want_odd) {
                    done = true;
                    return;
                }
                // available even/odd vertices in the frontier bound what can still be reached
                std::size_t pos = 0;
                while (pos < frontier.size() && state[frontier[pos]] != 3) ++pos;
                if (pos == frontier.size()) return;
                const std::uint32_t v = frontier[pos];
                const bool ev = is_even[v];
                if ((ev && evens < want_even) || (!ev && odds < want_odd)) {
                    state[v] = 1;
                    chosen.push_back(v);
                    const std::size_t old = frontier.size();
                    for (auto w : g.neighbors(v)) {
                        if (w > anchor && state[w] == 0) {
                            state[w] = 3;
                            frontier.push_back(w);
                        }
                    }
                    grow(frontier, evens + (ev ? 1 : 0), odds + (ev ? 0 : 1), anchor);
                    if (done) return;
                    for (std::size_t i = old; i < frontier.size(); ++i) state[frontier[i]] = 0;
                    frontier.resize(old);
                    chosen.pop_back();
                }
                state[v] = 2;
                grow(frontier, evens, odds, anchor);
                if (done) return;
                state[v] = 3;
            };

        for (std::uint32_t anchor = 0; anchor < size && !done && !out_of_budget; ++anchor) {
            std::fill(state.begin(), state.end(), 0);
            chosen.assign(1, anchor);
            state[anchor] = 1;
            std::vector<std::uint32_t> frontier;
            for (auto w : g.neighbors(anchor)) {
                if (w > anchor) {
                    state[w] = 3;
                    frontier.push_back(w);
                }
            }
            const bool ev = is_even[anchor];
            if ((ev && want_even == 0) || (!ev && want_odd == 0)) continue;
            grow(frontier, ev ? 1 : 0, ev ? 0 : 1, anchor);
        }
        if (done) {
            std::sort(chosen.begin(), chosen.end());
            result.status = SearchStatus::found;
            result.m = m;
            for (auto v : chosen) result.vertices.push_back(grid_point(l, m, v));
            return result;
        }
        if (out_of_budget) {
            result.status = SearchStatus::inconclusive;
            return result;
        }
    }
    result.status = SearchStatus::none;
    return result;
}

/// Even-vertex counts of every induced copy of H (given in P_l^m) inside P_l^n.
inline std::vector<std::size_t> induced_copy_even_counts(int l, const std::vector<GridPoint>& h, int n) {
    if (h.empty()) throw Error("induced_copy_even_counts: empty pattern");
    const int m = h.front().dimension();
    const SimpleGraph host_m = grid_graph(l, m);
    std::vector<std::uint32_t> ids;
    for (const auto& v : h) ids.push_back(grid_index(v));
    const SimpleGraph pattern = host_m.induced(ids);
    const SimpleGraph host = grid_graph(l, n);
    std::vector<std::size_t> counts;
    for (const auto& copy : enumerate_induced_copies(pattern, host)) {
        std::size_t even = 0;
        for (auto v : copy) even += grid_point(l, n, v).even() ? 1 : 0;
        counts.push_back(even);
    }
    return counts;
}

struct ObstructionReport {
    bool impossible = false;          // A_n mod l != 0 and every checked copy has even count in {l, l^2-l}
    std::uint64_t even_vertices = 0;  // A_n
    bool copies_checked = false;      // induced copies were enumerated
    std::size_t copies = 0;
    bool copy_counts_ok = true;
};

/// The divisibility obstruction for partitioning P_l^n into induced copies of H.
/// Copies are enumerated only when l^n <= enumerate_limit.
inline ObstructionReport check_obstruction(const std::vector<GridPoint>& h, int l, int n,
                                           std::uint64_t enumerate_limit = 81) {
    const int m = h.empty() ? 0 : h.front().dimension();
    if (!is_counterexample_pattern(l, m, h)) throw Error("check_obstruction: H is not a valid counterexample");
    ObstructionReport rep;
    rep.even_vertices = parity_counts(l, n).even;
    if (detail::grid_size(l, n) <= enumerate_limit) {
        rep.copies_checked = true;
        const auto counts = induced_copy_even_counts(l, h, n);
        rep.copies = counts.size();
        const std::size_t a = static_cast<std::size_t>(l);
        for (auto c : counts) rep.copy_counts_ok = rep.copy_counts_ok && (c == a || c == a * a - a);
    }
    rep.impossible = rep.copy_counts_ok && rep.even_vertices % static_cast<std::uint64_t>(l) != 0;
    return rep;
}

inline const char* to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::found: return "found";
        case SearchStatus::none: return "none";
        case SearchStatus::inconclusive: return "inconclusive";
    }
    return "?";
}

}  // namespace hcube
