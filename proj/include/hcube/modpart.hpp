#pragma once

// Inductive construction of a mod-r part of {0,1}^n by isometric copies of a
// pattern X in {0,1}^k, for r = 2^d. The resulting ambient dimension is
// n = (k-1)(d+1) + 1.
//
// Outline of one induction step (k >= 2):
//   1. If the bottom layer X_minus is empty, work with X reflected in its
//      last coordinate; its copies are the same sets.
//   2. Recursively cover {0,1}^m mod r with copies of X_minus.
//   3. Lift each embedding of X_minus to an embedding of X into {0,1}^{m+1}
//      by sending the last coordinate to coordinate m+1. The bottom layer
//      {0,1}^m x {0} is then covered mod r; the top layer gets some
//      uncontrolled residues f.
//   4. View {0,1}^n as {0,1}^m x {0,1}^{d+1}. For every directed edge u -> v
//      of a distance-2 edge family on {0,1}^{d+1}, with common neighbour z,
//      push the lifted weights onto the layer pairs (v, z) with weight 1 and
//      (u, z) with weight r-1. Layer v gains +1, layer u gains -1, and the
//      shared top layer z gains f + (r-1) f = 0 (mod r).
//   5. The edge family has net in-minus-out degree 1 mod r at every vertex,
//      so the sum over all edges leaves every point at residue 1.

#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "hcube/covers.hpp"
#include "hcube/cube.hpp"
#include "hcube/isometry.hpp"

namespace hcube {

struct DirectedEdge {
    Point tail;
    Point head;

    friend auto operator<=>(const DirectedEdge&, const DirectedEdge&) = default;
};

/// Ordered distance-2 pairs on {0,1}^{d+1}, as a multiset (repeats allowed).
struct DirectedEdgeFamily {
    int dim = 1;
    Weight modulus = 1;
    std::vector<DirectedEdge> edges;
};

inline bool is_power_of_two(Weight r) { return r != 0 && (r & (r - 1)) == 0; }

inline int log2_exact(Weight r) {
    if (!is_power_of_two(r)) throw Error("r = " + std::to_string(r) + " is not a power of two");
    return std::countr_zero(r);
}

namespace detail {

// Distance-2 steps from `from` to `to` (same parity), flipping differing
// positions two at a time in increasing coordinate order.
inline void append_path(DirectedEdgeFamily& family, const Point& from, const Point& to) {
    std::vector<int> diff;
    for (int c = 1; c <= from.dimension(); ++c) {
        if (from[c] != to[c]) diff.push_back(c);
    }
    Point cur = from;
    for (std::size_t i = 0; i + 1 < diff.size(); i += 2) {
        Point next = cur.flipped(diff[i]).flipped(diff[i + 1]);
        family.edges.push_back({cur, next});
        cur = next;
    }
}

}  // namespace detail

/// Paths from x* = 0...0 to every other even vertex and from y* = 10...0 to
/// every other odd vertex. Net degree is +1 away from x*, y* and -(2^d - 1)
/// at each of them.
inline DirectedEdgeFamily build_edge_family(int d) {
    if (d < 0) throw Error("build_edge_family: d must be non-negative");
    if (d + 1 > 20) throw Error("build_edge_family: d too large");
    DirectedEdgeFamily family;
    family.dim = d + 1;
    family.modulus = Weight{1} << d;
    if (d == 0) return family;
    const int dim = d + 1;
    const Point x_star = Point::zero(dim);
    const Point y_star = Point::zero(dim).flipped(1);
    for (Word w = 0; w < (Word{1} << dim); ++w) {
        Point v(dim, w);
        if (parity(v) == Parity::even) {
            if (v != x_star) detail::append_path(family, x_star, v);
        } else {
            if (v != y_star) detail::append_path(family, y_star, v);
        }
    }
    return family;
}

/// In-degree minus out-degree of every vertex, indexed by word.
inline std::vector<std::int64_t> net_degrees(const DirectedEdgeFamily& family) {
    std::vector<std::int64_t> net(std::size_t{1} << family.dim, 0);
    for (const auto& e : family.edges) {
        ++net[static_cast<std::size_t>(e.head.bits())];
        --net[static_cast<std::size_t>(e.tail.bits())];
    }
    return net;
}

inline bool has_unit_residues(const DirectedEdgeFamily& family) {
    for (const auto& e : family.edges) {
        if (hamming_distance(e.tail, e.head) != 2) return false;
    }
    const auto m = static_cast<std::int64_t>(family.modulus);
    for (std::int64_t v : net_degrees(family)) {
        if (((v % m) + m) % m != 1 % m) return false;
    }
    return true;
}

/// The neighbour of both endpoints obtained by flipping the smaller
/// differing coordinate of the tail.
inline Point common_neighbor(const DirectedEdge& e) {
    if (hamming_distance(e.tail, e.head) != 2) throw Error("edge endpoints are not at distance 2");
    for (int c = 1; c <= e.tail.dimension(); ++c) {
        if (e.tail[c] != e.head[c]) return e.tail.flipped(c);
    }
    throw Error("unreachable");
}

/// Embedding-keyed weights: the form needed for lifting.
class EmbeddingWeights {
public:
    EmbeddingWeights(int ambient_dim, PointSet pattern) : n_(ambient_dim), pattern_(std::move(pattern)) {}

    void add(const Embedding& phi, Weight weight) {
        if (phi.source_dim() != pattern_.dimension() || phi.target_dim() != n_) {
            throw Error("embedding does not match weight function dimensions");
        }
        if (weight == 0) return;
        auto [it, inserted] = entries_.try_emplace(phi, weight);
        if (!inserted) it->second = checked_add(it->second, weight);
    }

    void add_all(const EmbeddingWeights& other) {
        if (other.n_ != n_ || other.pattern_ != pattern_) throw Error("add_all: incompatible weights");
        for (const auto& [phi, w] : other.entries_) add(phi, w);
    }

    int dimension() const { return n_; }
    const PointSet& pattern() const { return pattern_; }
    const std::map<Embedding, Weight>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

    /// Image-merged export.
    WeightFunction merged() const {
        WeightFunction w(n_, pattern_);
        for (const auto& [phi, weight] : entries_) w.add(image(phi, pattern_), weight);
        return w;
    }

private:
    int n_;
    PointSet pattern_;
    std::map<Embedding, Weight> entries_;
};

/// Record of one induction level, outermost first in ModPartCertificate::trace.
struct ModPartLevel {
    int k = 0;               // pattern dimension at this level
    int m = 0;               // ambient dimension of the recursive certificate
    int n = 0;               // ambient dimension produced by this level
    bool reflected = false;  // last coordinate reflected because X_minus was empty
    PointSet sub_pattern;    // X_minus handed to the recursion
    std::size_t sub_entries = 0;
    DirectedEdgeFamily edge_family;
    std::vector<Point> common_neighbors;  // one per edge, same order
};

struct ModPartCertificate {
    PointSet pattern;
    Weight r = 1;
    int n = 1;
    EmbeddingWeights weights;
    std::vector<ModPartLevel> trace;

    WeightFunction exported() const { return weights.merged(); }
};

inline int modpart_dimension(int k, int d) { return (k - 1) * (d + 1) + 1; }

/// Extend each embedding of X_minus into {0,1}^m to an embedding of X into
/// {0,1}^{m+1} that sends the last source coordinate to coordinate m+1.
inline EmbeddingWeights lift_modpart(const ModPartCertificate& minus_cert, const PointSet& x) {
    if (x.dimension() < 2) throw Error("lift_modpart: pattern dimension must be at least 2");
    const PointSet x_minus = layer_split(x).minus;
    if (x_minus.empty()) throw Error("lift_modpart: bottom layer of pattern is empty");
    if (x_minus != minus_cert.pattern) throw Error("lift_modpart: certificate pattern is not X_minus");
    const int m = minus_cert.n;
    const int k = x.dimension();
    EmbeddingWeights lifted(m + 1, x);
    for (const auto& [phi, w] : minus_cert.weights.entries()) {
        std::vector<int> cm = phi.coord_map();
        cm.push_back(m + 1);
        lifted.add(Embedding(k, m + 1, std::move(cm), append(phi.translation(), 0)), w);
    }
    return lifted;
}

/// w' + (r-1) w'' for one directed edge: the lifted weights pushed onto layer
/// pairs (head, z) with weight 1 and (tail, z) with weight r-1.
inline EmbeddingWeights assemble_edge_weight(const DirectedEdge& edge, const EmbeddingWeights& lifted,
                                             Weight r, int d) {
    if (edge.tail.dimension() != d + 1 || edge.head.dimension() != d + 1) {
        throw Error("assemble_edge_weight: edge does not live in {0,1}^{d+1}");
    }
    const Point z = common_neighbor(edge);
    const int m = lifted.dimension() - 1;
    const int n = m + d + 1;

    // Layer pair {base, z} as an embedding of {0,1}^{m+1}: the first m
    // coordinates are copied, the last one toggles between base and z.
    auto layer_pair = [&](const Point& base) {
        int flip = 0;
        for (int c = 1; c <= d + 1; ++c) {
            if (base[c] != z[c]) flip = c;
        }
        std::vector<int> cm(static_cast<std::size_t>(m + 1));
        std::iota(cm.begin(), cm.begin() + m, 1);
        cm[static_cast<std::size_t>(m)] = m + flip;
        return Embedding(m + 1, n, std::move(cm), concat(Point::zero(m), base));
    };
    const Embedding to_head = layer_pair(edge.head);
    const Embedding to_tail = layer_pair(edge.tail);

    EmbeddingWeights out(n, lifted.pattern());
    for (const auto& [phi, w] : lifted.entries()) {
        out.add(compose(to_head, phi), w);
        out.add(compose(to_tail, phi), checked_mul(w, r - 1));
    }
    return out;
}

/// Mod-r part of {0,1}^n, n = (k-1)(d+1)+1, by isometric copies of X.
inline ModPartCertificate build_modpart(const PointSet& x, Weight r) {
    if (x.empty()) throw Error("build_modpart: empty pattern");
    const int d = log2_exact(r);
    const int k = x.dimension();
    if (k < 1) throw Error("build_modpart: pattern dimension must be at least 1");
    const int n = modpart_dimension(k, d);
    if (n > kMaxDimension) throw Error("build_modpart: resulting dimension exceeds maximum");

    ModPartCertificate cert{x, r, n, EmbeddingWeights(n, x), {}};

    if (d == 0) {
        // mod 1 is vacuous; use the translates of X so every point is covered.
        for (Word t = 0; t < (Word{1} << k); ++t) {
            cert.weights.add(Embedding::translation_by(Point(k, t)), 1);
        }
        return cert;
    }

    if (k == 1) {
        if (x.size() == 2) {
            cert.weights.add(Embedding::identity(1), 1);
        } else {
            cert.weights.add(Embedding::identity(1), 1);
            cert.weights.add(Embedding::translation_by(Point(1, 1)), 1);
        }
        return cert;
    }

    const bool reflected = layer_split(x).minus.empty();
    const Point last = Point::zero(k).flipped(k);
    const PointSet working = reflected ? x.translated(last) : x;
    const PointSet x_minus = layer_split(working).minus;

    ModPartCertificate sub = build_modpart(x_minus, r);
    const EmbeddingWeights lifted = lift_modpart(sub, working);
    DirectedEdgeFamily family = build_edge_family(d);

    ModPartLevel level;
    level.k = k;
    level.m = sub.n;
    level.n = n;
    level.reflected = reflected;
    level.sub_pattern = x_minus;
    level.sub_entries = sub.weights.size();

    EmbeddingWeights acc(n, working);
    for (const auto& edge : family.edges) {
        level.common_neighbors.push_back(common_neighbor(edge));
        acc.add_all(assemble_edge_weight(edge, lifted, r, d));
    }
    level.edge_family = std::move(family);

    if (reflected) {
        // phi maps `working`; phi after the reflection maps x onto the same image.
        const Embedding reflect = Embedding::translation_by(last);
        for (const auto& [phi, w] : acc.entries()) cert.weights.add(compose(phi, reflect), w);
    } else {
        cert.weights = std::move(acc);
    }

    cert.trace.push_back(std::move(level));
    for (auto& lvl : sub.trace) cert.trace.push_back(std::move(lvl));
    return cert;
}

}  // namespace hcube
