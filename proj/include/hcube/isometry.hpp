#pragma once

// Isometric embeddings {0,1}^k -> {0,1}^n.
//
// An embedding is an injective coordinate map plus a translation word over
// the full target dimension:
//   phi(x)_j = x_i XOR t_j   if coord_map(i) = j
//   phi(x)_j = t_j           if j is not in the image of coord_map
// Every distance-preserving map between cubes has this form; the test suite
// checks that by brute force at small sizes.

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "hcube/cube.hpp"

namespace hcube {

class Embedding {
public:
    /// `coord_map[i-1]` is the (1-based) target coordinate of source coordinate i.
    Embedding(int source_dim, int target_dim, std::vector<int> coord_map, Point translation)
        : k_(source_dim), n_(target_dim), coord_map_(std::move(coord_map)), t_(translation) {
        detail::check_dimension(k_);
        detail::check_dimension(n_);
        if (k_ > n_) throw Error("embedding: source dimension exceeds target dimension");
        if (static_cast<int>(coord_map_.size()) != k_) {
            throw Error("embedding: coord_map must have one entry per source coordinate");
        }
        if (t_.dimension() != n_) throw Error("embedding: translation has wrong dimension");
        Word seen = 0;
        for (int j : coord_map_) {
            if (j < 1 || j > n_) throw Error("embedding: target coordinate out of range");
            Word bit = Word{1} << (n_ - j);
            if (seen & bit) throw Error("embedding: coord_map is not injective");
            seen |= bit;
        }
    }

    static Embedding identity(int n) { return inclusion(n, n); }

    /// Coordinates 1..k onto 1..k, zero translation.
    static Embedding inclusion(int k, int n) {
        std::vector<int> cm(static_cast<std::size_t>(k));
        std::iota(cm.begin(), cm.end(), 1);
        return Embedding(k, n, std::move(cm), Point::zero(n));
    }

    static Embedding translation_by(const Point& p) {
        const int n = p.dimension();
        std::vector<int> cm(static_cast<std::size_t>(n));
        std::iota(cm.begin(), cm.end(), 1);
        return Embedding(n, n, std::move(cm), p);
    }

    int source_dim() const { return k_; }
    int target_dim() const { return n_; }
    const std::vector<int>& coord_map() const { return coord_map_; }
    const Point& translation() const { return t_; }

    Word apply_word(Word x) const {
        Word out = t_.bits();
        for (int i = 0; i < k_; ++i) {
            if ((x >> (k_ - 1 - i)) & 1U) out ^= Word{1} << (n_ - coord_map_[static_cast<std::size_t>(i)]);
        }
        return out;
    }

    Point operator()(const Point& x) const {
        if (x.dimension() != k_) throw Error("embedding applied to point of wrong dimension");
        return Point(n_, apply_word(x.bits()));
    }

    friend auto operator<=>(const Embedding&, const Embedding&) = default;
    friend bool operator==(const Embedding&, const Embedding&) = default;

private:
    int k_;
    int n_;
    std::vector<int> coord_map_;
    Point t_;
};

inline Point apply(const Embedding& phi, const Point& x) { return phi(x); }

inline PointSet image(const Embedding& phi, const PointSet& x) {
    if (x.dimension() != phi.source_dim()) throw Error("image: pattern dimension mismatch");
    std::vector<Word> words;
    words.reserve(x.size());
    for (const auto& p : x) words.push_back(phi.apply_word(p.bits()));
    return PointSet::from_words(phi.target_dim(), words);
}

/// outer after inner.
inline Embedding compose(const Embedding& outer, const Embedding& inner) {
    if (inner.target_dim() != outer.source_dim()) throw Error("compose: dimensions do not chain");
    std::vector<int> cm;
    cm.reserve(inner.coord_map().size());
    for (int j : inner.coord_map()) cm.push_back(outer.coord_map()[static_cast<std::size_t>(j - 1)]);
    return Embedding(inner.source_dim(), outer.target_dim(), std::move(cm), outer(inner.translation()));
}

namespace detail {

// Injective sequences (c_1..c_k) over {1..n} in lexicographic order.
inline void for_each_coord_map(int k, int n, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> seq;
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    seq.reserve(static_cast<std::size_t>(k));
    std::function<void()> rec = [&] {
        if (static_cast<int>(seq.size()) == k) {
            fn(seq);
            return;
        }
        for (int j = 1; j <= n; ++j) {
            if (used[static_cast<std::size_t>(j)]) continue;
            used[static_cast<std::size_t>(j)] = true;
            seq.push_back(j);
            rec();
            seq.pop_back();
            used[static_cast<std::size_t>(j)] = false;
        }
    };
    rec();
}

inline void check_enumeration_args(int k, int n) {
    if (k < 0 || n < 0) throw Error("negative dimension");
    if (k > n) throw Error("source dimension " + std::to_string(k) + " exceeds target dimension " +
                           std::to_string(n));
    if (n > 20) throw Error("embedding enumeration limited to n <= 20");
}

}  // namespace detail

/// All embeddings {0,1}^k -> {0,1}^n in canonical order: coord_map
/// lexicographically, then translation word ascending.
inline void for_each_embedding(int k, int n, const std::function<void(const Embedding&)>& fn) {
    detail::check_enumeration_args(k, n);
    detail::for_each_coord_map(k, n, [&](const std::vector<int>& cm) {
        for (Word t = 0; t < (Word{1} << n); ++t) fn(Embedding(k, n, cm, Point(n, t)));
    });
}

inline std::vector<Embedding> enumerate_embeddings(int k, int n) {
    if (k < 1) throw Error("enumerate_embeddings needs k >= 1");
    std::vector<Embedding> out;
    for_each_embedding(k, n, [&](const Embedding& e) { out.push_back(e); });
    return out;
}

/// Distinct images of X under all embeddings into {0,1}^n, canonically sorted.
inline std::vector<PointSet> enumerate_isometric_copies(const PointSet& x, int n) {
    if (x.empty()) throw Error("enumerate_isometric_copies: empty pattern");
    const int k = x.dimension();
    detail::check_enumeration_args(k, n);
    // image(cm, t) = image(cm, 0) + t, so deduplicate the untranslated images first.
    std::set<std::vector<Word>> bases;
    detail::for_each_coord_map(k, n, [&](const std::vector<int>& cm) {
        Embedding e(k, n, cm, Point::zero(n));
        bases.insert(image(e, x).words());
    });
    std::set<PointSet> copies;
    for (const auto& base : bases) {
        PointSet b = PointSet::from_words(n, base);
        for (Word t = 0; t < (Word{1} << n); ++t) copies.insert(b.translated(Point(n, t)));
    }
    return {copies.begin(), copies.end()};
}

/// True iff `y` (in {0,1}^n) is the image of `x` under some isometric embedding.
///
/// Fix x0 in X and guess its image y0 in Y. Then Y + y0 must equal the
/// coordinate-injected image of X + x0. Only coordinates in the support of
/// X + x0 matter, so it suffices to try bijections between the two supports.
inline bool is_isometric_copy(const PointSet& x, const PointSet& y) {
    if (x.size() != y.size() || x.empty()) return false;
    const int k = x.dimension();
    const int n = y.dimension();
    if (k > n) return false;
    const Word x0 = x[0].bits();
    std::vector<Word> xs;
    Word x_support = 0;
    for (const auto& p : x) {
        xs.push_back(p.bits() ^ x0);
        x_support |= p.bits() ^ x0;
    }
    std::vector<int> src;  // bit positions in the support of X + x0
    for (int b = 0; b < k; ++b) {
        if ((x_support >> b) & 1U) src.push_back(b);
    }
    for (const auto& y0p : y) {
        const Word y0 = y0p.bits();
        std::vector<Word> ys;
        Word y_support = 0;
        for (const auto& p : y) {
            ys.push_back(p.bits() ^ y0);
            y_support |= p.bits() ^ y0;
        }
        if (std::popcount(y_support) != static_cast<int>(src.size())) continue;
        std::sort(ys.begin(), ys.end());
        std::vector<int> dst;
        for (int b = 0; b < n; ++b) {
            if ((y_support >> b) & 1U) dst.push_back(b);
        }
        std::vector<int> perm(dst.size());
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::vector<Word> mapped;
            mapped.reserve(xs.size());
            for (Word w : xs) {
                Word out = 0;
                for (std::size_t s = 0; s < src.size(); ++s) {
                    if ((w >> src[s]) & 1U) out |= Word{1} << dst[static_cast<std::size_t>(perm[s])];
                }
                mapped.push_back(out);
            }
            std::sort(mapped.begin(), mapped.end());
            if (mapped == ys) return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return false;
}

}  // namespace hcube
