#pragma once

// Points of the Hamming cube {0,1}^n and sets of them.
//
// Bit convention: coordinate i (1-based) of an n-dimensional point is stored
// at bit (n - i) of the word, so coordinate 1 is the most significant bit.
// Numeric order on words is then the lexicographic order on coordinates,
// which is the canonical order used everywhere in this library.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hcube {

using Word = std::uint64_t;

inline constexpr int kMaxDimension = 32;

/// Raised on malformed input: dimension mismatches, out-of-range values,
/// strings that are not binary words, and similar contract violations.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline void check_dimension(int n) {
    if (n < 0 || n > kMaxDimension) {
        throw Error("dimension " + std::to_string(n) + " outside [0, " +
                    std::to_string(kMaxDimension) + "]");
    }
}

constexpr Word low_mask(int n) {
    return n >= 64 ? ~Word{0} : (Word{1} << n) - 1;
}

}  // namespace detail

class Point {
public:
    constexpr Point() = default;

    Point(int dimension, Word bits) : dim_(dimension), bits_(bits) {
        detail::check_dimension(dimension);
        if ((bits & ~detail::low_mask(dimension)) != 0) {
            throw Error("word has bits beyond dimension " + std::to_string(dimension));
        }
    }

    static Point zero(int dimension) { return Point(dimension, 0); }

    // "0110" -> coordinates (0,1,1,0)
    static Point parse(std::string_view text) {
        if (text.size() > static_cast<std::size_t>(kMaxDimension)) {
            throw Error("binary word longer than " + std::to_string(kMaxDimension));
        }
        Word bits = 0;
        for (char c : text) {
            if (c != '0' && c != '1') {
                throw Error("not a binary word: '" + std::string(text) + "'");
            }
            bits = (bits << 1) | static_cast<Word>(c - '0');
        }
        return Point(static_cast<int>(text.size()), bits);
    }

    constexpr int dimension() const { return dim_; }
    constexpr Word bits() const { return bits_; }

    /// Value of coordinate `coord` (1-based).
    int operator[](int coord) const {
        check_coord(coord);
        return static_cast<int>((bits_ >> (dim_ - coord)) & 1U);
    }

    Point flipped(int coord) const {
        check_coord(coord);
        return Point(dim_, bits_ ^ (Word{1} << (dim_ - coord)));
    }

    int weight() const { return std::popcount(bits_); }

    std::string to_string() const {
        std::string out(static_cast<std::size_t>(dim_), '0');
        for (int i = 0; i < dim_; ++i) {
            if ((bits_ >> (dim_ - 1 - i)) & 1U) out[static_cast<std::size_t>(i)] = '1';
        }
        return out;
    }

    friend constexpr auto operator<=>(const Point&, const Point&) = default;

private:
    void check_coord(int coord) const {
        if (coord < 1 || coord > dim_) {
            throw Error("coordinate " + std::to_string(coord) + " outside 1.." +
                        std::to_string(dim_));
        }
    }

    int dim_ = 0;
    Word bits_ = 0;
};

/// Number of coordinates where x and y differ.
inline int hamming_distance(const Point& x, const Point& y) {
    if (x.dimension() != y.dimension()) {
        throw Error("hamming_distance: dimension mismatch (" + std::to_string(x.dimension()) +
                    " vs " + std::to_string(y.dimension()) + ")");
    }
    return std::popcount(x.bits() ^ y.bits());
}

enum class Parity { even, odd };

inline Parity parity(const Point& x) {
    return (x.weight() % 2 == 0) ? Parity::even : Parity::odd;
}

/// Coordinate-wise sum mod 2.
inline Point operator+(const Point& x, const Point& y) {
    if (x.dimension() != y.dimension()) throw Error("point addition: dimension mismatch");
    return Point(x.dimension(), x.bits() ^ y.bits());
}

/// (a, b) as a point of {0,1}^{dim a + dim b}.
inline Point concat(const Point& a, const Point& b) {
    return Point(a.dimension() + b.dimension(), (a.bits() << b.dimension()) | b.bits());
}

/// (a, bit) with the new coordinate appended last.
inline Point append(const Point& a, int bit) {
    return Point(a.dimension() + 1, (a.bits() << 1) | static_cast<Word>(bit & 1));
}

/// Deduplicated set of same-dimension points, kept in canonical order.
class PointSet {
public:
    PointSet() = default;

    explicit PointSet(int dimension) : dim_(dimension) { detail::check_dimension(dimension); }

    PointSet(int dimension, std::vector<Point> points) : dim_(dimension), points_(std::move(points)) {
        detail::check_dimension(dimension);
        for (const auto& p : points_) {
            if (p.dimension() != dim_) {
                throw Error("point " + p.to_string() + " does not have dimension " +
                            std::to_string(dim_));
            }
        }
        normalize();
    }

    PointSet(int dimension, std::initializer_list<Point> points)
        : PointSet(dimension, std::vector<Point>(points)) {}

    /// Build from raw words; caller guarantees they fit in `dimension` bits.
    static PointSet from_words(int dimension, const std::vector<Word>& words) {
        PointSet s(dimension);
        s.points_.reserve(words.size());
        for (Word w : words) s.points_.emplace_back(dimension, w);
        s.normalize();
        return s;
    }

    static PointSet parse(const std::vector<std::string>& words) {
        if (words.empty()) throw Error("cannot infer dimension of an empty word list");
        std::vector<Point> pts;
        pts.reserve(words.size());
        for (const auto& w : words) pts.push_back(Point::parse(w));
        int dim = pts.front().dimension();
        return PointSet(dim, std::move(pts));
    }

    static PointSet full_cube(int dimension) {
        detail::check_dimension(dimension);
        if (dimension > 26) throw Error("full_cube: dimension too large to materialize");
        PointSet s(dimension);
        s.points_.reserve(std::size_t{1} << dimension);
        for (Word w = 0; w < (Word{1} << dimension); ++w) s.points_.emplace_back(dimension, w);
        return s;
    }

    int dimension() const { return dim_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    auto begin() const { return points_.begin(); }
    auto end() const { return points_.end(); }
    const Point& operator[](std::size_t i) const { return points_[i]; }
    const std::vector<Point>& points() const { return points_; }

    bool contains(const Point& p) const {
        return p.dimension() == dim_ && std::binary_search(points_.begin(), points_.end(), p);
    }

    std::vector<Word> words() const {
        std::vector<Word> out;
        out.reserve(points_.size());
        for (const auto& p : points_) out.push_back(p.bits());
        return out;
    }

    /// The translate {x + p : x in this set}.
    PointSet translated(const Point& p) const {
        if (p.dimension() != dim_) throw Error("translate: dimension mismatch");
        PointSet s(dim_);
        s.points_.reserve(points_.size());
        for (const auto& x : points_) s.points_.emplace_back(dim_, x.bits() ^ p.bits());
        std::sort(s.points_.begin(), s.points_.end());
        return s;
    }

    std::vector<std::string> to_strings() const {
        std::vector<std::string> out;
        out.reserve(points_.size());
        for (const auto& p : points_) out.push_back(p.to_string());
        return out;
    }

    friend auto operator<=>(const PointSet&, const PointSet&) = default;
    friend bool operator==(const PointSet&, const PointSet&) = default;

private:
    void normalize() {
        std::sort(points_.begin(), points_.end());
        points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
    }

    int dim_ = 0;
    std::vector<Point> points_;
};

struct LayerSplit {
    PointSet minus;  // {a : (a,0) in A}
    PointSet plus;   // {a : (a,1) in A}
};

/// Slice A by the value of its last coordinate.
inline LayerSplit layer_split(const PointSet& a) {
    const int n = a.dimension();
    if (n < 1) throw Error("layer_split needs dimension >= 1");
    std::vector<Point> minus, plus;
    for (const auto& p : a) {
        Point rest(n - 1, p.bits() >> 1);
        ((p.bits() & 1U) ? plus : minus).push_back(rest);
    }
    return {PointSet(n - 1, std::move(minus)), PointSet(n - 1, std::move(plus))};
}

/// Inverse of layer_split.
inline PointSet join_layers(const LayerSplit& split) {
    const int m = split.minus.dimension();
    if (split.plus.dimension() != m) throw Error("join_layers: dimension mismatch");
    std::vector<Point> pts;
    pts.reserve(split.minus.size() + split.plus.size());
    for (const auto& a : split.minus) pts.push_back(append(a, 0));
    for (const auto& a : split.plus) pts.push_back(append(a, 1));
    return PointSet(m + 1, std::move(pts));
}

}  // namespace hcube
