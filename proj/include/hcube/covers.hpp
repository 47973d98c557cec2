#pragma once

// Weight functions on families of isometric copies, multiplicities, and the
// exact-r / mod-r cover checks.

#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "hcube/cube.hpp"
#include "hcube/isometry.hpp"

namespace hcube {

using Weight = std::uint64_t;

inline constexpr Weight kMaxWeight = static_cast<Weight>(std::numeric_limits<std::int64_t>::max());

inline Weight checked_add(Weight a, Weight b) {
    if (a > kMaxWeight || b > kMaxWeight - a) throw Error("weight overflow");
    return a + b;
}

inline Weight checked_mul(Weight a, Weight b) {
    if (a != 0 && b > kMaxWeight / a) throw Error("weight overflow");
    return a * b;
}

/// Image-keyed weights on isometric copies of `pattern` inside {0,1}^n.
/// Zero weights are never stored.
class WeightFunction {
public:
    WeightFunction(int ambient_dim, PointSet pattern) : n_(ambient_dim), pattern_(std::move(pattern)) {
        detail::check_dimension(n_);
        if (pattern_.empty()) throw Error("weight function needs a non-empty pattern");
        if (pattern_.dimension() > n_) throw Error("pattern dimension exceeds ambient dimension");
    }

    void add(const PointSet& copy, Weight weight) {
        if (copy.dimension() != n_) throw Error("copy dimension does not match ambient dimension");
        if (copy.size() != pattern_.size()) throw Error("copy size differs from pattern size");
        if (weight == 0) return;
        auto [it, inserted] = entries_.try_emplace(copy, weight);
        if (!inserted) it->second = checked_add(it->second, weight);
    }

    int dimension() const { return n_; }
    const PointSet& pattern() const { return pattern_; }
    const std::map<PointSet, Weight>& entries() const { return entries_; }

    Weight total_weight() const {
        Weight s = 0;
        for (const auto& [copy, w] : entries_) s = checked_add(s, w);
        return s;
    }

private:
    int n_;
    PointSet pattern_;
    std::map<PointSet, Weight> entries_;
};

inline Weight multiplicity(const WeightFunction& w, const Point& x) {
    if (x.dimension() != w.dimension()) throw Error("multiplicity: dimension mismatch");
    Weight m = 0;
    for (const auto& [copy, weight] : w.entries()) {
        if (copy.contains(x)) m = checked_add(m, weight);
    }
    return m;
}

/// Multiplicity of every point, indexed by the point's word.
inline std::vector<Weight> multiplicities(const WeightFunction& w) {
    if (w.dimension() > 26) throw Error("multiplicities: dimension too large to sweep");
    std::vector<Weight> mult(std::size_t{1} << w.dimension(), 0);
    for (const auto& [copy, weight] : w.entries()) {
        for (const auto& p : copy) {
            auto& m = mult[static_cast<std::size_t>(p.bits())];
            m = checked_add(m, weight);
        }
    }
    return mult;
}

enum class CoverKind { exact, mod };

struct Violation {
    Point point;
    Weight multiplicity;
};

struct CoverReport {
    CoverKind kind;
    Weight r;
    bool ok;
    std::vector<Violation> violations;
};

namespace detail {

template <class Pred>
CoverReport sweep(const WeightFunction& w, CoverKind kind, Weight r, Pred good) {
    if (r < 1) throw Error("r must be positive");
    CoverReport report{kind, r, true, {}};
    const auto mult = multiplicities(w);
    for (std::size_t i = 0; i < mult.size(); ++i) {
        if (!good(mult[i])) report.violations.push_back({Point(w.dimension(), i), mult[i]});
    }
    report.ok = report.violations.empty();
    return report;
}

}  // namespace detail

/// ok iff every point of {0,1}^n has multiplicity exactly r.
inline CoverReport verify_rpart(const WeightFunction& w, Weight r) {
    return detail::sweep(w, CoverKind::exact, r, [r](Weight m) { return m == r; });
}

/// ok iff every point of {0,1}^n has multiplicity congruent to 1 mod r.
inline CoverReport verify_modpart(const WeightFunction& w, Weight r) {
    return detail::sweep(w, CoverKind::mod, r, [r](Weight m) { return m % r == 1 % r; });
}

/// Every translate Y + p of the standard copy Y of X, weighted by how many p
/// produce it. Each point then has multiplicity |X|.
inline WeightFunction build_translation_rpart(const PointSet& x, int n) {
    if (x.empty()) throw Error("build_translation_rpart: empty pattern");
    if (n < x.dimension()) throw Error("build_translation_rpart: n smaller than pattern dimension");
    if (n > 26) throw Error("build_translation_rpart: n too large");
    const PointSet y = image(Embedding::inclusion(x.dimension(), n), x);
    WeightFunction w(n, x);
    for (Word p = 0; p < (Word{1} << n); ++p) w.add(y.translated(Point(n, p)), 1);
    return w;
}

/// Every keyed copy is an isometric image of the pattern.
inline bool copies_are_isometric(const WeightFunction& w) {
    for (const auto& [copy, weight] : w.entries()) {
        if (!is_isometric_copy(w.pattern(), copy)) return false;
    }
    return true;
}

}  // namespace hcube
