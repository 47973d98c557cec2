#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hcube/covers.hpp"
#include "oracles.hpp"

using namespace hcube;

namespace {

std::vector<std::pair<std::vector<std::uint64_t>, std::uint64_t>> as_family(const WeightFunction& w) {
    std::vector<std::pair<std::vector<std::uint64_t>, std::uint64_t>> out;
    for (const auto& [copy, weight] : w.entries()) out.push_back({copy.words(), weight});
    return out;
}

PointSet subset_from_mask(int k, unsigned mask) {
    std::vector<Word> words;
    for (Word w = 0; w < (Word{1} << k); ++w) {
        if ((mask >> w) & 1U) words.push_back(w);
    }
    return PointSet::from_words(k, words);
}

}  // namespace

TEST_CASE("multiplicity", "[covers]") {
    const auto pattern = PointSet::full_cube(2);
    WeightFunction empty(2, pattern);
    WeightFunction full(2, pattern);
    full.add(PointSet::full_cube(2), 1);
    for (Word w = 0; w < 4; ++w) {
        CHECK(multiplicity(empty, Point(2, w)) == 0);
        CHECK(multiplicity(full, Point(2, w)) == 1);
    }
    const auto edge_part = build_translation_rpart(PointSet::full_cube(1), 2);
    for (Word w = 0; w < 4; ++w) CHECK(multiplicity(edge_part, Point(2, w)) == 2);
    CHECK_THROWS_AS(multiplicity(full, Point::parse("000")), Error);
}

TEST_CASE("verify_rpart and verify_modpart", "[covers]") {
    const auto pattern = PointSet::full_cube(2);
    WeightFunction full(2, pattern);
    full.add(PointSet::full_cube(2), 1);
    WeightFunction empty(2, pattern);

    CHECK(verify_rpart(full, 1).ok);
    const auto bad = verify_rpart(empty, 1);
    CHECK_FALSE(bad.ok);
    CHECK(bad.violations.size() == 4);

    CHECK(verify_modpart(empty, 1).ok);
    CHECK(verify_modpart(full, 2).ok);
    CHECK_FALSE(verify_modpart(empty, 2).ok);
    CHECK_THROWS_AS(verify_rpart(full, 0), Error);
}

TEST_CASE("weight function invariants", "[covers]") {
    WeightFunction w(2, PointSet::full_cube(1));
    w.add(PointSet::parse({"00", "01"}), 0);
    CHECK(w.entries().empty());
    w.add(PointSet::parse({"00", "01"}), 2);
    w.add(PointSet::parse({"00", "01"}), 3);
    CHECK(w.entries().at(PointSet::parse({"00", "01"})) == 5);
    CHECK_THROWS_AS(w.add(PointSet::parse({"00"}), 1), Error);
    CHECK_THROWS_AS(w.add(PointSet::parse({"000", "001"}), 1), Error);
    CHECK_THROWS_AS(w.add(PointSet::parse({"00", "01"}), kMaxWeight), Error);
    CHECK_THROWS_AS(WeightFunction(1, PointSet::full_cube(2)), Error);
}

TEST_CASE("translation r-part", "[covers]") {
    SECTION("single point") {
        const auto w = build_translation_rpart(PointSet::parse({"0"}), 1);
        REQUIRE(w.entries().size() == 2);
        for (const auto& [copy, weight] : w.entries()) CHECK(weight == 1);
        CHECK(verify_rpart(w, 1).ok);
    }
    SECTION("Y + 0 = Y + 1 merges") {
        const auto w = build_translation_rpart(PointSet::full_cube(1), 1);
        REQUIRE(w.entries().size() == 1);
        CHECK(w.entries().begin()->second == 2);
        CHECK(verify_rpart(w, 2).ok);
    }
    SECTION("three-point pattern in Q_2") {
        const auto x = PointSet::parse({"00", "01", "10"});
        const auto w = build_translation_rpart(x, 2);
        // oracle: the four translates {y + p}, counted directly
        const auto pts = oracle::cube(2);
        for (std::size_t target = 0; target < 4; ++target) {
            int hits = 0;
            for (const auto& p : pts) {
                for (const auto& s : x) {
                    oracle::Word y{s[1] ^ p[0], s[2] ^ p[1]};
                    if (oracle::to_index(y) == target) ++hits;
                }
            }
            CHECK(hits == 3);
            CHECK(multiplicity(w, Point(2, target)) == static_cast<Weight>(hits));
        }
    }
    SECTION("errors") {
        CHECK_THROWS_AS(build_translation_rpart(PointSet(2), 3), Error);
        CHECK_THROWS_AS(build_translation_rpart(PointSet::full_cube(3), 2), Error);
    }
}

TEST_CASE("translation r-part has multiplicity |X| for every small pattern", "[covers][property]") {
    for (int k = 1; k <= 2; ++k) {
        for (unsigned mask = 1; mask < (1U << (1U << k)); ++mask) {
            const auto x = subset_from_mask(k, mask);
            for (int n = k; n <= 4; ++n) {
                const auto w = build_translation_rpart(x, n);
                CHECK(verify_rpart(w, x.size()).ok);
                CHECK(w.total_weight() == (Weight{1} << n));
                CHECK(copies_are_isometric(w));
            }
        }
    }
}

TEST_CASE("double counting identity", "[covers][property]") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 3);
        const auto pattern = PointSet::full_cube(1);
        const auto copies = enumerate_isometric_copies(pattern, n);
        WeightFunction w(n, pattern);
        for (const auto& c : copies) w.add(c, rng() % 4);
        Weight lhs = 0;
        for (auto m : multiplicities(w)) lhs += m;
        Weight rhs = 0;
        for (const auto& [copy, weight] : w.entries()) rhs += weight * copy.size();
        CHECK(lhs == rhs);
        const auto family = as_family(w);
        for (Word x = 0; x < (Word{1} << n); ++x) CHECK(multiplicity(w, Point(n, x)) == oracle::multiplicity(family, x));
    }
}

TEST_CASE("a 1-part is exactly a partition", "[covers][property]") {
    // all families of edges of Q_2 with weights in {0,1}
    const auto copies = enumerate_isometric_copies(PointSet::full_cube(1), 2);
    for (unsigned mask = 0; mask < (1U << copies.size()); ++mask) {
        WeightFunction w(2, PointSet::full_cube(1));
        std::vector<std::vector<std::uint32_t>> blocks;
        for (std::size_t i = 0; i < copies.size(); ++i) {
            if ((mask >> i) & 1U) {
                w.add(copies[i], 1);
                std::vector<std::uint32_t> b;
                for (auto word : copies[i].words()) b.push_back(static_cast<std::uint32_t>(word));
                blocks.push_back(b);
            }
        }
        std::vector<int> count(4, 0);
        for (const auto& b : blocks) {
            for (auto e : b) ++count[e];
        }
        const bool partition = std::all_of(count.begin(), count.end(), [](int c) { return c == 1; });
        CHECK(verify_rpart(w, 1).ok == partition);
    }
}
