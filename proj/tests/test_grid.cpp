#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "hcube/grid.hpp"
#include "hcube/partition.hpp"
#include "oracles.hpp"

using namespace hcube;

TEST_CASE("grid adjacency", "[grid]") {
    CHECK(grid_adjacent(GridPoint::parse(3, "00"), GridPoint::parse(3, "01")));
    CHECK_FALSE(grid_adjacent(GridPoint::parse(3, "00"), GridPoint::parse(3, "11")));
    CHECK(grid_adjacent(GridPoint::parse(3, "02"), GridPoint::parse(3, "01")));
    CHECK_FALSE(grid_adjacent(GridPoint::parse(3, "00"), GridPoint::parse(3, "02")));
    CHECK_THROWS_AS(grid_adjacent(GridPoint::parse(3, "00"), GridPoint::parse(3, "000")), Error);
    CHECK_THROWS_AS(grid_adjacent(GridPoint::parse(3, "00"), GridPoint::parse(5, "00")), Error);
    CHECK_THROWS_AS(GridPoint::parse(3, "03"), Error);
}

TEST_CASE("grid ids round trip", "[grid]") {
    for (std::uint32_t id = 0; id < 27; ++id) CHECK(grid_index(grid_point(3, 3, id)) == id);
    CHECK(grid_point(3, 2, 5).to_string() == "12");
    const auto g = grid_graph(3, 2);
    CHECK(g.size() == 9);
    CHECK(g.edge_count() == 12);
    for (std::uint32_t a = 0; a < 9; ++a) {
        for (std::uint32_t b = 0; b < 9; ++b) {
            if (a != b) CHECK(g.adjacent(a, b) == grid_adjacent(grid_point(3, 2, a), grid_point(3, 2, b)));
        }
    }
}

TEST_CASE("parity counts", "[grid]") {
    auto check = [](int l, int n, std::uint64_t a, std::uint64_t b) {
        const auto c = parity_counts(l, n);
        CHECK(c.even == a);
        CHECK(c.odd == b);
    };
    check(3, 1, 2, 1);
    check(3, 2, 5, 4);
    check(5, 1, 3, 2);
    CHECK_THROWS_AS(parity_counts(4, 2), Error);
    CHECK_THROWS_AS(parity_counts(1, 2), Error);
    CHECK_THROWS_AS(parity_counts(3, 0), Error);
}

TEST_CASE("parity counts match enumeration and closed form", "[grid][property]") {
    for (int l : {3, 5, 7}) {
        for (int n = 1; n <= 5; ++n) {
            const auto c = parity_counts(l, n);
            const auto [even, odd] = oracle::grid_parity(l, n);
            std::uint64_t total = 1;
            for (int i = 0; i < n; ++i) total *= static_cast<std::uint64_t>(l);
            INFO("l=" << l << " n=" << n);
            CHECK(c.even == even);
            CHECK(c.odd == odd);
            CHECK(c.even + c.odd == total);
            CHECK(c.even - c.odd == 1);
            CHECK(c.even == (total + 1) / 2);
            CHECK(c.even % static_cast<std::uint64_t>(l) != 0);
        }
    }
}

TEST_CASE("snake path", "[grid]") {
    auto strings = [](const std::vector<GridPoint>& p) {
        std::vector<std::string> out;
        for (const auto& v : p) out.push_back(v.to_string());
        return out;
    };
    CHECK(strings(snake_path(3, 1)) == std::vector<std::string>{"0", "1", "2"});
    CHECK(strings(snake_path(2, 2)) == std::vector<std::string>{"00", "01", "11", "10"});
    CHECK_THROWS_AS(snake_path(3, 0), Error);
}

TEST_CASE("snake path is a Hamiltonian path with alternating parity", "[grid][property]") {
    for (int l = 2; l <= 5; ++l) {
        for (int n = 1; n <= 4; ++n) {
            const auto path = snake_path(l, n);
            std::set<std::uint32_t> seen;
            for (const auto& p : path) seen.insert(grid_index(p));
            const auto [even, odd] = oracle::grid_parity(l, n);
            INFO("l=" << l << " n=" << n);
            CHECK(seen.size() == even + odd);
            CHECK(path.size() == seen.size());
            for (std::size_t i = 0; i + 1 < path.size(); ++i) {
                CHECK(grid_adjacent(path[i], path[i + 1]));
                CHECK(path[i].even() != path[i + 1].even());
            }
        }
    }
}

TEST_CASE("counterexample search", "[grid]") {
    SECTION("too small") {
        const auto r = find_counterexample_H(3, 2);
        CHECK(r.status == SearchStatus::none);
        CHECK(r.vertices.empty());
    }
    SECTION("found by m = 4") {
        const auto r = find_counterexample_H(3, 4);
        REQUIRE(r.status == SearchStatus::found);
        CHECK(r.m <= 4);
        CHECK(r.vertices.size() == 9);
        CHECK(is_counterexample_pattern(3, r.m, r.vertices));
        // independent recount
        std::size_t even = 0;
        for (const auto& v : r.vertices) even += v.coordinate_sum() % 2 == 0 ? 1 : 0;
        CHECK(even == 3);
    }
    SECTION("budget") {
        const auto r = find_counterexample_H(3, 4, 5);
        CHECK(r.status == SearchStatus::inconclusive);
    }
    SECTION("even side rejected") { CHECK_THROWS_AS(find_counterexample_H(4, 3), Error); }
}

TEST_CASE("counterexample checker", "[grid]") {
    std::vector<GridPoint> line;
    for (int i = 0; i < 3; ++i) line.push_back(GridPoint(3, {i}));
    CHECK_FALSE(is_counterexample_pattern(3, 1, line));
    // nine vertices of P_3^2: parity profile 5/4, not 3/6
    std::vector<GridPoint> all;
    for (std::uint32_t i = 0; i < 9; ++i) all.push_back(grid_point(3, 2, i));
    CHECK_FALSE(is_counterexample_pattern(3, 2, all));
}

TEST_CASE("obstruction", "[grid]") {
    const auto h = find_counterexample_H(3, 4);
    REQUIRE(h.status == SearchStatus::found);
    for (int n = 1; n <= 5; ++n) {
        const auto rep = check_obstruction(h.vertices, 3, n);
        CHECK(rep.even_vertices % 3 != 0);
        CHECK(rep.impossible);
    }
    for (int n : {2, 3}) {
        const auto counts = induced_copy_even_counts(3, h.vertices, n);
        for (auto c : counts) CHECK((c == 3 || c == 6));
        const auto rep = check_obstruction(h.vertices, 3, n, 27);
        CHECK(rep.copies_checked);
        CHECK(rep.copy_counts_ok);
    }
    CHECK_THROWS_AS(check_obstruction({GridPoint(3, {0})}, 3, 2), Error);
}

TEST_CASE("no exact cover of P_3^2 by copies of H", "[grid]") {
    const auto h = find_counterexample_H(3, 4);
    REQUIRE(h.status == SearchStatus::found);
    const SimpleGraph host_m = grid_graph(3, h.m);
    std::vector<std::uint32_t> ids;
    for (const auto& v : h.vertices) ids.push_back(grid_index(v));
    const auto copies = enumerate_induced_copies(host_m.induced(ids), grid_graph(3, 2));
    ExactCoverInstance inst{9, copies};
    const auto res = solve_exact_cover(inst);
    CHECK(res.status == SolveStatus::exhausted);
}

TEST_CASE("divisibility lemma on block even-counts", "[grid][property]") {
    // blocks whose even-count is a multiple of l can never cover a universe
    // whose even-count is not, for any choice of blocks
    const int l = 3;
    for (int n = 1; n <= 2; ++n) {
        const auto total_even = parity_counts(l, n).even;
        const auto size = static_cast<std::uint32_t>(oracle::grid_parity(l, n).first + oracle::grid_parity(l, n).second);
        std::vector<std::vector<std::uint32_t>> blocks;
        for (std::uint32_t a = 0; a < size; ++a) {
            for (std::uint32_t b = a + 1; b < size; ++b) {
                for (std::uint32_t c = b + 1; c < size; ++c) {
                    std::size_t ev = 0;
                    for (auto v : {a, b, c}) ev += grid_point(l, n, v).even() ? 1 : 0;
                    if (ev % 3 == 0) blocks.push_back({a, b, c});
                }
            }
        }
        CHECK(total_even % 3 != 0);
        CHECK(solve_exact_cover(ExactCoverInstance{size, blocks}).status == SolveStatus::exhausted);
    }
}
