#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "hcube/edge_decomp.hpp"
#include "oracles.hpp"

using namespace hcube;

namespace {

// Edge multiplicities of a decomposition as oracle index pairs.
std::map<std::pair<std::uint64_t, std::uint64_t>, int> edge_counts(const EdgeDecomposition& dec) {
    std::map<std::pair<std::uint64_t, std::uint64_t>, int> out;
    for (const auto& p : dec.paths) {
        for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
            auto a = p.vertices[i].bits(), b = p.vertices[i + 1].bits();
            ++out[{std::min(a, b), std::max(a, b)}];
        }
    }
    return out;
}

bool matches_oracle(const EdgeDecomposition& dec) {
    const auto counts = edge_counts(dec);
    const auto edges = oracle::cube_edges(dec.n);
    if (counts.size() != edges.size()) return false;
    for (const auto& [e, c] : counts) {
        if (c != 1 || edges.count(e) == 0) return false;
    }
    return true;
}

std::vector<std::string> strings(const CubePath& p) {
    std::vector<std::string> out;
    for (const auto& v : p.vertices) out.push_back(v.to_string());
    return out;
}

}  // namespace

TEST_CASE("antipodal families", "[edge_decomp]") {
    SECTION("n = 1") {
        const auto dec = antipodal_path_family(1);
        REQUIRE(dec.paths.size() == 1);
        CHECK(strings(dec.paths[0]) == std::vector<std::string>{"0", "1"});
    }
    SECTION("n = 2") {
        const auto dec = antipodal_path_family(2);
        REQUIRE(dec.paths.size() == 2);
        CHECK(strings(dec.paths[0]) == std::vector<std::string>{"00", "10", "11"});
        CHECK(strings(dec.paths[1]) == std::vector<std::string>{"11", "01", "00"});
        CHECK(matches_oracle(dec));
    }
    SECTION("n = 3") {
        const auto dec = antipodal_path_family(3);
        CHECK(dec.paths.size() == 4);
        std::size_t total = 0;
        for (const auto& p : dec.paths) total += p.edge_count();
        CHECK(total == 12);
        CHECK(matches_oracle(dec));
    }
    CHECK_THROWS_AS(antipodal_path_family(0), Error);
}

TEST_CASE("antipodal families are exact", "[edge_decomp][property]") {
    for (int n = 1; n <= 8; ++n) {
        const auto dec = antipodal_path_family(n);
        INFO("n=" << n);
        CHECK(dec.paths.size() == (std::size_t{1} << (n - 1)));
        CHECK(matches_oracle(dec));
        CHECK(is_exact_edge_decomposition(dec));
        for (const auto& p : dec.paths) {
            CHECK(p.edge_count() == static_cast<std::size_t>(n));
            CHECK(hamming_distance(p.vertices.front(), p.vertices.back()) == n);
            CHECK(parity(p.vertices.front()) == Parity::even);
        }
    }
}

TEST_CASE("splitting into shorter paths", "[edge_decomp]") {
    const auto singles = split_into_paths(2, 1);
    CHECK(singles.paths.size() == 4);
    for (const auto& p : singles.paths) CHECK(p.edge_count() == 1);

    const auto whole = split_into_paths(2, 2);
    CHECK(strings(whole.paths[0]) == strings(antipodal_path_family(2).paths[0]));
    CHECK(strings(whole.paths[1]) == strings(antipodal_path_family(2).paths[1]));

    const auto four = split_into_paths(4, 2);
    CHECK(four.paths.size() == 16);
    CHECK(matches_oracle(four));

    CHECK_THROWS_AS(split_into_paths(5, 2), Error);
    CHECK_THROWS_AS(split_into_paths(4, 0), Error);
}

TEST_CASE("splits stay exact", "[edge_decomp][property]") {
    for (int n = 1; n <= 8; ++n) {
        for (int k = 1; k <= n; ++k) {
            if (n % k != 0) continue;
            const auto dec = split_into_paths(n, k);
            INFO("n=" << n << " k=" << k);
            CHECK(matches_oracle(dec));
            CHECK(is_exact_edge_decomposition(dec));
        }
    }
}

TEST_CASE("exactness check rejects broken families", "[edge_decomp]") {
    auto dec = antipodal_path_family(3);
    dec.paths.pop_back();
    CHECK_FALSE(is_exact_edge_decomposition(dec));
    dec = antipodal_path_family(3);
    dec.paths.push_back(dec.paths.front());
    CHECK_FALSE(is_exact_edge_decomposition(dec));
}

TEST_CASE("edge ids", "[edge_decomp]") {
    for (int n = 1; n <= 5; ++n) {
        std::set<std::size_t> ids;
        for (const auto& [a, b] : oracle::cube_edges(n)) ids.insert(cube_edge_id(Point(n, a), Point(n, b)));
        CHECK(ids.size() == cube_edge_count(n));
        CHECK(*ids.rbegin() == cube_edge_count(n) - 1);
    }
    CHECK_THROWS_AS(cube_edge_id(Point::parse("00"), Point::parse("11")), Error);
}

TEST_CASE("feasibility predicate", "[edge_decomp]") {
    CHECK(feasibility_predicate(3, 3) == Feasibility::feasible);
    CHECK(feasibility_predicate(3, 4) == Feasibility::infeasible);
    CHECK(feasibility_predicate(5, 4) == Feasibility::feasible);
    CHECK(feasibility_predicate(4, 2) == Feasibility::out_of_scope);
    CHECK(std::string(to_string(feasibility_predicate(3, 4))) == "false");
    CHECK(std::string(to_string(feasibility_predicate(6, 1))) == "out-of-scope");
    CHECK_THROWS_AS(feasibility_predicate(0, 1), Error);
    CHECK_THROWS_AS(feasibility_predicate(3, 0), Error);
}

TEST_CASE("feasibility predicate matches the divisibility statement", "[edge_decomp][property]") {
    for (int n = 1; n <= 15; n += 2) {
        const unsigned long long edges = static_cast<unsigned long long>(n) << (n - 1);
        for (long long k = 1; k <= 20; ++k) {
            const bool expected = k <= n && edges % static_cast<unsigned long long>(k) == 0;
            CHECK((feasibility_predicate(n, k) == Feasibility::feasible) == expected);
        }
    }
}

TEST_CASE("solver cross-check on Q_3 with 2-edge paths", "[edge_decomp]") {
    REQUIRE(feasibility_predicate(3, 2) == Feasibility::feasible);
    const auto inst = path_cover_instance(3, 2);
    // oracle count of 2-edge paths: 8 middles, 3 choose 2 leg pairs each
    CHECK(inst.blocks.size() == 24);
    CHECK(inst.universe_size == 12);
    const auto res = solve_exact_cover(inst);
    REQUIRE(res.status == SolveStatus::found);
    CHECK(verify_partition(res.certificate, inst));
    CHECK(res.certificate.blocks.size() == 6);
}

TEST_CASE("solver agrees with the predicate for n = 3", "[edge_decomp][property]") {
    for (int k = 1; k <= 4; ++k) {
        const auto res = solve_exact_cover(path_cover_instance(3, k));
        INFO("k=" << k);
        CHECK((res.status == SolveStatus::found) == (feasibility_predicate(3, k) == Feasibility::feasible));
    }
}
