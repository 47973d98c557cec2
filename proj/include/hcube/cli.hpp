#pragma once

// The hcube command line. `run` takes the arguments after the program name
// and explicit streams so it can be driven in-process by tests.
//
// Exit codes: 0 success, 1 negative result (exhausted / not ok / false),
// 2 inconclusive or out of budget, 64 usage or input error.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hcube/covers.hpp"
#include "hcube/edge_decomp.hpp"
#include "hcube/grid.hpp"
#include "hcube/io.hpp"
#include "hcube/modpart.hpp"
#include "hcube/partition.hpp"

namespace hcube::cli {

enum ExitCode : int { kOk = 0, kNegative = 1, kInconclusive = 2, kUsage = 64 };

namespace detail {

using io::json;

inline void print_report(const CoverReport& rep, int n, std::ostream& out) {
    out << "kind: " << (rep.kind == CoverKind::exact ? "exact" : "mod") << "\n";
    out << "r: " << rep.r << "\n";
    out << "n: " << n << "\n";
    out << "points: " << (std::uint64_t{1} << n) << "\n";
    out << "violations: " << rep.violations.size() << "\n";
    if (!rep.violations.empty()) {
        out << "point multiplicity\n";
        std::size_t shown = 0;
        for (const auto& v : rep.violations) {
            if (++shown > 64) {
                out << "... (" << rep.violations.size() - 64 << " more)\n";
                break;
            }
            out << v.point.to_string() << " " << v.multiplicity << "\n";
        }
    }
    out << (rep.ok ? "ok" : "not ok") << "\n";
}

inline int verify_weights(const WeightFunction& w, const std::string& mode, Weight r, std::ostream& out) {
    if (!copies_are_isometric(w)) {
        out << "copies: not all keyed sets are isometric copies of the pattern\nnot ok\n";
        return kNegative;
    }
    const CoverReport rep = mode == "exact" ? verify_rpart(w, r) : verify_modpart(w, r);
    print_report(rep, w.dimension(), out);
    return rep.ok ? kOk : kNegative;
}

inline int verify_command(const std::string& path, std::string mode, long long r_flag, std::istream& in,
                          std::ostream& out) {
    const json j = io::read_json(path, in);
    const std::string kind = j.is_object() && j.contains("kind") ? j.at("kind").get<std::string>() : "";
    if (!kind.empty() && j.value("version", std::string()) != io::kFormatVersion) {
        throw Error("unsupported certificate version");
    }

    if (kind == "partition") {
        if (mode != "auto" && mode != "partition" && mode != "exact") {
            throw Error("mode '" + mode + "' does not apply to a partition certificate");
        }
        const auto d = io::partition_from_json(j);
        const bool ok = verify_cube_partition(d.pattern, d.n, d.blocks, d.mode);
        out << "kind: partition\nmode: " << to_string(d.mode) << "\nn: " << d.n << "\nblocks: " << d.blocks.size()
            << "\n"
            << (ok ? "ok" : "not ok") << "\n";
        return ok ? kOk : kNegative;
    }
    if (kind == "edge-decomposition") {
        if (mode != "auto" && mode != "edges") {
            throw Error("mode '" + mode + "' does not apply to an edge decomposition");
        }
        const auto d = io::edge_decomposition_from_json(j);
        bool ok = is_exact_edge_decomposition(d.decomposition);
        for (const auto& p : d.decomposition.paths) {
            ok = ok && static_cast<int>(p.edge_count()) == d.segment_edges;
        }
        out << "kind: edge-decomposition\nn: " << d.decomposition.n << "\npaths: " << d.decomposition.paths.size()
            << "\nsegment_edges: " << d.segment_edges << "\n"
            << (ok ? "ok" : "not ok") << "\n";
        return ok ? kOk : kNegative;
    }

    const json& wj = kind.empty() ? j : j.at("weights");
    if (!kind.empty() && kind != "rpart" && kind != "modpart") throw Error("unknown certificate kind '" + kind + "'");
    const WeightFunction w = io::weight_function_from_json(wj);
    if (mode == "auto") mode = kind == "rpart" ? "exact" : kind == "modpart" ? "mod" : "";
    if (mode != "exact" && mode != "mod") throw Error("verify needs --mode exact or --mode mod for these weights");

    Weight r = 0;
    if (r_flag > 0) {
        r = static_cast<Weight>(r_flag);
    } else if (!kind.empty()) {
        r = j.at("r").get<Weight>();
    } else {
        throw Error("verify needs --r for a bare weight function");
    }
    if (kind == "modpart") {
        const int k = j.at("k").get<int>();
        const int n = j.at("n").get<int>();
        const Weight cert_r = j.at("r").get<Weight>();
        if (k != w.pattern().dimension() || n != w.dimension() ||
            n != modpart_dimension(k, log2_exact(cert_r))) {
            out << "header: k, r, n are inconsistent with the weights\nnot ok\n";
            return kNegative;
        }
    }
    return verify_weights(w, mode, r, out);
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Covers and partitions of the Hamming cube by copies of a pattern", "hcube"};
    app.require_subcommand(1);

    std::string pattern_path, out_path, weights_path, mode, verify_mode = "auto";
    int n = 0, l = 0, max_m = 4, split = 0, max_induced_n = kDefaultMaxInducedDimension;
    long long r = 0, k_len = 0, verify_r = 0;
    std::uint64_t budget = SolverConfig{}.node_budget;
    std::uint64_t grid_budget = 50'000'000;
    bool trace = false, deterministic = true, progress = false;

    auto* rpart = app.add_subcommand("rpart", "translation r-part with r = |X|");
    rpart->add_option("--pattern", pattern_path, "pattern file (JSON array of binary strings)")->required();
    rpart->add_option("--n", n, "ambient dimension")->required();
    rpart->add_option("--out", out_path, "output file, '-' for stdout");

    auto* modpart = app.add_subcommand("modpart", "inductive mod-r part");
    modpart->add_option("--pattern", pattern_path, "pattern file")->required();
    modpart->add_option("--r", r, "modulus, a power of two")->required();
    modpart->add_option("--out", out_path, "output file, '-' for stdout");
    modpart->add_flag("--trace", trace, "include the recursion trace");

    auto* verify = app.add_subcommand("verify", "re-check a certificate");
    verify->add_option("--weights,--cert", weights_path, "certificate file, '-' for stdin")->required();
    verify->add_option("--mode", verify_mode, "auto|exact|mod|partition|edges")
        ->check(CLI::IsMember({"auto", "exact", "mod", "partition", "edges"}));
    verify->add_option("--r", verify_r, "override r");

    auto* solve = app.add_subcommand("solve", "exact-cover search for a partition of {0,1}^n");
    solve->add_option("--pattern", pattern_path, "pattern file")->required();
    solve->add_option("--n", n, "ambient dimension")->required();
    solve->add_option("--mode", mode, "isometric|induced")->required()->check(CLI::IsMember({"isometric", "induced"}));
    solve->add_flag("--deterministic", deterministic, "single-threaded deterministic search (default)");
    solve->add_option("--budget", budget, "node budget");
    solve->add_option("--max-induced-n", max_induced_n, "largest n allowed for induced-copy enumeration");
    solve->add_flag("--progress", progress, "report node counts on stderr");
    solve->add_option("--out", out_path, "output file, '-' for stdout");

    auto* grid_counts = app.add_subcommand("grid-counts", "even/odd vertex counts of P_l^n");
    grid_counts->add_option("--l", l, "odd side length")->required();
    grid_counts->add_option("--n", n, "dimension")->required();

    auto* grid_cx = app.add_subcommand("grid-counterexample", "search for the odd-l counterexample pattern");
    grid_cx->add_option("--l", l, "odd side length")->required();
    grid_cx->add_option("--max-m", max_m, "largest grid dimension to search");
    grid_cx->add_option("--budget", grid_budget, "node budget");

    auto* edge_paths = app.add_subcommand("edge-paths", "antipodal path decomposition of E(Q_n)");
    edge_paths->add_option("--n", n, "dimension")->required();
    edge_paths->add_option("--split", split, "cut into paths with this many edges");
    edge_paths->add_option("--out", out_path, "output file, '-' for stdout");

    auto* edge_feasible = app.add_subcommand("edge-feasible", "can E(Q_n) split into copies of P_{k+1} (odd n)");
    edge_feasible->add_option("--n", n, "odd dimension")->required();
    edge_feasible->add_option("--k", k_len, "path length in edges")->required();

    std::vector<std::string> argv_store{"hcube"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "hcube: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (*rpart) {
            const PointSet x = io::pattern_from_json(io::read_json(pattern_path, in));
            const WeightFunction w = build_translation_rpart(x, n);
            io::write_text(out_path, io::dump(io::rpart_certificate(w, x.size())), out);
            return kOk;
        }
        if (*modpart) {
            const PointSet x = io::pattern_from_json(io::read_json(pattern_path, in));
            const ModPartCertificate cert = build_modpart(x, static_cast<Weight>(r < 0 ? 0 : r));
            io::write_text(out_path, io::dump(io::modpart_certificate(cert, trace)), out);
            return kOk;
        }
        if (*verify) return detail::verify_command(weights_path, verify_mode, verify_r, in, out);
        if (*solve) {
            const PointSet x = io::pattern_from_json(io::read_json(pattern_path, in));
            const CopyMode cm = mode == "isometric" ? CopyMode::isometric : CopyMode::induced;
            SolverConfig config;
            config.node_budget = budget;
            if (progress) config.progress = [&err](std::uint64_t nodes) { err << "nodes: " << nodes << "\n"; };
            const auto res = solve_cube_partition(x, n, cm, config, max_induced_n);
            switch (res.search.status) {
                case SolveStatus::found:
                    io::write_text(out_path, io::dump(io::partition_certificate(x, n, cm, res.blocks)), out);
                    return kOk;
                case SolveStatus::exhausted:
                    out << "exhausted\n";
                    return kNegative;
                case SolveStatus::inconclusive:
                    out << "inconclusive after " << res.search.nodes << " nodes\n";
                    return kInconclusive;
            }
        }
        if (*grid_counts) {
            const ParityCount pc = parity_counts(l, n);
            io::json j{{"l", l},
                       {"n", n},
                       {"even", pc.even},
                       {"odd", pc.odd},
                       {"even_mod_l", pc.even % static_cast<std::uint64_t>(l)}};
            out << io::dump(j);
            return kOk;
        }
        if (*grid_cx) {
            const auto res = find_counterexample_H(l, max_m, grid_budget);
            io::json j{{"l", l}, {"status", to_string(res.status)}, {"nodes", res.nodes}};
            if (res.status == SearchStatus::found) {
                std::vector<std::string> verts;
                std::size_t even = 0;
                for (const auto& v : res.vertices) {
                    verts.push_back(v.to_string());
                    even += v.even() ? 1 : 0;
                }
                j["m"] = res.m;
                j["vertices"] = verts;
                j["even"] = even;
                j["odd"] = verts.size() - even;
                j["verified"] = is_counterexample_pattern(l, res.m, res.vertices);
            }
            out << io::dump(j);
            return res.status == SearchStatus::found ? kOk
                   : res.status == SearchStatus::none ? kNegative
                                                      : kInconclusive;
        }
        if (*edge_paths) {
            const int seg = split > 0 ? split : n;
            const EdgeDecomposition dec = split > 0 ? split_into_paths(n, split) : antipodal_path_family(n);
            io::write_text(out_path, io::dump(io::edge_certificate(dec, seg)), out);
            return kOk;
        }
        if (*edge_feasible) {
            const Feasibility f = feasibility_predicate(n, k_len);
            out << to_string(f) << "\n";
            return f == Feasibility::feasible ? kOk : f == Feasibility::infeasible ? kNegative : kInconclusive;
        }
    } catch (const Error& e) {
        err << "hcube: " << e.what() << "\n";
        return kUsage;
    } catch (const io::json::exception& e) {
        err << "hcube: malformed input: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace hcube::cli
