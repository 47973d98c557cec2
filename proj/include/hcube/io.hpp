#pragma once

// JSON forms of the library's values and the certificate container.
//
// Every certificate is an object {"version": "1", "kind": ..., ...} with kind
// one of rpart, modpart, partition, edge-decomposition. Keys are emitted in
// sorted order and point lists in canonical order, so output is byte-stable.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hcube/covers.hpp"
#include "hcube/edge_decomp.hpp"
#include "hcube/grid.hpp"
#include "hcube/isometry.hpp"
#include "hcube/modpart.hpp"
#include "hcube/partition.hpp"

namespace hcube::io {

using json = nlohmann::json;

inline constexpr const char* kFormatVersion = "1";

inline json to_json(const Point& p) { return p.to_string(); }

inline json to_json(const PointSet& s) { return s.to_strings(); }

inline json to_json(const Embedding& e) {
    return json{{"k", e.source_dim()},
                {"n", e.target_dim()},
                {"coord_map", e.coord_map()},
                {"translation", e.translation().to_string()}};
}

inline json to_json(const WeightFunction& w) {
    json entries = json::array();
    for (const auto& [copy, weight] : w.entries()) entries.push_back({{"copy", to_json(copy)}, {"weight", weight}});
    return json{{"n", w.dimension()}, {"pattern", to_json(w.pattern())}, {"entries", std::move(entries)}};
}

namespace detail {

template <class F>
auto guarded(const char* what, F&& f) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw Error(std::string("malformed ") + what + ": " + e.what());
    }
}

inline PointSet point_set_from_json(const json& j, int dim) {
    std::vector<Point> pts;
    for (const auto& s : j) pts.push_back(Point::parse(s.get<std::string>()));
    return PointSet(dim, std::move(pts));
}

}  // namespace detail

/// A pattern file is a JSON array of binary strings, or an object with a
/// "pattern" (or "points") array.
inline PointSet pattern_from_json(const json& j) {
    return detail::guarded("pattern", [&] {
        const json& arr = j.is_object() ? (j.contains("pattern") ? j.at("pattern") : j.at("points")) : j;
        if (!arr.is_array() || arr.empty()) throw Error("pattern must be a non-empty array of binary strings");
        std::vector<std::string> words;
        for (const auto& s : arr) words.push_back(s.get<std::string>());
        return PointSet::parse(words);
    });
}

inline Embedding embedding_from_json(const json& j) {
    return detail::guarded("embedding", [&] {
        return Embedding(j.at("k").get<int>(), j.at("n").get<int>(), j.at("coord_map").get<std::vector<int>>(),
                         Point::parse(j.at("translation").get<std::string>()));
    });
}

inline WeightFunction weight_function_from_json(const json& j) {
    return detail::guarded("weight function", [&] {
        const int n = j.at("n").get<int>();
        WeightFunction w(n, pattern_from_json(j.at("pattern")));
        for (const auto& e : j.at("entries")) {
            const auto weight = e.at("weight").get<Weight>();
            if (weight == 0 || weight > kMaxWeight) throw Error("weights must be in [1, 2^63-1]");
            w.add(detail::point_set_from_json(e.at("copy"), n), weight);
        }
        return w;
    });
}

inline json edge_family_to_json(const DirectedEdgeFamily& f, const std::vector<Point>& z) {
    json edges = json::array();
    for (std::size_t i = 0; i < f.edges.size(); ++i) {
        json e{{"tail", to_json(f.edges[i].tail)}, {"head", to_json(f.edges[i].head)}};
        if (i < z.size()) e["z"] = to_json(z[i]);
        edges.push_back(std::move(e));
    }
    return json{{"dim", f.dim}, {"modulus", f.modulus}, {"edges", std::move(edges)}};
}

// ---- certificates ----------------------------------------------------------

inline json rpart_certificate(const WeightFunction& w, Weight r) {
    return json{{"version", kFormatVersion}, {"kind", "rpart"}, {"r", r}, {"weights", to_json(w)}};
}

inline json modpart_certificate(const ModPartCertificate& cert, bool with_trace) {
    json j{{"version", kFormatVersion},
           {"kind", "modpart"},
           {"k", cert.pattern.dimension()},
           {"r", cert.r},
           {"n", cert.n},
           {"weights", to_json(cert.exported())}};
    if (with_trace) {
        json levels = json::array();
        for (const auto& lvl : cert.trace) {
            levels.push_back({{"k", lvl.k},
                              {"m", lvl.m},
                              {"n", lvl.n},
                              {"reflected", lvl.reflected},
                              {"sub_pattern", to_json(lvl.sub_pattern)},
                              {"sub_entries", lvl.sub_entries},
                              {"edge_family", edge_family_to_json(lvl.edge_family, lvl.common_neighbors)}});
        }
        j["trace"] = std::move(levels);
    }
    return j;
}

inline json partition_certificate(const PointSet& pattern, int n, CopyMode mode, const std::vector<PointSet>& blocks) {
    json arr = json::array();
    for (const auto& b : blocks) arr.push_back(to_json(b));
    return json{{"version", kFormatVersion}, {"kind", "partition"}, {"n", n},
                {"mode", to_string(mode)},   {"pattern", to_json(pattern)}, {"blocks", std::move(arr)}};
}

inline json edge_certificate(const EdgeDecomposition& dec, int segment_edges) {
    json arr = json::array();
    for (const auto& p : dec.paths) {
        json path = json::array();
        for (const auto& v : p.vertices) path.push_back(to_json(v));
        arr.push_back(std::move(path));
    }
    return json{{"version", kFormatVersion},
                {"kind", "edge-decomposition"},
                {"n", dec.n},
                {"segment_edges", segment_edges},
                {"paths", std::move(arr)}};
}

struct PartitionData {
    PointSet pattern;
    int n = 0;
    CopyMode mode = CopyMode::isometric;
    std::vector<PointSet> blocks;
};

inline PartitionData partition_from_json(const json& j) {
    return detail::guarded("partition certificate", [&] {
        PartitionData d;
        d.n = j.at("n").get<int>();
        d.pattern = pattern_from_json(j.at("pattern"));
        const auto mode = j.at("mode").get<std::string>();
        if (mode == "isometric") {
            d.mode = CopyMode::isometric;
        } else if (mode == "induced") {
            d.mode = CopyMode::induced;
        } else {
            throw Error("unknown partition mode '" + mode + "'");
        }
        for (const auto& b : j.at("blocks")) d.blocks.push_back(detail::point_set_from_json(b, d.n));
        return d;
    });
}

struct EdgeData {
    EdgeDecomposition decomposition;
    int segment_edges = 0;
};

inline EdgeData edge_decomposition_from_json(const json& j) {
    return detail::guarded("edge decomposition", [&] {
        EdgeData d;
        d.decomposition.n = j.at("n").get<int>();
        d.segment_edges = j.at("segment_edges").get<int>();
        for (const auto& p : j.at("paths")) {
            CubePath path;
            for (const auto& v : p) path.vertices.push_back(Point::parse(v.get<std::string>()));
            d.decomposition.paths.push_back(std::move(path));
        }
        return d;
    });
}

// ---- files -----------------------------------------------------------------

/// "-" reads stdin.
inline json read_json(const std::string& path, std::istream& stdin_stream = std::cin) {
    try {
        if (path == "-") return json::parse(stdin_stream);
        std::ifstream in(path);
        if (!in) throw Error("cannot open '" + path + "'");
        return json::parse(in);
    } catch (const json::exception& e) {
        throw Error("'" + path + "' is not valid JSON: " + e.what());
    }
}

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

/// "-" (or empty) writes to `stdout_stream`.
inline void write_text(const std::string& path, const std::string& text, std::ostream& stdout_stream) {
    if (path.empty() || path == "-") {
        stdout_stream << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    out << text;
}

}  // namespace hcube::io
