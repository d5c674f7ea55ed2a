#pragma once

// JSON documents. Numbers that are exact rationals travel as strings "p/q";
// no floating point is read or written.
//
//   graph:   {"vertices": [id...], "edges": [{"id","src","rng"}...],
//             "infinite_bundles": [{"src","rng"}...]}   (bundles optional)
//   measure: {vertex: "p/q", ...}
//   element: [{"alpha": [edge ids] | {"vertex": id}, "beta": ...,
//              "coeff": {"re": "p/q", "im": "p/q"}}, ...]

#include <filesystem>
#include <memory>
#include <string>
#include <string_view>

#include <json.hpp>

#include "gtrace/graph.hpp"
#include "gtrace/ktheory.hpp"
#include "gtrace/star_algebra.hpp"
#include "gtrace/trace_polytope.hpp"

namespace gtrace {

using Json = nlohmann::json;

Json read_json_file(const std::filesystem::path& file);

Graph parse_graph(const Json& doc);
Graph load_graph(const std::filesystem::path& file);
Json graph_to_json(const Graph& g);

/// Every vertex must be present, and nothing else.
VertexWeights parse_measure(const Graph& g, const Json& doc);
Json measure_to_json(const Graph& g, const VertexWeights& mu);

/// "v1:1,v2:-1/2"; every vertex must appear exactly once.
VertexWeights parse_vertex_vector(const Graph& g, std::string_view text);
std::vector<Integer> parse_integer_vector(const Graph& g, std::string_view text);

Path parse_path(const Graph& g, const Json& doc);
Json path_to_json(const Graph& g, const Path& p);

GaussianRational parse_gaussian(const Json& doc);
Json gaussian_to_json(const GaussianRational& z);

FormalElement parse_element(std::shared_ptr<const Graph> g, const Json& doc);
Json element_to_json(const FormalElement& x);

Json vertex_list(const Graph& g, const std::vector<VertexId>& vs);
Json integer_list(const std::vector<Integer>& xs);
Json k0_class_to_json(const K0Class& c);

/// Canonical text form: sorted keys, two-space indent, trailing newline.
std::string render(const Json& doc);

}  // namespace gtrace
