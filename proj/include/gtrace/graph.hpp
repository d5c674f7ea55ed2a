#pragma once

// Finite discrete graphs E = (E^0, E^1, r, s).
//
// Edge direction follows the range/source convention: an edge e has a source
// s(e) (the "src" field) and a range r(e) (the "rng" field), and a path
// a1 a2 ... an is composable when s(a_i) = r(a_{i+1}). Paths therefore grow
// at their source end, and prefixes are taken on the range side. This is the
// opposite of the common "head/tail" reading of directed graphs.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace gtrace {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
  std::string id;
  VertexId src;
  VertexId rng;
};

/// Countably many parallel edges from src to rng.
struct Bundle {
  VertexId src;
  VertexId rng;
};

class Graph {
 public:
  struct EdgeSpec {
    std::string id;
    std::string src;
    std::string rng;
  };
  struct BundleSpec {
    std::string src;
    std::string rng;
  };

  Graph() = default;
  /// Validates identifiers and endpoints; throws InputError naming the offender.
  Graph(std::vector<std::string> vertices, const std::vector<EdgeSpec>& edges,
        const std::vector<BundleSpec>& bundles = {});

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::string& vertex_name(VertexId v) const { return vertices_.at(v); }
  const std::vector<std::string>& vertex_names() const { return vertices_; }
  std::optional<VertexId> find_vertex(std::string_view name) const;
  /// Like find_vertex but throws InputError for unknown names.
  VertexId vertex(std::string_view name) const;

  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::optional<EdgeId> find_edge(std::string_view id) const;
  EdgeId edge_id(std::string_view id) const;

  /// Finite edges e with r(e) = v, in input order.
  std::span<const EdgeId> edges_into(VertexId v) const { return into_.at(v); }
  /// Finite edges e with s(e) = v, in input order.
  std::span<const EdgeId> edges_out_of(VertexId v) const { return out_of_.at(v); }

  const std::vector<Bundle>& bundles() const { return bundles_; }
  bool has_bundles() const { return !bundles_.empty(); }
  bool receives_bundle(VertexId v) const;
  bool emits_bundle(VertexId v) const;

  /// v receives at least one finite edge and no infinite bundle.
  bool is_regular(VertexId v) const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::vector<Bundle> bundles_;
  std::unordered_map<std::string, VertexId> vertex_index_;
  std::unordered_map<std::string, EdgeId> edge_index_;
  std::vector<std::vector<EdgeId>> into_;
  std::vector<std::vector<EdgeId>> out_of_;
};

struct VertexClassification {
  std::vector<VertexId> regular;
  std::vector<VertexId> singular;
};

VertexClassification classify_vertices(const Graph& g);

/// A finite path: either a vertex (length 0) or a composable edge word.
/// Ordered by length, then lexicographically by edge (input order), then by
/// base vertex.
class Path {
 public:
  static Path vertex(VertexId v) { return Path(v, v, {}); }
  /// Throws InputError unless s(a_i) = r(a_{i+1}) for consecutive edges.
  static Path from_edges(const Graph& g, std::vector<EdgeId> edges);
  static Path single(const Graph& g, EdgeId e) { return from_edges(g, {e}); }

  std::size_t length() const { return edges_.size(); }
  bool is_vertex() const { return edges_.empty(); }
  VertexId range() const { return range_; }
  VertexId source() const { return source_; }
  const std::vector<EdgeId>& edges() const { return edges_; }

  /// Range-side prefix of the given length (length 0 gives the vertex r(α)).
  Path prefix(const Graph& g, std::size_t len) const;
  /// Drops the first `count` edges; dropping all leaves the vertex s(α).
  Path drop_front(const Graph& g, std::size_t count) const;
  /// True when `p` is a range-side prefix of *this; a vertex v is a prefix
  /// of α iff r(α) = v.
  bool has_prefix(const Path& p) const;

  friend bool operator==(const Path&, const Path&) = default;
  friend std::strong_ordering operator<=>(const Path& a, const Path& b);

 private:
  Path(VertexId range, VertexId source, std::vector<EdgeId> edges)
      : range_(range), source_(source), edges_(std::move(edges)) {}

  VertexId range_ = 0;
  VertexId source_ = 0;
  std::vector<EdgeId> edges_;
};

/// All paths of length k in lexicographic order; k = 0 gives the vertices.
/// Throws InputError for graphs with infinite bundles.
std::vector<Path> enumerate_paths(const Graph& g, std::size_t k);

/// prefix followed by suffix; requires s(prefix) = r(suffix).
Path concat(const Graph& g, const Path& prefix, const Path& suffix);

/// "[a,c]" for edge words, "{v}" for vertices.
std::string format_path(const Graph& g, const Path& p);

}  // namespace gtrace
