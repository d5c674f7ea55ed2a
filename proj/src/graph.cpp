#include "gtrace/graph.hpp"

#include <algorithm>

#include "gtrace/errors.hpp"

namespace gtrace {

namespace {

const char* const kConvention =
    " (convention: \"src\" is s(e), \"rng\" is r(e); a path a1 a2 needs s(a1) = r(a2))";

}  // namespace

Graph::Graph(std::vector<std::string> vertices, const std::vector<EdgeSpec>& edges,
             const std::vector<BundleSpec>& bundles)
    : vertices_(std::move(vertices)) {
  for (VertexId v = 0; v < vertices_.size(); ++v) {
    if (vertices_[v].empty()) throw InputError(std::string("empty vertex identifier") + kConvention);
    if (!vertex_index_.emplace(vertices_[v], v).second) {
      throw InputError("duplicate identifier " + vertices_[v] + kConvention);
    }
  }
  auto endpoint = [&](const std::string& name) {
    auto it = vertex_index_.find(name);
    if (it == vertex_index_.end()) throw InputError("dangling endpoint " + name + kConvention);
    return it->second;
  };
  into_.resize(vertices_.size());
  out_of_.resize(vertices_.size());
  for (const auto& spec : edges) {
    if (spec.id.empty()) throw InputError(std::string("empty edge identifier") + kConvention);
    const auto id = static_cast<EdgeId>(edges_.size());
    if (!edge_index_.emplace(spec.id, id).second) throw InputError("duplicate identifier " + spec.id + kConvention);
    edges_.push_back(Edge{spec.id, endpoint(spec.src), endpoint(spec.rng)});
    into_[edges_.back().rng].push_back(id);
    out_of_[edges_.back().src].push_back(id);
  }
  for (const auto& spec : bundles) {
    Bundle b{endpoint(spec.src), endpoint(spec.rng)};
    for (const auto& other : bundles_) {
      if (other.src == b.src && other.rng == b.rng) {
        throw InputError("duplicate infinite bundle " + spec.src + " -> " + spec.rng + kConvention);
      }
    }
    bundles_.push_back(b);
  }
}

std::optional<VertexId> Graph::find_vertex(std::string_view name) const {
  auto it = vertex_index_.find(std::string(name));
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

VertexId Graph::vertex(std::string_view name) const {
  if (auto v = find_vertex(name)) return *v;
  throw InputError("unknown vertex " + std::string(name));
}

std::optional<EdgeId> Graph::find_edge(std::string_view id) const {
  auto it = edge_index_.find(std::string(id));
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

EdgeId Graph::edge_id(std::string_view id) const {
  if (auto e = find_edge(id)) return *e;
  throw InputError("unknown edge " + std::string(id));
}

bool Graph::receives_bundle(VertexId v) const {
  return std::any_of(bundles_.begin(), bundles_.end(), [v](const Bundle& b) { return b.rng == v; });
}

bool Graph::emits_bundle(VertexId v) const {
  return std::any_of(bundles_.begin(), bundles_.end(), [v](const Bundle& b) { return b.src == v; });
}

bool Graph::is_regular(VertexId v) const { return !into_.at(v).empty() && !receives_bundle(v); }

bool operator==(const Graph& a, const Graph& b) {
  if (a.vertices_ != b.vertices_ || a.edges_.size() != b.edges_.size() || a.bundles_.size() != b.bundles_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.edges_.size(); ++i) {
    const auto& x = a.edges_[i];
    const auto& y = b.edges_[i];
    if (x.id != y.id || x.src != y.src || x.rng != y.rng) return false;
  }
  for (std::size_t i = 0; i < a.bundles_.size(); ++i) {
    if (a.bundles_[i].src != b.bundles_[i].src || a.bundles_[i].rng != b.bundles_[i].rng) return false;
  }
  return true;
}

VertexClassification classify_vertices(const Graph& g) {
  VertexClassification out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    (g.is_regular(v) ? out.regular : out.singular).push_back(v);
  }
  return out;
}

Path Path::from_edges(const Graph& g, std::vector<EdgeId> edges) {
  if (edges.empty()) throw InputError("edge word must be nonempty (use a vertex for length 0)");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i] >= g.edge_count()) throw InputError("edge index out of range");
    if (i + 1 < edges.size() && g.edge(edges[i]).src != g.edge(edges[i + 1]).rng) {
      throw InputError("edges " + g.edge(edges[i]).id + " and " + g.edge(edges[i + 1]).id +
                       " are not composable: s(" + g.edge(edges[i]).id + ") != r(" + g.edge(edges[i + 1]).id + ")");
    }
  }
  const VertexId r = g.edge(edges.front()).rng;
  const VertexId s = g.edge(edges.back()).src;
  return Path(r, s, std::move(edges));
}

Path Path::prefix(const Graph& g, std::size_t len) const {
  if (len > length()) throw InputError("prefix longer than path");
  if (len == length()) return *this;
  if (len == 0) return vertex(range_);
  return from_edges(g, std::vector<EdgeId>(edges_.begin(), edges_.begin() + static_cast<std::ptrdiff_t>(len)));
}

Path Path::drop_front(const Graph& g, std::size_t count) const {
  if (count > length()) throw InputError("cannot drop more edges than the path has");
  if (count == 0) return *this;
  if (count == length()) return vertex(source_);
  return from_edges(g, std::vector<EdgeId>(edges_.begin() + static_cast<std::ptrdiff_t>(count), edges_.end()));
}

bool Path::has_prefix(const Path& p) const {
  if (p.is_vertex()) return p.range_ == range_;
  if (p.length() > length()) return false;
  return std::equal(p.edges_.begin(), p.edges_.end(), edges_.begin());
}

std::strong_ordering operator<=>(const Path& a, const Path& b) {
  if (auto c = a.length() <=> b.length(); c != 0) return c;
  if (auto c = a.edges_ <=> b.edges_; c != 0) return c;
  return a.range_ <=> b.range_;
}

std::vector<Path> enumerate_paths(const Graph& g, std::size_t k) {
  if (g.has_bundles()) throw InputError("not enumerable: graph has infinite bundles");
  std::vector<Path> paths;
  if (k == 0) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) paths.push_back(Path::vertex(v));
    return paths;
  }
  // Extending a lexicographically sorted list at the source end, with
  // candidate edges in input order, keeps it sorted.
  std::vector<std::vector<EdgeId>> words;
  for (EdgeId e = 0; e < g.edge_count(); ++e) words.push_back({e});
  for (std::size_t len = 1; len < k; ++len) {
    std::vector<std::vector<EdgeId>> next;
    for (const auto& w : words) {
      for (EdgeId e : g.edges_into(g.edge(w.back()).src)) {
        next.push_back(w);
        next.back().push_back(e);
      }
    }
    words = std::move(next);
  }
  paths.reserve(words.size());
  for (auto& w : words) paths.push_back(Path::from_edges(g, std::move(w)));
  return paths;
}

Path concat(const Graph& g, const Path& prefix, const Path& suffix) {
  if (prefix.source() != suffix.range()) {
    throw InputError("cannot concatenate " + format_path(g, prefix) + " and " + format_path(g, suffix) + ": s = " +
                     g.vertex_name(prefix.source()) + " but r = " + g.vertex_name(suffix.range()));
  }
  if (prefix.is_vertex()) return suffix;
  if (suffix.is_vertex()) return prefix;
  auto edges = prefix.edges();
  edges.insert(edges.end(), suffix.edges().begin(), suffix.edges().end());
  return Path::from_edges(g, std::move(edges));
}

std::string format_path(const Graph& g, const Path& p) {
  if (p.is_vertex()) return "{" + g.vertex_name(p.range()) + "}";
  std::string out = "[";
  for (std::size_t i = 0; i < p.length(); ++i) {
    if (i) out += ",";
    out += g.edge(p.edges()[i]).id;
  }
  return out + "]";
}

}  // namespace gtrace
