#include "gtrace/cycles.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "gtrace/errors.hpp"

namespace gtrace {

namespace {

struct Arc {
  VertexId to;
  std::optional<EdgeId> edge;  // empty for bundle arcs
};

std::vector<std::vector<Arc>> arcs(const Graph& g, bool include_bundles) {
  std::vector<std::vector<Arc>> out(g.vertex_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) out[g.edge(e).src].push_back({g.edge(e).rng, e});
  if (include_bundles) {
    for (const auto& b : g.bundles()) out[b.src].push_back({b.rng, std::nullopt});
  }
  return out;
}

void require_finite(const Graph& g, const char* what) {
  if (g.has_bundles()) throw InputError(std::string(what) + " is not defined for graphs with infinite bundles");
}

/// Arcs leaving u that stay inside u's component.
std::vector<EdgeId> internal_out(const Graph& g, const std::vector<std::size_t>& comp, VertexId u) {
  std::vector<EdgeId> out;
  for (EdgeId e : g.edges_out_of(u)) {
    if (comp[g.edge(e).rng] == comp[u]) out.push_back(e);
  }
  return out;
}

/// Shortest walk (as edges in traversal order) from `from` to `to` inside
/// one component; empty when from == to.
std::vector<EdgeId> shortest_walk(const Graph& g, const std::vector<std::size_t>& comp, VertexId from, VertexId to) {
  constexpr auto none = std::numeric_limits<EdgeId>::max();
  std::vector<EdgeId> via(g.vertex_count(), none);
  std::vector<bool> seen(g.vertex_count(), false);
  std::deque<VertexId> queue{from};
  seen[from] = true;
  while (!queue.empty() && !seen[to]) {
    const VertexId u = queue.front();
    queue.pop_front();
    for (EdgeId e : internal_out(g, comp, u)) {
      const VertexId w = g.edge(e).rng;
      if (!seen[w]) {
        seen[w] = true;
        via[w] = e;
        queue.push_back(w);
      }
    }
  }
  std::vector<EdgeId> walk;
  for (VertexId u = to; u != from; u = g.edge(via[u]).src) walk.push_back(via[u]);
  std::reverse(walk.begin(), walk.end());
  return walk;
}

/// A closed walk traverses α_n first; reverse it into path order.
Path walk_to_path(const Graph& g, std::vector<EdgeId> walk) {
  std::reverse(walk.begin(), walk.end());
  return Path::from_edges(g, std::move(walk));
}

bool component_has_edges(const Graph& g, const std::vector<std::size_t>& comp, std::size_t c) {
  for (const auto& e : g.edges()) {
    if (comp[e.src] == c && comp[e.rng] == c) return true;
  }
  return false;
}

}  // namespace

std::vector<std::size_t> strong_components(const Graph& g, bool include_bundles) {
  // Iterative Tarjan.
  const auto adj = arcs(g, include_bundles);
  const std::size_t n = g.vertex_count();
  constexpr auto unset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> index(n, unset), low(n, 0), comp(n, unset);
  std::vector<bool> on_stack(n, false);
  std::vector<VertexId> stack;
  std::size_t counter = 0, next_comp = 0;
  for (VertexId root = 0; root < n; ++root) {
    if (index[root] != unset) continue;
    std::vector<std::pair<VertexId, std::size_t>> frames{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      auto& [u, pos] = frames.back();
      if (pos < adj[u].size()) {
        const VertexId w = adj[u][pos++].to;
        if (index[w] == unset) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[u] = std::min(low[u], index[w]);
        }
        continue;
      }
      if (low[u] == index[u]) {
        VertexId w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = next_comp;
        } while (w != u);
        ++next_comp;
      }
      const VertexId done = u;
      frames.pop_back();
      if (!frames.empty()) low[frames.back().first] = std::min(low[frames.back().first], low[done]);
    }
  }
  return comp;
}

std::vector<VertexId> cycle_sources(const Graph& g) {
  const auto comp = strong_components(g, true);
  std::vector<bool> cyclic(g.vertex_count(), false);
  for (const auto& e : g.edges()) {
    if (comp[e.src] == comp[e.rng]) cyclic[comp[e.src]] = true;
  }
  for (const auto& b : g.bundles()) {
    if (comp[b.src] == comp[b.rng]) cyclic[comp[b.src]] = true;
  }
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (cyclic[comp[v]]) out.push_back(v);
  }
  return out;
}

SimpleCycleReport simple_cycles_at(const Graph& g, VertexId v, std::optional<std::size_t> cap) {
  require_finite(g, "simple cycle counting");
  if (v >= g.vertex_count()) throw InputError("vertex index out of range");
  const std::size_t limit = cap.value_or(2 * g.vertex_count() + 1);
  const auto comp = strong_components(g, false);
  SimpleCycleReport report;
  if (!component_has_edges(g, comp, comp[v])) return report;

  std::optional<VertexId> branching;
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    if (comp[u] == comp[v] && internal_out(g, comp, u).size() >= 2) {
      branching = u;
      break;
    }
  }
  auto keep = [&](Path p) {
    if (p.length() <= limit) report.witnesses.push_back(std::move(p));
  };

  if (!branching) {
    // The component is a single directed cycle through v.
    report.count = CycleCount::One;
    std::vector<EdgeId> walk;
    VertexId u = v;
    do {
      const EdgeId e = internal_out(g, comp, u).front();
      walk.push_back(e);
      u = g.edge(e).rng;
    } while (u != v);
    keep(walk_to_path(g, std::move(walk)));
    return report;
  }

  // Go to the branching vertex, leave it along two different edges, and
  // return to v by shortest walks. Neither walk meets v in its interior.
  report.count = CycleCount::TwoOrMore;
  const auto approach = shortest_walk(g, comp, v, *branching);
  const auto exits = internal_out(g, comp, *branching);
  for (std::size_t i = 0; i < 2; ++i) {
    auto walk = approach;
    walk.push_back(exits[i]);
    const auto back = shortest_walk(g, comp, g.edge(exits[i]).rng, v);
    walk.insert(walk.end(), back.begin(), back.end());
    keep(walk_to_path(g, std::move(walk)));
  }
  return report;
}

ConditionKVerdict condition_k(const Graph& g) {
  require_finite(g, "condition (K)");
  const auto comp = strong_components(g, false);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!component_has_edges(g, comp, comp[v])) continue;
    bool lone_cycle = true;
    for (VertexId u = 0; u < g.vertex_count() && lone_cycle; ++u) {
      if (comp[u] == comp[v] && internal_out(g, comp, u).size() != 1) lone_cycle = false;
    }
    if (lone_cycle) {
      auto report = simple_cycles_at(g, v);
      return {false, v, report.witnesses.front()};
    }
  }
  return {};
}

}  // namespace gtrace
