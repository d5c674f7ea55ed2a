#pragma once

// Cycles, simple cycles and condition (K).
//
// A cycle is a path α with |α| >= 1 and s(α) = r(α); it is simple when its
// last edge does not occur earlier in it. Counting simple cycles with source
// v reduces to counting first-return cycles at v (cycles whose intermediate
// edge sources avoid v): every first-return cycle is simple, and when there is
// exactly one first-return cycle c, every cycle at v is a power c^k, which is
// not simple for k >= 2. First-return cycles at v are in turn governed by the
// strongly connected component of v: none if the component has no edges, one
// if the component is a lone directed cycle, and at least two otherwise.

#include <optional>
#include <vector>

#include "gtrace/graph.hpp"

namespace gtrace {

/// Vertices that are the source of some cycle. Infinite bundles count as one
/// representative edge.
std::vector<VertexId> cycle_sources(const Graph& g);

/// Component index per vertex (strongly connected components of the graph
/// with an arc s(e) -> r(e) per edge, bundles included when asked).
std::vector<std::size_t> strong_components(const Graph& g, bool include_bundles);

enum class CycleCount { Zero, One, TwoOrMore };

struct SimpleCycleReport {
  CycleCount count = CycleCount::Zero;
  /// Zero, one or two simple cycles with source v, each of length at most
  /// 2 * #vertices + 1 (and at most the requested cap).
  std::vector<Path> witnesses;
};

/// Throws InputError for graphs with infinite bundles.
SimpleCycleReport simple_cycles_at(const Graph& g, VertexId v, std::optional<std::size_t> cap = std::nullopt);

struct ConditionKVerdict {
  bool satisfied = true;
  std::optional<VertexId> failing_vertex;
  /// The unique simple cycle at the failing vertex.
  std::optional<Path> witness;
};

/// Throws InputError for graphs with infinite bundles.
ConditionKVerdict condition_k(const Graph& g);

}  // namespace gtrace
