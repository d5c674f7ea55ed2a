#pragma once

// Data-parallel kernels. Each has a plain serial reference path, selected
// with Execution::Serial, that the tests compare against the OpenMP path.
// Both paths produce identical output in identical order.

#include <vector>

#include "gtrace/graph.hpp"
#include "gtrace/rational.hpp"

namespace gtrace {

enum class Execution { Serial, Parallel };

using RationalRow = std::vector<Rational>;

/// Extreme points of { x in Q^dim : x >= 0, E x = 0, G x >= 0, sum(x) = 1 },
/// by double description on the homogeneous cone, starting from the
/// nonnegative orthant. Points come back sorted lexicographically.
std::vector<RationalRow> orthant_section_vertices(std::size_t dim, const std::vector<RationalRow>& equalities,
                                                  const std::vector<RationalRow>& inequalities,
                                                  Execution exec = Execution::Parallel);

/// One step of the boundary measure recursion. `previous` must be sorted (as
/// boundary levels are). Paths of positive length receive the mass of their
/// backwards shift in the previous level; a vertex v receives
/// weights(v) - sum_{r(e)=v} weights(s(e)).
std::vector<Rational> propagate_boundary_masses(const Graph& g, const std::vector<Path>& next,
                                                const std::vector<Path>& previous,
                                                const std::vector<Rational>& previous_mass,
                                                const std::vector<Rational>& weights,
                                                Execution exec = Execution::Parallel);

}  // namespace gtrace
