#pragma once

// Finite-level boundary path spaces
//   ∂E_n = E^0_sng ∪ E^1 s(·)∈sng ∪ ... ∪ E^{n-1} s(·)∈sng ∪ E^n,
// i.e. paths of length exactly n together with shorter paths whose source is
// singular, with the truncation maps ρ_n : ∂E_n -> ∂E_{n-1}, the backwards
// shift σ, and the measures μ̃_n induced by a graph trace μ.

#include <optional>
#include <string>
#include <vector>

#include "gtrace/graph.hpp"
#include "gtrace/kernels.hpp"
#include "gtrace/trace_polytope.hpp"

namespace gtrace {

struct BoundaryLevel {
  std::size_t n = 0;
  std::vector<Path> paths;  // sorted
  std::optional<std::vector<Rational>> mass;  // aligned with paths
};

/// Paths of ∂E_n. Throws InputError for graphs with bundles and
/// BudgetExceeded if building levels 0..n would produce more than `budget`
/// paths in total.
BoundaryLevel boundary_level(const Graph& g, std::size_t n, std::optional<std::size_t> budget = std::nullopt);

/// Levels 0..n; `budget` bounds the total number of paths over all levels.
std::vector<BoundaryLevel> boundary_levels(const Graph& g, std::size_t n,
                                           std::optional<std::size_t> budget = std::nullopt);

bool in_boundary_level(const Graph& g, const Path& p, std::size_t n);

/// ρ_n: drops the last edge of a length-n path (ρ_1 of an edge e is the
/// vertex r(e)); the identity on shorter paths. Throws InputError if the path
/// is not in ∂E_n or n = 0.
Path truncate(const Graph& g, const Path& p, std::size_t n);

/// σ: drops the first edge; σ(e) = s(e). Throws InputError on vertices.
Path shift(const Graph& g, const Path& p);

/// μ̃_0..μ̃_n for a graph trace.
std::vector<BoundaryLevel> boundary_measure(const Graph& g, const GraphTrace& mu, std::size_t n,
                                            Execution exec = Execution::Parallel,
                                            std::optional<std::size_t> budget = std::nullopt);

/// Same recursion applied to an arbitrary weighting (used to show which
/// identities fail for non-invariant candidates).
std::vector<BoundaryLevel> propagate_boundary_measure(const Graph& g, const VertexWeights& weights, std::size_t n,
                                                      Execution exec = Execution::Parallel,
                                                      std::optional<std::size_t> budget = std::nullopt);

struct IdentityCheck {
  bool holds = true;
  std::string witness;  // first failure, empty when holds
};

struct BoundaryReport {
  IdentityCheck nonnegativity;
  IdentityCheck unit_mass;
  IdentityCheck rho_consistency;
  IdentityCheck range_identity;
  IdentityCheck cylinder_identity;
  IdentityCheck shift_identity;

  bool all_hold() const {
    return nonnegativity.holds && unit_mass.holds && rho_consistency.holds && range_identity.holds &&
           cylinder_identity.holds && shift_identity.holds;
  }
};

/// Checks, exactly and at every level m <= n: nonnegativity, unit mass,
/// Σ_{ρ(β)=β'} μ̃_{m+1}(β) = μ̃_m(β'), Σ_{r(β)=v} μ̃_m(β) = μ(v),
/// μ̃_m(Z(α)) = μ(s(α)) for 1 <= |α| <= m, and μ̃_m(β) = μ̃_{m-k}(σ^k β).
BoundaryReport verify_boundary_identities(const Graph& g, const VertexWeights& weights, std::size_t n,
                                          Execution exec = Execution::Parallel);

BoundaryReport verify_boundary_identities(const Graph& g, const std::vector<BoundaryLevel>& levels,
                                          const VertexWeights& weights);

}  // namespace gtrace
