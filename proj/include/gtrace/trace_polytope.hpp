#pragma once

// Invariant measures (graph traces) on a finite discrete graph.
//
// A graph trace is a probability vector μ on the vertices with
//   μ(v) =  Σ_{r(e)=v} μ(s(e))   at regular v,
//   μ(v) >= Σ_{r(e)=v} μ(s(e))   at singular v,
// and μ(s) = 0 whenever s emits an infinite bundle (k·μ(s) <= μ(r) for all k).
// The set T(E) of traces is a polytope; its extreme points parametrize the
// extreme gauge-invariant tracial states of C*(E).

#include <optional>
#include <string>
#include <vector>

#include "gtrace/graph.hpp"
#include "gtrace/kernels.hpp"
#include "gtrace/rational.hpp"

namespace gtrace {

/// Rational weights indexed by vertex (input order).
using VertexWeights = std::vector<Rational>;

/// A vertex weighting known to satisfy every trace constraint.
struct GraphTrace {
  VertexWeights values;
  friend bool operator==(const GraphTrace&, const GraphTrace&) = default;
};

struct LinearConstraint {
  VertexWeights coefficients;
  Rational rhs;
  std::string origin;  // e.g. "regular v", "bundle w -> v"
};

/// Equalities (= rhs), inequalities (>= rhs), the normalization row, and
/// implicit nonnegativity of every variable. Variables follow vertex order.
struct ConstraintSystem {
  std::vector<LinearConstraint> equalities;
  std::vector<LinearConstraint> inequalities;
  LinearConstraint normalization;
};

ConstraintSystem constraint_system(const Graph& g);

struct Violation {
  enum class Kind { Negative, TotalMass, RegularEquality, SingularInequality, BundleSource };
  Kind kind;
  std::optional<VertexId> vertex;
  Rational lhs;  // μ(v), or the total mass
  Rational rhs;  // Σ_{r(e)=v} μ(s(e)), or 1, or 0
};

std::string describe(const Graph& g, const Violation& v);

struct InvariantReport {
  bool is_trace = false;
  std::vector<Violation> violations;
  /// Σ_v μ(v)·#{e : s(e) = v}; empty when a bundle leaves a vertex of
  /// positive mass (the mass is infinite).
  std::optional<Rational> pushforward_mass;
};

/// Throws InputError when `candidate` does not have one value per vertex.
InvariantReport check_invariant(const Graph& g, const VertexWeights& candidate);

/// Returns the candidate as a GraphTrace or throws InputError listing the
/// first violation.
GraphTrace require_trace(const Graph& g, const VertexWeights& candidate);

/// All extreme points of T(E), sorted lexicographically by value vector.
/// Empty exactly when T(E) is empty.
std::vector<GraphTrace> extreme_traces(const Graph& g, Execution exec = Execution::Parallel);

struct TraceMinimum {
  bool empty = true;  // T(E) = ∅
  Rational value;
  GraphTrace argmin;  // an extreme point attaining the minimum
};

/// Exact minimum of Σ objective(v)·μ(v) over T(E), by the simplex method.
TraceMinimum minimize_over_traces(const Graph& g, const VertexWeights& objective);

struct GaugeCertificate {
  enum class Kind { NoCycleInSupport, ConditionK, Unknown };
  Kind kind;
  std::vector<VertexId> cycle_sources;
  std::optional<std::vector<VertexId>> support;  // empty for "all traces"
  std::optional<VertexId> failing_vertex;        // condition (K) obstruction
  std::optional<Path> failing_cycle;
  std::string note;
};

const char* to_string(GaugeCertificate::Kind kind);

/// Certificates that a trace (or, with no trace given, every trace) is gauge
/// invariant. Unknown means no certificate applies; it does not assert that a
/// non-gauge-invariant trace exists. Throws InputError if `trace` is given and
/// fails check_invariant.
std::vector<GaugeCertificate> certify_gauge_invariance(const Graph& g, const std::optional<VertexWeights>& trace);

}  // namespace gtrace
