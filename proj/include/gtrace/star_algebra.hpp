#pragma once

// Formal calculus on the spanning set { s_α s_β* : s(α) = s(β) } of C*(E).
//
// Products use only the Toeplitz relations for indicator functions:
//   s_β* s_γ = s_γ''   if γ = β γ'',
//            = s_β''*  if β = γ β'',
//            = 0       otherwise,
// where a vertex v counts as a prefix of γ iff r(γ) = v. The covariance
// relation p_v = Σ_{r(e)=v} s_e s_e* is never used for rewriting, so equality
// of elements is syntactic and covariance_defect(v) is a nonzero element.

#include <map>
#include <memory>
#include <utility>

#include "gtrace/graph.hpp"
#include "gtrace/rational.hpp"
#include "gtrace/trace_polytope.hpp"

namespace gtrace {

class FormalElement {
 public:
  using Key = std::pair<Path, Path>;  // (α, β) for s_α s_β*
  using Terms = std::map<Key, GaussianRational>;

  explicit FormalElement(std::shared_ptr<const Graph> graph);

  /// coeff · s_α s_β*; throws InputError unless s(α) = s(β).
  static FormalElement term(std::shared_ptr<const Graph> graph, Path alpha, Path beta,
                            GaussianRational coeff = GaussianRational(1));
  /// p_v
  static FormalElement projection(std::shared_ptr<const Graph> graph, VertexId v);
  /// s_e = s_e p_{s(e)}*
  static FormalElement edge(std::shared_ptr<const Graph> graph, EdgeId e);

  void add_term(Path alpha, Path beta, const GaussianRational& coeff);

  const Graph& graph() const { return *graph_; }
  const std::shared_ptr<const Graph>& graph_ptr() const { return graph_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  FormalElement& operator+=(const FormalElement& other);
  FormalElement& operator-=(const FormalElement& other);
  friend FormalElement operator+(FormalElement a, const FormalElement& b) { return a += b; }
  friend FormalElement operator-(FormalElement a, const FormalElement& b) { return a -= b; }
  friend FormalElement operator*(const GaussianRational& c, const FormalElement& x);
  friend FormalElement operator*(const FormalElement& x, const FormalElement& y);

  /// Syntactic equality over equal graphs.
  friend bool operator==(const FormalElement& a, const FormalElement& b);

 private:
  void require_same_graph(const FormalElement& other) const;

  std::shared_ptr<const Graph> graph_;
  Terms terms_;
};

FormalElement multiply(const FormalElement& x, const FormalElement& y);

/// (c s_α s_β*)* = conj(c) s_β s_α*
FormalElement adjoint(const FormalElement& x);

/// Terms of gauge degree |α| - |β| = n.
FormalElement degree_component(const FormalElement& x, long n);

/// Σ over diagonal terms (α = β) of coeff · μ(s(α)). For a graph trace μ this
/// is the gauge-invariant tracial state it induces.
GaussianRational trace_eval(const VertexWeights& mu, const FormalElement& x);

/// p_v - Σ_{r(e)=v} s_e s_e*, which vanishes in C*(E). Throws InputError for
/// singular v.
FormalElement covariance_defect(std::shared_ptr<const Graph> graph, VertexId v);

std::string format_element(const FormalElement& x);

}  // namespace gtrace
