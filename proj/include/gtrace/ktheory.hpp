#pragma once

// K-theory of C*(E) from the exact sequence
//   0 -> K_1 -> Z^{E^0_reg} --(ι - ψ)--> Z^{E^0} -> K_0 -> 0,
// with ψ(f)(w) = Σ_{s(e)=w} f(r(e)). Kernel and cokernel are read off a Smith
// normal form U·M·V = D.

#include <optional>
#include <string>
#include <vector>

#include "gtrace/graph.hpp"
#include "gtrace/rational.hpp"
#include "gtrace/trace_polytope.hpp"

namespace gtrace {

class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}
  static IntegerMatrix identity(std::size_t n);
  static IntegerMatrix from_rows(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += k * row[src]
  void add_row(std::size_t dst, std::size_t src, const Integer& k);
  /// col[dst] += k * col[src]
  void add_col(std::size_t dst, std::size_t src, const Integer& k);
  void negate_row(std::size_t r);

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Determinant by fraction-free elimination; requires a square matrix.
Integer determinant(const IntegerMatrix& m);

/// ι - ψ with its row (all vertices) and column (regular vertices) labels.
struct PvMatrix {
  std::vector<VertexId> rows;
  std::vector<VertexId> cols;
  IntegerMatrix entries;
};

PvMatrix pv_matrix(const Graph& g);

struct SmithDecomposition {
  IntegerMatrix u;  // rows x rows, unimodular
  IntegerMatrix v;  // cols x cols, unimodular
  IntegerMatrix d;  // rows x cols, diagonal
  std::size_t rank = 0;
  /// d_1 | d_2 | ... | d_rank, all positive.
  std::vector<Integer> invariant_factors;
};

/// Pivot rule: smallest-magnitude nonzero entry of the remaining block, first
/// in row-major order; rows are cleared before columns. Rows of U beyond the
/// rank are sign-normalized (first nonzero entry positive).
SmithDecomposition smith_normal_form(const IntegerMatrix& m);

/// An element of coker: torsion coordinates (mod each d_i > 1) followed by
/// free coordinates.
struct K0Class {
  std::vector<Integer> torsion;
  std::vector<Integer> free;
  friend bool operator==(const K0Class&, const K0Class&) = default;
};

struct K0Group {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;               // invariant factors > 1
  std::vector<K0Class> generator_classes;     // [δ_v] per vertex
  K0Class order_unit;                         // Σ_v [δ_v]
};

struct KGroups {
  PvMatrix matrix;
  SmithDecomposition snf;
  K0Group k0;
  std::size_t k1_rank = 0;
  /// Basis of ker(ι - ψ), each vector indexed by the regular vertices.
  std::vector<std::vector<Integer>> k1_basis;
};

KGroups k_groups(const Graph& g);

/// Class of an integer vertex function in K_0 coordinates.
K0Class k0_class(const KGroups& k, const std::vector<Integer>& a);

struct K0State {
  VertexWeights values;  // state on [δ_v]
  Rational order_unit_value;
};

/// The state a graph trace induces on K_0. Throws InputError if μ is not a
/// trace; a nonzero pairing with a column of ι - ψ is a logic_error.
K0State state_from_trace(const Graph& g, const GraphTrace& mu);

struct PositivityVerdict {
  enum class Kind { EmptyTraceSpace, Nonnegative, NegativeWitness };
  Kind kind = Kind::EmptyTraceSpace;
  Rational minimum;
  std::optional<GraphTrace> trace;
  /// The minimality / compact vertex space hypotheses are left to the caller.
  bool hypotheses_checked = false;
};

const char* to_string(PositivityVerdict::Kind kind);

/// Minimum of ∫ a dμ over T(E); some multiple n·[a] is positive in K_0 exactly
/// when it is >= 0, provided the graph is minimal with compact vertex space.
PositivityVerdict eventually_positive(const Graph& g, const std::vector<Integer>& a);

}  // namespace gtrace
