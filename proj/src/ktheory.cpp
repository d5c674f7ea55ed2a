#include "gtrace/ktheory.hpp"

#include <optional>
#include <stdexcept>

#include "gtrace/errors.hpp"

namespace gtrace {

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  IntegerMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw InputError("ragged integer matrix");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntegerMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntegerMatrix::add_row(std::size_t dst, std::size_t src, const Integer& k) {
  if (k == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += k * (*this)(src, j);
}

void IntegerMatrix::add_col(std::size_t dst, std::size_t src, const Integer& k) {
  if (k == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += k * (*this)(i, src);
}

void IntegerMatrix::negate_row(std::size_t r) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols() != b.rows()) throw InputError("matrix dimension mismatch");
  IntegerMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  }
  return c;
}

Integer determinant(const IntegerMatrix& input) {
  if (input.rows() != input.cols()) throw InputError("determinant of a non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntegerMatrix m = input;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = t;
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

PvMatrix pv_matrix(const Graph& g) {
  PvMatrix pv;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    pv.rows.push_back(v);
    if (g.is_regular(v)) pv.cols.push_back(v);
  }
  pv.entries = IntegerMatrix(pv.rows.size(), pv.cols.size());
  for (std::size_t j = 0; j < pv.cols.size(); ++j) {
    const VertexId v = pv.cols[j];
    pv.entries(v, j) += 1;
    for (EdgeId e : g.edges_into(v)) pv.entries(g.edge(e).src, j) -= 1;
  }
  return pv;
}

SmithDecomposition smith_normal_form(const IntegerMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  IntegerMatrix a = m;
  IntegerMatrix u = IntegerMatrix::identity(rows);
  IntegerMatrix v = IntegerMatrix::identity(cols);
  std::size_t t = 0;
  for (; t < std::min(rows, cols); ++t) {
    bool block_is_zero = false;
    for (;;) {
      std::optional<std::pair<std::size_t, std::size_t>> pivot;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (a(i, j) != 0 && (!pivot || abs(a(i, j)) < abs(a(pivot->first, pivot->second)))) pivot = {{i, j}};
        }
      }
      if (!pivot) {
        block_is_zero = true;
        break;
      }
      a.swap_rows(t, pivot->first);
      u.swap_rows(t, pivot->first);
      a.swap_cols(t, pivot->second);
      v.swap_cols(t, pivot->second);

      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        const Integer q = a(i, t) / a(t, t);  // truncating
        a.add_row(i, t, -q);
        u.add_row(i, t, -q);
        dirty = dirty || a(i, t) != 0;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        const Integer q = a(t, j) / a(t, t);
        a.add_col(j, t, -q);
        v.add_col(j, t, -q);
        dirty = dirty || a(t, j) != 0;
      }
      if (dirty) continue;

      std::optional<std::size_t> offender;
      for (std::size_t i = t + 1; i < rows && !offender; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a(i, j) % a(t, t) != 0) {
            offender = i;
            break;
          }
        }
      }
      if (!offender) break;
      a.add_row(t, *offender, 1);
      u.add_row(t, *offender, 1);
    }
    if (block_is_zero) break;
    if (a(t, t) < 0) {
      a.negate_row(t);
      u.negate_row(t);
    }
  }

  SmithDecomposition out;
  out.rank = t;
  for (std::size_t i = 0; i < t; ++i) out.invariant_factors.push_back(a(i, i));
  for (std::size_t i = t; i < rows; ++i) {
    for (std::size_t j = 0; j < rows; ++j) {
      if (u(i, j) == 0) continue;
      if (u(i, j) < 0) u.negate_row(i);
      break;
    }
  }
  out.u = std::move(u);
  out.v = std::move(v);
  out.d = std::move(a);
  return out;
}

K0Class k0_class(const KGroups& k, const std::vector<Integer>& a) {
  const auto& u = k.snf.u;
  if (a.size() != u.cols()) throw InputError("class vector must have one entry per vertex");
  K0Class c;
  for (std::size_t i = 0; i < u.rows(); ++i) {
    Integer y = 0;
    for (std::size_t j = 0; j < u.cols(); ++j) y += u(i, j) * a[j];
    if (i >= k.snf.rank) {
      c.free.push_back(y);
    } else if (const Integer& d = k.snf.invariant_factors[i]; d > 1) {
      Integer r;
      mpz_fdiv_r(r.get_mpz_t(), y.get_mpz_t(), d.get_mpz_t());
      c.torsion.push_back(r);
    }
  }
  return c;
}

KGroups k_groups(const Graph& g) {
  KGroups k;
  k.matrix = pv_matrix(g);
  k.snf = smith_normal_form(k.matrix.entries);
  const std::size_t n = g.vertex_count();
  k.k0.free_rank = n - k.snf.rank;
  for (const auto& d : k.snf.invariant_factors) {
    if (d > 1) k.k0.torsion.push_back(d);
  }
  for (VertexId v = 0; v < n; ++v) {
    std::vector<Integer> delta(n, Integer(0));
    delta[v] = 1;
    k.k0.generator_classes.push_back(k0_class(k, delta));
  }
  k.k0.order_unit = k0_class(k, std::vector<Integer>(n, Integer(1)));
  const std::size_t cols = k.matrix.cols.size();
  k.k1_rank = cols - k.snf.rank;
  for (std::size_t j = k.snf.rank; j < cols; ++j) {
    std::vector<Integer> basis(cols);
    for (std::size_t i = 0; i < cols; ++i) basis[i] = k.snf.v(i, j);
    k.k1_basis.push_back(std::move(basis));
  }
  return k;
}

K0State state_from_trace(const Graph& g, const GraphTrace& mu) {
  require_trace(g, mu.values);
  const auto pv = pv_matrix(g);
  for (std::size_t j = 0; j < pv.cols.size(); ++j) {
    Rational pairing = 0;
    for (std::size_t i = 0; i < pv.rows.size(); ++i) pairing += mu.values[i] * Rational(pv.entries(i, j));
    if (sgn(pairing) != 0) {
      throw std::logic_error("trace does not annihilate column " + g.vertex_name(pv.cols[j]) + " of the PV matrix");
    }
  }
  K0State state{mu.values, Rational(0)};
  for (const auto& x : mu.values) state.order_unit_value += x;
  if (state.order_unit_value != 1) throw std::logic_error("state does not take the value 1 on the order unit");
  return state;
}

const char* to_string(PositivityVerdict::Kind kind) {
  switch (kind) {
    case PositivityVerdict::Kind::EmptyTraceSpace:
      return "EmptyTraceSpace";
    case PositivityVerdict::Kind::Nonnegative:
      return "Nonnegative";
    case PositivityVerdict::Kind::NegativeWitness:
      return "NegativeWitness";
  }
  return "";
}

PositivityVerdict eventually_positive(const Graph& g, const std::vector<Integer>& a) {
  if (a.size() != g.vertex_count()) throw InputError("vector must assign an integer to every vertex");
  VertexWeights objective(a.begin(), a.end());
  const auto min = minimize_over_traces(g, objective);
  PositivityVerdict verdict;
  if (min.empty) return verdict;
  verdict.minimum = min.value;
  verdict.kind = sgn(min.value) >= 0 ? PositivityVerdict::Kind::Nonnegative : PositivityVerdict::Kind::NegativeWitness;
  verdict.trace = min.argmin;
  return verdict;
}

}  // namespace gtrace
