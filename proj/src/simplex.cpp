#include "gtrace/simplex.hpp"

#include <optional>

#include "gtrace/errors.hpp"

namespace gtrace {

namespace {

class Tableau {
 public:
  Tableau(std::vector<std::vector<Rational>> body, std::vector<std::size_t> basis)
      : t_(std::move(body)), basis_(std::move(basis)) {}

  std::size_t rows() const { return t_.size(); }
  std::size_t columns() const { return t_.empty() ? 0 : t_.front().size() - 1; }
  const Rational& rhs(std::size_t i) const { return t_[i].back(); }
  const Rational& at(std::size_t i, std::size_t j) const { return t_[i][j]; }
  std::size_t basic(std::size_t i) const { return basis_[i]; }

  void pivot(std::size_t r, std::size_t c) {
    const Rational p = t_[r][c];
    for (auto& v : t_[r]) v /= p;
    for (std::size_t i = 0; i < t_.size(); ++i) {
      if (i == r || sgn(t_[i][c]) == 0) continue;
      const Rational f = t_[i][c];
      for (std::size_t j = 0; j < t_[i].size(); ++j) {
        if (sgn(t_[r][j]) != 0) t_[i][j] -= f * t_[r][j];
      }
    }
    basis_[r] = c;
  }

  void drop_row(std::size_t r) {
    t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

  Rational objective(const std::vector<Rational>& cost) const {
    Rational z = 0;
    for (std::size_t i = 0; i < rows(); ++i) z += cost[basis_[i]] * rhs(i);
    return z;
  }

  /// Runs Bland's rule over columns [0, allowed). Returns false if unbounded.
  bool optimize(const std::vector<Rational>& cost, std::size_t allowed) {
    for (;;) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < allowed && !entering; ++j) {
        Rational reduced = cost[j];
        for (std::size_t i = 0; i < rows(); ++i) {
          if (sgn(t_[i][j]) != 0) reduced -= cost[basis_[i]] * t_[i][j];
        }
        if (sgn(reduced) < 0) entering = j;
      }
      if (!entering) return true;
      std::optional<std::size_t> leaving;
      Rational best;
      for (std::size_t i = 0; i < rows(); ++i) {
        if (sgn(t_[i][*entering]) <= 0) continue;
        const Rational ratio = rhs(i) / t_[i][*entering];
        if (!leaving || ratio < best || (ratio == best && basis_[i] < basis_[*leaving])) {
          leaving = i;
          best = ratio;
        }
      }
      if (!leaving) return false;
      pivot(*leaving, *entering);
    }
  }

 private:
  std::vector<std::vector<Rational>> t_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LpSolution solve_lp(const LinearProgram& lp) {
  const std::size_t n = lp.cost.size();
  const std::size_t m = lp.rows.size();
  if (lp.rhs.size() != m) throw InputError("linear program: rhs size mismatch");
  for (const auto& row : lp.rows) {
    if (row.size() != n) throw InputError("linear program: row size mismatch");
  }

  // Columns: n structural, m artificial, then the right-hand side.
  std::vector<std::vector<Rational>> body(m, std::vector<Rational>(n + m + 1, Rational(0)));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = sgn(lp.rhs[i]) < 0;
    for (std::size_t j = 0; j < n; ++j) body[i][j] = flip ? Rational(-lp.rows[i][j]) : lp.rows[i][j];
    body[i][n + i] = 1;
    body[i][n + m] = flip ? Rational(-lp.rhs[i]) : lp.rhs[i];
    basis[i] = n + i;
  }
  Tableau tab(std::move(body), std::move(basis));

  std::vector<Rational> phase1(n + m, Rational(0));
  for (std::size_t i = 0; i < m; ++i) phase1[n + i] = 1;
  tab.optimize(phase1, n + m);
  LpSolution out;
  if (sgn(tab.objective(phase1)) != 0) return out;

  // Drive zero-valued artificials out of the basis; rows where that is
  // impossible are redundant.
  for (std::size_t i = tab.rows(); i-- > 0;) {
    if (tab.basic(i) < n) continue;
    std::optional<std::size_t> col;
    for (std::size_t j = 0; j < n && !col; ++j) {
      if (sgn(tab.at(i, j)) != 0) col = j;
    }
    if (col) {
      tab.pivot(i, *col);
    } else {
      tab.drop_row(i);
    }
  }

  std::vector<Rational> phase2(n + m, Rational(0));
  for (std::size_t j = 0; j < n; ++j) phase2[j] = lp.cost[j];
  if (!tab.optimize(phase2, n)) {
    out.status = LpSolution::Status::Unbounded;
    return out;
  }
  out.status = LpSolution::Status::Optimal;
  out.x.assign(n, Rational(0));
  for (std::size_t i = 0; i < tab.rows(); ++i) out.x[tab.basic(i)] = tab.rhs(i);
  out.value = 0;
  for (std::size_t j = 0; j < n; ++j) out.value += lp.cost[j] * out.x[j];
  return out;
}

}  // namespace gtrace
