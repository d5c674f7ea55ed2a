#include "oracles.hpp"

#include <algorithm>
#include <numeric>

namespace oracle {

using gtrace::EdgeId;
using gtrace::Path;

namespace {

void extend_words(const Graph& g, std::size_t k, std::vector<EdgeId>& word,
                  std::vector<std::vector<EdgeId>>& out) {
  if (word.size() == k) {
    bool ok = true;
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
      ok = ok && g.edge(word[i]).src == g.edge(word[i + 1]).rng;
    }
    if (ok) out.push_back(word);
    return;
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    word.push_back(e);
    extend_words(g, k, word, out);
    word.pop_back();
  }
}

bool singular(const Graph& g, VertexId v) {
  bool receives = false;
  for (const auto& e : g.edges()) receives = receives || e.rng == v;
  for (const auto& b : g.bundles()) {
    if (b.rng == v) return true;
  }
  return !receives;
}

// Rank and (when unique) the solution of A x = b, by plain Gauss-Jordan.
struct Solved {
  bool consistent = false;
  std::size_t rank = 0;
  std::vector<Rational> x;
};

Solved solve(std::vector<std::vector<Rational>> a, std::vector<Rational> b, std::size_t n) {
  Solved out;
  std::size_t row = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t col = 0; col < n && row < a.size(); ++col) {
    std::size_t p = row;
    while (p < a.size() && a[p][col] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[row]);
    std::swap(b[p], b[row]);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == row || a[i][col] == 0) continue;
      Rational f = a[i][col] / a[row][col];
      for (std::size_t j = 0; j < n; ++j) a[i][j] -= f * a[row][j];
      b[i] -= f * b[row];
    }
    pivot_col.push_back(col);
    ++row;
  }
  out.rank = row;
  out.consistent = true;
  for (std::size_t i = row; i < a.size(); ++i) out.consistent = out.consistent && b[i] == 0;
  if (out.consistent && out.rank == n) {
    out.x.assign(n, Rational(0));
    for (std::size_t i = 0; i < row; ++i) out.x[pivot_col[i]] = b[i] / a[i][pivot_col[i]];
  }
  return out;
}

void choose(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& picked,
            const std::function<void(const std::vector<std::size_t>&)>& visit) {
  if (picked.size() == k) {
    visit(picked);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    picked.push_back(i);
    choose(n, k, i + 1, picked, visit);
    picked.pop_back();
  }
}

Integer det(const std::vector<std::vector<Integer>>& m) {
  if (m.size() == 1) return m[0][0];
  Integer total = 0;
  for (std::size_t j = 0; j < m.size(); ++j) {
    std::vector<std::vector<Integer>> sub;
    for (std::size_t i = 1; i < m.size(); ++i) {
      std::vector<Integer> r;
      for (std::size_t c = 0; c < m.size(); ++c) {
        if (c != j) r.push_back(m[i][c]);
      }
      sub.push_back(r);
    }
    Integer term = m[0][j] * det(sub);
    total += (j % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

}  // namespace

std::vector<std::vector<EdgeId>> composable_words(const Graph& g, std::size_t k) {
  std::vector<std::vector<EdgeId>> out;
  std::vector<EdgeId> word;
  extend_words(g, k, word, out);
  return out;
}

std::vector<Path> boundary_level(const Graph& g, std::size_t n) {
  std::vector<Path> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (n == 0 || singular(g, v)) out.push_back(Path::vertex(v));
  }
  for (std::size_t k = 1; k <= n; ++k) {
    for (const auto& w : composable_words(g, k)) {
      if (k == n || singular(g, g.edge(w.back()).src)) out.push_back(Path::from_edges(g, w));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Rational boundary_mass(const Graph& g, const std::vector<Rational>& mu, const Path& p, std::size_t n) {
  const VertexId s = p.source();
  if (p.length() == n) return mu[s];
  Rational incoming = 0;
  for (const auto& e : g.edges()) {
    if (e.rng == s) incoming += mu[e.src];
  }
  return mu[s] - incoming;
}

Count simple_cycles_at(const Graph& g, VertexId v, std::size_t max_length) {
  // can_reach[u]: some word with range u has source v, i.e. v reaches u
  // following edges from source to range.
  std::vector<bool> reaches_v(g.vertex_count(), false);
  reaches_v[v] = true;
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& e : g.edges()) {
      // extending a word whose source is e.rng by e moves the source to e.src
      if (reaches_v[e.src] && !reaches_v[e.rng]) {
        reaches_v[e.rng] = true;
        changed = true;
      }
    }
  }
  int found = 0;
  std::vector<EdgeId> word;
  std::function<void(VertexId)> dfs = [&](VertexId end) {
    if (found >= 2 || word.size() == max_length) return;
    for (EdgeId e = 0; e < g.edge_count() && found < 2; ++e) {
      if (g.edge(e).rng != end || !reaches_v[g.edge(e).src]) continue;
      word.push_back(e);
      if (g.edge(e).src == v && std::find(word.begin(), word.end() - 1, e) == word.end() - 1) ++found;
      dfs(g.edge(e).src);
      word.pop_back();
    }
  };
  dfs(v);
  return found == 0 ? Count::Zero : found == 1 ? Count::One : Count::TwoOrMore;
}

bool condition_k(const Graph& g) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (simple_cycles_at(g, v, 2 * g.vertex_count() + 1) == Count::One) return false;
  }
  return true;
}

std::vector<VertexId> cycle_sources(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<bool>> step(n, std::vector<bool>(n, false));
  for (const auto& e : g.edges()) step[e.src][e.rng] = true;
  for (const auto& b : g.bundles()) step[b.src][b.rng] = true;
  std::vector<std::vector<bool>> walk = step;
  std::vector<VertexId> out;
  std::vector<bool> on_cycle(n, false);
  for (std::size_t len = 1; len <= n; ++len) {
    for (std::size_t v = 0; v < n; ++v) on_cycle[v] = on_cycle[v] || walk[v][v];
    std::vector<std::vector<bool>> next(n, std::vector<bool>(n, false));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (walk[a][b])
          for (std::size_t c = 0; c < n; ++c) next[a][c] = next[a][c] || step[b][c];
    walk = next;
  }
  for (VertexId v = 0; v < n; ++v) {
    if (on_cycle[v]) out.push_back(v);
  }
  return out;
}

std::vector<std::vector<Rational>> basic_feasible_points(std::size_t n, const std::vector<std::vector<Rational>>& equalities,
                                                         const std::vector<std::vector<Rational>>& inequalities) {
  std::vector<std::vector<Rational>> eq = equalities;
  std::vector<Rational> eq_rhs(eq.size(), Rational(0));
  eq.push_back(std::vector<Rational>(n, Rational(1)));
  eq_rhs.push_back(1);
  std::vector<std::vector<Rational>> ineq = inequalities;  // row . x >= 0
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<Rational> row(n, Rational(0));
    row[v] = 1;
    ineq.push_back(row);
  }

  std::vector<std::vector<Rational>> out;
  const Solved base = solve(eq, eq_rhs, n);
  if (!base.consistent) return out;
  const std::size_t missing = n - base.rank;
  std::vector<std::size_t> picked;
  choose(ineq.size(), missing, 0, picked, [&](const std::vector<std::size_t>& tight) {
    auto a = eq;
    auto b = eq_rhs;
    for (std::size_t i : tight) {
      a.push_back(ineq[i]);
      b.push_back(0);
    }
    const Solved s = solve(a, b, n);
    if (!s.consistent || s.rank != n) return;
    for (const auto& row : ineq) {
      Rational lhs = 0;
      for (std::size_t j = 0; j < n; ++j) lhs += row[j] * s.x[j];
      if (lhs < 0) return;
    }
    out.push_back(s.x);
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::vector<Rational>> basic_feasible_traces(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<Rational>> eq;
  std::vector<std::vector<Rational>> ineq;
  for (VertexId v = 0; v < n; ++v) {
    std::vector<Rational> row(n, Rational(0));
    row[v] += 1;
    bool receives = false;
    for (const auto& e : g.edges()) {
      if (e.rng == v) {
        row[e.src] -= 1;
        receives = true;
      }
    }
    if (!singular(g, v)) {
      eq.push_back(row);
    } else if (receives) {
      ineq.push_back(row);
    }
  }
  for (const auto& b : g.bundles()) {
    std::vector<Rational> row(n, Rational(0));
    row[b.src] = 1;
    eq.push_back(row);
  }
  return basic_feasible_points(n, eq, ineq);
}

Integer minor_gcd(const gtrace::IntegerMatrix& m, std::size_t k) {
  Integer g = 0;
  if (k > m.rows() || k > m.cols()) return g;
  std::vector<std::size_t> rows;
  choose(m.rows(), k, 0, rows, [&](const std::vector<std::size_t>& rs) {
    std::vector<std::size_t> cols;
    choose(m.cols(), k, 0, cols, [&](const std::vector<std::size_t>& cs) {
      std::vector<std::vector<Integer>> sub;
      for (auto r : rs) {
        std::vector<Integer> row;
        for (auto c : cs) row.push_back(m(r, c));
        sub.push_back(row);
      }
      Integer d = det(sub);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    });
  });
  return g;
}

void for_each_small_graph(std::size_t max_vertices, std::size_t max_edges, const std::function<void(const Graph&)>& visit) {
  for (std::size_t nv = 1; nv <= max_vertices; ++nv) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < nv; ++i) names.push_back("v" + std::to_string(i));
    const std::size_t pairs = nv * nv;
    std::vector<std::size_t> choice;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
      std::vector<Graph::EdgeSpec> edges;
      for (std::size_t i = 0; i < choice.size(); ++i) {
        edges.push_back({"e" + std::to_string(i), names[choice[i] / nv], names[choice[i] % nv]});
      }
      visit(Graph(names, edges));
      if (choice.size() == max_edges) return;
      for (std::size_t p = start; p < pairs; ++p) {
        choice.push_back(p);
        rec(p);
        choice.pop_back();
      }
    };
    rec(0);
  }
}

Graph random_graph(std::mt19937_64& rng, std::size_t max_vertices, std::size_t max_edges, std::size_t max_bundles) {
  const std::size_t nv = std::uniform_int_distribution<std::size_t>(1, max_vertices)(rng);
  const std::size_t ne = std::uniform_int_distribution<std::size_t>(0, max_edges)(rng);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nv; ++i) names.push_back("v" + std::to_string(i));
  std::uniform_int_distribution<std::size_t> pick(0, nv - 1);
  std::vector<Graph::EdgeSpec> edges;
  for (std::size_t i = 0; i < ne; ++i) edges.push_back({"e" + std::to_string(i), names[pick(rng)], names[pick(rng)]});
  std::vector<Graph::BundleSpec> bundles;
  const std::size_t nb = std::uniform_int_distribution<std::size_t>(0, max_bundles)(rng);
  for (std::size_t i = 0; i < nb; ++i) {
    Graph::BundleSpec b{names[pick(rng)], names[pick(rng)]};
    const bool seen = std::any_of(bundles.begin(), bundles.end(),
                                  [&](const Graph::BundleSpec& o) { return o.src == b.src && o.rng == b.rng; });
    if (!seen) bundles.push_back(b);
  }
  return Graph(names, edges, bundles);
}

std::vector<Path> path_pool(const Graph& g, std::size_t max_length) {
  std::vector<Path> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) out.push_back(Path::vertex(v));
  for (std::size_t k = 1; k <= max_length; ++k) {
    for (const auto& w : composable_words(g, k)) out.push_back(Path::from_edges(g, w));
  }
  return out;
}

gtrace::GaussianRational random_coefficient(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  Rational re(num(rng), den(rng));
  Rational im(num(rng), den(rng));
  re.canonicalize();
  im.canonicalize();
  return {re, im};
}

gtrace::FormalElement random_element(std::mt19937_64& rng, const std::shared_ptr<const Graph>& g,
                                     const std::vector<Path>& pool, std::size_t max_terms) {
  gtrace::FormalElement x(g);
  const std::size_t terms = std::uniform_int_distribution<std::size_t>(1, max_terms)(rng);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (std::size_t t = 0; t < terms; ++t) {
    const Path& a = pool[pick(rng)];
    std::vector<const Path*> partners;
    for (const auto& p : pool) {
      if (p.source() == a.source()) partners.push_back(&p);
    }
    const Path& b = *partners[std::uniform_int_distribution<std::size_t>(0, partners.size() - 1)(rng)];
    x.add_term(a, b, random_coefficient(rng));
  }
  return x;
}

gtrace::IntegerMatrix random_matrix(std::mt19937_64& rng, std::size_t max_dim, long bound) {
  std::uniform_int_distribution<std::size_t> dim(1, max_dim);
  const std::size_t r = dim(rng), c = dim(rng);
  gtrace::IntegerMatrix m(r, c);
  std::uniform_int_distribution<long> entry(-bound, bound);
  const int style = std::uniform_int_distribution<int>(0, 2)(rng);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      if (style == 1 && entry(rng) % 2 == 0) continue;  // sparse
      m(i, j) = entry(rng);
    }
  if (style == 2 && r > 1) {
    // dependent last row, entries stay within the bound
    const long k = std::uniform_int_distribution<int>(0, 1)(rng) == 0 ? -1 : 1;
    for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * k;
  }
  return m;
}

}  // namespace oracle
