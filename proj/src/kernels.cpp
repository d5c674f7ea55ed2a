#include "gtrace/kernels.hpp"

#include <algorithm>
#include <optional>

#include <boost/dynamic_bitset.hpp>

#include "gtrace/errors.hpp"

namespace gtrace {

namespace {

struct Ray {
  RationalRow x;
  boost::dynamic_bitset<> zeros;  // tight inequality constraints
};

Rational dot(const RationalRow& a, const RationalRow& x) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0) s += a[i] * x[i];
  }
  return s;
}

void normalize(RationalRow& x) {
  Rational total = 0;
  for (const auto& v : x) total += v;
  for (auto& v : x) v /= total;
}

/// Combinatorial adjacency: no third ray is tight on everything p and q share.
bool adjacent(const std::vector<Ray>& rays, std::size_t p, std::size_t q) {
  const auto common = rays[p].zeros & rays[q].zeros;
  for (std::size_t t = 0; t < rays.size(); ++t) {
    if (t != p && t != q && common.is_subset_of(rays[t].zeros)) return false;
  }
  return true;
}

Ray combine(const Ray& p, const Rational& ap, const Ray& q, const Rational& aq) {
  Ray r;
  r.x.resize(p.x.size());
  for (std::size_t i = 0; i < r.x.size(); ++i) r.x[i] = ap * q.x[i] - aq * p.x[i];
  normalize(r.x);
  r.zeros = p.zeros & q.zeros;
  return r;
}

std::vector<Ray> combine_pairs_serial(const std::vector<Ray>& rays, const std::vector<std::size_t>& pos,
                                      const std::vector<std::size_t>& neg, const std::vector<Rational>& value) {
  std::vector<Ray> out;
  for (std::size_t p : pos) {
    for (std::size_t q : neg) {
      if (adjacent(rays, p, q)) out.push_back(combine(rays[p], value[p], rays[q], value[q]));
    }
  }
  return out;
}

std::vector<Ray> combine_pairs_parallel(const std::vector<Ray>& rays, const std::vector<std::size_t>& pos,
                                        const std::vector<std::size_t>& neg, const std::vector<Rational>& value) {
  std::vector<std::vector<Ray>> buckets(pos.size());
  const auto count = static_cast<std::ptrdiff_t>(pos.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const std::size_t p = pos[static_cast<std::size_t>(i)];
    for (std::size_t q : neg) {
      if (adjacent(rays, p, q)) buckets[static_cast<std::size_t>(i)].push_back(combine(rays[p], value[p], rays[q], value[q]));
    }
  }
  std::vector<Ray> out;
  for (auto& b : buckets) {
    for (auto& r : b) out.push_back(std::move(r));
  }
  return out;
}

bool row_less(const RationalRow& a, const RationalRow& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](const Rational& x, const Rational& y) { return cmp(x, y) < 0; });
}

}  // namespace

std::vector<RationalRow> orthant_section_vertices(std::size_t dim, const std::vector<RationalRow>& equalities,
                                                  const std::vector<RationalRow>& inequalities, Execution exec) {
  for (const auto* rows : {&equalities, &inequalities}) {
    for (const auto& row : *rows) {
      if (row.size() != dim) throw InputError("constraint row has wrong dimension");
    }
  }
  const std::size_t constraints = dim + inequalities.size();
  std::vector<Ray> rays;
  for (std::size_t i = 0; i < dim; ++i) {
    Ray r{RationalRow(dim, Rational(0)), boost::dynamic_bitset<>(constraints)};
    r.x[i] = 1;
    for (std::size_t j = 0; j < dim; ++j) r.zeros[j] = (j != i);
    rays.push_back(std::move(r));
  }

  auto cut = [&](const RationalRow& row, std::optional<std::size_t> inequality_index) {
    std::vector<Rational> value(rays.size());
    std::vector<std::size_t> pos, neg;
    std::vector<Ray> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      value[i] = dot(row, rays[i].x);
      const int sign = sgn(value[i]);
      if (sign > 0) pos.push_back(i);
      if (sign < 0) neg.push_back(i);
    }
    auto combos = exec == Execution::Parallel ? combine_pairs_parallel(rays, pos, neg, value)
                                              : combine_pairs_serial(rays, pos, neg, value);
    for (std::size_t i = 0; i < rays.size(); ++i) {
      const int sign = sgn(value[i]);
      if (sign == 0 || (sign > 0 && inequality_index)) next.push_back(rays[i]);
    }
    for (auto& r : combos) next.push_back(std::move(r));
    if (inequality_index) {
      for (auto& r : next) r.zeros[*inequality_index] = sgn(dot(row, r.x)) == 0;
    }
    rays = std::move(next);
  };

  for (const auto& row : equalities) {
    if (rays.empty()) break;
    cut(row, std::nullopt);
  }
  for (std::size_t k = 0; k < inequalities.size(); ++k) {
    if (rays.empty()) break;
    cut(inequalities[k], dim + k);
  }

  std::vector<RationalRow> points;
  points.reserve(rays.size());
  for (auto& r : rays) points.push_back(std::move(r.x));
  std::sort(points.begin(), points.end(), row_less);
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

std::vector<Rational> propagate_boundary_masses(const Graph& g, const std::vector<Path>& next,
                                                const std::vector<Path>& previous,
                                                const std::vector<Rational>& previous_mass,
                                                const std::vector<Rational>& weights, Execution exec) {
  if (previous.size() != previous_mass.size() || weights.size() != g.vertex_count()) {
    throw InputError("boundary propagation: size mismatch");
  }
  std::vector<Rational> mass(next.size());
  auto one = [&](std::size_t i) {
    const Path& beta = next[i];
    if (beta.is_vertex()) {
      const VertexId v = beta.range();
      Rational m = weights[v];
      for (EdgeId e : g.edges_into(v)) m -= weights[g.edge(e).src];
      mass[i] = m;
      return;
    }
    const Path shifted = beta.drop_front(g, 1);
    auto it = std::lower_bound(previous.begin(), previous.end(), shifted);
    if (it == previous.end() || *it != shifted) {
      throw InputError("boundary propagation: shift of " + format_path(g, beta) + " missing from previous level");
    }
    mass[i] = previous_mass[static_cast<std::size_t>(it - previous.begin())];
  };
  if (exec == Execution::Serial) {
    for (std::size_t i = 0; i < next.size(); ++i) one(i);
    return mass;
  }
  const auto count = static_cast<std::ptrdiff_t>(next.size());
  bool failed = false;
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      one(static_cast<std::size_t>(i));
    } catch (const InputError&) {
#pragma omp atomic write
      failed = true;
    }
  }
  if (failed) {
    for (std::size_t i = 0; i < next.size(); ++i) one(i);  // rethrows with the first offender
  }
  return mass;
}

}  // namespace gtrace
