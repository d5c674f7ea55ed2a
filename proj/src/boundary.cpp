#include "gtrace/boundary.hpp"

#include <algorithm>
#include <map>

#include "gtrace/errors.hpp"

namespace gtrace {

namespace {

void require_finite(const Graph& g) {
  if (g.has_bundles()) throw InputError("boundary levels are not enumerable for graphs with infinite bundles");
}

void charge(std::size_t& used, std::size_t extra, std::optional<std::size_t> budget) {
  used += extra;
  if (budget && used > *budget) {
    throw BudgetExceeded("boundary path budget of " + std::to_string(*budget) + " paths exceeded", *budget, used);
  }
}

/// ∂E_{n+1} from ∂E_n.
std::vector<Path> next_level(const Graph& g, const std::vector<Path>& level, std::size_t n, std::size_t& used,
                             std::optional<std::size_t> budget) {
  std::vector<Path> out;
  for (const auto& p : level) {
    if (p.length() < n || !g.is_regular(p.source())) {
      charge(used, 1, budget);
      out.push_back(p);
    }
    if (p.length() == n) {
      for (EdgeId e : g.edges_into(p.source())) {
        charge(used, 1, budget);
        out.push_back(concat(g, p, Path::single(g, e)));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t index_of(const BoundaryLevel& level, const Path& p) {
  auto it = std::lower_bound(level.paths.begin(), level.paths.end(), p);
  if (it == level.paths.end() || *it != p) throw std::logic_error("path missing from boundary level");
  return static_cast<std::size_t>(it - level.paths.begin());
}

std::string at_level(std::size_t m) { return " at level " + std::to_string(m); }

}  // namespace

std::vector<BoundaryLevel> boundary_levels(const Graph& g, std::size_t n, std::optional<std::size_t> budget) {
  require_finite(g);
  std::size_t used = 0;
  std::vector<BoundaryLevel> levels(1);
  for (VertexId v = 0; v < g.vertex_count(); ++v) levels[0].paths.push_back(Path::vertex(v));
  charge(used, levels[0].paths.size(), budget);
  for (std::size_t m = 0; m < n; ++m) {
    BoundaryLevel next;
    next.n = m + 1;
    next.paths = next_level(g, levels.back().paths, m, used, budget);
    levels.push_back(std::move(next));
  }
  return levels;
}

BoundaryLevel boundary_level(const Graph& g, std::size_t n, std::optional<std::size_t> budget) {
  auto levels = boundary_levels(g, n, budget);
  return std::move(levels.back());
}

bool in_boundary_level(const Graph& g, const Path& p, std::size_t n) {
  if (p.length() > n) return false;
  return p.length() == n || !g.is_regular(p.source());
}

Path truncate(const Graph& g, const Path& p, std::size_t n) {
  if (n == 0) throw InputError("truncation is defined from level 1 upward");
  if (!in_boundary_level(g, p, n)) {
    throw InputError(format_path(g, p) + " is not in boundary level " + std::to_string(n));
  }
  if (p.length() < n) return p;
  return p.prefix(g, n - 1);
}

Path shift(const Graph& g, const Path& p) {
  if (p.is_vertex()) throw InputError("the backwards shift is undefined on vertices");
  return p.drop_front(g, 1);
}

std::vector<BoundaryLevel> propagate_boundary_measure(const Graph& g, const VertexWeights& weights, std::size_t n,
                                                      Execution exec, std::optional<std::size_t> budget) {
  if (weights.size() != g.vertex_count()) throw InputError("weights must assign a value to every vertex");
  auto levels = boundary_levels(g, n, budget);
  levels[0].mass = weights;
  for (std::size_t m = 1; m <= n; ++m) {
    levels[m].mass = propagate_boundary_masses(g, levels[m].paths, levels[m - 1].paths, *levels[m - 1].mass, weights, exec);
  }
  return levels;
}

std::vector<BoundaryLevel> boundary_measure(const Graph& g, const GraphTrace& mu, std::size_t n, Execution exec,
                                            std::optional<std::size_t> budget) {
  require_trace(g, mu.values);
  // Singular vertices of a finite graph receive no edges, so the correction
  // term Σ_{r(e)=v} μ(s(e)) vanishes there.
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!g.is_regular(v) && !g.edges_into(v).empty()) throw std::logic_error("singular vertex receives a finite edge");
  }
  return propagate_boundary_measure(g, mu.values, n, exec, budget);
}

BoundaryReport verify_boundary_identities(const Graph& g, const VertexWeights& weights, std::size_t n,
                                          Execution exec) {
  return verify_boundary_identities(g, propagate_boundary_measure(g, weights, n, exec), weights);
}

BoundaryReport verify_boundary_identities(const Graph& g, const std::vector<BoundaryLevel>& levels,
                                          const VertexWeights& weights) {
  BoundaryReport report;
  auto fail = [](IdentityCheck& check, std::string why) {
    if (check.holds) {
      check.holds = false;
      check.witness = std::move(why);
    }
  };

  for (const auto& level : levels) {
    const std::size_t m = level.n;
    const auto& mass = level.mass.value();

    Rational total = 0;
    for (std::size_t i = 0; i < level.paths.size(); ++i) {
      total += mass[i];
      if (sgn(mass[i]) < 0) {
        fail(report.nonnegativity, "mass " + format_rational(mass[i]) + " of " + format_path(g, level.paths[i]) + at_level(m));
      }
    }
    if (total != 1) fail(report.unit_mass, "total mass " + format_rational(total) + at_level(m));

    // Range identity.
    VertexWeights by_range(g.vertex_count(), Rational(0));
    for (std::size_t i = 0; i < level.paths.size(); ++i) by_range[level.paths[i].range()] += mass[i];
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (by_range[v] != weights[v]) {
        fail(report.range_identity, "vertex " + g.vertex_name(v) + ": paths with range there carry " +
                                        format_rational(by_range[v]) + " but the weight is " +
                                        format_rational(weights[v]) + at_level(m));
      }
    }

    // Cylinder identity over every path α with 1 <= |α| <= m.
    std::map<Path, Rational> cylinder;
    for (std::size_t k = 1; k <= m; ++k) {
      for (auto& alpha : enumerate_paths(g, k)) cylinder.emplace(std::move(alpha), Rational(0));
    }
    for (std::size_t i = 0; i < level.paths.size(); ++i) {
      for (std::size_t k = 1; k <= level.paths[i].length(); ++k) cylinder[level.paths[i].prefix(g, k)] += mass[i];
    }
    for (const auto& [alpha, value] : cylinder) {
      if (value != weights[alpha.source()]) {
        fail(report.cylinder_identity, "cylinder of " + format_path(g, alpha) + " has mass " + format_rational(value) +
                                           " but the source weight is " + format_rational(weights[alpha.source()]) +
                                           at_level(m));
      }
    }

    // Shift identity.
    for (std::size_t i = 0; i < level.paths.size(); ++i) {
      const Path& beta = level.paths[i];
      for (std::size_t k = 1; k <= beta.length(); ++k) {
        const Path image = beta.drop_front(g, k);
        const auto& lower = levels[m - k];
        const Rational& expected = lower.mass.value()[index_of(lower, image)];
        if (mass[i] != expected) {
          fail(report.shift_identity, format_path(g, beta) + at_level(m) + " has mass " + format_rational(mass[i]) +
                                          " but its " + std::to_string(k) + "-fold shift has " +
                                          format_rational(expected));
        }
      }
    }

    // ρ-pushforward from this level to the previous one.
    if (m >= 1) {
      const auto& lower = levels[m - 1];
      std::vector<Rational> pushed(lower.paths.size(), Rational(0));
      for (std::size_t i = 0; i < level.paths.size(); ++i) {
        pushed[index_of(lower, truncate(g, level.paths[i], m))] += mass[i];
      }
      for (std::size_t j = 0; j < lower.paths.size(); ++j) {
        if (pushed[j] != lower.mass.value()[j]) {
          fail(report.rho_consistency, "preimage of " + format_path(g, lower.paths[j]) + " under truncation to level " +
                                           std::to_string(m - 1) + " carries " + format_rational(pushed[j]) +
                                           " instead of " + format_rational(lower.mass.value()[j]));
        }
      }
    }
  }
  return report;
}

}  // namespace gtrace
