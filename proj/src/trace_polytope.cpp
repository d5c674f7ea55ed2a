#include "gtrace/trace_polytope.hpp"

#include <algorithm>

#include "gtrace/cycles.hpp"
#include "gtrace/errors.hpp"
#include "gtrace/simplex.hpp"

namespace gtrace {

namespace {

LinearConstraint balance_row(const Graph& g, VertexId v, std::string origin) {
  LinearConstraint row{VertexWeights(g.vertex_count(), Rational(0)), Rational(0), std::move(origin)};
  row.coefficients[v] += 1;
  for (EdgeId e : g.edges_into(v)) row.coefficients[g.edge(e).src] -= 1;
  return row;
}

Rational incoming(const Graph& g, const VertexWeights& mu, VertexId v) {
  Rational s = 0;
  for (EdgeId e : g.edges_into(v)) s += mu[g.edge(e).src];
  return s;
}

}  // namespace

ConstraintSystem constraint_system(const Graph& g) {
  ConstraintSystem sys;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.is_regular(v)) {
      sys.equalities.push_back(balance_row(g, v, "regular " + g.vertex_name(v)));
    } else if (!g.edges_into(v).empty()) {
      sys.inequalities.push_back(balance_row(g, v, "singular " + g.vertex_name(v)));
    }
  }
  for (const auto& b : g.bundles()) {
    LinearConstraint row{VertexWeights(g.vertex_count(), Rational(0)), Rational(0),
                         "bundle " + g.vertex_name(b.src) + " -> " + g.vertex_name(b.rng)};
    row.coefficients[b.src] = 1;
    sys.equalities.push_back(std::move(row));
  }
  sys.normalization = {VertexWeights(g.vertex_count(), Rational(1)), Rational(1), "normalization"};
  return sys;
}

std::string describe(const Graph& g, const Violation& v) {
  const std::string at = v.vertex ? g.vertex_name(*v.vertex) : std::string{};
  switch (v.kind) {
    case Violation::Kind::Negative:
      return "negative mass " + format_rational(v.lhs) + " at " + at;
    case Violation::Kind::TotalMass:
      return "total mass " + format_rational(v.lhs) + " != 1";
    case Violation::Kind::RegularEquality:
      return "regular vertex " + at + ": " + format_rational(v.lhs) + " != " + format_rational(v.rhs);
    case Violation::Kind::SingularInequality:
      return "singular vertex " + at + ": " + format_rational(v.lhs) + " < " + format_rational(v.rhs);
    case Violation::Kind::BundleSource:
      return "vertex " + at + " emits an infinite bundle but has mass " + format_rational(v.lhs);
  }
  return {};
}

InvariantReport check_invariant(const Graph& g, const VertexWeights& mu) {
  if (mu.size() != g.vertex_count()) throw InputError("candidate must assign a value to every vertex");
  InvariantReport report;
  Rational total = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    total += mu[v];
    if (sgn(mu[v]) < 0) report.violations.push_back({Violation::Kind::Negative, v, mu[v], Rational(0)});
  }
  if (total != 1) report.violations.push_back({Violation::Kind::TotalMass, std::nullopt, total, Rational(1)});
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const Rational in = incoming(g, mu, v);
    if (g.is_regular(v) && mu[v] != in) {
      report.violations.push_back({Violation::Kind::RegularEquality, v, mu[v], in});
    } else if (!g.is_regular(v) && mu[v] < in) {
      report.violations.push_back({Violation::Kind::SingularInequality, v, mu[v], in});
    }
  }
  bool infinite = false;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.emits_bundle(v) && sgn(mu[v]) != 0) {
      report.violations.push_back({Violation::Kind::BundleSource, v, mu[v], Rational(0)});
      infinite = true;
    }
  }
  if (!infinite) {
    Rational push = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) push += mu[v] * static_cast<unsigned long>(g.edges_out_of(v).size());
    report.pushforward_mass = push;
  }
  report.is_trace = report.violations.empty();
  if (report.is_trace && !(report.pushforward_mass && *report.pushforward_mass <= 1)) {
    throw std::logic_error("invariant measure with pushforward mass above 1");
  }
  return report;
}

GraphTrace require_trace(const Graph& g, const VertexWeights& candidate) {
  auto report = check_invariant(g, candidate);
  if (!report.is_trace) throw InputError("not a graph trace: " + describe(g, report.violations.front()));
  return GraphTrace{candidate};
}

std::vector<GraphTrace> extreme_traces(const Graph& g, Execution exec) {
  const auto sys = constraint_system(g);
  std::vector<RationalRow> eq, ineq;
  for (const auto& c : sys.equalities) eq.push_back(c.coefficients);
  for (const auto& c : sys.inequalities) ineq.push_back(c.coefficients);
  std::vector<GraphTrace> out;
  for (auto& x : orthant_section_vertices(g.vertex_count(), eq, ineq, exec)) out.push_back(GraphTrace{std::move(x)});
  return out;
}

TraceMinimum minimize_over_traces(const Graph& g, const VertexWeights& objective) {
  if (objective.size() != g.vertex_count()) throw InputError("objective must assign a value to every vertex");
  const auto sys = constraint_system(g);
  const std::size_t n = g.vertex_count();
  const std::size_t k = sys.inequalities.size();
  LinearProgram lp;
  lp.cost.assign(n + k, Rational(0));
  std::copy(objective.begin(), objective.end(), lp.cost.begin());
  auto add_row = [&](const LinearConstraint& c, std::optional<std::size_t> slack) {
    std::vector<Rational> row(n + k, Rational(0));
    std::copy(c.coefficients.begin(), c.coefficients.end(), row.begin());
    if (slack) row[n + *slack] = -1;
    lp.rows.push_back(std::move(row));
    lp.rhs.push_back(c.rhs);
  };
  for (const auto& c : sys.equalities) add_row(c, std::nullopt);
  for (std::size_t i = 0; i < k; ++i) add_row(sys.inequalities[i], i);
  add_row(sys.normalization, std::nullopt);

  const auto sol = solve_lp(lp);
  TraceMinimum out;
  if (sol.status == LpSolution::Status::Infeasible) return out;
  if (sol.status == LpSolution::Status::Unbounded) throw std::logic_error("trace polytope reported unbounded");
  out.empty = false;
  out.value = sol.value;
  out.argmin.values.assign(sol.x.begin(), sol.x.begin() + static_cast<std::ptrdiff_t>(n));
  return out;
}

const char* to_string(GaugeCertificate::Kind kind) {
  switch (kind) {
    case GaugeCertificate::Kind::NoCycleInSupport:
      return "NoCycleInSupport";
    case GaugeCertificate::Kind::ConditionK:
      return "ConditionK";
    case GaugeCertificate::Kind::Unknown:
      return "Unknown";
  }
  return "";
}

std::vector<GaugeCertificate> certify_gauge_invariance(const Graph& g, const std::optional<VertexWeights>& trace) {
  if (trace) require_trace(g, *trace);
  const auto sources = cycle_sources(g);
  std::optional<std::vector<VertexId>> support;
  if (trace) {
    support.emplace();
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (sgn((*trace)[v]) > 0) support->push_back(v);
    }
  }

  std::vector<GaugeCertificate> certs;
  const bool disjoint =
      support ? std::none_of(sources.begin(), sources.end(),
                             [&](VertexId v) { return std::binary_search(support->begin(), support->end(), v); })
              : sources.empty();
  if (disjoint) certs.push_back({GaugeCertificate::Kind::NoCycleInSupport, sources, support, {}, {}, {}});

  std::optional<ConditionKVerdict> k;
  if (!g.has_bundles()) {
    k = condition_k(g);
    if (k->satisfied) certs.push_back({GaugeCertificate::Kind::ConditionK, sources, support, {}, {}, {}});
  }
  if (certs.empty()) {
    GaugeCertificate unknown{GaugeCertificate::Kind::Unknown, sources, support, {}, {}, {}};
    if (k) {
      unknown.failing_vertex = k->failing_vertex;
      unknown.failing_cycle = k->witness;
      unknown.note = "a cycle source carries mass and condition (K) fails";
    } else {
      unknown.note = "a cycle source carries mass; condition (K) is not evaluated for graphs with infinite bundles";
    }
    certs.push_back(std::move(unknown));
  }
  return certs;
}

}  // namespace gtrace
