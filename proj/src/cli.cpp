#include "gtrace/cli.hpp"

#include <ostream>

#include <CLI11.hpp>

#include "gtrace/boundary.hpp"
#include "gtrace/cycles.hpp"
#include "gtrace/errors.hpp"
#include "gtrace/ktheory.hpp"
#include "gtrace/star_algebra.hpp"
#include "gtrace/trace_polytope.hpp"

namespace gtrace::cli {

namespace {

const char* const kConvention =
    "Edge convention: each edge has a source \"src\" = s(e) and a range \"rng\" = r(e);\n"
    "a path a1 a2 ... an satisfies s(a_i) = r(a_{i+1}), so paths grow at their source end.";

const std::string kDescription =
    std::string("Exact invariant measures, boundary measures, K-theory and trace evaluation for graph C*-algebras.\n") +
    kConvention;

Json header(const Command& cmd) {
  return Json{{"schema_version", kSchemaVersion}, {"command", to_string(cmd.kind)}};
}

Json constraint_to_json(const Graph& g, const LinearConstraint& c) {
  Json coeffs = Json::object();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (sgn(c.coefficients[v]) != 0) coeffs[g.vertex_name(v)] = format_rational(c.coefficients[v]);
  }
  return Json{{"origin", c.origin}, {"coefficients", coeffs}, {"rhs", format_rational(c.rhs)}};
}

Json traces_to_json(const Graph& g, const std::vector<GraphTrace>& traces) {
  Json arr = Json::array();
  for (const auto& t : traces) arr.push_back(measure_to_json(g, t.values));
  return arr;
}

Json invariant_report_to_json(const Graph& g, const InvariantReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations) violations.push_back(describe(g, v));
  return Json{{"is_trace", r.is_trace},
              {"violations", violations},
              {"pushforward_mass", r.pushforward_mass ? Json(format_rational(*r.pushforward_mass)) : Json("infinite")}};
}

Json certificate_to_json(const Graph& g, const GaugeCertificate& c) {
  Json doc{{"kind", to_string(c.kind)}, {"cycle_sources", vertex_list(g, c.cycle_sources)}};
  if (c.support) doc["support"] = vertex_list(g, *c.support);
  if (c.failing_vertex) doc["failing_vertex"] = g.vertex_name(*c.failing_vertex);
  if (c.failing_cycle) doc["failing_cycle"] = path_to_json(g, *c.failing_cycle);
  if (!c.note.empty()) doc["note"] = c.note;
  return doc;
}

Json condition_k_to_json(const Graph& g) {
  if (g.has_bundles()) return Json{{"status", "not_applicable"}, {"reason", "graph has infinite bundles"}};
  const auto k = condition_k(g);
  if (k.satisfied) return Json{{"status", "satisfied"}};
  return Json{{"status", "fails"}, {"vertex", g.vertex_name(*k.failing_vertex)}, {"witness", path_to_json(g, *k.witness)}};
}

Json boundary_report_to_json(const BoundaryReport& r) {
  auto one = [](const IdentityCheck& c) {
    Json doc{{"holds", c.holds}};
    if (!c.holds) doc["witness"] = c.witness;
    return doc;
  };
  return Json{{"nonnegativity", one(r.nonnegativity)},     {"unit_mass", one(r.unit_mass)},
              {"rho_consistency", one(r.rho_consistency)}, {"range_identity", one(r.range_identity)},
              {"cylinder_identity", one(r.cylinder_identity)}, {"shift_identity", one(r.shift_identity)}};
}

Json run_info(const Command& cmd, const Graph& g) {
  Json doc = header(cmd);
  const auto cls = classify_vertices(g);
  doc["graph"] = Json{{"vertices", g.vertex_count()}, {"edges", g.edge_count()}, {"infinite_bundles", g.bundles().size()}};
  doc["regular"] = vertex_list(g, cls.regular);
  doc["singular"] = vertex_list(g, cls.singular);
  doc["cycle_sources"] = vertex_list(g, cycle_sources(g));
  doc["condition_k"] = condition_k_to_json(g);
  const auto sys = constraint_system(g);
  Json eq = Json::array(), ineq = Json::array();
  for (const auto& c : sys.equalities) eq.push_back(constraint_to_json(g, c));
  for (const auto& c : sys.inequalities) ineq.push_back(constraint_to_json(g, c));
  doc["constraints"] = Json{{"equalities", eq}, {"inequalities", ineq},
                            {"normalization", constraint_to_json(g, sys.normalization)}, {"nonnegative", true}};
  return doc;
}

Json run_traces(const Command& cmd, const Graph& g) {
  Json doc = header(cmd);
  const bool want_extreme = cmd.extreme || (!cmd.check_path && !cmd.minimize);
  if (want_extreme) doc["extreme_traces"] = traces_to_json(g, extreme_traces(g));
  if (cmd.check_path) doc["check"] = invariant_report_to_json(g, check_invariant(g, parse_measure(g, read_json_file(*cmd.check_path))));
  if (cmd.minimize) {
    const auto objective = parse_vertex_vector(g, *cmd.minimize);
    const auto min = minimize_over_traces(g, objective);
    if (min.empty) {
      doc["minimum"] = Json{{"verdict", "EmptyTraceSpace"}};
    } else {
      doc["minimum"] = Json{{"verdict", "Minimum"}, {"value", format_rational(min.value)},
                            {"argmin", measure_to_json(g, min.argmin.values)}};
    }
  }
  return doc;
}

Json run_ktheory(const Command& cmd, const Graph& g) {
  Json doc = header(cmd);
  const auto k = k_groups(g);
  Json entries = Json::array();
  for (std::size_t i = 0; i < k.matrix.entries.rows(); ++i) {
    std::vector<Integer> row;
    for (std::size_t j = 0; j < k.matrix.entries.cols(); ++j) row.push_back(k.matrix.entries(i, j));
    entries.push_back(integer_list(row));
  }
  doc["matrix"] = Json{{"rows", vertex_list(g, k.matrix.rows)}, {"columns", vertex_list(g, k.matrix.cols)}, {"entries", entries}};
  doc["invariant_factors"] = integer_list(k.snf.invariant_factors);
  doc["K0"] = Json{{"free_rank", k.k0.free_rank}, {"torsion", integer_list(k.k0.torsion)}};
  Json basis = Json::array();
  for (const auto& b : k.k1_basis) basis.push_back(integer_list(b));
  doc["K1"] = Json{{"free_rank", k.k1_rank}, {"kernel_basis", basis}};
  Json gens = Json::object();
  for (VertexId v = 0; v < g.vertex_count(); ++v) gens[g.vertex_name(v)] = k0_class_to_json(k.k0.generator_classes[v]);
  doc["generator_classes"] = gens;
  doc["order_unit"] = k0_class_to_json(k.k0.order_unit);
  if (cmd.measure_path) {
    const auto mu = require_trace(g, parse_measure(g, read_json_file(*cmd.measure_path)));
    const auto state = state_from_trace(g, mu);
    doc["state"] = Json{{"values", measure_to_json(g, state.values)},
                        {"order_unit_value", format_rational(state.order_unit_value)}};
  }
  return doc;
}

Json run_boundary(const Command& cmd, const Graph& g) {
  Json doc = header(cmd);
  const std::size_t depth = *cmd.depth;
  doc["depth"] = depth;
  std::vector<BoundaryLevel> levels;
  std::optional<VertexWeights> mu;
  if (cmd.measure_path) {
    mu = parse_measure(g, read_json_file(*cmd.measure_path));
    // Non-invariant candidates are allowed with --verify so the failing
    // identities can be reported.
    if (!cmd.verify) require_trace(g, *mu);
    levels = propagate_boundary_measure(g, *mu, depth, Execution::Parallel, cmd.budget);
    doc["measure"] = measure_to_json(g, *mu);
    doc["is_trace"] = check_invariant(g, *mu).is_trace;
  } else {
    levels = boundary_levels(g, depth, cmd.budget);
  }
  Json out = Json::array();
  for (const auto& level : levels) {
    Json paths = Json::array();
    for (std::size_t i = 0; i < level.paths.size(); ++i) {
      Json entry{{"path", path_to_json(g, level.paths[i])}};
      if (level.mass) entry["mass"] = format_rational((*level.mass)[i]);
      paths.push_back(entry);
    }
    out.push_back(Json{{"n", level.n}, {"paths", paths}});
  }
  doc["levels"] = out;
  if (cmd.verify) doc["report"] = boundary_report_to_json(verify_boundary_identities(g, levels, *mu));
  return doc;
}

Json run_star(const Command& cmd, const std::shared_ptr<const Graph>& g) {
  Json doc = header(cmd);
  doc["op"] = cmd.op;
  auto element = [&](const std::optional<std::string>& path, const char* flag) {
    if (!path) throw UsageError(std::string("star --op ") + cmd.op + " requires " + flag);
    return parse_element(g, read_json_file(*path));
  };
  if (cmd.op == "multiply") {
    doc["result"] = element_to_json(multiply(element(cmd.element_path, "--element"), element(cmd.other_path, "--other")));
  } else if (cmd.op == "adjoint") {
    doc["result"] = element_to_json(adjoint(element(cmd.element_path, "--element")));
  } else if (cmd.op == "degree") {
    if (!cmd.degree) throw UsageError("star --op degree requires --degree");
    doc["degree"] = *cmd.degree;
    doc["result"] = element_to_json(degree_component(element(cmd.element_path, "--element"), *cmd.degree));
  } else if (cmd.op == "trace") {
    if (!cmd.measure_path) throw UsageError("star --op trace requires --measure");
    const auto mu = parse_measure(*g, read_json_file(*cmd.measure_path));
    doc["is_trace"] = check_invariant(*g, mu).is_trace;
    doc["value"] = gaussian_to_json(trace_eval(mu, element(cmd.element_path, "--element")));
  } else if (cmd.op == "defect") {
    if (!cmd.vertex) throw UsageError("star --op defect requires --vertex");
    doc["vertex"] = *cmd.vertex;
    doc["result"] = element_to_json(covariance_defect(g, g->vertex(*cmd.vertex)));
  } else {
    throw UsageError("unknown star operation " + cmd.op);
  }
  return doc;
}

Json run_kpositive(const Command& cmd, const Graph& g) {
  Json doc = header(cmd);
  const auto a = parse_integer_vector(g, *cmd.vector);
  const auto verdict = eventually_positive(g, a);
  doc["verdict"] = to_string(verdict.kind);
  if (verdict.kind != PositivityVerdict::Kind::EmptyTraceSpace) doc["minimum"] = format_rational(verdict.minimum);
  if (verdict.trace && verdict.kind == PositivityVerdict::Kind::NegativeWitness) {
    doc["witness_trace"] = measure_to_json(g, verdict.trace->values);
  }
  doc["hypotheses_checked"] = verdict.hypotheses_checked;
  doc["hypotheses"] = "minimal graph with compact, totally disconnected vertex space (not verified)";
  return doc;
}

Json run_certify(const Command& cmd, const Graph& g) {
  Json doc = header(cmd);
  std::optional<VertexWeights> mu;
  if (cmd.measure_path) mu = parse_measure(g, read_json_file(*cmd.measure_path));
  doc["measure"] = mu ? measure_to_json(g, *mu) : Json("all");
  Json certs = Json::array();
  for (const auto& c : certify_gauge_invariance(g, mu)) certs.push_back(certificate_to_json(g, c));
  doc["certificates"] = certs;
  return doc;
}

}  // namespace

const char* to_string(Command::Kind kind) {
  switch (kind) {
    case Command::Kind::Info:
      return "info";
    case Command::Kind::Traces:
      return "traces";
    case Command::Kind::KTheory:
      return "ktheory";
    case Command::Kind::Boundary:
      return "boundary";
    case Command::Kind::Star:
      return "star";
    case Command::Kind::KPositive:
      return "kpositive";
    case Command::Kind::Certify:
      return "certify";
  }
  return "";
}

Command parse_command(const std::vector<std::string>& args) {
  CLI::App app{kDescription, "gtrace"};
  app.require_subcommand(1, 1);
  Command cmd;
  std::optional<std::string> depth_text;

  auto graph_arg = [&](CLI::App* sub) {
    sub->add_option("graph", cmd.graph_path, "graph document (JSON)")->required()->check(CLI::ExistingFile);
    sub->footer(kConvention);
  };
  auto* info = app.add_subcommand("info", "vertex classification, cycles, condition (K), trace constraints");
  graph_arg(info);

  auto* traces = app.add_subcommand("traces", "extreme graph traces, candidate checks, minimization");
  graph_arg(traces);
  traces->add_flag("--extreme", cmd.extreme, "list the extreme points of the trace space");
  traces->add_option("--check", cmd.check_path, "measure document to check")->check(CLI::ExistingFile);
  traces->add_option("--minimize", cmd.minimize, "objective vector \"v1:1,v2:-1\"");

  auto* ktheory = app.add_subcommand("ktheory", "K_0, K_1, order unit, trace-induced states");
  graph_arg(ktheory);
  ktheory->add_option("--measure", cmd.measure_path, "graph trace inducing a state on K_0")->check(CLI::ExistingFile);

  auto* boundary = app.add_subcommand("boundary", "boundary levels, induced measures and their identities");
  graph_arg(boundary);
  boundary->add_option("--depth", cmd.depth, "deepest level n")->required();
  boundary->add_option("--measure", cmd.measure_path, "vertex measure")->check(CLI::ExistingFile);
  boundary->add_flag("--verify", cmd.verify, "check the boundary measure identities (needs --measure)");
  boundary->add_option("--budget", cmd.budget, "maximum number of boundary paths over all levels")
      ->default_val(kDefaultPathBudget);

  auto* star = app.add_subcommand("star", "formal *-algebra operations and trace evaluation");
  graph_arg(star);
  star->add_option("--op", cmd.op, "multiply | adjoint | degree | trace | defect")
      ->required()
      ->check(CLI::IsMember({"multiply", "adjoint", "degree", "trace", "defect"}));
  star->add_option("--element", cmd.element_path, "element document")->check(CLI::ExistingFile);
  star->add_option("--other", cmd.other_path, "right factor for multiply")->check(CLI::ExistingFile);
  star->add_option("--degree", cmd.degree, "gauge degree for --op degree");
  star->add_option("--vertex", cmd.vertex, "regular vertex for --op defect");
  star->add_option("--measure", cmd.measure_path, "vertex measure for --op trace")->check(CLI::ExistingFile);

  auto* kpositive = app.add_subcommand("kpositive", "eventual positivity of a K_0 class via traces");
  graph_arg(kpositive);
  kpositive->add_option("--vector", cmd.vector, "integer vertex function \"v1:1,v2:-1\"")->required();

  auto* certify = app.add_subcommand("certify", "gauge-invariance certificates");
  graph_arg(certify);
  certify->add_option("--measure", cmd.measure_path, "graph trace (default: all traces)")->check(CLI::ExistingFile);

  if (!args.empty() && !args.front().starts_with("-") && app.get_subcommand_no_throw(args.front()) == nullptr) {
    throw UsageError("unknown subcommand " + args.front() + "\n\n" + app.help());
  }
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const CLI::App* target = &app;
    for (auto* sub : app.get_subcommands()) target = sub;
    throw HelpRequested(target->help());
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested(app.help("", CLI::AppFormatMode::All));
  } catch (const CLI::ParseError& e) {
    throw UsageError(std::string(e.what()) + "\n\n" + app.help());
  }

  const std::pair<CLI::App*, Command::Kind> kinds[] = {
      {info, Command::Kind::Info},     {traces, Command::Kind::Traces},       {ktheory, Command::Kind::KTheory},
      {boundary, Command::Kind::Boundary}, {star, Command::Kind::Star},       {kpositive, Command::Kind::KPositive},
      {certify, Command::Kind::Certify}};
  for (const auto& [sub, kind] : kinds) {
    if (sub->parsed()) cmd.kind = kind;
  }
  if (cmd.kind == Command::Kind::Boundary && cmd.verify && !cmd.measure_path) {
    throw UsageError("--verify requires --measure");
  }
  return cmd;
}

Outcome execute(const Command& cmd) {
  Outcome outcome;
  try {
    auto graph = std::make_shared<const Graph>(load_graph(cmd.graph_path));
    const Graph& g = *graph;
    switch (cmd.kind) {
      case Command::Kind::Info:
        outcome.document = run_info(cmd, g);
        break;
      case Command::Kind::Traces:
        outcome.document = run_traces(cmd, g);
        break;
      case Command::Kind::KTheory:
        outcome.document = run_ktheory(cmd, g);
        break;
      case Command::Kind::Boundary:
        outcome.document = run_boundary(cmd, g);
        break;
      case Command::Kind::Star:
        outcome.document = run_star(cmd, graph);
        break;
      case Command::Kind::KPositive:
        outcome.document = run_kpositive(cmd, g);
        break;
      case Command::Kind::Certify:
        outcome.document = run_certify(cmd, g);
        break;
    }
  } catch (const BudgetExceeded& e) {
    outcome = Outcome{Json(), 2,
                      std::string(e.what()) + " (reached " + std::to_string(e.reached()) +
                          " paths; raise --budget or lower --depth)"};
  } catch (const InputError& e) {
    outcome = Outcome{Json(), 1, e.what()};
  }
  return outcome;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Command cmd;
  try {
    cmd = parse_command(args);
  } catch (const HelpRequested& help) {
    out << help.what();
    return 0;
  } catch (const UsageError& e) {
    err << e.what() << "\n";
    return 1;
  }
  const auto outcome = execute(cmd);
  if (outcome.exit_code != 0) {
    err << "gtrace " << to_string(cmd.kind) << ": " << outcome.diagnostic << "\n";
    return outcome.exit_code;
  }
  out << render(outcome.document);
  return 0;
}

}  // namespace gtrace::cli
