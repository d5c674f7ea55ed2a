#include <doctest.h>

#include "gtrace/errors.hpp"
#include "gtrace/star_algebra.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace gtrace;
using testing::fixture;
using testing::q;
using testing::weights;

namespace {

Path word(const Graph& g, std::initializer_list<const char*> ids) {
  std::vector<EdgeId> out;
  for (const char* id : ids) out.push_back(g.edge_id(id));
  return Path::from_edges(g, out);
}

}  // namespace

TEST_CASE("products of spanning elements") {
  auto loop = fixture("loop");
  const Path e = word(*loop, {"e"}), ee = word(*loop, {"e", "e"});
  CHECK(FormalElement::term(loop, e, ee) * FormalElement::term(loop, ee, e) == FormalElement::term(loop, e, e));

  auto m2 = fixture("m2");
  const auto se = FormalElement::edge(m2, 0);
  CHECK(multiply(adjoint(se), se) == FormalElement::projection(m2, m2->vertex("u")));
  // s_e s_e* is a subprojection of p_v, and p_u s_e = 0
  const auto pv = FormalElement::projection(m2, m2->vertex("v"));
  CHECK(pv * se == se);
  CHECK((FormalElement::projection(m2, m2->vertex("u")) * se).is_zero());

  auto c3 = fixture("c3");
  CHECK((FormalElement::edge(c3, c3->edge_id("a")) * FormalElement::edge(c3, c3->edge_id("b"))).is_zero());
  CHECK(FormalElement::edge(c3, c3->edge_id("a")) * FormalElement::edge(c3, c3->edge_id("c")) ==
        FormalElement::term(c3, word(*c3, {"a", "c"}), Path::vertex(c3->vertex("z"))));

  CHECK_THROWS_AS(FormalElement::term(m2, Path::single(*m2, 0), Path::vertex(m2->vertex("v"))), InputError);
  CHECK_THROWS_AS(multiply(se, FormalElement::edge(fixture("loop"), 0)), InputError);
  CHECK(se == FormalElement::edge(fixture("m2"), 0));
}

TEST_CASE("adjoints") {
  auto loop = fixture("loop");
  const Path e = word(*loop, {"e"}), ee = word(*loop, {"e", "e"});
  CHECK(adjoint(FormalElement::term(loop, e, ee)) == FormalElement::term(loop, ee, e));
  CHECK(adjoint(FormalElement::projection(loop, 0)) == FormalElement::projection(loop, 0));
  const GaussianRational one_plus_i(1, 1);
  CHECK(adjoint(one_plus_i * FormalElement::edge(loop, 0)) ==
        FormalElement::term(loop, Path::vertex(0), e, GaussianRational(1, -1)));
}

TEST_CASE("degree components") {
  auto loop = fixture("loop");
  const auto se = FormalElement::edge(loop, 0);
  const auto pv = FormalElement::projection(loop, 0);
  CHECK(degree_component(se + pv, 1) == se);
  CHECK(degree_component(pv, 0) == pv);
  const auto x = FormalElement::term(loop, word(*loop, {"e"}), word(*loop, {"e", "e"}));
  CHECK(degree_component(x, -1) == x);
  CHECK(degree_component(x, 0).is_zero());
}

TEST_CASE("trace evaluation") {
  auto loop = fixture("loop");
  CHECK(trace_eval(weights({"1"}), FormalElement::edge(loop, 0)).is_zero());
  const auto see = FormalElement::term(loop, word(*loop, {"e"}), word(*loop, {"e"}));
  CHECK(trace_eval(weights({"1"}), see) == GaussianRational(1));
  auto m2 = fixture("m2");
  CHECK(trace_eval(weights({"1/2", "1/2"}), FormalElement::projection(m2, 1)) == GaussianRational(q("1/2")));
  CHECK_THROWS_AS(trace_eval(weights({"1"}), FormalElement::projection(m2, 1)), InputError);
}

TEST_CASE("covariance defects") {
  auto loop = fixture("loop");
  const Path e = word(*loop, {"e"});
  CHECK(covariance_defect(loop, 0) == FormalElement::projection(loop, 0) - FormalElement::term(loop, e, e));
  auto m2 = fixture("m2");
  CHECK(covariance_defect(m2, m2->vertex("v")) ==
        FormalElement::projection(m2, 1) - FormalElement::term(m2, word(*m2, {"e"}), word(*m2, {"e"})));
  auto fib = fixture("fib");
  const auto d = covariance_defect(fib, fib->vertex("1"));
  CHECK(d == FormalElement::projection(fib, 0) - FormalElement::term(fib, word(*fib, {"e11"}), word(*fib, {"e11"})) -
                 FormalElement::term(fib, word(*fib, {"e21"}), word(*fib, {"e21"})));
  CHECK_THROWS_AS(covariance_defect(m2, m2->vertex("u")), InputError);
  CHECK_FALSE(format_element(d).empty());
}

TEST_CASE("algebraic properties on random elements") {
  std::mt19937_64 rng(41);
  for (const auto& name : testing::kAllFixtures) {
    auto g = fixture(name);
    const auto pool = oracle::path_pool(*g, 3);
    const auto traces = extreme_traces(*g);
    std::vector<VertexId> regular = classify_vertices(*g).regular;
    for (int i = 0; i < 60; ++i) {
      const auto x = oracle::random_element(rng, g, pool, 4);
      const auto y = oracle::random_element(rng, g, pool, 4);
      const auto z = oracle::random_element(rng, g, pool, 4);
      CHECK(multiply(multiply(x, y), z) == multiply(x, multiply(y, z)));
      CHECK(adjoint(multiply(x, y)) == multiply(adjoint(y), adjoint(x)));
      CHECK(adjoint(adjoint(x)) == x);
      CHECK(multiply(x, y + z) == multiply(x, y) + multiply(x, z));

      FormalElement sum(g);
      for (long n = -3; n <= 3; ++n) sum += degree_component(x, n);
      CHECK(sum == x);

      // termwise symmetry holds for any weights, not only traces
      std::vector<Rational> w;
      for (std::size_t v = 0; v < g->vertex_count(); ++v) w.push_back(Rational(static_cast<long>(rng() % 5)));
      CHECK(trace_eval(w, multiply(x, y)) == trace_eval(w, multiply(y, x)));

      for (const auto& t : traces) {
        const auto xx = trace_eval(t.values, multiply(adjoint(x), x));
        CHECK(xx.im == 0);
        CHECK(xx.re >= 0);
        CHECK(trace_eval(t.values, x) == trace_eval(t.values, degree_component(x, 0)));
        for (VertexId v : regular) {
          const auto d = covariance_defect(g, v);
          CHECK(trace_eval(t.values, multiply(d, x)).is_zero());
          CHECK(trace_eval(t.values, multiply(x, d)).is_zero());
        }
      }
    }
  }
}

TEST_CASE("round trip through vertex projections") {
  for (const auto& name : testing::kAllFixtures) {
    auto g = fixture(name);
    for (const auto& t : extreme_traces(*g)) {
      for (VertexId v = 0; v < g->vertex_count(); ++v) {
        CHECK(trace_eval(t.values, FormalElement::projection(g, v)) == GaussianRational(t.values[v]));
      }
    }
  }
}
