#include <doctest.h>

#include "gtrace/cycles.hpp"
#include "gtrace/errors.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace gtrace;
using testing::fixture;

namespace {

oracle::Count as_oracle(CycleCount c) {
  switch (c) {
    case CycleCount::Zero:
      return oracle::Count::Zero;
    case CycleCount::One:
      return oracle::Count::One;
    case CycleCount::TwoOrMore:
      break;
  }
  return oracle::Count::TwoOrMore;
}

bool is_simple_cycle_at(const Graph& g, const Path& p, VertexId v) {
  if (p.length() == 0 || p.source() != v || p.range() != v) return false;
  const auto& e = p.edges();
  return std::find(e.begin(), e.end() - 1, e.back()) == e.end() - 1;
}

}  // namespace

TEST_CASE("cycle sources") {
  CHECK(cycle_sources(*fixture("m2")).empty());
  CHECK(cycle_sources(*fixture("loop")) == std::vector<VertexId>{0});
  CHECK(cycle_sources(*fixture("c3")) == std::vector<VertexId>{0, 1, 2});
  CHECK(cycle_sources(*fixture("inf")).empty());
  // a bundle closing a cycle counts as an edge
  Graph g({"v", "w"}, {{"e", "v", "w"}}, {{"w", "v"}});
  CHECK(cycle_sources(g) == std::vector<VertexId>{0, 1});
}

TEST_CASE("simple cycles at a vertex") {
  auto loop = fixture("loop");
  auto r = simple_cycles_at(*loop, 0);
  CHECK(r.count == CycleCount::One);
  REQUIRE(r.witnesses.size() == 1);
  CHECK(format_path(*loop, r.witnesses[0]) == "[e]");

  auto o2 = fixture("o2");
  r = simple_cycles_at(*o2, 0);
  CHECK(r.count == CycleCount::TwoOrMore);
  REQUIRE(r.witnesses.size() == 2);
  CHECK(format_path(*o2, r.witnesses[0]) == "[e]");
  CHECK(format_path(*o2, r.witnesses[1]) == "[f]");

  auto m2 = fixture("m2");
  CHECK(simple_cycles_at(*m2, m2->vertex("u")).count == CycleCount::Zero);
  CHECK_THROWS_AS(simple_cycles_at(*fixture("inf"), 0), InputError);
}

TEST_CASE("a cap shorter than the witness drops it but keeps the count") {
  auto c3 = fixture("c3");
  auto r = simple_cycles_at(*c3, 0, 2);
  CHECK(r.count == CycleCount::One);
  CHECK(r.witnesses.empty());
  r = simple_cycles_at(*c3, 0, 3);
  REQUIRE(r.witnesses.size() == 1);
  CHECK(r.witnesses[0].length() == 3);
}

TEST_CASE("condition (K) on fixtures") {
  auto loop = fixture("loop");
  auto k = condition_k(*loop);
  CHECK_FALSE(k.satisfied);
  CHECK(k.failing_vertex == VertexId{0});
  REQUIRE(k.witness);
  CHECK(format_path(*loop, *k.witness) == "[e]");
  CHECK(condition_k(*fixture("o2")).satisfied);
  CHECK(condition_k(*fixture("y")).satisfied);
  CHECK(condition_k(*fixture("fib")).satisfied);
  CHECK_FALSE(condition_k(*fixture("c3")).satisfied);
  CHECK_THROWS_AS(condition_k(*fixture("inf")), InputError);
}

TEST_CASE("cycle classification agrees with brute force on random graphs") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 400; ++i) {
    Graph g = oracle::random_graph(rng, 5, 8);
    const std::size_t bound = 2 * g.vertex_count() + 1;
    CHECK(cycle_sources(g) == oracle::cycle_sources(g));
    bool k_holds = true;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      const auto report = simple_cycles_at(g, v);
      CHECK(as_oracle(report.count) == oracle::simple_cycles_at(g, v, bound));
      k_holds = k_holds && report.count != CycleCount::One;
      const std::size_t expected_witnesses = report.count == CycleCount::Zero ? 0 : report.count == CycleCount::One ? 1 : 2;
      REQUIRE(report.witnesses.size() == expected_witnesses);
      for (const auto& w : report.witnesses) {
        CHECK(is_simple_cycle_at(g, w, v));
        CHECK(w.length() <= bound);
      }
      if (report.witnesses.size() == 2) CHECK(report.witnesses[0] != report.witnesses[1]);
    }
    CHECK(condition_k(g).satisfied == k_holds);
    CHECK(condition_k(g).satisfied == oracle::condition_k(g));
  }
}

TEST_CASE("strong components") {
  auto c3 = fixture("c3");
  auto comp = strong_components(*c3, false);
  CHECK(comp[0] == comp[1]);
  CHECK(comp[1] == comp[2]);
  auto m2 = fixture("m2");
  comp = strong_components(*m2, false);
  CHECK(comp[0] != comp[1]);
}
