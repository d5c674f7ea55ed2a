#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gtrace/graph.hpp"
#include "gtrace/io.hpp"
#include "gtrace/rational.hpp"

namespace testing {

inline std::string fixture_path(const std::string& name) { return std::string(GTRACE_FIXTURE_DIR) + "/" + name + ".json"; }

inline std::shared_ptr<const gtrace::Graph> fixture(const std::string& name) {
  return std::make_shared<const gtrace::Graph>(gtrace::load_graph(fixture_path(name)));
}

inline gtrace::Rational q(const char* text) { return gtrace::parse_rational(text); }

/// Weights from "p/q" strings in vertex order.
inline std::vector<gtrace::Rational> weights(std::initializer_list<const char*> values) {
  std::vector<gtrace::Rational> out;
  for (const char* v : values) out.push_back(q(v));
  return out;
}

inline const std::vector<std::string> kAllFixtures = {"loop", "o2", "m2", "y", "fork", "fib", "c3", "inf"};
inline const std::vector<std::string> kFiniteFixtures = {"loop", "o2", "m2", "y", "fork", "fib", "c3"};

}  // namespace testing
