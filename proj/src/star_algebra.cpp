#include "gtrace/star_algebra.hpp"

#include <optional>

#include "gtrace/errors.hpp"

namespace gtrace {

namespace {

/// (s_α s_β*)(s_γ s_δ*)
std::optional<FormalElement::Key> term_product(const Graph& g, const FormalElement::Key& left,
                                               const FormalElement::Key& right) {
  const auto& [alpha, beta] = left;
  const auto& [gamma, delta] = right;
  if (beta.length() <= gamma.length() && gamma.has_prefix(beta)) {
    return FormalElement::Key{concat(g, alpha, gamma.drop_front(g, beta.length())), delta};
  }
  if (gamma.length() < beta.length() && beta.has_prefix(gamma)) {
    return FormalElement::Key{alpha, concat(g, delta, beta.drop_front(g, gamma.length()))};
  }
  return std::nullopt;
}

}  // namespace

FormalElement::FormalElement(std::shared_ptr<const Graph> graph) : graph_(std::move(graph)) {
  if (!graph_) throw InputError("formal element needs a graph");
}

FormalElement FormalElement::term(std::shared_ptr<const Graph> graph, Path alpha, Path beta,
                                  GaussianRational coeff) {
  FormalElement x(std::move(graph));
  x.add_term(std::move(alpha), std::move(beta), coeff);
  return x;
}

FormalElement FormalElement::projection(std::shared_ptr<const Graph> graph, VertexId v) {
  return term(std::move(graph), Path::vertex(v), Path::vertex(v));
}

FormalElement FormalElement::edge(std::shared_ptr<const Graph> graph, EdgeId e) {
  const Path p = Path::single(*graph, e);
  return term(std::move(graph), p, Path::vertex(p.source()));
}

void FormalElement::add_term(Path alpha, Path beta, const GaussianRational& coeff) {
  if (alpha.source() != beta.source()) {
    throw InputError("term s_a s_b* needs s(a) = s(b); got " + format_path(*graph_, alpha) + " and " +
                     format_path(*graph_, beta));
  }
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(Key{std::move(alpha), std::move(beta)}, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void FormalElement::require_same_graph(const FormalElement& other) const {
  if (graph_ != other.graph_ && !(*graph_ == *other.graph_)) {
    throw InputError("operands belong to different graphs");
  }
}

FormalElement& FormalElement::operator+=(const FormalElement& other) {
  require_same_graph(other);
  for (const auto& [key, c] : other.terms_) add_term(key.first, key.second, c);
  return *this;
}

FormalElement& FormalElement::operator-=(const FormalElement& other) {
  require_same_graph(other);
  for (const auto& [key, c] : other.terms_) add_term(key.first, key.second, -c);
  return *this;
}

FormalElement operator*(const GaussianRational& c, const FormalElement& x) {
  FormalElement out(x.graph_);
  for (const auto& [key, coeff] : x.terms_) out.add_term(key.first, key.second, c * coeff);
  return out;
}

FormalElement operator*(const FormalElement& x, const FormalElement& y) {
  x.require_same_graph(y);
  FormalElement out(x.graph_);
  for (const auto& [lk, lc] : x.terms_) {
    for (const auto& [rk, rc] : y.terms_) {
      if (auto key = term_product(*x.graph_, lk, rk)) out.add_term(std::move(key->first), std::move(key->second), lc * rc);
    }
  }
  return out;
}

bool operator==(const FormalElement& a, const FormalElement& b) {
  return (a.graph_ == b.graph_ || *a.graph_ == *b.graph_) && a.terms_ == b.terms_;
}

FormalElement multiply(const FormalElement& x, const FormalElement& y) { return x * y; }

FormalElement adjoint(const FormalElement& x) {
  FormalElement out(x.graph_ptr());
  for (const auto& [key, c] : x.terms()) out.add_term(key.second, key.first, c.conj());
  return out;
}

FormalElement degree_component(const FormalElement& x, long n) {
  FormalElement out(x.graph_ptr());
  for (const auto& [key, c] : x.terms()) {
    if (static_cast<long>(key.first.length()) - static_cast<long>(key.second.length()) == n) {
      out.add_term(key.first, key.second, c);
    }
  }
  return out;
}

GaussianRational trace_eval(const VertexWeights& mu, const FormalElement& x) {
  if (mu.size() != x.graph().vertex_count()) throw InputError("measure must assign a value to every vertex");
  GaussianRational total;
  for (const auto& [key, c] : x.terms()) {
    if (key.first == key.second) total += mu[key.first.source()] * c;
  }
  return total;
}

FormalElement covariance_defect(std::shared_ptr<const Graph> graph, VertexId v) {
  if (!graph->is_regular(v)) {
    throw InputError("covariance relation is only imposed at regular vertices; " + graph->vertex_name(v) +
                     " is singular");
  }
  auto defect = FormalElement::projection(graph, v);
  for (EdgeId e : graph->edges_into(v)) {
    const Path p = Path::single(*graph, e);
    defect.add_term(p, p, GaussianRational(-1));
  }
  return defect;
}

std::string format_element(const FormalElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [key, c] : x.terms()) {
    if (!out.empty()) out += " + ";
    out += "(" + format_gaussian(c) + ") s" + format_path(x.graph(), key.first) + " s" +
           format_path(x.graph(), key.second) + "*";
  }
  return out;
}

}  // namespace gtrace
