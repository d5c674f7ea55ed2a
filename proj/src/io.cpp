#include "gtrace/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "gtrace/errors.hpp"

namespace gtrace {

namespace {

const char* const kGraphSchemaHint =
    " (graph schema: {\"vertices\": [...], \"edges\": [{\"id\", \"src\", \"rng\"}], \"infinite_bundles\": "
    "[{\"src\", \"rng\"}]}; \"src\" is s(e), \"rng\" is r(e), and paths a1 a2 satisfy s(a1) = r(a2))";

const std::string& string_field(const Json& obj, const char* key, const char* what) {
  if (!obj.is_object() || !obj.contains(key) || !obj.at(key).is_string()) {
    throw InputError(std::string(what) + " needs a string field \"" + key + "\"" + kGraphSchemaHint);
  }
  return obj.at(key).get_ref<const std::string&>();
}

Rational rational_field(const Json& value) {
  if (!value.is_string()) throw InputError("rationals must be strings \"p/q\", got " + value.dump());
  return parse_rational(value.get<std::string>());
}

}  // namespace

Json read_json_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw InputError("cannot read " + file.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError("malformed document " + file.string() + ": " + e.what());
  }
}

Graph parse_graph(const Json& doc) {
  if (!doc.is_object() || !doc.contains("vertices") || !doc.at("vertices").is_array()) {
    throw InputError(std::string("malformed graph document") + kGraphSchemaHint);
  }
  for (const auto& [key, _] : doc.items()) {
    if (key != "vertices" && key != "edges" && key != "infinite_bundles") {
      throw InputError("unexpected graph field \"" + key + "\"" + kGraphSchemaHint);
    }
  }
  std::vector<std::string> vertices;
  for (const auto& v : doc.at("vertices")) {
    if (!v.is_string()) throw InputError("vertex identifiers must be strings, got " + v.dump() + kGraphSchemaHint);
    vertices.push_back(v.get<std::string>());
  }
  std::vector<Graph::EdgeSpec> edges;
  if (doc.contains("edges")) {
    if (!doc.at("edges").is_array()) throw InputError(std::string("\"edges\" must be an array") + kGraphSchemaHint);
    for (const auto& e : doc.at("edges")) {
      edges.push_back({string_field(e, "id", "edge"), string_field(e, "src", "edge"), string_field(e, "rng", "edge")});
    }
  }
  std::vector<Graph::BundleSpec> bundles;
  if (doc.contains("infinite_bundles")) {
    if (!doc.at("infinite_bundles").is_array()) {
      throw InputError(std::string("\"infinite_bundles\" must be an array") + kGraphSchemaHint);
    }
    for (const auto& b : doc.at("infinite_bundles")) {
      bundles.push_back({string_field(b, "src", "bundle"), string_field(b, "rng", "bundle")});
    }
  }
  return Graph(std::move(vertices), edges, bundles);
}

Graph load_graph(const std::filesystem::path& file) { return parse_graph(read_json_file(file)); }

Json graph_to_json(const Graph& g) {
  Json doc;
  doc["vertices"] = g.vertex_names();
  doc["edges"] = Json::array();
  for (const auto& e : g.edges()) {
    doc["edges"].push_back({{"id", e.id}, {"src", g.vertex_name(e.src)}, {"rng", g.vertex_name(e.rng)}});
  }
  if (g.has_bundles()) {
    doc["infinite_bundles"] = Json::array();
    for (const auto& b : g.bundles()) {
      doc["infinite_bundles"].push_back({{"src", g.vertex_name(b.src)}, {"rng", g.vertex_name(b.rng)}});
    }
  }
  return doc;
}

VertexWeights parse_measure(const Graph& g, const Json& doc) {
  if (!doc.is_object()) throw InputError("measure document must be an object {vertex: \"p/q\"}");
  VertexWeights mu(g.vertex_count());
  for (const auto& [key, value] : doc.items()) {
    if (!g.find_vertex(key)) throw InputError("measure names unknown vertex " + key);
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!doc.contains(g.vertex_name(v))) throw InputError("measure is missing vertex " + g.vertex_name(v));
    mu[v] = rational_field(doc.at(g.vertex_name(v)));
  }
  return mu;
}

Json measure_to_json(const Graph& g, const VertexWeights& mu) {
  Json doc = Json::object();
  for (VertexId v = 0; v < g.vertex_count(); ++v) doc[g.vertex_name(v)] = format_rational(mu.at(v));
  return doc;
}

VertexWeights parse_vertex_vector(const Graph& g, std::string_view text) {
  VertexWeights out(g.vertex_count());
  std::vector<bool> seen(g.vertex_count(), false);
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    const auto colon = item.rfind(':');
    if (colon == std::string_view::npos) {
      throw InputError("vector entries look like \"v:1\", got \"" + std::string(item) + "\"");
    }
    const VertexId v = g.vertex(item.substr(0, colon));
    if (seen[v]) throw InputError("vertex " + g.vertex_name(v) + " appears twice in vector");
    seen[v] = true;
    out[v] = parse_rational(item.substr(colon + 1));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!seen[v]) throw InputError("vector is missing vertex " + g.vertex_name(v));
  }
  return out;
}

std::vector<Integer> parse_integer_vector(const Graph& g, std::string_view text) {
  std::vector<Integer> out;
  for (const auto& q : parse_vertex_vector(g, text)) {
    if (q.get_den() != 1) throw InputError("vector entries must be integers, got " + format_rational(q));
    out.push_back(q.get_num());
  }
  return out;
}

Path parse_path(const Graph& g, const Json& doc) {
  if (doc.is_object() && doc.size() == 1 && doc.contains("vertex") && doc.at("vertex").is_string()) {
    return Path::vertex(g.vertex(doc.at("vertex").get<std::string>()));
  }
  if (!doc.is_array() || doc.empty()) {
    throw InputError("a path is a nonempty array of edge ids or {\"vertex\": id}, got " + doc.dump());
  }
  std::vector<EdgeId> edges;
  for (const auto& e : doc) {
    if (!e.is_string()) throw InputError("edge ids must be strings, got " + e.dump());
    edges.push_back(g.edge_id(e.get<std::string>()));
  }
  return Path::from_edges(g, std::move(edges));
}

Json path_to_json(const Graph& g, const Path& p) {
  if (p.is_vertex()) return Json{{"vertex", g.vertex_name(p.range())}};
  Json arr = Json::array();
  for (EdgeId e : p.edges()) arr.push_back(g.edge(e).id);
  return arr;
}

GaussianRational parse_gaussian(const Json& doc) {
  if (!doc.is_object() || !doc.contains("re") || !doc.contains("im")) {
    throw InputError("coefficients look like {\"re\": \"p/q\", \"im\": \"p/q\"}, got " + doc.dump());
  }
  return {rational_field(doc.at("re")), rational_field(doc.at("im"))};
}

Json gaussian_to_json(const GaussianRational& z) {
  return Json{{"re", format_rational(z.re)}, {"im", format_rational(z.im)}};
}

FormalElement parse_element(std::shared_ptr<const Graph> g, const Json& doc) {
  if (!doc.is_array()) throw InputError("element document must be a list of terms");
  FormalElement x(g);
  for (const auto& t : doc) {
    if (!t.is_object() || !t.contains("alpha") || !t.contains("beta") || !t.contains("coeff")) {
      throw InputError("terms look like {\"alpha\": ..., \"beta\": ..., \"coeff\": ...}, got " + t.dump());
    }
    x.add_term(parse_path(*g, t.at("alpha")), parse_path(*g, t.at("beta")), parse_gaussian(t.at("coeff")));
  }
  return x;
}

Json element_to_json(const FormalElement& x) {
  Json arr = Json::array();
  for (const auto& [key, c] : x.terms()) {
    arr.push_back({{"alpha", path_to_json(x.graph(), key.first)},
                   {"beta", path_to_json(x.graph(), key.second)},
                   {"coeff", gaussian_to_json(c)}});
  }
  return arr;
}

Json vertex_list(const Graph& g, const std::vector<VertexId>& vs) {
  Json arr = Json::array();
  for (VertexId v : vs) arr.push_back(g.vertex_name(v));
  return arr;
}

Json integer_list(const std::vector<Integer>& xs) {
  Json arr = Json::array();
  for (const auto& x : xs) {
    if (!x.fits_slong_p()) throw std::overflow_error("integer too large for JSON output: " + x.get_str());
    arr.push_back(x.get_si());
  }
  return arr;
}

Json k0_class_to_json(const K0Class& c) { return Json{{"free", integer_list(c.free)}, {"torsion", integer_list(c.torsion)}}; }

std::string render(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace gtrace
