#include "c4count/certificate.hpp"

#include <algorithm>
#include <set>

#include <nlohmann/json.hpp>

#include "c4count/errors.hpp"

namespace c4count {

using nlohmann::ordered_json;

const std::vector<std::pair<std::string, Graph>>& tame_axioms() {
  static const std::vector<std::pair<std::string, Graph>> table = {
      {kK4SubdivisionAxiom, graphs::subdivision(graphs::complete(4))},
  };
  return table;
}

Graph replay(const TameCertificate& cert) {
  int n = 0;
  std::vector<Edge> edges;
  if (cert.base_vertices < 0) throw InputError("negative base vertex count");
  if (cert.base == TameCertificate::Base::kAxiom) {
    const auto& table = tame_axioms();
    auto it = std::find_if(table.begin(), table.end(),
                           [&](const auto& a) { return a.first == cert.axiom; });
    if (it == table.end()) throw InputError("unknown axiom '" + cert.axiom + "'");
    n = it->second.vertex_count();
    edges.assign(it->second.edges().begin(), it->second.edges().end());
  }
  n += cert.base_vertices;
  std::set<Edge> seen(edges.begin(), edges.end());
  auto add = [&](Vertex a, Vertex b) {
    if (!seen.insert(Edge(a, b)).second) {
      throw InputError("step creates a duplicate edge");
    }
    edges.emplace_back(a, b);
  };
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const TameStep& s = cert.steps[i];
    auto check = [&](Vertex x) {
      if (x < 0 || x >= n) {
        throw InputError("step " + std::to_string(i) + " refers to vertex " +
                         std::to_string(x) + " of a " + std::to_string(n) + "-vertex graph");
      }
    };
    check(s.u);
    if (s.rule == TameStep::Rule::kPendant) {
      add(s.u, n);
      n += 1;
    } else {
      check(s.v);
      add(s.u, n);
      add(n, n + 1);
      add(n + 1, s.v);
      n += 2;
    }
  }
  return Graph(n, std::move(edges));
}

Graph Part::local() const {
  const int m = static_cast<int>(vertices.size());
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= m) throw InputError("part edge index out of range");
  }
  return Graph(m, edges);
}

namespace {

ordered_json graph_json(const Graph& g) {
  ordered_json j;
  j["n"] = g.vertex_count();
  j["edges"] = ordered_json::array();
  for (const Edge& e : g.edges()) j["edges"].push_back({e.u, e.v});
  return j;
}

Graph graph_from_json(const ordered_json& j) {
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  return Graph(j.at("n").get<int>(), std::move(edges));
}

ordered_json tame_tree(const TameCertificate& c) {
  ordered_json j;
  j["rule"] = "tame";
  if (c.base == TameCertificate::Base::kEdgeless) {
    j["base"] = {{"type", "edgeless"}, {"vertices", c.base_vertices}};
  } else {
    j["base"] = {{"type", "axiom"}, {"name", c.axiom}, {"isolated", c.base_vertices}};
  }
  j["steps"] = ordered_json::array();
  for (const TameStep& s : c.steps) {
    if (s.rule == TameStep::Rule::kPendant) {
      j["steps"].push_back({{"rule", "pendant"}, {"attach", s.u}});
    } else {
      j["steps"].push_back({{"rule", "three_path"}, {"u", s.u}, {"v", s.v}});
    }
  }
  j["vertex_map"] = c.vertex_map;
  return j;
}

TameCertificate tame_from(const ordered_json& j) {
  TameCertificate c;
  const auto& base = j.at("base");
  std::string type = base.at("type").get<std::string>();
  if (type == "edgeless") {
    c.base = TameCertificate::Base::kEdgeless;
    c.base_vertices = base.at("vertices").get<int>();
  } else if (type == "axiom") {
    c.base = TameCertificate::Base::kAxiom;
    c.axiom = base.at("name").get<std::string>();
    c.base_vertices = base.value("isolated", 0);
  } else {
    throw InputError("unknown tame base '" + type + "'");
  }
  for (const auto& s : j.at("steps")) {
    std::string rule = s.at("rule").get<std::string>();
    if (rule == "pendant") {
      c.steps.push_back({TameStep::Rule::kPendant, s.at("attach").get<int>(), 0});
    } else if (rule == "three_path") {
      c.steps.push_back({TameStep::Rule::kThreePath, s.at("u").get<int>(), s.at("v").get<int>()});
    } else {
      throw InputError("unknown tame rule '" + rule + "'");
    }
  }
  if (j.contains("vertex_map")) c.vertex_map = j.at("vertex_map").get<std::vector<int>>();
  return c;
}

ordered_json part_json(const Part& p) {
  ordered_json j;
  j["vertices"] = p.vertices;
  j["edges"] = ordered_json::array();
  for (const Edge& e : p.edges) j["edges"].push_back({e.u, e.v});
  return j;
}

Part part_from(const ordered_json& j) {
  Part p;
  p.vertices = j.at("vertices").get<std::vector<int>>();
  for (const auto& e : j.at("edges")) p.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  return p;
}

ordered_json countable_tree(const CountableCertificate& c) {
  ordered_json j;
  switch (c.rule) {
    case CountableCertificate::Rule::kEdgeless:
      j["rule"] = "edgeless";
      j["vertices"] = c.vertices;
      break;
    case CountableCertificate::Rule::kPendant:
      j["rule"] = "pendant";
      j["leaf"] = c.leaf;
      j["parent"] = c.parent ? countable_tree(**c.parent) : ordered_json();
      break;
    case CountableCertificate::Rule::kIslandsBridges:
      j["rule"] = "islands_bridges";
      j["islands"] = ordered_json::array();
      for (const Island& is : c.islands) {
        ordered_json ij = part_json(is.part);
        ij["countable"] = countable_tree(*is.countable);
        ij["tame"] = is.tame ? tame_tree(*is.tame) : ordered_json();
        j["islands"].push_back(std::move(ij));
      }
      j["connectors"] = ordered_json::array();
      for (const ConnectorPart& cp : c.connectors) {
        ordered_json cj = part_json(cp.part);
        cj["ends"] = cp.ends;
        cj["countable"] = countable_tree(*cp.countable);
        cj["glued_tame"] = tame_tree(cp.glued_tame);
        j["connectors"].push_back(std::move(cj));
      }
      break;
  }
  return j;
}

CountableCertificate countable_from(const ordered_json& j) {
  CountableCertificate c;
  std::string rule = j.at("rule").get<std::string>();
  if (rule == "edgeless") {
    c.rule = CountableCertificate::Rule::kEdgeless;
    c.vertices = j.at("vertices").get<int>();
  } else if (rule == "pendant") {
    c.rule = CountableCertificate::Rule::kPendant;
    c.leaf = j.at("leaf").get<int>();
    if (!j.at("parent").is_null()) c.parent = Box<CountableCertificate>(countable_from(j.at("parent")));
  } else if (rule == "islands_bridges") {
    c.rule = CountableCertificate::Rule::kIslandsBridges;
    for (const auto& ij : j.at("islands")) {
      Island is;
      is.part = part_from(ij);
      is.countable = countable_from(ij.at("countable"));
      if (ij.contains("tame") && !ij.at("tame").is_null()) is.tame = tame_from(ij.at("tame"));
      c.islands.push_back(std::move(is));
    }
    for (const auto& cj : j.at("connectors")) {
      ConnectorPart cp;
      cp.part = part_from(cj);
      cp.ends = cj.at("ends").get<std::vector<int>>();
      cp.countable = countable_from(cj.at("countable"));
      cp.glued_tame = tame_from(cj.at("glued_tame"));
      c.connectors.push_back(std::move(cp));
    }
  } else {
    throw InputError("unknown countable rule '" + rule + "'");
  }
  return c;
}

std::string document(const Graph& target, const char* kind, ordered_json tree) {
  ordered_json j;
  j["schema"] = "c4count.certificate/1";
  j["kind"] = kind;
  j["target"] = graph_json(target);
  j["tree"] = std::move(tree);
  return j.dump(1);
}

}  // namespace

std::string certificate_json(const Graph& target, const TameCertificate& cert) {
  return document(target, "tame", tame_tree(cert));
}

std::string certificate_json(const Graph& target, const CountableCertificate& cert) {
  return document(target, "countable", countable_tree(cert));
}

CertificateDocument parse_certificate(const std::string& text) {
  try {
    ordered_json j = ordered_json::parse(text);
    if (j.at("schema").get<std::string>() != "c4count.certificate/1") {
      throw InputError("unsupported certificate schema");
    }
    CertificateDocument doc;
    doc.kind = j.at("kind").get<std::string>();
    doc.target = graph_from_json(j.at("target"));
    if (doc.kind == "tame") {
      doc.tame = tame_from(j.at("tree"));
    } else if (doc.kind == "countable") {
      doc.countable = countable_from(j.at("tree"));
    } else {
      throw InputError("unknown certificate kind '" + doc.kind + "'");
    }
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed certificate: ") + e.what());
  }
}

TameCertificate relabel(const TameCertificate& cert, const std::vector<Vertex>& perm) {
  TameCertificate out = cert;
  for (Vertex& v : out.vertex_map) v = perm.at(v);
  return out;
}

CountableCertificate relabel(const CountableCertificate& cert, const std::vector<Vertex>& perm) {
  CountableCertificate out = cert;
  switch (cert.rule) {
    case CountableCertificate::Rule::kEdgeless:
      break;
    case CountableCertificate::Rule::kPendant: {
      const Vertex leaf = cert.leaf;
      const Vertex new_leaf = perm.at(leaf);
      out.leaf = new_leaf;
      if (cert.parent) {
        std::vector<Vertex> sub(perm.size() - 1);
        for (Vertex w = 0; w < static_cast<Vertex>(perm.size()); ++w) {
          if (w == leaf) continue;
          Vertex nw = perm[w];
          sub[w - (w > leaf)] = nw - (nw > new_leaf);
        }
        out.parent = Box<CountableCertificate>(relabel(**cert.parent, sub));
      }
      break;
    }
    case CountableCertificate::Rule::kIslandsBridges:
      for (Island& is : out.islands)
        for (Vertex& v : is.part.vertices) v = perm.at(v);
      for (ConnectorPart& cp : out.connectors)
        for (Vertex& v : cp.part.vertices) v = perm.at(v);
      break;
  }
  return out;
}

}  // namespace c4count
