#include "c4count/corpus.hpp"

#include <chrono>
#include <fstream>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "c4count/canonical.hpp"
#include "c4count/errors.hpp"

namespace c4count {

using nlohmann::ordered_json;

namespace graphs {
namespace {

struct Builder {
  std::map<std::string, Vertex> ids;
  std::vector<Edge> edges;

  Vertex id(const std::string& name) {
    auto [it, fresh] = ids.emplace(name, static_cast<Vertex>(ids.size()));
    return it->second;
  }
  // "a-b-c" adds the path a, b, c.
  void path(const std::string& spec) {
    std::stringstream in(spec);
    std::string prev, cur;
    std::getline(in, prev, '-');
    while (std::getline(in, cur, '-')) {
      edges.emplace_back(id(prev), id(cur));
      prev = cur;
    }
  }
  Graph build() const { return Graph(static_cast<int>(ids.size()), edges); }
};

}  // namespace

Graph tame_sequence(int step) {
  static const char* paths[] = {"r-u-l-d-r", "r-ru-ruu-uu-u", "l-lu-luu-uu", "r-rd-rdd-dd-d",
                                "l-ld-ldd-dd"};
  if (step < 0 || step > 4) throw InputError("tame_sequence: step must be in 0..4");
  Builder b;
  for (int i = 0; i <= step; ++i) b.path(paths[i]);
  return b.build();
}

Graph c5_chain(int k) {
  if (k < 1) throw InputError("c5_chain: need at least one cycle");
  std::vector<Edge> edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}};
  Vertex a = 3, b = 4;
  int n = 5;
  for (int i = 1; i < k; ++i) {
    const Vertex a2 = n, b2 = n + 1, w = n + 2;
    edges.insert(edges.end(), {{a, a2}, {a2, b2}, {b2, w}, {w, b}});
    a = a2;
    b = b2;
    n += 3;
  }
  return Graph(n, std::move(edges));
}

RootedPattern c5pair_connector() { return {c5_chain(2), {0, 7}}; }

Graph c5pair_with_path() {
  Graph base = c5_chain(2);
  std::vector<Edge> edges(base.edges().begin(), base.edges().end());
  edges.insert(edges.end(), {{0, 8}, {8, 9}, {9, 7}});
  return Graph(10, std::move(edges));
}

Graph c5pair_extended() {
  Graph base = c5pair_with_path();
  std::vector<Edge> edges(base.edges().begin(), base.edges().end());
  edges.insert(edges.end(), {{9, 10}, {10, 11}, {11, 6}});
  return Graph(12, std::move(edges));
}

Graph c5_pair_by_paths() {
  // a_i = i, d_i = 5 + i, b_i = 10 + i, c_i = 15 + i.
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    const int j = (i + 1) % 5;
    edges.emplace_back(i, j);
    edges.emplace_back(5 + i, 5 + j);
    edges.emplace_back(i, 10 + i);
    edges.emplace_back(10 + i, 5 + i);
    edges.emplace_back(i, 15 + i);
    edges.emplace_back(15 + i, 5 + j);
  }
  return Graph(20, std::move(edges));
}

std::vector<Graph> all_trees(int max_vertices) {
  std::vector<Graph> out;
  if (max_vertices < 1) return out;
  std::vector<Graph> level = {Graph(1)};
  out = level;
  for (int n = 2; n <= max_vertices; ++n) {
    std::map<CanonicalForm, Graph> next;
    for (const Graph& t : level) {
      for (Vertex v = 0; v < t.vertex_count(); ++v) {
        std::vector<Edge> edges(t.edges().begin(), t.edges().end());
        edges.emplace_back(v, n - 1);
        Graph grown(n, std::move(edges));
        next.emplace(canonical_form(grown), std::move(grown));
      }
    }
    level.clear();
    for (auto& [form, g] : next) level.push_back(std::move(g));
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace graphs

std::string to_string(CorpusCheck c) {
  switch (c) {
    case CorpusCheck::kCountable:
      return "countable";
    case CorpusCheck::kTame:
      return "tame";
    case CorpusCheck::kTameNoAxioms:
      return "tame_no_axioms";
  }
  return "countable";
}

CorpusCheck corpus_check_from_string(const std::string& s) {
  if (s == "countable") return CorpusCheck::kCountable;
  if (s == "tame") return CorpusCheck::kTame;
  if (s == "tame_no_axioms") return CorpusCheck::kTameNoAxioms;
  throw InputError("unknown corpus check '" + s + "'");
}

std::vector<CorpusEntry> builtin_corpus() {
  using V = VerdictStatus;
  std::vector<CorpusEntry> out;
  auto add = [&](std::string name, Graph g, CorpusCheck check, V expected, std::string figure) {
    out.push_back({std::move(name), std::move(g), check, expected, {}, std::move(figure)});
  };
  for (int l = 3; l <= 12; ++l) {
    add("C" + std::to_string(l), graphs::cycle(l), CorpusCheck::kCountable,
        l <= 4 ? V::kRefutedGirth : V::kCertified, "cycles");
    add("C" + std::to_string(l) + "_tame", graphs::cycle(l), CorpusCheck::kTame, V::kCertified,
        "cycles");
  }
  const auto trees = graphs::all_trees(10);
  for (std::size_t i = 0; i < trees.size(); ++i) {
    add("tree_" + std::to_string(trees[i].vertex_count()) + "_" + std::to_string(i), trees[i],
        CorpusCheck::kCountable, V::kCertified, "trees");
  }
  for (int s = 0; s <= 4; ++s) {
    add("tame_sequence_" + std::to_string(s), graphs::tame_sequence(s), CorpusCheck::kTame,
        V::kCertified, "tame sequence");
  }
  add("K4", graphs::complete(4), CorpusCheck::kCountable, V::kRefutedGirth, "girth obstruction");
  add("K23", graphs::complete_bipartite(2, 3), CorpusCheck::kCountable, V::kRefutedGirth,
      "girth obstruction");
  add("K23_tame", graphs::complete_bipartite(2, 3), CorpusCheck::kTame, V::kUnknown,
      "non-tame K_{2,3}");
  add("K4_subdivision_tame", graphs::subdivision(graphs::complete(4)), CorpusCheck::kTame,
      V::kCertified, "subdivided cliques");
  add("K4_subdivision_tame_no_axioms", graphs::subdivision(graphs::complete(4)),
      CorpusCheck::kTameNoAxioms, V::kUnknown, "subdivided cliques");
  add("K4_subdivision", graphs::subdivision(graphs::complete(4)), CorpusCheck::kCountable,
      V::kCertified, "subdivided cliques");
  add("K5_subdivision", graphs::subdivision(graphs::complete(5)), CorpusCheck::kCountable,
      V::kCertified, "subdivided cliques");
  add("c5_chain_2", graphs::c5_chain(2), CorpusCheck::kCountable, V::kCertified,
      "five-cycle chains");
  add("c5_chain_2_tame", graphs::c5_chain(2), CorpusCheck::kTame, V::kCertified,
      "five-cycle chains");
  add("c5_chain_3", graphs::c5_chain(3), CorpusCheck::kCountable, V::kCertified,
      "five-cycle chains");
  add("c5_chain_3_tame", graphs::c5_chain(3), CorpusCheck::kTame, V::kCertified,
      "five-cycle chains");
  add("c5pair_glued_tame", glue(graphs::c5pair_connector()), CorpusCheck::kTame, V::kCertified,
      "five-cycle pair connector, glued");
  add("c5pair_with_path", graphs::c5pair_with_path(), CorpusCheck::kCountable, V::kCertified,
      "five-cycle pair connector plus 2-path connector");
  add("c5pair_extended", graphs::c5pair_extended(), CorpusCheck::kCountable, V::kCertified,
      "extended five-cycle pair connector");
  add("c5_pair_by_paths", graphs::c5_pair_by_paths(), CorpusCheck::kCountable, V::kCertified,
      "two five-cycles joined by 2-paths");
  add("petersen", graphs::petersen(), CorpusCheck::kCountable, V::kUnknown, "open cases");
  add("dodecahedron", graphs::dodecahedron(), CorpusCheck::kCountable, V::kUnknown, "open cases");
  return out;
}

namespace {

ordered_json graph_json(const Graph& g) {
  ordered_json j;
  j["n"] = g.vertex_count();
  j["edges"] = ordered_json::array();
  for (const Edge& e : g.edges()) j["edges"].push_back({e.u, e.v});
  return j;
}

Graph graph_from(const ordered_json& j) {
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  return Graph(j.at("n").get<int>(), std::move(edges));
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw InputError("cannot open " + p.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Outcome {
  VerdictStatus status = VerdictStatus::kUnknown;
  std::uint64_t nodes = 0;
  std::string certificate;  // JSON when certified
};

Outcome run_check(const CorpusEntry& e, const SearchOptions& base) {
  Outcome out;
  SearchOptions opt = base;
  if (e.check == CorpusCheck::kCountable) {
    Verdict v = search_countable(e.graph, opt);
    out.status = v.status;
    out.nodes = v.nodes;
    if (v.certificate) out.certificate = certificate_json(e.graph, *v.certificate);
    return out;
  }
  opt.allow_axioms = e.check == CorpusCheck::kTame;
  TameSearchResult r = search_tame(e.graph, opt);
  out.nodes = r.nodes;
  if (r.certificate) {
    out.status = VerdictStatus::kCertified;
    out.certificate = certificate_json(e.graph, *r.certificate);
  }
  return out;
}

}  // namespace

std::vector<CorpusEntry> load_corpus(const std::filesystem::path& dir) {
  const auto path = dir / "corpus.json";
  if (!std::filesystem::exists(path)) throw InputError("corpus file missing: " + path.string());
  try {
    ordered_json j = ordered_json::parse(read_file(path));
    if (j.at("schema").get<std::string>() != "c4count.corpus/1") {
      throw InputError("unsupported corpus schema");
    }
    std::vector<CorpusEntry> out;
    for (const auto& e : j.at("entries")) {
      CorpusEntry c;
      c.name = e.at("name").get<std::string>();
      c.graph = graph_from(e.at("graph"));
      c.check = corpus_check_from_string(e.at("check").get<std::string>());
      c.expected = verdict_status_from_string(e.at("expected").get<std::string>());
      c.certificate = e.value("certificate", "");
      c.figure = e.value("figure", "");
      out.push_back(std::move(c));
    }
    return out;
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("malformed corpus: ") + ex.what());
  }
}

void write_corpus(const std::filesystem::path& dir, std::vector<CorpusEntry> entries,
                  bool certificates, const SearchOptions& options) {
  std::filesystem::create_directories(dir);
  if (certificates) std::filesystem::create_directories(dir / "certificates");
  ordered_json j;
  j["schema"] = "c4count.corpus/1";
  j["entries"] = ordered_json::array();
  for (CorpusEntry& e : entries) {
    // Trees are certified by peeling alone; only composite graphs get files.
    const bool bundle = certificates && e.expected == VerdictStatus::kCertified &&
                        e.figure != "trees";
    if (bundle) {
      Outcome o = run_check(e, options);
      if (o.status != VerdictStatus::kCertified) {
        throw InputError("corpus entry " + e.name + " did not certify");
      }
      e.certificate = "certificates/" + e.name + ".json";
      std::ofstream out(dir / e.certificate, std::ios::binary);
      out << o.certificate << "\n";
    }
    ordered_json ej;
    ej["name"] = e.name;
    ej["check"] = to_string(e.check);
    ej["expected"] = to_string(e.expected);
    ej["figure"] = e.figure;
    if (!e.certificate.empty()) ej["certificate"] = e.certificate;
    ej["graph"] = graph_json(e.graph);
    j["entries"].push_back(std::move(ej));
  }
  std::ofstream out(dir / "corpus.json", std::ios::binary);
  out << j.dump(1) << "\n";
}

int CorpusSummary::failures() const {
  int f = 0;
  for (const auto& r : results) f += !r.pass();
  return f;
}

std::string CorpusSummary::to_json() const {
  ordered_json j;
  j["schema"] = "c4count.corpus_run/1";
  j["entries"] = static_cast<int>(results.size());
  j["failures"] = failures();
  j["results"] = ordered_json::array();
  for (const auto& r : results) {
    j["results"].push_back({{"name", r.name},
                            {"check", c4count::to_string(r.check)},
                            {"expected", c4count::to_string(r.expected)},
                            {"actual", c4count::to_string(r.actual)},
                            {"certificate_ok", r.certificate_ok},
                            {"certificate_detail", r.certificate_detail},
                            {"nodes", r.nodes},
                            {"pass", r.pass()}});
  }
  return j.dump(2);
}

CorpusSummary run_corpus(const std::vector<CorpusEntry>& entries, const std::filesystem::path& dir,
                         const SearchOptions& options) {
  CorpusSummary summary;
  for (const CorpusEntry& e : entries) {
    CorpusResult r;
    r.name = e.name;
    r.check = e.check;
    r.expected = e.expected;
    const auto start = std::chrono::steady_clock::now();
    Outcome o = run_check(e, options);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.actual = o.status;
    r.nodes = o.nodes;
    if (!e.certificate.empty()) {
      try {
        CertificateDocument doc = parse_certificate(read_file(dir / e.certificate));
        if (!(doc.target == e.graph)) {
          r.certificate_ok = false;
          r.certificate_detail = "certificate target differs from the entry graph";
        } else {
          const bool axioms = e.check != CorpusCheck::kTameNoAxioms;
          CheckResult c = doc.countable ? verify_countable_cert(e.graph, *doc.countable, axioms)
                                        : verify_tame_cert(e.graph, *doc.tame, axioms);
          r.certificate_ok = c.ok;
          if (!c.ok) r.certificate_detail = "[" + c.condition + "] " + c.detail;
        }
      } catch (const InputError& ex) {
        r.certificate_ok = false;
        r.certificate_detail = ex.what();
      }
    }
    summary.results.push_back(std::move(r));
  }
  return summary;
}

}  // namespace c4count
