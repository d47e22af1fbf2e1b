#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "c4count/certify.hpp"
#include "c4count/corpus.hpp"
#include "c4count/edge_list.hpp"
#include "c4count/errors.hpp"
#include "c4count/harness.hpp"
#include "c4count/homcount.hpp"
#include "c4count/polarity.hpp"
#include "c4count/structure.hpp"
#include "c4count/version.hpp"
#include "manifest.hpp"

namespace c4count::cli {
namespace {

using nlohmann::ordered_json;

constexpr int kExitVerification = 2;
constexpr int kExitResource = 3;
constexpr int kExitInput = 4;

RunManifest manifest;

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  manifest.add_input(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Graph load_graph(const std::string& path, bool allow_loops = false) {
  return parse_edge_list(read_text(path), allow_loops);
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
  manifest.outputs.push_back(path);
}

Rational rational_from_json(const ordered_json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_number()) return rational_from_double(v.get<double>());
  throw InputError("expected a number or a rational string");
}

std::vector<Vertex> parse_list(const std::string& text) {
  std::vector<Vertex> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw InputError("bad list element '" + item + "'");
    }
  }
  return out;
}

/// {"0": [..n values..], ...}; unlisted pattern vertices get weight 1.
VertexWeights load_weights(const std::string& path, int pattern_vertices, int n) {
  try {
    ordered_json j = ordered_json::parse(read_text(path));
    std::vector<std::vector<Rational>> vals(pattern_vertices, std::vector<Rational>(n, Rational(1)));
    for (auto& [key, arr] : j.items()) {
      const int v = std::stoi(key);
      if (v < 0 || v >= pattern_vertices) throw InputError("weights: pattern vertex out of range");
      if (static_cast<int>(arr.size()) != n) throw InputError("weights: expected " + std::to_string(n) + " values");
      for (int x = 0; x < n; ++x) vals[v][x] = rational_from_json(arr.at(x));
    }
    return VertexWeights::from_rationals(n, std::move(vals));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("weights: ") + e.what());
  }
}

/// {"n": n, "constant": "2/3"} or {"n": n, "values": [[...], ...]}.
WeightedHost load_host(const std::string& path) {
  try {
    ordered_json j = ordered_json::parse(read_text(path));
    const int n = j.at("n").get<int>();
    if (j.contains("constant")) return WeightedHost::constant(n, rational_from_json(j.at("constant")));
    std::vector<Rational> vals;
    for (const auto& row : j.at("values"))
      for (const auto& v : row) vals.push_back(rational_from_json(v));
    return WeightedHost::from_rationals(n, std::move(vals));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("host: ") + e.what());
  }
}

ordered_json quadratic_json(const Quadratic& q) { return {{"exact", q.str()}, {"value", q.to_double()}}; }

ordered_json parse_json(const std::string& text) { return ordered_json::parse(text); }

SearchOptions search_options(std::uint64_t budget, bool no_axioms, bool no_memo) {
  SearchOptions o;
  o.budget = budget;
  o.allow_axioms = !no_axioms;
  o.memo = !no_memo;
  if (const char* cap = std::getenv("C4COUNT_MEMO_CAP")) {
    try {
      o.memo_cap = std::stoull(cap);
    } catch (const std::exception&) {
      throw InputError("C4COUNT_MEMO_CAP must be a nonnegative integer");
    }
  }
  return o;
}

int run_polarity(int q, bool loopless, bool verify, std::optional<std::uint64_t> break_seed,
                 const std::string& out, const std::string& report_path) {
  PolarityGraph p = build_polarity(q);
  int code = 0;
  if (verify) {
    PolarityReport r = verify_polarity(p);
    emit(report_path, r.to_json());
    if (!r.all_passed()) code = kExitVerification;
  }
  Graph g = loopless || break_seed ? p.loopless : p.g0;
  if (break_seed) {
    manifest.seed = *break_seed;
    g = triangle_break(g, *break_seed);
  }
  if (!out.empty()) emit(out, serialize_edge_list(g));
  return code;
}

int run_hom(const std::string& f_path, const std::string& g_path, const std::string& h_path,
            const std::string& w_path, const std::string& c_text, bool exact, bool allow_loops,
            const std::string& out) {
  Graph f = load_graph(f_path);
  std::optional<ScaledHost> host;
  if (!h_path.empty()) {
    host = ScaledHost::dense(load_host(h_path));
  } else {
    host = ScaledHost::sparse(load_graph(g_path, allow_loops), parse_rational(c_text));
  }
  const int n = host->size();
  VertexWeights alpha = w_path.empty() ? VertexWeights::ones(f.vertex_count(), n)
                                       : load_weights(w_path, f.vertex_count(), n);
  HomOptions opt;
  opt.mode = exact ? HomMode::kExact : HomMode::kFloat;
  HomResult r = hom_weighted(f, *host, alpha, opt);
  ordered_json j;
  j["schema"] = "c4count.hom/1";
  j["mode"] = exact ? "exact" : "float";
  j["pattern"] = {{"vertices", r.pattern_vertices}, {"edges", r.pattern_edges}};
  j["host"] = {{"n", r.host_size}, {"kind", r.sparse_host ? "sparse" : "dense"}};
  if (r.sparse_host) j["c"] = to_string(r.c);
  j["normalization"] = r.normalization();
  if (r.raw_exact) j["raw"] = to_string(*r.raw_exact);
  else j["raw"] = r.raw;
  if (r.value_exact) j["value"] = quadratic_json(*r.value_exact);
  else j["value"] = r.value;
  emit(out, j.dump(2));
  return 0;
}

ordered_json verdict_json(const Graph& f, const Verdict& v) {
  ordered_json j;
  j["schema"] = "c4count.verdict/1";
  j["kind"] = "countable";
  j["status"] = to_string(v.status);
  j["nodes"] = v.nodes;
  j["budget_exhausted"] = v.budget_exhausted;
  if (!v.witness.empty()) j["witness_cycle"] = v.witness;
  j["two_density_screen"] = {{"pass", v.screen.pass},
                             {"note", "conjectural necessary condition"},
                             {"witness", v.screen.witness}};
  j["graph"] = {{"n", f.vertex_count()}, {"m", f.edge_count()}};
  return j;
}

int run_certify_search(const std::string& mode, const std::string& g_path, std::uint64_t budget,
                       bool no_axioms, bool no_memo, const std::string& emit_path,
                       const std::string& out) {
  Graph f = load_graph(g_path);
  SearchOptions opt = search_options(budget, no_axioms, no_memo);
  if (mode == "tame") {
    TameSearchResult r = search_tame(f, opt);
    ordered_json j;
    j["schema"] = "c4count.verdict/1";
    j["kind"] = "tame";
    j["status"] = r.certificate ? "certified" : "unknown";
    j["nodes"] = r.nodes;
    j["budget_exhausted"] = r.budget_exhausted;
    j["axioms"] = !no_axioms;
    emit(out, j.dump(2));
    if (r.certificate && !emit_path.empty()) emit(emit_path, certificate_json(f, *r.certificate));
    return 0;
  }
  Verdict v = search_countable(f, opt);
  emit(out, verdict_json(f, v).dump(2));
  if (v.certificate && !emit_path.empty()) emit(emit_path, certificate_json(f, *v.certificate));
  return 0;
}

int run_certify_verify(const std::string& g_path, const std::string& cert_path, bool no_axioms) {
  Graph f = load_graph(g_path);
  CertificateDocument doc = parse_certificate(read_text(cert_path));
  CheckResult r = doc.countable ? verify_countable_cert(f, *doc.countable, !no_axioms)
                                : verify_tame_cert(f, *doc.tame, !no_axioms);
  ordered_json j;
  j["schema"] = "c4count.verify/1";
  j["kind"] = doc.kind;
  j["valid"] = r.ok;
  if (!r.ok) j["condition"] = r.condition, j["detail"] = r.detail;
  emit("-", j.dump(2));
  return r.ok ? 0 : kExitVerification;
}

int run_certify_refute(const std::string& g_path, const std::string& q_list, double threshold,
                       const std::string& out) {
  Graph f = load_graph(g_path);
  TameGrowthReport r = refute_tame_empirical(f, parse_list(q_list), threshold);
  ordered_json j;
  j["schema"] = "c4count.tame_growth/1";
  j["method"] = r.method;
  j["rows"] = ordered_json::array();
  for (const auto& row : r.rows)
    j["rows"].push_back({{"q", row.q}, {"n", row.n}, {"hom", row.hom.get_str()}, {"log_ratio", row.log_ratio}});
  j["slope"] = r.slope;
  j["intercept"] = r.intercept;
  j["threshold"] = r.threshold;
  j["empirically_not_tame"] = r.not_tame;
  emit(out, j.dump(2));
  return 0;
}

int run_certify_scale(const std::string& cert_path, const std::string& g_path) {
  CertificateDocument doc = parse_certificate(read_text(cert_path));
  if (!doc.countable) throw InputError("scale constant needs a countable certificate");
  Graph g = load_graph(g_path);
  ScaleConstant s = compute_scale_constant(*doc.countable, g);
  ordered_json j;
  j["schema"] = "c4count.scale/1";
  j["c"] = to_string(s.c);
  j["halvings"] = s.halvings;
  j["constrained_graphs"] = s.constrained.size();
  emit("-", j.dump(2));
  return 0;
}

Graph host_graph(const std::string& g_path, int q) {
  if (!g_path.empty()) return load_graph(g_path);
  if (q <= 0) throw InputError("give a host graph with -G or a field order with --q");
  return build_polarity(q).loopless;
}

int run_corpus_cmd(const std::string& dir, std::uint64_t budget, const std::string& only,
                   const std::string& report) {
  auto entries = load_corpus(dir);
  if (!only.empty()) {
    std::erase_if(entries, [&](const CorpusEntry& e) { return e.name != only; });
  }
  CorpusSummary s = run_corpus(entries, dir, search_options(budget, false, false));
  for (const auto& r : s.results) {
    std::cout << (r.pass() ? "PASS " : "FAIL ") << r.name << " [" << to_string(r.check)
              << "] expected=" << to_string(r.expected) << " actual=" << to_string(r.actual)
              << " nodes=" << r.nodes;
    if (!r.certificate_ok) std::cout << " certificate: " << r.certificate_detail;
    std::cout << "\n";
  }
  std::cout << s.results.size() << " entries, " << s.failures() << " failures\n";
  if (!report.empty()) emit(report, s.to_json());
  return s.ok() ? 0 : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"c4count: counting lemmas in C4-free graphs"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  std::string manifest_path;
  app.add_option("--manifest", manifest_path, "Write a run manifest (JSON) to this path");
  for (int i = 0; i < argc; ++i) manifest.command.emplace_back(argv[i]);

  std::function<int()> action;

  // polarity
  auto* pol = app.add_subcommand("polarity", "Build and check the polarity graph of PG(2,q)");
  int pol_q = 0;
  bool pol_loopless = false, pol_verify = false;
  std::optional<std::uint64_t> pol_break;
  std::string pol_out, pol_report;
  pol->add_option("--q", pol_q, "Prime power")->required();
  pol->add_flag("--loopless", pol_loopless, "Emit the loopless graph on q^2 vertices");
  pol->add_flag("--verify", pol_verify, "Run the exact structure checks");
  pol->add_option("--triangle-break", pol_break, "Delete one random edge per triangle (seed)");
  pol->add_option("-o,--output", pol_out, "Edge-list output path ('-' for stdout)");
  pol->add_option("--report", pol_report, "Verification report path (default stdout)");
  pol->callback([&] {
    action = [&] { return run_polarity(pol_q, pol_loopless, pol_verify, pol_break, pol_out, pol_report); };
  });

  // hom
  auto* hom = app.add_subcommand("hom", "Weighted homomorphism density t^a(F, g)");
  std::string hom_f, hom_g, hom_h, hom_w, hom_c = "1/2", hom_out;
  bool hom_exact = false, hom_loops = false;
  hom->add_option("-F,--pattern", hom_f, "Pattern edge list")->required();
  auto* hom_g_opt = hom->add_option("-G,--host", hom_g, "Sparse host edge list");
  auto* hom_h_opt = hom->add_option("--H", hom_h, "Dense host JSON instead of -G");
  hom_g_opt->excludes(hom_h_opt);
  hom->add_option("--weights", hom_w, "Vertex weights JSON");
  hom->add_option("--scaled", hom_c, "Scale c in g = c*sqrt(n)*G");
  hom->add_flag("--exact", hom_exact, "Exact rational arithmetic");
  hom->add_flag("--allow-loops", hom_loops, "Accept loops in the host");
  hom->add_option("-o,--output", hom_out, "Report path (default stdout)");
  hom->callback([&] {
    if (hom_g.empty() && hom_h.empty()) throw CLI::ValidationError("hom", "need -G or --H");
    action = [&] { return run_hom(hom_f, hom_g, hom_h, hom_w, hom_c, hom_exact, hom_loops, hom_out); };
  });

  // certify
  auto* cert = app.add_subcommand("certify", "Tameness and countability certificates");
  cert->require_subcommand(1);
  std::string cert_g, cert_emit, cert_out, cert_file, cert_q = "5,7,11,13,17,19,23", cert_host;
  std::uint64_t cert_budget = SearchOptions{}.budget;
  bool cert_no_axioms = false, cert_no_memo = false;
  double cert_threshold = 0.2;
  for (const char* mode : {"tame", "countable"}) {
    auto* sub = cert->add_subcommand(mode, std::string("Search for a ") + mode + " certificate");
    sub->add_option("-g,--graph", cert_g, "Graph edge list")->required();
    sub->add_option("--budget", cert_budget, "Search node budget");
    sub->add_flag("--no-axioms", cert_no_axioms, "Disallow axiom bases");
    sub->add_flag("--no-memo", cert_no_memo, "Disable memo tables");
    sub->add_option("--emit", cert_emit, "Write the certificate here");
    sub->add_option("-o,--output", cert_out, "Verdict path (default stdout)");
    std::string m = mode;
    sub->callback([&, m] {
      action = [&, m] {
        return run_certify_search(m, cert_g, cert_budget, cert_no_axioms, cert_no_memo, cert_emit, cert_out);
      };
    });
  }
  auto* verify = cert->add_subcommand("verify", "Check a certificate against a graph");
  verify->add_option("-g,--graph", cert_g, "Graph edge list")->required();
  verify->add_option("--cert", cert_file, "Certificate JSON")->required();
  verify->add_flag("--no-axioms", cert_no_axioms, "Reject axiom bases");
  verify->callback([&] { action = [&] { return run_certify_verify(cert_g, cert_file, cert_no_axioms); }; });
  auto* refute = cert->add_subcommand("refute", "Growth of hom(F, polarity) against n^(v - e/2)");
  refute->add_option("-g,--graph", cert_g, "Pattern edge list")->required();
  refute->add_option("--q", cert_q, "Comma-separated field orders");
  refute->add_option("--threshold", cert_threshold, "Slope above which F is flagged");
  refute->add_option("-o,--output", cert_out, "Report path (default stdout)");
  refute->callback([&] { action = [&] { return run_certify_refute(cert_g, cert_q, cert_threshold, cert_out); }; });
  auto* scale = cert->add_subcommand("scale", "Scale constant c for a certificate on a host");
  scale->add_option("--cert", cert_file, "Countable certificate JSON")->required();
  scale->add_option("-G,--host", cert_host, "Host edge list")->required();
  scale->callback([&] { action = [&] { return run_certify_scale(cert_file, cert_host); }; });

  // harness
  auto* har = app.add_subcommand("harness", "Numerical experiments");
  har->require_subcommand(1);
  std::string har_f, har_g, har_h, har_c = "1", har_report, har_j, har_ends, har_delta = "1/10", har_out;
  int har_q = 0, har_trials = 100, har_iters = 20, har_samples = 1000;
  std::uint64_t har_seed = 0;
  auto host_h = [&](const Graph& g) { return har_h.empty() ? constant_host(g) : load_host(har_h); };

  auto* counting = har->add_subcommand("counting", "Gap t^a(F,g) - t^a(F,H) over sampled weights");
  counting->add_option("-F,--pattern", har_f, "Pattern edge list")->required();
  counting->add_option("-G,--host", har_g, "Host edge list");
  counting->add_option("--q", har_q, "Use the loopless polarity graph");
  counting->add_option("--H", har_h, "Dense host JSON (default: constant h-bar)");
  counting->add_option("--c", har_c, "Scale c");
  counting->add_option("--trials", har_trials, "Trials");
  counting->add_option("--seed", har_seed, "Seed");
  counting->add_option("--report", har_report, "Report path (default stdout)");
  counting->callback([&] {
    action = [&] {
      manifest.seed = har_seed;
      Graph f = load_graph(har_f);
      Graph g = host_graph(har_g, har_q);
      GapReport r = counting_experiment(f, g, host_h(g), parse_rational(har_c), har_trials, har_seed);
      emit(har_report, to_json(r));
      return 0;
    };
  });

  auto* disc = har->add_subcommand("discrepancy", "Spectral upper and search lower bounds");
  disc->add_option("-G,--host", har_g, "Graph edge list");
  disc->add_option("--q", har_q, "Use the loopless polarity graph");
  disc->add_option("--H", har_h, "Dense host JSON (default: constant h-bar)");
  disc->add_option("--iters", har_iters, "Restarts");
  disc->add_option("--seed", har_seed, "Seed");
  disc->callback([&] {
    action = [&] {
      manifest.seed = har_seed;
      Graph g = host_graph(har_g, har_q);
      ordered_json j;
      j["schema"] = "c4count.discrepancy/1";
      j["spectral"] = parse_json(to_json(discrepancy_spectral(g)));
      j["search"] = parse_json(to_json(discrepancy_search(g, host_h(g), har_iters, har_seed)));
      emit("-", j.dump(2));
      return 0;
    };
  });

  auto* cex = har->add_subcommand("counterexample", "The C4 and triangle obstructions");
  std::string cex_kind;
  cex->add_option("kind", cex_kind, "c4 or triangle")->required()->check(CLI::IsMember({"c4", "triangle"}));
  cex->add_option("--q", har_q, "Prime power")->required();
  cex->add_option("--seed", har_seed, "Seed (triangle)");
  cex->add_option("--iters", har_iters, "Discrepancy restarts (triangle)");
  cex->callback([&] {
    action = [&] {
      if (cex_kind == "c4") {
        auto r = c4_counterexample(har_q);
        emit("-", to_json(r));
        return r.sparse_count == 0 && r.dense_density == r.expected ? 0 : kExitVerification;
      }
      manifest.seed = har_seed;
      auto r = triangle_counterexample(har_q, har_seed, har_iters);
      emit("-", to_json(r));
      return r.triangle_homs == 0 ? 0 : kExitVerification;
    };
  });

  auto* trim_cmd = har->add_subcommand("trim", "Drop edges at vertices of degree above 2 sqrt(n)");
  trim_cmd->add_option("-G,--host", har_g, "Graph edge list")->required();
  trim_cmd->add_option("--H", har_h, "Dense host JSON (default: constant h-bar)");
  trim_cmd->add_option("--samples", har_samples, "Random (A,B) pairs to check");
  trim_cmd->add_option("--seed", har_seed, "Seed");
  trim_cmd->add_option("-o,--output", har_out, "Trimmed edge list");
  trim_cmd->callback([&] {
    action = [&] {
      manifest.seed = har_seed;
      Graph g = load_graph(har_g);
      TrimReport r = trim(g, host_h(g), har_samples, har_seed);
      emit("-", to_json(r));
      if (!har_out.empty()) emit(har_out, serialize_edge_list(r.trimmed));
      return r.all_hold() ? 0 : kExitVerification;
    };
  });

  auto* trunc = har->add_subcommand("truncation", "Truncation inequality and gluing identity");
  trunc->add_option("-J,--pattern", har_j, "Connector edge list")->required();
  trunc->add_option("--ends", har_ends, "Comma-separated ends")->required();
  trunc->add_option("-G,--host", har_g, "Host edge list");
  trunc->add_option("--q", har_q, "Use the loopless polarity graph");
  trunc->add_option("--delta", har_delta, "delta");
  trunc->add_option("--c", har_c, "Scale c");
  trunc->callback([&] {
    action = [&] {
      RootedPattern j{load_graph(har_j), parse_list(har_ends)};
      std::sort(j.ends.begin(), j.ends.end());
      TruncationReport r = truncation_check(j, host_graph(har_g, har_q), parse_rational(har_delta),
                                            parse_rational(har_c));
      emit("-", to_json(r));
      return r.markov_holds && r.gluing_holds ? 0 : kExitVerification;
    };
  });

  // corpus
  auto* corp = app.add_subcommand("corpus", "Bundled example graphs and expected verdicts");
  corp->require_subcommand(1);
  std::string corp_dir = "corpus", corp_only, corp_report;
  std::uint64_t corp_budget = SearchOptions{}.budget;
  bool corp_no_certs = false;
  auto* corp_run = corp->add_subcommand("run", "Check every entry against its expected verdict");
  corp_run->add_option("--dir", corp_dir, "Corpus directory");
  corp_run->add_option("--budget", corp_budget, "Search node budget");
  corp_run->add_option("--only", corp_only, "Run a single entry");
  corp_run->add_option("--report", corp_report, "JSON summary path");
  corp_run->callback([&] { action = [&] { return run_corpus_cmd(corp_dir, corp_budget, corp_only, corp_report); }; });
  auto* corp_write = corp->add_subcommand("write", "Write the built-in corpus");
  corp_write->add_option("--dir", corp_dir, "Corpus directory");
  corp_write->add_flag("--no-certificates", corp_no_certs, "Skip certificate generation");
  corp_write->callback([&] {
    action = [&] {
      write_corpus(corp_dir, builtin_corpus(), !corp_no_certs, search_options(corp_budget, false, false));
      manifest.outputs.push_back(corp_dir);
      return 0;
    };
  });

  // dot
  auto* dot = app.add_subcommand("dot", "Graphviz export");
  std::string dot_g, dot_ends, dot_out;
  dot->add_option("-g,--graph", dot_g, "Graph edge list")->required();
  dot->add_option("--ends", dot_ends, "Comma-separated vertices drawn as ends");
  dot->add_option("-o,--output", dot_out, "Output path (default stdout)");
  dot->callback([&] {
    action = [&] {
      Graph g = load_graph(dot_g, true);
      auto ends = parse_list(dot_ends);
      emit(dot_out, to_dot(g, ends));
      return 0;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  int code = 0;
  try {
    code = action();
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    code = kExitResource;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    code = kExitInput;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    code = kExitInput;
  }
  if (!manifest_path.empty()) {
    std::ofstream out(manifest_path, std::ios::binary);
    out << manifest.to_json() << "\n";
  }
  return code;
}

}  // namespace c4count::cli

int main(int argc, char** argv) { return c4count::cli::main(argc, argv); }
