#include "c4count/harness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "c4count/edge_list.hpp"
#include "c4count/errors.hpp"
#include "c4count/homcount.hpp"
#include "c4count/polarity.hpp"
#include "c4count/random.hpp"
#include "c4count/structure.hpp"

namespace c4count {
namespace {

using nlohmann::ordered_json;

constexpr int kSpectralLimit = 10000;

Eigen::MatrixXd adjacency(const Graph& g) {
  const int n = g.vertex_count();
  if (n > kSpectralLimit) {
    throw ResourceError("dense eigensolver limited to " + std::to_string(kSpectralLimit) +
                        " vertices");
  }
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const Edge& e : g.edges()) {
    a(e.u, e.v) = 1.0;
    a(e.v, e.u) = 1.0;
  }
  return a;
}

std::vector<Rational> exact_entries(const WeightedHost& h) {
  if (h.has_exact()) {
    auto v = h.exact_values();
    return {v.begin(), v.end()};
  }
  std::vector<Rational> out;
  out.reserve(h.values().size());
  for (double x : h.values()) out.push_back(rational_from_double(x));
  return out;
}

std::vector<Vertex> members(const std::vector<char>& in) {
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < in.size(); ++v)
    if (in[v]) out.push_back(static_cast<Vertex>(v));
  return out;
}

std::int64_t count_edges(const Graph& g, const std::vector<char>& a, const std::vector<char>& b) {
  std::int64_t total = 0;
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    if (!a[x]) continue;
    for (Vertex y : g.neighbors(x)) total += b[y];
  }
  return total;
}

double weight_sum(const WeightedHost& h, const std::vector<char>& a, const std::vector<char>& b) {
  const int n = h.size();
  double total = 0.0;
  for (int x = 0; x < n; ++x) {
    if (!a[x]) continue;
    for (int y = 0; y < n; ++y)
      if (b[y]) total += h.at(x, y);
  }
  return total;
}

DiscrepancyWitness evaluate(const Graph& g, const WeightedHost& h, const std::vector<char>& a,
                            const std::vector<char>& b) {
  const double n = g.vertex_count();
  DiscrepancyWitness w;
  w.a = members(a);
  w.b = members(b);
  w.e_g = count_edges(g, a, b);
  w.e_h = weight_sum(h, a, b);
  w.gap = n > 0 ? std::abs(static_cast<double>(w.e_g) / std::pow(n, 1.5) - w.e_h / (n * n)) : 0.0;
  return w;
}

// Best response to `fixed`: every vertex whose marginal has sign `sign`.
std::vector<char> best_response(const Graph& g, const WeightedHost& h,
                                const std::vector<char>& fixed, int sign) {
  const int n = g.vertex_count();
  const double root = std::sqrt(static_cast<double>(n));
  std::vector<char> out(n, 0);
  for (int y = 0; y < n; ++y) {
    double s = 0.0;
    for (Vertex x : g.neighbors(y)) s += fixed[x] * root;
    for (int x = 0; x < n; ++x)
      if (fixed[x]) s -= h.at(x, y);
    out[y] = sign * s > 0;
  }
  return out;
}

std::vector<char> random_subset(Rng& rng, int n) {
  std::vector<char> s(n);
  for (auto& x : s) x = rng.coin();
  return s;
}

ordered_json graph_json(const Graph& g) {
  ordered_json j;
  j["n"] = g.vertex_count();
  j["edges"] = ordered_json::array();
  for (const Edge& e : g.edges()) j["edges"].push_back({e.u, e.v});
  return j;
}

ordered_json quadratic_json(const Quadratic& x) {
  return {{"exact", x.str()}, {"value", x.to_double()}};
}

ordered_json witness_json(const DiscrepancyWitness& w) {
  return {{"A", w.a}, {"B", w.b}, {"e_G", w.e_g}, {"e_H", w.e_h}, {"gap", w.gap}};
}

ordered_json search_json(const DiscrepancySearch& r) {
  return {{"iters", r.iters}, {"seed", r.seed}, {"lower", r.best.gap},
          {"witness", witness_json(r.best)}};
}

std::string dump(ordered_json j, const char* schema) {
  ordered_json out;
  out["schema"] = schema;
  for (auto& [k, v] : j.items()) out[k] = v;
  return out.dump(2);
}

}  // namespace

std::vector<double> adjacency_spectrum(const Graph& g) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(adjacency(g), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw ResourceError("eigensolver did not converge");
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

SpectralDiscrepancy discrepancy_spectral(const Graph& g) {
  if (g.loop_count() > 0) throw InputError("discrepancy: graph has loops");
  SpectralDiscrepancy r;
  r.n = g.vertex_count();
  if (r.n == 0) return r;
  const double n = r.n;
  r.mean_degree = 2.0 * g.edge_count() / n;
  Eigen::MatrixXd m = adjacency(g);
  m.array() -= r.mean_degree / n;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw ResourceError("eigensolver did not converge");
  r.lambda = solver.eigenvalues().cwiseAbs().maxCoeff();
  r.delta_up = r.lambda / std::sqrt(n);
  r.h_bar = std::min(1.0, r.mean_degree / std::sqrt(n));
  return r;
}

WeightedHost constant_host(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return WeightedHost::constant(0, 0);
  const std::int64_t root = exact_sqrt(n);
  Rational value = root > 0 ? Rational(2 * g.edge_count(), static_cast<long>(n) * root)
                            : rational_from_double(discrepancy_spectral(g).h_bar);
  value.canonicalize();
  if (value > 1) value = 1;
  return WeightedHost::constant(n, value);
}

DiscrepancySearch discrepancy_search(const Graph& g, const WeightedHost& h, int iters,
                                     std::uint64_t seed) {
  const int n = g.vertex_count();
  if (h.size() != n) throw InputError("discrepancy: host size differs from graph");
  if (g.loop_count() > 0) throw InputError("discrepancy: graph has loops");
  DiscrepancySearch out;
  out.iters = iters;
  out.seed = seed;
  Rng root(seed);
  {
    Rng start = root.split("start");
    auto a = random_subset(start, n);
    auto b = random_subset(start, n);
    out.best = evaluate(g, h, a, b);
  }
  for (int it = 0; it < iters; ++it) {
    Rng rng = root.split(static_cast<std::uint64_t>(it));
    auto start = random_subset(rng, n);
    for (int sign : {1, -1}) {
      auto a = start;
      auto b = best_response(g, h, a, sign);
      for (int round = 0; round < 100; ++round) {
        auto a2 = best_response(g, h, b, sign);
        auto b2 = best_response(g, h, a2, sign);
        bool stable = a2 == a && b2 == b;
        a = std::move(a2);
        b = std::move(b2);
        if (stable) break;
      }
      auto w = evaluate(g, h, a, b);
      if (w.gap > out.best.gap) out.best = std::move(w);
    }
  }
  return out;
}

WeightedHost partition_host(const Graph& g, const std::vector<std::vector<Vertex>>& parts) {
  const int n = g.vertex_count();
  const int k = static_cast<int>(parts.size());
  std::vector<int> part_of(n, -1);
  for (int p = 0; p < k; ++p) {
    if (parts[p].empty()) throw InputError("partition_host: empty part " + std::to_string(p));
    for (Vertex v : parts[p]) {
      if (v < 0 || v >= n) throw InputError("partition_host: vertex out of range");
      if (part_of[v] >= 0) throw InputError("partition_host: parts overlap");
      part_of[v] = p;
    }
  }
  for (int v = 0; v < n; ++v)
    if (part_of[v] < 0) throw InputError("partition_host: vertex " + std::to_string(v) + " not covered");
  std::vector<std::int64_t> between(static_cast<std::size_t>(k) * k, 0);
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) continue;
    ++between[part_of[e.u] * k + part_of[e.v]];
    ++between[part_of[e.v] * k + part_of[e.u]];
  }
  const std::int64_t root = exact_sqrt(n);
  if (root > 0) {
    std::vector<Rational> vals(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        const int p = part_of[x], q = part_of[y];
        Rational r(between[p * k + q] * root,
                   static_cast<long>(parts[p].size()) * static_cast<long>(parts[q].size()));
        r.canonicalize();
        vals[static_cast<std::size_t>(x) * n + y] = r > 1 ? Rational(1) : r;
      }
    return WeightedHost::from_rationals(n, std::move(vals));
  }
  const double sq = std::sqrt(static_cast<double>(n));
  std::vector<double> vals(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int p = part_of[x], q = part_of[y];
      double v = sq * between[p * k + q] / (static_cast<double>(parts[p].size()) * parts[q].size());
      vals[static_cast<std::size_t>(x) * n + y] = std::min(1.0, v);
    }
  return WeightedHost::from_doubles(n, std::move(vals));
}

std::string to_string(WeightFamily f) {
  switch (f) {
    case WeightFamily::kOnes:
      return "ones";
    case WeightFamily::kDisjointIndicators:
      return "disjoint_indicators";
    case WeightFamily::kUniform:
      return "uniform";
  }
  return "ones";
}

GapReport counting_experiment(const Graph& f, const Graph& g, const WeightedHost& h,
                              const Rational& c, int trials, std::uint64_t seed) {
  const int n = g.vertex_count();
  const int k = f.vertex_count();
  if (h.size() != n) throw InputError("counting: host size differs from graph");
  if (trials < 1) throw InputError("counting: need at least one trial");
  GapReport report;
  report.pattern = f;
  report.n = n;
  report.c = c;
  report.seed = seed;
  const ScaledHost sparse = ScaledHost::sparse(g, c);
  const ScaledHost dense = ScaledHost::dense(h);
  const Rng root(seed);
  std::optional<GapTrial> ones;
  report.min_gap_by_family.assign(3, std::numeric_limits<double>::infinity());
  for (int i = 0; i < trials; ++i) {
    GapTrial t;
    t.index = i;
    t.family = static_cast<WeightFamily>(i % 3);
    if (t.family == WeightFamily::kOnes && ones) {
      t.t_sparse = ones->t_sparse;
      t.t_dense = ones->t_dense;
    } else {
      Rng rng = root.split(static_cast<std::uint64_t>(i));
      VertexWeights alpha;
      if (t.family == WeightFamily::kOnes) {
        alpha = VertexWeights::ones(k, n);
      } else if (t.family == WeightFamily::kDisjointIndicators) {
        std::vector<std::vector<Vertex>> sets(k);
        for (Vertex x = 0; x < n && k > 0; ++x) sets[rng.below(k)].push_back(x);
        alpha = VertexWeights::indicators(n, sets);
      } else {
        std::vector<std::vector<double>> vals(k, std::vector<double>(n));
        for (auto& row : vals)
          for (double& v : row) v = rng.uniform();
        alpha = VertexWeights::from_doubles(n, std::move(vals));
      }
      t.t_sparse = hom_weighted(f, sparse, alpha).value;
      t.t_dense = hom_weighted(f, dense, alpha).value;
    }
    t.gap = t.t_sparse - t.t_dense;
    if (t.family == WeightFamily::kOnes) ones = t;
    auto& fam = report.min_gap_by_family[static_cast<int>(t.family)];
    fam = std::min(fam, t.gap);
    report.trials.push_back(t);
  }
  report.min_gap = report.trials.front().gap;
  for (const auto& t : report.trials) report.min_gap = std::min(report.min_gap, t.gap);
  return report;
}

C4CounterexampleReport c4_counterexample(int q) {
  C4CounterexampleReport r;
  r.q = q;
  Graph g = build_polarity(q).loopless;
  r.n = g.vertex_count();
  r.host_c4_free = is_c4_free(g);
  const int m = r.n / 4;
  std::vector<std::vector<Vertex>> sets(4);
  for (int i = 0; i < 4; ++i)
    for (int v = i * m; v < (i + 1) * m; ++v) sets[i].push_back(v);
  const Graph c4 = graphs::cycle(4);
  const VertexWeights alpha = VertexWeights::indicators(r.n, sets);
  HomOptions exact{HomMode::kExact, 0};
  auto sparse = hom_weighted(c4, ScaledHost::sparse(g, Rational(1)), alpha, exact);
  auto dense = hom_weighted(c4, ScaledHost::dense(WeightedHost::constant(r.n, 1)), alpha, exact);
  r.sparse_count = sparse.raw_exact->get_num();
  r.dense_count = dense.raw_exact->get_num();
  r.dense_density = dense.value_exact->rational_part();
  BigInt n4, m4;
  mpz_ui_pow_ui(n4.get_mpz_t(), r.n, 4);
  mpz_ui_pow_ui(m4.get_mpz_t(), m, 4);
  r.expected = Rational(m4, n4);
  r.expected.canonicalize();
  return r;
}

TriangleCounterexampleReport triangle_counterexample(int q, std::uint64_t seed,
                                                     int discrepancy_iters) {
  TriangleCounterexampleReport r;
  r.q = q;
  r.seed = seed;
  Graph g = build_polarity(q).loopless;
  Graph broken = triangle_break(g, seed);
  r.n = g.vertex_count();
  r.edges_before = g.edge_count();
  r.edges_after = broken.edge_count();
  r.triangle_homs = hom_count(graphs::cycle(3), broken);
  const WeightedHost h = WeightedHost::constant(r.n, Rational(2, 3));
  auto dense = hom_weighted(graphs::cycle(3), ScaledHost::dense(h),
                            VertexWeights::ones(3, r.n), HomOptions{HomMode::kExact, 0});
  r.dense_density = dense.value_exact->rational_part();
  r.discrepancy = discrepancy_search(broken, h, discrepancy_iters, Rng(seed).split("discrepancy").seed());
  return r;
}

TrimReport trim(const Graph& g, const WeightedHost& h, int samples, std::uint64_t seed) {
  const int n = g.vertex_count();
  if (h.size() != n) throw InputError("trim: host size differs from graph");
  if (g.loop_count() > 0) throw InputError("trim: graph has loops");
  TrimReport r;
  std::vector<char> in_s(n, 1);
  for (Vertex v = 0; v < n; ++v) {
    const std::int64_t d = g.degree(v);
    if (d * d > 4 * static_cast<std::int64_t>(n)) {
      in_s[v] = 0;
      r.removed.push_back(v);
    }
  }
  std::vector<Edge> kept;
  for (const Edge& e : g.edges())
    if (in_s[e.u] && in_s[e.v]) kept.push_back(e);
  r.removed_edges = g.edge_count() - static_cast<int>(kept.size());
  r.trimmed = g.with_edges(std::move(kept));

  // Host entries over a common denominator so that e_H sums are integers.
  const auto exact = exact_entries(h);
  BigInt den = 1;
  for (const auto& x : exact) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  std::vector<BigInt> num(exact.size());
  for (std::size_t i = 0; i < exact.size(); ++i) num[i] = exact[i].get_num() * (den / exact[i].get_den());
  auto e_h = [&](const std::vector<char>& a, const std::vector<char>& b) {
    BigInt total = 0;
    for (int x = 0; x < n; ++x) {
      if (!a[x]) continue;
      for (int y = 0; y < n; ++y)
        if (b[y]) total += num[static_cast<std::size_t>(x) * n + y];
    }
    return total;
  };
  // den · (√n·e_G(A,B) - e_H(A,B)) as an element of Q(√n).
  auto deviation = [&](const Graph& gr, const std::vector<char>& a, const std::vector<char>& b) {
    return Quadratic(Rational(-e_h(a, b)), Rational(BigInt(count_edges(gr, a, b)) * den), n);
  };
  auto check = [&](const std::vector<char>& a, const std::vector<char>& b) {
    std::vector<char> as(n), bs(n);
    long outside = 0;
    for (int v = 0; v < n; ++v) {
      as[v] = a[v] && in_s[v];
      bs[v] = b[v] && in_s[v];
      outside += (a[v] && !in_s[v]) + (b[v] && !in_s[v]);
    }
    Quadratic lhs = deviation(r.trimmed, a, b).abs();
    Quadratic rhs = deviation(g, as, bs).abs() + Quadratic(Rational(BigInt(outside) * n * den));
    ++r.pairs_checked;
    if (!(lhs <= rhs)) ++r.pairs_failed;
  };
  Rng rng = Rng(seed).split("trim");
  for (int i = 0; i < samples; ++i) {
    const double pa = rng.uniform(), pb = rng.uniform();
    std::vector<char> a(n), b(n);
    for (int v = 0; v < n; ++v) a[v] = rng.uniform() < pa;
    for (int v = 0; v < n; ++v) b[v] = rng.uniform() < pb;
    check(a, b);
  }
  std::vector<char> complement(n), all(n, 1);
  for (int v = 0; v < n; ++v) complement[v] = !in_s[v];
  check(complement, all);
  Quadratic dev = deviation(g, complement, all).abs();
  r.delta_at_complement = n > 0 ? dev.to_double() / (den.get_d() * n * static_cast<double>(n)) : 0.0;
  r.size_bound_holds = Quadratic(Rational(BigInt(static_cast<long>(r.removed.size())) * n * den)) <= dev;
  return r;
}

TruncationReport truncation_check(const RootedPattern& j, const Graph& g, const Rational& delta,
                                  const Rational& c) {
  j.validate();
  if (j.ends.size() > 2) throw InputError("truncation_check: at most two ends");
  if (delta <= 0) throw InputError("truncation_check: delta must be positive");
  TruncationReport r;
  r.delta = delta;
  const ScaledHost host = ScaledHost::sparse(g, c);
  const int n = g.vertex_count();
  HomOptions exact{HomMode::kExact, 0};
  Profile p = partial_profile(j.pattern, j.ends, host,
                              VertexWeights::ones(j.pattern.vertex_count(), n), exact);
  const Rational threshold = 1 / delta;
  r.integral = p.exact_integral();
  r.integral_truncated = truncate_profile(p, threshold).exact_integral();
  r.tail = truncate_profile_above(p, threshold).exact_integral();
  r.integral_of_square = p.exact_integral_of_square();
  const Graph glued = glue(j);
  r.glued_density =
      *hom_weighted(glued, host, VertexWeights::ones(glued.vertex_count(), n), exact).value_exact;
  r.hypothesis_holds = r.glued_density <= Quadratic(1);
  r.markov_holds = r.tail <= r.integral_of_square.scaled(delta);
  r.bound_holds = r.tail <= Quadratic(delta);
  r.gluing_holds = r.integral_of_square == r.glued_density;
  return r;
}

std::string to_json(const SpectralDiscrepancy& r) {
  return dump({{"n", r.n}, {"mean_degree", r.mean_degree}, {"lambda", r.lambda},
               {"delta_up", r.delta_up}, {"h_bar", r.h_bar}},
              "c4count.discrepancy_spectral/1");
}

std::string to_json(const DiscrepancySearch& r) {
  return dump(search_json(r), "c4count.discrepancy_search/1");
}

std::string to_json(const GapReport& r) {
  ordered_json trials = ordered_json::array();
  for (const auto& t : r.trials) {
    trials.push_back({{"index", t.index}, {"family", to_string(t.family)}, {"t_sparse", t.t_sparse},
                      {"t_dense", t.t_dense}, {"gap", t.gap}});
  }
  ordered_json fam;
  for (int i = 0; i < static_cast<int>(r.min_gap_by_family.size()); ++i)
    fam[to_string(static_cast<WeightFamily>(i))] = r.min_gap_by_family[i];
  return dump({{"pattern", graph_json(r.pattern)}, {"n", r.n}, {"c", to_string(r.c)},
               {"seed", r.seed}, {"min_gap", r.min_gap}, {"min_gap_by_family", fam},
               {"trials", trials}},
              "c4count.counting/1");
}

std::string to_json(const C4CounterexampleReport& r) {
  return dump({{"q", r.q}, {"n", r.n}, {"host_c4_free", r.host_c4_free},
               {"sparse_count", r.sparse_count.get_str()}, {"dense_count", r.dense_count.get_str()},
               {"dense_density", to_string(r.dense_density)}, {"expected", to_string(r.expected)},
               {"dense_matches", r.dense_density == r.expected}},
              "c4count.counterexample_c4/1");
}

std::string to_json(const TriangleCounterexampleReport& r) {
  return dump({{"q", r.q}, {"n", r.n}, {"seed", r.seed}, {"edges_before", r.edges_before},
               {"edges_after", r.edges_after}, {"triangle_homs", r.triangle_homs.get_str()},
               {"dense_density", to_string(r.dense_density)},
               {"discrepancy", search_json(r.discrepancy)}},
              "c4count.counterexample_triangle/1");
}

std::string to_json(const TrimReport& r) {
  return dump({{"removed", r.removed}, {"removed_edges", r.removed_edges},
               {"trimmed_edges", r.trimmed.edge_count()}, {"pairs_checked", r.pairs_checked},
               {"pairs_failed", r.pairs_failed}, {"size_bound_holds", r.size_bound_holds},
               {"delta_at_complement", r.delta_at_complement}},
              "c4count.trim/1");
}

std::string to_json(const TruncationReport& r) {
  return dump({{"delta", to_string(r.delta)}, {"integral", quadratic_json(r.integral)},
               {"integral_truncated", quadratic_json(r.integral_truncated)},
               {"tail", quadratic_json(r.tail)},
               {"integral_of_square", quadratic_json(r.integral_of_square)},
               {"glued_density", quadratic_json(r.glued_density)},
               {"hypothesis_holds", r.hypothesis_holds}, {"markov_holds", r.markov_holds},
               {"bound_holds", r.bound_holds}, {"gluing_holds", r.gluing_holds}},
              "c4count.truncation/1");
}

}  // namespace c4count
