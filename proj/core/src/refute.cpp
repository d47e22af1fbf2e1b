#include <cmath>
#include <map>

#include "c4count/canonical.hpp"
#include "c4count/certify.hpp"
#include "c4count/errors.hpp"
#include "c4count/homcount.hpp"
#include "c4count/polarity.hpp"

namespace c4count {
namespace {

// k when f is isomorphic to the 1-subdivision of K_k for 2 <= k <= 6.
int subdivided_clique_order(const Graph& f) {
  for (int k = 2; k <= 6; ++k) {
    Graph s = graphs::subdivision(graphs::complete(k));
    if (s.vertex_count() != f.vertex_count() || s.edge_count() != f.edge_count()) continue;
    if (canonical_form(s) == canonical_form(f)) return k;
  }
  return 0;
}

double log_of(const BigInt& x) {
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, x.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

void collect(const CountableCertificate& c, std::vector<Graph>& out) {
  switch (c.rule) {
    case CountableCertificate::Rule::kEdgeless:
      return;
    case CountableCertificate::Rule::kPendant:
      if (c.parent) collect(**c.parent, out);
      return;
    case CountableCertificate::Rule::kIslandsBridges:
      for (std::size_t i = 0; i < c.islands.size(); ++i) {
        const Island& is = c.islands[i];
        if (i + 1 < c.islands.size()) out.push_back(is.part.local());
        collect(*is.countable, out);
      }
      for (const ConnectorPart& cp : c.connectors) {
        out.push_back(glue(RootedPattern{cp.part.local(), cp.ends}));
        collect(*cp.countable, out);
      }
      return;
  }
}

}  // namespace

TameGrowthReport refute_tame_empirical(const Graph& f, const std::vector<int>& q_list,
                                       double threshold) {
  if (f.loop_count() > 0) throw InputError("refute: pattern has loops");
  if (q_list.size() < 2) throw InputError("refute: need at least two values of q");
  TameGrowthReport report;
  report.threshold = threshold;
  const int k = subdivided_clique_order(f);
  report.method = k ? "subdivided_clique" : "elimination";
  const double exponent = f.vertex_count() - f.edge_count() / 2.0;
  for (int q : q_list) {
    Graph g = build_polarity(q).loopless;
    TameGrowthRow row;
    row.q = q;
    row.n = g.vertex_count();
    row.hom = k ? hom_subdivided_clique(k, g) : hom_count(f, g);
    if (row.hom <= 0) throw InputError("refute: pattern has no homomorphism into the host");
    row.log_ratio = log_of(row.hom) - exponent * std::log(static_cast<double>(row.n));
    report.rows.push_back(std::move(row));
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = static_cast<double>(report.rows.size());
  for (const auto& r : report.rows) {
    double x = std::log(static_cast<double>(r.n));
    sx += x;
    sy += r.log_ratio;
    sxx += x * x;
    sxy += x * r.log_ratio;
  }
  report.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  report.intercept = (sy - report.slope * sx) / m;
  report.not_tame = report.slope > threshold;
  return report;
}

ScaleConstant compute_scale_constant(const CountableCertificate& cert, const Graph& g) {
  std::vector<Graph> all;
  collect(cert, all);
  ScaleConstant out;
  std::map<CanonicalForm, bool> seen;
  const BigInt n = g.vertex_count();
  for (const Graph& h : all) {
    if (h.edge_count() == 0) continue;
    if (!seen.emplace(canonical_form(h), true).second) continue;
    out.constrained.push_back(h);
    const BigInt hom = hom_count(h, g);
    const long e = h.edge_count();
    const long power = 2 * h.vertex_count() - e;
    BigInt rhs_base, lhs = hom * hom, extra;
    mpz_pow_ui(rhs_base.get_mpz_t(), n.get_mpz_t(), power > 0 ? power : 0);
    mpz_pow_ui(extra.get_mpz_t(), n.get_mpz_t(), power < 0 ? -power : 0);
    lhs *= extra;
    // hom·2^-me <= n^(V-E/2)  ⇔  hom² <= 2^(2me)·n^(2V-E)
    int m = out.halvings;
    while (true) {
      BigInt rhs = rhs_base;
      mpz_mul_2exp(rhs.get_mpz_t(), rhs.get_mpz_t(), 2 * m * e);
      if (lhs <= rhs) break;
      ++m;
    }
    out.halvings = m;
  }
  out.c = Rational(1);
  mpz_mul_2exp(out.c.get_den_mpz_t(), out.c.get_den_mpz_t(), out.halvings);
  out.c.canonicalize();
  return out;
}

}  // namespace c4count
