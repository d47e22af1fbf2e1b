#include "c4count/host.hpp"

#include "c4count/errors.hpp"

namespace c4count {

WeightedHost WeightedHost::constant(int n, const Rational& value) {
  if (value < 0 || value > 1) throw InputError("host value outside [0,1]");
  WeightedHost h;
  h.n_ = n;
  h.values_.assign(static_cast<std::size_t>(n) * n, value.get_d());
  h.exact_ = std::vector<Rational>(static_cast<std::size_t>(n) * n, value);
  return h;
}

WeightedHost WeightedHost::from_doubles(int n, std::vector<double> values) {
  if (values.size() != static_cast<std::size_t>(n) * n) {
    throw InputError("host matrix must have n*n entries");
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      double v = values[static_cast<std::size_t>(x) * n + y];
      if (!(v >= 0.0 && v <= 1.0)) throw InputError("host value outside [0,1]");
      if (v != values[static_cast<std::size_t>(y) * n + x]) {
        throw InputError("host matrix is not symmetric");
      }
    }
  }
  WeightedHost h;
  h.n_ = n;
  h.values_ = std::move(values);
  return h;
}

WeightedHost WeightedHost::from_rationals(int n, std::vector<Rational> values) {
  if (values.size() != static_cast<std::size_t>(n) * n) {
    throw InputError("host matrix must have n*n entries");
  }
  std::vector<double> approx(values.size());
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const Rational& v = values[static_cast<std::size_t>(x) * n + y];
      if (v < 0 || v > 1) throw InputError("host value outside [0,1]");
      if (v != values[static_cast<std::size_t>(y) * n + x]) {
        throw InputError("host matrix is not symmetric");
      }
      approx[static_cast<std::size_t>(x) * n + y] = v.get_d();
    }
  }
  WeightedHost h;
  h.n_ = n;
  h.values_ = std::move(approx);
  h.exact_ = std::move(values);
  return h;
}

std::span<const Rational> WeightedHost::exact_values() const {
  if (!exact_) throw InputError("host has no exact values");
  return *exact_;
}

VertexWeights VertexWeights::ones(int pattern_vertices, int host_size) {
  VertexWeights w;
  w.n_ = host_size;
  w.values_.assign(pattern_vertices, std::vector<double>(host_size, 1.0));
  w.exact_ = std::vector<std::vector<Rational>>(pattern_vertices,
                                                std::vector<Rational>(host_size, Rational(1)));
  return w;
}

VertexWeights VertexWeights::indicators(int host_size,
                                        const std::vector<std::vector<Vertex>>& sets) {
  VertexWeights w;
  w.n_ = host_size;
  w.values_.assign(sets.size(), std::vector<double>(host_size, 0.0));
  w.exact_ = std::vector<std::vector<Rational>>(sets.size(),
                                                std::vector<Rational>(host_size, Rational(0)));
  for (std::size_t v = 0; v < sets.size(); ++v) {
    for (Vertex x : sets[v]) {
      if (x < 0 || x >= host_size) throw InputError("indicator vertex out of range");
      w.values_[v][x] = 1.0;
      (*w.exact_)[v][x] = 1;
    }
  }
  return w;
}

VertexWeights VertexWeights::from_doubles(int host_size,
                                          std::vector<std::vector<double>> values) {
  for (const auto& row : values) {
    if (static_cast<int>(row.size()) != host_size) {
      throw InputError("weight vector length differs from host size");
    }
    for (double x : row) {
      if (!(x >= 0.0 && x <= 1.0)) throw InputError("vertex weight outside [0,1]");
    }
  }
  VertexWeights w;
  w.n_ = host_size;
  w.values_ = std::move(values);
  return w;
}

VertexWeights VertexWeights::from_rationals(int host_size,
                                            std::vector<std::vector<Rational>> values) {
  VertexWeights w;
  w.n_ = host_size;
  for (const auto& row : values) {
    if (static_cast<int>(row.size()) != host_size) {
      throw InputError("weight vector length differs from host size");
    }
    std::vector<double> approx;
    approx.reserve(row.size());
    for (const Rational& x : row) {
      if (x < 0 || x > 1) throw InputError("vertex weight outside [0,1]");
      approx.push_back(x.get_d());
    }
    w.values_.push_back(std::move(approx));
  }
  w.exact_ = std::move(values);
  return w;
}

std::span<const Rational> VertexWeights::exact_of(Vertex v) const {
  if (!exact_) throw InputError("vertex weights have no exact values");
  return (*exact_)[v];
}

VertexWeights VertexWeights::with(Vertex v, std::vector<double> values,
                                  std::optional<std::vector<Rational>> exact) const {
  VertexWeights w = *this;
  for (double x : values) {
    if (!(x >= 0.0 && x <= 1.0)) throw InputError("vertex weight outside [0,1]");
  }
  w.values_.at(v) = std::move(values);
  if (w.exact_ && exact) {
    (*w.exact_)[v] = std::move(*exact);
  } else {
    w.exact_.reset();
  }
  return w;
}

ScaledHost ScaledHost::sparse(Graph g, Rational c) {
  if (c <= 0 || c > 1) throw InputError("scale c must lie in (0, 1]");
  if (g.loop_count() > 0) throw InputError("sparse host must be loop-free");
  ScaledHost h;
  h.kind_ = SparseHost{std::move(g), std::move(c)};
  return h;
}

ScaledHost ScaledHost::dense(WeightedHost w) {
  ScaledHost h;
  h.kind_ = std::move(w);
  return h;
}

int ScaledHost::size() const {
  if (is_sparse()) return sparse_host().graph.vertex_count();
  return dense_host().size();
}

bool ScaledHost::satisfies_row_bound() const {
  if (!is_sparse()) return true;
  const auto& s = sparse_host();
  long n = s.graph.vertex_count();
  long d = s.graph.max_degree();
  return s.c <= Rational(1, 2) && d * d <= 4 * n;
}

}  // namespace c4count
