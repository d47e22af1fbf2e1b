#pragma once

// Variable-elimination engine shared by the homomorphism counters. Private to
// the library.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <type_traits>
#include <vector>

#include "c4count/errors.hpp"
#include "c4count/exact.hpp"
#include "c4count/graph.hpp"
#include "c4count/homcount.hpp"

namespace c4count::detail {

/// Symmetric host function, either a sparse CSR matrix (absent entries are
/// zero, the diagonal is an ordinary entry) or a dense row-major matrix.
template <class T>
struct HostMatrix {
  int n = 0;
  bool sparse = false;
  std::vector<int> offsets;
  std::vector<int> cols;
  std::vector<T> vals;
  std::vector<T> dense;

  T at(int x, int y) const {
    if (!sparse) return dense[static_cast<std::size_t>(x) * n + y];
    auto first = cols.begin() + offsets[x];
    auto last = cols.begin() + offsets[x + 1];
    auto it = std::lower_bound(first, last, y);
    if (it == last || *it != y) return T(0);
    return vals[it - cols.begin()];
  }
};

template <class T>
HostMatrix<T> sparse_unit_host(const Graph& g) {
  HostMatrix<T> h;
  h.n = g.vertex_count();
  h.sparse = true;
  h.offsets.assign(h.n + 1, 0);
  for (int x = 0; x < h.n; ++x) {
    h.offsets[x + 1] = h.offsets[x] + g.degree(x);
    for (Vertex y : g.neighbors(x)) h.cols.push_back(y);
  }
  h.vals.assign(h.cols.size(), T(1));
  return h;
}

inline std::size_t checked_power(std::size_t n, std::size_t k, std::size_t cap) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (n != 0 && r > cap / n) return cap + 1;
    r *= n;
  }
  return r;
}

template <class T>
struct TableFactor {
  std::vector<Vertex> scope;  // scope[0] is the most significant digit
  std::vector<T> table;
};

template <class T>
inline bool is_zero(const T& x) {
  return x == 0;
}

/// Runs the elimination of every vertex in `order` and returns the table of
/// the remaining product over `keep` (sorted), indexed with keep[0] most
/// significant. alpha[v] empty means the constant 1.
template <class T>
std::vector<T> eliminate(const Graph& f, const HostMatrix<T>& host,
                         const std::vector<std::vector<T>>& alpha,
                         const std::vector<Vertex>& order, const std::vector<Vertex>& keep,
                         std::size_t budget) {
  const int n = host.n;
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const Edge& e : f.edges()) edges.emplace_back(e.u, e.v);
  std::vector<TableFactor<T>> tables;
  std::vector<int> slot(f.vertex_count(), -1);

  for (Vertex v : order) {
    std::vector<Vertex> others;
    std::vector<std::pair<Vertex, Vertex>> rest;
    for (const auto& e : edges) {
      if (e.first == v) {
        others.push_back(e.second);
      } else if (e.second == v) {
        others.push_back(e.first);
      } else {
        rest.push_back(e);
      }
    }
    edges.swap(rest);
    std::vector<TableFactor<T>> mine, kept;
    for (auto& t : tables) {
      if (std::find(t.scope.begin(), t.scope.end(), v) != t.scope.end()) {
        mine.push_back(std::move(t));
      } else {
        kept.push_back(std::move(t));
      }
    }
    tables.swap(kept);

    std::vector<Vertex> q = others;
    for (const auto& t : mine)
      for (Vertex u : t.scope)
        if (u != v) q.push_back(u);
    std::sort(q.begin(), q.end());
    q.erase(std::unique(q.begin(), q.end()), q.end());
    const std::size_t entries = checked_power(n, q.size(), budget);
    if (entries > budget) {
      throw ResourceError("elimination table of " + std::to_string(n) + "^" +
                          std::to_string(q.size()) + " entries exceeds the budget of " +
                          std::to_string(budget));
    }
    for (std::size_t i = 0; i < q.size(); ++i) slot[q[i]] = static_cast<int>(i);

    // Strides of each table factor relative to the new assignment, plus the
    // stride of v itself.
    struct Access {
      std::vector<std::pair<int, std::size_t>> parts;  // (slot in q, stride)
      std::size_t v_stride = 0;
    };
    std::vector<Access> access(mine.size());
    for (std::size_t t = 0; t < mine.size(); ++t) {
      std::size_t stride = 1;
      for (int i = static_cast<int>(mine[t].scope.size()) - 1; i >= 0; --i) {
        Vertex u = mine[t].scope[i];
        if (u == v) {
          access[t].v_stride = stride;
        } else {
          access[t].parts.emplace_back(slot[u], stride);
        }
        stride *= static_cast<std::size_t>(n);
      }
    }
    std::vector<int> other_slots;
    for (Vertex u : others) other_slots.push_back(slot[u]);
    const std::vector<T>& av = alpha[v];
    const bool use_rows = host.sparse && !others.empty();

    TableFactor<T> out;
    out.scope = q;
    out.table.assign(entries, T(0));
    auto body = [&](std::size_t idx) {
      int x[64];
      std::size_t rem = idx;
      for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
        x[i] = static_cast<int>(rem % n);
        rem /= n;
      }
      std::size_t base[64];
      for (std::size_t t = 0; t < mine.size(); ++t) {
        std::size_t b = 0;
        for (const auto& [s, stride] : access[t].parts) b += stride * x[s];
        base[t] = b;
      }
      T sum(0);
      auto visit = [&](int y, T prod) {
        if (!av.empty()) {
          if (is_zero(av[y])) return;
          prod *= av[y];
        }
        for (std::size_t i = use_rows ? 1 : 0; i < other_slots.size(); ++i) {
          T w = host.at(y, x[other_slots[i]]);
          if (is_zero(w)) return;
          prod *= w;
        }
        for (std::size_t t = 0; t < mine.size(); ++t) {
          const T& w = mine[t].table[base[t] + access[t].v_stride * y];
          if (is_zero(w)) return;
          prod *= w;
        }
        sum += prod;
      };
      if (use_rows) {
        int xu = x[other_slots[0]];
        for (int k = host.offsets[xu]; k < host.offsets[xu + 1]; ++k) {
          visit(host.cols[k], host.vals[k]);
        }
      } else {
        for (int y = 0; y < n; ++y) visit(y, T(1));
      }
      out.table[idx] = sum;
    };
    if constexpr (std::is_same_v<T, Rational>) {
      for (std::size_t idx = 0; idx < entries; ++idx) body(idx);
    } else {
      const auto count = static_cast<std::int64_t>(entries);
#pragma omp parallel for schedule(static) if (count >= 4096)
      for (std::int64_t idx = 0; idx < count; ++idx) body(static_cast<std::size_t>(idx));
    }
    for (Vertex u : q) slot[u] = -1;
    tables.push_back(std::move(out));
  }

  // Combine what is left over the kept vertices.
  const std::size_t entries = checked_power(n, keep.size(), budget);
  if (entries > budget) throw ResourceError("profile table exceeds the budget");
  for (std::size_t i = 0; i < keep.size(); ++i) slot[keep[i]] = static_cast<int>(i);
  std::vector<T> result(entries, T(0));
  for (std::size_t idx = 0; idx < entries; ++idx) {
    int x[64];
    std::size_t rem = idx;
    for (int i = static_cast<int>(keep.size()) - 1; i >= 0; --i) {
      x[i] = static_cast<int>(rem % n);
      rem /= n;
    }
    T prod(1);
    for (const auto& [a, b] : edges) {
      prod *= host.at(x[slot[a]], x[slot[b]]);
      if (is_zero(prod)) break;
    }
    for (const auto& t : tables) {
      if (is_zero(prod)) break;
      std::size_t ti = 0;
      for (Vertex u : t.scope) ti = ti * n + x[slot[u]];
      prod *= t.table[ti];
    }
    result[idx] = prod;
  }
  for (Vertex u : keep) slot[u] = -1;
  return result;
}

inline BigInt to_bigint(__int128 x) {
  bool neg = x < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(x) : static_cast<unsigned __int128>(x);
  BigInt hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  BigInt lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  BigInt r = (hi << 64) + lo;
  return neg ? BigInt(-r) : r;
}

}  // namespace c4count::detail
