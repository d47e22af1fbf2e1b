#include "c4count/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <numeric>

#include "c4count/errors.hpp"

namespace c4count {
namespace {

using Mask = std::uint32_t;
using Cells = std::vector<Mask>;
using Perm = std::array<std::int8_t, kCanonicalMaxVertices>;

class Canonizer {
 public:
  Canonizer(const Graph& g, std::span<const Vertex> roots)
      : n_(g.vertex_count()), roots_(static_cast<int>(roots.size())) {
    adj_.assign(n_, 0);
    for (const Edge& e : g.edges()) {
      adj_[e.u] |= Mask{1} << e.v;
      adj_[e.v] |= Mask{1} << e.u;
    }
    Mask root_mask = 0;
    for (Vertex r : roots) root_mask |= Mask{1} << r;
    Mask all = n_ == 32 ? ~Mask{0} : ((Mask{1} << n_) - 1);
    if (root_mask) initial_.push_back(root_mask);
    if (all & ~root_mask) initial_.push_back(all & ~root_mask);
  }

  CanonicalLabeling run() {
    Cells cells = initial_;
    refine(cells);
    std::vector<Vertex> prefix;
    search(cells, prefix);
    CanonicalLabeling out;
    out.order = best_order_;
    auto& b = out.form.bytes;
    b.push_back(static_cast<std::uint8_t>(n_));
    b.push_back(static_cast<std::uint8_t>(roots_));
    for (Mask row : best_code_) {
      for (int k = 0; k < 4; ++k) b.push_back(static_cast<std::uint8_t>(row >> (8 * k)));
    }
    return out;
  }

 private:
  void refine(Cells& cells) const {
    bool changed = true;
    std::vector<int> sig;
    while (changed) {
      changed = false;
      const std::size_t k = cells.size();
      Cells next;
      next.reserve(n_);
      for (Mask cell : cells) {
        if (std::has_single_bit(cell)) {
          next.push_back(cell);
          continue;
        }
        std::map<std::vector<int>, Mask> groups;
        for (Mask rest = cell; rest; rest &= rest - 1) {
          int v = std::countr_zero(rest);
          sig.assign(k, 0);
          for (std::size_t c = 0; c < k; ++c) sig[c] = std::popcount(adj_[v] & cells[c]);
          groups[sig] |= Mask{1} << v;
        }
        if (groups.size() > 1) changed = true;
        for (const auto& [key, members] : groups) next.push_back(members);
      }
      cells.swap(next);
    }
  }

  static bool fixes(const Perm& p, const std::vector<Vertex>& prefix) {
    for (Vertex v : prefix)
      if (p[v] != v) return false;
    return true;
  }

  void leaf(const Cells& cells) {
    std::vector<Vertex> order(n_);
    std::array<int, kCanonicalMaxVertices> pos{};
    for (int i = 0; i < n_; ++i) {
      order[i] = std::countr_zero(cells[i]);
      pos[order[i]] = i;
    }
    std::vector<Mask> code(n_, 0);
    for (int i = 0; i < n_; ++i) {
      Mask row = 0;
      for (Mask rest = adj_[order[i]]; rest; rest &= rest - 1) {
        row |= Mask{1} << pos[std::countr_zero(rest)];
      }
      code[i] = row;
    }
    if (first_order_.empty()) {
      first_order_ = order;
      first_code_ = code;
      best_order_ = order;
      best_code_ = code;
      return;
    }
    auto record = [&](const std::vector<Vertex>& target) {
      Perm p{};
      for (int i = 0; i < n_; ++i) p[order[i]] = static_cast<std::int8_t>(target[i]);
      automorphisms_.push_back(p);
    };
    if (code == first_code_) {
      record(first_order_);
    } else if (code == best_code_) {
      record(best_order_);
    } else if (code > best_code_) {
      best_code_ = std::move(code);
      best_order_ = std::move(order);
    }
  }

  void search(const Cells& cells, std::vector<Vertex>& prefix) {
    if (static_cast<int>(cells.size()) == n_) {
      leaf(cells);
      return;
    }
    std::size_t target = cells.size();
    int target_size = kCanonicalMaxVertices + 1;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      int size = std::popcount(cells[c]);
      if (size > 1 && size < target_size) {
        target = c;
        target_size = size;
      }
    }
    const Mask cell = cells[target];
    Mask tried = 0;
    for (Mask rest = cell; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      if (tried && in_orbit_of(v, tried, prefix)) continue;
      tried |= Mask{1} << v;
      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c == target) {
          child.push_back(Mask{1} << v);
          child.push_back(cell & ~(Mask{1} << v));
        } else {
          child.push_back(cells[c]);
        }
      }
      refine(child);
      prefix.push_back(v);
      search(child, prefix);
      prefix.pop_back();
    }
  }

  // Is v in the orbit of `tried` under the automorphisms fixing `prefix`?
  bool in_orbit_of(int v, Mask tried, const std::vector<Vertex>& prefix) const {
    std::array<int, kCanonicalMaxVertices> parent;
    std::iota(parent.begin(), parent.begin() + n_, 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    bool any = false;
    for (const Perm& p : automorphisms_) {
      if (!fixes(p, prefix)) continue;
      any = true;
      for (int x = 0; x < n_; ++x) {
        int a = find(x), b = find(p[x]);
        if (a != b) parent[a] = b;
      }
    }
    if (!any) return false;
    int rv = find(v);
    for (Mask rest = tried; rest; rest &= rest - 1) {
      if (find(std::countr_zero(rest)) == rv) return true;
    }
    return false;
  }

  int n_;
  int roots_;
  std::vector<Mask> adj_;
  Cells initial_;
  std::vector<Vertex> first_order_, best_order_;
  std::vector<Mask> first_code_, best_code_;
  std::vector<Perm> automorphisms_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g, std::span<const Vertex> roots) {
  if (g.vertex_count() > kCanonicalMaxVertices) {
    throw ResourceError("canonical form limited to " +
                        std::to_string(kCanonicalMaxVertices) + " vertices");
  }
  if (g.loop_count() > 0) throw InputError("canonical form: graph has loops");
  if (g.vertex_count() == 0) {
    CanonicalLabeling out;
    out.form.bytes = {0, 0};
    return out;
  }
  return Canonizer(g, roots).run();
}

std::string CanonicalForm::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (auto b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 15]);
  }
  return out;
}

std::size_t CanonicalFormHash::operator()(const CanonicalForm& f) const {
  // FNV-1a
  std::uint64_t h = 1469598103934665603ull;
  for (auto b : f.bytes) {
    h ^= b;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace c4count
