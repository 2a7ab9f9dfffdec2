// Copyright (c) 2026 the aspsc authors
// SPDX-License-Identifier: Apache-2.0

#include "aspsc/analysis.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace aspsc {

namespace {

struct Edge {
  AtomId from, to;
  bool negative;
};

// Iterative Tarjan SCC over the given adjacency; returns per-node component
// ids (nodes absent from `adj` keep component id = their own singleton).
class SccFinder {
 public:
  explicit SccFinder(std::uint32_t n, const std::vector<std::vector<AtomId>>& adj)
      : adj_(adj), index_(n, kUnset), low_(n, 0), on_stack_(n, 0), comp_(n, kUnset) {
    for (AtomId v = 0; v < n; ++v) {
      if (index_[v] == kUnset) strong_connect(v);
    }
  }

  std::uint32_t component(AtomId v) const { return comp_[v]; }

 private:
  static constexpr std::uint32_t kUnset = 0xFFFFFFFFu;

  void strong_connect(AtomId root) {
    struct Frame {
      AtomId v;
      std::size_t next_child;
    };
    std::vector<Frame> call_stack{{root, 0}};
    while (!call_stack.empty()) {
      Frame& f = call_stack.back();
      const AtomId v = f.v;
      if (f.next_child == 0) {
        index_[v] = low_[v] = counter_++;
        stack_.push_back(v);
        on_stack_[v] = 1;
      }
      bool descended = false;
      while (f.next_child < adj_[v].size()) {
        const AtomId w = adj_[v][f.next_child++];
        if (index_[w] == kUnset) {
          call_stack.push_back({w, 0});
          descended = true;
          break;
        }
        if (on_stack_[w]) low_[v] = std::min(low_[v], index_[w]);
      }
      if (descended) continue;
      if (low_[v] == index_[v]) {
        for (;;) {
          const AtomId w = stack_.back();
          stack_.pop_back();
          on_stack_[w] = 0;
          comp_[w] = n_comps_;
          if (w == v) break;
        }
        ++n_comps_;
      }
      call_stack.pop_back();
      if (!call_stack.empty()) {
        const AtomId parent = call_stack.back().v;
        low_[parent] = std::min(low_[parent], low_[v]);
      }
    }
  }

  const std::vector<std::vector<AtomId>>& adj_;
  std::vector<std::uint32_t> index_, low_;
  std::vector<std::uint8_t> on_stack_;
  std::vector<std::uint32_t> comp_;
  std::vector<AtomId> stack_;
  std::uint32_t counter_ = 0;
  std::uint32_t n_comps_ = 0;
};

// An SCC contains a directed cycle with an odd number of marked edges iff
// its intra-component edges admit no parity-consistent 2-coloring. Checked
// by propagating parities from a root and testing every intra-SCC edge.
bool has_odd_marked_cycle(std::uint32_t n, const std::vector<Edge>& edges,
                          const SccFinder& scc) {
  std::vector<std::vector<std::pair<AtomId, bool>>> adj(n);
  for (const Edge& e : edges) {
    if (scc.component(e.from) == scc.component(e.to)) {
      adj[e.from].push_back({e.to, e.negative});
    }
  }
  std::vector<std::int8_t> color(n, -1);
  for (AtomId root = 0; root < n; ++root) {
    if (color[root] != -1 || adj[root].empty()) continue;
    color[root] = 0;
    std::vector<AtomId> queue{root};
    while (!queue.empty()) {
      const AtomId v = queue.back();
      queue.pop_back();
      for (auto [w, neg] : adj[v]) {
        const std::int8_t want = static_cast<std::int8_t>(color[v] ^ (neg ? 1 : 0));
        if (color[w] == -1) {
          color[w] = want;
          queue.push_back(w);
        } else if (color[w] != want) {
          return true;
        }
      }
    }
  }
  return false;
}

}  // namespace

DependencyGraph dependency_graph(const Program& p) {
  const Program q = eliminate_constraints(p);
  DependencyGraph g;
  g.atoms = q.atoms;
  g.nodes = atoms_of(q);
  std::set<std::pair<AtomId, AtomId>> pos, neg;
  for (const Rule& r : q.rules) {
    for (AtomId h : r.head) {
      for (AtomId b : r.pos_body) pos.insert({h, b});
      for (AtomId b : r.neg_body) neg.insert({h, b});
    }
  }
  g.pos_edges.assign(pos.begin(), pos.end());
  g.neg_edges.assign(neg.begin(), neg.end());
  return g;
}

ClassReport classify(const Program& p) {
  ClassReport out;
  out.is_normal = std::all_of(p.rules.begin(), p.rules.end(),
                              [](const Rule& r) { return r.is_normal(); });
  out.is_positive = std::all_of(p.rules.begin(), p.rules.end(),
                                [](const Rule& r) { return r.is_positive(); });
  out.is_definite_horn =
      out.is_positive && std::all_of(p.rules.begin(), p.rules.end(),
                                     [](const Rule& r) { return r.head.size() == 1; });

  const DependencyGraph g = dependency_graph(p);
  const std::uint32_t n = g.atoms.size();

  std::vector<Edge> edges;
  std::vector<std::vector<AtomId>> adj(n);
  for (auto [f, t] : g.pos_edges) {
    edges.push_back({f, t, false});
    adj[f].push_back(t);
  }
  for (auto [f, t] : g.neg_edges) {
    edges.push_back({f, t, true});
    adj[f].push_back(t);
  }
  const SccFinder scc(n, adj);

  out.is_stratified = true;
  for (const Edge& e : edges) {
    if (e.negative && scc.component(e.from) == scc.component(e.to)) {
      out.is_stratified = false;
      break;
    }
  }
  out.is_odd_cycle_free = !has_odd_marked_cycle(n, edges, scc);

  std::vector<std::vector<AtomId>> pos_adj(n);
  for (auto [f, t] : g.pos_edges) pos_adj[f].push_back(t);
  const SccFinder pos_scc(n, pos_adj);
  out.is_head_cycle_free = true;
  for (const Rule& r : p.rules) {
    for (std::size_t i = 0; i + 1 < r.head.size() && out.is_head_cycle_free; ++i) {
      for (std::size_t j = i + 1; j < r.head.size(); ++j) {
        if (pos_scc.component(r.head[i]) == pos_scc.component(r.head[j])) {
          out.is_head_cycle_free = false;
          break;
        }
      }
    }
  }
  return out;
}

}  // namespace aspsc
