#pragma once

// Slow, independent reference computations used only by the tests.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <queue>
#include <set>
#include <vector>

#include "igconn/group.hpp"

namespace oracle {

using Perm = std::vector<std::uint32_t>;
using Members = std::vector<std::uint32_t>;
using Adjacency = std::vector<std::vector<bool>>;

// Compose, applying p first.
inline Perm compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

// Multiplies every pair of known elements until nothing new appears.
inline std::set<Perm> permutation_closure(std::size_t degree, const std::vector<Perm>& gens) {
  Perm id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<std::uint32_t>(i);
  std::set<Perm> s{id};
  s.insert(gens.begin(), gens.end());
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<Perm> cur(s.begin(), s.end());
    for (const auto& a : cur) {
      for (const auto& b : cur) grew |= s.insert(compose(a, b)).second;
    }
  }
  return s;
}

// Smallest subset closed under the group product that contains `seed`.
inline Members set_closure(const igconn::FiniteGroup& g, Members seed) {
  std::set<std::uint32_t> s(seed.begin(), seed.end());
  s.insert(g.identity());
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<std::uint32_t> cur(s.begin(), s.end());
    for (auto a : cur) {
      for (auto b : cur) grew |= s.insert(g.mul(a, b)).second;
    }
  }
  return {s.begin(), s.end()};
}

// Every subgroup, as the closure of every subset of at most log2|G|
// elements (a group of order n always has a generating set of that size).
inline std::set<Members> all_subgroups(const igconn::FiniteGroup& g) {
  const std::size_t n = g.order();
  std::size_t r = 0;
  while ((std::size_t{1} << (r + 1)) <= n) ++r;
  std::set<Members> out;
  std::vector<std::uint32_t> pick;
  std::function<void(std::uint32_t)> rec = [&](std::uint32_t start) {
    out.insert(set_closure(g, pick));
    if (pick.size() == r) return;
    for (std::uint32_t x = start; x < n; ++x) {
      pick.push_back(x);
      rec(x + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return out;
}

inline bool normal_by_conjugation(const igconn::FiniteGroup& g, const Members& h) {
  const std::set<std::uint32_t> s(h.begin(), h.end());
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    for (auto y : h) {
      if (!s.count(g.mul(g.mul(x, y), g.inv(x)))) return false;
    }
  }
  return true;
}

inline Adjacency intersection_adjacency(const igconn::FiniteGroup& g,
                                        const std::vector<Members>& vertices) {
  const std::size_t n = vertices.size();
  Adjacency adj(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      std::vector<std::uint32_t> common;
      std::set_intersection(vertices[i].begin(), vertices[i].end(), vertices[j].begin(),
                            vertices[j].end(), std::back_inserter(common));
      adj[i][j] = common.size() > 1 || (common.size() == 1 && common[0] != g.identity());
    }
  }
  return adj;
}

// b is reachable from a once the vertices in `removed` are gone.
inline bool reaches(const Adjacency& adj, std::size_t a, std::size_t b,
                    const std::vector<bool>& removed) {
  std::vector<bool> seen(adj.size(), false);
  std::queue<std::size_t> q;
  q.push(a);
  seen[a] = true;
  while (!q.empty()) {
    const auto v = q.front();
    q.pop();
    if (v == b) return true;
    for (std::size_t w = 0; w < adj.size(); ++w) {
      if (adj[v][w] && !seen[w] && !removed[w]) {
        seen[w] = true;
        q.push(w);
      }
    }
  }
  return false;
}

// Smallest vertex set avoiding a and b whose removal separates them; a and
// b must not be adjacent.
inline std::size_t min_ab_cut(const Adjacency& adj, std::size_t a, std::size_t b) {
  const std::size_t n = adj.size();
  std::vector<std::size_t> others;
  for (std::size_t v = 0; v < n; ++v) {
    if (v != a && v != b) others.push_back(v);
  }
  for (std::size_t size = 0; size <= others.size(); ++size) {
    std::vector<bool> choose(others.size(), false);
    std::fill(choose.begin(), choose.begin() + static_cast<std::ptrdiff_t>(size), true);
    do {
      std::vector<bool> removed(n, false);
      for (std::size_t i = 0; i < others.size(); ++i) removed[others[i]] = choose[i];
      if (!reaches(adj, a, b, removed)) return size;
    } while (std::prev_permutation(choose.begin(), choose.end()));
  }
  return others.size();
}

// Connectivity by definition: n - 1 for complete graphs, else the smallest
// cut between some non-adjacent pair.
inline int connectivity(const Adjacency& adj) {
  const std::size_t n = adj.size();
  std::size_t best = n;
  bool complete = true;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (adj[a][b]) continue;
      complete = false;
      best = std::min(best, min_ab_cut(adj, a, b));
    }
  }
  if (complete) return static_cast<int>(n) - 1;
  return static_cast<int>(best);
}

// Every simple a-b path, as its list of inner vertices.
inline std::vector<std::vector<std::size_t>> simple_paths(const Adjacency& adj, std::size_t a,
                                                          std::size_t b) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> on(adj.size(), false);
  std::vector<std::size_t> inner;
  std::function<void(std::size_t)> walk = [&](std::size_t v) {
    for (std::size_t w = 0; w < adj.size(); ++w) {
      if (!adj[v][w] || on[w]) continue;
      if (w == b) {
        out.push_back(inner);
        continue;
      }
      on[w] = true;
      inner.push_back(w);
      walk(w);
      inner.pop_back();
      on[w] = false;
    }
  };
  on[a] = true;
  walk(a);
  return out;
}

// Largest family of pairwise internally disjoint a-b paths, by exhaustive
// search over the enumerated paths.
inline std::size_t independent_paths(const Adjacency& adj, std::size_t a, std::size_t b) {
  const auto paths = simple_paths(adj, a, b);
  std::size_t best = 0;
  std::vector<bool> used(adj.size(), false);
  std::function<void(std::size_t, std::size_t)> pick = [&](std::size_t i, std::size_t count) {
    best = std::max(best, count);
    if (count + (paths.size() - i) <= best) return;
    for (std::size_t j = i; j < paths.size(); ++j) {
      const auto& p = paths[j];
      if (std::any_of(p.begin(), p.end(), [&](std::size_t v) { return used[v]; })) continue;
      for (auto v : p) used[v] = true;
      pick(j + 1, count + 1);
      for (auto v : p) used[v] = false;
    }
  };
  pick(0, 0);
  return best;
}

}  // namespace oracle
