#include "igconn/graph.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "igconn/error.hpp"
#include "igconn/numtheory.hpp"

namespace igconn {

IntersectionGraph IntersectionGraph::build(const SubgroupLattice& l) {
  IntersectionGraph g;
  const std::size_t n = l.size() >= 2 ? l.size() - 2 : 0;
  g.rows_.assign(n, BitSet(n));
  for (std::size_t u = 0; u < n; ++u) {
    const auto& a = l[lattice_index(u)].members;
    for (std::size_t v = u + 1; v < n; ++v) {
      if (a.intersection_count(l[lattice_index(v)].members) > 1) {
        g.rows_[u].insert(v);
        g.rows_[v].insert(u);
      }
    }
  }
  return g;
}

IntersectionGraph IntersectionGraph::from_adjacency(std::vector<BitSet> rows) {
  const auto n = rows.size();
  for (std::size_t u = 0; u < n; ++u) {
    if (rows[u].universe() != n) throw InputError("adjacency row has the wrong length");
    if (rows[u].contains(u)) throw InputError("adjacency has a loop");
    for (std::size_t v = 0; v < n; ++v) {
      if (rows[u].contains(v) != rows[v].contains(u)) throw InputError("adjacency is not symmetric");
    }
  }
  IntersectionGraph g;
  g.rows_ = std::move(rows);
  return g;
}

std::size_t IntersectionGraph::edge_count() const noexcept {
  std::size_t twice = 0;
  for (const auto& r : rows_) twice += r.count();
  return twice / 2;
}

std::size_t IntersectionGraph::min_degree() const {
  std::size_t best = rows_.empty() ? 0 : rows_[0].count();
  for (const auto& r : rows_) best = std::min(best, r.count());
  return best;
}

bool IntersectionGraph::is_complete() const {
  for (const auto& r : rows_) {
    if (r.count() + 1 != rows_.size()) return false;
  }
  return true;
}

std::vector<std::vector<std::size_t>> connected_components(const IntersectionGraph& g) {
  const auto n = g.vertex_count();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      g.neighbours(comp[i]).for_each([&](std::uint32_t w) {
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
      });
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

namespace {

// Unit-capacity vertex-disjoint path flow from a to b, with every other
// vertex split into an entry and an exit node joined by a capacity-one arc.
// The split network is never materialised: a flow is a set of paths, stored
// as predecessor/successor links on the internal vertices, and the residual
// arcs are derived from those links during the search. The direct a-b edge
// is ignored.
class PathFlow {
 public:
  PathFlow(const IntersectionGraph& g, std::size_t a, std::size_t b)
      : g_(g), a_(a), b_(b), prev_(g.vertex_count(), none), next_(g.vertex_count(), none) {
    // Common neighbours give disjoint two-edge paths at once.
    const auto common = g.neighbours(a) & g.neighbours(b);
    common.for_each([&](std::uint32_t c) {
      prev_[c] = static_cast<std::int64_t>(a);
      next_[c] = static_cast<std::int64_t>(b);
      ++value_;
    });
  }

  std::size_t run(std::size_t bound) {
    while (value_ < bound && augment()) ++value_;
    return std::min(value_, bound);
  }

  std::size_t value() const noexcept { return value_; }

  // Requires a maximum flow; the last failed search left the reachable set.
  std::vector<std::size_t> cut() const {
    std::vector<std::size_t> result;
    for (std::size_t v = 0; v < g_.vertex_count(); ++v) {
      if (v == a_ || v == b_) continue;
      if (reached_[in(v)] && !reached_[out(v)]) result.push_back(v);
    }
    return result;
  }

 private:
  static constexpr std::int64_t none = -1;
  static constexpr std::int64_t source = -2;

  static std::size_t in(std::size_t v) { return 2 * v; }
  static std::size_t out(std::size_t v) { return 2 * v + 1; }

  bool augment() {
    const auto n = g_.vertex_count();
    reached_.assign(2 * n, 0);
    parent_.assign(2 * n, none);
    BitSet open_in(n);  // vertices whose entry node is still unvisited
    for (std::size_t v = 0; v < n; ++v) {
      if (v != a_ && v != b_) open_in.insert(v);
    }
    std::vector<std::size_t> queue;
    auto visit = [&](std::size_t node, std::int64_t from) {
      if (reached_[node]) return;
      reached_[node] = 1;
      parent_[node] = from;
      queue.push_back(node);
      if (node % 2 == 0) open_in.erase(node / 2);
    };

    // Arcs between split vertices behave as uncapacitated: entering a
    // saturated vertex leads nowhere new, but keeps the reachable set, and so
    // the cut, made of split arcs only.
    (g_.neighbours(a_) & open_in).for_each([&](std::uint32_t w) { visit(in(w), source); });

    std::int64_t last = none;
    for (std::size_t qi = 0; qi < queue.size() && last == none; ++qi) {
      const auto node = queue[qi];
      const auto v = node / 2;
      if (node % 2 == 0) {
        if (next_[v] == none) {
          visit(out(v), static_cast<std::int64_t>(node));
        } else if (prev_[v] != static_cast<std::int64_t>(a_)) {
          visit(out(static_cast<std::size_t>(prev_[v])), static_cast<std::int64_t>(node));
        }
        continue;
      }
      if (next_[v] != none) visit(in(v), static_cast<std::int64_t>(node));
      if (g_.adjacent(v, b_) && next_[v] != static_cast<std::int64_t>(b_)) {
        last = static_cast<std::int64_t>(node);
        break;
      }
      const auto cand = g_.neighbours(v) & open_in;
      cand.for_each([&](std::uint32_t w) { visit(in(w), static_cast<std::int64_t>(node)); });
    }
    if (last == none) return false;

    // Walk back from the sink collecting arc changes; removals are applied
    // before additions so a vertex can lose and regain a neighbour.
    std::vector<std::pair<std::int64_t, std::int64_t>> added;
    std::vector<std::pair<std::int64_t, std::int64_t>> removed;
    added.emplace_back(static_cast<std::int64_t>(last / 2), static_cast<std::int64_t>(b_));
    auto node = last;
    while (node != source) {
      const auto from = parent_[static_cast<std::size_t>(node)];
      const auto v = node / 2;
      if (node % 2 == 0) {
        if (from == source) {
          added.emplace_back(static_cast<std::int64_t>(a_), v);
        } else if (from / 2 != v) {
          added.emplace_back(from / 2, v);
        }
      } else if (from / 2 != v) {
        removed.emplace_back(v, from / 2);  // backward over the arc v -> w
      }
      node = from;
    }
    for (auto [u, w] : removed) unlink(u, w);
    for (auto [u, w] : added) link(u, w);
    return true;
  }

  void link(std::int64_t u, std::int64_t w) {
    if (u != static_cast<std::int64_t>(a_)) next_[static_cast<std::size_t>(u)] = w;
    if (w != static_cast<std::int64_t>(b_)) prev_[static_cast<std::size_t>(w)] = u;
  }
  void unlink(std::int64_t u, std::int64_t w) {
    if (u != static_cast<std::int64_t>(a_) && next_[static_cast<std::size_t>(u)] == w) {
      next_[static_cast<std::size_t>(u)] = none;
    }
    if (w != static_cast<std::int64_t>(b_) && prev_[static_cast<std::size_t>(w)] == u) {
      prev_[static_cast<std::size_t>(w)] = none;
    }
  }

  const IntersectionGraph& g_;
  std::size_t a_;
  std::size_t b_;
  std::vector<std::int64_t> prev_;
  std::vector<std::int64_t> next_;
  std::vector<char> reached_;
  std::vector<std::int64_t> parent_;
  std::size_t value_ = 0;
};

void check_pair(const IntersectionGraph& g, std::size_t a, std::size_t b) {
  if (a >= g.vertex_count() || b >= g.vertex_count()) throw PreconditionError("vertex out of range");
  if (a == b) throw PreconditionError("independent paths need two distinct vertices");
}

}  // namespace

std::size_t max_independent_paths(const IntersectionGraph& g, std::size_t a, std::size_t b,
                                  std::optional<std::size_t> bound) {
  check_pair(g, a, b);
  const std::size_t direct = g.adjacent(a, b) ? 1 : 0;
  const std::size_t limit = bound ? *bound : g.vertex_count();
  if (limit <= direct) return direct;
  PathFlow flow(g, a, b);
  return direct + flow.run(limit - direct);
}

std::vector<std::size_t> min_vertex_separator(const IntersectionGraph& g, std::size_t a,
                                              std::size_t b) {
  check_pair(g, a, b);
  if (g.adjacent(a, b)) throw PreconditionError("adjacent vertices have no vertex separator");
  PathFlow flow(g, a, b);
  flow.run(g.vertex_count());
  auto cut = flow.cut();
  if (cut.size() != flow.value()) throw std::logic_error("residual cut disagrees with flow value");
  return cut;
}

namespace {

std::optional<int> convention_value(const SubgroupLattice& l, const IntersectionGraph& g) {
  const auto n = l.group().order();
  if (n == 1) return -2;
  if (is_prime(n)) return -1;
  if (g.is_complete()) return static_cast<int>(g.vertex_count()) - 1;
  return std::nullopt;
}

}  // namespace

Kappa kappa(const SubgroupLattice& l, const IntersectionGraph& g) {
  if (auto v = convention_value(l, g)) return {*v, g.vertex_count() > 0};
  std::size_t bound = g.min_degree();
  const auto& mins = l.minimal_indices();
  for (std::size_t i = 0; i < mins.size() && bound > 0; ++i) {
    const auto a = IntersectionGraph::vertex_of(mins[i]);
    for (std::size_t j = i + 1; j < mins.size() && bound > 0; ++j) {
      const auto b = IntersectionGraph::vertex_of(mins[j]);
      if (g.neighbours(a).intersection_count(g.neighbours(b)) >= bound) continue;
      bound = std::min(bound, max_independent_paths(g, a, b, bound));
    }
  }
  return {static_cast<int>(bound), false};
}

Kappa kappa(const SubgroupLattice& l) { return kappa(l, IntersectionGraph::build(l)); }

Kappa kappa(const FiniteGroup& g) { return kappa(SubgroupLattice::build(g)); }

Kappa kappa_all_pairs(const SubgroupLattice& l, const IntersectionGraph& g) {
  if (auto v = convention_value(l, g)) return {*v, g.vertex_count() > 0};
  std::size_t bound = g.min_degree();
  const auto n = g.vertex_count();
  for (std::size_t a = 0; a < n && bound > 0; ++a) {
    for (std::size_t b = a + 1; b < n && bound > 0; ++b) {
      const auto direct = g.adjacent(a, b) ? 1U : 0U;
      if (direct + g.neighbours(a).intersection_count(g.neighbours(b)) >= bound) continue;
      bound = std::min(bound, max_independent_paths(g, a, b, bound));
    }
  }
  return {static_cast<int>(bound), false};
}

std::vector<std::size_t> kappa_witness(const SubgroupLattice& l, const IntersectionGraph& g,
                                       const Kappa& k) {
  if (g.vertex_count() <= 1 || k.value <= 0) return {};
  if (k.complete) {
    if (l.minimal_indices().size() != 1) {
      throw std::logic_error("complete intersection graph without a unique minimal subgroup");
    }
    const auto keep = IntersectionGraph::vertex_of(l.minimal_indices().front());
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      if (v != keep) out.push_back(v);
    }
    return out;
  }
  const auto target = static_cast<std::size_t>(k.value);
  const auto& mins = l.minimal_indices();
  for (std::size_t i = 0; i < mins.size(); ++i) {
    for (std::size_t j = i + 1; j < mins.size(); ++j) {
      const auto a = IntersectionGraph::vertex_of(mins[i]);
      const auto b = IntersectionGraph::vertex_of(mins[j]);
      if (max_independent_paths(g, a, b, target + 1) == target) return min_vertex_separator(g, a, b);
    }
  }
  throw std::logic_error("no minimal pair attains the connectivity value");
}

bool is_k_connected(const SubgroupLattice& l, const IntersectionGraph& g, int k) {
  if (k < 1) throw PreconditionError("k-connectivity needs k >= 1");
  return g.vertex_count() > static_cast<std::size_t>(k) && kappa(l, g).value >= k;
}

bool is_k_connected(const FiniteGroup& g, int k) {
  const auto l = SubgroupLattice::build(g);
  return is_k_connected(l, IntersectionGraph::build(l), k);
}

CutVertices cut_vertices(const IntersectionGraph& g) {
  const auto n = g.vertex_count();
  CutVertices result;
  if (n == 0) return result;
  if (connected_components(g).size() > 1) {
    result.connected = false;
    return result;
  }
  if (n == 2) {
    result.vertices = {0, 1};
    return result;
  }
  std::vector<std::size_t> disc(n, 0);
  std::vector<std::size_t> low(n, 0);
  std::vector<char> is_cut(n, 0);
  std::size_t timer = 0;
  std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t v, std::size_t parent) {
    disc[v] = low[v] = ++timer;
    std::size_t children = 0;
    g.neighbours(v).for_each([&](std::uint32_t w) {
      if (w == parent) return;
      if (disc[w] != 0) {
        low[v] = std::min(low[v], disc[w]);
        return;
      }
      ++children;
      dfs(w, v);
      low[v] = std::min(low[v], low[w]);
      if (parent != n && low[w] >= disc[v]) is_cut[v] = 1;
    });
    if (parent == n && children > 1) is_cut[v] = 1;
  };
  dfs(0, n);
  for (std::size_t v = 0; v < n; ++v) {
    if (is_cut[v]) result.vertices.push_back(v);
  }
  return result;
}

namespace {

bool separates(const IntersectionGraph& g, const std::vector<char>& removed, std::size_t left) {
  if (left < 2) return false;
  const auto n = g.vertex_count();
  std::size_t start = 0;
  while (removed[start]) ++start;
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> stack{start};
  seen[start] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    g.neighbours(v).for_each([&](std::uint32_t w) {
      if (!removed[w] && !seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    });
  }
  return count < left;
}

}  // namespace

Separator min_separating_set_bruteforce(const IntersectionGraph& g, std::size_t max_vertices) {
  const auto n = g.vertex_count();
  if (n > max_vertices) {
    throw PreconditionError("exhaustive separator search limited to " + std::to_string(max_vertices) +
                            " vertices, graph has " + std::to_string(n));
  }
  if (g.is_complete()) throw PreconditionError("a complete graph has no separating set");
  for (std::size_t size = 0; size + 2 <= n; ++size) {
    std::vector<std::size_t> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      std::vector<char> removed(n, 0);
      for (auto v : pick) removed[v] = 1;
      if (separates(g, removed, n - size)) return {size, pick};
      // next combination in lexicographic order
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == n - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  throw std::logic_error("non-complete graph without a separating set");
}

bool is_upward_closed(const SubgroupLattice& l, const std::vector<std::size_t>& vertices) {
  std::vector<char> in(l.size(), 0);
  for (auto v : vertices) {
    const auto i = IntersectionGraph::lattice_index(v);
    if (i == 0 || i >= l.full_index()) throw PreconditionError("vertex out of range");
    in[i] = 1;
  }
  for (auto v : vertices) {
    for (auto j : l.strict_supersets(IntersectionGraph::lattice_index(v))) {
      if (j != l.full_index() && !in[j]) return false;
    }
  }
  return true;
}

std::string graph_to_dot(const SubgroupLattice& l, const IntersectionGraph& g,
                         const std::string& name) {
  std::ostringstream os;
  std::string id;
  for (char c : name) id += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  os << "graph " << (id.empty() ? "G" : id) << " {\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    os << "  v" << v << " [label=\"order=" << l[IntersectionGraph::lattice_index(v)].order
       << ",index=" << v << "\"];\n";
  }
  for (std::size_t u = 0; u < g.vertex_count(); ++u) {
    g.neighbours(u).for_each([&](std::uint32_t w) {
      if (w > u) os << "  v" << u << " -- v" << w << ";\n";
    });
  }
  os << "}\n";
  return os.str();
}

nlohmann::json graph_to_json(const SubgroupLattice& l, const IntersectionGraph& g) {
  nlohmann::json vertices = nlohmann::json::array();
  nlohmann::json edges = nlohmann::json::array();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto& s = l[IntersectionGraph::lattice_index(v)];
    vertices.push_back({{"index", v}, {"order", s.order}, {"members", s.members.members()}});
    g.neighbours(v).for_each([&](std::uint32_t w) {
      if (w > v) edges.push_back({v, w});
    });
  }
  return {{"group_order", l.group().order()},
          {"vertex_count", g.vertex_count()},
          {"edge_count", g.edge_count()},
          {"vertices", vertices},
          {"edges", edges}};
}

}  // namespace igconn
