#include <doctest.h>

#include <algorithm>
#include <random>

#include "igconn/catalog.hpp"
#include "igconn/error.hpp"
#include "igconn/graph.hpp"
#include "igconn/lattice.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace igconn;
using test_support::catalog_groups;
using test_support::group;
using test_support::lattice;

namespace {

oracle::Adjacency to_matrix(const IntersectionGraph& g) {
  const auto n = g.vertex_count();
  oracle::Adjacency adj(n, std::vector<bool>(n, false));
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) adj[u][v] = g.adjacent(u, v);
  }
  return adj;
}

IntersectionGraph from_matrix(const oracle::Adjacency& adj) {
  std::vector<BitSet> rows(adj.size(), BitSet(adj.size()));
  for (std::size_t u = 0; u < adj.size(); ++u) {
    for (std::size_t v = 0; v < adj.size(); ++v) {
      if (adj[u][v]) rows[u].insert(v);
    }
  }
  return IntersectionGraph::from_adjacency(rows);
}

oracle::Adjacency random_graph(std::mt19937& rng, std::size_t n, double p) {
  std::bernoulli_distribution edge(p);
  oracle::Adjacency adj(n, std::vector<bool>(n, false));
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) adj[u][v] = adj[v][u] = edge(rng);
  }
  return adj;
}

struct Built {
  SubgroupLattice l;
  IntersectionGraph g;
};

Built built(const std::string& label) {
  auto l = lattice(label);
  auto g = IntersectionGraph::build(l);
  return {std::move(l), std::move(g)};
}

}  // namespace

TEST_SUITE("graph") {

TEST_CASE("graph construction") {
  const auto z6 = built("Z6");
  CHECK(z6.g.vertex_count() == 2);
  CHECK(z6.g.edge_count() == 0);
  const auto q8 = built("Q8");
  CHECK(q8.g.vertex_count() == 4);
  CHECK(q8.g.is_complete());
  CHECK(q8.g.edge_count() == 6);
  const auto z8 = built("Z8");
  CHECK(z8.g.vertex_count() == 2);
  CHECK(z8.g.edge_count() == 1);
}

TEST_CASE("edges are exactly the non-trivial intersections") {
  for (const auto& g : catalog_groups()) {
    if (g.order() > 64) continue;
    CAPTURE(g.label());
    const auto l = SubgroupLattice::build(g);
    const auto graph = IntersectionGraph::build(l);
    std::vector<oracle::Members> vertices;
    for (auto i : l.proper_nontrivial()) vertices.push_back(l[i].members.members());
    CHECK(to_matrix(graph) == oracle::intersection_adjacency(g, vertices));
  }
}

TEST_CASE("adjacency validation") {
  std::vector<BitSet> loop(2, BitSet(2));
  loop[0].insert(0);
  CHECK_THROWS_AS(IntersectionGraph::from_adjacency(loop), InputError);
  std::vector<BitSet> asym(2, BitSet(2));
  asym[0].insert(1);
  CHECK_THROWS_AS(IntersectionGraph::from_adjacency(asym), InputError);
}

TEST_CASE("connected components") {
  CHECK(connected_components(built("S3").g).size() == 4);
  const auto a4 = built("A4");
  const auto comps = connected_components(a4.g);
  REQUIRE(comps.size() == 5);
  std::vector<std::size_t> sizes;
  for (const auto& c : comps) sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{1, 1, 1, 1, 4});
  CHECK(connected_components(built("Q8").g).size() == 1);
  CHECK(connected_components(built("Z2").g).empty());
}

TEST_CASE("independent paths") {
  const auto z6 = built("Z6");
  CHECK(max_independent_paths(z6.g, 0, 1) == 0);
  const auto z8 = built("Z8");
  CHECK(max_independent_paths(z8.g, 0, 1) == 1);
  const auto q8 = built("Q8");
  const auto k4 = to_matrix(q8.g);
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = a + 1; b < 4; ++b) {
      CHECK(max_independent_paths(q8.g, a, b) == 3);
      CHECK(oracle::independent_paths(k4, a, b) == 3);
    }
  }
  CHECK_THROWS_AS(max_independent_paths(q8.g, 1, 1), PreconditionError);
  CHECK(max_independent_paths(q8.g, 0, 1, 2) == 2);
}

TEST_CASE("independent paths agree with path enumeration on random graphs") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 3 + rng() % 6;
    const auto adj = random_graph(rng, n, 0.2 + 0.1 * (trial % 6));
    const auto g = from_matrix(adj);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        CAPTURE(trial);
        CHECK(max_independent_paths(g, a, b) == oracle::independent_paths(adj, a, b));
        if (!adj[a][b]) {
          const auto cut = min_vertex_separator(g, a, b);
          CHECK(cut.size() == oracle::min_ab_cut(adj, a, b));
          std::vector<bool> removed(n, false);
          for (auto v : cut) removed[v] = true;
          CHECK_FALSE(oracle::reaches(adj, a, b, removed));
        }
      }
    }
  }
}

TEST_CASE("kappa conventions and values") {
  CHECK(kappa(group("Z1")).value == -2);
  for (auto label : {"Z2", "Z3", "Z5", "Z61"}) CHECK(kappa(group(label)).value == -1);
  for (auto label : {"Z4", "Z9", "Z25", "Z49"}) {
    const auto k = kappa(group(label));
    CHECK(k.value == 0);
    CHECK(k.complete);
  }
  CHECK(kappa(group("Q8")).value == 3);
  CHECK(kappa(group("Z8")).value == 1);
  CHECK(kappa(group("Z4xZ2")).value == 1);
  CHECK(kappa(group("Z6")).value == 0);
  CHECK(kappa(group("S3")).value == 0);
  CHECK(kappa(group("A4")).value == 0);
  // Q16: a unique involution, five subgroups of order 4, three of order 8,
  // so the graph is complete on nine vertices.
  const auto q16 = built("Q16");
  CHECK(q16.g.vertex_count() == 9);
  CHECK(q16.g.is_complete());
  CHECK(kappa(q16.l, q16.g).value == 8);
}

TEST_CASE("kappa agrees with the definition on random graphs") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 2 + rng() % 8;
    const auto adj = random_graph(rng, n, 0.3 + 0.1 * (trial % 6));
    const auto g = from_matrix(adj);
    const int expect = oracle::connectivity(adj);
    CAPTURE(trial);
    if (g.is_complete()) {
      CHECK(expect == static_cast<int>(n) - 1);
      continue;
    }
    CHECK(min_separating_set_bruteforce(g).size == static_cast<std::size_t>(expect));
  }
}

TEST_CASE("kappa matches brute force on small catalog graphs") {
  std::size_t checked = 0;
  for (const auto& grp : catalog_groups()) {
    const auto l = SubgroupLattice::build(grp);
    const auto g = IntersectionGraph::build(l);
    if (g.vertex_count() == 0 || g.vertex_count() > 12) continue;
    CAPTURE(grp.label());
    CHECK(kappa(l, g).value == oracle::connectivity(to_matrix(g)));
    ++checked;
  }
  CHECK(checked >= 20);
}

TEST_CASE("k-connectivity") {
  CHECK(is_k_connected(group("Z3xZ3xZ3"), 3));
  CHECK_FALSE(is_k_connected(group("D4"), 2));
  CHECK(is_k_connected(group("Z2xZ2xZ2xZ2"), 3));
  CHECK_FALSE(is_k_connected(group("Q8"), 4));
  CHECK(is_k_connected(group("Q8"), 3));
  CHECK_THROWS_AS(is_k_connected(group("Q8"), 0), PreconditionError);
}

TEST_CASE("cut vertices") {
  const auto z8 = built("Z8");
  CHECK(cut_vertices(z8.g).vertices == std::vector<std::size_t>{0, 1});
  const auto z4z2 = built("Z4xZ2");
  const auto cv = cut_vertices(z4z2.g);
  REQUIRE(cv.vertices.size() == 1);
  const auto& klein = z4z2.l[IntersectionGraph::lattice_index(cv.vertices[0])];
  CHECK(klein.order == 4);
  CHECK_FALSE(is_cyclic(z4z2.l.group(), klein.members));
  CHECK(cut_vertices(built("Q8").g).vertices.empty());
  const auto s3 = cut_vertices(built("S3").g);
  CHECK_FALSE(s3.connected);
  CHECK(s3.vertices.empty());
}

TEST_CASE("cut vertices agree with single-vertex removal") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 3 + rng() % 7;
    const auto adj = random_graph(rng, n, 0.35);
    const auto g = from_matrix(adj);
    const auto cv = cut_vertices(g);
    if (connected_components(g).size() != 1) {
      CHECK_FALSE(cv.connected);
      continue;
    }
    std::vector<std::size_t> expect;
    for (std::size_t v = 0; v < n; ++v) {
      std::vector<bool> removed(n, false);
      removed[v] = true;
      bool split = false;
      for (std::size_t a = 0; a < n && !split; ++a) {
        for (std::size_t b = a + 1; b < n && !split; ++b) {
          if (a != v && b != v && !oracle::reaches(adj, a, b, removed)) split = true;
        }
      }
      if (split) expect.push_back(v);
    }
    CAPTURE(trial);
    CHECK(cv.vertices == expect);
  }
}

TEST_CASE("exhaustive separating sets") {
  const auto z4z2 = built("Z4xZ2");
  const auto s = min_separating_set_bruteforce(z4z2.g);
  CHECK(s.size == 1);
  REQUIRE(s.vertices.size() == 1);
  CHECK(z4z2.l[IntersectionGraph::lattice_index(s.vertices[0])].order == 4);
  CHECK(min_separating_set_bruteforce(built("Z6").g).size == 0);
  CHECK(min_separating_set_bruteforce(built("Z6").g).vertices.empty());
  CHECK(min_separating_set_bruteforce(built("S3").g).size == 0);
  CHECK_THROWS_AS(min_separating_set_bruteforce(built("Q8").g), PreconditionError);
  CHECK_THROWS_AS(min_separating_set_bruteforce(built("S4").g), PreconditionError);
}

TEST_CASE("upward closure") {
  const auto z4z2 = built("Z4xZ2");
  std::vector<std::size_t> maximal;
  for (auto i : z4z2.l.maximal_indices()) maximal.push_back(IntersectionGraph::vertex_of(i));
  CHECK(is_upward_closed(z4z2.l, maximal));
  CHECK(is_upward_closed(z4z2.l, {}));
  // a minimal subgroup outside the Frattini subgroup lies in the Klein group
  const auto& l = z4z2.l;
  for (auto m : l.minimal_indices()) {
    if (l.strict_supersets(m).size() == 2) CHECK_FALSE(is_upward_closed(l, {IntersectionGraph::vertex_of(m)}));
  }
}

TEST_CASE("witnesses are minimum, separating and upward closed") {
  for (const auto& grp : catalog_groups()) {
    if (grp.order() > 128) continue;
    const auto l = SubgroupLattice::build(grp);
    const auto g = IntersectionGraph::build(l);
    const auto k = kappa(l, g);
    const auto w = kappa_witness(l, g, k);
    CAPTURE(grp.label());
    CHECK(is_upward_closed(l, w));
    if (g.vertex_count() <= 1 || connected_components(g).size() > 1) {
      CHECK(w.empty());
      continue;
    }
    CHECK(w.size() == static_cast<std::size_t>(k.value));
    if (k.complete) continue;
    std::vector<bool> removed(g.vertex_count(), false);
    for (auto v : w) removed[v] = true;
    const auto adj = to_matrix(g);
    bool split = false;
    for (std::size_t a = 0; a < adj.size() && !split; ++a) {
      for (std::size_t b = a + 1; b < adj.size() && !split; ++b) {
        if (!removed[a] && !removed[b] && !oracle::reaches(adj, a, b, removed)) split = true;
      }
    }
    CHECK(split);
  }
  const auto z8 = built("Z8");
  const auto w = kappa_witness(z8.l, z8.g, kappa(z8.l, z8.g));
  REQUIRE(w.size() == 1);
  CHECK(z8.l[IntersectionGraph::lattice_index(w[0])].order == 4);
  const auto z4z2 = built("Z4xZ2");
  const auto wk = kappa_witness(z4z2.l, z4z2.g, kappa(z4z2.l, z4z2.g));
  REQUIRE(wk.size() == 1);
  const auto& klein = z4z2.l[IntersectionGraph::lattice_index(wk[0])];
  CHECK(klein.order == 4);
  CHECK_FALSE(is_cyclic(z4z2.l.group(), klein.members));
}

TEST_CASE("minimal pairs give the same value as all pairs") {
  for (const auto& grp : catalog_groups()) {
    if (grp.order() > 128) continue;
    const auto l = SubgroupLattice::build(grp);
    const auto g = IntersectionGraph::build(l);
    CAPTURE(grp.label());
    const auto k = kappa(l, g);
    CHECK(k.value == kappa_all_pairs(l, g).value);
    if (!k.complete && g.vertex_count() > 0) CHECK(k.value <= static_cast<int>(g.min_degree()));
  }
}

TEST_CASE("minimal separating sets found exhaustively are upward closed") {
  std::size_t checked = 0;
  for (const auto& grp : catalog_groups()) {
    const auto l = SubgroupLattice::build(grp);
    const auto g = IntersectionGraph::build(l);
    if (g.vertex_count() > 15 || g.vertex_count() < 2 || g.is_complete()) continue;
    if (connected_components(g).size() > 1) continue;
    CAPTURE(grp.label());
    const auto s = min_separating_set_bruteforce(g);
    CHECK(is_upward_closed(l, s.vertices));
    ++checked;
  }
  CHECK(checked >= 10);
}

TEST_CASE("k-connectivity needs k-valency") {
  for (const auto& grp : catalog_groups()) {
    if (grp.order() > 128) continue;
    const auto l = SubgroupLattice::build(grp);
    const auto g = IntersectionGraph::build(l);
    CAPTURE(grp.label());
    for (int k = 1; k <= 3; ++k) {
      if (is_k_connected(l, g, k)) CHECK(satisfies_k_valency(l, static_cast<std::size_t>(k)));
    }
  }
}

TEST_CASE("DOT and JSON export") {
  const auto s3 = built("S3");
  const auto dot = graph_to_dot(s3.l, s3.g, "S3");
  CHECK(dot.find("graph S3 {") == 0);
  CHECK(dot.find("--") == std::string::npos);
  CHECK(dot.find("v3 [label=\"order=3,index=3\"]") != std::string::npos);
  const auto q8 = built("Q8");
  const auto j = graph_to_json(q8.l, q8.g);
  CHECK(j["vertex_count"] == 4);
  CHECK(j["edges"].size() == 6);
  CHECK(graph_to_json(built("Z2xZ2").l, built("Z2xZ2").g)["edges"].empty());
}

}  // TEST_SUITE
