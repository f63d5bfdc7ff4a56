#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "igconn/bitset.hpp"
#include "igconn/lattice.hpp"

namespace igconn {

// Graph on the proper non-trivial subgroups, two of them adjacent when they
// share more than the identity. Vertex v is lattice subgroup v + 1, so the
// vertices inherit the lattice order.
class IntersectionGraph {
 public:
  static IntersectionGraph build(const SubgroupLattice& l);
  // Arbitrary simple graph, for tests and oracles. Rows must be symmetric
  // and loop-free.
  static IntersectionGraph from_adjacency(std::vector<BitSet> rows);

  std::size_t vertex_count() const noexcept { return rows_.size(); }
  std::size_t edge_count() const noexcept;
  bool adjacent(std::size_t u, std::size_t v) const { return rows_[u].contains(v); }
  const BitSet& neighbours(std::size_t v) const { return rows_[v]; }
  std::size_t degree(std::size_t v) const { return rows_[v].count(); }
  std::size_t min_degree() const;
  bool is_complete() const;

  static std::size_t lattice_index(std::size_t v) noexcept { return v + 1; }
  static std::size_t vertex_of(std::size_t lattice_index) noexcept { return lattice_index - 1; }

 private:
  std::vector<BitSet> rows_;
};

std::vector<std::vector<std::size_t>> connected_components(const IntersectionGraph& g);

// Maximum number of internally vertex-disjoint a-b paths. For adjacent a, b
// this is 1 plus the count with the direct edge removed. When `bound` is
// given the search stops as soon as the count reaches it.
std::size_t max_independent_paths(const IntersectionGraph& g, std::size_t a, std::size_t b,
                                  std::optional<std::size_t> bound = std::nullopt);

// Minimum a-b vertex separator for non-adjacent a, b, read off a maximum
// flow as the split vertices whose entry side is reachable in the residual
// network and whose exit side is not.
std::vector<std::size_t> min_vertex_separator(const IntersectionGraph& g, std::size_t a,
                                              std::size_t b);

struct Kappa {
  int value = 0;
  bool complete = false;  // value came from the complete-graph convention
};

// -2 for the trivial group, -1 for prime order, n-1 when the graph is K_n,
// otherwise the minimum of max_independent_paths over pairs of minimal
// subgroups.
Kappa kappa(const SubgroupLattice& l, const IntersectionGraph& g);
Kappa kappa(const SubgroupLattice& l);
Kappa kappa(const FiniteGroup& g);

// Same value by minimising over every vertex pair, with pairs skipped only
// when their common neighbourhood already proves them no smaller than the
// running minimum.
Kappa kappa_all_pairs(const SubgroupLattice& l, const IntersectionGraph& g);

// A minimum separating set. For a complete graph on more than one vertex,
// every vertex except the unique minimal subgroup; empty when the graph is
// disconnected or has at most one vertex. Vertex indices, ascending.
std::vector<std::size_t> kappa_witness(const SubgroupLattice& l, const IntersectionGraph& g,
                                       const Kappa& k);

bool is_k_connected(const SubgroupLattice& l, const IntersectionGraph& g, int k);
bool is_k_connected(const FiniteGroup& g, int k);

struct CutVertices {
  std::vector<std::size_t> vertices;
  bool connected = true;  // false: the graph is disconnected and vertices is empty
};

// Articulation points; both vertices of K_2 count as cut vertices.
CutVertices cut_vertices(const IntersectionGraph& g);

struct Separator {
  std::size_t size = 0;
  std::vector<std::size_t> vertices;
};

// Exhaustive search over vertex subsets by increasing size. Throws
// PreconditionError for complete graphs or more than max_vertices vertices.
Separator min_separating_set_bruteforce(const IntersectionGraph& g, std::size_t max_vertices = 15);

// Vertex set closed under passing to larger proper subgroups.
bool is_upward_closed(const SubgroupLattice& l, const std::vector<std::size_t>& vertices);

std::string graph_to_dot(const SubgroupLattice& l, const IntersectionGraph& g,
                         const std::string& name = "G");
nlohmann::json graph_to_json(const SubgroupLattice& l, const IntersectionGraph& g);

}  // namespace igconn
