#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "igconn/bitset.hpp"
#include "igconn/group.hpp"

namespace igconn {

struct Subgroup {
  BitSet members;
  std::size_t order = 0;
  std::vector<std::uint32_t> generators;  // generates the subgroup inside its parent
};

// Checks closure and returns the subgroup with a small generating set.
// Throws InputError when the set is not a subgroup.
Subgroup make_subgroup(const FiniteGroup& g, const BitSet& members);

// All subgroups of a group, sorted by (order, ascending member list). The
// trivial subgroup comes first and the whole group last.
class SubgroupLattice {
 public:
  // Seeds with the cyclic subgroups, then adds joins <H, x> layer by layer
  // until nothing new appears. Throws CapExceeded past max_subgroups.
  static SubgroupLattice build(std::shared_ptr<const FiniteGroup> g,
                               std::size_t max_subgroups = Limits{}.max_lattice);
  static SubgroupLattice build(const FiniteGroup& g,
                               std::size_t max_subgroups = Limits{}.max_lattice);

  const FiniteGroup& group() const noexcept { return *group_; }
  std::shared_ptr<const FiniteGroup> group_ptr() const noexcept { return group_; }

  std::size_t size() const noexcept { return subgroups_.size(); }
  const Subgroup& operator[](std::size_t i) const { return subgroups_[i]; }
  const std::vector<Subgroup>& subgroups() const noexcept { return subgroups_; }
  std::size_t trivial_index() const noexcept { return 0; }
  std::size_t full_index() const noexcept { return subgroups_.size() - 1; }

  std::optional<std::size_t> index_of(const BitSet& members) const;

  // Indices of subgroups strictly containing subgroup i, ascending.
  const std::vector<std::size_t>& strict_supersets(std::size_t i) const { return supersets_[i]; }
  bool contains(std::size_t big, std::size_t small) const;

  std::vector<std::size_t> proper_nontrivial() const;
  const std::vector<std::size_t>& minimal_indices() const noexcept { return minimal_; }
  const std::vector<std::size_t>& maximal_indices() const noexcept { return maximal_; }
  bool is_normal(std::size_t i) const { return normal_[i] != 0; }
  std::vector<std::size_t> normal_indices() const;

 private:
  SubgroupLattice() = default;
  void finish();

  std::shared_ptr<const FiniteGroup> group_;
  std::vector<Subgroup> subgroups_;
  std::vector<std::vector<std::size_t>> supersets_;
  std::vector<std::size_t> minimal_;
  std::vector<std::size_t> maximal_;
  std::vector<char> normal_;
};

std::vector<Subgroup> minimal_subgroups(const SubgroupLattice& l);

bool is_subgroup(const FiniteGroup& g, const BitSet& members);
bool is_normal(const FiniteGroup& g, const BitSet& h);
// True when every element of `by` conjugates h onto itself.
bool is_normalized_by(const FiniteGroup& g, const BitSet& h, std::span<const std::uint32_t> by);
BitSet normalizer(const FiniteGroup& g, const BitSet& h);
BitSet centralizer(const FiniteGroup& g, const BitSet& h);
BitSet center(const FiniteGroup& g);
BitSet derived_subgroup(const FiniteGroup& g, const BitSet& h);

bool is_cyclic(const FiniteGroup& g, const BitSet& h);
bool is_abelian(const FiniteGroup& g, const BitSet& h);
// Abelian, non-trivial and of exponent p for a prime p.
bool is_elementary_abelian(const FiniteGroup& g, const BitSet& h);

// Subgroups of order p^a with p^a exactly dividing |G|; the trivial subgroup
// when p does not divide |G|.
std::vector<std::size_t> sylow_subgroups(const SubgroupLattice& l, std::uint64_t p);
// Intersection of the maximal subgroups; trivial for the trivial group.
BitSet frattini(const SubgroupLattice& l);
// Intersection of the Sylow p-subgroups.
BitSet p_core(const SubgroupLattice& l, std::uint64_t p);

bool is_solvable(const FiniteGroup& g);
bool is_nilpotent(const SubgroupLattice& l);
// Lattice indices 1 = N_0 < N_1 < ... < N_r = G, each N_{i+1} the first
// normal subgroup (in lattice order) strictly containing N_i.
std::vector<std::size_t> chief_series(const SubgroupLattice& l);
bool is_supersolvable(const SubgroupLattice& l);

int order_length(const FiniteGroup& g);

// Number of proper subgroups strictly containing subgroup i.
std::size_t container_count(const SubgroupLattice& l, std::size_t i);
// Every minimal subgroup lies strictly inside at least k proper subgroups.
bool satisfies_k_valency(const SubgroupLattice& l, std::size_t k);

// {"order": n, "subgroups": [{"order": k, "members": [...]}, ...],
//  "inclusions": [[i, j], ...]} with i strictly inside j.
nlohmann::json lattice_to_json(const SubgroupLattice& l);

}  // namespace igconn
