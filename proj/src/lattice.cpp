#include "igconn/lattice.hpp"

#include <algorithm>
#include <unordered_map>

#include "igconn/error.hpp"
#include "igconn/numtheory.hpp"

namespace igconn {

namespace {

// Subgroup generated by `base` (already closed) and x. Elements of the base
// only need right multiplication by x; new elements need every generator.
BitSet join(const FiniteGroup& g, const Subgroup& base, std::uint32_t x) {
  BitSet out = base.members;
  std::vector<std::uint32_t> gens = base.generators;
  gens.push_back(x);
  std::vector<std::uint32_t> queue;
  auto push = [&](std::uint32_t y) {
    if (!out.contains(y)) {
      out.insert(y);
      queue.push_back(y);
    }
  };
  base.members.for_each([&](std::uint32_t h) { push(g.mul(h, x)); });
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const auto e = queue[i];
    for (auto s : gens) push(g.mul(e, s));
  }
  return out;
}

std::vector<std::uint32_t> small_generating_set(const FiniteGroup& g, const BitSet& members,
                                                const std::vector<std::uint32_t>& orders) {
  auto elems = members.members();
  std::stable_sort(elems.begin(), elems.end(),
                   [&](std::uint32_t a, std::uint32_t b) { return orders[a] > orders[b]; });
  std::vector<std::uint32_t> gens;
  BitSet span(g.order());
  span.insert(g.identity());
  const auto target = members.count();
  for (auto x : elems) {
    if (span.count() == target) break;
    if (span.contains(x)) continue;
    gens.push_back(x);
    span = closure(g, gens);
  }
  return gens;
}

}  // namespace

bool is_subgroup(const FiniteGroup& g, const BitSet& members) {
  if (members.universe() != g.order() || !members.contains(g.identity())) return false;
  const auto elems = members.members();
  for (auto a : elems) {
    if (!members.contains(g.inv(a))) return false;
    for (auto b : elems) {
      if (!members.contains(g.mul(a, b))) return false;
    }
  }
  return true;
}

Subgroup make_subgroup(const FiniteGroup& g, const BitSet& members) {
  if (!is_subgroup(g, members)) throw InputError("element set is not a subgroup");
  return {members, members.count(), small_generating_set(g, members, element_orders(g))};
}

SubgroupLattice SubgroupLattice::build(const FiniteGroup& g, std::size_t max_subgroups) {
  return build(std::make_shared<const FiniteGroup>(g), max_subgroups);
}

SubgroupLattice SubgroupLattice::build(std::shared_ptr<const FiniteGroup> gp,
                                       std::size_t max_subgroups) {
  const FiniteGroup& g = *gp;
  SubgroupLattice l;
  l.group_ = std::move(gp);

  std::unordered_map<BitSet, std::size_t, BitSetHash> seen;
  std::vector<Subgroup> subs;
  auto add = [&](BitSet members, std::vector<std::uint32_t> gens) -> bool {
    if (seen.count(members)) return false;
    if (subs.size() >= max_subgroups) {
      throw CapExceeded("subgroup lattice exceeds " + std::to_string(max_subgroups) +
                        " subgroups");
    }
    seen.emplace(members, subs.size());
    const auto order = members.count();
    subs.push_back({std::move(members), order, std::move(gens)});
    return true;
  };

  BitSet trivial(g.order());
  trivial.insert(g.identity());
  add(trivial, {});

  // One generator per cyclic subgroup.
  std::vector<std::uint32_t> cyclic_gens;
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    if (x == g.identity()) continue;
    BitSet c(g.order());
    std::uint32_t y = x;
    while (!c.contains(y)) {
      c.insert(y);
      y = g.mul(y, x);
    }
    if (add(std::move(c), {x})) cyclic_gens.push_back(x);
  }

  std::vector<std::size_t> frontier;
  for (std::size_t i = 1; i < subs.size(); ++i) frontier.push_back(i);
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (auto i : frontier) {
      for (auto x : cyclic_gens) {
        if (subs[i].members.contains(x)) continue;
        auto j = join(g, subs[i], x);
        auto gens = subs[i].generators;
        gens.push_back(x);
        if (add(std::move(j), std::move(gens))) next.push_back(subs.size() - 1);
      }
    }
    frontier = std::move(next);
  }

  std::sort(subs.begin(), subs.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order != b.order) return a.order < b.order;
    return lex_less(a.members, b.members);
  });
  l.subgroups_ = std::move(subs);
  l.finish();
  return l;
}

void SubgroupLattice::finish() {
  const auto n = subgroups_.size();
  const FiniteGroup& g = *group_;
  supersets_.assign(n, {});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& a = subgroups_[i];
      const auto& b = subgroups_[j];
      if (b.order > a.order && b.order % a.order == 0 && a.members.is_subset_of(b.members)) {
        supersets_[i].push_back(j);
      }
    }
  }
  minimal_.clear();
  maximal_.clear();
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (is_prime(subgroups_[i].order)) minimal_.push_back(i);
    if (supersets_[i].size() == 1) maximal_.push_back(i);
  }
  const auto ggens = subgroups_.back().generators;
  normal_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    normal_[i] = is_normalized_by(g, subgroups_[i].members, ggens) ? 1 : 0;
  }
}

std::optional<std::size_t> SubgroupLattice::index_of(const BitSet& members) const {
  const auto order = members.count();
  auto it = std::lower_bound(subgroups_.begin(), subgroups_.end(), members,
                             [&](const Subgroup& s, const BitSet& m) {
                               if (s.order != order) return s.order < order;
                               return lex_less(s.members, m);
                             });
  if (it != subgroups_.end() && it->members == members) {
    return static_cast<std::size_t>(it - subgroups_.begin());
  }
  return std::nullopt;
}

bool SubgroupLattice::contains(std::size_t big, std::size_t small) const {
  if (big == small) return true;
  const auto& s = supersets_[small];
  return std::binary_search(s.begin(), s.end(), big);
}

std::vector<std::size_t> SubgroupLattice::proper_nontrivial() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i + 1 < subgroups_.size(); ++i) out.push_back(i);
  return out;
}

std::vector<std::size_t> SubgroupLattice::normal_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < subgroups_.size(); ++i) {
    if (normal_[i]) out.push_back(i);
  }
  return out;
}

std::vector<Subgroup> minimal_subgroups(const SubgroupLattice& l) {
  std::vector<Subgroup> out;
  for (auto i : l.minimal_indices()) out.push_back(l[i]);
  return out;
}

bool is_normalized_by(const FiniteGroup& g, const BitSet& h, std::span<const std::uint32_t> by) {
  const auto elems = h.members();
  for (auto x : by) {
    for (auto y : elems) {
      if (!h.contains(g.conj(x, y))) return false;
    }
  }
  return true;
}

bool is_normal(const FiniteGroup& g, const BitSet& h) {
  if (!is_subgroup(g, h)) throw PreconditionError("is_normal: not a subgroup");
  const auto gens = generating_set(g);
  return is_normalized_by(g, h, gens);
}

BitSet normalizer(const FiniteGroup& g, const BitSet& h) {
  if (!is_subgroup(g, h)) throw PreconditionError("normalizer: not a subgroup");
  const auto elems = h.members();
  BitSet out(g.order());
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (auto y : elems) {
      if (!h.contains(g.conj(x, y))) {
        ok = false;
        break;
      }
    }
    if (ok) out.insert(x);
  }
  return out;
}

BitSet centralizer(const FiniteGroup& g, const BitSet& h) {
  if (!is_subgroup(g, h)) throw PreconditionError("centralizer: not a subgroup");
  const auto elems = h.members();
  BitSet out(g.order());
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (auto y : elems) {
      if (g.mul(x, y) != g.mul(y, x)) {
        ok = false;
        break;
      }
    }
    if (ok) out.insert(x);
  }
  return out;
}

BitSet center(const FiniteGroup& g) {
  const auto gens = generating_set(g);
  BitSet out(g.order());
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (auto y : gens) {
      if (g.mul(x, y) != g.mul(y, x)) {
        ok = false;
        break;
      }
    }
    if (ok) out.insert(x);
  }
  return out;
}

BitSet derived_subgroup(const FiniteGroup& g, const BitSet& h) {
  const auto elems = h.members();
  BitSet comms(g.order());
  for (auto a : elems) {
    for (auto b : elems) {
      comms.insert(g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)));
    }
  }
  const auto gens = comms.members();
  return closure(g, gens);
}

bool is_cyclic(const FiniteGroup& g, const BitSet& h) {
  const auto n = h.count();
  bool found = false;
  h.for_each([&](std::uint32_t x) {
    if (!found && element_order(g, Element{x}) == n) found = true;
  });
  return found;
}

bool is_abelian(const FiniteGroup& g, const BitSet& h) {
  const auto elems = h.members();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      if (g.mul(elems[i], elems[j]) != g.mul(elems[j], elems[i])) return false;
    }
  }
  return true;
}

bool is_elementary_abelian(const FiniteGroup& g, const BitSet& h) {
  const auto [p, k] = prime_power_decomposition(h.count());
  if (p == 0) return false;
  bool ok = true;
  h.for_each([&](std::uint32_t x) {
    if (ok && x != g.identity() && element_order(g, Element{x}) != p) ok = false;
  });
  return ok && is_abelian(g, h);
}

std::vector<std::size_t> sylow_subgroups(const SubgroupLattice& l, std::uint64_t p) {
  const auto n = l.group().order();
  std::uint64_t pa = 1;
  while (n % (pa * p) == 0) pa *= p;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (l[i].order == pa) out.push_back(i);
  }
  return out;
}

BitSet frattini(const SubgroupLattice& l) {
  if (l.size() == 1) return l[0].members;
  BitSet out = l.group().all_elements();
  for (auto i : l.maximal_indices()) out &= l[i].members;
  return out;
}

BitSet p_core(const SubgroupLattice& l, std::uint64_t p) {
  BitSet out = l.group().all_elements();
  for (auto i : sylow_subgroups(l, p)) out &= l[i].members;
  return out;
}

bool is_solvable(const FiniteGroup& g) {
  BitSet h = g.all_elements();
  while (h.count() > 1) {
    auto d = derived_subgroup(g, h);
    if (d == h) return false;
    h = std::move(d);
  }
  return true;
}

bool is_nilpotent(const SubgroupLattice& l) {
  for (auto p : prime_divisors(l.group().order())) {
    if (sylow_subgroups(l, p).size() != 1) return false;
  }
  return true;
}

std::vector<std::size_t> chief_series(const SubgroupLattice& l) {
  std::vector<std::size_t> series{l.trivial_index()};
  while (series.back() != l.full_index()) {
    const auto cur = series.back();
    for (auto j : l.strict_supersets(cur)) {
      if (l.is_normal(j)) {
        series.push_back(j);
        break;
      }
    }
  }
  return series;
}

bool is_supersolvable(const SubgroupLattice& l) {
  const auto s = chief_series(l);
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (!is_prime(l[s[i]].order / l[s[i - 1]].order)) return false;
  }
  return true;
}

int order_length(const FiniteGroup& g) { return order_length(static_cast<std::uint64_t>(g.order())); }

std::size_t container_count(const SubgroupLattice& l, std::size_t i) {
  if (i == l.full_index()) return 0;
  return l.strict_supersets(i).size() - 1;
}

bool satisfies_k_valency(const SubgroupLattice& l, std::size_t k) {
  for (auto i : l.minimal_indices()) {
    if (container_count(l, i) < k) return false;
  }
  return true;
}

nlohmann::json lattice_to_json(const SubgroupLattice& l) {
  nlohmann::json subs = nlohmann::json::array();
  nlohmann::json incl = nlohmann::json::array();
  for (std::size_t i = 0; i < l.size(); ++i) {
    subs.push_back({{"order", l[i].order}, {"normal", l.is_normal(i)}, {"members", l[i].members.members()}});
    for (auto j : l.strict_supersets(i)) incl.push_back({i, j});
  }
  return {{"order", l.group().order()}, {"subgroups", subs}, {"inclusions", incl}};
}

}  // namespace igconn
