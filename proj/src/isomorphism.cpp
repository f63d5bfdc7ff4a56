#include <algorithm>
#include <map>
#include <utility>

#include "igconn/error.hpp"
#include "igconn/group.hpp"

namespace igconn {

namespace {

using Signature = std::pair<std::uint32_t, std::uint32_t>;  // (element order, class size)

std::vector<Signature> signatures(const FiniteGroup& g) {
  const auto orders = element_orders(g);
  const auto classes = conjugacy_class_sizes(g);
  std::vector<Signature> out(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) out[i] = {orders[i], classes[i]};
  return out;
}

// Extends a partial isomorphism one generator at a time. The map is kept
// defined on the subgroup generated by the generators fixed so far, and each
// extension is checked edge by edge on the Cayley graph.
class IsoSearch {
 public:
  IsoSearch(const FiniteGroup& g, const FiniteGroup& h, std::vector<std::uint32_t> gens,
            std::vector<std::vector<std::uint32_t>> candidates, std::uint64_t budget)
      : g_(g),
        h_(h),
        gens_(std::move(gens)),
        candidates_(std::move(candidates)),
        budget_(budget),
        phi_(g.order(), unset),
        used_(h.order(), 0) {
    phi_[g.identity()] = h.identity();
    used_[h.identity()] = 1;
    mapped_.push_back(g.identity());
  }

  bool run() { return descend(0); }
  const std::vector<std::uint32_t>& map() const { return phi_; }

 private:
  static constexpr std::uint32_t unset = ~std::uint32_t{0};

  bool descend(std::size_t level) {
    if (level == gens_.size()) return mapped_.size() == g_.order();
    for (auto cand : candidates_[level]) {
      if (++nodes_ > budget_) {
        throw BudgetExceeded("isomorphism search exceeded node budget " + std::to_string(budget_));
      }
      const std::size_t mark = mapped_.size();
      images_.push_back(cand);
      if (extend(level) && descend(level + 1)) return true;
      images_.pop_back();
      for (std::size_t i = mark; i < mapped_.size(); ++i) {
        used_[phi_[mapped_[i]]] = 0;
        phi_[mapped_[i]] = unset;
      }
      mapped_.resize(mark);
    }
    return false;
  }

  bool assign(std::uint32_t x, std::uint32_t image) {
    if (phi_[x] != unset) return phi_[x] == image;
    if (used_[image]) return false;
    phi_[x] = image;
    used_[image] = 1;
    mapped_.push_back(x);
    return true;
  }

  // Close the map under generators 0..level; old elements only need the new
  // generator, new elements need all of them.
  bool extend(std::size_t level) {
    const std::size_t old_count = mapped_.size();
    for (std::size_t i = 0; i < old_count; ++i) {
      const auto x = mapped_[i];
      if (!assign(g_.mul(x, gens_[level]), h_.mul(phi_[x], images_[level]))) return false;
    }
    for (std::size_t i = old_count; i < mapped_.size(); ++i) {
      const auto x = mapped_[i];
      for (std::size_t j = 0; j <= level; ++j) {
        if (!assign(g_.mul(x, gens_[j]), h_.mul(phi_[x], images_[j]))) return false;
      }
    }
    return true;
  }

  const FiniteGroup& g_;
  const FiniteGroup& h_;
  std::vector<std::uint32_t> gens_;
  std::vector<std::vector<std::uint32_t>> candidates_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::uint32_t> phi_;
  std::vector<char> used_;
  std::vector<std::uint32_t> mapped_;
  std::vector<std::uint32_t> images_;
};

}  // namespace

std::optional<std::vector<std::uint32_t>> find_isomorphism(const FiniteGroup& g,
                                                           const FiniteGroup& h,
                                                           std::uint64_t node_budget) {
  if (g.order() != h.order()) return std::nullopt;
  if (g.is_abelian() != h.is_abelian()) return std::nullopt;
  const auto sg = signatures(g);
  const auto sh = signatures(h);
  {
    auto a = sg;
    auto b = sh;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  std::map<Signature, std::vector<std::uint32_t>> by_signature;
  for (std::uint32_t y = 0; y < h.order(); ++y) by_signature[sh[y]].push_back(y);

  // Generators: greedy by decreasing order, ties broken towards the rarest
  // signature so the first levels branch least.
  std::vector<std::uint32_t> order(g.order());
  for (std::uint32_t i = 0; i < g.order(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (sg[a].first != sg[b].first) return sg[a].first > sg[b].first;
    return by_signature[sg[a]].size() < by_signature[sg[b]].size();
  });
  std::vector<std::uint32_t> gens;
  BitSet span = closure(g, gens);
  for (auto x : order) {
    if (span.count() == g.order()) break;
    if (span.contains(x)) continue;
    gens.push_back(x);
    span = closure(g, gens);
  }
  std::vector<std::vector<std::uint32_t>> candidates;
  candidates.reserve(gens.size());
  for (auto x : gens) candidates.push_back(by_signature[sg[x]]);

  IsoSearch search(g, h, gens, std::move(candidates), node_budget);
  if (!search.run()) return std::nullopt;
  auto map = search.map();
  if (!is_homomorphism(g, h, map)) {
    throw InputError("isomorphism witness failed verification");
  }
  return map;
}

bool are_isomorphic(const FiniteGroup& g, const FiniteGroup& h, std::uint64_t node_budget) {
  return find_isomorphism(g, h, node_budget).has_value();
}

}  // namespace igconn
