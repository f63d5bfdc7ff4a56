#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "igconn/bitset.hpp"

namespace igconn {

// An element of a specific FiniteGroup, identified by its table index.
struct Element {
  std::uint32_t index = 0;
  friend auto operator<=>(const Element&, const Element&) = default;
};

// Size caps shared by the constructors and the enumerators.
struct Limits {
  std::size_t max_order = 10'000;          // permutation closure and products
  std::size_t associativity_bound = 512;   // exhaustive check up to this order
  std::size_t max_lattice = 100'000;       // subgroups per lattice
  std::size_t max_cosets = 20'000;         // coset enumeration
  std::uint64_t iso_node_budget = 10'000'000;

  // Defaults overridden by IGCONN_MAX_ORDER, IGCONN_MAX_LATTICE,
  // IGCONN_MAX_COSETS when set.
  static Limits from_environment();
};

// How much checking a table receives on construction.
enum class Trust {
  verify,      // Latin square, identity, inverses, associativity
  structural,  // associativity guaranteed by the constructor; skip that check
};

// A concrete finite group given by its full multiplication table.
// Immutable after construction.
class FiniteGroup {
 public:
  // Validates every invariant. Associativity is checked exhaustively for
  // order <= associativity_bound and with Light's generator test above it.
  static FiniteGroup from_table(std::vector<std::uint32_t> flat_table, std::size_t order,
                                std::string label = {}, Trust trust = Trust::verify,
                                std::size_t associativity_bound = 512);

  // Group generated by a right-regular action: right_mult[e * gens + g] is
  // element e times generator g, element 0 is the identity and every element
  // is reachable from 0. Used by permutation closure and coset enumeration.
  static FiniteGroup from_right_action(std::size_t order, std::size_t generator_count,
                                       std::span<const std::uint32_t> right_mult,
                                       std::string label = {});

  std::size_t order() const noexcept { return order_; }
  std::uint32_t identity() const noexcept { return identity_; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    return table_[static_cast<std::size_t>(a) * order_ + b];
  }
  Element mul(Element a, Element b) const noexcept { return {mul(a.index, b.index)}; }
  std::uint32_t inv(std::uint32_t a) const noexcept { return inverses_[a]; }
  std::uint32_t conj(std::uint32_t g, std::uint32_t x) const noexcept {
    return mul(mul(g, x), inv(g));
  }
  std::uint32_t power(std::uint32_t a, std::uint64_t k) const noexcept;

  std::span<const std::uint32_t> row(std::uint32_t a) const noexcept {
    return {table_.data() + static_cast<std::size_t>(a) * order_, order_};
  }
  std::span<const std::uint32_t> flat_table() const noexcept { return table_; }

  const std::string& label() const noexcept { return label_; }
  FiniteGroup& set_label(std::string label) {
    label_ = std::move(label);
    return *this;
  }

  bool is_abelian() const noexcept;
  BitSet all_elements() const;

 private:
  FiniteGroup() = default;

  std::size_t order_ = 0;
  std::vector<std::uint32_t> table_;
  std::uint32_t identity_ = 0;
  std::vector<std::uint32_t> inverses_;
  std::string label_;
};

using Permutation = std::vector<std::uint32_t>;

// Closure of the generators under composition (apply left factor first).
// Element 0 is the identity, the rest appear in breadth-first order of
// right multiplication by the generators.
FiniteGroup from_permutation_generators(std::size_t degree, std::span<const Permutation> generators,
                                        std::size_t cap = Limits{}.max_order,
                                        std::string label = {});

FiniteGroup cyclic(std::size_t n);

// Element (g, h) has index g * |H| + h.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h,
                           std::size_t cap = Limits{}.max_order);

// action[h] is the automorphism of N (as an element permutation) attached to
// the element h of H. Element (n, h) has index n * |H| + h and
// (n1, h1)(n2, h2) = (n1 * action[h1](n2), h1 h2).
FiniteGroup semidirect_product(const FiniteGroup& n, const FiniteGroup& h,
                               std::span<const Permutation> action,
                               std::size_t cap = Limits{}.max_order);

struct QuotientGroup {
  FiniteGroup group;
  std::vector<std::uint32_t> projection;  // element of G -> coset index
};

// Cosets are numbered by their smallest element index.
QuotientGroup quotient_group(const FiniteGroup& g, const BitSet& normal_subgroup);

std::uint32_t element_order(const FiniteGroup& g, Element x);
std::vector<std::uint32_t> element_orders(const FiniteGroup& g);
// Size of the conjugacy class of each element, indexed by element.
std::vector<std::uint32_t> conjugacy_class_sizes(const FiniteGroup& g);

// Subgroup generated by the given elements, as a membership set.
BitSet closure(const FiniteGroup& g, std::span<const std::uint32_t> generators);

// A small generating set, picked greedily by decreasing element order.
std::vector<std::uint32_t> generating_set(const FiniteGroup& g);

// Isomorphism search by backtracking on generator images. Returns the
// element map G -> H when one exists; throws BudgetExceeded when the node
// budget runs out before the search is decided.
std::optional<std::vector<std::uint32_t>> find_isomorphism(
    const FiniteGroup& g, const FiniteGroup& h,
    std::uint64_t node_budget = Limits{}.iso_node_budget);

bool are_isomorphic(const FiniteGroup& g, const FiniteGroup& h,
                    std::uint64_t node_budget = Limits{}.iso_node_budget);

bool is_homomorphism(const FiniteGroup& from, const FiniteGroup& to,
                     std::span<const std::uint32_t> map);

}  // namespace igconn
