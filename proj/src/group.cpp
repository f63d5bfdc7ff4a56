#include "igconn/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <string_view>
#include <unordered_map>

#include "igconn/error.hpp"

namespace igconn {

namespace {

std::size_t env_or(const char* name, std::size_t fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || v == 0) {
    throw InputError(std::string("environment variable ") + name + " is not a positive integer");
  }
  return static_cast<std::size_t>(v);
}

// Light's associativity test: the elements y with (xy)z = x(yz) for all x, z
// form a closed set, so it is enough to test a generating set of the magma.
bool light_associativity(std::size_t n, std::span<const std::uint32_t> t) {
  auto at = [&](std::uint32_t a, std::uint32_t b) { return t[a * n + b]; };
  std::vector<std::uint32_t> gens;
  std::vector<std::uint32_t> seen_list;
  std::vector<char> seen(n, 0);
  std::size_t processed = 0;
  auto add = [&](std::uint32_t x) {
    if (!seen[x]) {
      seen[x] = 1;
      seen_list.push_back(x);
    }
  };
  for (std::uint32_t cand = 0; cand < n; ++cand) {
    if (seen[cand]) continue;
    gens.push_back(cand);
    add(cand);
    while (processed < seen_list.size()) {
      const std::uint32_t k = seen_list[processed];
      for (std::size_t i = 0; i <= processed; ++i) {
        add(at(seen_list[i], k));
        add(at(k, seen_list[i]));
      }
      ++processed;
    }
  }
  for (auto g : gens) {
    for (std::uint32_t x = 0; x < n; ++x) {
      const std::uint32_t xg = at(x, g);
      for (std::uint32_t y = 0; y < n; ++y) {
        if (at(xg, y) != at(x, at(g, y))) return false;
      }
    }
  }
  return true;
}

std::string product_label(const FiniteGroup& a, const FiniteGroup& b, std::string_view sep) {
  if (a.label().empty() || b.label().empty()) return {};
  return a.label() + std::string(sep) + b.label();
}

}  // namespace

Limits Limits::from_environment() {
  Limits l;
  l.max_order = env_or("IGCONN_MAX_ORDER", l.max_order);
  l.max_lattice = env_or("IGCONN_MAX_LATTICE", l.max_lattice);
  l.max_cosets = env_or("IGCONN_MAX_COSETS", l.max_cosets);
  return l;
}

FiniteGroup FiniteGroup::from_table(std::vector<std::uint32_t> flat_table, std::size_t order,
                                    std::string label, Trust trust,
                                    std::size_t associativity_bound) {
  const std::size_t n = order;
  if (n == 0) throw InputError("group order must be positive");
  if (flat_table.size() != n * n) {
    std::ostringstream os;
    os << "table has " << flat_table.size() << " entries, expected " << n * n;
    throw InputError(os.str());
  }
  for (std::size_t i = 0; i < flat_table.size(); ++i) {
    if (flat_table[i] >= n) {
      std::ostringstream os;
      os << "entry (" << i / n << ", " << i % n << ") = " << flat_table[i] << " out of range";
      throw InputError(os.str());
    }
  }
  // Latin square: every row and every column is a permutation.
  std::vector<std::uint32_t> stamp(n, 0);
  std::uint32_t round = 0;
  for (std::size_t r = 0; r < n; ++r) {
    ++round;
    for (std::size_t c = 0; c < n; ++c) {
      auto v = flat_table[r * n + c];
      if (stamp[v] == round) throw InputError("row " + std::to_string(r) + " is not a permutation");
      stamp[v] = round;
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    ++round;
    for (std::size_t r = 0; r < n; ++r) {
      auto v = flat_table[r * n + c];
      if (stamp[v] == round) {
        throw InputError("column " + std::to_string(c) + " is not a permutation");
      }
      stamp[v] = round;
    }
  }
  std::optional<std::uint32_t> identity;
  for (std::uint32_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j) {
      ok = flat_table[e * n + j] == j && flat_table[j * n + e] == j;
    }
    if (ok) identity = e;
  }
  if (!identity) throw InputError("table has no two-sided identity");

  std::vector<std::uint32_t> inverses(n);
  for (std::size_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::uint32_t b = 0; b < n; ++b) {
      if (flat_table[a * n + b] == *identity) {
        if (flat_table[b * n + a] != *identity) {
          throw InputError("element " + std::to_string(a) + " has no two-sided inverse");
        }
        inverses[a] = b;
        found = true;
        break;
      }
    }
    if (!found) throw InputError("element " + std::to_string(a) + " has no inverse");
  }

  if (trust == Trust::verify) {
    bool assoc = true;
    if (n <= associativity_bound) {
      for (std::size_t a = 0; a < n && assoc; ++a) {
        for (std::size_t b = 0; b < n && assoc; ++b) {
          const std::size_t ab = flat_table[a * n + b];
          for (std::size_t c = 0; c < n; ++c) {
            if (flat_table[ab * n + c] != flat_table[a * n + flat_table[b * n + c]]) {
              assoc = false;
              break;
            }
          }
        }
      }
    } else {
      assoc = light_associativity(n, flat_table);
    }
    if (!assoc) throw InputError("table is not associative");
  }

  FiniteGroup g;
  g.order_ = n;
  g.table_ = std::move(flat_table);
  g.identity_ = *identity;
  g.inverses_ = std::move(inverses);
  g.label_ = std::move(label);
  return g;
}

FiniteGroup FiniteGroup::from_right_action(std::size_t order, std::size_t generator_count,
                                           std::span<const std::uint32_t> right_mult,
                                           std::string label) {
  const std::size_t n = order;
  const std::size_t k = generator_count;
  std::vector<std::uint32_t> bfs;
  std::vector<std::int64_t> parent(n, -1);
  std::vector<std::uint32_t> via(n, 0);
  bfs.reserve(n);
  bfs.push_back(0);
  parent[0] = 0;
  for (std::size_t head = 0; head < bfs.size(); ++head) {
    const auto e = bfs[head];
    for (std::size_t g = 0; g < k; ++g) {
      const auto next = right_mult[e * k + g];
      if (parent[next] < 0) {
        parent[next] = e;
        via[next] = static_cast<std::uint32_t>(g);
        bfs.push_back(next);
      }
    }
  }
  if (bfs.size() != n) throw InputError("right action is not transitive on the elements");

  std::vector<std::uint32_t> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t* row = table.data() + i * n;
    row[0] = static_cast<std::uint32_t>(i);
    for (std::size_t idx = 1; idx < n; ++idx) {
      const auto j = bfs[idx];
      row[j] = right_mult[static_cast<std::size_t>(row[parent[j]]) * k + via[j]];
    }
  }
  return from_table(std::move(table), n, std::move(label), Trust::structural);
}

std::uint32_t FiniteGroup::power(std::uint32_t a, std::uint64_t k) const noexcept {
  std::uint32_t r = identity_;
  std::uint32_t base = a;
  while (k > 0) {
    if (k & 1U) r = mul(r, base);
    base = mul(base, base);
    k >>= 1U;
  }
  return r;
}

bool FiniteGroup::is_abelian() const noexcept {
  for (std::size_t a = 0; a < order_; ++a) {
    for (std::size_t b = a + 1; b < order_; ++b) {
      if (table_[a * order_ + b] != table_[b * order_ + a]) return false;
    }
  }
  return true;
}

BitSet FiniteGroup::all_elements() const {
  BitSet s(order_);
  for (std::size_t i = 0; i < order_; ++i) s.insert(i);
  return s;
}

FiniteGroup from_permutation_generators(std::size_t degree, std::span<const Permutation> generators,
                                        std::size_t cap, std::string label) {
  if (degree == 0) throw InputError("permutation degree must be positive");
  for (std::size_t gi = 0; gi < generators.size(); ++gi) {
    const auto& p = generators[gi];
    if (p.size() != degree) {
      throw InputError("generator " + std::to_string(gi) + " has wrong degree");
    }
    std::vector<char> hit(degree, 0);
    for (auto x : p) {
      if (x >= degree || hit[x]) {
        throw InputError("generator " + std::to_string(gi) + " is not a bijection");
      }
      hit[x] = 1;
    }
  }
  const std::size_t k = generators.size();
  auto key_of = [&](const std::uint32_t* p) {
    return std::string(reinterpret_cast<const char*>(p), degree * sizeof(std::uint32_t));
  };
  std::vector<std::uint32_t> elems;  // flat, degree entries per element
  std::unordered_map<std::string, std::uint32_t> index;
  std::vector<std::uint32_t> right_mult;

  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0U);
  elems.insert(elems.end(), id.begin(), id.end());
  index.emplace(key_of(id.data()), 0);

  Permutation prod(degree);
  for (std::size_t head = 0; head * degree < elems.size(); ++head) {
    for (std::size_t g = 0; g < k; ++g) {
      const std::uint32_t* e = elems.data() + head * degree;
      for (std::size_t x = 0; x < degree; ++x) prod[x] = generators[g][e[x]];
      auto key = key_of(prod.data());
      auto it = index.find(key);
      std::uint32_t target;
      if (it == index.end()) {
        target = static_cast<std::uint32_t>(index.size());
        if (index.size() + 1 > cap) {
          throw CapExceeded("permutation group exceeds order cap " + std::to_string(cap));
        }
        index.emplace(std::move(key), target);
        elems.insert(elems.end(), prod.begin(), prod.end());
      } else {
        target = it->second;
      }
      right_mult.push_back(target);
    }
  }
  return FiniteGroup::from_right_action(index.size(), k, right_mult, std::move(label));
}

FiniteGroup cyclic(std::size_t n) {
  if (n == 0) throw PreconditionError("cyclic group order must be positive");
  std::vector<std::uint32_t> t(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i * n + j] = static_cast<std::uint32_t>((i + j) % n);
  }
  return FiniteGroup::from_table(std::move(t), n, "Z" + std::to_string(n), Trust::structural);
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, std::size_t cap) {
  const std::size_t a = g.order();
  const std::size_t b = h.order();
  const std::size_t n = a * b;
  if (n > cap) throw CapExceeded("direct product exceeds order cap " + std::to_string(cap));
  std::vector<std::uint32_t> t(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto xg = static_cast<std::uint32_t>(x / b);
    const auto xh = static_cast<std::uint32_t>(x % b);
    for (std::size_t y = 0; y < n; ++y) {
      const auto yg = static_cast<std::uint32_t>(y / b);
      const auto yh = static_cast<std::uint32_t>(y % b);
      t[x * n + y] = static_cast<std::uint32_t>(g.mul(xg, yg) * b + h.mul(xh, yh));
    }
  }
  return FiniteGroup::from_table(std::move(t), n, product_label(g, h, "x"), Trust::structural);
}

FiniteGroup semidirect_product(const FiniteGroup& n, const FiniteGroup& h,
                               std::span<const Permutation> action, std::size_t cap) {
  const std::size_t nn = n.order();
  const std::size_t hn = h.order();
  if (action.size() != hn) {
    throw PreconditionError("action must assign an automorphism to every element of H");
  }
  for (std::size_t x = 0; x < hn; ++x) {
    const auto& phi = action[x];
    if (phi.size() != nn) throw PreconditionError("action map has wrong size");
    std::vector<char> hit(nn, 0);
    for (auto v : phi) {
      if (v >= nn || hit[v]) {
        throw PreconditionError("action(" + std::to_string(x) + ") is not a bijection");
      }
      hit[v] = 1;
    }
    for (std::uint32_t a = 0; a < nn; ++a) {
      for (std::uint32_t b = 0; b < nn; ++b) {
        if (phi[n.mul(a, b)] != n.mul(phi[a], phi[b])) {
          throw PreconditionError("action(" + std::to_string(x) + ") is not an automorphism");
        }
      }
    }
  }
  for (std::uint32_t a = 0; a < nn; ++a) {
    if (action[h.identity()][a] != a) {
      throw PreconditionError("action of the identity is not the identity map");
    }
  }
  for (std::uint32_t x = 0; x < hn; ++x) {
    for (std::uint32_t y = 0; y < hn; ++y) {
      const auto& xy = action[h.mul(x, y)];
      for (std::uint32_t a = 0; a < nn; ++a) {
        if (xy[a] != action[x][action[y][a]]) {
          throw PreconditionError("action is not a homomorphism into Aut(N)");
        }
      }
    }
  }
  const std::size_t total = nn * hn;
  if (total > cap) throw CapExceeded("semidirect product exceeds order cap " + std::to_string(cap));
  std::vector<std::uint32_t> t(total * total);
  for (std::size_t p = 0; p < total; ++p) {
    const auto n1 = static_cast<std::uint32_t>(p / hn);
    const auto h1 = static_cast<std::uint32_t>(p % hn);
    for (std::size_t q = 0; q < total; ++q) {
      const auto n2 = static_cast<std::uint32_t>(q / hn);
      const auto h2 = static_cast<std::uint32_t>(q % hn);
      t[p * total + q] =
          static_cast<std::uint32_t>(n.mul(n1, action[h1][n2]) * hn + h.mul(h1, h2));
    }
  }
  return FiniteGroup::from_table(std::move(t), total, product_label(n, h, ":"),
                                 Trust::structural);
}

QuotientGroup quotient_group(const FiniteGroup& g, const BitSet& normal_subgroup) {
  const std::size_t n = g.order();
  if (normal_subgroup.universe() != n) throw PreconditionError("subgroup belongs to another group");
  if (!normal_subgroup.contains(g.identity())) throw PreconditionError("N is not a subgroup");
  const auto members = normal_subgroup.members();
  for (auto a : members) {
    for (auto b : members) {
      if (!normal_subgroup.contains(g.mul(a, b))) throw PreconditionError("N is not a subgroup");
    }
  }
  for (auto x : generating_set(g)) {
    for (auto a : members) {
      if (!normal_subgroup.contains(g.conj(x, a))) throw PreconditionError("N is not normal in G");
    }
  }
  constexpr std::uint32_t unset = ~std::uint32_t{0};
  std::vector<std::uint32_t> proj(n, unset);
  std::vector<std::uint32_t> reps;
  for (std::uint32_t x = 0; x < n; ++x) {
    if (proj[x] != unset) continue;
    const auto c = static_cast<std::uint32_t>(reps.size());
    reps.push_back(x);
    for (auto a : members) proj[g.mul(x, a)] = c;
  }
  const std::size_t m = reps.size();
  std::vector<std::uint32_t> t(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) t[i * m + j] = proj[g.mul(reps[i], reps[j])];
  }
  std::string label;
  if (!g.label().empty()) label = g.label() + "/N" + std::to_string(members.size());
  return {FiniteGroup::from_table(std::move(t), m, std::move(label), Trust::structural),
          std::move(proj)};
}

std::uint32_t element_order(const FiniteGroup& g, Element x) {
  std::uint32_t k = 1;
  std::uint32_t cur = x.index;
  while (cur != g.identity()) {
    cur = g.mul(cur, x.index);
    ++k;
  }
  return k;
}

std::vector<std::uint32_t> element_orders(const FiniteGroup& g) {
  std::vector<std::uint32_t> out(g.order());
  for (std::uint32_t x = 0; x < g.order(); ++x) out[x] = element_order(g, {x});
  return out;
}

std::vector<std::uint32_t> conjugacy_class_sizes(const FiniteGroup& g) {
  const std::size_t n = g.order();
  constexpr std::uint32_t unset = ~std::uint32_t{0};
  std::vector<std::uint32_t> size(n, unset);
  std::vector<char> in_class(n, 0);
  std::vector<std::uint32_t> cls;
  for (std::uint32_t x = 0; x < n; ++x) {
    if (size[x] != unset) continue;
    cls.clear();
    for (std::uint32_t y = 0; y < n; ++y) {
      const auto c = g.conj(y, x);
      if (!in_class[c]) {
        in_class[c] = 1;
        cls.push_back(c);
      }
    }
    for (auto c : cls) {
      size[c] = static_cast<std::uint32_t>(cls.size());
      in_class[c] = 0;
    }
  }
  return size;
}

BitSet closure(const FiniteGroup& g, std::span<const std::uint32_t> generators) {
  BitSet s(g.order());
  std::vector<std::uint32_t> list{g.identity()};
  s.insert(g.identity());
  for (std::size_t head = 0; head < list.size(); ++head) {
    for (auto x : generators) {
      const auto y = g.mul(list[head], x);
      if (!s.contains(y)) {
        s.insert(y);
        list.push_back(y);
      }
    }
  }
  return s;
}

std::vector<std::uint32_t> generating_set(const FiniteGroup& g) {
  const auto orders = element_orders(g);
  std::vector<std::uint32_t> by_order(g.order());
  std::iota(by_order.begin(), by_order.end(), 0U);
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](std::uint32_t a, std::uint32_t b) { return orders[a] > orders[b]; });
  std::vector<std::uint32_t> gens;
  BitSet span = closure(g, gens);
  for (auto x : by_order) {
    if (span.count() == g.order()) break;
    if (span.contains(x)) continue;
    gens.push_back(x);
    span = closure(g, gens);
  }
  return gens;
}

bool is_homomorphism(const FiniteGroup& from, const FiniteGroup& to,
                     std::span<const std::uint32_t> map) {
  if (map.size() != from.order()) return false;
  for (auto v : map) {
    if (v >= to.order()) return false;
  }
  for (std::uint32_t a = 0; a < from.order(); ++a) {
    for (std::uint32_t b = 0; b < from.order(); ++b) {
      if (map[from.mul(a, b)] != to.mul(map[a], map[b])) return false;
    }
  }
  return true;
}

}  // namespace igconn
