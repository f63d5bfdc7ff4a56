#include "igconn/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "igconn/error.hpp"
#include "igconn/group_io.hpp"
#include "igconn/numtheory.hpp"

namespace igconn {

namespace {

std::size_t mod(long v, std::size_t p) {
  const long r = v % static_cast<long>(p);
  return static_cast<std::size_t>(r < 0 ? r + static_cast<long>(p) : r);
}

std::string abelian_label(std::vector<std::size_t> parts) {
  std::sort(parts.rbegin(), parts.rend());
  std::string s;
  for (auto p : parts) s += (s.empty() ? "Z" : "xZ") + std::to_string(p);
  return s;
}

// Partitions of n into at most max_parts parts, largest part first.
void partitions(std::size_t n, std::size_t max_part, std::size_t max_parts,
                std::vector<std::size_t>& cur, std::vector<std::vector<std::size_t>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  if (cur.size() == max_parts) return;
  for (std::size_t k = std::min(n, max_part); k >= 1; --k) {
    cur.push_back(k);
    partitions(n - k, k, max_parts, cur, out);
    cur.pop_back();
  }
}

CatalogEntry entry(std::string label, std::string ctor, std::vector<std::string> params,
                   std::size_t order, bool opt_in = false) {
  return {std::move(label), std::move(ctor), std::move(params), order, opt_in};
}

std::vector<std::string> nums(std::initializer_list<long> v) {
  std::vector<std::string> out;
  for (auto x : v) out.push_back(std::to_string(x));
  return out;
}

long to_long(const std::string& s, const CatalogEntry& e) {
  long v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end) {
    throw InputError("catalog entry " + e.label + ": parameter '" + s + "' is not an integer");
  }
  return v;
}

std::size_t to_size(const std::string& s, const CatalogEntry& e) {
  const long v = to_long(s, e);
  if (v <= 0) throw InputError("catalog entry " + e.label + ": parameter '" + s + "' must be positive");
  return static_cast<std::size_t>(v);
}

void expect_params(const CatalogEntry& e, std::size_t n) {
  if (e.params.size() != n) {
    throw InputError("catalog entry " + e.label + ": constructor " + e.constructor + " takes " +
                     std::to_string(n) + " parameters");
  }
}

}  // namespace

FiniteGroup abelian(const std::vector<std::size_t>& parts) {
  if (parts.empty()) return cyclic(1);
  FiniteGroup g = cyclic(parts.front());
  for (std::size_t i = 1; i < parts.size(); ++i) g = direct_product(g, cyclic(parts[i]));
  return g.set_label(abelian_label(parts));
}

FiniteGroup cyclic_semidirect(std::size_t n, std::size_t m, std::size_t r) {
  const FiniteGroup zn = cyclic(n);
  const FiniteGroup zm = cyclic(m);
  std::vector<Permutation> action(m, Permutation(n));
  std::size_t rk = 1;  // r^k mod n
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t x = 0; x < n; ++x) action[k][x] = static_cast<std::uint32_t>(x * rk % n);
    rk = rk * r % n;
  }
  if (rk != 1 % n) {
    throw PreconditionError("multiplier " + std::to_string(r) + " does not have order dividing " +
                            std::to_string(m) + " mod " + std::to_string(n));
  }
  return semidirect_product(zn, zm, action);
}

FiniteGroup dihedral(std::size_t n) {
  if (n < 3) throw PreconditionError("dihedral group D_n needs n >= 3");
  return cyclic_semidirect(n, 2, n - 1).set_label("D" + std::to_string(n));
}

FiniteGroup generalized_quaternion(std::size_t order) {
  const auto [p, k] = prime_power_decomposition(order);
  if (p != 2 || k < 3) throw PreconditionError("generalized quaternion order must be 2^k, k >= 3");
  const long half = static_cast<long>(order / 2);
  Presentation pr{2,
                  {letter(0, half), relation(letter(0, half / 2), letter(1, 2)),
                   relation(concat({letter(1, -1), letter(0), letter(1)}), letter(0, -1))}};
  return todd_coxeter(pr).group.set_label("Q" + std::to_string(order));
}

FiniteGroup symmetric(std::size_t n) {
  if (n < 1) throw PreconditionError("symmetric group needs n >= 1");
  std::vector<Permutation> gens;
  if (n >= 2) {
    Permutation cyc(n);
    Permutation tr(n);
    std::iota(tr.begin(), tr.end(), 0U);
    std::swap(tr[0], tr[1]);
    for (std::size_t i = 0; i < n; ++i) cyc[i] = static_cast<std::uint32_t>((i + 1) % n);
    gens = {cyc, tr};
  }
  return from_permutation_generators(n, gens).set_label("S" + std::to_string(n));
}

FiniteGroup alternating(std::size_t n) {
  if (n < 1) throw PreconditionError("alternating group needs n >= 1");
  std::vector<Permutation> gens;
  for (std::size_t i = 2; i < n; ++i) {
    Permutation c(n);
    std::iota(c.begin(), c.end(), 0U);
    c[0] = 1;
    c[1] = static_cast<std::uint32_t>(i);
    c[i] = 0;
    gens.push_back(c);
  }
  return from_permutation_generators(n, gens).set_label("A" + std::to_string(n));
}

FiniteGroup cyclic_wreath(std::size_t p) {
  if (!is_prime(p)) throw PreconditionError("wreath product needs a prime");
  const std::size_t deg = p * p;
  Permutation base(deg);
  Permutation top(deg);
  std::iota(base.begin(), base.end(), 0U);
  for (std::size_t i = 0; i < p; ++i) base[i] = static_cast<std::uint32_t>((i + 1) % p);
  for (std::size_t i = 0; i < deg; ++i) top[i] = static_cast<std::uint32_t>((i + p) % deg);
  std::vector<Permutation> gens{base, top};
  return from_permutation_generators(deg, gens)
      .set_label("Z" + std::to_string(p) + "wrZ" + std::to_string(p));
}

FiniteGroup linear_semidirect(std::size_t p, std::size_t d, std::size_t m,
                              const std::vector<long>& matrix) {
  if (!is_prime(p) || d == 0) throw PreconditionError("linear action needs a prime p and d >= 1");
  if (matrix.size() != d * d) throw PreconditionError("action matrix must be d x d");
  const FiniteGroup n = abelian(std::vector<std::size_t>(d, p));
  const std::size_t size = n.order();
  // Element index of abelian(p, ..., p) is the base-p number with the first
  // coordinate most significant.
  auto decode = [&](std::size_t x) {
    std::vector<std::size_t> v(d);
    for (std::size_t i = d; i-- > 0;) {
      v[i] = x % p;
      x /= p;
    }
    return v;
  };
  auto encode = [&](const std::vector<std::size_t>& v) {
    std::size_t x = 0;
    for (auto c : v) x = x * p + c;
    return x;
  };
  Permutation step(size);
  for (std::size_t x = 0; x < size; ++x) {
    const auto v = decode(x);
    std::vector<std::size_t> w(d, 0);
    for (std::size_t i = 0; i < d; ++i) {
      long acc = 0;
      for (std::size_t j = 0; j < d; ++j) acc += matrix[i * d + j] * static_cast<long>(v[j]);
      w[i] = mod(acc, p);
    }
    step[x] = static_cast<std::uint32_t>(encode(w));
  }
  std::vector<Permutation> action(m, Permutation(size));
  std::iota(action[0].begin(), action[0].end(), 0U);
  for (std::size_t k = 1; k < m; ++k) {
    for (std::size_t x = 0; x < size; ++x) action[k][x] = step[action[k - 1][x]];
  }
  for (std::size_t x = 0; x < size; ++x) {
    if (step[action[m - 1][x]] != x) {
      throw PreconditionError("action matrix order does not divide " + std::to_string(m));
    }
  }
  return semidirect_product(n, cyclic(m), action);
}

FiniteGroup lambda_group(std::size_t p, std::size_t q, std::size_t lambda) {
  const long l = static_cast<long>(lambda % p);
  return linear_semidirect(p, 2, q, {l, 0, 0, l})
      .set_label("Z" + std::to_string(p) + "^2:Z" + std::to_string(q) + ":lam" +
                 std::to_string(lambda));
}

FiniteGroup special_linear_2_3() {
  // Action on the nine vectors of F_3^2, point 3x + y for (x, y).
  auto act = [](long a, long b, long c, long d) {
    Permutation perm(9);
    for (long x = 0; x < 3; ++x) {
      for (long y = 0; y < 3; ++y) {
        const long nx = ((a * x + b * y) % 3 + 3) % 3;
        const long ny = ((c * x + d * y) % 3 + 3) % 3;
        perm[static_cast<std::size_t>(3 * x + y)] = static_cast<std::uint32_t>(3 * nx + ny);
      }
    }
    return perm;
  };
  std::vector<Permutation> gens{act(1, 1, 0, 1), act(1, 0, 1, 1)};
  return from_permutation_generators(9, gens).set_label("Q8:Z3");
}

Presentation exceptional_p4_presentation(std::int64_t p, std::int64_t k, std::int64_t m,
                                         std::int64_t n) {
  // generators a, b, c are 0, 1, 2
  const long pl = static_cast<long>(p);
  return Presentation{
      3,
      {letter(0, pl * pl), letter(1, pl), relation(concat({letter(0), letter(1)}), concat({letter(1), letter(0)})),
       relation(letter(0, pl), letter(2, static_cast<long>(k) * pl)),
       relation(concat({letter(1), letter(2), letter(1, -1)}), letter(2, 1 + pl)),
       relation(concat({letter(0), letter(2), letter(0, -1)}),
                concat({letter(2, 1 + static_cast<long>(m) * pl), letter(1, static_cast<long>(n))}))}};
}

std::vector<std::array<std::int64_t, 3>> exceptional_p4_triples() {
  return {{1, 0, -1}, {1, -1, -1}, {1, 1, -1}, {-1, 0, 1}, {-1, 1, 1}, {-1, -1, 1}};
}

FiniteGroup exceptional_p4(std::int64_t p, std::int64_t k, std::int64_t m, std::int64_t n,
                           std::size_t max_cosets) {
  if (p != 3) throw PreconditionError("the (k, m, n) family is defined for p = 3 only");
  const auto triples = exceptional_p4_triples();
  if (std::find(triples.begin(), triples.end(), std::array<std::int64_t, 3>{k, m, n}) == triples.end()) {
    throw PreconditionError("need k in {-1, 1}, m in {-1, 0, 1} and n = -k");
  }
  auto g = todd_coxeter(exceptional_p4_presentation(p, k, m, n), max_cosets).group;
  if (g.order() != 81) {
    throw InputError("exceptional presentation closed at order " + std::to_string(g.order()) +
                     ", expected 81");
  }
  return g.set_label("G81:k" + std::to_string(k) + "m" + std::to_string(m) + "n" +
                     std::to_string(n));
}

Presentation exceptional_p4_typeII_presentation(std::int64_t p) {
  const long pl = static_cast<long>(p);
  return Presentation{
      3,
      {letter(0, pl * pl), letter(1, pl), letter(2, pl),
       relation(concat({letter(1), letter(2)}), concat({letter(2), letter(1)})),
       relation(concat({letter(1), letter(0), letter(1, -1)}), letter(0, pl + 1)),
       relation(concat({letter(2), letter(0), letter(2, -1)}), concat({letter(0), letter(1)}))}};
}

FiniteGroup exceptional_p4_typeII(std::int64_t p, std::size_t max_cosets) {
  if (p <= 3 || !is_prime(static_cast<std::uint64_t>(p))) {
    throw PreconditionError("this family is defined for primes p > 3");
  }
  auto g = todd_coxeter(exceptional_p4_typeII_presentation(p), max_cosets).group;
  const auto expected = ipow(static_cast<std::uint64_t>(p), 4);
  if (g.order() != expected) {
    throw InputError("presentation closed at order " + std::to_string(g.order()) + ", expected " +
                     std::to_string(expected));
  }
  return g.set_label("G" + std::to_string(expected) + ":typeII");
}

std::vector<CatalogEntry> standard_families(bool include_opt_in) {
  std::vector<CatalogEntry> out;
  for (long n = 1; n <= 64; ++n) out.push_back(entry("Z" + std::to_string(n), "cyclic", nums({n}), n));
  out.push_back(entry("Z81", "cyclic", nums({81}), 81));
  out.push_back(entry("Z210", "cyclic", nums({210}), 210));

  // Non-cyclic abelian p-groups: rank <= 4 for 2-groups up to 64, rank <= 3
  // for 3-groups up to 81, plus rank two for 5 and 7.
  struct Family {
    std::size_t p;
    std::size_t max_exp;
    std::size_t max_rank;
  };
  for (auto f : {Family{2, 6, 4}, Family{3, 4, 3}, Family{5, 2, 2}, Family{7, 2, 2}}) {
    for (std::size_t a = 2; a <= f.max_exp; ++a) {
      std::vector<std::vector<std::size_t>> parts;
      std::vector<std::size_t> cur;
      partitions(a, a, f.max_rank, cur, parts);
      for (const auto& exps : parts) {
        if (exps.size() < 2) continue;
        std::vector<std::size_t> sizes;
        std::vector<std::string> params;
        for (auto e : exps) {
          sizes.push_back(ipow(f.p, static_cast<int>(e)));
          params.push_back(std::to_string(sizes.back()));
        }
        out.push_back(entry(abelian_label(sizes), "abelian", params, ipow(f.p, static_cast<int>(a))));
      }
    }
  }

  for (long n = 3; n <= 16; ++n) out.push_back(entry("D" + std::to_string(n), "dihedral", nums({n}), 2 * n));
  for (long n : {8, 16, 32}) out.push_back(entry("Q" + std::to_string(n), "quaternion", nums({n}), n));

  out.push_back(entry("S3", "symmetric", nums({3}), 6));
  out.push_back(entry("S4", "symmetric", nums({4}), 24));
  out.push_back(entry("A4", "alternating", nums({4}), 12));
  out.push_back(entry("A5", "alternating", nums({5}), 60));
  out.push_back(entry("Z3wrZ3", "wreath", nums({3}), 81));

  // Non-abelian groups of order p^3 for odd p.
  out.push_back(entry("Heis3", "linear_semidirect", nums({3, 2, 3, 1, 1, 0, 1}), 27));
  out.push_back(entry("Heis5", "linear_semidirect", nums({5, 2, 5, 1, 1, 0, 1}), 125));
  out.push_back(entry("Z9:Z3", "cyclic_semidirect", nums({9, 3, 4}), 27));
  out.push_back(entry("Z25:Z5", "cyclic_semidirect", nums({25, 5, 6}), 125));

  // Metacyclic and Frobenius-type groups.
  out.push_back(entry("Dic3", "cyclic_semidirect", nums({3, 4, 2}), 12));
  out.push_back(entry("F20", "cyclic_semidirect", nums({5, 4, 2}), 20));
  out.push_back(entry("F21", "cyclic_semidirect", nums({7, 3, 2}), 21));
  out.push_back(entry("Z5:Z4", "cyclic_semidirect", nums({5, 4, 4}), 20));
  out.push_back(entry("Z3:Z8", "cyclic_semidirect", nums({3, 8, 2}), 24));
  out.push_back(entry("SD16", "cyclic_semidirect", nums({8, 2, 3}), 16));
  out.push_back(entry("M16", "cyclic_semidirect", nums({8, 2, 5}), 16));
  out.push_back(entry("Z4:Z4", "cyclic_semidirect", nums({4, 4, 3}), 16));
  out.push_back(entry("Z2^3:Z7", "linear_semidirect", nums({2, 3, 7, 0, 0, 1, 1, 0, 1, 0, 1, 0}), 56));
  out.push_back(entry("Z2^4:Z5", "linear_semidirect",
                      nums({2, 4, 5, 0, 0, 0, 1, 1, 0, 0, 1, 0, 1, 0, 1, 0, 0, 1, 1}), 80));
  out.push_back(entry("Z5^2:Z3", "linear_semidirect", nums({5, 2, 3, 0, -1, 1, -1}), 75));
  out.push_back(entry("Z3^2:Z4", "linear_semidirect", nums({3, 2, 4, 0, -1, 1, 0}), 36));
  out.push_back(entry("Z2^2:Z9", "linear_semidirect", nums({2, 2, 9, 0, 1, 1, 1}), 36));
  out.push_back(entry("Q8:Z3", "sl23", {}, 24));
  out.push_back(entry("Z7^2:Z3:lam2", "lambda", nums({7, 3, 2}), 147));
  out.push_back(entry("Z7^2:Z3:lam4", "lambda", nums({7, 3, 4}), 147));
  out.push_back(entry("Z5^2:Z2:lam4", "lambda", nums({5, 2, 4}), 50));
  out.push_back(entry("Z3^2:Z2:lam2", "lambda", nums({3, 2, 2}), 18));
  out.push_back(entry("Z7^2:Z3:diag", "linear_semidirect", nums({7, 2, 3, 2, 0, 0, 4}), 147));
  out.push_back(entry("Z7^2:Z3:half", "linear_semidirect", nums({7, 2, 3, 2, 0, 0, 1}), 147));

  // Direct products.
  auto product = [&](const std::string& a, const std::string& b, std::size_t order) {
    out.push_back(entry(a + "x" + b, "product", {a, b}, order));
  };
  product("D4", "Z2", 16);
  product("Q8", "Z2", 16);
  product("D4", "Z3", 24);
  product("Q8", "Z3", 24);
  product("S3", "Z3", 18);
  product("S3", "Z5", 30);
  product("S3", "Z35", 210);
  product("A4", "Z2", 24);
  product("A4", "Z5", 60);
  product("A5", "Z2", 120);
  product("Z2xZ2", "Z3", 12);
  product("Z3xZ3", "Z2", 18);
  product("Z2xZ2", "Z5", 20);
  product("Z3xZ3", "Z5", 45);
  product("Z4xZ2", "Z3", 24);
  product("Z2xZ2", "Z15", 60);
  product("D4", "Z5", 40);
  product("F21", "Z2", 42);
  product("Z2^3:Z7", "Z3", 168);

  for (const auto& t : exceptional_p4_triples()) {
    const std::string label = "G81:k" + std::to_string(t[0]) + "m" + std::to_string(t[1]) + "n" +
                              std::to_string(t[2]);
    out.push_back(entry(label, "exceptional_p4", nums({3, t[0], t[1], t[2]}), 81));
  }
  if (include_opt_in) {
    out.push_back(entry("G625:typeII", "exceptional_p4_typeII", nums({5}), 625, true));
    out.push_back(entry("G2401:typeII", "exceptional_p4_typeII", nums({7}), 2401, true));
  }
  return out;
}

std::optional<CatalogEntry> find_entry(const std::vector<CatalogEntry>& entries,
                                       std::string_view label) {
  for (const auto& e : entries) {
    if (e.label == label) return e;
  }
  return std::nullopt;
}

FiniteGroup build_entry(const CatalogEntry& e, const std::vector<CatalogEntry>& entries,
                        const Limits& limits) {
  const auto& c = e.constructor;
  const auto& ps = e.params;
  auto sz = [&](std::size_t i) { return to_size(ps.at(i), e); };
  FiniteGroup g = cyclic(1);
  if (c == "cyclic") {
    expect_params(e, 1);
    g = cyclic(sz(0));
  } else if (c == "abelian") {
    if (ps.empty()) throw InputError("catalog entry " + e.label + ": abelian needs parts");
    std::vector<std::size_t> parts;
    for (std::size_t i = 0; i < ps.size(); ++i) parts.push_back(sz(i));
    g = abelian(parts);
  } else if (c == "dihedral") {
    expect_params(e, 1);
    g = dihedral(sz(0));
  } else if (c == "quaternion") {
    expect_params(e, 1);
    g = generalized_quaternion(sz(0));
  } else if (c == "symmetric") {
    expect_params(e, 1);
    g = symmetric(sz(0));
  } else if (c == "alternating") {
    expect_params(e, 1);
    g = alternating(sz(0));
  } else if (c == "wreath") {
    expect_params(e, 1);
    g = cyclic_wreath(sz(0));
  } else if (c == "cyclic_semidirect") {
    expect_params(e, 3);
    g = cyclic_semidirect(sz(0), sz(1), sz(2));
  } else if (c == "linear_semidirect") {
    if (ps.size() < 3) throw InputError("catalog entry " + e.label + ": linear_semidirect needs p d m");
    const auto d = sz(1);
    expect_params(e, 3 + d * d);
    std::vector<long> m;
    for (std::size_t i = 3; i < ps.size(); ++i) m.push_back(to_long(ps[i], e));
    g = linear_semidirect(sz(0), d, sz(2), m);
  } else if (c == "lambda") {
    expect_params(e, 3);
    g = lambda_group(sz(0), sz(1), sz(2));
  } else if (c == "sl23") {
    expect_params(e, 0);
    g = special_linear_2_3();
  } else if (c == "product") {
    expect_params(e, 2);
    std::vector<FiniteGroup> parts;
    for (const auto& ref : ps) {
      auto sub = find_entry(entries, ref);
      if (!sub || sub->constructor == "product") {
        throw InputError("catalog entry " + e.label + ": product needs non-product entry '" + ref + "'");
      }
      parts.push_back(build_entry(*sub, entries, limits));
    }
    g = direct_product(parts[0], parts[1], limits.max_order);
  } else if (c == "exceptional_p4") {
    expect_params(e, 4);
    g = exceptional_p4(to_long(ps[0], e), to_long(ps[1], e), to_long(ps[2], e), to_long(ps[3], e),
                       limits.max_cosets);
  } else if (c == "exceptional_p4_typeII") {
    expect_params(e, 1);
    g = exceptional_p4_typeII(to_long(ps[0], e), std::max<std::size_t>(limits.max_cosets, 200'000));
  } else {
    throw InputError("catalog entry " + e.label + ": unknown constructor '" + c + "'");
  }
  if (g.order() != e.order) {
    throw InputError("catalog entry " + e.label + " has order " + std::to_string(g.order()) +
                     ", declared " + std::to_string(e.order));
  }
  if (g.order() > limits.max_order) {
    throw CapExceeded("catalog entry " + e.label + " exceeds order cap " +
                      std::to_string(limits.max_order));
  }
  return g.set_label(e.label);
}

FiniteGroup build_catalog_group(std::string_view label, const Limits& limits) {
  const auto entries = standard_families(true);
  auto e = find_entry(entries, label);
  if (!e) throw InputError("no catalog entry '" + std::string(label) + "'");
  return build_entry(*e, entries, limits);
}

std::string manifest_text(const std::vector<CatalogEntry>& entries) {
  std::ostringstream os;
  os << "# igconn catalog manifest v1\n# label order constructor params...\n";
  for (const auto& e : entries) {
    os << e.label << ' ' << e.order << ' ' << e.constructor;
    for (const auto& p : e.params) os << ' ' << p;
    if (e.opt_in) os << " opt-in";
    os << '\n';
  }
  return os.str();
}

std::vector<CatalogEntry> parse_manifest(std::string_view text) {
  std::vector<CatalogEntry> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok.size() < 3) {
      throw InputError("manifest line " + std::to_string(lineno) + ": expected label order constructor");
    }
    CatalogEntry e;
    e.label = tok[0];
    e.constructor = tok[2];
    try {
      std::size_t pos = 0;
      const auto v = std::stoull(tok[1], &pos);
      if (pos != tok[1].size() || v == 0) throw std::invalid_argument("order");
      e.order = static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      throw InputError("manifest line " + std::to_string(lineno) + ": bad order '" + tok[1] + "'");
    }
    std::size_t end = tok.size();
    if (tok.back() == "opt-in") {
      e.opt_in = true;
      --end;
    }
    e.params.assign(tok.begin() + 3, tok.begin() + static_cast<std::ptrdiff_t>(end));
    if (find_entry(out, e.label)) {
      throw InputError("manifest line " + std::to_string(lineno) + ": duplicate label " + e.label);
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<CatalogEntry> read_manifest(const std::filesystem::path& path) {
  try {
    return parse_manifest(read_text_file(path));
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

std::vector<FiniteGroup> ingest_tables(const std::filesystem::path& path, const Limits& limits) {
  auto groups = read_group_tables(path, limits.associativity_bound);
  for (const auto& g : groups) {
    if (g.order() > limits.max_order) {
      throw CapExceeded(path.string() + ": group '" + g.label() + "' exceeds order cap " +
                        std::to_string(limits.max_order));
    }
  }
  return groups;
}

}  // namespace igconn
