#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "igconn/catalog.hpp"
#include "igconn/error.hpp"
#include "igconn/group_io.hpp"
#include "igconn/lattice.hpp"
#include "igconn/numtheory.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace igconn;
using test_support::catalog_groups;
using test_support::group;
using test_support::lattice;

namespace {

std::set<oracle::Members> lattice_members(const SubgroupLattice& l) {
  std::set<oracle::Members> out;
  for (const auto& s : l.subgroups()) out.insert(s.members.members());
  return out;
}

std::size_t count_of_order(const SubgroupLattice& l, std::size_t k) {
  std::size_t c = 0;
  for (const auto& s : l.subgroups()) c += s.order == k ? 1 : 0;
  return c;
}

bool is_proper_subset_check(const SubgroupLattice& l, std::size_t i, std::size_t j) {
  return l[i].members.is_subset_of(l[j].members) && l[i].order < l[j].order;
}

BitSet bits(std::size_t n, std::initializer_list<std::uint32_t> xs) {
  BitSet b(n);
  for (auto x : xs) b.insert(x);
  return b;
}

}  // namespace

TEST_SUITE("lattice") {

TEST_CASE("subgroup counts of small groups") {
  const auto s3 = lattice("S3");
  CHECK(s3.size() == 6);
  CHECK(s3.proper_nontrivial().size() == 4);
  CHECK(count_of_order(s3, 3) == 1);
  CHECK(count_of_order(s3, 2) == 3);
  CHECK(lattice("Q8").proper_nontrivial().size() == 4);
  for (auto label : {"Z4", "Z9", "Z25", "Z49"}) CHECK(lattice(label).proper_nontrivial().size() == 1);
}

TEST_CASE("lattice matches brute-force subgroup enumeration up to order 24") {
  std::size_t checked = 0;
  for (const auto& g : catalog_groups()) {
    if (g.order() > 24) continue;
    CAPTURE(g.label());
    const auto l = SubgroupLattice::build(g);
    CHECK(lattice_members(l) == oracle::all_subgroups(g));
    ++checked;
  }
  CHECK(checked >= 40);
}

TEST_CASE("lattice matches brute force on random permutation groups") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t degree = 3 + rng() % 3;
    std::vector<Permutation> gens;
    const int count = 1 + static_cast<int>(rng() % 2);
    for (int i = 0; i < count; ++i) {
      Permutation p(degree);
      std::iota(p.begin(), p.end(), 0U);
      std::shuffle(p.begin(), p.end(), rng);
      gens.push_back(p);
    }
    const auto g = from_permutation_generators(degree, gens);
    if (g.order() > 24) continue;
    CAPTURE(trial);
    CHECK(lattice_members(SubgroupLattice::build(g)) == oracle::all_subgroups(g));
  }
}

TEST_CASE("lattice structure invariants on the catalog") {
  for (const auto& g : catalog_groups()) {
    if (g.order() > 128) continue;
    CAPTURE(g.label());
    const auto l = SubgroupLattice::build(g);
    CHECK(l[l.trivial_index()].order == 1);
    CHECK(l[l.full_index()].order == g.order());
    const auto all = lattice_members(l);
    for (std::size_t i = 0; i < l.size(); ++i) {
      CHECK(g.order() % l[i].order == 0);
      CHECK(l[i].members.count() == l[i].order);
      CHECK(closure(g, l[i].generators) == l[i].members);
      for (std::size_t j : l.strict_supersets(i)) CHECK(is_proper_subset_check(l, i, j));
    }
    // closed under intersection
    for (std::size_t i = 1; i < l.size(); i += 3) {
      for (std::size_t j = i + 1; j < l.size(); j += 5) {
        CHECK(all.count((l[i].members & l[j].members).members()) == 1);
      }
    }
    for (std::size_t m : l.minimal_indices()) CHECK(is_prime(l[m].order));
    for (std::size_t v : l.proper_nontrivial()) {
      bool has_minimal = false;
      for (std::size_t m : l.minimal_indices()) has_minimal |= l[m].members.is_subset_of(l[v].members);
      CHECK(has_minimal);
    }
  }
}

TEST_CASE("minimal subgroups") {
  CHECK(minimal_subgroups(lattice("Q8")).size() == 1);
  CHECK(minimal_subgroups(lattice("Z2xZ2")).size() == 3);
  const auto a4 = minimal_subgroups(lattice("A4"));
  CHECK(a4.size() == 7);
  std::size_t twos = 0;
  for (const auto& s : a4) twos += s.order == 2 ? 1 : 0;
  CHECK(twos == 3);
}

TEST_CASE("normality, normalizers, centralizers and centers") {
  const auto g = group("S3");
  const auto l = SubgroupLattice::build(g);
  for (std::size_t i = 1; i + 1 < l.size(); ++i) {
    if (l[i].order == 3) {
      CHECK(l.is_normal(i));
      CHECK(is_normal(g, l[i].members));
    }
    if (l[i].order == 2) {
      CHECK_FALSE(l.is_normal(i));
      CHECK(normalizer(g, l[i].members) == l[i].members);
      CHECK(centralizer(g, l[i].members) == l[i].members);
    }
  }
  CHECK(center(group("Q8")).count() == 2);
  CHECK(center(group("S3")).count() == 1);
  CHECK(center(group("Z6")).count() == 6);
  CHECK_THROWS_AS(normalizer(g, bits(6, {0, 1, 2, 3})), PreconditionError);
}

TEST_CASE("normal flags agree with a conjugation scan") {
  for (const auto& g : catalog_groups()) {
    if (g.order() > 48) continue;
    CAPTURE(g.label());
    const auto l = SubgroupLattice::build(g);
    for (std::size_t i = 0; i < l.size(); ++i) {
      const bool expect = oracle::normal_by_conjugation(g, l[i].members.members());
      CHECK(l.is_normal(i) == expect);
      // H is normal in its normalizer
      const auto n = normalizer(g, l[i].members);
      CHECK(l[i].members.is_subset_of(n));
    }
  }
}

TEST_CASE("Sylow subgroups") {
  CHECK(sylow_subgroups(lattice("S3"), 2).size() == 3);
  CHECK(sylow_subgroups(lattice("A4"), 3).size() == 4);
  const auto a4 = lattice("A4");
  const auto p2 = sylow_subgroups(a4, 2);
  REQUIRE(p2.size() == 1);
  CHECK(a4[p2[0]].order == 4);
  const auto none = sylow_subgroups(a4, 5);
  REQUIRE(none.size() == 1);
  CHECK(a4[none[0]].order == 1);
  for (const auto& g : catalog_groups()) {
    if (g.order() > 128) continue;
    const auto l = SubgroupLattice::build(g);
    for (auto p : prime_divisors(g.order())) {
      CAPTURE(g.label());
      CAPTURE(p);
      const auto s = sylow_subgroups(l, p);
      CHECK(s.size() % p == 1 % p);
      // all conjugate to the first
      const auto first = l[s.front()].members;
      for (std::size_t i : s) {
        bool conj = false;
        for (std::uint32_t x = 0; x < g.order() && !conj; ++x) {
          BitSet image(g.order());
          first.for_each([&](std::uint32_t y) { image.insert(g.conj(x, y)); });
          conj = image == l[i].members;
        }
        CHECK(conj);
      }
    }
  }
}

TEST_CASE("Frattini subgroup") {
  for (auto label : {"Z2xZ2", "Z2xZ2xZ2", "Z3xZ3xZ3", "Z5xZ5"}) CHECK(frattini(lattice(label)).count() == 1);
  CHECK(frattini(lattice("Z9")).count() == 3);
  const auto q16 = lattice("Q16");
  const auto phi = frattini(q16);
  CHECK(phi.count() == 4);
  CHECK(is_cyclic(q16.group(), phi));
  CHECK(frattini(lattice("Z1")).count() == 1);
}

TEST_CASE("Frattini quotient of p-groups is elementary abelian") {
  for (const auto& g : catalog_groups()) {
    if (prime_power_decomposition(g.order()).second < 1 || g.order() > 128) continue;
    CAPTURE(g.label());
    const auto l = SubgroupLattice::build(g);
    const auto phi = frattini(l);
    CHECK(is_normal(g, phi));
    const auto q = quotient_group(g, phi);
    if (q.group.order() > 1) CHECK(is_elementary_abelian(q.group, q.group.all_elements()));
  }
}

TEST_CASE("p-core") {
  const auto s3 = lattice("S3");
  CHECK(p_core(s3, 3).count() == 3);
  CHECK(p_core(s3, 2).count() == 1);
  const auto a4 = lattice("A4");
  const auto o2 = p_core(a4, 2);
  CHECK(o2.count() == 4);
  CHECK(is_normal(a4.group(), o2));
}

TEST_CASE("solvable, nilpotent, supersolvable") {
  const auto s3 = lattice("S3");
  CHECK(is_solvable(s3.group()));
  CHECK(is_supersolvable(s3));
  CHECK_FALSE(is_nilpotent(s3));
  const auto a4 = lattice("A4");
  CHECK(is_solvable(a4.group()));
  CHECK_FALSE(is_supersolvable(a4));
  CHECK_FALSE(is_solvable(group("A5")));
  CHECK(is_solvable(group("S4")));
  for (const auto& g : catalog_groups()) {
    if (prime_power_decomposition(g.order()).second < 1 || g.order() > 128) continue;
    const auto l = SubgroupLattice::build(g);
    CAPTURE(g.label());
    CHECK(is_solvable(g));
    CHECK(is_nilpotent(l));
    CHECK(is_supersolvable(l));
  }
}

TEST_CASE("chief series") {
  const auto a4 = lattice("A4");
  const auto cs = chief_series(a4);
  REQUIRE(cs.size() == 3);
  CHECK(a4[cs[0]].order == 1);
  CHECK(a4[cs[1]].order == 4);
  CHECK(a4[cs[2]].order == 12);
  const auto s4 = lattice("S4");
  std::vector<std::size_t> orders;
  for (auto i : chief_series(s4)) orders.push_back(s4[i].order);
  CHECK(orders == std::vector<std::size_t>{1, 4, 12, 24});
}

TEST_CASE("supersolvable groups have maximal subgroups of prime index") {
  for (const auto& g : catalog_groups()) {
    if (g.order() > 128) continue;
    const auto l = SubgroupLattice::build(g);
    if (!is_solvable(g) || !is_supersolvable(l)) continue;
    CAPTURE(g.label());
    for (auto m : l.maximal_indices()) CHECK(is_prime(g.order() / l[m].order));
  }
}

TEST_CASE("order length") {
  CHECK(order_length(cyclic(12)) == 3);
  CHECK(order_length(group("Z81")) == 4);
  CHECK(order_length(cyclic(1)) == 0);
}

TEST_CASE("container counts and valency") {
  const auto a5 = lattice("A5");
  std::size_t fives = 0;
  for (std::size_t i = 1; i < a5.size(); ++i) {
    if (a5[i].order != 5) continue;
    ++fives;
    CHECK(container_count(a5, i) == 1);
  }
  CHECK(fives == 6);
  CHECK_FALSE(satisfies_k_valency(a5, 2));

  const auto z6 = lattice("Z6");
  for (std::size_t i = 1; i < z6.size(); ++i) {
    if (z6[i].order == 2) CHECK(container_count(z6, i) == 0);
  }
  const auto q8 = lattice("Q8");
  REQUIRE(q8.minimal_indices().size() == 1);
  CHECK(container_count(q8, q8.minimal_indices()[0]) == 3);
  CHECK(satisfies_k_valency(q8, 3));
  CHECK_FALSE(satisfies_k_valency(q8, 4));
}

TEST_CASE("cap on lattice size") {
  CHECK_THROWS_AS(SubgroupLattice::build(group("Z2xZ2xZ2xZ2"), 20), CapExceeded);
}

TEST_CASE("lattice JSON export") {
  const auto l = lattice("S3");
  const auto j = lattice_to_json(l);
  CHECK(j["order"] == 6);
  CHECK(j["subgroups"].size() == 6);
  CHECK(j["subgroups"][0]["members"] == nlohmann::json::array({0}));
  // inclusion pairs: 1 in everything (5), each proper subgroup in G (4)
  CHECK(j["inclusions"].size() == 9);
}

}  // TEST_SUITE
