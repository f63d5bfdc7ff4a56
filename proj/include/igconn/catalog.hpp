#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "igconn/group.hpp"
#include "igconn/presentation.hpp"

namespace igconn {

// A named recipe for a group: constructor id plus its parameters, and the
// order the result must have.
struct CatalogEntry {
  std::string label;
  std::string constructor;
  std::vector<std::string> params;
  std::size_t order = 0;
  bool opt_in = false;  // left out of default sweeps (large lattice)

  friend bool operator==(const CatalogEntry&, const CatalogEntry&) = default;
};

// Constructors:
//   cyclic n | abelian n1 n2 ... | dihedral n (order 2n) | quaternion n (order n)
//   symmetric n | alternating n | wreath p (Z_p wr Z_p)
//   cyclic_semidirect n m r     Z_n : Z_m, generator acts as x -> r x
//   linear_semidirect p d m a11 a12 ... a_dd
//                               Z_p^d : Z_m, generator acts by the matrix
//   lambda p q l                Z_p^2 : Z_q acting by the scalar l
//   sl23                        SL(2,3) = Q8 : Z3
//   product L1 L2               direct product of two other entries
//   exceptional_p4 p k m n | exceptional_p4_typeII p
std::vector<CatalogEntry> standard_families(bool include_opt_in = false);

std::optional<CatalogEntry> find_entry(const std::vector<CatalogEntry>& entries,
                                       std::string_view label);

// Builds the group and checks its order. `entries` resolves product
// references. Throws InputError on an unknown constructor or bad parameters
// and on an order mismatch.
FiniteGroup build_entry(const CatalogEntry& e, const std::vector<CatalogEntry>& entries,
                        const Limits& limits = Limits{});
FiniteGroup build_catalog_group(std::string_view label, const Limits& limits = Limits{});

// Manifest text: one entry per line as "label order constructor params...",
// with a trailing "opt-in" marker where it applies; '#' starts a comment.
std::string manifest_text(const std::vector<CatalogEntry>& entries);
std::vector<CatalogEntry> parse_manifest(std::string_view text);
std::vector<CatalogEntry> read_manifest(const std::filesystem::path& path);

std::vector<FiniteGroup> ingest_tables(const std::filesystem::path& path,
                                       const Limits& limits = Limits{});

FiniteGroup abelian(const std::vector<std::size_t>& parts);
FiniteGroup dihedral(std::size_t n);
FiniteGroup generalized_quaternion(std::size_t order);
FiniteGroup symmetric(std::size_t n);
FiniteGroup alternating(std::size_t n);
FiniteGroup cyclic_wreath(std::size_t p);
FiniteGroup cyclic_semidirect(std::size_t n, std::size_t m, std::size_t r);
// matrix is row-major d x d over Z_p and must have multiplicative order
// dividing m.
FiniteGroup linear_semidirect(std::size_t p, std::size_t d, std::size_t m,
                              const std::vector<long>& matrix);
FiniteGroup lambda_group(std::size_t p, std::size_t q, std::size_t lambda);
FiniteGroup special_linear_2_3();

// <a,b,c | a^(p^2) = b^p = 1, ab = ba, a^p = c^(kp), bcb^-1 = c^(1+p),
//          aca^-1 = c^(1+mp) b^n>
Presentation exceptional_p4_presentation(std::int64_t p, std::int64_t k, std::int64_t m,
                                         std::int64_t n);
// Requires p = 3, k in {-1, 1}, m, n in {-1, 0, 1}, n = -k.
FiniteGroup exceptional_p4(std::int64_t p, std::int64_t k, std::int64_t m, std::int64_t n,
                           std::size_t max_cosets = Limits{}.max_cosets);
// The six parameter triples (k, m, n) admitted for p = 3.
std::vector<std::array<std::int64_t, 3>> exceptional_p4_triples();

// <a,b,c | a^(p^2) = b^p = c^p = 1, bc = cb, bab^-1 = a^(p+1), cac^-1 = ab>
Presentation exceptional_p4_typeII_presentation(std::int64_t p);
// Requires a prime p > 3.
FiniteGroup exceptional_p4_typeII(std::int64_t p, std::size_t max_cosets = 200'000);

}  // namespace igconn
