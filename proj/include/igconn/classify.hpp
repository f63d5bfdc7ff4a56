#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "igconn/group.hpp"
#include "igconn/lattice.hpp"

namespace igconn {

// Case tags follow the order in which the cases are stated; the first
// matching case wins.

// Groups with a disconnected intersection graph.
//   "1"  Z_p x Z_p or Z_p x Z_q
//   "2"  N : A with N minimal normal and elementary abelian, A of prime order
//        q coprime to |N|, and N_G(A) = A
// Throws PreconditionError when G has prime order, is trivial, or has no
// proper non-trivial normal subgroup.
std::optional<std::string> theorem_a_case(const SubgroupLattice& l);

// Solvable groups with kappa < 2.
//   "1"   |G| = p^a, a <= 2
//   "2"   |G| = p^3, G not Q8 and not elementary abelian
//   "pq"  |G| = pq for distinct primes (every such graph is disconnected)
//   "3a"  |G| = p^2 q, Sylow p-subgroup cyclic
//   "3b"  |G| = p^2 q, Sylow p-subgroup Z_p x Z_p and normal, with a
//         non-normal subgroup of order p
//   "4a"  |G| = p^a q (a >= 3), P normal elementary abelian, Q irreducible
//         on P and |N_G(Q)| <= pq
//   "4b"  |G| = p^a q (a >= 3), P normal, N = Phi(P) elementary abelian,
//         Q irreducible on N and on P/N, and N_G(Q) = Q or N_G(Q) = NQ
//         abelian of order pq
// When `notes` is given, a line is appended if "4b" matches with |N| > p.
// Throws PreconditionError when G is not solvable.
std::optional<std::string> theorem_b_case(const SubgroupLattice& l,
                                          std::vector<std::string>* notes = nullptr);

// Nilpotent groups with kappa < 3.
//   "1"   |G| = p^a, a <= 3, G not Q8 and not Z_p^3
//   "2a"  G = Z_{p^4}
//   "2b"  |G| = p^4, Phi(G) = Z_{p^2}, G not Q16
//   "2c"  |G| = p^4, Phi(G) = Z_p x Z_p, Z(G) < Phi(G), G not one of the
//         two exceptional groups (order 81 for p = 3, type II for p > 3)
//   "3"   Z_{p^3 q}, Z_{p^2 q}, Z_{pqr}, Z_{pq} or (Z_p x Z_p) x Z_q
// Throws PreconditionError when G is not nilpotent.
std::optional<std::string> theorem_c_case(const SubgroupLattice& l);

// Abelian groups whose graph has a cut-vertex: Z_{p^3}, Z_{p^2} x Z_p,
// Z_{p^2} x Z_q. Throws PreconditionError when G is not abelian.
bool abelian_cut_vertex_case(const SubgroupLattice& l);

// Groups of order p^2 q that are 3-connected: (Z_p x Z_p) : Z_q with the
// generator of Z_q acting as a scalar lambda != 1, lambda^q = 1 mod p.
// Throws PreconditionError unless |G| = p^2 q for distinct primes.
bool p2q_3connected_case(const SubgroupLattice& l);

struct KappaBand {
  std::optional<bool> connected;        // G non-simple, |G| not 1 or prime
  std::optional<bool> two_connected;    // G solvable
  std::optional<bool> three_connected;  // G nilpotent, or solvable with >= 4 primes
};

KappaBand predicted_kappa_band(const SubgroupLattice& l);

bool has_proper_normal_subgroup(const SubgroupLattice& l);

struct TheoremVerdict {
  bool applicable = false;
  std::optional<std::string> case_tag;
  bool agrees = true;  // only meaningful when applicable
};

struct ClassificationReport {
  std::string label;
  std::size_t order = 0;
  bool solvable = false;
  bool nilpotent = false;
  bool supersolvable = false;
  bool has_proper_normal = false;
  int kappa = 0;
  std::size_t components = 0;
  std::size_t vertex_count = 0;
  std::size_t subgroup_count = 0;
  TheoremVerdict theorem_a;  // agreement: disconnected <=> case
  TheoremVerdict theorem_b;  // agreement: kappa < 2 <=> case
  TheoremVerdict theorem_c;  // agreement: kappa < 3 <=> case
  KappaBand band;
  std::vector<std::string> notes;

  bool all_agree() const noexcept {
    return theorem_a.agrees && theorem_b.agrees && theorem_c.agrees;
  }
};

ClassificationReport audit(const SubgroupLattice& l);
ClassificationReport audit(const FiniteGroup& g, const Limits& limits = Limits{});

nlohmann::json report_to_json(const ClassificationReport& r);

// "# audit-csv v1" followed by the header row; both end in a newline.
std::string report_csv_header();
std::string report_csv_row(const ClassificationReport& r);

}  // namespace igconn
