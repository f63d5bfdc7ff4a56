#include "igconn/classify.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "igconn/catalog.hpp"
#include "igconn/error.hpp"
#include "igconn/graph.hpp"
#include "igconn/numtheory.hpp"

namespace igconn {

namespace {

// Reference groups used for isomorphism exclusions, built once per process.
std::shared_ptr<const FiniteGroup> reference_group(const std::string& key,
                                                   const std::function<FiniteGroup()>& build) {
  static std::mutex mutex;
  static std::map<std::string, std::shared_ptr<const FiniteGroup>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto g = std::make_shared<const FiniteGroup>(build());
  std::lock_guard lock(mutex);
  return cache.emplace(key, std::move(g)).first->second;
}

bool isomorphic_to(const FiniteGroup& g, const std::string& key,
                   const std::function<FiniteGroup()>& build) {
  const auto ref = reference_group(key, build);
  return ref->order() == g.order() && are_isomorphic(g, *ref);
}

bool is_q8(const FiniteGroup& g) {
  return g.order() == 8 && isomorphic_to(g, "Q8", [] { return generalized_quaternion(8); });
}

bool is_q16(const FiniteGroup& g) {
  return g.order() == 16 && isomorphic_to(g, "Q16", [] { return generalized_quaternion(16); });
}

bool whole_group_cyclic(const SubgroupLattice& l) {
  return is_cyclic(l.group(), l[l.full_index()].members);
}

bool whole_group_abelian(const SubgroupLattice& l) {
  return is_abelian(l.group(), l[l.full_index()].members);
}

bool whole_group_elementary_abelian(const SubgroupLattice& l) {
  return is_elementary_abelian(l.group(), l[l.full_index()].members);
}

bool is_proper_subset(const BitSet& small, const BitSet& big) {
  return small.is_subset_of(big) && small.count() < big.count();
}

// Some subgroup X with lower < X < upper is normalized by `by`.
bool has_invariant_between(const SubgroupLattice& l, const BitSet& lower, const BitSet& upper,
                           std::span<const std::uint32_t> by) {
  for (const auto& s : l.subgroups()) {
    if (s.order <= lower.count() || s.order >= upper.count()) continue;
    if (!is_proper_subset(lower, s.members) || !s.members.is_subset_of(upper)) continue;
    if (is_normalized_by(l.group(), s.members, by)) return true;
  }
  return false;
}

// Intersection of the index-p subgroups of the p-group P.
BitSet frattini_of(const SubgroupLattice& l, const Subgroup& p_group, std::uint64_t p) {
  BitSet result = p_group.members;
  for (const auto& s : l.subgroups()) {
    if (s.order * p == p_group.order && s.members.is_subset_of(p_group.members)) {
      result = result & s.members;
    }
  }
  return result;
}

std::string bool_text(std::optional<bool> b) {
  if (!b) return "n/a";
  return *b ? "true" : "false";
}

}  // namespace

bool has_proper_normal_subgroup(const SubgroupLattice& l) {
  for (std::size_t i = 1; i + 1 < l.size(); ++i) {
    if (l.is_normal(i)) return true;
  }
  return false;
}

std::optional<std::string> theorem_a_case(const SubgroupLattice& l) {
  const FiniteGroup& g = l.group();
  const std::size_t n = g.order();
  if (n == 1 || is_prime(n) || !has_proper_normal_subgroup(l)) {
    throw PreconditionError("disconnection criterion needs a non-simple group of composite order");
  }
  const auto f = factorize(n);
  const bool abelian = whole_group_abelian(l);
  if (f.size() == 1 && f[0].exponent == 2 && whole_group_elementary_abelian(l)) return "1";
  if (f.size() == 2 && f[0].exponent == 1 && f[1].exponent == 1 && abelian) return "1";

  for (std::size_t ni : l.normal_indices()) {
    const Subgroup& nsub = l[ni];
    if (ni == l.trivial_index() || ni == l.full_index()) continue;
    const std::size_t q = n / nsub.order;
    if (!is_prime(q) || nsub.order % q == 0) continue;
    if (!is_elementary_abelian(g, nsub.members)) continue;
    bool minimal_normal = true;
    for (std::size_t mi : l.normal_indices()) {
      if (mi != l.trivial_index() && mi != ni && l.contains(ni, mi)) {
        minimal_normal = false;
        break;
      }
    }
    if (!minimal_normal) continue;
    for (const auto& a : l.subgroups()) {
      if (a.order != q) continue;
      if (normalizer(g, a.members) == a.members) return "2";
    }
  }
  return std::nullopt;
}

std::optional<std::string> theorem_b_case(const SubgroupLattice& l,
                                          std::vector<std::string>* notes) {
  const FiniteGroup& g = l.group();
  if (!is_solvable(g)) throw PreconditionError("non-2-connected criterion needs a solvable group");
  const std::size_t n = g.order();
  if (n == 1) return "1";
  const auto f = factorize(n);
  if (f.size() == 1) {
    if (f[0].exponent <= 2) return "1";
    if (f[0].exponent == 3 && !is_q8(g) && !whole_group_elementary_abelian(l)) return "2";
    return std::nullopt;
  }
  if (f.size() != 2) return std::nullopt;
  if (f[0].exponent == 1 && f[1].exponent == 1) return "pq";

  // |G| = p^a q with a >= 2
  if (f[0].exponent != 1 && f[1].exponent != 1) return std::nullopt;
  const auto& pp = f[0].exponent == 1 ? f[1] : f[0];
  const std::uint64_t p = pp.prime;
  const std::uint64_t q = f[0].exponent == 1 ? f[0].prime : f[1].prime;
  const auto sylow_p = sylow_subgroups(l, p);
  const Subgroup& P = l[sylow_p.front()];
  const bool p_normal = sylow_p.size() == 1;

  if (pp.exponent == 2) {
    if (is_cyclic(g, P.members)) return "3a";
    if (p_normal && is_elementary_abelian(g, P.members)) {
      for (std::size_t i = 1; i < l.size(); ++i) {
        if (l[i].order == p && !l.is_normal(i)) return "3b";
      }
    }
    return std::nullopt;
  }

  if (!p_normal) return std::nullopt;
  const Subgroup& Q = l[sylow_subgroups(l, q).front()];
  const BitSet trivial = l[l.trivial_index()].members;
  const BitSet n_q = normalizer(g, Q.members);

  if (is_elementary_abelian(g, P.members) &&
      !has_invariant_between(l, trivial, P.members, Q.generators) && n_q.count() <= p * q) {
    return "4a";
  }

  const BitSet phi = frattini_of(l, P, p);
  if (phi.count() > 1 && is_elementary_abelian(g, phi) &&
      !has_invariant_between(l, trivial, phi, Q.generators) &&
      !has_invariant_between(l, phi, P.members, Q.generators)) {
    bool normalizer_ok = n_q == Q.members;
    if (!normalizer_ok && n_q.count() == p * q) {
      auto joined = phi.members();
      joined.insert(joined.end(), Q.generators.begin(), Q.generators.end());
      const BitSet nq = closure(g, joined);
      normalizer_ok = nq == n_q && is_abelian(g, nq);
    }
    if (normalizer_ok) {
      if (notes && phi.count() > p) {
        notes->push_back("case 4b matched with |Phi(P)| = " + std::to_string(phi.count()) +
                         " > p = " + std::to_string(p));
      }
      return "4b";
    }
  }
  return std::nullopt;
}

std::optional<std::string> theorem_c_case(const SubgroupLattice& l) {
  const FiniteGroup& g = l.group();
  if (!is_nilpotent(l)) throw PreconditionError("non-3-connected criterion needs a nilpotent group");
  const std::size_t n = g.order();
  if (n == 1) return "1";
  const auto f = factorize(n);
  const bool cyclic_group = whole_group_cyclic(l);

  if (f.size() == 1) {
    const std::uint64_t p = f[0].prime;
    const int a = f[0].exponent;
    if (a <= 2) return "1";
    if (a == 3) {
      if (is_q8(g) || whole_group_elementary_abelian(l)) return std::nullopt;
      return "1";
    }
    if (a != 4) return std::nullopt;
    if (cyclic_group) return "2a";
    const BitSet phi = frattini(l);
    if (phi.count() == p * p && is_cyclic(g, phi)) {
      if (is_q16(g)) return std::nullopt;
      return "2b";
    }
    if (phi.count() == p * p && is_elementary_abelian(g, phi)) {
      const BitSet z = center(g);
      if (!is_proper_subset(z, phi)) return std::nullopt;
      if (p == 3 && isomorphic_to(g, "exceptional-81", [] { return exceptional_p4(3, 1, 0, -1); })) {
        return std::nullopt;
      }
      if (p > 3 && isomorphic_to(g, "typeII-" + std::to_string(p), [p] {
            return exceptional_p4_typeII(static_cast<std::int64_t>(p));
          })) {
        return std::nullopt;
      }
      return "2c";
    }
    return std::nullopt;
  }

  if (cyclic_group) {
    // Z_{p^3 q}, Z_{p^2 q}, Z_{pq} (two primes) or Z_{pqr}
    if (f.size() == 2) {
      const int hi = std::max(f[0].exponent, f[1].exponent);
      const int lo = std::min(f[0].exponent, f[1].exponent);
      if (lo == 1 && hi <= 3) return "3";
    }
    if (f.size() == 3 && f[0].exponent == 1 && f[1].exponent == 1 && f[2].exponent == 1) return "3";
    return std::nullopt;
  }
  if (f.size() == 2 && whole_group_abelian(l)) {
    const auto& pp = f[0].exponent == 2 ? f[0] : f[1];
    const auto& qq = f[0].exponent == 2 ? f[1] : f[0];
    if (pp.exponent == 2 && qq.exponent == 1) {
      const Subgroup& P = l[sylow_subgroups(l, pp.prime).front()];
      if (is_elementary_abelian(g, P.members)) return "3";
    }
  }
  return std::nullopt;
}

bool abelian_cut_vertex_case(const SubgroupLattice& l) {
  const FiniteGroup& g = l.group();
  if (!whole_group_abelian(l)) throw PreconditionError("cut-vertex criterion needs an abelian group");
  const auto f = factorize(g.order());
  if (f.size() == 1 && f[0].exponent == 3) {
    const std::size_t p = f[0].prime;
    return are_isomorphic(g, cyclic(p * p * p)) || are_isomorphic(g, abelian({p * p, p}));
  }
  if (f.size() == 2 && (f[0].exponent + f[1].exponent) == 3 &&
      std::max(f[0].exponent, f[1].exponent) == 2) {
    return are_isomorphic(g, cyclic(g.order()));
  }
  return false;
}

bool p2q_3connected_case(const SubgroupLattice& l) {
  const FiniteGroup& g = l.group();
  const auto f = factorize(g.order());
  if (f.size() != 2 || f[0].exponent + f[1].exponent != 3 ||
      std::max(f[0].exponent, f[1].exponent) != 2) {
    throw PreconditionError("order " + std::to_string(g.order()) + " is not of the form p^2 q");
  }
  const std::size_t p = f[0].exponent == 2 ? f[0].prime : f[1].prime;
  const std::size_t q = f[0].exponent == 2 ? f[1].prime : f[0].prime;
  for (std::size_t lambda = 2; lambda < p; ++lambda) {
    if (powmod(lambda, q, p) != 1) continue;
    if (are_isomorphic(g, lambda_group(p, q, lambda))) return true;
  }
  return false;
}

KappaBand predicted_kappa_band(const SubgroupLattice& l) {
  const FiniteGroup& g = l.group();
  const std::size_t n = g.order();
  KappaBand band;
  if (n > 1 && !is_prime(n) && has_proper_normal_subgroup(l)) {
    band.connected = !theorem_a_case(l).has_value();
  }
  const std::size_t primes = prime_divisors(n).size();
  const bool solvable = is_solvable(g);
  if (solvable) {
    band.two_connected = primes >= 3 ? true : !theorem_b_case(l).has_value();
  }
  if (is_nilpotent(l)) {
    band.three_connected = !theorem_c_case(l).has_value();
  } else if (solvable && primes >= 4) {
    band.three_connected = true;
  }
  return band;
}

ClassificationReport audit(const SubgroupLattice& l) {
  const FiniteGroup& g = l.group();
  const IntersectionGraph graph = IntersectionGraph::build(l);
  ClassificationReport r;
  r.label = g.label();
  r.order = g.order();
  r.solvable = is_solvable(g);
  r.nilpotent = is_nilpotent(l);
  r.supersolvable = r.solvable && is_supersolvable(l);
  r.has_proper_normal = has_proper_normal_subgroup(l);
  r.kappa = kappa(l, graph).value;
  r.components = connected_components(graph).size();
  r.vertex_count = graph.vertex_count();
  r.subgroup_count = l.size();

  if (r.order > 1 && !is_prime(r.order) && r.has_proper_normal) {
    r.theorem_a.applicable = true;
    r.theorem_a.case_tag = theorem_a_case(l);
    r.theorem_a.agrees = (r.components > 1) == r.theorem_a.case_tag.has_value();
  }
  if (r.solvable) {
    r.theorem_b.applicable = true;
    r.theorem_b.case_tag = theorem_b_case(l, &r.notes);
    r.theorem_b.agrees = (r.kappa < 2) == r.theorem_b.case_tag.has_value();
  }
  if (r.nilpotent) {
    r.theorem_c.applicable = true;
    r.theorem_c.case_tag = theorem_c_case(l);
    r.theorem_c.agrees = (r.kappa < 3) == r.theorem_c.case_tag.has_value();
  }
  r.band = predicted_kappa_band(l);
  if (r.band.two_connected && *r.band.two_connected != (r.kappa >= 2)) {
    r.notes.push_back("kappa " + std::to_string(r.kappa) + " contradicts the 2-connectivity band");
  }
  if (r.band.three_connected && *r.band.three_connected != (r.kappa >= 3)) {
    r.notes.push_back("kappa " + std::to_string(r.kappa) + " contradicts the 3-connectivity band");
  }
  return r;
}

ClassificationReport audit(const FiniteGroup& g, const Limits& limits) {
  return audit(SubgroupLattice::build(g, limits.max_lattice));
}

nlohmann::json report_to_json(const ClassificationReport& r) {
  auto verdict = [](const TheoremVerdict& v) {
    nlohmann::json j;
    j["applicable"] = v.applicable;
    j["case"] = v.case_tag ? nlohmann::json(*v.case_tag) : nlohmann::json(nullptr);
    j["agrees"] = v.applicable ? nlohmann::json(v.agrees) : nlohmann::json(nullptr);
    return j;
  };
  auto band = [](std::optional<bool> b) { return b ? nlohmann::json(*b) : nlohmann::json(nullptr); };
  nlohmann::json j;
  j["label"] = r.label;
  j["order"] = r.order;
  j["solvable"] = r.solvable;
  j["nilpotent"] = r.nilpotent;
  j["supersolvable"] = r.supersolvable;
  j["has_proper_normal"] = r.has_proper_normal;
  j["kappa"] = r.kappa;
  j["components"] = r.components;
  j["vertex_count"] = r.vertex_count;
  j["subgroup_count"] = r.subgroup_count;
  j["theorem_a"] = verdict(r.theorem_a);
  j["theorem_b"] = verdict(r.theorem_b);
  j["theorem_c"] = verdict(r.theorem_c);
  j["band"] = {{"connected", band(r.band.connected)},
               {"two_connected", band(r.band.two_connected)},
               {"three_connected", band(r.band.three_connected)}};
  j["notes"] = r.notes;
  j["agrees"] = r.all_agree();
  return j;
}

std::string report_csv_header() {
  return "# audit-csv v1\nlabel,order,solvable,nilpotent,kappa,caseA,caseB,caseC,agreeA,agreeB,agreeC\n";
}

std::string report_csv_row(const ClassificationReport& r) {
  auto tag = [](const TheoremVerdict& v) -> std::string {
    if (!v.applicable) return "n/a";
    return v.case_tag ? *v.case_tag : "none";
  };
  auto agree = [](const TheoremVerdict& v) {
    return bool_text(v.applicable ? std::optional<bool>(v.agrees) : std::nullopt);
  };
  std::string label = r.label;
  if (label.find_first_of(",\"\n") != std::string::npos) {
    std::string quoted = "\"";
    for (char c : label) {
      if (c == '"') quoted += '"';
      quoted += c;
    }
    label = quoted + "\"";
  }
  std::ostringstream os;
  os << label << ',' << r.order << ',' << (r.solvable ? "true" : "false") << ','
     << (r.nilpotent ? "true" : "false") << ',' << r.kappa << ',' << tag(r.theorem_a) << ','
     << tag(r.theorem_b) << ',' << tag(r.theorem_c) << ',' << agree(r.theorem_a) << ','
     << agree(r.theorem_b) << ',' << agree(r.theorem_c) << '\n';
  return os.str();
}

}  // namespace igconn
