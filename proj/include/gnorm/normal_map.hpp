#pragma once

#include <string>
#include <vector>

#include "gnorm/group.hpp"

namespace gnorm {

/// A homomorphism n: M -> G together with a right action of G on M making n
/// a crossed module: equivariance n(a^g) = n(a)^g and the Peiffer identity
/// a^{n(b)} = a^b.  The action is stored densely, one permutation of M per
/// element of G, with act(act(a,g),h) = act(a,gh).
struct NormalMap {
  GroupHom n;                              // M -> G
  std::vector<std::vector<int>> action;    // action[g][a] = a^g

  const GroupPtr& M() const { return n.source; }
  const GroupPtr& G() const { return n.target; }
  int act(int a, int g) const { return action[g][a]; }
};

/// A commuting square (mu, eta) between two normal maps that also respects
/// the actions: mu(m^g) = mu(m)^{eta(g)}.
struct NormalMorphism {
  GroupHom mu;   // M1 -> M2
  GroupHom eta;  // G1 -> G2
};

struct Violation {
  std::string rule;  // "action-bijective", "action-homomorphism", "equivariance", "peiffer", ...
  int a = -1, b = -1, g = -1;
};

struct Verdict {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  explicit operator bool() const { return ok(); }
};

/// Exhaustive check of the crossed-module axioms; violations carry the first
/// witness found in deterministic scan order.
Verdict validate_normal_map(const NormalMap& nm);

/// Throwing variant for internal construction sites.
void require_normal_map(const NormalMap& nm, const std::string& where);

/// The conjugation structure on the inclusion of a normal subgroup N <= G,
/// with M reindexed as its own group.  Convenience constructor for fixtures.
NormalMap inclusion_normal_map(const Subgroup& N);

/// The unique normal structure on a surjection with central kernel:
/// a^g = a^b for any preimage b of g.
NormalMap canonical_structure_surjective_central(const GroupHom& n);

/// Restriction of a normal map to a G-invariant subgroup of M.
NormalMap restrict_to_invariant(const NormalMap& nm, const Subgroup& N);

/// Product extension M x V -> G by an abelian group V acted on trivially.
NormalMap extend_by_abelian(const NormalMap& nm, const GroupPtr& V);

struct PullbackResult {
  NormalMap nm;                            // fiber product over G
  NormalMorphism pi2;                      // projection to M'
  std::vector<std::pair<int, int>> elems;  // element i = (h, m'), sorted lexicographically
};

/// Pullback of a normal map n': M' -> G' along eta: G -> G'; the fiber
/// product {(m', h) : n'(m') = eta(h)} with action (m',h)^g = (m'^{eta(g)}, h^g).
PullbackResult pullback(const NormalMap& n_prime, const GroupHom& eta);

/// The induced map into the pullback for a compatible square
/// phi: Gamma -> G, mu: Gamma -> Gamma', psi': Gamma' -> M' with
/// psi' . n' = phi' and the square commuting.
GroupHom pullback_factorize(const PullbackResult& pb, const GroupHom& phi, const GroupHom& mu,
                            const GroupHom& psi_prime);

Verdict validate_normal_morphism(const NormalMorphism& m, const NormalMap& src,
                                 const NormalMap& dst);

}  // namespace gnorm
