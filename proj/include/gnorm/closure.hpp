#pragma once

#include <vector>

#include "gnorm/checks.hpp"
#include "gnorm/fp.hpp"
#include "gnorm/normal_map.hpp"

namespace gnorm {

enum class ClosureStrategy { automatic, generic_tc, surjective, abelian, normal_inclusion };

const char* to_string(ClosureStrategy s);

/// The free normal closure of phi: Gamma -> G, i.e. the universal
/// factorization Gamma -> cl -> G whose second leg is a normal map.
struct ClosureResult {
  GroupPtr gamma;
  GroupPtr target;
  GroupHom phi;

  GroupPtr cl;
  GroupHom c_phi;                   // Gamma -> cl
  NormalMap phi_hat;                // cl -> G with the G-action
  std::vector<Subgroup> gamma_hat;  // image copies of Gamma, one per g in G
  Subgroup kernel;                  // ker phi_hat
  ClosureStrategy strategy;

  std::vector<int> gen_set;                // generating elements of Gamma
  std::vector<std::vector<int>> gen_elt;   // gen_elt[s][g] = element of cl for s_g

  /// act(c_phi(gamma), g): the copy of gamma indexed by g.
  int hat(int gamma_elt, int g) const { return phi_hat.act(c_phi(gamma_elt), g); }
};

/// The defining presentation of the closure, reduced to a generating set of
/// Gamma: one generator s_g per (s in gen_set, g in G); relators are a
/// presentation of Gamma rewritten inside each subscript plus the conjugation
/// relators  t_h^-1 s_g t_h = s_{g phi(t)^h}.
Presentation closure_presentation(const GroupHom& phi, const std::vector<int>& gen_set);

ClosureResult free_normal_closure(const GroupHom& phi,
                                  ClosureStrategy strategy = ClosureStrategy::automatic,
                                  int max_cosets = 200000);

/// The unique morphism cl -> M for a factorization phi = psi . n with n a
/// normal map: determined on generators by s_g -> psi(s)^g.
GroupHom universal_morphism(const ClosureResult& cr, const GroupHom& psi, const NormalMap& n);

struct SchurResult {
  GroupPtr kernel_group;
  Subgroup witness;                   // ker phi_hat inside cl
  std::vector<int> abelian_invariants;
};

/// ker(phi_hat) for maps whose image normally generates G.
SchurResult relative_schur_multiplier(const GroupHom& phi, int max_cosets = 200000);

struct NormalInclusionResult {
  ClosureResult cr;
  GroupHom retract;        // cl -> cl, image c_phi(Gamma), kernel ker phi_hat
  Subgroup complement;     // ker phi_hat
  bool is_trivial_closure; // cl = c_phi(Gamma)
};

/// Direct-product decomposition cl = c_phi(Gamma) x ker(phi_hat) available
/// when phi is an inclusion of a normal subgroup.
NormalInclusionResult closure_normal_inclusion(const GroupHom& phi, int max_cosets = 200000);

/// The morphism of closures induced by f: Gamma' -> Gamma.
NormalMorphism induced_closure_morphism(const GroupHom& f, const GroupHom& phi,
                                        int max_cosets = 200000);

/// The full structure suite for a computed closure: factorization, axiom
/// checks, subgroup conjugation/translation relations, ordered-product
/// factorization, size bound, abelianization injectivity, prime closure, and
/// the presentation re-verification.
CheckReport closure_structure_checks(const ClosureResult& cr);

}  // namespace gnorm
