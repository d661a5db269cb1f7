#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gnorm/checks.hpp"
#include "gnorm/normal_map.hpp"

namespace gnorm {

/// The injective normalizer of phi: Gamma -> G: the group of compatible
/// pairs (tau, g) in Aut(Gamma) x G with phi(tau(x)) = phi(x)^g, together
/// with the universal factorization Gamma -> N(phi) -> G.
struct NormalizerResult {
  GroupPtr gamma;
  GroupPtr target;
  GroupHom phi;

  GroupPtr N;
  std::vector<std::pair<int, int>> pairs;  // element -> (index into aut_gamma, g)
  NormalMap phi_tilde;                     // Gamma -> N, N acting by the tau component
  GroupHom p_phi;                          // N -> G, second projection
  AutomorphismGroup aut_gamma;

  int pair_index(int aut, int g) const;  // -1 when (aut, g) is not compatible
};

NormalizerResult injective_normalizer(const GroupHom& phi, const Budgets& budgets = {});

/// The unique morphism H -> N(phi) for a factorization phi = n . f with
/// n: Gamma -> H a normal map: h -> (action of h on Gamma, f(h)).
GroupHom universal_morphism_in(const NormalizerResult& nr, const NormalMap& n,
                               const GroupHom& f);

struct SectionResult {
  bool found = false;
  std::optional<GroupHom> section;     // G -> N(phi)
  std::optional<NormalMap> induced;    // normal structure on phi, when found
};

/// phi is a normal map iff p_phi splits compatibly; searches for the section
/// by backtracking over generator images inside the p_phi-fibers.
SectionResult detect_normal_structure(const GroupHom& phi, const Budgets& budgets = {});

/// Structural facts about N(phi): image inside the normalizer, kernel
/// identities, centralizer description, and the centerless-kernel descent.
CheckReport normalizer_diagnostics(const NormalizerResult& nr);

/// The morphism N(phi) -> N(phi . psi) induced by psi: G -> G'.
GroupHom induced_normalizer_morphism(const NormalizerResult& nr, const GroupHom& psi,
                                     const Budgets& budgets = {});

}  // namespace gnorm
