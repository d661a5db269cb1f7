#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gnorm/checks.hpp"
#include "gnorm/closure.hpp"
#include "gnorm/normalizer.hpp"

namespace gnorm {

enum class TowerKind { closures, normalizers };

/// f(t) = t^k with k = (log_p t + 1)/2 for the least prime divisor p of t;
/// k is generally irrational, so f is evaluated as a real and rounded up only
/// at comparison time.
struct HypercenterBound {
  long long t = 0;
  long long p = 0;
  double k = 0.0;
  double f_of_t = 0.0;
  long long ceiling = 0;
};

HypercenterBound hypercentral_bound(long long t);

struct TowerStage {
  GroupPtr group;
  /// closures: the normal map stage -> previous stage (phi_hat_i);
  /// normalizers: the normal map previous stage -> this stage (phi_tilde_i).
  NormalMap connecting;
  GroupHom from_gamma;                 // the map Gamma -> stage
  std::optional<GroupHom> to_target;   // normalizers: p_i, stage -> G
  CheckReport checks;
};

struct BoundCheck {
  std::optional<HypercenterBound> bound;  // absent when |G| = 1
  long long bound_value = 0;              // |Gamma| * ceiling(f(|G|))
  long long max_stage_order = 0;
  bool satisfied = false;
};

struct TowerTrace {
  TowerKind kind;
  GroupPtr gamma;
  GroupPtr target;
  GroupHom phi;
  std::vector<TowerStage> stages;
  std::optional<int> stabilized_at;  // 1-based stage index
  int steps_run = 0;
  std::optional<BoundCheck> bound_check;  // closures, when the image normally generates
  std::optional<std::string> error;       // budget/overflow marker on partial traces
};

/// Iterates Gamma_{i+1} = closure of phi_i, phi_{i+1} = c_{phi_i}; stops at
/// stabilization (the connecting map is an isomorphism of normal maps), at
/// max_steps, or on a budget error (partial trace with error marker).
TowerTrace closures_tower(const GroupHom& phi, int max_steps = 16, int max_cosets = 200000);

/// Iterates Gamma^{a+1} = N(phi_a), phi_{a+1} = p_{phi_a}.  With diagnostics
/// set, each stage carries the normalizer diagnostic report.
TowerTrace normalizers_tower(const GroupHom& phi, int max_steps = 32,
                             const Budgets& budgets = {}, bool diagnostics = false);

/// Injectivity of Gamma_ab -> (stage)_ab through every closure stage.
CheckReport tower_abelianization_probe(const TowerTrace& trace);

}  // namespace gnorm
