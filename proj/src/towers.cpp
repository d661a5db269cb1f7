#include "gnorm/towers.hpp"

#include <cmath>
#include <set>

namespace gnorm {

HypercenterBound hypercentral_bound(long long t) {
  if (t < 2) throw Error(Errc::invalid_argument, "bound requires t >= 2");
  HypercenterBound b;
  b.t = t;
  for (long long p = 2; p * p <= t; ++p)
    if (t % p == 0) {
      b.p = p;
      break;
    }
  if (b.p == 0) b.p = t;
  b.k = 0.5 * (std::log(static_cast<double>(t)) / std::log(static_cast<double>(b.p)) + 1.0);
  b.f_of_t = std::pow(static_cast<double>(t), b.k);
  b.ceiling = static_cast<long long>(std::ceil(b.f_of_t - 1e-9));
  return b;
}

namespace {

// A bijective normal map is an isomorphism of normal maps exactly when its
// inverse carries the action to conjugation.
bool is_stable_connecting_map(const NormalMap& nm) {
  if (!is_bijective(nm.n)) return false;
  GroupHom inv = inverse_hom(nm.n);
  const FiniteGroup& M = *nm.M();
  for (int g = 0; g < nm.G()->order; ++g) {
    int b = inv(g);
    for (int a = 0; a < M.order; ++a)
      if (nm.act(a, g) != M.conj(a, b)) return false;
  }
  return true;
}

}  // namespace

TowerTrace closures_tower(const GroupHom& phi, int max_steps, int max_cosets) {
  TowerTrace trace;
  trace.kind = TowerKind::closures;
  trace.gamma = phi.source;
  trace.target = phi.target;
  trace.phi = phi;

  std::vector<int> img;
  for (int x = 0; x < phi.source->order; ++x) img.push_back(phi(x));
  const bool surj_case =
      normal_closure_of(phi.target, img).order() == phi.target->order;
  if (surj_case) {
    BoundCheck bc;
    if (phi.target->order >= 2) {
      bc.bound = hypercentral_bound(phi.target->order);
      bc.bound_value = static_cast<long long>(phi.source->order) * bc.bound->ceiling;
    } else {
      bc.bound_value = phi.source->order;  // hypercentral stages collapse onto Gamma
    }
    trace.bound_check = bc;
  }

  GroupHom current = phi;
  for (int step = 1; step <= max_steps; ++step) {
    ClosureResult cr;
    try {
      cr = free_normal_closure(current, ClosureStrategy::automatic, max_cosets);
    } catch (const Error& e) {
      if (e.code() == Errc::budget_exceeded || e.code() == Errc::enumeration_overflow) {
        trace.error = e.what();
        break;
      }
      throw;
    }
    TowerStage stage;
    stage.group = cr.cl;
    stage.connecting = cr.phi_hat;
    stage.from_gamma = cr.c_phi;
    stage.checks.add("triangle-commutes", [&] {
      for (int x = 0; x < trace.gamma->order; ++x)
        if (cr.phi_hat.n(cr.c_phi(x)) != current(x)) return false;
      return true;
    }());
    if (surj_case) {
      stage.checks.add("connecting-surjective", is_surjective(cr.phi_hat.n));
      stage.checks.add("kernel-central", is_central_subgroup(cr.kernel));
      std::vector<int> stage_img;
      for (int x = 0; x < trace.gamma->order; ++x) stage_img.push_back(cr.c_phi(x));
      stage.checks.add("image-normally-generates",
                       normal_closure_of(cr.cl, stage_img).order() == cr.cl->order);
      if (trace.bound_check)
        stage.checks.add("order-within-bound",
                         cr.cl->order <= trace.bound_check->bound_value);
    }
    bool stable = is_stable_connecting_map(cr.phi_hat);
    trace.stages.push_back(std::move(stage));
    if (stable) {
      trace.stabilized_at = step;
      break;
    }
    current = cr.c_phi;
  }
  trace.steps_run = static_cast<int>(trace.stages.size());
  if (trace.bound_check) {
    long long mx = 0;
    for (const TowerStage& s : trace.stages) mx = std::max(mx, (long long)s.group->order);
    trace.bound_check->max_stage_order = mx;
    trace.bound_check->satisfied = mx <= trace.bound_check->bound_value;
  }
  return trace;
}

TowerTrace normalizers_tower(const GroupHom& phi, int max_steps, const Budgets& budgets,
                             bool diagnostics) {
  TowerTrace trace;
  trace.kind = TowerKind::normalizers;
  trace.gamma = phi.source;
  trace.target = phi.target;
  trace.phi = phi;

  GroupHom current = phi;
  GroupHom from_gamma = identity_hom(phi.source);
  for (int step = 1; step <= max_steps; ++step) {
    NormalizerResult nr;
    try {
      nr = injective_normalizer(current, budgets);
    } catch (const Error& e) {
      if (e.code() == Errc::budget_exceeded) {
        trace.error = e.what();
        break;
      }
      throw;
    }
    TowerStage stage;
    stage.group = nr.N;
    stage.connecting = nr.phi_tilde;
    stage.to_target = nr.p_phi;
    from_gamma = compose(from_gamma, nr.phi_tilde.n);
    stage.from_gamma = from_gamma;
    stage.checks.add("triangle-commutes", [&] {
      for (int x = 0; x < current.source->order; ++x)
        if (nr.p_phi(nr.phi_tilde.n(x)) != current(x)) return false;
      return true;
    }());
    if (diagnostics) {
      CheckReport diag = normalizer_diagnostics(nr);
      for (const Check& c : diag.checks) stage.checks.checks.push_back(c);
    }
    bool stable = is_stable_connecting_map(nr.phi_tilde);
    trace.stages.push_back(std::move(stage));
    if (stable) {
      trace.stabilized_at = step;
      break;
    }
    current = nr.p_phi;
  }
  trace.steps_run = static_cast<int>(trace.stages.size());
  return trace;
}

CheckReport tower_abelianization_probe(const TowerTrace& trace) {
  if (trace.kind != TowerKind::closures)
    throw Error(Errc::invalid_argument, "probe applies to closure towers");
  if (trace.stages.empty())
    throw Error(Errc::precondition_failed, "trace has no stages");
  CheckReport rep;
  QuotientResult gab = abelianization(trace.gamma);
  for (size_t i = 0; i < trace.stages.size(); ++i) {
    const TowerStage& st = trace.stages[i];
    QuotientResult sab = abelianization(st.group);
    std::vector<int> induced(gab.group->order, -1);
    bool well = true, inj = true;
    for (int x = 0; x < trace.gamma->order; ++x) {
      int a = gab.projection(x);
      int v = sab.projection(st.from_gamma(x));
      if (induced[a] >= 0 && induced[a] != v) well = false;
      induced[a] = v;
    }
    std::set<int> vals;
    for (int a = 0; a < gab.group->order; ++a)
      if (!vals.insert(induced[a]).second) inj = false;
    rep.add("abelianization-injective-stage-" + std::to_string(i + 1), well && inj);
  }
  return rep;
}

}  // namespace gnorm
