// Acceptance suite: each criterion prints one [PASS]/[FAIL] line; the binary
// exits nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "gnorm/report.hpp"
#include "gnorm/towers.hpp"
#include "oracles.hpp"

using namespace gnorm;

namespace {

int g_failures = 0;

void criterion(const std::string& name, const std::function<void(std::string&)>& body) {
  std::string detail;
  auto start = std::chrono::steady_clock::now();
  bool ok = true;
  try {
    body(detail);
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("exception: ") + e.what();
  }
  if (!detail.empty() && detail.rfind("FAIL:", 0) == 0) ok = false;
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("[%s] %-14s (%6.2fs) %s\n", ok ? "PASS" : "FAIL", name.c_str(), secs,
              detail.c_str());
  if (!ok) ++g_failures;
}

#define REQ(cond, msg)                          \
  do {                                          \
    if (!(cond)) {                              \
      detail = std::string("FAIL: ") + (msg);   \
      return;                                   \
    }                                           \
  } while (0)

int perm_index(const GroupPtr& G, const Perm& p) {
  for (int x = 0; x < G->order; ++x)
    if (G->perm_witness[x] == p) return x;
  return -1;
}

GroupHom z3_into_a5() {
  GroupPtr z3 = catalog::cyclic(3);
  GroupPtr a5 = catalog::alternating(5);
  return hom_from_gen_images(z3, a5, {z3->generators[0]},
                             {perm_index(a5, catalog::cycle(5, {1, 2, 3}))});
}

bool mutually_inverse_universal(const ClosureResult& a, const ClosureResult& b) {
  GroupHom u = universal_morphism(a, b.c_phi, b.phi_hat);
  GroupHom v = universal_morphism(b, a.c_phi, a.phi_hat);
  for (int x = 0; x < a.cl->order; ++x)
    if (v(u(x)) != x) return false;
  for (int x = 0; x < b.cl->order; ++x)
    if (u(v(x)) != x) return false;
  return true;
}

std::vector<GroupPtr> catalog24() {
  return {trivial_group(),     catalog::cyclic(2),  catalog::cyclic(3),
          catalog::cyclic(4),  catalog::klein4(),   catalog::cyclic(6),
          catalog::symmetric(3), catalog::cyclic(8), catalog::dihedral(8),
          catalog::quaternion8(), catalog::cyclic(12), catalog::alternating(4),
          catalog::dihedral(12), catalog::dicyclic3(), catalog::symmetric(4),
          catalog::sl23()};
}

std::vector<GroupPtr> abelian16() {
  return {trivial_group(),      catalog::cyclic(2),
          catalog::cyclic(3),   catalog::cyclic(4),
          catalog::klein4(),    catalog::cyclic(5),
          catalog::cyclic(6),   catalog::cyclic(7),
          catalog::cyclic(8),   catalog::z2xz4(),
          catalog::elementary_abelian(2, 3, "2^3"),
          catalog::cyclic(9),   direct_product(catalog::cyclic(3), catalog::cyclic(3)),
          catalog::cyclic(10),  catalog::cyclic(12),
          direct_product(catalog::cyclic(2), catalog::cyclic(6)),
          catalog::cyclic(15),  catalog::cyclic(16),
          direct_product(catalog::cyclic(4), catalog::cyclic(4)),
          direct_product(catalog::cyclic(8), catalog::cyclic(2))};
}

std::vector<GroupPtr> catalog8() {
  return {trivial_group(),    catalog::cyclic(2), catalog::cyclic(3), catalog::cyclic(4),
          catalog::klein4(),  catalog::cyclic(5), catalog::cyclic(6), catalog::cyclic(7),
          catalog::cyclic(8), catalog::z2xz4(),
          catalog::elementary_abelian(2, 3, "2^3"), catalog::dihedral(8),
          catalog::quaternion8(), catalog::symmetric(3)};
}

void c1_a5_fixture(std::string& detail) {
  ClosureResult cr = free_normal_closure(z3_into_a5(), ClosureStrategy::generic_tc);
  REQ(cr.cl->order == 360, "cl order " + std::to_string(cr.cl->order));
  REQ(abelian_invariants(subgroup_as_group(cr.kernel).group) == std::vector<int>({2, 3}),
      "kernel invariants");
  REQ(center(cr.cl).order() == 6, "center order");
  REQ(abelian_invariants(abelianization(cr.cl).group) == std::vector<int>({3}),
      "abelianization");
  Subgroup der = derived_subgroup(cr.cl);
  REQ(der.order() == 120, "derived subgroup order " + std::to_string(der.order()));
  SubgroupEmbedding de = subgroup_as_group(der);
  REQ(derived_subgroup(de.group).order() == 120, "derived subgroup not perfect");
  REQ(center(de.group).order() == 2, "center of derived subgroup");
  detail = "|cl|=360, ker=[2,3], Z=6, ab=[3], [cl,cl] perfect of order 120";
}

void c2_surjective_oracle(std::string& detail) {
  int instances = 0;
  bool saw_q8 = false, saw_s3 = false;
  for (const GroupPtr& A : catalog24())
    for (const GroupPtr& B : catalog24()) {
      if (B->order > A->order || A->order % B->order != 0) continue;
      for (const auto& img : oracle::all_epimorphisms(*A, *B)) {
        GroupHom phi{A, B, img};
        ClosureResult fast = free_normal_closure(phi, ClosureStrategy::surjective);
        ClosureResult tc = free_normal_closure(phi, ClosureStrategy::generic_tc);
        REQ(mutually_inverse_universal(fast, tc),
            "disagreement on " + A->label + " ->> " + B->label);
        ++instances;
        if (A->label == "Q8" && B->label == "V4") saw_q8 = true;
        if (A->label == "S3" && B->order == 2) saw_s3 = true;
      }
    }
  REQ(instances >= 10, "too few instances");
  REQ(saw_q8, "Q8 ->> V4 not covered");
  REQ(saw_s3, "S3 ->> Z2 not covered");
  detail = std::to_string(instances) + " epimorphisms agree with generic-tc";
}

void c3_abelian_oracle(std::string& detail) {
  int instances = 0, crosschecked = 0;
  for (const GroupPtr& A : abelian16())
    for (const GroupPtr& B : abelian16()) {
      if (A->order > 16 || B->order > 16) continue;
      for (const auto& img : oracle::all_homs(*A, *B)) {
        GroupHom phi{A, B, img};
        int q = B->order / hom_image(phi).order();
        double bits = q * std::log2(std::max(2.0, static_cast<double>(A->order)));
        if (A->order > 1 && bits > 10) continue;  // past the Cayley-table budget
        ClosureResult fast = free_normal_closure(phi, ClosureStrategy::abelian);
        // the direct sum of [G : im] copies of Gamma
        GroupPtr power = trivial_group();
        for (int i = 0; i < q; ++i) power = direct_product(power, A);
        REQ(fast.cl->order == power->order, "order mismatch");
        REQ(is_isomorphic(fast.cl, power).isomorphic,
            "not a direct power for " + A->label + " -> " + B->label);
        ++instances;
        if (fast.cl->order <= 256) {
          ClosureResult tc = free_normal_closure(phi, ClosureStrategy::generic_tc);
          REQ(mutually_inverse_universal(fast, tc),
              "generic disagreement for " + A->label + " -> " + B->label);
          ++crosschecked;
        }
      }
    }
  REQ(instances >= 100, "too few instances");
  detail = std::to_string(instances) + " direct sums verified, " +
           std::to_string(crosschecked) + " cross-checked against generic-tc";
}

void c4_descending_central(std::string& detail) {
  for (GroupPtr g : {catalog::dihedral(8), catalog::symmetric(3)}) {
    TowerTrace t = closures_tower(trivial_hom(g, trivial_group()));
    REQ(t.stabilized_at.has_value(), "tower did not stabilize for " + g->label);
    SeriesTrace lcs = central_series(g, SeriesKind::descending_central);
    for (size_t k = 0; k < t.stages.size(); ++k) {
      size_t gi = std::min(k + 1, lcs.terms.size() - 1);
      QuotientResult q = quotient(g, lcs.terms[gi]);
      REQ(is_isomorphic(t.stages[k].group, q.group).isomorphic,
          "stage " + std::to_string(k + 1) + " is not the central quotient for " + g->label);
    }
    if (g->label == "D8")
      REQ(t.stages.back().group->order == 8, "D8 tower must stabilize at D8");
    else
      REQ(t.stages.back().group->order == 2, "S3 tower must stabilize at Z2");
  }
  detail = "towers over the trivial target match the lower central series";
}

void c5_closures_tower_stability(std::string& detail) {
  GroupPtr s3 = catalog::symmetric(3);
  GroupHom incl = hom_from_gen_images(catalog::cyclic(2), s3, {1},
                                      {perm_index(s3, catalog::cycle(3, {1, 2}))});
  TowerTrace t = closures_tower(incl, 16);
  REQ(t.stabilized_at.has_value(), "tower did not terminate in 16 steps");
  REQ(t.bound_check.has_value(), "bound check missing");
  REQ(t.bound_check->bound_value == 50, "bound is 2*ceil(f(6)) = 50");
  REQ(t.bound_check->satisfied, "stage order above the bound");
  for (const TowerStage& st : t.stages) {
    REQ(is_surjective(st.connecting.n), "a connecting map is not onto");
    REQ(is_central_subgroup(hom_kernel(st.connecting.n)), "a kernel is not central");
  }
  detail = "terminates at stage " + std::to_string(*t.stabilized_at) +
           ", orders within 2*ceil(f(6)) = 50";
}

void c6_normalizer_fixtures(std::string& detail) {
  NormalizerResult n1 = injective_normalizer(trivial_hom(catalog::cyclic(3), trivial_group()));
  REQ(n1.N->order == 2, "N(Z3 -> 1) order");

  GroupPtr s4 = catalog::symmetric(4);
  Subgroup z2sub = subgroup_closure(s4, {perm_index(s4, catalog::cycle(4, {1, 2}))});
  SubgroupEmbedding e = subgroup_as_group(z2sub, "Z2");
  NormalizerResult n2 = injective_normalizer(e.inclusion);
  REQ(n2.N->order == 4, "N(<(12)> in S4) order");
  REQ(is_isomorphic(n2.N, subgroup_as_group(subgroup_queries(s4, z2sub).normalizer).group)
          .isomorphic,
      "N(phi) is not the usual normalizer");

  TowerTrace t = normalizers_tower(trivial_hom(catalog::symmetric(3), trivial_group()));
  REQ(t.stabilized_at == 1, "S3 tower must stabilize at stage 1");
  REQ(t.stages[0].group->order == 6, "stage group must have order 6");
  detail = "N(Z3->1)=2, N(<(12)> in S4)=4 = usual normalizer, S3 tower stable at stage 1";
}

void c7_normalizers_tower_stability(std::string& detail) {
  Budgets budgets;  // trivial-image instances reach stages of order several hundred
  budgets.max_aut_group_order = 4096;
  budgets.max_automorphisms = 2000000;
  int instances = 0;
  for (const GroupPtr& A : catalog24())
    for (const GroupPtr& B : catalog24()) {
      for (const auto& img : oracle::all_homs(*A, *B)) {
        GroupHom phi{A, B, img};
        Subgroup ker = hom_kernel(phi);
        if (center(subgroup_as_group(ker).group).order() != 1) continue;
        TowerTrace t = normalizers_tower(phi, 32, budgets, true);
        REQ(!t.error.has_value(), std::string("budget hit: ") + *t.error);
        REQ(t.stabilized_at.has_value(),
            "tower did not terminate for " + A->label + " -> " + B->label);
        for (const TowerStage& st : t.stages)
          REQ(st.checks.ok(), "diagnostics failed for " + A->label + " -> " + B->label);
        ++instances;
      }
    }
  REQ(instances >= 50, "too few instances");
  detail = std::to_string(instances) + " centerless-kernel towers terminate within 32 steps";
}

void c8_detection_oracle(std::string& detail) {
  int instances = 0;
  for (const GroupPtr& A : catalog8())
    for (const GroupPtr& B : catalog8()) {
      auto actions = oracle::all_action_homs(*A, *B);
      for (const auto& img : oracle::all_homs(*A, *B)) {
        GroupHom phi{A, B, img};
        bool oracle_found = false;
        for (const auto& act : actions)
          if (oracle::action_is_normal_structure(phi, act)) {
            oracle_found = true;
            break;
          }
        SectionResult det = detect_normal_structure(phi);
        REQ(det.found == oracle_found,
            "disagreement on a hom " + A->label + " -> " + B->label);
        if (det.found)
          REQ(oracle::action_is_normal_structure(phi, det.induced->action),
              "detected action fails the direct axiom check");
        ++instances;
      }
    }
  REQ(instances >= 200, "too few instances");
  detail = std::to_string(instances) + " homomorphisms agree with the all-actions oracle";
}

void c9_universal_uniqueness(std::string& detail) {
  int closure_count = 0, normalizer_count = 0;

  // closure side: brute-force all equivariant commuting maps cl -> M
  struct ClosureCase {
    GroupHom phi;
    GroupHom psi;
    NormalMap n;
  };
  std::vector<ClosureCase> ccases;
  {
    GroupPtr z2 = catalog::cyclic(2), z4 = catalog::cyclic(4);
    GroupHom dbl = hom_from_gen_images(z2, z4, {1}, {2});
    ClosureResult ab = free_normal_closure(dbl, ClosureStrategy::abelian);
    ccases.push_back({dbl, ab.c_phi, ab.phi_hat});

    GroupPtr s3 = catalog::symmetric(3);
    GroupHom sgn = hom_from_gen_images(s3, z2, s3->generators, {0, 1});
    ClosureResult sc = free_normal_closure(sgn);
    ccases.push_back({sgn, sc.c_phi, sc.phi_hat});

    SubgroupEmbedding a3 = subgroup_as_group(subgroup_closure(s3, {s3->generators[0]}), "A3");
    ClosureResult nc = free_normal_closure(a3.inclusion, ClosureStrategy::generic_tc);
    ccases.push_back({a3.inclusion, nc.c_phi, nc.phi_hat});
  }
  for (const ClosureCase& c : ccases) {
    ClosureResult cr = free_normal_closure(c.phi, ClosureStrategy::generic_tc);
    if (cr.cl->order * c.n.M()->order > 10000) continue;
    GroupHom expected = universal_morphism(cr, c.psi, c.n);
    int found = 0;
    for (const auto& img : oracle::all_homs(*cr.cl, *c.n.M())) {
      GroupHom f{cr.cl, c.n.M(), img};
      bool ok = true;
      for (int x = 0; x < cr.gamma->order && ok; ++x) ok = f(cr.c_phi(x)) == c.psi(x);
      for (int x = 0; x < cr.cl->order && ok; ++x) ok = c.n.n(f(x)) == cr.phi_hat.n(x);
      for (int g = 0; g < cr.target->order && ok; ++g)
        for (int x = 0; x < cr.cl->order && ok; ++x)
          ok = f(cr.phi_hat.act(x, g)) == c.n.act(f(x), g);
      if (ok) {
        ++found;
        REQ(img == expected.image_of, "a different morphism satisfies the conditions");
      }
    }
    REQ(found == 1, "expected exactly one closure morphism, found " + std::to_string(found));
    ++closure_count;
  }

  // normalizer side: brute-force all commuting maps H -> N(phi)
  struct InCase {
    GroupHom phi;
    NormalMap n;
    GroupHom f;
  };
  std::vector<InCase> icases;
  {
    GroupPtr s3 = catalog::symmetric(3);
    SubgroupEmbedding a3 = subgroup_as_group(subgroup_closure(s3, {s3->generators[0]}), "A3");
    NormalMap conj_incl = inclusion_normal_map(subgroup_closure(s3, {s3->generators[0]}));
    icases.push_back({a3.inclusion, conj_incl, identity_hom(s3)});

    GroupPtr z4 = catalog::cyclic(4);
    GroupHom half = hom_from_gen_images(z4, catalog::cyclic(2), {1}, {1});
    icases.push_back({half, canonical_structure_surjective_central(identity_hom(z4)), half});
  }
  for (const InCase& c : icases) {
    NormalizerResult nr = injective_normalizer(c.phi);
    if (c.n.G()->order * nr.N->order > 10000) continue;
    GroupHom expected = universal_morphism_in(nr, c.n, c.f);
    int found = 0;
    for (const auto& img : oracle::all_homs(*c.n.G(), *nr.N)) {
      GroupHom f{c.n.G(), nr.N, img};
      bool ok = true;
      for (int x = 0; x < c.phi.source->order && ok; ++x)
        ok = f(c.n.n(x)) == nr.phi_tilde.n(x);
      for (int h = 0; h < c.n.G()->order && ok; ++h) {
        ok = nr.p_phi(f(h)) == c.f(h);
        for (int x = 0; x < c.phi.source->order && ok; ++x)
          ok = c.n.act(x, h) == nr.phi_tilde.act(x, f(h));
      }
      if (ok) {
        ++found;
        REQ(img == expected.image_of, "a different normalizer morphism satisfies the conditions");
      }
    }
    REQ(found == 1, "expected exactly one normalizer morphism, found " + std::to_string(found));
    ++normalizer_count;
  }
  detail = std::to_string(closure_count) + " closure and " + std::to_string(normalizer_count) +
           " normalizer factorizations have a unique morphism";
}

void c10_structure_suite(std::string& detail) {
  // the lemma suite must pass on every computed closure over the fixture set,
  // and `verify` must exit 0 on the bundled documents
  std::vector<GroupHom> homs;
  homs.push_back(z3_into_a5());
  {
    GroupPtr s3 = catalog::symmetric(3);
    homs.push_back(hom_from_gen_images(s3, catalog::cyclic(2), s3->generators, {0, 1}));
    homs.push_back(hom_from_gen_images(catalog::cyclic(2), s3, {1},
                                       {perm_index(s3, catalog::cycle(3, {1, 2}))}));
    homs.push_back(trivial_hom(s3, trivial_group()));
  }
  {
    GroupPtr q8 = catalog::quaternion8();
    homs.push_back(quotient(q8, center(q8)).projection);
  }
  for (const GroupHom& phi : homs) {
    ClosureResult cr = free_normal_closure(phi);
    CheckReport rep = closure_structure_checks(cr);
    for (const Check& c : rep.checks)
      REQ(c.ok, "check '" + c.name + "' failed");
  }
  const char* fixtures[] = {"a5.grp", "basic.grp", "q8.grp", "incl.grp", "triv.grp"};
  for (const char* f : fixtures) {
    CommandResult r = run_command({"verify", std::string(GNORM_FIXTURE_DIR) + "/" + f});
    REQ(r.exit_code == 0, std::string("verify exited ") + std::to_string(r.exit_code) +
                              " on " + f);
  }
  detail = "lemma suite green on all computed closures; verify exits 0 on bundled fixtures";
}

void c11_tc_sanity(std::string& detail) {
  Realization s3 = realize(make_presentation(2, {{1, 1, 1}, {2, 2}, {1, 2, 1, 2}}, "S3"), 1000);
  REQ(s3.group->order == 6, "S3 presentation order");
  REQ(is_isomorphic(s3.group, catalog::symmetric(3)).isomorphic, "S3 not isomorphic");
  Realization q8 =
      realize(make_presentation(2, {{1, 1, 1, 1}, {1, 1, -2, -2}, {-2, 1, 2, 1}}, "Q8"), 1000);
  REQ(q8.group->order == 8, "Q8 presentation order");
  REQ(is_isomorphic(q8.group, catalog::quaternion8()).isomorphic, "Q8 not isomorphic");
  Realization z6 = realize(make_presentation(1, {{1, 1, 1, 1, 1, 1}}, "Z6"), 1000);
  REQ(z6.group->order == 6, "Z6 presentation order");
  REQ(is_isomorphic(z6.group, catalog::cyclic(6)).isomorphic, "Z6 not isomorphic");
  detail = "S3, Q8, Z6 presentations realize orders 6, 8, 6";
}

}  // namespace

int main() {
  criterion("C1 a5-closure", c1_a5_fixture);
  criterion("C2 surjective", c2_surjective_oracle);
  criterion("C3 abelian", c3_abelian_oracle);
  criterion("C4 central-series", c4_descending_central);
  criterion("C5 closure-tower", c5_closures_tower_stability);
  criterion("C6 normalizers", c6_normalizer_fixtures);
  criterion("C7 nor-towers", c7_normalizers_tower_stability);
  criterion("C8 detection", c8_detection_oracle);
  criterion("C9 uniqueness", c9_universal_uniqueness);
  criterion("C10 structure", c10_structure_suite);
  criterion("C11 tc-sanity", c11_tc_sanity);
  if (g_failures) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
