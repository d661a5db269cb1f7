#include <doctest.h>

#include <algorithm>
#include <set>

#include "catalog.hpp"
#include "gnorm/group.hpp"

using namespace gnorm;

TEST_CASE("permutation group generation") {
  GroupPtr s3 = catalog::symmetric(3);
  CHECK(s3->order == 6);
  GroupPtr a5 = catalog::alternating(5);
  CHECK(a5->order == 60);
  GroupPtr one = group_from_permutations(1, {}, {}, "1");
  CHECK(one->order == 1);

  Budgets tight;
  tight.max_group_order = 30;
  CHECK_THROWS_AS(group_from_permutations(5, {catalog::cycle(5, {1, 2, 3, 4, 5}),
                                              catalog::cycle(5, {1, 2})},
                                          tight),
                  Error);
}

TEST_CASE("group axioms are enforced") {
  // a table with a bad identity row
  std::vector<int> bad{0, 1, 1, 0};
  CHECK_NOTHROW(make_group(2, bad, "Z2"));
  std::vector<int> worse{1, 0, 0, 1};
  CHECK_THROWS_AS(make_group(2, worse, "bad"), Error);
}

TEST_CASE("subgroup queries") {
  GroupPtr s3 = catalog::symmetric(3);
  // <(1 2)> inside S3
  Perm t = catalog::cycle(3, {1, 2});
  int ti = static_cast<int>(std::find(s3->perm_witness.begin(), s3->perm_witness.end(), t) -
                            s3->perm_witness.begin());
  Subgroup S = subgroup_closure(s3, {ti});
  CHECK(S.order() == 2);
  SubgroupQueries q = subgroup_queries(s3, S);
  CHECK(q.normal_closure.order() == 6);

  GroupPtr q8 = catalog::quaternion8();
  SubgroupQueries q2 = subgroup_queries(q8, full_subgroup(q8));
  CHECK(q2.center_of_G.order() == 2);

  GroupPtr s4 = catalog::symmetric(4);
  Perm t4 = catalog::cycle(4, {1, 2});
  int t4i = static_cast<int>(std::find(s4->perm_witness.begin(), s4->perm_witness.end(), t4) -
                             s4->perm_witness.begin());
  Subgroup S4 = subgroup_closure(s4, {t4i});
  SubgroupQueries q3 = subgroup_queries(s4, S4);
  CHECK(q3.normalizer.order() == 4);
  CHECK(q3.normalizer.members == q3.centralizer.members);

  Subgroup not_closed{s4, {0, t4i, t4i + 1 == s4->order ? 1 : t4i + 1}};
  CHECK_THROWS_AS(subgroup_queries(s4, not_closed), Error);
}

TEST_CASE("central series") {
  GroupPtr d8 = catalog::dihedral(8);
  SeriesTrace desc = central_series(d8, SeriesKind::descending_central);
  REQUIRE(desc.terms.size() >= 3);
  CHECK(desc.terms[0].order() == 8);
  CHECK(desc.terms[1].order() == 2);
  CHECK(desc.terms[2].order() == 1);
  CHECK(is_nilpotent(d8));

  SeriesTrace up = central_series(d8, SeriesKind::upper_central);
  CHECK(up.terms[0].order() == 1);
  CHECK(up.terms[1].order() == 2);
  CHECK(up.terms[2].order() == 8);
  CHECK(hypercenter(d8).order() == 8);

  GroupPtr s3 = catalog::symmetric(3);
  CHECK(hypercenter(s3).order() == 1);
  CHECK_FALSE(is_nilpotent(s3));
}

TEST_CASE("quotient and abelianization") {
  GroupPtr s4 = catalog::symmetric(4);
  // V4 is the unique normal 2,2-type subgroup
  std::vector<int> v4_members;
  for (int x = 0; x < s4->order; ++x) {
    const Perm& p = s4->perm_witness[x];
    bool dbl = x == 0 || (element_order(*s4, x) == 2 && [&] {
                 int moved = 0;
                 for (int i = 0; i < 4; ++i) moved += p[i] != i;
                 return moved == 4;
               }());
    if (dbl) v4_members.push_back(x);
  }
  Subgroup V4{s4, v4_members};
  REQUIRE(V4.order() == 4);
  QuotientResult q = quotient(s4, V4);
  CHECK(q.group->order == 6);
  CHECK(is_surjective(q.projection));
  CHECK(hom_kernel(q.projection).members == V4.members);

  QuotientResult idq = quotient(s4, trivial_subgroup(s4));
  CHECK(idq.group->order == 24);

  GroupPtr q8 = catalog::quaternion8();
  QuotientResult zq = quotient(q8, center(q8));
  CHECK(zq.group->order == 4);
  CHECK(is_abelian(*zq.group));

  CHECK(abelianization(catalog::symmetric(3)).group->order == 2);
  CHECK(abelianization(catalog::cyclic(6)).group->order == 6);
  CHECK(abelian_invariants(abelianization(q8).group) == std::vector<int>{2, 2});

  // non-normal subgroup is rejected
  GroupPtr s3 = catalog::symmetric(3);
  Perm t = catalog::cycle(3, {1, 2});
  int ti = static_cast<int>(std::find(s3->perm_witness.begin(), s3->perm_witness.end(), t) -
                            s3->perm_witness.begin());
  CHECK_THROWS_AS(quotient(s3, subgroup_closure(s3, {ti})), Error);
}

TEST_CASE("automorphism groups") {
  AutomorphismGroup a5 = automorphism_group(catalog::cyclic(5));
  CHECK(a5.group->order == 4);
  CHECK(element_order(*a5.group, a5.group->generators.empty() ? 1 : a5.group->generators[0]) > 1);
  // Aut(Z5) is cyclic of order 4: there must be an element of order 4
  std::vector<int> orders = element_orders(*a5.group);
  CHECK(std::count(orders.begin(), orders.end(), 4) == 2);

  AutomorphismGroup as3 = automorphism_group(catalog::symmetric(3));
  CHECK(as3.group->order == 6);

  AutomorphismGroup a1 = automorphism_group(trivial_group());
  CHECK(a1.group->order == 1);

  // every table is a bijective endomorphism and composition matches
  GroupPtr q8 = catalog::quaternion8();
  AutomorphismGroup aq = automorphism_group(q8);
  CHECK(aq.group->order == 24);
  for (const Perm& t : aq.tables) {
    GroupHom f{q8, q8, t};
    CHECK(is_homomorphism(f));
    CHECK(is_bijective(f));
  }
  for (int i = 0; i < aq.group->order; ++i)
    for (int j = 0; j < aq.group->order; ++j)
      CHECK(aq.tables[aq.group->op(i, j)] == perm_compose(aq.tables[i], aq.tables[j]));

  Budgets tiny;
  tiny.max_aut_group_order = 4;
  CHECK_THROWS_AS(automorphism_group(catalog::symmetric(3), tiny), Error);
}

TEST_CASE("isomorphism testing") {
  GroupPtr z6 = catalog::cyclic(6);
  GroupPtr z2z3 = direct_product(catalog::cyclic(2), catalog::cyclic(3));
  IsoResult r = is_isomorphic(z6, z2z3);
  CHECK(r.isomorphic);
  REQUIRE(r.witness.has_value());
  CHECK(is_bijective(*r.witness));
  CHECK(is_homomorphism(*r.witness));

  CHECK_FALSE(is_isomorphic(catalog::dihedral(8), catalog::quaternion8()).isomorphic);

  GroupPtr s4 = catalog::symmetric(4);
  IsoResult self = is_isomorphic(s4, s4);
  CHECK(self.isomorphic);
}

TEST_CASE("nilpotent closure property") {
  GroupPtr d8 = catalog::dihedral(8);
  // T = <rotation>: its normal closure is itself, implication vacuous
  Subgroup rot = subgroup_closure(d8, {d8->generators[0]});
  CHECK(rot.order() == 4);
  CHECK(nilpotent_closure_check(d8, rot));
  CHECK(nilpotent_closure_check(d8, full_subgroup(d8)));

  GroupPtr s3 = catalog::symmetric(3);
  CHECK_FALSE(is_nilpotent(s3));
  Perm t = catalog::cycle(3, {1, 2});
  int ti = static_cast<int>(std::find(s3->perm_witness.begin(), s3->perm_witness.end(), t) -
                            s3->perm_witness.begin());
  Subgroup T = subgroup_closure(s3, {ti});
  CHECK(normal_closure_of(s3, T.members).order() == 6);
  CHECK(nilpotent_closure_check(s3, T));  // vacuous: S3 is not nilpotent

  // the real content: every nilpotent catalog group of order <= 32, every subgroup
  for (GroupPtr N : {catalog::cyclic(16), catalog::dihedral(8), catalog::quaternion8(),
                     catalog::dihedral(16), catalog::z2xz4(),
                     catalog::elementary_abelian(2, 3, "2^3"), catalog::extraspecial32(),
                     catalog::cyclic(27), direct_product(catalog::cyclic(3), catalog::cyclic(9))}) {
    REQUIRE(is_nilpotent(N));
    for (const Subgroup& T2 : all_subgroups(N)) {
      if (normal_closure_of(N, T2.members).order() == N->order) CHECK(T2.order() == N->order);
    }
  }
}

TEST_CASE("central series terminate exactly for nilpotent groups") {
  for (GroupPtr G : {catalog::cyclic(12), catalog::dihedral(8), catalog::quaternion8(),
                     catalog::z2xz4(), catalog::extraspecial32()}) {
    REQUIRE(is_nilpotent(G));
    CHECK(hypercenter(G).order() == G->order);
    CHECK(central_series(G, SeriesKind::descending_central).terms.back().order() == 1);
  }
  for (GroupPtr G : {catalog::symmetric(3), catalog::symmetric(4), catalog::alternating(4),
                     catalog::dihedral(12)}) {
    REQUIRE_FALSE(is_nilpotent(G));
    CHECK(hypercenter(G).order() < G->order);
    CHECK(central_series(G, SeriesKind::descending_central).terms.back().order() > 1);
  }
}

TEST_CASE("abelian invariants") {
  CHECK(abelian_invariants(catalog::cyclic(6)) == std::vector<int>{2, 3});
  CHECK(abelian_invariants(catalog::klein4()) == std::vector<int>{2, 2});
  CHECK(abelian_invariants(catalog::cyclic(12)) == std::vector<int>{3, 4});
  CHECK(abelian_invariants(catalog::z2xz4()) == std::vector<int>{2, 4});
  CHECK(abelian_invariants(trivial_group()).empty());
  CHECK_THROWS_AS(abelian_invariants(catalog::symmetric(3)), Error);
}

TEST_CASE("homomorphism utilities") {
  GroupPtr z4 = catalog::cyclic(4);
  GroupPtr z2 = catalog::cyclic(2);
  GroupHom dbl = hom_from_gen_images(z4, z2, {z4->generators[0]}, {z2->generators[0]});
  CHECK(is_surjective(dbl));
  CHECK(hom_kernel(dbl).order() == 2);

  CHECK_THROWS_AS(hom_from_gen_images(catalog::cyclic(3), z2, {1}, {1}), Error);

  GroupHom idh = identity_hom(z4);
  CHECK(is_bijective(idh));
  GroupHom inv = inverse_hom(idh);
  CHECK(inv.image_of == idh.image_of);
}
