#pragma once

#include <string>
#include <vector>

#include "gnorm/fp.hpp"
#include "gnorm/group.hpp"

// Named small groups used across the test suites, built as permutation
// groups (or tables) through the public constructors.
namespace catalog {

using gnorm::GroupPtr;
using gnorm::Perm;

inline Perm cycle(int degree, std::vector<int> pts) {
  Perm p = gnorm::perm_identity(degree);
  for (size_t i = 0; i < pts.size(); ++i) p[pts[i] - 1] = pts[(i + 1) % pts.size()] - 1;
  return p;
}

inline GroupPtr cyclic(int n) {
  if (n == 1) return gnorm::trivial_group();
  std::vector<int> pts(n);
  for (int i = 0; i < n; ++i) pts[i] = i + 1;
  return gnorm::group_from_permutations(n, {cycle(n, pts)}, {}, "Z" + std::to_string(n));
}

inline GroupPtr symmetric(int n) {
  std::vector<int> pts(n);
  for (int i = 0; i < n; ++i) pts[i] = i + 1;
  return gnorm::group_from_permutations(n, {cycle(n, pts), cycle(n, {1, 2})}, {},
                                        "S" + std::to_string(n));
}

inline GroupPtr alternating(int n) {
  std::vector<Perm> gens{cycle(n, {1, 2, 3})};
  if (n % 2 == 1) {
    std::vector<int> pts(n);
    for (int i = 0; i < n; ++i) pts[i] = i + 1;
    gens.push_back(cycle(n, pts));  // the n-cycle is even
  } else {
    std::vector<int> pts(n - 1);
    for (int i = 0; i < n - 1; ++i) pts[i] = i + 2;
    gens.push_back(cycle(n, pts));  // the (n-1)-cycle on {2..n} is even
  }
  return gnorm::group_from_permutations(n, gens, {}, "A" + std::to_string(n));
}

/// Dihedral group of order 2n acting on an n-gon.
inline GroupPtr dihedral(int order2n) {
  int n = order2n / 2;
  std::vector<int> pts(n);
  for (int i = 0; i < n; ++i) pts[i] = i + 1;
  Perm rot = cycle(n, pts);
  Perm refl = gnorm::perm_identity(n);
  for (int i = 0; i < n; ++i) refl[i] = (n - i) % n;
  return gnorm::group_from_permutations(n, {rot, refl}, {}, "D" + std::to_string(order2n));
}

inline GroupPtr klein4() {
  return gnorm::group_from_permutations(
      4, {cycle(4, {1, 2}) , cycle(4, {3, 4})}, {}, "V4");
}

/// Quaternion group in its regular representation on {1,-1,i,-i,j,-j,k,-k}.
inline GroupPtr quaternion8() {
  Perm i_mul = gnorm::perm_compose(cycle(8, {1, 3, 2, 4}), cycle(8, {5, 8, 6, 7}));
  Perm j_mul = gnorm::perm_compose(cycle(8, {1, 5, 2, 6}), cycle(8, {3, 7, 4, 8}));
  return gnorm::group_from_permutations(8, {i_mul, j_mul}, {}, "Q8");
}

inline GroupPtr elementary_abelian(int p, int k, const std::string& label) {
  GroupPtr g = cyclic(p);
  for (int i = 1; i < k; ++i) g = gnorm::direct_product(g, cyclic(p));
  auto copy = std::make_shared<gnorm::FiniteGroup>(*g);
  copy->label = label;
  return copy;
}

inline GroupPtr z2xz4() { return gnorm::direct_product(cyclic(2), cyclic(4), "Z2xZ4"); }

inline GroupPtr dicyclic3() {  // <a, b | a^6, b^2 = a^3, b^-1 a b = a^-1>, order 12
  gnorm::Presentation P = gnorm::make_presentation(
      2, {{1, 1, 1, 1, 1, 1}, {2, 2, -1, -1, -1}, {-2, 1, 2, 1}}, "Dic3");
  return gnorm::realize(P, 10000).group;
}

inline GroupPtr sl23() {  // 2x2 matrices over F3 with determinant 1, order 24
  std::vector<std::array<int, 4>> mats;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d)
          if ((a * d - b * c % 3 + 9) % 3 == 1) mats.push_back({a, b, c, d});
  // identity first
  std::array<int, 4> id{1, 0, 0, 1};
  std::swap(mats[0], *std::find(mats.begin(), mats.end(), id));
  auto mul_mat = [](const std::array<int, 4>& x, const std::array<int, 4>& y) {
    return std::array<int, 4>{(x[0] * y[0] + x[1] * y[2]) % 3, (x[0] * y[1] + x[1] * y[3]) % 3,
                              (x[2] * y[0] + x[3] * y[2]) % 3, (x[2] * y[1] + x[3] * y[3]) % 3};
  };
  int n = static_cast<int>(mats.size());
  std::vector<int> mul(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto m = mul_mat(mats[x], mats[y]);
      mul[x * n + y] =
          static_cast<int>(std::find(mats.begin(), mats.end(), m) - mats.begin());
    }
  return gnorm::make_group(n, std::move(mul), "SL(2,3)");
}

/// Central product of two dihedral groups of order 8 (extraspecial, order 32).
inline GroupPtr extraspecial32() {
  GroupPtr d8 = dihedral(8);
  GroupPtr dd = gnorm::direct_product(d8, d8);
  // identify the two central involutions: quotient by <(z, z)>
  gnorm::Subgroup zd = gnorm::center(d8);
  int z = zd.members[1];
  gnorm::Subgroup diag = gnorm::subgroup_closure(dd, {z * d8->order + z});
  auto q = gnorm::quotient(dd, diag);
  auto copy = std::make_shared<gnorm::FiniteGroup>(*q.group);
  copy->label = "D8*D8";
  return copy;
}

}  // namespace catalog
