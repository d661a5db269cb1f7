#include "gnorm/normal_map.hpp"

#include <algorithm>
#include <map>

namespace gnorm {

Verdict validate_normal_map(const NormalMap& nm) {
  Verdict v;
  const FiniteGroup& M = *nm.M();
  const FiniteGroup& G = *nm.G();
  if (auto w = homomorphism_violation(nm.n)) {
    v.violations.push_back({"underlying-homomorphism", w->first, w->second, -1});
    return v;
  }
  if (static_cast<int>(nm.action.size()) != G.order) {
    v.violations.push_back({"action-shape", -1, -1, -1});
    return v;
  }
  for (int g = 0; g < G.order; ++g) {
    if (static_cast<int>(nm.action[g].size()) != M.order) {
      v.violations.push_back({"action-shape", -1, -1, g});
      return v;
    }
    std::vector<char> hit(M.order, 0);
    for (int a = 0; a < M.order; ++a) {
      int im = nm.action[g][a];
      if (im < 0 || im >= M.order || hit[im]) {
        v.violations.push_back({"action-bijective", a, -1, g});
        return v;
      }
      hit[im] = 1;
    }
  }
  // each l(g) is an automorphism of M
  for (int g = 0; g < G.order; ++g) {
    bool bad = false;
    for (int a = 0; a < M.order && !bad; ++a)
      for (int b = 0; b < M.order && !bad; ++b)
        if (nm.act(M.op(a, b), g) != M.op(nm.act(a, g), nm.act(b, g))) {
          v.violations.push_back({"action-automorphism", a, b, g});
          bad = true;
        }
    if (bad) break;
  }
  // l respects the group structure of G: identity and products
  for (int a = 0; a < M.order; ++a)
    if (nm.act(a, 0) != a) {
      v.violations.push_back({"action-identity", a, -1, 0});
      break;
    }
  {
    bool bad = false;
    for (int g = 0; g < G.order && !bad; ++g)
      for (int h = 0; h < G.order && !bad; ++h) {
        int gh = G.op(g, h);
        for (int a = 0; a < M.order; ++a)
          if (nm.act(a, gh) != nm.act(nm.act(a, g), h)) {
            v.violations.push_back({"action-homomorphism", a, h, g});
            bad = true;
            break;
          }
      }
  }
  // equivariance: n(a^g) = n(a)^g
  {
    bool bad = false;
    for (int g = 0; g < G.order && !bad; ++g)
      for (int a = 0; a < M.order && !bad; ++a)
        if (nm.n(nm.act(a, g)) != G.conj(nm.n(a), g)) {
          v.violations.push_back({"equivariance", a, -1, g});
          bad = true;
        }
  }
  // Peiffer identity: a^{n(b)} = a^b
  {
    bool bad = false;
    for (int a = 0; a < M.order && !bad; ++a)
      for (int b = 0; b < M.order && !bad; ++b)
        if (nm.act(a, nm.n(b)) != M.conj(a, b)) {
          v.violations.push_back({"peiffer", a, b, -1});
          bad = true;
        }
  }
  return v;
}

void require_normal_map(const NormalMap& nm, const std::string& where) {
  Verdict v = validate_normal_map(nm);
  if (!v.ok())
    throw Error(Errc::invalid_argument,
                where + ": constructed map violates " + v.violations.front().rule);
}

NormalMap inclusion_normal_map(const Subgroup& N) {
  const GroupPtr& G = N.parent;
  SubgroupEmbedding e = subgroup_as_group(N);
  const int m = N.order();
  std::map<int, int> idx;
  for (int i = 0; i < m; ++i) idx[N.members[i]] = i;
  NormalMap nm;
  nm.n = e.inclusion;
  nm.action.assign(G->order, std::vector<int>(m));
  for (int g = 0; g < G->order; ++g)
    for (int a = 0; a < m; ++a) {
      auto it = idx.find(G->conj(N.members[a], g));
      if (it == idx.end()) throw Error(Errc::precondition_failed, "N is not normal in G");
      nm.action[g][a] = it->second;
    }
  return nm;
}

NormalMap canonical_structure_surjective_central(const GroupHom& n) {
  if (!is_surjective(n))
    throw Error(Errc::precondition_failed, "map is not surjective");
  Subgroup K = hom_kernel(n);
  if (!is_central_subgroup(K))
    throw Error(Errc::precondition_failed, "kernel is not central");
  const FiniteGroup& M = *n.source;
  const FiniteGroup& G = *n.target;
  std::vector<int> preimage(G.order, -1);
  for (int a = 0; a < M.order; ++a)
    if (preimage[n(a)] < 0) preimage[n(a)] = a;
  NormalMap nm;
  nm.n = n;
  nm.action.assign(G.order, std::vector<int>(M.order));
  for (int g = 0; g < G.order; ++g) {
    int b = preimage[g];
    for (int a = 0; a < M.order; ++a) nm.action[g][a] = M.conj(a, b);
  }
  require_normal_map(nm, "canonical_structure_surjective_central");
  return nm;
}

NormalMap restrict_to_invariant(const NormalMap& nm, const Subgroup& N) {
  const FiniteGroup& G = *nm.G();
  if (!same_group(N.parent, nm.M()))
    throw Error(Errc::invalid_argument, "N is not a subgroup of M");
  if (!is_subgroup(N)) throw Error(Errc::precondition_failed, "N is not a subgroup");
  for (int g = 0; g < G.order; ++g)
    for (int a : N.members)
      if (!N.contains(nm.act(a, g)))
        throw Error(Errc::precondition_failed,
                    "N is not G-invariant (witness g=" + std::to_string(g) +
                        ", a=" + std::to_string(a) + ")");
  const int m = N.order();
  std::map<int, int> idx;
  for (int i = 0; i < m; ++i) idx[N.members[i]] = i;
  std::vector<int> mul(static_cast<size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      mul[static_cast<size_t>(a) * m + b] = idx.at(nm.M()->op(N.members[a], N.members[b]));
  GroupPtr Mr = make_group(m, std::move(mul), "restricted");
  NormalMap out;
  out.n.source = Mr;
  out.n.target = nm.G();
  out.n.image_of.resize(m);
  for (int a = 0; a < m; ++a) out.n.image_of[a] = nm.n(N.members[a]);
  out.action.assign(G.order, std::vector<int>(m));
  for (int g = 0; g < G.order; ++g)
    for (int a = 0; a < m; ++a) out.action[g][a] = idx.at(nm.act(N.members[a], g));
  require_normal_map(out, "restrict_to_invariant");
  return out;
}

NormalMap extend_by_abelian(const NormalMap& nm, const GroupPtr& V) {
  if (!is_abelian(*V)) throw Error(Errc::precondition_failed, "V is not abelian");
  GroupPtr MV = direct_product(nm.M(), V);
  const int nv = V->order;
  NormalMap out;
  out.n.source = MV;
  out.n.target = nm.G();
  out.n.image_of.resize(MV->order);
  for (int a = 0; a < nm.M()->order; ++a)
    for (int v = 0; v < nv; ++v) out.n.image_of[a * nv + v] = nm.n(a);
  out.action.assign(nm.G()->order, std::vector<int>(MV->order));
  for (int g = 0; g < nm.G()->order; ++g)
    for (int a = 0; a < nm.M()->order; ++a)
      for (int v = 0; v < nv; ++v) out.action[g][a * nv + v] = nm.act(a, g) * nv + v;
  require_normal_map(out, "extend_by_abelian");
  return out;
}

PullbackResult pullback(const NormalMap& n_prime, const GroupHom& eta) {
  const FiniteGroup& Mp = *n_prime.M();
  const FiniteGroup& G = *eta.source;
  if (!same_group(eta.target, n_prime.G()))
    throw Error(Errc::invalid_argument, "eta does not land in the base of n'");
  std::vector<std::pair<int, int>> elems;  // (h, m')
  for (int h = 0; h < G.order; ++h)
    for (int mp = 0; mp < Mp.order; ++mp)
      if (n_prime.n(mp) == eta(h)) elems.emplace_back(h, mp);
  std::sort(elems.begin(), elems.end());
  std::map<std::pair<int, int>, int> idx;
  for (size_t i = 0; i < elems.size(); ++i) idx[elems[i]] = static_cast<int>(i);
  const int m = static_cast<int>(elems.size());
  std::vector<int> mul(static_cast<size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      std::pair<int, int> p{G.op(elems[a].first, elems[b].first),
                            Mp.op(elems[a].second, elems[b].second)};
      mul[static_cast<size_t>(a) * m + b] = idx.at(p);
    }
  PullbackResult r;
  GroupPtr M = make_group(m, std::move(mul), "pullback");
  r.elems = elems;
  r.nm.n.source = M;
  r.nm.n.target = eta.source;
  r.nm.n.image_of.resize(m);
  for (int a = 0; a < m; ++a) r.nm.n.image_of[a] = elems[a].first;
  r.nm.action.assign(G.order, std::vector<int>(m));
  for (int g = 0; g < G.order; ++g)
    for (int a = 0; a < m; ++a) {
      std::pair<int, int> p{G.conj(elems[a].first, g),
                            n_prime.act(elems[a].second, eta(g))};
      r.nm.action[g][a] = idx.at(p);
    }
  require_normal_map(r.nm, "pullback");
  r.pi2.mu.source = M;
  r.pi2.mu.target = n_prime.M();
  r.pi2.mu.image_of.resize(m);
  for (int a = 0; a < m; ++a) r.pi2.mu.image_of[a] = elems[a].second;
  r.pi2.eta = eta;
  return r;
}

GroupHom pullback_factorize(const PullbackResult& pb, const GroupHom& phi, const GroupHom& mu,
                            const GroupHom& psi_prime) {
  const GroupPtr& Gamma = phi.source;
  std::map<std::pair<int, int>, int> idx;
  for (size_t i = 0; i < pb.elems.size(); ++i) idx[pb.elems[i]] = static_cast<int>(i);
  GroupHom psi{Gamma, pb.nm.M(), std::vector<int>(Gamma->order)};
  for (int x = 0; x < Gamma->order; ++x) {
    auto it = idx.find({phi(x), psi_prime(mu(x))});
    if (it == idx.end())
      throw Error(Errc::precondition_failed, "square does not commute into the pullback");
    psi.image_of[x] = it->second;
  }
  if (!is_homomorphism(psi))
    throw Error(Errc::precondition_failed, "induced map is not a homomorphism");
  return psi;
}

Verdict validate_normal_morphism(const NormalMorphism& m, const NormalMap& src,
                                 const NormalMap& dst) {
  Verdict v;
  if (auto w = homomorphism_violation(m.mu)) {
    v.violations.push_back({"mu-homomorphism", w->first, w->second, -1});
    return v;
  }
  if (auto w = homomorphism_violation(m.eta)) {
    v.violations.push_back({"eta-homomorphism", w->first, w->second, -1});
    return v;
  }
  // square: n2(mu(a)) = eta(n1(a))
  for (int a = 0; a < src.M()->order; ++a)
    if (dst.n(m.mu(a)) != m.eta(src.n(a))) {
      v.violations.push_back({"square", a, -1, -1});
      break;
    }
  // equivariance: mu(a^g) = mu(a)^{eta(g)}
  {
    bool bad = false;
    for (int g = 0; g < src.G()->order && !bad; ++g)
      for (int a = 0; a < src.M()->order && !bad; ++a)
        if (m.mu(src.act(a, g)) != dst.act(m.mu(a), m.eta(g))) {
          v.violations.push_back({"morphism-equivariance", a, -1, g});
          bad = true;
        }
  }
  return v;
}

}  // namespace gnorm
