#include "gnorm/closure.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <set>

/*
 * The generic construction realizes the defining presentation of the closure
 * by coset enumeration.  One presentation generator s_g is used per
 * (generator s of Gamma, element g of G); the relators are a presentation of
 * Gamma rewritten with a fixed subscript (one copy per g) together with the
 * conjugation relators  t_h^-1 s_g t_h = s_{g phi(t)^h}.  The G-action is the
 * subscript shift s_g -> s_{gh}, extended multiplicatively and asserted to be
 * well defined.  Two fast paths cover the surjective case (cl = Gamma/[Gamma,K])
 * and the abelian case (cl = direct sum of [G : phi(Gamma)] copies of Gamma).
 */

namespace gnorm {

namespace {

// Realized Cayley tables are quadratic in the order; past this point the
// construction reports a typed budget error instead of thrashing.
constexpr int kMaxRealizedOrder = 4096;

// Relators of Gamma on gen_set, from the non-tree edges of a BFS spanning
// tree of the Cayley graph.
std::vector<Word> group_relators(const FiniteGroup& G, const std::vector<int>& gens) {
  std::vector<std::vector<int>> word(G.order);
  std::vector<char> seen(G.order, 0);
  std::vector<std::pair<int, int>> tree_edge;  // (element, generator index)
  std::queue<int> q;
  seen[0] = 1;
  q.push(0);
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (size_t i = 0; i < gens.size(); ++i) {
      int y = G.op(x, gens[i]);
      if (!seen[y]) {
        seen[y] = 1;
        word[y] = word[x];
        word[y].push_back(static_cast<int>(i));
        tree_edge.emplace_back(x, static_cast<int>(i));
        q.push(y);
      }
    }
  }
  for (int x = 0; x < G.order; ++x)
    if (!seen[x])
      throw Error(Errc::precondition_failed, "gen_set does not generate the group");
  std::set<std::pair<int, int>> tree(tree_edge.begin(), tree_edge.end());
  std::vector<Word> rels;
  std::set<Word> dedup;
  for (int x = 0; x < G.order; ++x)
    for (size_t i = 0; i < gens.size(); ++i) {
      if (tree.count({x, static_cast<int>(i)})) continue;
      int y = G.op(x, gens[i]);
      Word r;
      for (int l : word[x]) r.push_back(l + 1);
      r.push_back(static_cast<int>(i) + 1);
      for (auto it = word[y].rbegin(); it != word[y].rend(); ++it) r.push_back(-(*it + 1));
      r = reduce_word(std::move(r));
      if (!r.empty() && dedup.insert(r).second) rels.push_back(std::move(r));
    }
  return rels;
}

std::vector<int> extend_multiplicative(const FiniteGroup& src,
                                       const std::vector<std::pair<int, int>>& gen_images,
                                       const FiniteGroup& target, const char* where) {
  std::vector<int> f(src.order, -1);
  f[0] = 0;
  std::queue<int> q;
  q.push(0);
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (const auto& [e, t] : gen_images) {
      int y = src.op(x, e);
      int v = target.op(f[x], t);
      if (f[y] < 0) {
        f[y] = v;
        q.push(y);
      } else if (f[y] != v) {
        throw Error(Errc::invalid_argument, std::string(where) + ": extension is ill-defined");
      }
    }
  }
  for (int x = 0; x < src.order; ++x)
    if (f[x] < 0)
      throw Error(Errc::invalid_argument, std::string(where) + ": generators do not generate");
  for (int x = 0; x < src.order; ++x)
    for (int y = 0; y < src.order; ++y)
      if (f[src.op(x, y)] != target.op(f[x], f[y]))
        throw Error(Errc::invalid_argument,
                    std::string(where) + ": extension is not a homomorphism");
  return f;
}

void enforce_result_invariants(const ClosureResult& cr) {
  const FiniteGroup& G = *cr.target;
  for (int x = 0; x < cr.gamma->order; ++x)
    if (cr.phi_hat.n(cr.c_phi(x)) != cr.phi(x))
      throw Error(Errc::invalid_argument, "closure: factorization does not commute (internal)");
  require_normal_map(cr.phi_hat, "closure");
  std::vector<int> all_gens;
  for (const Subgroup& S : cr.gamma_hat)
    all_gens.insert(all_gens.end(), S.members.begin(), S.members.end());
  if (subgroup_closure(cr.cl, all_gens).order() != cr.cl->order)
    throw Error(Errc::invalid_argument, "closure: conjugate copies do not generate (internal)");
  Subgroup img = hom_image(cr.phi_hat.n);
  std::vector<int> phi_img;
  for (int x = 0; x < cr.gamma->order; ++x) phi_img.push_back(cr.phi(x));
  if (!(img == normal_closure_of(cr.target, phi_img)))
    throw Error(Errc::invalid_argument, "closure: image is not the normal closure (internal)");
  for (int k : cr.kernel.members)
    for (int x = 0; x < cr.cl->order; ++x)
      if (cr.cl->op(k, x) != cr.cl->op(x, k))
        throw Error(Errc::invalid_argument, "closure: kernel is not central (internal)");
  (void)G;
}

void finish_result(ClosureResult& cr) {
  const int ng = cr.target->order;
  cr.gamma_hat.clear();
  cr.gamma_hat.reserve(ng);
  for (int g = 0; g < ng; ++g) {
    std::vector<int> gens;
    for (const auto& reps : cr.gen_elt) gens.push_back(reps[g]);
    cr.gamma_hat.push_back(subgroup_closure(cr.cl, gens));
  }
  std::vector<int> ker;
  for (int x = 0; x < cr.cl->order; ++x)
    if (cr.phi_hat.n(x) == 0) ker.push_back(x);
  cr.kernel = Subgroup{cr.cl, ker};
  enforce_result_invariants(cr);
}

// The copies with subscripts in one phi(Gamma)-coset are conjugate: for
// g = phi(d) t the relators give s_g = (d_t)^-1 s_t (d_t).  Enumeration
// therefore eliminates the non-transversal generators by substituting that
// expression into every relator (a Tietze transformation, so the presented
// group is unchanged); the subscripted copies of Gamma's relators collapse to
// one per transversal class.  The full generator set is recovered from the
// realized group afterwards, and the unreduced relator set is re-verified.
ClosureResult closure_generic_tc(const GroupHom& phi, int max_cosets) {
  ClosureResult cr;
  cr.gamma = phi.source;
  cr.target = phi.target;
  cr.phi = phi;
  cr.strategy = ClosureStrategy::generic_tc;
  cr.gen_set = generating_set(phi.source);
  const FiniteGroup& Gamma = *phi.source;
  const FiniteGroup& G = *phi.target;
  const int ng = G.order;
  const int m = static_cast<int>(cr.gen_set.size());
  auto words = bfs_words(Gamma, cr.gen_set);

  // transversal of the right cosets phi(Gamma)g, minimal representatives
  std::vector<int> coset_of(ng, -1), transversal;
  for (int g = 0; g < ng; ++g) {
    if (coset_of[g] >= 0) continue;
    int t = static_cast<int>(transversal.size());
    transversal.push_back(g);
    for (int x = 0; x < Gamma.order; ++x) coset_of[G.op(phi(x), g)] = t;
  }
  const int nt = static_cast<int>(transversal.size());
  std::vector<int> preimage(ng, -1);  // minimal phi-preimage, for image elements
  for (int x = 0; x < Gamma.order; ++x)
    if (preimage[phi(x)] < 0) preimage[phi(x)] = x;
  // g = phi(part_of[g]) * transversal[coset_of[g]]
  std::vector<int> part_of(ng);
  for (int g = 0; g < ng; ++g) {
    int x = G.op(g, G.invert(transversal[coset_of[g]]));
    part_of[g] = preimage[x];
    if (part_of[g] < 0)
      throw Error(Errc::invalid_argument, "coset decomposition failed (internal)");
  }

  auto letter = [&](int gen_idx, int t) { return gen_idx * nt + t + 1; };
  // the eliminated generator s_g spelled over the transversal copies:
  // (word of d)^-1 s_{t} (word of d), all at subscript t = t(g)
  auto append_eliminated = [&](Word& w, int gen_idx, int g, bool invert) {
    int t = coset_of[g];
    const std::vector<int>& wd = words[part_of[g]];
    if (!invert) {
      for (auto it = wd.rbegin(); it != wd.rend(); ++it) w.push_back(-letter(*it, t));
      w.push_back(letter(gen_idx, t));
      for (int i : wd) w.push_back(letter(i, t));
    } else {
      for (auto it = wd.rbegin(); it != wd.rend(); ++it) w.push_back(-letter(*it, t));
      w.push_back(-letter(gen_idx, t));
      for (int i : wd) w.push_back(letter(i, t));
    }
  };

  std::vector<Word> gamma_rels = group_relators(Gamma, cr.gen_set);
  std::vector<Word> rels;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int g = 0; g < ng; ++g)
        for (int h = 0; h < ng; ++h) {
          int shifted = G.op(g, G.conj(phi(cr.gen_set[j]), h));
          Word w;
          append_eliminated(w, j, h, true);
          append_eliminated(w, i, g, false);
          append_eliminated(w, j, h, false);
          append_eliminated(w, i, shifted, true);
          rels.push_back(std::move(w));
        }
  for (int t = 0; t < nt; ++t)
    for (const Word& w : gamma_rels) {
      Word r;
      for (int s : w) r.push_back(s > 0 ? letter(s - 1, t) : -letter(-s - 1, t));
      rels.push_back(std::move(r));
    }
  Presentation P =
      make_presentation(m * nt, std::move(rels), "cl[" + Gamma.label + "->" + G.label + "]");
  Realization R = realize(P, max_cosets);
  cr.cl = R.group;

  // recover every subscript copy: s_g = (d_t)^-1 s_t (d_t) for g = phi(d) t
  cr.gen_elt.assign(m, std::vector<int>(ng));
  {
    const FiniteGroup& CL = *R.group;
    std::vector<std::vector<int>> hat_t(Gamma.order, std::vector<int>(nt));
    for (int x = 0; x < Gamma.order; ++x)
      for (int t = 0; t < nt; ++t) {
        int v = 0;
        for (int i : words[x]) v = CL.op(v, R.generator_images[i * nt + t]);
        hat_t[x][t] = v;
      }
    for (int i = 0; i < m; ++i)
      for (int g = 0; g < ng; ++g) {
        int t = coset_of[g];
        int conj = hat_t[part_of[g]][t];
        cr.gen_elt[i][g] = CL.op(CL.op(CL.invert(conj), R.generator_images[i * nt + t]), conj);
      }
  }
  cr.c_phi = GroupHom{phi.source, cr.cl, std::vector<int>(phi.source->order)};
  for (int x = 0; x < phi.source->order; ++x) {
    int v = 0;
    for (int i : words[x]) v = cr.cl->op(v, cr.gen_elt[i][0]);
    cr.c_phi.image_of[x] = v;
  }
  if (!is_homomorphism(cr.c_phi))
    throw Error(Errc::invalid_argument, "closure: c_phi is not a homomorphism (internal)");

  // phi_hat: s_g -> phi(s)^g, extended over cl
  std::vector<std::pair<int, int>> n_images;
  for (size_t i = 0; i < cr.gen_set.size(); ++i)
    for (int g = 0; g < ng; ++g)
      n_images.emplace_back(cr.gen_elt[i][g], G.conj(phi(cr.gen_set[i]), g));
  cr.phi_hat.n.source = cr.cl;
  cr.phi_hat.n.target = phi.target;
  cr.phi_hat.n.image_of = extend_multiplicative(*cr.cl, n_images, G, "phi_hat");

  // the action is the subscript shift s_g -> s_{gh}
  cr.phi_hat.action.assign(ng, {});
  for (int h = 0; h < ng; ++h) {
    std::vector<std::pair<int, int>> shift;
    for (size_t i = 0; i < cr.gen_set.size(); ++i)
      for (int g = 0; g < ng; ++g) shift.emplace_back(cr.gen_elt[i][g], cr.gen_elt[i][G.op(g, h)]);
    cr.phi_hat.action[h] = extend_multiplicative(*cr.cl, shift, *cr.cl, "closure action");
    std::vector<char> hit(cr.cl->order, 0);
    for (int v : cr.phi_hat.action[h]) {
      if (hit[v]) throw Error(Errc::invalid_argument, "closure action not bijective (internal)");
      hit[v] = 1;
    }
  }
  finish_result(cr);
  return cr;
}

ClosureResult closure_surjective(const GroupHom& phi) {
  if (!is_surjective(phi))
    throw Error(Errc::precondition_failed, "surjective strategy requires an onto map");
  ClosureResult cr;
  cr.gamma = phi.source;
  cr.target = phi.target;
  cr.phi = phi;
  cr.strategy = ClosureStrategy::surjective;
  cr.gen_set = generating_set(phi.source);
  Subgroup K = hom_kernel(phi);
  std::vector<int> all(phi.source->order);
  for (int i = 0; i < phi.source->order; ++i) all[i] = i;
  Subgroup GK = commutator_subgroup(phi.source, all, K.members);
  QuotientResult Q = quotient(phi.source, GK);
  cr.cl = Q.group;
  cr.c_phi = Q.projection;
  GroupHom n{Q.group, phi.target, std::vector<int>(Q.group->order, -1)};
  for (int x = 0; x < phi.source->order; ++x) {
    int q = Q.projection(x);
    if (n.image_of[q] >= 0 && n.image_of[q] != phi(x))
      throw Error(Errc::invalid_argument, "induced map ill-defined (internal)");
    n.image_of[q] = phi(x);
  }
  cr.phi_hat = canonical_structure_surjective_central(n);
  cr.gen_elt.assign(cr.gen_set.size(), std::vector<int>(phi.target->order));
  for (size_t i = 0; i < cr.gen_set.size(); ++i)
    for (int g = 0; g < phi.target->order; ++g)
      cr.gen_elt[i][g] = cr.phi_hat.act(cr.c_phi(cr.gen_set[i]), g);
  finish_result(cr);
  return cr;
}

ClosureResult closure_abelian(const GroupHom& phi) {
  const FiniteGroup& Gamma = *phi.source;
  const FiniteGroup& G = *phi.target;
  if (!is_abelian(Gamma) || !is_abelian(G))
    throw Error(Errc::precondition_failed, "abelian strategy requires abelian groups");
  ClosureResult cr;
  cr.gamma = phi.source;
  cr.target = phi.target;
  cr.phi = phi;
  cr.strategy = ClosureStrategy::abelian;
  cr.gen_set = generating_set(phi.source);

  // cosets of phi(Gamma), base coset first
  Subgroup im = hom_image(phi);
  std::vector<int> coset_of(G.order, -1);
  int q = 0;
  for (int g = 0; g < G.order; ++g) {
    if (coset_of[g] >= 0) continue;
    for (int m : im.members) coset_of[G.op(m, g)] = q;
    ++q;
  }
  std::vector<int> coset_rep(q, -1);
  for (int g = G.order - 1; g >= 0; --g) coset_rep[coset_of[g]] = g;

  const long long base = Gamma.order;
  if (base > 1 &&
      q * std::log2(static_cast<double>(base)) > std::log2(static_cast<double>(kMaxRealizedOrder)))
    throw Error(Errc::budget_exceeded, "abelian closure exceeds realizable order");
  long long n = 1;
  for (int i = 0; i < q; ++i) n *= base;

  auto digits = [&](long long v) {
    std::vector<int> d(q);
    for (int i = 0; i < q; ++i) {
      d[i] = static_cast<int>(v % base);
      v /= base;
    }
    return d;
  };
  auto value = [&](const std::vector<int>& d) {
    long long v = 0;
    for (int i = q - 1; i >= 0; --i) v = v * base + d[i];
    return static_cast<int>(v);
  };

  const int N = static_cast<int>(n);
  std::vector<int> mul(static_cast<size_t>(N) * N);
  for (int a = 0; a < N; ++a) {
    std::vector<int> da = digits(a);
    for (int b = 0; b < N; ++b) {
      std::vector<int> db = digits(b);
      std::vector<int> dc(q);
      for (int i = 0; i < q; ++i) dc[i] = Gamma.op(da[i], db[i]);
      mul[static_cast<size_t>(a) * N + b] = value(dc);
    }
  }
  cr.cl = make_group(N, std::move(mul), "cl[" + Gamma.label + "->" + G.label + "]");

  cr.c_phi = GroupHom{phi.source, cr.cl, std::vector<int>(Gamma.order)};
  for (int x = 0; x < Gamma.order; ++x) cr.c_phi.image_of[x] = x;  // digit at the base coset

  cr.phi_hat.n.source = cr.cl;
  cr.phi_hat.n.target = phi.target;
  cr.phi_hat.n.image_of.resize(N);
  for (int v = 0; v < N; ++v) {
    std::vector<int> d = digits(v);
    int acc = 0;
    for (int i = 0; i < q; ++i) acc = G.op(acc, phi(d[i]));
    cr.phi_hat.n.image_of[v] = acc;
  }

  // the action permutes the coordinates by coset translation
  cr.phi_hat.action.assign(G.order, std::vector<int>(N));
  for (int g = 0; g < G.order; ++g) {
    std::vector<int> sigma(q);
    for (int x = 0; x < q; ++x) sigma[x] = coset_of[G.op(coset_rep[x], g)];
    for (int v = 0; v < N; ++v) {
      std::vector<int> d = digits(v), nd(q);
      for (int x = 0; x < q; ++x) nd[sigma[x]] = d[x];
      cr.phi_hat.action[g][v] = value(nd);
    }
  }

  cr.gen_elt.assign(cr.gen_set.size(), std::vector<int>(G.order));
  for (size_t i = 0; i < cr.gen_set.size(); ++i)
    for (int g = 0; g < G.order; ++g)
      cr.gen_elt[i][g] = cr.phi_hat.act(cr.c_phi(cr.gen_set[i]), g);
  finish_result(cr);
  return cr;
}

}  // namespace

const char* to_string(ClosureStrategy s) {
  switch (s) {
    case ClosureStrategy::automatic: return "auto";
    case ClosureStrategy::generic_tc: return "generic-tc";
    case ClosureStrategy::surjective: return "surjective";
    case ClosureStrategy::abelian: return "abelian";
    case ClosureStrategy::normal_inclusion: return "normal-inclusion";
  }
  return "?";
}

Presentation closure_presentation(const GroupHom& phi, const std::vector<int>& gen_set) {
  const FiniteGroup& Gamma = *phi.source;
  const FiniteGroup& G = *phi.target;
  const int ng = G.order;
  const int m = static_cast<int>(gen_set.size());
  std::vector<Word> gamma_rels = group_relators(Gamma, gen_set);
  std::vector<Word> rels;
  auto letter = [&](int gen_idx, int g) { return gen_idx * ng + g + 1; };
  for (int g = 0; g < ng; ++g)
    for (const Word& w : gamma_rels) {
      Word r;
      for (int s : w) {
        int idx = std::abs(s) - 1;
        r.push_back(s > 0 ? letter(idx, g) : -letter(idx, g));
      }
      rels.push_back(std::move(r));
    }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int g = 0; g < ng; ++g)
        for (int h = 0; h < ng; ++h) {
          int shifted = G.op(g, G.conj(phi(gen_set[j]), h));
          rels.push_back({-letter(j, h), letter(i, g), letter(j, h), -letter(i, shifted)});
        }
  return make_presentation(m * ng, std::move(rels),
                           "cl[" + Gamma.label + "->" + G.label + "]");
}

ClosureResult free_normal_closure(const GroupHom& phi, ClosureStrategy strategy, int max_cosets) {
  if (!is_homomorphism(phi))
    throw Error(Errc::invalid_argument, "phi is not a homomorphism");
  if (strategy == ClosureStrategy::automatic) {
    if (is_surjective(phi))
      strategy = ClosureStrategy::surjective;
    else if (is_abelian(*phi.source) && is_abelian(*phi.target))
      strategy = ClosureStrategy::abelian;
    else
      strategy = ClosureStrategy::generic_tc;
  }
  switch (strategy) {
    case ClosureStrategy::generic_tc: return closure_generic_tc(phi, max_cosets);
    case ClosureStrategy::surjective: return closure_surjective(phi);
    case ClosureStrategy::abelian: return closure_abelian(phi);
    case ClosureStrategy::normal_inclusion: return closure_normal_inclusion(phi, max_cosets).cr;
    case ClosureStrategy::automatic: break;
  }
  throw Error(Errc::invalid_argument, "unknown strategy");
}

GroupHom universal_morphism(const ClosureResult& cr, const GroupHom& psi, const NormalMap& n) {
  if (!same_group(psi.source, cr.gamma) || !same_group(psi.target, n.M()) ||
      !same_group(n.G(), cr.target))
    throw Error(Errc::invalid_argument, "factorization has mismatched groups");
  for (int x = 0; x < cr.gamma->order; ++x)
    if (n.n(psi(x)) != cr.phi(x))
      throw Error(Errc::precondition_failed, "factorization does not commute");
  Verdict nv = validate_normal_map(n);
  if (!nv.ok())
    throw Error(Errc::precondition_failed, "factorization map is not a normal map");
  std::vector<std::pair<int, int>> images;
  for (size_t i = 0; i < cr.gen_set.size(); ++i)
    for (int g = 0; g < cr.target->order; ++g)
      images.emplace_back(cr.gen_elt[i][g], n.act(psi(cr.gen_set[i]), g));
  GroupHom out{cr.cl, n.M(),
               extend_multiplicative(*cr.cl, images, *n.M(), "universal morphism")};
  for (int x = 0; x < cr.gamma->order; ++x)
    if (out(cr.c_phi(x)) != psi(x))
      throw Error(Errc::invalid_argument, "universal morphism: triangle broken (internal)");
  for (int x = 0; x < cr.cl->order; ++x)
    if (n.n(out(x)) != cr.phi_hat.n(x))
      throw Error(Errc::invalid_argument, "universal morphism: projection broken (internal)");
  for (int g = 0; g < cr.target->order; ++g)
    for (int x = 0; x < cr.cl->order; ++x)
      if (out(cr.phi_hat.act(x, g)) != n.act(out(x), g))
        throw Error(Errc::invalid_argument, "universal morphism: not equivariant (internal)");
  return out;
}

SchurResult relative_schur_multiplier(const GroupHom& phi, int max_cosets) {
  std::vector<int> img;
  for (int x = 0; x < phi.source->order; ++x) img.push_back(phi(x));
  if (normal_closure_of(phi.target, img).order() != phi.target->order)
    throw Error(Errc::precondition_failed,
                "image does not normally generate the target");
  ClosureResult cr = free_normal_closure(phi, ClosureStrategy::automatic, max_cosets);
  SchurResult r;
  r.witness = cr.kernel;
  r.kernel_group = subgroup_as_group(cr.kernel, "H2").group;
  r.abelian_invariants = abelian_invariants(r.kernel_group);
  return r;
}

NormalInclusionResult closure_normal_inclusion(const GroupHom& phi, int max_cosets) {
  if (!is_injective(phi))
    throw Error(Errc::precondition_failed, "map is not injective");
  Subgroup img = hom_image(phi);
  if (!is_normal_subgroup(img))
    throw Error(Errc::precondition_failed, "image is not normal");
  NormalInclusionResult r{closure_generic_tc(phi, max_cosets), {}, {}, false};
  const ClosureResult& cr = r.cr;
  std::vector<int> phi_inv(phi.target->order, -1);
  for (int x = 0; x < phi.source->order; ++x) phi_inv[phi(x)] = x;
  r.retract = GroupHom{cr.cl, cr.cl, std::vector<int>(cr.cl->order)};
  for (int x = 0; x < cr.cl->order; ++x) {
    int g = cr.phi_hat.n(x);
    if (phi_inv[g] < 0)
      throw Error(Errc::invalid_argument, "image of phi_hat leaves phi(Gamma) (internal)");
    r.retract.image_of[x] = cr.c_phi(phi_inv[g]);
  }
  if (!is_homomorphism(r.retract))
    throw Error(Errc::invalid_argument, "retraction is not a homomorphism (internal)");
  r.complement = cr.kernel;
  // internal direct product c_phi(Gamma) x ker(phi_hat)
  Subgroup copy = hom_image(cr.c_phi);
  std::vector<int> inter;
  std::set_intersection(copy.members.begin(), copy.members.end(), cr.kernel.members.begin(),
                        cr.kernel.members.end(), std::back_inserter(inter));
  if (static_cast<int>(inter.size()) != 1 ||
      copy.order() * cr.kernel.order() != cr.cl->order)
    throw Error(Errc::invalid_argument, "direct decomposition failed (internal)");
  r.is_trivial_closure = cr.cl->order == phi.source->order;
  bool invariant = true;
  for (int g = 0; g < cr.target->order && invariant; ++g)
    for (int s : copy.members)
      if (!copy.contains(cr.phi_hat.act(s, g))) {
        invariant = false;
        break;
      }
  if (invariant != r.is_trivial_closure)
    throw Error(Errc::invalid_argument,
                "invariance/triviality equivalence failed (internal)");
  return r;
}

NormalMorphism induced_closure_morphism(const GroupHom& f, const GroupHom& phi, int max_cosets) {
  if (!same_group(f.target, phi.source))
    throw Error(Errc::invalid_argument, "maps do not compose");
  GroupHom composite = compose(f, phi);
  ClosureResult src = free_normal_closure(composite, ClosureStrategy::automatic, max_cosets);
  ClosureResult dst = free_normal_closure(phi, ClosureStrategy::automatic, max_cosets);
  std::vector<std::pair<int, int>> images;
  for (size_t i = 0; i < src.gen_set.size(); ++i)
    for (int g = 0; g < src.target->order; ++g)
      images.emplace_back(src.gen_elt[i][g], dst.hat(f(src.gen_set[i]), g));
  NormalMorphism nm;
  nm.mu = GroupHom{src.cl, dst.cl,
                   extend_multiplicative(*src.cl, images, *dst.cl, "induced closure morphism")};
  nm.eta = identity_hom(phi.target);
  Verdict v = validate_normal_morphism(nm, src.phi_hat, dst.phi_hat);
  if (!v.ok())
    throw Error(Errc::invalid_argument, "induced closure morphism invalid (internal)");
  return nm;
}

CheckReport closure_structure_checks(const ClosureResult& cr) {
  CheckReport rep;
  const FiniteGroup& G = *cr.target;
  const FiniteGroup& CL = *cr.cl;
  const int ngamma = cr.gamma->order;

  bool factor = true;
  for (int x = 0; x < ngamma; ++x)
    if (cr.phi_hat.n(cr.c_phi(x)) != cr.phi(x)) factor = false;
  rep.add("factorization", factor);

  rep.add("normal-map-axioms", validate_normal_map(cr.phi_hat).ok());

  {
    std::vector<int> all_gens;
    for (const Subgroup& S : cr.gamma_hat)
      all_gens.insert(all_gens.end(), S.members.begin(), S.members.end());
    rep.add("generated-by-conjugate-copies",
            subgroup_closure(cr.cl, all_gens).order() == CL.order);
  }
  {
    std::vector<int> img;
    for (int x = 0; x < ngamma; ++x) img.push_back(cr.phi(x));
    rep.add("image-is-normal-closure",
            hom_image(cr.phi_hat.n) == normal_closure_of(cr.target, img));
  }
  rep.add("kernel-central", is_central_subgroup(cr.kernel));

  // hat(delta, g)^{hat(eps, h)} lands in the subscript g phi(eps)^h copy,
  // and left translation by phi(delta) fixes each copy
  {
    bool conj_ok = true, trans_ok = true;
    for (int d = 0; d < ngamma && (conj_ok || trans_ok); ++d) {
      for (int g = 0; g < G.order; ++g) {
        for (int h = 0; h < G.order && conj_ok; ++h) {
          int e = cr.hat(d, h);
          int target_idx = G.op(g, G.conj(cr.phi(d), h));
          std::vector<int> conj;
          for (int x : cr.gamma_hat[g].members) conj.push_back(CL.conj(x, e));
          std::sort(conj.begin(), conj.end());
          if (conj != cr.gamma_hat[target_idx].members) conj_ok = false;
        }
        if (!(cr.gamma_hat[g] == cr.gamma_hat[G.op(cr.phi(d), g)])) trans_ok = false;
      }
    }
    rep.add("copy-conjugation-relation", conj_ok);
    rep.add("copy-translation-relation", trans_ok);
  }

  // ordered product over the copies covers cl
  {
    std::set<int> prod{0};
    for (int g = 0; g < G.order; ++g) {
      std::set<int> next;
      for (int x : prod)
        for (int y : cr.gamma_hat[g].members) next.insert(CL.op(x, y));
      prod = std::move(next);
    }
    rep.add("ordered-product-factorization", static_cast<int>(prod.size()) == CL.order);
  }

  rep.add("order-bound",
          std::log2(static_cast<double>(CL.order)) <=
              G.order * std::log2(std::max(1.0, static_cast<double>(ngamma))) + 1e-9);

  // the abelianized triangle stays injective
  {
    QuotientResult gab = abelianization(cr.gamma);
    QuotientResult clab = abelianization(cr.cl);
    std::vector<int> induced(gab.group->order, -1);
    bool well = true, inj = true;
    for (int x = 0; x < ngamma; ++x) {
      int a = gab.projection(x);
      int v = clab.projection(cr.c_phi(x));
      if (induced[a] >= 0 && induced[a] != v) well = false;
      induced[a] = v;
    }
    std::set<int> vals;
    for (int a = 0; a < gab.group->order; ++a)
      if (!vals.insert(induced[a]).second) inj = false;
    rep.add("abelianization-injective", well && inj);
  }

  // prime closure: primes of |cl| among those of |Gamma| and the normal closure
  {
    std::vector<int> img;
    for (int x = 0; x < ngamma; ++x) img.push_back(cr.phi(x));
    Subgroup nc = normal_closure_of(cr.target, img);
    std::set<int> allowed;
    for (int p : prime_divisors(ngamma)) allowed.insert(p);
    for (int p : prime_divisors(nc.order())) allowed.insert(p);
    bool ok = true;
    for (int p : prime_divisors(CL.order))
      if (!allowed.count(p)) ok = false;
    rep.add("prime-closure", ok);
  }

  // subscript shift and generator images of phi_hat
  {
    bool shift_ok = true, image_ok = true;
    for (int d = 0; d < ngamma; ++d)
      for (int g = 0; g < G.order; ++g) {
        if (cr.phi_hat.n(cr.hat(d, g)) != G.conj(cr.phi(d), g)) image_ok = false;
        for (int h = 0; h < G.order; ++h)
          if (cr.phi_hat.act(cr.hat(d, g), h) != cr.hat(d, G.op(g, h))) shift_ok = false;
      }
    rep.add("action-is-subscript-shift", shift_ok);
    rep.add("phi-hat-on-copies", image_ok);
  }

  // re-verify the defining relators in cl and under phi_hat
  {
    long long cost = static_cast<long long>(cr.gen_set.size()) * cr.gen_set.size() * G.order *
                     G.order;
    if (cost <= 2000000) {
      Presentation P = closure_presentation(cr.phi, cr.gen_set);
      std::vector<int> elt(P.n_generators), gimg(P.n_generators);
      for (size_t i = 0; i < cr.gen_set.size(); ++i)
        for (int g = 0; g < G.order; ++g) {
          elt[i * G.order + g] = cr.gen_elt[i][g];
          gimg[i * G.order + g] = G.conj(cr.phi(cr.gen_set[i]), g);
        }
      bool in_cl = true, in_g = true;
      for (const Word& r : P.relators) {
        if (word_value(CL, elt, r) != 0) in_cl = false;
        if (word_value(G, gimg, r) != 0) in_g = false;
      }
      rep.add("relators-hold-in-cl", in_cl);
      rep.add("phi-hat-respects-relators", in_g);
    }
  }
  return rep;
}

}  // namespace gnorm
