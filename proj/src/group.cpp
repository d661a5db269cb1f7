#include "gnorm/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <set>

namespace gnorm {

Perm perm_identity(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm perm_compose(const Perm& a, const Perm& b) {
  Perm c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = b[a[i]];
  return c;
}

Perm perm_inverse(const Perm& a) {
  Perm c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[a[i]] = static_cast<int>(i);
  return c;
}

namespace {

void check_axioms(const FiniteGroup& G) {
  const int n = G.order;
  if (n <= 0 || static_cast<long long>(G.mul.size()) != 1LL * n * n)
    throw Error(Errc::invalid_argument, "group table has wrong shape");
  for (int x = 0; x < n; ++x) {
    if (G.op(0, x) != x || G.op(x, 0) != x)
      throw Error(Errc::invalid_argument, "element 0 is not an identity");
    if (G.op(x, G.inv[x]) != 0 || G.op(G.inv[x], x) != 0)
      throw Error(Errc::invalid_argument, "inverse table is wrong");
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int v = G.op(x, y);
      if (v < 0 || v >= n) throw Error(Errc::invalid_argument, "table entry out of range");
    }
  if (n <= 256) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (G.op(G.op(a, b), c) != G.op(a, G.op(b, c)))
            throw Error(Errc::invalid_argument, "multiplication is not associative");
  } else {
    std::mt19937 rng(0x5eed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int t = 0; t < 200000; ++t) {
      int a = pick(rng), b = pick(rng), c = pick(rng);
      if (G.op(G.op(a, b), c) != G.op(a, G.op(b, c)))
        throw Error(Errc::invalid_argument, "multiplication is not associative");
    }
  }
}

}  // namespace

GroupPtr make_group(int order, std::vector<int> mul, std::string label,
                    std::vector<int> generators, std::vector<Perm> perm_witness) {
  auto G = std::make_shared<FiniteGroup>();
  G->order = order;
  G->mul = std::move(mul);
  G->label = std::move(label);
  G->generators = std::move(generators);
  G->perm_witness = std::move(perm_witness);
  G->inv.assign(order, -1);
  for (int x = 0; x < order; ++x)
    for (int y = 0; y < order; ++y)
      if (G->op(x, y) == 0) {
        G->inv[x] = y;
        break;
      }
  for (int x = 0; x < order; ++x)
    if (G->inv[x] < 0) throw Error(Errc::invalid_argument, "element without inverse");
  check_axioms(*G);
  if (!G->generators.empty()) {
    GroupPtr gp = G;
    Subgroup S = subgroup_closure(gp, G->generators);
    if (S.order() != order)
      throw Error(Errc::invalid_argument, "declared generators do not generate the group");
  }
  return G;
}

GroupPtr trivial_group() {
  static GroupPtr one = make_group(1, {0}, "1");
  return one;
}

GroupPtr direct_product(const GroupPtr& A, const GroupPtr& B, const std::string& label) {
  const int na = A->order, nb = B->order, n = na * nb;
  std::vector<int> mul(static_cast<size_t>(n) * n);
  for (int a1 = 0; a1 < na; ++a1)
    for (int b1 = 0; b1 < nb; ++b1)
      for (int a2 = 0; a2 < na; ++a2)
        for (int b2 = 0; b2 < nb; ++b2) {
          int x = a1 * nb + b1, y = a2 * nb + b2;
          mul[static_cast<size_t>(x) * n + y] = A->op(a1, a2) * nb + B->op(b1, b2);
        }
  std::vector<int> gens;
  for (int g : A->generators.empty() ? generating_set(A) : A->generators) gens.push_back(g * nb);
  for (int g : B->generators.empty() ? generating_set(B) : B->generators) gens.push_back(g);
  std::string lab = label.empty() ? A->label + "x" + B->label : label;
  return make_group(n, std::move(mul), lab, gens);
}

bool Subgroup::contains(int x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

bool same_group(const GroupPtr& a, const GroupPtr& b) {
  if (a.get() == b.get()) return true;
  return a->order == b->order && a->mul == b->mul;
}

bool is_homomorphism(const GroupHom& f) { return !homomorphism_violation(f).has_value(); }

std::optional<std::pair<int, int>> homomorphism_violation(const GroupHom& f) {
  const FiniteGroup& S = *f.source;
  const FiniteGroup& T = *f.target;
  if (static_cast<int>(f.image_of.size()) != S.order) return std::make_pair(0, 0);
  if (f.image_of[0] != 0) return std::make_pair(0, 0);
  for (int x = 0; x < S.order; ++x)
    for (int y = 0; y < S.order; ++y)
      if (f.image_of[S.op(x, y)] != T.op(f.image_of[x], f.image_of[y]))
        return std::make_pair(x, y);
  return std::nullopt;
}

GroupHom identity_hom(const GroupPtr& G) {
  GroupHom f{G, G, {}};
  f.image_of.resize(G->order);
  std::iota(f.image_of.begin(), f.image_of.end(), 0);
  return f;
}

GroupHom trivial_hom(const GroupPtr& G, const GroupPtr& H) {
  return GroupHom{G, H, std::vector<int>(G->order, 0)};
}

GroupHom compose(const GroupHom& f, const GroupHom& g) {
  GroupHom h{f.source, g.target, {}};
  h.image_of.resize(f.source->order);
  for (int x = 0; x < f.source->order; ++x) h.image_of[x] = g.image_of[f.image_of[x]];
  return h;
}

std::vector<std::vector<int>> bfs_words(const FiniteGroup& G, const std::vector<int>& gens) {
  std::vector<std::vector<int>> words(G.order);
  std::vector<char> seen(G.order, 0);
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
        words[y] = words[x];
        words[y].push_back(static_cast<int>(i));
        q.push(y);
      }
    }
  }
  for (int x = 0; x < G.order; ++x)
    if (!seen[x]) throw Error(Errc::invalid_argument, "generators do not generate the group");
  return words;
}

GroupHom hom_from_gen_images(const GroupPtr& source, const GroupPtr& target,
                             const std::vector<int>& gens, const std::vector<int>& images) {
  if (gens.size() != images.size())
    throw Error(Errc::invalid_argument, "generator/image count mismatch");
  auto words = bfs_words(*source, gens);
  GroupHom f{source, target, std::vector<int>(source->order, -1)};
  for (int x = 0; x < source->order; ++x) {
    int v = 0;
    for (int i : words[x]) v = target->op(v, images[i]);
    f.image_of[x] = v;
  }
  if (auto w = homomorphism_violation(f)) {
    throw Error(Errc::invalid_argument,
                "generator images do not define a homomorphism (witness " +
                    std::to_string(w->first) + ", " + std::to_string(w->second) + ")");
  }
  return f;
}

Subgroup hom_image(const GroupHom& f) {
  std::set<int> img(f.image_of.begin(), f.image_of.end());
  return Subgroup{f.target, std::vector<int>(img.begin(), img.end())};
}

Subgroup hom_kernel(const GroupHom& f) {
  std::vector<int> k;
  for (int x = 0; x < f.source->order; ++x)
    if (f.image_of[x] == 0) k.push_back(x);
  return Subgroup{f.source, std::move(k)};
}

bool is_injective(const GroupHom& f) { return hom_kernel(f).order() == 1; }
bool is_surjective(const GroupHom& f) { return hom_image(f).order() == f.target->order; }
bool is_bijective(const GroupHom& f) {
  return f.source->order == f.target->order && is_injective(f);
}

GroupHom inverse_hom(const GroupHom& f) {
  if (!is_bijective(f)) throw Error(Errc::precondition_failed, "hom is not bijective");
  GroupHom g{f.target, f.source, std::vector<int>(f.target->order, -1)};
  for (int x = 0; x < f.source->order; ++x) g.image_of[f.image_of[x]] = x;
  return g;
}

GroupPtr group_from_permutations(int degree, const std::vector<Perm>& gens,
                                 const Budgets& budgets, const std::string& label) {
  if (degree < 0) throw Error(Errc::invalid_argument, "negative degree");
  for (const Perm& g : gens) {
    if (static_cast<int>(g.size()) != degree)
      throw Error(Errc::invalid_argument, "permutation degree mismatch");
    std::vector<char> hit(degree, 0);
    for (int v : g) {
      if (v < 0 || v >= degree || hit[v]) throw Error(Errc::invalid_argument, "not a permutation");
      hit[v] = 1;
    }
  }
  // BFS closure from the identity; element indices follow discovery order.
  std::vector<Perm> elems{perm_identity(degree)};
  std::map<Perm, int> index{{elems[0], 0}};
  std::vector<int> gen_idx;
  std::queue<int> q;
  q.push(0);
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (const Perm& g : gens) {
      Perm y = perm_compose(elems[x], g);
      auto it = index.find(y);
      if (it == index.end()) {
        int id = static_cast<int>(elems.size());
        if (id >= budgets.max_group_order)
          throw Error(Errc::budget_exceeded, "permutation group exceeds order budget");
        elems.push_back(y);
        index.emplace(std::move(y), id);
        q.push(id);
      }
    }
  }
  const int n = static_cast<int>(elems.size());
  std::vector<int> mul(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      mul[static_cast<size_t>(a) * n + b] = index.at(perm_compose(elems[a], elems[b]));
  std::vector<int> gidx;
  for (const Perm& g : gens) gidx.push_back(index.at(g));
  return make_group(n, std::move(mul), label, gidx, std::move(elems));
}

Subgroup subgroup_closure(const GroupPtr& G, std::vector<int> seed) {
  std::set<int> set{0};
  std::queue<int> q;
  q.push(0);
  for (int s : seed)
    if (set.insert(s).second) q.push(s);
  std::vector<int> gens = seed;
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (int g : gens) {
      int y = G->op(x, g);
      if (set.insert(y).second) q.push(y);
      y = G->op(x, G->invert(g));
      if (set.insert(y).second) q.push(y);
    }
  }
  return Subgroup{G, std::vector<int>(set.begin(), set.end())};
}

Subgroup full_subgroup(const GroupPtr& G) {
  std::vector<int> all(G->order);
  std::iota(all.begin(), all.end(), 0);
  return Subgroup{G, std::move(all)};
}

Subgroup trivial_subgroup(const GroupPtr& G) { return Subgroup{G, {0}}; }

bool is_subgroup(const Subgroup& S) {
  if (S.members.empty() || S.members[0] != 0) return false;
  for (int x : S.members) {
    if (!S.contains(S.parent->invert(x))) return false;
    for (int y : S.members)
      if (!S.contains(S.parent->op(x, y))) return false;
  }
  return true;
}

bool is_normal_subgroup(const Subgroup& S) {
  const FiniteGroup& G = *S.parent;
  for (int g = 0; g < G.order; ++g)
    for (int x : S.members)
      if (!S.contains(G.conj(x, g))) return false;
  return true;
}

bool is_central_subgroup(const Subgroup& S) {
  const FiniteGroup& G = *S.parent;
  for (int x : S.members)
    for (int g = 0; g < G.order; ++g)
      if (G.op(x, g) != G.op(g, x)) return false;
  return true;
}

Subgroup center(const GroupPtr& G) {
  std::vector<int> z;
  for (int x = 0; x < G->order; ++x) {
    bool central = true;
    for (int g = 0; g < G->order && central; ++g) central = G->op(x, g) == G->op(g, x);
    if (central) z.push_back(x);
  }
  return Subgroup{G, std::move(z)};
}

Subgroup centralizer_of(const GroupPtr& G, const std::vector<int>& elems) {
  std::vector<int> c;
  for (int x = 0; x < G->order; ++x) {
    bool ok = true;
    for (int s : elems)
      if (G->op(x, s) != G->op(s, x)) {
        ok = false;
        break;
      }
    if (ok) c.push_back(x);
  }
  return Subgroup{G, std::move(c)};
}

Subgroup derived_subgroup(const GroupPtr& G) {
  std::vector<int> comms;
  for (int a = 0; a < G->order; ++a)
    for (int b = 0; b < G->order; ++b) comms.push_back(G->comm(a, b));
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  return subgroup_closure(G, comms);
}

Subgroup normal_closure_of(const GroupPtr& G, const std::vector<int>& elems) {
  std::vector<int> conj;
  for (int s : elems)
    for (int g = 0; g < G->order; ++g) conj.push_back(G->conj(s, g));
  std::sort(conj.begin(), conj.end());
  conj.erase(std::unique(conj.begin(), conj.end()), conj.end());
  return subgroup_closure(G, conj);
}

SubgroupQueries subgroup_queries(const GroupPtr& G, const Subgroup& S) {
  if (!is_subgroup(S)) throw Error(Errc::precondition_failed, "S is not a subgroup");
  SubgroupQueries r{normal_closure_of(G, S.members), center(G), centralizer_of(G, S.members),
                    Subgroup{G, {}}};
  std::vector<int> nrm;
  for (int g = 0; g < G->order; ++g) {
    bool ok = true;
    for (int x : S.members)
      if (!S.contains(G->conj(x, g))) {
        ok = false;
        break;
      }
    if (ok) nrm.push_back(g);
  }
  r.normalizer = Subgroup{G, std::move(nrm)};
  return r;
}

bool is_abelian(const FiniteGroup& G) {
  for (int a = 0; a < G.order; ++a)
    for (int b = a + 1; b < G.order; ++b)
      if (G.op(a, b) != G.op(b, a)) return false;
  return true;
}

std::vector<Subgroup> all_subgroups(const GroupPtr& G) {
  std::set<std::vector<int>> seen;
  std::vector<Subgroup> out;
  std::queue<std::vector<int>> work;
  Subgroup triv = trivial_subgroup(G);
  seen.insert(triv.members);
  out.push_back(triv);
  work.push(triv.members);
  while (!work.empty()) {
    std::vector<int> base = work.front();
    work.pop();
    for (int x = 1; x < G->order; ++x) {
      if (std::binary_search(base.begin(), base.end(), x)) continue;
      std::vector<int> seed = base;
      seed.push_back(x);
      Subgroup S = subgroup_closure(G, seed);
      if (seen.insert(S.members).second) {
        out.push_back(S);
        work.push(S.members);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
  });
  return out;
}

Subgroup commutator_subgroup(const GroupPtr& G, const std::vector<int>& A,
                             const std::vector<int>& B) {
  std::vector<int> comms;
  for (int a : A)
    for (int b : B) comms.push_back(G->comm(a, b));
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  return subgroup_closure(G, comms);
}

SubgroupEmbedding subgroup_as_group(const Subgroup& S, const std::string& label) {
  const GroupPtr& G = S.parent;
  const int m = S.order();
  std::map<int, int> idx;
  for (int i = 0; i < m; ++i) idx[S.members[i]] = i;
  std::vector<int> mul(static_cast<size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      auto it = idx.find(G->op(S.members[a], S.members[b]));
      if (it == idx.end()) throw Error(Errc::precondition_failed, "set is not a subgroup");
      mul[static_cast<size_t>(a) * m + b] = it->second;
    }
  SubgroupEmbedding e;
  e.group = make_group(m, std::move(mul), label.empty() ? "sub(" + G->label + ")" : label);
  e.inclusion = GroupHom{e.group, G, S.members};
  return e;
}

SeriesTrace central_series(const GroupPtr& G, SeriesKind kind) {
  SeriesTrace trace;
  trace.kind = kind;
  if (kind == SeriesKind::descending_central) {
    Subgroup term = full_subgroup(G);
    trace.terms.push_back(term);
    for (;;) {
      std::vector<int> all(G->order);
      std::iota(all.begin(), all.end(), 0);
      Subgroup next = commutator_subgroup(G, all, term.members);
      trace.terms.push_back(next);
      if (next.members == term.members) break;
      term = next;
    }
  } else {
    Subgroup term = trivial_subgroup(G);
    trace.terms.push_back(term);
    for (;;) {
      // Z_{i+1} = { x : [x, g] in Z_i for all g }
      std::vector<int> next;
      for (int x = 0; x < G->order; ++x) {
        bool ok = true;
        for (int g = 0; g < G->order && ok; ++g) ok = term.contains(G->comm(x, g));
        if (ok) next.push_back(x);
      }
      Subgroup nxt{G, std::move(next)};
      trace.terms.push_back(nxt);
      if (nxt.members == term.members) break;
      term = nxt;
    }
  }
  trace.stabilized_at = static_cast<int>(trace.terms.size()) - 2;
  return trace;
}

bool is_nilpotent(const GroupPtr& G) {
  return central_series(G, SeriesKind::descending_central).terms.back().order() == 1;
}

Subgroup hypercenter(const GroupPtr& G) {
  return central_series(G, SeriesKind::upper_central).terms.back();
}

QuotientResult quotient(const GroupPtr& G, const Subgroup& N) {
  if (!is_subgroup(N) || !is_normal_subgroup(N))
    throw Error(Errc::precondition_failed, "N is not a normal subgroup");
  const int n = G->order;
  std::vector<int> coset_of(n, -1);
  std::vector<int> reps;
  for (int x = 0; x < n; ++x) {
    if (coset_of[x] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int h : N.members) coset_of[G->op(x, h)] = id;  // coset xN, keyed by min element
  }
  const int m = static_cast<int>(reps.size());
  std::vector<int> mul(static_cast<size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      mul[static_cast<size_t>(a) * m + b] = coset_of[G->op(reps[a], reps[b])];
  QuotientResult r;
  r.group = make_group(m, std::move(mul), G->label + "/N");
  r.projection = GroupHom{G, r.group, coset_of};
  return r;
}

QuotientResult abelianization(const GroupPtr& G) {
  auto r = quotient(G, derived_subgroup(G));
  const_cast<FiniteGroup&>(*r.group).label = G->label + "_ab";
  return r;
}

int element_order(const FiniteGroup& G, int x) {
  int k = 1, y = x;
  while (y != 0) {
    y = G.op(y, x);
    ++k;
  }
  return k;
}

std::vector<int> element_orders(const FiniteGroup& G) {
  std::vector<int> orders(G.order);
  for (int x = 0; x < G.order; ++x) orders[x] = element_order(G, x);
  return orders;
}

std::vector<int> prime_divisors(long long n) {
  std::vector<int> ps;
  for (long long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(static_cast<int>(p));
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(static_cast<int>(n));
  return ps;
}

std::vector<int> generating_set(const GroupPtr& G) {
  if (!G->generators.empty()) return G->generators;
  std::vector<int> gens;
  Subgroup H = trivial_subgroup(G);
  for (int x = 1; x < G->order && H.order() < G->order; ++x) {
    if (H.contains(x)) continue;
    gens.push_back(x);
    std::vector<int> seed = H.members;
    seed.push_back(x);
    H = subgroup_closure(G, seed);
  }
  return gens;
}

namespace {

// Backtracking over images of an irredundant generating sequence; shared by
// automorphism_group and is_isomorphic.  Invariant fingerprints (element
// order, centralizer size, conjugacy class size) prune the image candidates.
struct HomSearch {
  const FiniteGroup& S;
  const FiniteGroup& T;
  std::vector<int> gens;                   // irredundant generating sequence of S
  std::vector<std::vector<int>> sub_elems; // elements of <g_1..g_i> in discovery order
  std::vector<long long> fingerprint_s, fingerprint_t;

  std::vector<int> img;  // partial map S -> T, -1 = undefined
  bool bijective_only;
  int limit;             // stop after this many found (<=0: unlimited)
  std::vector<std::vector<int>> found;

  HomSearch(const FiniteGroup& s, const FiniteGroup& t, bool bij, int lim)
      : S(s), T(t), bijective_only(bij), limit(lim) {
    gens.clear();
    {
      auto sp = std::make_shared<FiniteGroup>(S);
      GroupPtr guard(sp);
      Subgroup H = trivial_subgroup(guard);
      std::vector<int> chain_members{0};
      sub_elems.push_back(chain_members);
      for (int x = 1; x < S.order && H.order() < S.order; ++x) {
        if (H.contains(x)) continue;
        gens.push_back(x);
        std::vector<int> seed = H.members;
        seed.push_back(x);
        H = subgroup_closure(guard, seed);
        sub_elems.push_back(H.members);
      }
    }
    fingerprint_s = fingerprints(S);
    fingerprint_t = fingerprints(T);
    img.assign(S.order, -1);
    img[0] = 0;
  }

  static std::vector<long long> fingerprints(const FiniteGroup& G) {
    std::vector<long long> fp(G.order);
    std::vector<int> orders = element_orders(G);
    for (int x = 0; x < G.order; ++x) {
      int cent = 0;
      for (int g = 0; g < G.order; ++g)
        if (G.op(x, g) == G.op(g, x)) ++cent;
      fp[x] = static_cast<long long>(orders[x]) * (G.order + 1) + cent;
    }
    return fp;
  }

  // Extends img over <g_1..g_depth>; returns false on contradiction.
  bool close_over(int depth, std::vector<int>& touched) {
    const std::vector<int>& elems = sub_elems[depth];
    // BFS from already-mapped elements using the first `depth` generators.
    std::queue<int> q;
    for (int e : elems)
      if (img[e] >= 0) q.push(e);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int i = 0; i < depth; ++i) {
        int g = gens[i];
        int y = S.op(x, g);
        int v = T.op(img[x], img[g]);
        if (img[y] < 0) {
          img[y] = v;
          touched.push_back(y);
          q.push(y);
        } else if (img[y] != v) {
          return false;
        }
      }
    }
    // Verify the homomorphism property on the closed set.
    for (int x : elems) {
      for (int i = 0; i < depth; ++i) {
        int g = gens[i];
        if (img[S.op(x, g)] != T.op(img[x], img[g])) return false;
      }
      if (bijective_only) continue;
    }
    if (bijective_only) {
      std::set<int> vals;
      for (int x : elems)
        if (!vals.insert(img[x]).second) return false;
    }
    return true;
  }

  void search(int depth) {
    if (limit > 0 && static_cast<int>(found.size()) >= limit) return;
    if (depth == static_cast<int>(gens.size())) {
      found.push_back(img);
      return;
    }
    int g = gens[depth];
    for (int cand = 0; cand < T.order; ++cand) {
      if (bijective_only && fingerprint_s[g] != fingerprint_t[cand]) continue;
      if (!bijective_only) {
        int og = element_order(S, g);
        int oc = element_order(T, cand);
        if (og % oc != 0) continue;
      } else if (element_order(S, g) != element_order(T, cand)) {
        continue;
      }
      std::vector<int> touched;
      img[g] = cand;
      touched.push_back(g);
      if (close_over(depth + 1, touched)) search(depth + 1);
      for (int t : touched) img[t] = -1;
      if (limit > 0 && static_cast<int>(found.size()) >= limit) return;
    }
  }
};

}  // namespace

AutomorphismGroup automorphism_group(const GroupPtr& G, const Budgets& budgets) {
  if (G->order > budgets.max_aut_group_order)
    throw Error(Errc::budget_exceeded, "group exceeds automorphism-search budget");
  HomSearch hs(*G, *G, /*bijective_only=*/true, /*limit=*/budgets.max_automorphisms + 1);
  hs.search(0);
  if (static_cast<int>(hs.found.size()) > budgets.max_automorphisms)
    throw Error(Errc::budget_exceeded, "automorphism group exceeds size budget");
  std::vector<Perm> tables = hs.found;
  std::sort(tables.begin(), tables.end());
  // identity automorphism first
  auto id = perm_identity(G->order);
  auto it = std::find(tables.begin(), tables.end(), id);
  std::iter_swap(tables.begin(), it);
  std::map<Perm, int> index;
  for (size_t i = 0; i < tables.size(); ++i) index[tables[i]] = static_cast<int>(i);
  const int m = static_cast<int>(tables.size());
  std::vector<int> mul(static_cast<size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      // right-action composition: (tau_a tau_b)(x) = tau_b(tau_a(x))
      Perm c = perm_compose(tables[a], tables[b]);
      auto itc = index.find(c);
      if (itc == index.end())
        throw Error(Errc::invalid_argument, "automorphism set not closed (internal bug)");
      mul[static_cast<size_t>(a) * m + b] = itc->second;
    }
  AutomorphismGroup out;
  out.group = make_group(m, std::move(mul), "Aut(" + G->label + ")");
  out.tables = std::move(tables);
  return out;
}

namespace {

std::vector<long long> iso_invariants(const GroupPtr& G) {
  std::vector<long long> inv;
  inv.push_back(G->order);
  std::vector<int> orders = element_orders(*G);
  std::sort(orders.begin(), orders.end());
  for (int o : orders) inv.push_back(o);
  inv.push_back(center(G).order());
  Subgroup d = derived_subgroup(G);
  inv.push_back(d.order());
  inv.push_back(is_abelian(*G) ? 1 : 0);
  return inv;
}

}  // namespace

IsoResult is_isomorphic(const GroupPtr& G, const GroupPtr& H, const Budgets& budgets) {
  if (G->order != H->order) return {false, std::nullopt};
  if (G->order > budgets.max_group_order)
    throw Error(Errc::budget_exceeded, "isomorphism test exceeds order budget");
  if (iso_invariants(G) != iso_invariants(H)) return {false, std::nullopt};
  HomSearch hs(*G, *H, /*bijective_only=*/true, /*limit=*/1);
  hs.search(0);
  if (hs.found.empty()) return {false, std::nullopt};
  GroupHom w{G, H, hs.found[0]};
  return {true, w};
}

bool nilpotent_closure_check(const GroupPtr& N, const Subgroup& T) {
  if (!is_nilpotent(N)) return true;  // implication is vacuous
  Subgroup cl = normal_closure_of(N, T.members);
  if (cl.order() != N->order) return true;  // hypothesis not met
  return T.order() == N->order;
}

std::vector<int> abelian_invariants(const GroupPtr& A) {
  if (!is_abelian(*A)) throw Error(Errc::precondition_failed, "group is not abelian");
  std::vector<int> factors;
  GroupPtr B = A;
  while (B->order > 1) {
    // peel a cyclic direct summand of maximal order
    std::vector<int> orders = element_orders(*B);
    int best = 1, arg = 0;
    for (int x = 0; x < B->order; ++x)
      if (orders[x] > best) {
        best = orders[x];
        arg = x;
      }
    factors.push_back(best);
    B = quotient(B, subgroup_closure(B, {arg})).group;
  }
  std::vector<int> primary;
  for (int f : factors)
    for (int p : prime_divisors(f)) {
      int q = 1;
      while (f % p == 0) {
        f /= p;
        q *= p;
      }
      primary.push_back(q);
    }
  std::sort(primary.begin(), primary.end());
  return primary;
}

}  // namespace gnorm
