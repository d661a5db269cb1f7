#include "gnorm/fp.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

/*
 * Coset enumeration, HLT style: for each live coset every relator is scanned
 * and the first blank entry filled with a fresh coset; coincidences are merged
 * immediately through a union-find with queue replay.  No lookahead.  New
 * cosets are defined in scan order and relators processed in input order, so
 * the resulting table is reproducible.
 */

namespace gnorm {

Word reduce_word(Word w) {
  Word out;
  for (int s : w) {
    if (s == 0) throw Error(Errc::invalid_argument, "zero letter in word");
    if (!out.empty() && out.back() == -s)
      out.pop_back();
    else
      out.push_back(s);
  }
  return out;
}

Word invert_word(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& s : out) s = -s;
  return out;
}

Presentation make_presentation(int n_generators, std::vector<Word> relators, std::string label) {
  if (n_generators < 0) throw Error(Errc::invalid_argument, "negative generator count");
  Presentation P;
  P.n_generators = n_generators;
  P.label = std::move(label);
  for (Word& w : relators) {
    Word r = reduce_word(std::move(w));
    for (int s : r)
      if (std::abs(s) > n_generators)
        throw Error(Errc::invalid_argument, "relator uses an undeclared generator");
    if (!r.empty()) P.relators.push_back(std::move(r));
  }
  return P;
}

namespace {

constexpr int kUndef = -1;

struct Enumerator {
  int ncols;
  std::vector<std::vector<int>> table;  // table[coset][col]
  std::vector<int> parent;              // union-find, merge keeps the smaller index
  std::queue<int> dead_queue;
  int live = 0;
  int max_cosets;

  explicit Enumerator(int ngens, int maxc) : ncols(2 * ngens), max_cosets(maxc) {
    new_coset();
  }

  static int col_of(int signed_gen) {
    return signed_gen > 0 ? 2 * (signed_gen - 1) : 2 * (-signed_gen - 1) + 1;
  }
  static int inv_col(int col) { return col ^ 1; }

  int new_coset() {
    if (live + 1 > max_cosets)
      throw Error(Errc::enumeration_overflow,
                  "live cosets exceeded max_cosets=" + std::to_string(max_cosets));
    table.emplace_back(ncols, kUndef);
    parent.push_back(static_cast<int>(parent.size()));
    ++live;
    return static_cast<int>(table.size()) - 1;
  }

  int rep(int x) {
    int r = x;
    while (parent[r] != r) r = parent[r];
    while (parent[x] != r) {
      int nx = parent[x];
      parent[x] = r;
      x = nx;
    }
    return r;
  }

  bool alive(int x) { return rep(x) == x; }

  void merge(int a, int b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    --live;
    dead_queue.push(b);
  }

  void coincidence(int a, int b) {
    merge(a, b);
    while (!dead_queue.empty()) {
      int dead = dead_queue.front();
      dead_queue.pop();
      for (int col = 0; col < ncols; ++col) {
        int target = table[dead][col];
        if (target == kUndef) continue;
        // drop the back reference, then replay the edge at the representatives
        table[target][inv_col(col)] = kUndef;
        int mu = rep(dead);
        int nu = rep(target);
        if (table[mu][col] != kUndef) {
          merge(nu, rep(table[mu][col]));
        } else if (table[nu][inv_col(col)] != kUndef) {
          merge(mu, rep(table[nu][inv_col(col)]));
        } else {
          table[mu][col] = nu;
          table[nu][inv_col(col)] = mu;
        }
      }
    }
  }

  void define(int alpha, int col) {
    int beta = new_coset();
    table[alpha][col] = beta;
    table[beta][inv_col(col)] = alpha;
  }

  // Scan the word at coset alpha, defining cosets for every gap.
  void scan_and_fill(int alpha, const Word& w) {
    int f = alpha, i = 0;
    int b = alpha, j = static_cast<int>(w.size()) - 1;
    for (;;) {
      while (i <= j && table[f][col_of(w[i])] != kUndef) f = table[f][col_of(w[i++])];
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && table[b][inv_col(col_of(w[j]))] != kUndef)
        b = table[b][inv_col(col_of(w[j--]))];
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (j == i) {
        table[f][col_of(w[i])] = b;
        table[b][inv_col(col_of(w[i]))] = f;
        return;
      }
      define(f, col_of(w[i]));
    }
  }
};

}  // namespace

CosetTable coset_enumerate(const Presentation& P, const std::vector<Word>& subgroup_words,
                           int max_cosets) {
  if (max_cosets < 1) throw Error(Errc::invalid_argument, "max_cosets must be >= 1");
  Enumerator e(P.n_generators, max_cosets);
  for (const Word& w : subgroup_words) e.scan_and_fill(0, reduce_word(w));
  for (int alpha = 0; alpha < static_cast<int>(e.table.size()); ++alpha) {
    if (!e.alive(alpha)) continue;
    for (const Word& r : P.relators) {
      e.scan_and_fill(alpha, r);
      if (!e.alive(alpha)) break;
    }
    if (!e.alive(alpha)) continue;
    for (int col = 0; col < e.ncols; ++col)
      if (e.table[alpha][col] == kUndef) e.define(alpha, col);
  }

  // compact live cosets, resolving any stale references through the union-find
  std::vector<int> newid(e.table.size(), -1);
  int m = 0;
  for (int x = 0; x < static_cast<int>(e.table.size()); ++x)
    if (e.alive(x)) newid[x] = m++;
  CosetTable ct;
  ct.n_cosets = m;
  ct.n_generators = P.n_generators;
  ct.entries.assign(static_cast<size_t>(m) * e.ncols, kUndef);
  for (int x = 0; x < static_cast<int>(e.table.size()); ++x) {
    if (!e.alive(x)) continue;
    for (int col = 0; col < e.ncols; ++col) {
      int t = e.table[x][col];
      if (t == kUndef) throw Error(Errc::invalid_argument, "incomplete coset table (internal bug)");
      ct.entries[static_cast<size_t>(newid[x]) * e.ncols + col] = newid[e.rep(t)];
    }
  }
  // post-check: every relator closes from every coset
  for (int x = 0; x < m; ++x)
    for (const Word& r : P.relators) {
      int c = x;
      for (int s : r) c = ct.apply(c, s);
      if (c != x) throw Error(Errc::invalid_argument, "relator does not close (internal bug)");
    }
  return ct;
}

Realization realize(const Presentation& P, int max_cosets) {
  CosetTable ct = coset_enumerate(P, {}, max_cosets);
  const int n = ct.n_cosets;
  if (n > 4096)
    throw Error(Errc::budget_exceeded,
                "realized group of order " + std::to_string(n) + " is too large for a Cayley table");
  // BFS spanning words over the coset graph give each coset a defining path;
  // multiplication follows the right-hand coset's path from the left-hand one.
  std::vector<std::vector<int>> path(n);  // sequence of columns
  std::vector<char> seen(n, 0);
  std::queue<int> q;
  seen[0] = 1;
  q.push(0);
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (int col = 0; col < 2 * ct.n_generators; ++col) {
      int y = ct.at(x, col);
      if (!seen[y]) {
        seen[y] = 1;
        path[y] = path[x];
        path[y].push_back(col);
        q.push(y);
      }
    }
  }
  std::vector<int> mul(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int c = a;
      for (int col : path[b]) c = ct.at(c, col);
      mul[static_cast<size_t>(a) * n + b] = c;
    }
  std::vector<int> gen_images(P.n_generators);
  for (int g = 0; g < P.n_generators; ++g) gen_images[g] = ct.at(0, 2 * g);
  std::vector<int> gens = gen_images;
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  gens.erase(std::remove(gens.begin(), gens.end(), 0), gens.end());
  Realization r;
  r.group = make_group(n, std::move(mul), P.label.empty() ? "fp-group" : P.label, gens);
  r.generator_images = std::move(gen_images);
  return r;
}

int word_value(const FiniteGroup& G, const std::vector<int>& generator_images, const Word& w) {
  int v = 0;
  for (int s : w) {
    int idx = std::abs(s) - 1;
    if (idx < 0 || idx >= static_cast<int>(generator_images.size()))
      throw Error(Errc::invalid_argument, "word letter out of range");
    int e = generator_images[idx];
    v = G.op(v, s > 0 ? e : G.invert(e));
  }
  return v;
}

}  // namespace gnorm
