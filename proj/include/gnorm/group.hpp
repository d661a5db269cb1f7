#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gnorm {

enum class Errc {
  budget_exceeded,
  enumeration_overflow,
  precondition_failed,
  invalid_argument,
};

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

/// Resource limits for the search-heavy operations.  Exceeding a budget is a
/// typed error (Errc::budget_exceeded), never a silent truncation.
struct Budgets {
  int max_group_order = 20000;    // cap for generated permutation groups
  int max_aut_group_order = 64;   // |G| cap for automorphism_group
  int max_automorphisms = 20000;  // cap on |Aut(G)| materialized
  int max_cosets = 200000;        // coset enumeration cap
};

struct FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A permutation of {0,...,n-1} stored as its image vector.
using Perm = std::vector<int>;

Perm perm_identity(int n);
Perm perm_compose(const Perm& a, const Perm& b);  // apply a, then b
Perm perm_inverse(const Perm& a);

/// Concrete finite group: elements are indices 0..order-1, index 0 is the
/// identity, multiplication is a full table.  Immutable after construction.
struct FiniteGroup {
  int order = 1;
  std::vector<int> mul;         // row-major, mul[a*order + b]
  std::vector<int> inv;         // per-element inverse
  std::vector<int> generators;  // may be empty (whole set generates)
  std::string label;
  std::vector<Perm> perm_witness;  // per-element permutation, when built from one

  int op(int a, int b) const { return mul[static_cast<size_t>(a) * order + b]; }
  int invert(int a) const { return inv[a]; }
  int conj(int a, int g) const { return op(op(invert(g), a), g); }  // a^g = g^-1 a g
  int comm(int a, int b) const { return op(op(invert(a), invert(b)), op(a, b)); }
};

/// Builds a group from a multiplication table and checks the group axioms
/// (identity at 0, inverses, associativity; full check up to order 256,
/// seeded random triples above that).
GroupPtr make_group(int order, std::vector<int> mul, std::string label,
                    std::vector<int> generators = {}, std::vector<Perm> perm_witness = {});

GroupPtr trivial_group();
GroupPtr direct_product(const GroupPtr& A, const GroupPtr& B, const std::string& label = "");

struct Subgroup {
  GroupPtr parent;
  std::vector<int> members;  // sorted element indices, always containing 0

  bool contains(int x) const;
  int order() const { return static_cast<int>(members.size()); }
  bool operator==(const Subgroup& o) const { return members == o.members; }
};

/// Total element-wise homomorphism between two concrete groups.
struct GroupHom {
  GroupPtr source;
  GroupPtr target;
  std::vector<int> image_of;

  int operator()(int x) const { return image_of[x]; }
};

/// Same concrete group: pointer identity or an identical multiplication table.
bool same_group(const GroupPtr& a, const GroupPtr& b);

bool is_homomorphism(const GroupHom& f);
/// First pair (x, y) with f(xy) != f(x)f(y), if any.
std::optional<std::pair<int, int>> homomorphism_violation(const GroupHom& f);

GroupHom identity_hom(const GroupPtr& G);
GroupHom trivial_hom(const GroupPtr& G, const GroupPtr& H);
GroupHom compose(const GroupHom& f, const GroupHom& g);  // x -> g(f(x))

/// Extends generator images to the whole source group (source must be
/// generated by `gens`); throws Errc::invalid_argument if the assignment is
/// not a homomorphism.
GroupHom hom_from_gen_images(const GroupPtr& source, const GroupPtr& target,
                             const std::vector<int>& gens, const std::vector<int>& images);

Subgroup hom_image(const GroupHom& f);
Subgroup hom_kernel(const GroupHom& f);
bool is_injective(const GroupHom& f);
bool is_surjective(const GroupHom& f);
bool is_bijective(const GroupHom& f);
GroupHom inverse_hom(const GroupHom& f);  // f must be bijective

/// Generates the group closure of permutations on {0..degree-1} and converts
/// it to a Cayley table; element 0 is the identity, elements are numbered in
/// BFS order from the identity.  Errors with budget_exceeded when the order
/// grows past budgets.max_group_order.
GroupPtr group_from_permutations(int degree, const std::vector<Perm>& gens,
                                 const Budgets& budgets = {}, const std::string& label = "");

Subgroup subgroup_closure(const GroupPtr& G, std::vector<int> seed);
Subgroup full_subgroup(const GroupPtr& G);
Subgroup trivial_subgroup(const GroupPtr& G);
bool is_subgroup(const Subgroup& S);
bool is_normal_subgroup(const Subgroup& S);
bool is_central_subgroup(const Subgroup& S);

struct SubgroupQueries {
  Subgroup normal_closure;
  Subgroup center_of_G;
  Subgroup centralizer;
  Subgroup normalizer;
};
SubgroupQueries subgroup_queries(const GroupPtr& G, const Subgroup& S);

Subgroup center(const GroupPtr& G);
Subgroup centralizer_of(const GroupPtr& G, const std::vector<int>& elems);
Subgroup derived_subgroup(const GroupPtr& G);
Subgroup normal_closure_of(const GroupPtr& G, const std::vector<int>& elems);
Subgroup commutator_subgroup(const GroupPtr& G, const std::vector<int>& A,
                             const std::vector<int>& B);
bool is_abelian(const FiniteGroup& G);

struct SubgroupEmbedding {
  GroupPtr group;
  GroupHom inclusion;  // group -> parent
};

/// Reindexes a subgroup as a concrete group of its own.
SubgroupEmbedding subgroup_as_group(const Subgroup& S, const std::string& label = "");

/// Every subgroup, found by closing upward from the trivial subgroup.
/// Exponential in the worst case; intended for desk-scale property checks.
std::vector<Subgroup> all_subgroups(const GroupPtr& G);

enum class SeriesKind { descending_central, upper_central };

struct SeriesTrace {
  SeriesKind kind;
  std::vector<Subgroup> terms;  // last two terms equal
  int stabilized_at = 0;        // index of the first stable term
};

SeriesTrace central_series(const GroupPtr& G, SeriesKind kind);
bool is_nilpotent(const GroupPtr& G);
Subgroup hypercenter(const GroupPtr& G);

struct QuotientResult {
  GroupPtr group;
  GroupHom projection;
};

/// Coset group G/N with the canonical surjection; N must be normal.
/// Cosets are ordered by their minimal element, so the identity coset is 0.
QuotientResult quotient(const GroupPtr& G, const Subgroup& N);
QuotientResult abelianization(const GroupPtr& G);

struct AutomorphismGroup {
  GroupPtr group;                // Aut(G) as a concrete group
  std::vector<Perm> tables;      // tables[i] = the i-th automorphism of G
};

/// The full automorphism group, each element witnessed by its permutation of
/// G's elements, found by backtracking over generator images.
AutomorphismGroup automorphism_group(const GroupPtr& G, const Budgets& budgets = {});

struct IsoResult {
  bool isomorphic = false;
  std::optional<GroupHom> witness;
};

/// Isomorphism test: invariant screening (order profile, center, derived
/// series, class sizes) followed by generator-image backtracking.
IsoResult is_isomorphic(const GroupPtr& G, const GroupPtr& H, const Budgets& budgets = {});

/// Checks the instance of: N nilpotent and <T^N> = N imply T = N.
/// Returns whether the implication holds for this (N, T).
bool nilpotent_closure_check(const GroupPtr& N, const Subgroup& T);

int element_order(const FiniteGroup& G, int x);
std::vector<int> element_orders(const FiniteGroup& G);
std::vector<int> prime_divisors(long long n);

/// Cyclic decomposition of a finite abelian group as a sorted list of prime
/// power orders, e.g. Z6 -> [2, 3], Z2 x Z4 -> [2, 4].
std::vector<int> abelian_invariants(const GroupPtr& A);

/// Greedy irredundant generating sequence (uses G->generators when present).
std::vector<int> generating_set(const GroupPtr& G);

/// BFS words over a generating set: word_of[x] spells x as a product of
/// generators (indices into gens).  Used to extend maps defined on generators.
std::vector<std::vector<int>> bfs_words(const FiniteGroup& G, const std::vector<int>& gens);

}  // namespace gnorm
