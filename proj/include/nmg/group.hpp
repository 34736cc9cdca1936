#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nmg/util.hpp"

namespace nmg {

// A finite group given by an element list and a Cayley table of indices.
// Index 0 is always the identity. All structure queries derive from the
// table; element ordering is canonical for a given constructor spec.
struct FiniteGroup {
  std::string name;                       // display string, usually the spec
  std::vector<std::string> elem_names;    // per-element literal
  std::vector<int> table;                 // row-major |G| x |G|
  std::vector<int> inverse;               // derived on construction
  bool product_literals = false;          // element literals are tuples

  int order() const { return static_cast<int>(elem_names.size()); }
  int op(int a, int b) const { return table[static_cast<size_t>(a) * elem_names.size() + b]; }
  int inv(int a) const { return inverse[a]; }
  int element_order(int a) const;
  bool is_abelian() const;
  int exponent() const;  // lcm of element orders
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

struct Subgroup {
  GroupPtr parent;
  std::vector<int> members;  // sorted, always contains 0

  int order() const { return static_cast<int>(members.size()); }
  bool contains(int g) const;
};

struct GroupHom {
  GroupPtr domain;
  GroupPtr codomain;
  std::vector<int> image;  // per domain element

  int operator()(int x) const { return image[x]; }
};

// Character of a subgroup K: a homomorphism K -> roots of unity, stored as
// integer exponents modulo m so that character identities stay exact.
// value(k) = e^{2*pi*i*exponent(k)/m}.
struct Character {
  Subgroup subgroup;
  int modulus = 1;              // m, divides exp(K)
  std::vector<int> exponents;   // aligned with subgroup.members

  cplx value_at_local(int pos) const { return root_of_unity(exponents[pos], modulus); }
  cplx value(int g) const;            // g a parent-group index, must lie in K
  int exponent_of(int g) const;       // integer exponent of g in Z/m
  bool is_trivial() const;
  int order() const;                  // order of the character itself
  Subgroup kernel() const;
};

// Marker for the additive group of integers; elements are int64.
struct IntegerGroup {};

struct QuotientGroup {
  GroupPtr group;               // the coset group, identity coset first
  GroupPtr parent;              // ambient group G
  std::vector<int> rep;         // quotient index -> minimal coset representative (G index)
  std::vector<int> coset_of;    // G index -> quotient index, -1 off H
  GroupHom projection;          // materialized H -> quotient
  GroupPtr h_group;             // materialized H
  std::vector<int> h_embed;     // H-local index -> G index
};

bool same_group(const FiniteGroup& a, const FiniteGroup& b);
bool same_group(const GroupPtr& a, const GroupPtr& b);

// ---- construction -------------------------------------------------------

// Parse result for a group expression: either a finite group or Z.
struct ParsedGroup {
  GroupPtr finite;  // null when integer
  bool is_integer = false;
};

// Grammar: C<n> (n>=1), D<n> (n>=2, order 2n), Q8, S<n> (2<=n<=5), Z;
// products joined by `x`, left-associative, e.g. C2xC2xC3.
ParsedGroup parse_group_expr(const std::string& spec, int size_cap = kDefaultGroupCap);

// Same, but rejects Z.
GroupPtr make_group(const std::string& spec, int size_cap = kDefaultGroupCap);

GroupPtr make_cyclic(int n);
GroupPtr direct_product(const std::vector<GroupPtr>& factors, const std::string& name);

// Validates table axioms (identity, inverses, associativity) and fills the
// inverse table; throws Error(inconsistent_structure) on a bad table.
GroupPtr finish_group(FiniteGroup g);

// Element literal parsing/printing per the published grammar: decimal index,
// or (i,j,...) for product groups.
int parse_element_literal(const FiniteGroup& g, const std::string& lit);

// ---- structure queries ---------------------------------------------------

std::vector<int> closure(const FiniteGroup& g, std::vector<int> seed);

Subgroup subgroup_from_members(GroupPtr g, std::vector<int> members);  // validates
Subgroup whole_group(GroupPtr g);
Subgroup trivial_subgroup(GroupPtr g);
Subgroup generated_subgroup(GroupPtr g, const std::vector<int>& gens);

// All subgroups, ordered by (size, lexicographic member set).
std::vector<Subgroup> subgroups(const GroupPtr& g, int size_cap = kDefaultGroupCap);

bool is_normal(const Subgroup& h, const Subgroup& ambient);

// Coset group of K in H (K normal in H), with canonical minimal-index coset
// representatives and the projection homomorphism.
QuotientGroup quotient(const Subgroup& h, const Subgroup& k);

Subgroup center(const Subgroup& h);
Subgroup center(const GroupPtr& g);

// Greedy generating set: smallest-index elements extending the closure.
std::vector<int> generating_set(const FiniteGroup& g);

// Materializes a subgroup as a standalone group (sorted member order).
// Returns the parent pointer unchanged when H is the whole group.
struct MaterializedSubgroup {
  GroupPtr group;
  std::vector<int> embed;     // local index -> parent index
  std::vector<int> to_local;  // parent index -> local index, -1 off H
};
MaterializedSubgroup materialize(const Subgroup& h);

// All homomorphisms F -> G, enumerated by generator images in deterministic
// (lexicographic) order; duplicate-free.
std::vector<GroupHom> group_homomorphisms(const GroupPtr& f, const GroupPtr& g,
                                          int size_cap = kDefaultGroupCap);

bool is_group_hom(const GroupHom& h);

// All characters of K (i.e. of its abelianization), deterministic order,
// trivial character first; count = |K/[K,K]|.
std::vector<Character> characters(const Subgroup& k);

Character trivial_character(const Subgroup& k);

// Commutator subgroup [H,H].
Subgroup commutator_subgroup(const Subgroup& h);

}  // namespace nmg
