#pragma once
// Finite groups as multiplication tables over element indices 0..n-1, with
// index 0 always the identity. Homomorphisms are index maps, subgroups are
// sorted index sets, actions are per-element automorphism tables. All types
// are immutable after construction and cheap to copy (shared data).

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "moorekit/common.hpp"

namespace moorekit {

using Elt = int;

class FiniteGroup {
 public:
  FiniteGroup() = default;  // empty handle; any use before assignment is a bug

  // Validated construction from a square table. Checks that row/column 0
  // realize the identity, that every element has a two-sided inverse, and
  // associativity on all triples. Throws Error("NotAGroup") with a witness.
  static FiniteGroup from_table(const std::vector<std::vector<Elt>>& table,
                                std::string label = "");

  // Trusted path for groups that are correct by construction (products,
  // quotients, subgroup tables, simplicial kernels, ...). Still derives the
  // inverse table, which acts as a cheap sanity check.
  static FiniteGroup unchecked(int order, std::vector<Elt> flat_table, std::string label = "");

  static constexpr Elt id = 0;

  int order() const { return d_->order; }
  Elt mul(Elt a, Elt b) const { return d_->table[static_cast<size_t>(a) * d_->order + b]; }
  Elt inv(Elt a) const { return d_->inverse[a]; }
  Elt conj(Elt g, Elt a) const { return mul(mul(g, a), inv(g)); }          // ^g a
  Elt comm(Elt a, Elt b) const { return mul(mul(a, b), mul(inv(a), inv(b))); }  // [a,b]
  int element_order(Elt a) const;
  bool is_abelian() const { return d_->abelian; }
  bool is_trivial() const { return d_->order == 1; }

  const std::string& label() const { return d_->label; }
  FiniteGroup with_label(std::string label) const;

  // Identity of the underlying data block. Parent checks use this; structural
  // equality of tables never implies identity of instances.
  bool same_instance(const FiniteGroup& o) const { return d_ == o.d_; }
  bool same_table(const FiniteGroup& o) const;
  bool valid() const { return d_ != nullptr; }

 private:
  struct Data {
    int order = 0;
    std::vector<Elt> table;    // flat, row-major
    std::vector<Elt> inverse;
    bool abelian = true;
    std::string label;
  };
  std::shared_ptr<const Data> d_;
  explicit FiniteGroup(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
};

// The one-element group. A fresh instance per call site is avoided by the
// loader/caller where instance identity matters.
FiniteGroup trivial_group();

class GroupHom {
 public:
  GroupHom() = default;

  // Validates f(a·b) = f(a)·f(b) on all pairs; throws Error("HomInvalid").
  GroupHom(FiniteGroup source, FiniteGroup target, std::vector<Elt> map);
  static GroupHom unchecked(FiniteGroup source, FiniteGroup target, std::vector<Elt> map);
  static GroupHom identity(const FiniteGroup& g);
  static GroupHom zero(const FiniteGroup& source, const FiniteGroup& target);

  const FiniteGroup& source() const { return src_; }
  const FiniteGroup& target() const { return dst_; }
  Elt operator()(Elt a) const { return map_[a]; }
  const std::vector<Elt>& map() const { return map_; }

  bool is_injective() const;
  bool is_surjective() const;
  bool is_bijective() const { return is_injective() && is_surjective(); }
  bool is_zero() const;

  // g ∘ this (apply this first). Requires target/source instance match.
  GroupHom then(const GroupHom& g) const;

  // Reattach to structurally identical endpoint instances (tables must match).
  GroupHom recast(FiniteGroup new_source, FiniteGroup new_target) const;

  // First pair violating the hom property, if any (used by validators that
  // must report on raw, possibly broken data).
  static std::optional<std::pair<Elt, Elt>> find_violation(const FiniteGroup& a,
                                                           const FiniteGroup& b,
                                                           const std::vector<Elt>& map);

 private:
  FiniteGroup src_, dst_;
  std::vector<Elt> map_;
};

class Subgroup {
 public:
  Subgroup() = default;

  // Validates closure under multiplication and inverses and that the identity
  // is present. Elements are kept sorted ascending.
  Subgroup(FiniteGroup parent, std::vector<Elt> elements);
  static Subgroup whole(const FiniteGroup& g);
  static Subgroup trivial(const FiniteGroup& g);

  const FiniteGroup& parent() const { return parent_; }
  const std::vector<Elt>& elements() const { return elems_; }
  int order() const { return static_cast<int>(elems_.size()); }
  bool contains(Elt a) const { return mask_[a] != 0; }
  bool is_whole() const { return order() == parent_.order(); }
  bool is_trivial_subgroup() const { return order() == 1; }
  bool is_normal() const;
  bool contains_subgroup(const Subgroup& o) const;
  bool same_as(const Subgroup& o) const;

  // The subgroup as a group in its own right: element i of the new group is
  // elements()[i] (sorted, so the identity stays at index 0), plus the
  // embedding hom and the parent-index -> member-index translation (-1 for
  // non-members).
  struct AsGroup {
    FiniteGroup group;
    GroupHom embed;
    std::vector<Elt> index_in_sub;
  };
  AsGroup as_group(std::string label = "") const;

 private:
  FiniteGroup parent_;
  std::vector<Elt> elems_;
  std::vector<char> mask_;
};

// Left action of `actor` on `space` by automorphisms: perms[a] is the
// automorphism x -> ^a x, and perms[a·b] = perms[a] ∘ perms[b].
class GroupAction {
 public:
  GroupAction() = default;
  GroupAction(FiniteGroup actor, FiniteGroup space, std::vector<std::vector<Elt>> perms);
  static GroupAction unchecked(FiniteGroup actor, FiniteGroup space,
                               std::vector<std::vector<Elt>> perms);
  static GroupAction trivial(const FiniteGroup& actor, const FiniteGroup& space);
  static GroupAction conjugation(const FiniteGroup& g);  // g acting on itself

  const FiniteGroup& actor() const { return actor_; }
  const FiniteGroup& space() const { return space_; }
  Elt apply(Elt a, Elt x) const { return perms_[a][x]; }
  const std::vector<std::vector<Elt>>& perms() const { return perms_; }
  bool is_trivial() const;

  // First axiom violation on raw data, for validators: returns a witness
  // object or nullopt. Checks permutation/automorphism per element and the
  // composition law.
  static std::optional<json> find_violation(const FiniteGroup& actor, const FiniteGroup& space,
                                            const std::vector<std::vector<Elt>>& perms);

 private:
  FiniteGroup actor_, space_;
  std::vector<std::vector<Elt>> perms_;
};

// ---- constructions -------------------------------------------------------

Subgroup kernel(const GroupHom& f);
Subgroup image(const GroupHom& f);
Subgroup intersect(const Subgroup& a, const Subgroup& b);
Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<Elt>& seeds);
Subgroup normal_closure(const FiniteGroup& g, const std::vector<Elt>& seeds);
Subgroup center(const FiniteGroup& g);
Subgroup commutator_subgroup(const FiniteGroup& g);

// Quotient by a normal subgroup. New element i is the coset whose minimal
// parent index is rep[i]; reps are sorted ascending so the identity coset is
// index 0. Throws Error("NotNormal") with a conjugation witness.
struct Quotient {
  FiniteGroup group;
  GroupHom project;
  std::vector<Elt> rep;
};
Quotient quotient(const FiniteGroup& g, const Subgroup& n, std::string label = "");

// f is surjective and ker(f) is contained in the center of its source.
bool is_central_extension(const GroupHom& f);

struct Product {
  FiniteGroup group;
  GroupHom inl, inr;  // injections
  GroupHom prl, prr;  // projections
};
// Pair (a, b) is encoded as a * |B| + b, so (0,0) is the identity.
Product direct_product(const FiniteGroup& a, const FiniteGroup& b, std::string label = "");

// n ⋊ h with h acting on n: (a1,b1)(a2,b2) = (a1 · ^b1 a2, b1 b2),
// encoded a * |H| + b.
struct Semidirect {
  FiniteGroup group;
  GroupHom embed_normal, embed_actor, project_actor;
};
Semidirect semidirect_product(const FiniteGroup& n, const FiniteGroup& h,
                              const GroupAction& act, std::string label = "");

// G^k with mixed-radix encoding: coordinate j of index e is
// (e / |G|^(k-1-j)) % |G|, i.e. coordinate 0 is the most significant digit.
struct PowerGroup {
  FiniteGroup group;
  FiniteGroup base;
  int exponent = 0;
  std::vector<Elt> decode(Elt e) const;
  Elt encode(const std::vector<Elt>& coords) const;
};
PowerGroup power_group(const FiniteGroup& g, int k, std::string label = "");

// ---- searches (budgeted) -------------------------------------------------

// Greedy generating set: repeatedly adjoin the smallest element outside the
// closure of what has been picked so far.
std::vector<Elt> greedy_generators(const FiniteGroup& g);

// All homomorphisms a -> b, found by assigning images to a greedy generating
// set and replaying a product schedule, then verifying in full. Refuses with
// Error("BudgetExceeded") when a.order() > 24 or the candidate count exceeds
// the search budget. Deterministic order (lexicographic in generator images).
std::vector<GroupHom> enumerate_homs(const FiniteGroup& a, const FiniteGroup& b);

std::vector<GroupHom> automorphisms(const FiniteGroup& g);

// An isomorphism a -> b if one exists. Same budget rules as enumerate_homs,
// with element-order pruning.
std::optional<GroupHom> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b);

// Every subgroup / every normal subgroup (small groups only; used by the
// heredity audits).
std::vector<Subgroup> all_subgroups(const FiniteGroup& g);
std::vector<Subgroup> normal_subgroups(const FiniteGroup& g);

}  // namespace moorekit
