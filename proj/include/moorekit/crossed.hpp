#pragma once
// Crossed algebra over finite groups: (pre)crossed modules, 2-crossed modules
// with Peiffer liftings, their reduced and stable variants, reduced crossed
// complexes, the nerve/extraction pair against simplicial groups, class
// predicates (Ab/Norm/CExt/Dis/Mod), and the CTF / E-torsion sequences these
// categories carry.

#include <optional>
#include <string>
#include <vector>

#include "moorekit/chain.hpp"
#include "moorekit/group.hpp"
#include "moorekit/simplicial.hpp"

namespace moorekit {

// Ordered per-axiom validation outcome. Validators accept raw (possibly
// unchecked) parts so that broken data yields a report with a witness instead
// of refusing to materialize; a failed entry carries the first counterexample
// found, in the scan order documented on each validator.
struct AxiomReport {
  struct Entry {
    std::string axiom;
    bool ok = true;
    json witness = json::object();
  };
  std::vector<Entry> entries;

  bool all_ok() const;
  const Entry* find(const std::string& axiom) const;  // nullptr when absent
  std::string first_failure() const;                  // axiom name, or ""
  json to_json() const;
};

// delta : A -> B together with a left B-action on A by automorphisms.
// Axioms: equivariance delta(^b a) = b delta(a) b^-1 and the Peiffer identity
// ^{delta(a)} a' = a a' a^-1. A precrossed module drops the Peiffer identity.
class CrossedModule {
 public:
  CrossedModule() = default;

  // Validates and throws Error("CrossedModuleViolation") carrying the full
  // report as witness.
  CrossedModule(FiniteGroup a, FiniteGroup b, GroupHom delta, GroupAction action,
                std::string label = "");
  static CrossedModule unchecked(FiniteGroup a, FiniteGroup b, GroupHom delta,
                                 GroupAction action, std::string label = "");

  // Report entries, in order: data, delta_hom, action, equivariance, peiffer.
  // validate_precrossed omits the final entry.
  static AxiomReport validate(const FiniteGroup& a, const FiniteGroup& b,
                              const GroupHom& delta, const GroupAction& action);
  static AxiomReport validate_precrossed(const FiniteGroup& a, const FiniteGroup& b,
                                         const GroupHom& delta, const GroupAction& action);

  const FiniteGroup& a() const { return a_; }
  const FiniteGroup& b() const { return b_; }
  const GroupHom& delta() const { return delta_; }
  const GroupAction& action() const { return action_; }
  const std::string& label() const { return label_; }
  CrossedModule with_label(std::string label) const;

  // 0 -> g with the only possible action.
  static CrossedModule discrete(const FiniteGroup& g, std::string label = "");

  // Two-term chain complex: A in degree 1, B in degree 0, differential delta.
  ChainComplex underlying_chain() const;

  bool same_instances(const CrossedModule& o) const;

 private:
  FiniteGroup a_, b_;
  GroupHom delta_;
  GroupAction action_;
  std::string label_;
};

// Morphism of crossed modules: fa and fb commute with the differentials and
// fa(^b a) = ^{fb(b)} fa(a).
struct CrossedModuleMap {
  CrossedModule from, to;
  GroupHom fa, fb;

  // Validates; throws Error("XModMapInvalid") with the violation witness.
  CrossedModuleMap(CrossedModule from_, CrossedModule to_, GroupHom fa_, GroupHom fb_);
  static std::optional<json> find_violation(const CrossedModule& from, const CrossedModule& to,
                                            const GroupHom& fa, const GroupHom& fb);

  bool is_zero() const { return fa.is_zero() && fb.is_zero(); }
  bool injective() const { return fa.is_injective() && fb.is_injective(); }
  bool surjective() const { return fa.is_surjective() && fb.is_surjective(); }
};

// Chain complex L -> M -> N where N acts on L and M, both differentials are
// equivariant (N acting on itself by conjugation), and a Peiffer lifting
// { , } : M x M -> L satisfies 2XM1..2XM6. The lifting is stored as a flat
// lookup table: peiffer[m0 * |M| + m1].
class TwoCrossedModule {
 public:
  TwoCrossedModule() = default;

  // Throws Error("TwoCrossedViolation") carrying the full report.
  TwoCrossedModule(FiniteGroup l, FiniteGroup m, FiniteGroup n, GroupHom delta2,
                   GroupHom delta1, GroupAction action_on_l, GroupAction action_on_m,
                   std::vector<Elt> peiffer, std::string label = "");
  static TwoCrossedModule unchecked(FiniteGroup l, FiniteGroup m, FiniteGroup n,
                                    GroupHom delta2, GroupHom delta1, GroupAction action_on_l,
                                    GroupAction action_on_m, std::vector<Elt> peiffer,
                                    std::string label = "");

  // Report entries, in order: data, delta2_hom, delta1_hom, action_on_l,
  // action_on_m, composite, equivariance, 2XM1..2XM6, derived_action. The
  // derived_action entry checks that ^m(l) = l {delta2(l)^-1, m} is an action
  // of M on L making delta2 a crossed module.
  static AxiomReport validate(const FiniteGroup& l, const FiniteGroup& m, const FiniteGroup& n,
                              const GroupHom& delta2, const GroupHom& delta1,
                              const GroupAction& action_on_l, const GroupAction& action_on_m,
                              const std::vector<Elt>& peiffer);

  const FiniteGroup& l() const { return l_; }
  const FiniteGroup& m() const { return m_; }
  const FiniteGroup& n() const { return n_; }
  const GroupHom& delta2() const { return delta2_; }
  const GroupHom& delta1() const { return delta1_; }
  const GroupAction& action_on_l() const { return act_l_; }
  const GroupAction& action_on_m() const { return act_m_; }
  const std::vector<Elt>& peiffer() const { return pf_; }
  Elt pf(Elt m0, Elt m1) const { return pf_[static_cast<size_t>(m0) * m_.order() + m1]; }
  const std::string& label() const { return label_; }

  // The action of M on L defined by the lifting (valid by construction).
  GroupAction derived_action() const;

  // A crossed module is a 2-crossed module with L = 0 and zero lifting.
  static TwoCrossedModule from_crossed_module(const CrossedModule& xm, std::string label = "");

 private:
  FiniteGroup l_, m_, n_;
  GroupHom delta2_, delta1_;
  GroupAction act_l_, act_m_;
  std::vector<Elt> pf_;
  std::string label_;
};

// delta : L -> M with a lifting { , } : M x M -> L subject to the five
// reduced equations (the N = 0 specialization). Same flat table layout.
class ReducedTwoCrossedModule {
 public:
  ReducedTwoCrossedModule() = default;

  // Throws Error("ReducedTwoCrossedViolation").
  ReducedTwoCrossedModule(FiniteGroup l, FiniteGroup m, GroupHom delta,
                          std::vector<Elt> peiffer, std::string label = "");

  // Entries: data, delta_hom, R1..R5, underlying_crossed. R1..R5 are
  //   R1  delta{m0,m1} = [m0,m1]
  //   R2  {delta(l0), delta(l1)} = [l0,l1]
  //   R3  {delta(l), m}{m, delta(l)} = 1
  //   R4  {m0, m1 m2} = {m0,m1}{m0,m2}{[m2,m0], m1}
  //   R5  {m0 m1, m2} = {m0, m1 m2 m1^-1}{m1, m2}
  // and underlying_crossed checks (delta, induced action) is a crossed module.
  static AxiomReport validate(const FiniteGroup& l, const FiniteGroup& m, const GroupHom& delta,
                              const std::vector<Elt>& peiffer);

  const FiniteGroup& l() const { return l_; }
  const FiniteGroup& m() const { return m_; }
  const GroupHom& delta() const { return delta_; }
  const std::vector<Elt>& peiffer() const { return pf_; }
  Elt pf(Elt m0, Elt m1) const { return pf_[static_cast<size_t>(m0) * m_.order() + m1]; }
  const std::string& label() const { return label_; }

  GroupAction induced_action() const;          // ^m(l) = l {delta(l)^-1, m}
  CrossedModule underlying_crossed_module() const;

 private:
  FiniteGroup l_, m_;
  GroupHom delta_;
  std::vector<Elt> pf_;
  std::string label_;
};

// delta : L -> M with a lifting subject to the four stable equations.
class StableCrossedModule {
 public:
  StableCrossedModule() = default;

  // Throws Error("StableCrossedViolation").
  StableCrossedModule(FiniteGroup l, FiniteGroup m, GroupHom delta, std::vector<Elt> peiffer,
                      std::string label = "");

  // Entries: data, delta_hom, S1..S4, underlying_crossed. S1..S4 are
  //   S1  delta{m0,m1} = [m0,m1]
  //   S2  {delta(l0), delta(l1)} = [l0,l1]
  //   S3  {m1,m0} = {m0,m1}^-1
  //   S4  {m0 m1, m2} = {m0 m1 m0^-1, m0 m2 m0^-1}{m0, m2}
  static AxiomReport validate(const FiniteGroup& l, const FiniteGroup& m, const GroupHom& delta,
                              const std::vector<Elt>& peiffer);

  const FiniteGroup& l() const { return l_; }
  const FiniteGroup& m() const { return m_; }
  const GroupHom& delta() const { return delta_; }
  const std::vector<Elt>& peiffer() const { return pf_; }
  Elt pf(Elt m0, Elt m1) const { return pf_[static_cast<size_t>(m0) * m_.order() + m1]; }
  const std::string& label() const { return label_; }

  GroupAction induced_action() const;
  CrossedModule underlying_crossed_module() const;

 private:
  FiniteGroup l_, m_;
  GroupHom delta_;
  std::vector<Elt> pf_;
  std::string label_;
};

// Reduced crossed complex: a proper chain complex M on window [0, hi] with
// actions of M_0 on each M_i (i >= 1) such that M_i is abelian for i >= 2,
// delta_1(M_1) acts trivially on those degrees, every differential above
// degree 1 is equivariant, and (delta_1, action at degree 1) is a crossed
// module.
class CrossedComplex {
 public:
  CrossedComplex() = default;

  // actions[i-1] is the action of M_0 on M_i, one entry per degree 1..hi.
  // Throws Error("CrossedComplexViolation") carrying the full report.
  CrossedComplex(ChainComplex chain, std::vector<GroupAction> actions, std::string label = "");
  static CrossedComplex unchecked(ChainComplex chain, std::vector<GroupAction> actions,
                                  std::string label = "");

  // Entries: data, proper, abelian, actions, equivariance,
  // delta1_image_trivial, bottom_crossed_module.
  static AxiomReport validate(const ChainComplex& chain, const std::vector<GroupAction>& actions);

  const ChainComplex& chain() const { return chain_; }
  const ProperChainComplex& proper() const { return *proper_; }
  int hi() const { return chain_.hi(); }
  const GroupAction& action(int i) const;  // 1 <= i <= hi
  CrossedModule bottom() const;            // (M_1 -> M_0) with its action
  const std::string& label() const { return label_; }

 private:
  ChainComplex chain_;
  std::optional<ProperChainComplex> proper_;
  std::vector<GroupAction> actions_;
  std::string label_;
};

// ---- stock constructions --------------------------------------------------

// (id : G -> G, conjugation).
CrossedModule identity_crossed_module(const FiniteGroup& g);

// Inclusion of a normal subgroup with the conjugation action; throws
// Error("NotNormal") otherwise.
CrossedModule inclusion_crossed_module(const Subgroup& n, std::string label = "");

// G -> G/Z for a central subgroup Z, with the action of the quotient by
// conjugation through any representative; throws Error("NotCentral").
CrossedModule central_quotient_crossed_module(const FiniteGroup& g, const Subgroup& z,
                                              std::string label = "");

// Flat |G|^2 table {g0,g1} = [g0,g1].
std::vector<Elt> commutator_lifting(const FiniteGroup& g);

// (id_G, commutator lifting) as a reduced / stable object.
ReducedTwoCrossedModule commutator_reduced(const FiniteGroup& g);
StableCrossedModule commutator_stable(const FiniteGroup& g);

// ---- simplicial interplay ---------------------------------------------------

// Nerve of the internal category of a crossed module, truncated at `degree`:
// X_n = A^n x B with multiplication (a,b)(a',b') twisting coordinate i by the
// action of w_i = delta(a_{i-1} ... a_1) b. Faces: d_0 drops the first arrow
// into its target, interior d_i composes a_{i+1} a_i, d_n drops the last;
// degeneracies insert identity arrows. Moore is trivial above degree 1 with
// N_1 isomorphic to A via a |-> (a^-1, delta(a)).
SimplicialGroup nerve_of_crossed_module(const CrossedModule& xm, int degree);

// (N_1, X_0, delta_1, conjugation by s_0) from a simplicial group whose Moore
// complex is trivial above degree 1; Error("NotTruncatedAt1") otherwise.
CrossedModule extract_crossed_module(const SimplicialGroup& x);

// ---- classification ---------------------------------------------------------

struct CrossedModuleClasses {
  bool ab = false;    // B trivial and A abelian
  bool norm = false;  // delta injective with normal image, conjugation action
  bool cext = false;  // delta a central extension
  bool dis = false;   // A trivial
  bool mod = false;   // delta zero

  std::vector<std::string> names() const;  // subset of {Ab,Norm,CExt,Dis,Mod}
  json to_json() const;
};
CrossedModuleClasses classify_crossed_module(const CrossedModule& xm);

// All morphisms x -> y, by filtering hom pairs; inherits enumerate_homs
// budgets. Deterministic order.
std::vector<CrossedModuleMap> enumerate_xmod_maps(const CrossedModule& x, const CrossedModule& y);

// An isomorphism x -> y if one exists (bijective on both levels).
std::optional<CrossedModuleMap> find_xmod_isomorphism(const CrossedModule& x, const CrossedModule& y);

// ---- torsion sequences ------------------------------------------------------

// The (CExt, Dis) / (Dis, Ab) structure on a crossed module. The counit
// (0 -> B) >--> (A -> B) with legs (0, id) is always present and monic; the
// E-torsion sequence (0 -> B) >--> (A -> B) -->> (A -> 0) exists exactly when
// the action of B on A is trivial (membership in E), in which case A is
// forced abelian and the ends land in Dis and Ab.
struct XModCtf {
  CrossedModuleMap counit;
  bool in_e = false;
  json not_in_e = json::object();        // {b, a} with ^b a != a, when !in_e
  std::optional<ChainSES> e_sequence;    // underlying chain sequence, when in_e
  json describe() const;
};
XModCtf xmod_ctf_sequences(const CrossedModule& xm);

// The (Ab, Dis) E-torsion sequence over modules: for delta = 0, the sequence
// (A -> 0) >--> (A -> G) -->> (0 -> G) as chain complexes. Throws
// Error("NotAModule") when delta is nonzero.
ChainSES mod_e_torsion(const CrossedModule& xm);

// First action-compatibility failure of a chain map between crossed
// complexes: f_i(^{m0} x) = ^{f_0(m0)} f_i(x) for every degree i >= 1 of the
// source window. The chain-level squares are ChainMap's job.
std::optional<json> crossed_complex_map_violation(const CrossedComplex& from,
                                                  const CrossedComplex& to, const ChainMap& f);

// The (Ker(cot_{n-1}), Crs_{n-1>=}, Crs_{>=n}) structure at level n >= 2.
// The coreflection counit sk_{n-1} tr_{n-1}(M) >--> M is always a monic
// crossed-complex morphism; the sequence tr_{n-1}(M) >--> M -->> tr'_n(M)
// exists exactly when every M_0-action in degrees >= n is trivial. A
// surjective delta_1 forces that condition; the implication is recomputed
// and reported, never assumed.
struct CrsETorsion {
  CrossedComplex sub;                  // tr_{n-1}(M) with its inherited actions
  ChainMap ctf_counit;                 // sub.chain() >--> c.chain()
  bool in_e = false;
  json not_in_e = json::object();      // {degree, m0, x} when !in_e
  std::optional<ChainSES> sequence;    // when in_e
  bool delta1_central_extension = false;
  json describe() const;
};
CrsETorsion crs_e_torsion(const CrossedComplex& c, int n);

}  // namespace moorekit
