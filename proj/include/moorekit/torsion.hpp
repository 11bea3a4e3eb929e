#pragma once
// Torsion/pretorsion engine over the truncation lattice: axiom audits (TT1,
// TT2), lattice-order and heredity audits, restriction collapse in truncated
// ambients, the pretorsion decomposition T(X) -> X -> G(X) of a nested pair
// of torsion theories with its relative pre-exactness certificates, the
// trivial-class object classifier, and torsion theories relative to a
// subcategory E (chain-level and the perfect/abelian pair on plain groups).

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "moorekit/chain.hpp"

namespace moorekit {

// ---- ambients ----------------------------------------------------------------

// The category a theory is read in. Chain-level checks run in ch (all
// complexes) or pch (proper complexes); the truncated ambients are the
// subcategories where small theories degenerate.
struct Ambient {
  enum class Kind { Simp, MNGeq, MGeq, Crs, CrsNGeq, Ch, Pch };
  Kind kind = Kind::Ch;
  int m = 0;  // truncation level, meaningful for MNGeq / MGeq / CrsNGeq

  static Ambient simp() { return {Kind::Simp, 0}; }
  static Ambient m_ngeq(int m) { return {Kind::MNGeq, m}; }
  static Ambient m_geq(int m) { return {Kind::MGeq, m}; }
  static Ambient crs() { return {Kind::Crs, 0}; }
  static Ambient crs_ngeq(int m) { return {Kind::CrsNGeq, m}; }
  static Ambient ch() { return {Kind::Ch, 0}; }
  static Ambient pch() { return {Kind::Pch, 0}; }

  std::string name() const;
};

// True when the theory collapses to the trivial torsion theory inside the
// ambient: in M_{m>=} (complexes supported <= m) every object is already
// torsion-free for any theory of rank <= rank(mu_ngeq(m)), so the torsion
// class restricts to {0}. Only the MNGeq / CrsNGeq ambients truncate this way.
bool restricts_trivially(TheoryId t, const Ambient& a);

// Audit of the collapse on a corpus of complexes supported <= m: for each
// object the torsion part of `below` is the zero complex. Preconditions:
// below.leq(mu_ngeq(m)) and every corpus object supported <= m, else
// Error("OrderViolation"). Rows are sorted by object label.
json restriction_collapse_check(int m, TheoryId below,
                                const std::vector<ChainComplex>& corpus);

// ---- torsion-theory axiom audits ----------------------------------------------

// TT1: every chain map from a torsion corpus member to a torsion-free corpus
// member is zero (hom enumeration, budgeted). TT2: every corpus member
// decomposes as torsion >-> X ->> torsion-free with the ends classified back
// into the right classes (exactness is certified by the sequence itself).
// Rows sorted by object label; pairs by (torsion label, free label).
json tt_axioms_check(TheoryId theory, const std::vector<ChainComplex>& corpus);

// For t1 <= t2 in the lattice (else Error("OrderViolation")): the canonical
// torsion part of t1 is contained degreewise in the torsion part of t2, on
// every corpus member.
json lattice_order_check(TheoryId t1, TheoryId t2,
                         const std::vector<ChainComplex>& corpus);

// Empirical closure audit on the corpus, not a proof: hereditary = every
// delta-closed degreewise subgroup family of every torsion member spans a
// torsion subcomplex; cohereditary = every delta-closed degreewise-normal
// family of every torsion-free member gives a torsion-free quotient. The
// report carries the first counterexample family as a witness when a closure
// fails. Error("BudgetExceeded") when the family count explodes.
json heredity_check(TheoryId theory, const std::vector<ChainComplex>& corpus);

// ---- pretorsion decomposition --------------------------------------------------

// For a nested pair smaller <= larger of torsion theories, (larger-torsion,
// smaller-free) is a pretorsion pair: the relative-zero class is
// Z = larger-torsion ∩ smaller-free, and every X fits in
//   T(X) --t--> X --g--> G(X)
// with t the larger theory's torsion inclusion and g the smaller theory's
// torsion-free quotient. The image of g∘t is the middle object T(X)/S(X); it
// lies in Z, t is a Z-prekernel of g and g a Z-precokernel of t.
struct PretorsionDecomposition {
  TheoryId smaller, larger;
  ChainSES larger_seq;     // T(X) >-> X ->> F(X)
  ChainSES smaller_seq;    // S(X) >-> X ->> G(X)
  ChainMap t;              // larger_seq.iota
  ChainMap g;              // smaller_seq.pi
  ChainComplex middle;     // image of g∘t, degreewise T(X)_k / S(X)_k
  ChainMap t_onto_middle;  // T(X) ->> middle
  ChainMap middle_into_g;  // middle >-> G(X), composite equals g∘t
  bool middle_torsion_larger = false;
  bool middle_free_smaller = false;

  json describe() const;
};

// Throws Error("OrderViolation") unless smaller.leq(larger);
// Error("NotProper") propagates from mu_ngeq decompositions.
PretorsionDecomposition pretorsion_decompose(const ChainComplex& x,
                                             TheoryId smaller, TheoryId larger);

// ---- relative-zero class and pre-exactness -------------------------------------

using ZPredicate = std::function<bool(const ChainComplex&)>;

// Membership test for Z = larger-torsion ∩ smaller-free.
ZPredicate z_class_of(TheoryId smaller, TheoryId larger);

// A map is Z-trivial when it factors through an object of Z; equivalently its
// image subcomplex lies in Z.
struct ZTrivialResult {
  bool trivial = false;
  ChainComplex image;
};
ZTrivialResult z_trivial(const ChainMap& f, const ZPredicate& in_z);

// Finite relativization of the Z-prekernel / Z-precokernel universal
// properties of t and g: for every probe P and every hom k : P -> X with g∘k
// Z-trivial there is exactly one u : P -> T(X) with t∘u = k, and dually for
// every h : X -> P with h∘t Z-trivial exactly one v : G(X) -> P with v∘g = h.
// The report names the probes; rows sorted by probe label.
json verify_preexact(const PretorsionDecomposition& dec,
                     const std::vector<ChainComplex>& probes);

// For alpha : X -> Y with X larger-torsion and Y smaller-free (else
// Error("NotTorsion") / Error("NotTorsionFree")), certifies the three
// factorizations of alpha and their comparison maps: the image factorization
// (e, m) through I = im(alpha); the factorization through g_X : X ->> G(X)
// (G(X) lies in Z); the factorization through t_Y : T(Y) >-> Y (T(Y) lies in
// Z); and the unique beta : G(X) -> I with beta∘g_X = e and gamma : I -> T(Y)
// with t_Y∘gamma = m gluing them into one commuting diagram.
json remark_factorizations(const ChainMap& alpha, TheoryId smaller,
                           TheoryId larger);

// Functoriality audit of one theory's decomposition: for every enumerated hom
// f : X -> Y between corpus members, the induced maps T(f) and F(f) exist and
// make the naturality squares with the inclusions/projections commute.
json torsion_naturality_check(TheoryId theory,
                              const std::vector<ChainComplex>& corpus);

// ---- trivial-class classifier --------------------------------------------------

// Structural shape of an object of Z = larger-torsion ∩ smaller-free:
//   EilenbergMacLane : one group A in a single degree n, with A abelian when
//                      n >= 1 (degree 0 admits any group, as the discrete
//                      object on pi_0; the zero complex reports as A = 1 at
//                      the larger theory's level);
//   GroupLike        : support [n, n+1] with a bijective differential, the
//                      relative-zero shape of the adjacent pair
//                      mu_geq(n+1) <= mu_ngeq(n);
//   Window           : anything else in Z, supported on [lo, hi] (this is all
//                      the classifier asserts; single-degree nonabelian
//                      objects in positive degrees land here too);
//   NotTrivial       : not in Z at all.
struct TrivialPattern {
  enum class Kind { EilenbergMacLane, Window, GroupLike, NotTrivial };
  Kind kind = Kind::NotTrivial;
  FiniteGroup group;  // EM / GroupLike payload; trivial otherwise
  int lo = 0, hi = 0; // EM: lo == hi == degree; GroupLike: [n, n+1]; Window: support

  json to_json() const;
};
// Throws Error("OrderViolation") unless smaller.leq(larger).
TrivialPattern classify_trivial_object(const ChainComplex& x, TheoryId smaller,
                                       TheoryId larger);

// ---- torsion theories relative to a subcategory E ------------------------------

// A torsion theory that only decomposes the members of a subcategory E of the
// ambient: TT1 holds globally, TT2 is guaranteed on E only.
struct ETorsionSpec {
  std::string name;
  std::function<bool(const ChainComplex&)> in_torsion;
  std::function<bool(const ChainComplex&)> in_free;
  std::function<bool(const ChainComplex&)> in_e;
  std::function<ChainSES(const ChainComplex&)> decompose;  // total on E-members
};

// mu_ngeq(n) read as an E-torsion theory on all complexes: E is the class
// with normal delta_{n+1}-image, exactly where the torsion quotient exists.
ETorsionSpec mu_ngeq_e_spec(int n);

// TT1 over all torsion/free cross-pairs of the corpus; TT2' (decompose and
// classify the ends) over the corpus members that lie in E. Reports
// per-object E-membership; rows sorted by object label.
json e_torsion_check(const ETorsionSpec& spec,
                     const std::vector<ChainComplex>& corpus);

// ---- the perfect/abelian pair on plain groups ----------------------------------

// Last term of the derived series as a subgroup (largest perfect subgroup
// reachable by iterating the commutator).
Subgroup perfect_core(const FiniteGroup& g);
bool is_perfect(const FiniteGroup& g);

// (perfect, abelian) as an E-torsion theory on finite groups, with
// E = {G : [G',G'] = G'}: each E-member G splits as G' >-> G ->> G/G' with a
// perfect kernel and abelian quotient; TT1 (homs from perfect corpus members
// to abelian ones vanish) is enumerated where the hom search budget allows
// and the skipped sources are reported. Rows sorted by group label.
json perf_ab_check(const std::vector<FiniteGroup>& corpus);

}  // namespace moorekit
