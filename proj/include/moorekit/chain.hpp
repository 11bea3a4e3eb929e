#pragma once
// Chain complexes of (not necessarily abelian) finite groups on an integer
// degree window, with trivial groups understood outside the window. Carries
// the truncation/skeleton/coskeleton/cotruncation functor tower, homology of
// proper complexes, the two truncation torsion-theory decompositions with
// explicit short exact sequences, and the split TTF decomposition.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "moorekit/group.hpp"

namespace moorekit {

// The two families of truncation torsion theories, ordered in one chain:
//   ... <= mu_ngeq(n+1) <= mu_geq(n+1) <= mu_ngeq(n) <= mu_geq(n) <= ...
// mu_ngeq(n): torsion = supported >= n with epi delta_{n+1}; free = supported <= n.
// mu_geq(n):  torsion = supported >= n; free = supported <= n with monic delta_n.
enum class TheoryKind { MuNGeq, MuGeq };

struct TheoryId {
  TheoryKind kind = TheoryKind::MuNGeq;
  int n = 0;

  static TheoryId mu_ngeq(int n) { return {TheoryKind::MuNGeq, n}; }
  static TheoryId mu_geq(int n) { return {TheoryKind::MuGeq, n}; }

  // Larger rank = larger theory in the lattice; mu_geq(n) sits directly above
  // mu_ngeq(n), and mu_ngeq(n) directly above mu_geq(n+1).
  int rank() const { return kind == TheoryKind::MuGeq ? -2 * n : -(2 * n + 1); }
  bool operator==(const TheoryId& o) const { return kind == o.kind && n == o.n; }
  bool leq(const TheoryId& o) const { return rank() <= o.rank(); }
  std::string name() const;
};

class ChainComplex {
 public:
  ChainComplex() = default;

  // groups[i] sits in degree lo+i; diffs[i] is delta_{lo+i+1} : groups[i+1] ->
  // groups[i]. Validates endpoint instances and that consecutive composites
  // vanish (Error("CompositeNotZero") with degree + witness element).
  ChainComplex(int lo, std::vector<FiniteGroup> groups, std::vector<GroupHom> diffs,
               std::string label = "");

  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(groups_.size()) - 1; }
  bool in_window(int k) const { return k >= lo() && k <= hi(); }

  // Group in degree k; a shared trivial instance outside the window.
  const FiniteGroup& at(int k) const;
  // delta_k : at(k) -> at(k-1); the zero hom when k is outside (lo, hi].
  GroupHom diff(int k) const;

  bool trivial_at(int k) const { return at(k).is_trivial(); }
  // Tightest degrees carrying nontrivial groups; for the zero complex
  // support_hi() < support_lo().
  int support_lo() const;
  int support_hi() const;
  bool is_zero_complex() const { return support_hi() < support_lo(); }

  const std::string& label() const { return label_; }
  ChainComplex with_label(std::string label) const;

  // Degreewise instance identity (the notion of "same object" used by maps).
  bool same_instances(const ChainComplex& o) const;

 private:
  int lo_ = 0;
  std::vector<FiniteGroup> groups_;
  std::vector<GroupHom> diffs_;
  FiniteGroup trivial_ = trivial_group();
  std::string label_;
};

class ChainMap {
 public:
  ChainMap() = default;

  // comps[k] : from.at(k) -> to.at(k); degrees not present are zero homs.
  // Validates endpoints and every commuting square (including the edge
  // squares where one side is forced zero).
  ChainMap(ChainComplex from, ChainComplex to, std::map<int, GroupHom> comps);
  static ChainMap zero(ChainComplex from, ChainComplex to);

  const ChainComplex& from() const { return from_; }
  const ChainComplex& to() const { return to_; }
  GroupHom comp(int k) const;  // materializes zero homs outside comps
  bool is_zero() const;
  bool injective_everywhere() const;
  bool surjective_everywhere() const;

  // g ∘ this, degreewise.
  ChainMap then(const ChainMap& g) const;

  // Per-degree image subgroups of `to` (closed under the differentials).
  std::map<int, Subgroup> image_subgroups() const;

 private:
  ChainMap(ChainComplex from, ChainComplex to, std::map<int, GroupHom> comps, bool);
  ChainComplex from_, to_;
  std::map<int, GroupHom> comps_;
};

// Short exact sequence of chain complexes: per degree, iota is injective with
// normal image, pi is surjective, and ker(pi_k) = im(iota_k). Verified at
// construction.
struct ChainSES {
  ChainComplex sub, mid, quo;
  ChainMap iota, pi;

  ChainSES(ChainComplex sub_, ChainComplex mid_, ChainComplex quo_, ChainMap iota_,
           ChainMap pi_);
  json describe() const;
};

// A complex all of whose differential images are normal in their targets,
// carrying the epi-mono factorizations delta_k = m_k ∘ e_k eagerly.
class ProperChainComplex {
 public:
  explicit ProperChainComplex(ChainComplex c);  // throws Error("NotProper")

  const ChainComplex& complex() const { return c_; }
  struct Factorization {
    FiniteGroup image;        // im(delta_k) as a group
    GroupHom e;               // at(k) ->> image
    GroupHom m;               // image >-> at(k-1)
    Subgroup image_in_target; // im(delta_k) inside at(k-1)
  };
  const Factorization& fact(int k) const;  // valid for lo < k <= hi

 private:
  ChainComplex c_;
  std::vector<Factorization> facts_;
};

// Degree of the first non-normal differential image, with a conjugation
// witness; nullopt when proper.
std::optional<json> properness_violation(const ChainComplex& c);

// H_n = ker(delta_n) / im(delta_{n+1}).
FiniteGroup homology(const ProperChainComplex& c, int n);

// ---- the functor tower -----------------------------------------------------

ChainComplex tr(const ChainComplex& c, int n);        // forget degrees above n
ChainComplex sk(const ChainComplex& c, int n);        // embed a <=n complex (window up to n)
ChainComplex cosk(const ChainComplex& c, int n);      // adjoin ker(delta_n) in degree n+1
ChainComplex cot(const ChainComplex& c, int n);       // degree n becomes coker(delta_{n+1})
ChainComplex tr_prime(const ChainComplex& c, int n);  // forget degrees below n
ChainComplex sk_prime(const ChainComplex& c, int n);  // embed a >=n complex (window down to n)
ChainComplex cot_prime(const ChainComplex& c, int n); // degree n becomes ker(delta_n)

// ---- torsion machinery ------------------------------------------------------

struct ChainClass {
  bool torsion = false;
  bool torsion_free = false;
};
ChainClass classify_chain(const ChainComplex& c, TheoryId theory);

// Canonical torsion part of c for the theory, as subgroups of c's own groups.
std::map<int, Subgroup> torsion_part_subgroups(const ChainComplex& c, TheoryId theory);

// The short exact sequence T >-> c ->> F of the theory. mu_ngeq needs a
// normal delta_{n+1}-image (throws Error("NotProper") otherwise); mu_geq works
// on any complex.
ChainSES chain_torsion_decompose(const ChainComplex& c, TheoryId theory);

// The TTF decomposition at level n: the (supported <= n-1, supported >= n)
// sequence with its degreewise identity-or-zero sections, plus the mu_geq(n)
// sequence sharing the middle class. A genuine chain-map section of the first
// sequence exists iff delta_n = 0, and is verified exactly in that case.
struct TTFDecomposition {
  ChainSES low_high;                 // sk_{n-1} tr_{n-1}(X) >-> X ->> tr'_n(X)
  std::map<int, GroupHom> sections;  // s_k with pi_k ∘ s_k = id, per degree
  ChainSES mu_geq_seq;               // ker(delta_n) >-> X ->> delta(X_n)
  bool chain_map_section;            // true iff delta_n = 0 (section verified)
  bool middles_same_class;           // both middles lie in the >=n torsion class
};
TTFDecomposition ttf_decompose(const ChainComplex& c, int n);

// ---- sub/quotient complexes and map search ----------------------------------

// Subcomplex spanned by per-degree subgroups (must be delta-closed; degrees
// not listed default to the trivial subgroup inside the window).
struct SubcomplexResult {
  ChainComplex complex;
  ChainMap include;
};
SubcomplexResult subcomplex(const ChainComplex& c, const std::map<int, Subgroup>& parts);

// Quotient by a degreewise-normal delta-closed family of subgroups.
struct QuotientComplexResult {
  ChainComplex complex;
  ChainMap project;
};
QuotientComplexResult quotient_complex(const ChainComplex& c,
                                       const std::map<int, Subgroup>& parts);

// All chain maps a -> b (budgeted; degreewise hom search pruned by the
// commuting squares).
std::vector<ChainMap> enumerate_chain_maps(const ChainComplex& a, const ChainComplex& b);

// A degreewise-isomorphism chain map, if one exists.
std::optional<ChainMap> find_chain_isomorphism(const ChainComplex& a, const ChainComplex& b);

}  // namespace moorekit
