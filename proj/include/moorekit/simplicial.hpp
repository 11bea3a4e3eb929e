#pragma once
// Truncated simplicial groups: levels X_0..X_d with face/degeneracy homs
// satisfying the simplicial identities. Provides the discrete and
// one-point-extension constructions, pi_0, the Moore normalization with its
// degenerate subgroups, homotopy groups, coskeleton extension by simplicial
// kernels, the Dold-Kan reconstruction Gamma for abelian complexes, and the
// truncation-class membership tests.

#include <optional>
#include <string>
#include <vector>

#include "moorekit/chain.hpp"
#include "moorekit/group.hpp"

namespace moorekit {

class SimplicialGroup {
 public:
  SimplicialGroup() = default;

  // faces[n-1][i] is d_i : X_n -> X_{n-1} (n = 1..d, i = 0..n);
  // degens[n][i] is s_i : X_n -> X_{n+1} (n = 0..d-1, i = 0..n).
  // Validates shapes, endpoint instances, the homomorphism property of every
  // map, and all simplicial identities; throws Error("IdentityViolation").
  // When coskeletal_above = k is claimed, levels k+1..d are checked against
  // the simplicial-kernel extension of the k-truncation
  // (Error("NotCoskeletal") on mismatch).
  SimplicialGroup(std::vector<FiniteGroup> levels,
                  std::vector<std::vector<GroupHom>> faces,
                  std::vector<std::vector<GroupHom>> degens,
                  std::optional<int> coskeletal_above = std::nullopt,
                  std::string label = "");

  // Construction-internal path: no checks at all.
  static SimplicialGroup unchecked(std::vector<FiniteGroup> levels,
                                   std::vector<std::vector<GroupHom>> faces,
                                   std::vector<std::vector<GroupHom>> degens,
                                   std::optional<int> coskeletal_above,
                                   std::string label);

  int degree() const { return static_cast<int>(levels_.size()) - 1; }
  const FiniteGroup& level(int n) const { return levels_[n]; }
  const GroupHom& face(int n, int i) const { return faces_[n - 1][i]; }
  const GroupHom& degen(int n, int i) const { return degens_[n][i]; }
  std::optional<int> coskeletal_above() const { return coskeletal_above_; }
  const std::string& label() const { return label_; }
  SimplicialGroup with_label(std::string label) const;

  // First violated axiom on raw data (shape, hom property, or a simplicial
  // identity), as a witness object; nullopt when everything holds. Does not
  // check the coskeletal claim.
  static std::optional<json> find_violation(const std::vector<FiniteGroup>& levels,
                                            const std::vector<std::vector<GroupHom>>& faces,
                                            const std::vector<std::vector<GroupHom>>& degens);

 private:
  std::vector<FiniteGroup> levels_;
  std::vector<std::vector<GroupHom>> faces_;
  std::vector<std::vector<GroupHom>> degens_;
  std::optional<int> coskeletal_above_;
  std::string label_;
};

// Moore normalization: N_0 = X_0, N_n = ∩_{i<n} ker(d_i), delta_n = d_n
// restricted; D_n is the subgroup generated by the degeneracy images. The
// chain is proper by construction (verified).
struct MooreComplex {
  ProperChainComplex chain;          // N_n as standalone groups, window [0, d]
  std::vector<Subgroup> n_in_level;  // N_n inside X_n
  std::vector<Subgroup> d_in_level;  // D_n inside X_n (D_0 trivial)
  std::vector<GroupHom> embed;       // chain group at n -> X_n
};

// All levels g, all maps the identity.
SimplicialGroup dis(const FiniteGroup& g, int d);
// X_n = g^(n+1); faces delete coordinate i, degeneracies duplicate it.
SimplicialGroup ind(const FiniteGroup& g, int d);

// X_0 / (normal closure of d_0(y) d_1(y)^-1).
Quotient pi0(const SimplicialGroup& x);

MooreComplex moore(const SimplicialGroup& x);

// pi_n = H_n of the Moore complex for n = 0..max_n; needs degree >= max_n + 1
// so the boundary into the top requested degree is present.
std::vector<FiniteGroup> homotopy_groups(const SimplicialGroup& x, int max_n);

// Truncate at k, then extend to degree d by simplicial kernels (faces become
// the projections, degeneracies the induced tuples). Budgeted backtracking
// over the kernel tuples; result is marked coskeletal_above = k.
SimplicialGroup coskeleton_extend(const SimplicialGroup& x, int k, int d);

// Dold-Kan reconstruction of an abelian complex supported in [0, d], built to
// degree d: Gamma_m = ⊕_{σ:[m]->>[k]} C_k with operators through epi-mono
// factorization (identity / top-coface boundary / zero). The Moore round-trip
// N(Gamma(c)) ≅ c is verified before returning.
SimplicialGroup dold_kan_gamma(const ChainComplex& c, int d);

// Membership of the Moore complex in the four truncation-derived classes, per
// level n (delta_{d+1} is treated as zero at the truncation edge):
//   m_ngeq:  N_i = 0 for i > n        (object of M_{n>=})
//   m_geq:   N_i = 0 for i < n        (object of M_{>=n})
//   ker_cot: m_geq and delta_{n+1} has trivial cokernel (torsion for mu_ngeq(n))
//   f_tr:    N_i = 0 for i > n+1 and delta_{n+1} monic (free for mu_geq(n+1))
struct MembershipFlags {
  bool m_ngeq = false;
  bool m_geq = false;
  bool ker_cot = false;
  bool f_tr = false;
};
std::vector<MembershipFlags> classify_membership(const SimplicialGroup& x);

// Group T-complex test: N_n ∩ D_n trivial for every n >= 1.
struct TComplexReport {
  bool is_t_complex = true;
  int witness_degree = -1;
  Elt witness = -1;  // element of X_n in the intersection
};
TComplexReport is_group_T_complex(const SimplicialGroup& x);

}  // namespace moorekit
