#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fusionkit/caps.hpp"
#include "fusionkit/check.hpp"
#include "fusionkit/group_ops.hpp"
#include "fusionkit/pair.hpp"

namespace fusionkit {

struct LocalDatum {
  Subgroup U;
  Subgroup X;
  Subgroup UX;
  /// U X C_S(UX)
  Subgroup U_X;
  /// The automorphisms of U_X in F that map UX onto itself.
  std::vector<Morphism> K;
  /// N_F^K(U_X), a system on N_S(UX).
  FusionSystem D;
  /// Set when X had to be moved so that UX is fully N_F(U)-normalized.
  std::optional<Morphism> replacement;
};

/// Throws InvalidInput when U is not a fully F-normalized T-centric
/// subgroup of T (of S when `widen`), or X is not inside C_S(T).
LocalDatum local_datum(NormalPairDescriptor const& pair, Subgroup const& U,
                       Subgroup const& X, bool widen = false);

struct LocalModel {
  /// N = {g in N_G(U_X) : c_g|U_X in K}
  Subgroup N;
  /// N / O_p'(N)
  Quotient quotient;
  Subgroup Gmodel;
  Subgroup Hmodel;
  /// Images of N_S(UX) and N_T(U).
  Subgroup S_model;
  Subgroup T_model;
  std::vector<Check> verification;

  Subgroup embed(Subgroup const& sub) const { return quotient.image(sub); }
};

/// Builds the candidate model pair and verifies every model axiom
/// (trivial p'-core, constrained, fusion equal to D and to N_E(U) hom-set
/// by hom-set).  VerificationError on the first failure.
LocalModel local_model(LocalDatum const& datum, RealizedPair const& pair);

struct LocalKGroups {
  Subgroup C;  // C_Gmodel(image of N_T(U))
  Subgroup K;  // O^p(C)
  /// Only when U = T: O^p(Aut_{C_F(T)}(X)) = Aut_K(X).
  std::optional<bool> identity_holds;
};

LocalKGroups local_k_groups(LocalModel const& model, LocalDatum const& datum,
                            RealizedPair const& pair);

/// {s in N_S(UX) : the image of s centralizes Hmodel}.
Subgroup model_centralizer(LocalModel const& model, LocalDatum const& datum);

struct Chain {
  std::vector<Subgroup> subgroups;  // U_0 < ... < U_n = T
  Subgroup X;
  /// The F-morphism on UX moving (U, X) to (U_0, X').
  Morphism alpha;
};

/// The F-conjugates (U alpha, X alpha), alpha in Hom_F(UX, S), are tried in
/// hom-set order; nullopt when none affords a strongly
/// (F, X alpha)-normalized chain.
std::optional<Chain> strongly_normalized_chain(NormalPairDescriptor const& pair,
                                               Subgroup const& U, Subgroup const& X);

/// Fully F-normalized T-centric subgroups of T (of S when `widen`).
std::vector<Subgroup> centric_family(NormalPairDescriptor const& pair, bool widen = false);

struct LocalTerm {
  Subgroup U;
  std::size_t N_order = 0;
  std::size_t core_order = 0;
  std::size_t G_model_order = 0;
  std::size_t H_model_order = 0;
  Subgroup centralizer;  // C_S(H(U))
};

struct LocalCentralizerReport {
  std::vector<LocalTerm> terms;
  Subgroup intersection;  // over U
  Subgroup result;        // after the Aut_F(T C_S(T)) translates
  std::vector<Elem> direct;
  bool matches_direct = false;
};

LocalCentralizerReport centralizer_subgroup_local(RealizedPair const& pair,
                                                  bool widen = false);

struct HypContainmentReport {
  Subgroup hyp;  // hyp(C_F(T))
  std::vector<Check> checks;
  bool passed() const { return all_passed(checks); }
};

/// hyp(C_F(T)) <= C_{N_S(U)}(H(U)) for all U, plus O^p(C_G(T)) n S <= C_G(H)
/// when G and H are p-constrained with O_p'(G) = 1.
HypContainmentReport verify_prop_hyp_containment(RealizedPair const& pair);

struct OpContainment {
  bool applicable = false;
  std::string reason;
  Subgroup lhs;  // O^p(C_G(T)) n S
  bool holds = false;
};
OpContainment op_containment(RealizedPair const& pair);

struct GrossReport {
  bool applicable = false;
  std::string reason;
  std::size_t C_order = 0;
  std::size_t O_upper_p_order = 0;
  std::size_t O_p_prime_order = 0;
  bool holds = false;
};

/// C = C_Aut(G)(S) has a normal p-complement.  Not applicable unless
/// O_p'(G) = 1 and G is p-constrained; CapError above the automorphism
/// cap.
GrossReport verify_gross(Subgroup const& G, unsigned p, Caps const& caps = {});

struct TheoremBReport {
  Subgroup hyp;          // hyp(C_F(T))
  Subgroup centralizer;  // C_S(E)
  Subgroup C_S_T;
  std::size_t subsystem_morphisms = 0;
  std::vector<Check> checks;
  bool passed() const { return all_passed(checks); }
};

TheoremBReport verify_theorem_b(NormalPairDescriptor const& pair);

}  // namespace fusionkit
