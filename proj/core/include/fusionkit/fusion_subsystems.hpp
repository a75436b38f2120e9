#pragma once

#include <optional>
#include <span>
#include <vector>

#include "fusionkit/fusion_system.hpp"

namespace fusionkit {

/// The p'-order members of a set of automorphisms; they generate O^p of
/// the group they form.
std::vector<Morphism> p_prime_elements(std::span<Morphism const> autos, unsigned p);
/// O^p of a group of automorphisms of one subgroup, as a sorted list.
std::vector<Morphism> op_residual(std::span<Morphism const> autos, unsigned p);
std::size_t morphism_order(Morphism const& alpha);

/// Some psi in Hom_F(PX, S) restricts to phi on P and to the identity on
/// X.  P = phi.source() must centralize X.
bool extends_fixing(FusionSystem const& F, Morphism const& phi, Subgroup const& X);
/// E <= C_F(X) in the extension sense: every morphism of E extends to
/// an F-morphism fixing X pointwise.
bool centralized_by(FusionSystem const& F, FusionSystem const& E, Subgroup const& X);

struct CentralizerSystem {
  FusionSystem system;
  /// The fully centralized subgroup actually used.
  Subgroup X;
  /// F-isomorphism from the requested subgroup to X when a substitution
  /// was needed.
  std::optional<Morphism> substitution;
};

/// C_F(X) on C_S(X).  A subgroup that is not fully centralized is first
/// replaced by its fully centralized representative.
CentralizerSystem centralizer_system(FusionSystem const& F, Subgroup const& X);

/// N_F^K(R) on N_S^K(R) = {s in N_S(R) : c_s|R in K}.  K must be a group
/// of F-automorphisms of R (closure is checked).
FusionSystem k_normalizer_system(FusionSystem const& F, Subgroup const& R,
                                 std::vector<Morphism> const& K);
FusionSystem normalizer_system(FusionSystem const& F, Subgroup const& R);

FusionSystem intersect_fusion_systems(FusionSystem const& F1, FusionSystem const& F2);

/// hyp(F), generated by g^-1 (g alpha) for g in P and alpha of p'-order
/// in Aut_F(P).
Subgroup hyperfocal(FusionSystem const& F);

/// The subsystem on R (hyp(F) <= R <= S) generated by Inn(R) and the
/// restrictions to P n R of O^p(Aut_F(P)) for every P <= S.  The result
/// is checked to be saturated and to contain O^p(Aut_F(P)) for P <= R;
/// VerificationError otherwise.
FusionSystem p_power_index_subsystem(FusionSystem const& F, Subgroup const& R);

struct CentralizerSet {
  /// {g in S : E <= C_F(<g>)}, sorted.
  std::vector<Elem> members;
  bool is_subgroup = false;
  std::optional<Subgroup> subgroup;
  /// Evaluated when the set is a subgroup.
  std::optional<bool> strongly_closed;
  /// Members g for which <g> is not fully F-centralized.
  std::vector<Elem> not_fully_centralized;
};

CentralizerSet centralizer_subgroup_direct(FusionSystem const& F,
                                           FusionSystem const& E);

/// Z(F) = C_S(F).
Subgroup center_of_fusion_system(FusionSystem const& F);

}  // namespace fusionkit
