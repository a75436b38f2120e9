#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fusionkit/fusion_system.hpp"

namespace fusionkit {

struct SubgroupStatus {
  bool fully_normalized = false;
  bool fully_centralized = false;
  bool fully_automized = false;
  bool receptive = false;
  bool F_centric = false;
  /// Set only when a T was supplied: C_T(P') <= P' for every F-conjugate
  /// P' of P lying in T.
  std::optional<bool> T_centric;
};

SubgroupStatus classify_subgroup(FusionSystem const& F, int id,
                                 Subgroup const* T = nullptr);
inline SubgroupStatus classify_subgroup(FusionSystem const& F,
                                        Subgroup const& P,
                                        Subgroup const* T = nullptr) {
  return classify_subgroup(F, F.id(P), T);
}

bool is_fully_normalized(FusionSystem const& F, int id);
bool is_fully_centralized(FusionSystem const& F, int id);
bool is_fully_automized(FusionSystem const& F, int id);
bool is_receptive(FusionSystem const& F, int id);
bool is_F_centric(FusionSystem const& F, int id);
bool is_T_centric(FusionSystem const& F, int id, Subgroup const& T);

/// Class member with the largest |N_S(P)| (resp. |C_S(P)|); ties go to
/// the smallest id, i.e. the lexicographically least member list.
int fully_normalized_representative(FusionSystem const& F, int id);
int fully_centralized_representative(FusionSystem const& F, int id);
/// First F-isomorphism from subgroup(from) onto subgroup(to).
std::optional<Morphism> isomorphism_between(FusionSystem const& F, int from,
                                            int to);

struct SaturationCertificate {
  bool saturated = false;
  /// Per F-class: id of a fully automized receptive member, or -1.
  std::vector<int> witnesses;
  /// First class with no such member.
  std::optional<std::size_t> failing_class;
};

SaturationCertificate is_saturated(FusionSystem const& F);

/// Every F-image of an element of X lies in X.
bool is_strongly_closed(FusionSystem const& F, Subgroup const& X);

enum class NormalityLevel { none, invariant, weakly_normal, normal };
char const* to_string(NormalityLevel level);

struct NormalityReport {
  NormalityLevel level = NormalityLevel::none;
  bool contained = false;
  bool strongly_closed = false;
  bool strongly_invariant = false;
  bool saturated = false;
  bool extension_condition = false;
  /// The first failed condition, empty when normal.
  std::string failed;
  std::string witness;
  /// For a failed extension condition: the automorphism of T with no
  /// admissible extension, and the extensions to T C_S(T) that exist but
  /// move C_S(T) outside Z(T).
  std::optional<Morphism> unextendable;
  std::vector<Morphism> rejected_extensions;
};

/// Level of the subsystem E (on T <= S) inside F.  Invariance is checked
/// in the strong form: for P <= Q <= T, phi in Hom_E(P, Q) and psi in
/// Hom_F(Q, T), the conjugate psi^-1 phi psi lies in E.
NormalityReport invariance_and_normality(FusionSystem const& F,
                                         FusionSystem const& E);

}  // namespace fusionkit
