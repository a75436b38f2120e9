#pragma once

#include "fusionkit/fusion_checks.hpp"
#include "fusionkit/fusion_system.hpp"

namespace fusionkit {

/// A pair (F, E) with E on T <= S, together with its verified level.
struct NormalPairDescriptor {
  FusionSystem F;
  FusionSystem E;
  NormalityReport report;

  NormalityLevel level() const { return report.level; }
  static NormalPairDescriptor classify(FusionSystem F, FusionSystem E);
};

/// Groups H <= G in one table with S Sylow in G, T = S n H Sylow in H,
/// and the realized systems F = F_S(G), E = F_T(H).
struct RealizedPair {
  Subgroup G;
  Subgroup H;
  unsigned p = 0;
  Subgroup S;
  Subgroup T;
  FusionSystem F;
  FusionSystem E;

  /// Throws InvalidInput unless H is normal in G and S n H is Sylow in H.
  static RealizedPair make(Subgroup const& G, Subgroup const& H, unsigned p,
                           Caps const& caps = {});
  NormalPairDescriptor descriptor() const { return NormalPairDescriptor::classify(F, E); }
};

}  // namespace fusionkit
