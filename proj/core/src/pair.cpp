#include "fusionkit/pair.hpp"

#include "fusionkit/error.hpp"
#include "fusionkit/group_ops.hpp"

namespace fusionkit {

NormalPairDescriptor NormalPairDescriptor::classify(FusionSystem F, FusionSystem E) {
  auto report = invariance_and_normality(F, E);
  return {std::move(F), std::move(E), std::move(report)};
}

RealizedPair RealizedPair::make(Subgroup const& G, Subgroup const& H, unsigned p,
                                Caps const& caps) {
  if (!is_prime(p)) throw InvalidInput("p must be prime");
  if (G.order() > caps.max_group_order) {
    throw CapError("group order " + std::to_string(G.order()) + " exceeds cap " +
                   std::to_string(caps.max_group_order));
  }
  if (!G.contains(H) || !is_normal_in(H, G)) {
    throw InvalidInput("H is not a normal subgroup of G");
  }
  Subgroup S = sylow_subgroup(G, p);
  Subgroup T = intersection(S, H);
  if (T.order() != p_part(H.order(), p)) {
    throw InvalidInput("S n H is not Sylow in H");
  }
  auto L = SubgroupLattice::enumerate(S, p, caps);
  auto F = FusionSystem::realized(G, L);
  auto E = FusionSystem::realized(H, L->restricted_to(T));
  return RealizedPair{G, H, p, std::move(S), std::move(T), std::move(F), std::move(E)};
}

}  // namespace fusionkit
