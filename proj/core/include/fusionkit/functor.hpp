#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fusionkit/caps.hpp"
#include "fusionkit/linking_system.hpp"

namespace fusionkit {

/// A self-map of a linking system L0: an object permutation plus, for
/// every ordered object pair (P, Q), the index of the image of each
/// morphism inside morphisms(object_map[P], object_map[Q]).
struct IsotypicalFunctor {
  std::vector<int> object_map;
  std::vector<std::vector<std::uint32_t>> arrow_map;
  bool sends_inclusions_to_inclusions = false;
  bool isotypical = false;

  LinkingSystem::Arrow apply(LinkingSystem const& L0, LinkingSystem::Arrow const& a) const;
  friend bool operator==(IsotypicalFunctor const& a, IsotypicalFunctor const& b) {
    return a.object_map == b.object_map && a.arrow_map == b.arrow_map;
  }
};

IsotypicalFunctor identity_functor(LinkingSystem const& L0);
/// "First a, then b".
IsotypicalFunctor compose(LinkingSystem const& L0, IsotypicalFunctor const& a,
                          IsotypicalFunctor const& b);
/// Identities and composition preserved, bijective on every hom-set.
bool is_functor(LinkingSystem const& L0, IsotypicalFunctor const& f);
/// Recomputes both flags of f by scanning L0.
void evaluate_flags(LinkingSystem const& L0, IsotypicalFunctor& f);

/// c_gamma for gamma = [g] in Aut_L(T): P -> P^g, [h] -> [g^-1 h g].
/// L0 lives on T = L0.S() inside the table of L; g must normalize T and
/// its conjugation must permute the objects of L0.
IsotypicalFunctor conjugation_functor(LinkingSystem const& L, LinkingSystem const& L0,
                                      Elem g);

struct ConjugationKernel {
  /// Aut_L(T) as least coset representatives.
  std::vector<Elem> aut_L_T;
  /// True when T is not an object of L and Aut_L(T) used the extended
  /// definition N_G(T) / O_p'(C_G(T)).
  bool extended = false;
  std::vector<Elem> kernel;
  /// delta_T of the given subgroup, as representatives.
  std::vector<Elem> delta_image;
  bool injective = false;
  bool equal = false;
};

ConjugationKernel kernel_of_conjugation(LinkingSystem const& L, LinkingSystem const& L0,
                                        std::span<Elem const> centralizer_members);

struct FunctorEnumeration {
  std::vector<IsotypicalFunctor> functors;
  std::size_t candidates = 0;
};

/// All isotypical self-equivalences of L0 (sending inclusions to
/// inclusions when requested), by backtracking over object bijections,
/// images of generators of the automorphism groups of class
/// representatives, transport isomorphisms and covering inclusions.
/// CapError once caps.functor_candidates complete candidates were tried.
FunctorEnumeration enumerate_isotypical_autoequivalences(LinkingSystem const& L0,
                                                        bool require_inclusions,
                                                        Caps const& caps = {});

/// eta[R] in Hom_L(alpha(R), beta(R)) for each object R of L0.
struct LNaturalWitness {
  std::vector<Elem> eta;
};

/// Searches components making alpha(phi) eta_R' = eta_R beta(phi) for all
/// phi : R -> R' in L0.  nullopt means no such family exists.
std::optional<LNaturalWitness> l_naturally_isomorphic(LinkingSystem const& L,
                                                      LinkingSystem const& L0,
                                                      IsotypicalFunctor const& alpha,
                                                      IsotypicalFunctor const& beta,
                                                      Caps const& caps = {});

/// Classes of `functors` under L-natural isomorphism, as index lists in
/// order of first occurrence.
std::vector<std::vector<std::size_t>> out_typ_classes(LinkingSystem const& L,
                                                      LinkingSystem const& L0,
                                                      std::span<IsotypicalFunctor const> functors,
                                                      Caps const& caps = {});

}  // namespace fusionkit
