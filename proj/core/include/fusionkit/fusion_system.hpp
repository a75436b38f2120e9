#pragma once

#include <memory>
#include <optional>
#include <unordered_map>
#include <span>
#include <string>
#include <vector>

#include "fusionkit/morphism.hpp"
#include "fusionkit/subgroup_lattice.hpp"

namespace fusionkit {

/// A fusion system on a finite p-group S.
///
/// Hom-sets are stored completely: for every subgroup P of S the list
/// Hom(P, S) of injective morphisms, sorted by image table.  Hom(P, Q) is
/// the sub-list with image inside Q.  The realized flavor F_S(G) also keeps
/// the ambient group G and a conjugating witness per morphism; the
/// abstract flavor is checked for the fusion-system axioms at
/// construction.
///
/// Values are immutable and cheap to copy.
class FusionSystem {
 public:
  enum class Verify { full, none };

  /// F_S(G): Hom(P, Q) = { c_g|P : g in G, P^g <= Q }.
  static FusionSystem realized(Subgroup const& G, Subgroup const& S,
                               unsigned p, Caps const& caps = {});
  static FusionSystem realized(Subgroup const& G, LatticePtr lattice);
  /// F_S(S).
  static FusionSystem inner(LatticePtr lattice);

  /// Abstract system from explicit hom lists, homs[id] = Hom(P_id, S).
  /// Duplicates are merged.  With Verify::full a VerificationError names
  /// the first violated axiom (injective homomorphism, identity and inner
  /// maps present, closure under restriction and composition).
  static FusionSystem from_homs(LatticePtr lattice,
                                std::vector<std::vector<Morphism>> homs,
                                Verify verify = Verify::full);

  /// Smallest fusion system on the lattice's top group containing the
  /// inner maps and every seed (closed under restriction, composition
  /// and inverses of isomorphisms).
  static FusionSystem generated(LatticePtr lattice,
                                std::vector<Morphism> const& seeds);

  Subgroup const& S() const { return d_->lattice->top(); }
  unsigned p() const { return d_->lattice->prime(); }
  LatticePtr const& lattice() const { return d_->lattice; }
  int id(Subgroup const& P) const { return d_->lattice->id_of(P); }
  Subgroup const& subgroup(int id) const { return d_->lattice->at(id); }

  bool is_realized() const { return d_->ambient.has_value(); }
  /// The realizing group G; throws InvalidInput for abstract systems.
  Subgroup const& ambient() const;

  /// Hom(P, S) for P = subgroup(id).
  std::span<Morphism const> homs(int id) const { return d_->homs.at(static_cast<std::size_t>(id)); }
  int image_id(int id, std::size_t k) const { return d_->image_ids.at(static_cast<std::size_t>(id)).at(k); }
  /// Conjugating element realizing homs(id)[k] (realized flavor only).
  Elem witness(int id, std::size_t k) const;

  std::optional<std::size_t> find(int id, std::span<Elem const> images) const;
  bool contains(Morphism const& m) const;

  std::vector<Morphism> hom_set(Subgroup const& P, Subgroup const& Q) const;
  std::vector<Morphism> automorphisms(int id) const;
  std::vector<Morphism> automorphisms(Subgroup const& P) const { return automorphisms(id(P)); }

  /// F-conjugacy class of P as sorted lattice ids.
  std::span<int const> conjugacy_class(int id) const;
  std::size_t class_count() const { return d_->classes.size(); }
  std::span<int const> class_members(std::size_t cls) const { return d_->classes.at(cls); }
  std::size_t class_index(int id) const { return d_->class_of.at(static_cast<std::size_t>(id)); }

  std::size_t morphism_count() const;

  /// Same underlying group and identical hom-sets.
  bool same_morphisms(FusionSystem const& other) const;
  /// Every morphism of this system lies in `other` (same S or S inside
  /// other's S).
  bool contained_in(FusionSystem const& other) const;

 private:
  struct ImagesHash {
    std::size_t operator()(std::vector<Elem> const& v) const noexcept {
      std::size_t h = 0x9e3779b97f4a7c15ull;
      for (Elem x : v) h = (h ^ x) * 0x100000001b3ull;
      return h;
    }
  };
  struct Data {
    LatticePtr lattice;
    std::optional<Subgroup> ambient;
    std::vector<std::vector<Morphism>> homs;
    std::vector<std::vector<int>> image_ids;
    std::vector<std::vector<Elem>> witnesses;
    std::vector<std::unordered_map<std::vector<Elem>, std::size_t, ImagesHash>> lookup;
    std::vector<std::size_t> class_of;
    std::vector<std::vector<int>> classes;
  };

  explicit FusionSystem(std::shared_ptr<Data const> d) : d_(std::move(d)) {}
  static FusionSystem finish(std::shared_ptr<Data> d);

  std::shared_ptr<Data const> d_;
};

}  // namespace fusionkit
