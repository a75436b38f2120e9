#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fusionkit/caps.hpp"
#include "fusionkit/fusion_system.hpp"

namespace fusionkit {

/// The centric linking system of a realized fusion system F_S(G), with
/// Mor(P, Q) = O_p'(C_G(P)) \ T_G(P, Q).  Morphisms are right cosets
/// written by their least member; composition is [g][h] = [gh].
///
/// Hom-sets between arbitrary subgroups of S (not only objects) are
/// available through the *_extended calls, using the same quotient.
class LinkingSystem {
 public:
  struct Arrow {
    int source = 0;
    int target = 0;
    Elem rep = 0;
    friend bool operator==(Arrow const&, Arrow const&) = default;
  };

  /// F must be realized by G.  Without an explicit object list the
  /// objects are the F-centric subgroups of S.  Objects are checked to be
  /// p-centric (C_G(P) = Z(P) x O_p'(C_G(P))) and closed under
  /// F-conjugacy; composition is checked to be well defined.
  static LinkingSystem build(FusionSystem const& F,
                             std::optional<std::vector<Subgroup>> objects = std::nullopt);

  FusionSystem const& fusion() const { return d_->F; }
  Subgroup const& G() const { return d_->F.ambient(); }
  Subgroup const& S() const { return d_->F.S(); }

  std::size_t object_count() const { return d_->objects.size(); }
  Subgroup const& object(int i) const { return d_->objects.at(static_cast<std::size_t>(i)); }
  std::optional<int> object_index(Subgroup const& P) const;
  /// O_p'(C_G(P)) for an object.
  Subgroup const& kernel(int i) const { return d_->kernels.at(static_cast<std::size_t>(i)); }

  /// Sorted coset representatives of Mor(P, Q).
  std::span<Elem const> morphisms(int P, int Q) const {
    return d_->mor.at(static_cast<std::size_t>(P) * object_count() + static_cast<std::size_t>(Q));
  }
  std::optional<std::size_t> morphism_index(Arrow const& a) const;
  std::size_t morphism_count() const;

  Elem canonical(int P, Elem g) const;
  Arrow compose(Arrow const& a, Arrow const& b) const;
  Arrow identity(int P) const { return {P, P, 0}; }
  Arrow inclusion(int P, int Q) const;
  Arrow delta(int P, Elem g) const { return {P, P, canonical(P, g)}; }
  /// Object index of P^g, the target of the isomorphism [g] out of P.
  int image_object(int P, Elem g) const;
  bool is_isomorphism(Arrow const& a) const;
  /// pi: [g] -> c_g restricted to the source.
  Morphism project(Arrow const& a) const;

  /// O_p'(C_G(P)) for any subgroup P of S.
  Subgroup kernel_extended(Subgroup const& P) const;
  Elem canonical_extended(Subgroup const& P, Elem g) const;
  /// Least representatives of O_p'(C_G(P)) \ T_G(P, Q) for any P, Q <= S.
  std::vector<Elem> morphisms_extended(Subgroup const& P, Subgroup const& Q) const;
  /// Aut_L(P) = N_G(P) / O_p'(C_G(P)).
  std::vector<Elem> automorphisms_extended(Subgroup const& P) const {
    return morphisms_extended(P, P);
  }

  std::string arrow_string(Arrow const& a) const;

 private:
  struct Data {
    FusionSystem F;
    std::vector<Subgroup> objects;
    std::vector<Subgroup> kernels;
    std::vector<std::vector<Elem>> mor;
  };
  explicit LinkingSystem(std::shared_ptr<Data const> d) : d_(std::move(d)) {}
  std::shared_ptr<Data const> d_;
};

}  // namespace fusionkit
