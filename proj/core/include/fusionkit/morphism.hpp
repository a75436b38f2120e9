#pragma once

#include <span>
#include <string>
#include <vector>

#include "fusionkit/subgroup.hpp"

namespace fusionkit {

/// A group homomorphism from a subgroup into the same parent table,
/// stored as the image of every source member (aligned with
/// `source().members()`).  Maps act on the right: composition
/// `f.then(g)` applies f first.
class Morphism {
 public:
  Morphism() = default;
  Morphism(Subgroup source, std::vector<Elem> images);

  static Morphism identity(Subgroup const& source);
  /// x -> g^-1 x g restricted to `source`.
  static Morphism conjugation(Subgroup const& source, Elem g);

  Subgroup const& source() const noexcept { return source_; }
  std::span<Elem const> images() const noexcept { return images_; }

  /// Image of a source member; throws InvalidInput for non-members.
  Elem operator()(Elem x) const;

  /// Image subgroup (valid for homomorphisms).
  Subgroup image() const;

  Morphism restrict(Subgroup const& sub) const;
  /// Left-to-right composite "this, then next".  The image of this map
  /// must lie inside next.source().
  Morphism then(Morphism const& next) const;
  /// Inverse of an injective map, defined on its image.
  Morphism inverse() const;

  bool is_homomorphism() const;
  bool is_injective() const;
  bool is_identity() const;

  friend bool operator==(Morphism const& a, Morphism const& b) {
    return a.source_ == b.source_ && a.images_ == b.images_;
  }

  std::string to_string() const;

 private:
  Subgroup source_;
  std::vector<Elem> images_;
};

struct MorphismHash {
  std::size_t operator()(Morphism const& m) const noexcept;
};

}  // namespace fusionkit
