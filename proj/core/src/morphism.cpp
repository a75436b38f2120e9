#include "fusionkit/morphism.hpp"

#include <sstream>

#include "fusionkit/error.hpp"

namespace fusionkit {

Morphism::Morphism(Subgroup source, std::vector<Elem> images)
    : source_(std::move(source)), images_(std::move(images)) {
  if (images_.size() != source_.order()) {
    throw InvalidInput("morphism image table does not match its source");
  }
}

Morphism Morphism::identity(Subgroup const& source) {
  auto m = source.members();
  return Morphism(source, std::vector<Elem>(m.begin(), m.end()));
}

Morphism Morphism::conjugation(Subgroup const& source, Elem g) {
  auto const& G = source.group();
  std::vector<Elem> images;
  images.reserve(source.order());
  for (Elem x : source.members()) images.push_back(G.conj(x, g));
  return Morphism(source, std::move(images));
}

Elem Morphism::operator()(Elem x) const {
  std::size_t pos = source_.position(x);
  if (pos == Subgroup::npos) {
    throw InvalidInput("element " + source_.group().label(x) +
                       " outside morphism source");
  }
  return images_[pos];
}

Subgroup Morphism::image() const {
  return Subgroup(source_.parent(), images_);
}

Morphism Morphism::restrict(Subgroup const& sub) const {
  std::vector<Elem> images;
  images.reserve(sub.order());
  for (Elem x : sub.members()) images.push_back((*this)(x));
  return Morphism(sub, std::move(images));
}

Morphism Morphism::then(Morphism const& next) const {
  std::vector<Elem> images;
  images.reserve(images_.size());
  for (Elem y : images_) images.push_back(next(y));
  return Morphism(source_, std::move(images));
}

Morphism Morphism::inverse() const {
  Subgroup img = image();
  if (img.order() != source_.order()) {
    throw InvalidInput("inverse of a non-injective morphism");
  }
  std::vector<Elem> images(img.order());
  auto members = source_.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    images[img.position(images_[i])] = members[i];
  }
  return Morphism(img, std::move(images));
}

bool Morphism::is_homomorphism() const {
  auto const& G = source_.group();
  auto members = source_.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j < members.size(); ++j) {
      Elem prod = G.mul(members[i], members[j]);
      if ((*this)(prod) != G.mul(images_[i], images_[j])) return false;
    }
  }
  return true;
}

bool Morphism::is_injective() const {
  return image().order() == source_.order();
}

bool Morphism::is_identity() const {
  auto members = source_.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (images_[i] != members[i]) return false;
  }
  return true;
}

std::string Morphism::to_string() const {
  std::ostringstream out;
  auto const& G = source_.group();
  auto members = source_.members();
  out << '[';
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out << ", ";
    out << G.label(members[i]) << " -> " << G.label(images_[i]);
  }
  out << ']';
  return out.str();
}

std::size_t MorphismHash::operator()(Morphism const& m) const noexcept {
  std::size_t h = m.source().hash();
  for (Elem x : m.images()) h = h * 1000003u ^ x;
  return h;
}

}  // namespace fusionkit
