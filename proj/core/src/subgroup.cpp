#include "fusionkit/subgroup.hpp"

#include <algorithm>
#include <sstream>

namespace fusionkit {

Subgroup::Subgroup(GroupPtr parent, std::vector<Elem> members) {
  auto d = std::make_shared<Data>();
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  d->bits.assign((parent->order() + 63) / 64, 0);
  std::size_t h = 0xcbf29ce484222325ull;
  for (Elem x : members) {
    d->bits[x >> 6] |= std::uint64_t{1} << (x & 63);
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  d->hash = h ^ members.size();
  d->members = std::move(members);
  d->parent = std::move(parent);
  d_ = std::move(d);
}

Subgroup Subgroup::trivial(GroupPtr parent) {
  return Subgroup(std::move(parent), {0});
}

Subgroup Subgroup::whole(GroupPtr parent) {
  std::vector<Elem> all(parent->order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Elem>(i);
  return Subgroup(std::move(parent), std::move(all));
}

bool Subgroup::contains(Subgroup const& other) const noexcept {
  if (other.order() > order()) return false;
  auto const& a = d_->bits;
  auto const& b = other.d_->bits;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if ((b[i] & ~a[i]) != 0) return false;
  }
  return true;
}

std::size_t Subgroup::position(Elem x) const noexcept {
  auto const& m = d_->members;
  auto it = std::lower_bound(m.begin(), m.end(), x);
  if (it == m.end() || *it != x) return npos;
  return static_cast<std::size_t>(it - m.begin());
}

std::string Subgroup::to_string() const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (Elem x : d_->members) {
    if (!first) out << ", ";
    out << d_->parent->label(x);
    first = false;
  }
  out << '}';
  return out.str();
}

}  // namespace fusionkit
