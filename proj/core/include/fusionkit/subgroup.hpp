#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "fusionkit/group_table.hpp"

namespace fusionkit {

/// A subgroup of a fixed GroupTable, stored as its sorted member list plus
/// a membership bitset.  Cheap to copy (shared immutable payload).
///
/// The constructor trusts its input to be closed; use
/// `generate_subgroup` or `is_closed` when that is not known.
class Subgroup {
 public:
  Subgroup() = default;
  Subgroup(GroupPtr parent, std::vector<Elem> members);

  static Subgroup trivial(GroupPtr parent);
  static Subgroup whole(GroupPtr parent);

  bool valid() const noexcept { return static_cast<bool>(d_); }
  GroupPtr const& parent() const noexcept { return d_->parent; }
  GroupTable const& group() const noexcept { return *d_->parent; }

  std::span<Elem const> members() const noexcept { return d_->members; }
  std::size_t order() const noexcept { return d_->members.size(); }

  bool contains(Elem x) const noexcept {
    return (d_->bits[x >> 6] >> (x & 63)) & 1u;
  }
  /// Subset test; both subgroups must share a parent table.
  bool contains(Subgroup const& other) const noexcept;

  /// Position of x in members(), or npos.
  std::size_t position(Elem x) const noexcept;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::vector<std::uint64_t> const& bits() const noexcept { return d_->bits; }
  std::size_t hash() const noexcept { return d_->hash; }

  friend bool operator==(Subgroup const& a, Subgroup const& b) noexcept {
    if (a.d_ == b.d_) return true;
    if (!a.d_ || !b.d_) return false;
    return a.d_->hash == b.d_->hash && a.d_->bits == b.d_->bits;
  }

  /// "{e, (1,2), ...}" using the parent's labels.
  std::string to_string() const;

 private:
  struct Data {
    GroupPtr parent;
    std::vector<Elem> members;
    std::vector<std::uint64_t> bits;
    std::size_t hash = 0;
  };
  std::shared_ptr<Data const> d_;
};

struct SubgroupHash {
  std::size_t operator()(Subgroup const& s) const noexcept { return s.hash(); }
};

}  // namespace fusionkit
