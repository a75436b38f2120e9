#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "fusionkit/caps.hpp"
#include "fusionkit/permutation.hpp"

namespace fusionkit {

/// Element of a GroupTable: an index in [0, order).  Index 0 is the
/// identity.
using Elem = std::uint32_t;

class GroupTable;
using GroupPtr = std::shared_ptr<GroupTable const>;

/// A finite group given by its complete multiplication table.
///
/// Elements are dense indices.  Groups built from permutations enumerate
/// their elements in lexicographic order of the image tuple, so element 0
/// is always the identity and the numbering is reproducible.  Products are
/// right actions: for permutation groups `mul(a, b)` is "first a, then b".
///
/// Tables are immutable once built and may be shared freely across
/// threads.
class GroupTable {
 public:
  /// Closure of the given permutations.  Throws CapError if the group
  /// exceeds `caps.max_group_order`.
  static GroupPtr from_generators(std::size_t degree,
                                  std::vector<Permutation> const& generators,
                                  Caps const& caps = {});

  /// Validates and adopts an explicit Cayley table (row a, column b holds
  /// a*b).  The identity is relabelled to index 0 if necessary.  Throws
  /// InvalidInput when the table is not a group.
  static GroupPtr from_table(std::vector<std::vector<Elem>> const& table,
                             Caps const& caps = {});

  std::size_t order() const noexcept { return order_; }

  Elem mul(Elem a, Elem b) const noexcept {
    return table_[static_cast<std::size_t>(b) * order_ + a];
  }
  Elem inv(Elem a) const noexcept { return inverse_[a]; }
  static constexpr Elem identity() noexcept { return 0; }

  /// g^-1 x g
  Elem conj(Elem x, Elem g) const noexcept { return mul(mul(inv(g), x), g); }
  /// a^-1 b^-1 a b
  Elem commutator(Elem a, Elem b) const noexcept {
    return mul(mul(inv(a), inv(b)), mul(a, b));
  }
  Elem pow(Elem a, std::int64_t k) const noexcept;
  std::size_t element_order(Elem a) const noexcept { return elem_order_[a]; }

  bool has_permutations() const noexcept { return !perms_.empty(); }
  std::size_t degree() const noexcept { return degree_; }
  Permutation const& permutation(Elem a) const { return perms_.at(a); }
  std::optional<Elem> index_of(Permutation const& p) const;

  /// Human-readable label: cycle notation for permutation groups, "e" /
  /// "g<k>" otherwise.
  std::string label(Elem a) const;

  /// Full scan of the group axioms.  Associativity is checked with a
  /// generating set in the last slot, which suffices for a finite
  /// table.  Also checks the permutation realization, if present, is a
  /// faithful homomorphism.
  void verify() const;

 private:
  GroupTable() = default;
  void finish();

  std::size_t order_ = 0;
  std::size_t degree_ = 0;
  // column-major: table_[b * n + a] = a * b; 16-bit entries cap the order
  // at 65535
  std::vector<std::uint16_t> table_;
  std::vector<Elem> inverse_;
  std::vector<std::uint32_t> elem_order_;
  std::vector<Permutation> perms_;
  std::unordered_map<Permutation, Elem, perm::Hash> perm_index_;
};

}  // namespace fusionkit
