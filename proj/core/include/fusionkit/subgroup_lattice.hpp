#pragma once

#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "fusionkit/caps.hpp"
#include "fusionkit/subgroup.hpp"

namespace fusionkit {

class SubgroupLattice;
using LatticePtr = std::shared_ptr<SubgroupLattice const>;

/// Every subgroup of a finite p-group, enumerated by layered extension:
/// each subgroup of order p^(k+1) is P<x> for a subgroup P of order p^k
/// and some x in N(P) \ P with x^p in P.
///
/// Ids are dense and ordered by (order, member list), so id 0 is the
/// trivial subgroup and the last id is the whole group.
class SubgroupLattice {
 public:
  /// Throws InvalidInput if `top` is not a p-group, CapError above
  /// caps.max_p_group_order or caps.max_subgroups.
  static LatticePtr enumerate(Subgroup const& top, unsigned p,
                              Caps const& caps = {});

  /// The lattice of subgroups of `sub`, which must be a member of this
  /// lattice.  Ids are renumbered.
  LatticePtr restricted_to(Subgroup const& sub) const;

  std::size_t size() const noexcept { return subgroups_.size(); }
  unsigned prime() const noexcept { return p_; }
  Subgroup const& at(int id) const { return subgroups_.at(static_cast<std::size_t>(id)); }
  Subgroup const& top() const { return subgroups_.back(); }
  int top_id() const noexcept { return static_cast<int>(subgroups_.size()) - 1; }
  std::span<Subgroup const> all() const noexcept { return subgroups_; }

  std::optional<int> find(Subgroup const& sub) const;
  /// Like find() but throws InvalidInput when absent.
  int id_of(Subgroup const& sub) const;

  /// Ids of the maximal (index p) subgroups.
  std::span<int const> maximal_subgroups(int id) const { return maximal_.at(static_cast<std::size_t>(id)); }
  /// Ids of every subgroup contained in `id` (including itself).
  std::vector<int> subgroups_of(int id) const;

  std::size_t normalizer_order(int id) const { return normalizer_order_.at(static_cast<std::size_t>(id)); }
  std::size_t centralizer_order(int id) const { return centralizer_order_.at(static_cast<std::size_t>(id)); }

 private:
  SubgroupLattice() = default;
  void index_and_measure();

  unsigned p_ = 0;
  std::vector<Subgroup> subgroups_;
  std::vector<std::vector<int>> maximal_;
  std::vector<std::size_t> normalizer_order_;
  std::vector<std::size_t> centralizer_order_;
  std::unordered_map<Subgroup, int, SubgroupHash> index_;
};

}  // namespace fusionkit
