#include "fusionkit/subgroup_lattice.hpp"

#include <algorithm>
#include <numeric>

#include "fusionkit/error.hpp"
#include "fusionkit/group_ops.hpp"

namespace fusionkit {

LatticePtr SubgroupLattice::enumerate(Subgroup const& top, unsigned p,
                                      Caps const& caps) {
  if (!is_prime(p)) throw InvalidInput("p must be prime");
  if (!is_p_group(top, p)) {
    throw InvalidInput("subgroup lattice requested for a non-p-group of order " +
                       std::to_string(top.order()));
  }
  if (top.order() > caps.max_p_group_order) {
    throw CapError("p-group order " + std::to_string(top.order()) +
                   " exceeds cap " + std::to_string(caps.max_p_group_order));
  }
  auto const& G = top.group();
  auto lattice = std::shared_ptr<SubgroupLattice>(new SubgroupLattice());
  lattice->p_ = p;

  std::vector<Subgroup> all{Subgroup::trivial(top.parent())};
  std::unordered_map<Subgroup, int, SubgroupHash> seen{{all.front(), 0}};
  std::vector<std::vector<int>> maximal{{}};
  std::vector<int> layer{0};

  while (!layer.empty()) {
    std::vector<int> next;
    for (int id : layer) {
      Subgroup const P = all[static_cast<std::size_t>(id)];
      if (P.order() == top.order()) continue;
      Subgroup N = normalizer(top, P);
      std::vector<bool> covered(G.order(), false);
      for (Elem x : P.members()) covered[x] = true;
      for (Elem x : N.members()) {
        if (covered[x] || !P.contains(G.pow(x, p))) continue;
        std::vector<Elem> members;
        members.reserve(P.order() * p);
        Elem power = 0;
        for (unsigned i = 0; i < p; ++i) {
          for (Elem y : P.members()) members.push_back(G.mul(y, power));
          power = G.mul(power, x);
        }
        Subgroup Q(top.parent(), std::move(members));
        for (Elem y : Q.members()) covered[y] = true;
        auto [it, inserted] = seen.emplace(Q, static_cast<int>(all.size()));
        if (inserted) {
          all.push_back(Q);
          maximal.emplace_back();
          next.push_back(it->second);
          if (all.size() > caps.max_subgroups) {
            throw CapError("subgroup count exceeds cap of " +
                           std::to_string(caps.max_subgroups));
          }
        }
        maximal[static_cast<std::size_t>(it->second)].push_back(id);
      }
    }
    layer = std::move(next);
  }

  std::vector<int> order(all.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    auto const& A = all[static_cast<std::size_t>(a)];
    auto const& B = all[static_cast<std::size_t>(b)];
    if (A.order() != B.order()) return A.order() < B.order();
    return std::lexicographical_compare(A.members().begin(), A.members().end(),
                                        B.members().begin(), B.members().end());
  });
  std::vector<int> rank(all.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[static_cast<std::size_t>(order[i])] = static_cast<int>(i);

  for (int old : order) {
    lattice->subgroups_.push_back(all[static_cast<std::size_t>(old)]);
    std::vector<int> mx;
    for (int m : maximal[static_cast<std::size_t>(old)]) mx.push_back(rank[static_cast<std::size_t>(m)]);
    std::sort(mx.begin(), mx.end());
    mx.erase(std::unique(mx.begin(), mx.end()), mx.end());
    lattice->maximal_.push_back(std::move(mx));
  }
  lattice->index_and_measure();
  return lattice;
}

void SubgroupLattice::index_and_measure() {
  index_.clear();
  for (std::size_t i = 0; i < subgroups_.size(); ++i) {
    index_.emplace(subgroups_[i], static_cast<int>(i));
  }
  Subgroup const& S = subgroups_.back();
  normalizer_order_.clear();
  centralizer_order_.clear();
  for (auto const& P : subgroups_) {
    normalizer_order_.push_back(normalizer(S, P).order());
    centralizer_order_.push_back(centralizer(S, P).order());
  }
}

LatticePtr SubgroupLattice::restricted_to(Subgroup const& sub) const {
  int const top = id_of(sub);
  auto lattice = std::shared_ptr<SubgroupLattice>(new SubgroupLattice());
  lattice->p_ = p_;
  std::vector<int> remap(subgroups_.size(), -1);
  for (std::size_t i = 0; i < subgroups_.size(); ++i) {
    if (sub.contains(subgroups_[i])) {
      remap[i] = static_cast<int>(lattice->subgroups_.size());
      lattice->subgroups_.push_back(subgroups_[i]);
    }
  }
  for (std::size_t i = 0; i < subgroups_.size(); ++i) {
    if (remap[i] < 0) continue;
    std::vector<int> mx;
    for (int m : maximal_[i]) mx.push_back(remap[static_cast<std::size_t>(m)]);
    lattice->maximal_.push_back(std::move(mx));
  }
  (void)top;
  lattice->index_and_measure();
  return lattice;
}

std::optional<int> SubgroupLattice::find(Subgroup const& sub) const {
  auto it = index_.find(sub);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int SubgroupLattice::id_of(Subgroup const& sub) const {
  auto id = find(sub);
  if (!id) {
    throw InvalidInput("subgroup " + sub.to_string() +
                       " is not in the lattice of " + top().to_string());
  }
  return *id;
}

std::vector<int> SubgroupLattice::subgroups_of(int id) const {
  Subgroup const& P = at(id);
  std::vector<int> out;
  for (std::size_t i = 0; i < subgroups_.size(); ++i) {
    if (subgroups_[i].order() > P.order()) break;
    if (P.contains(subgroups_[i])) out.push_back(static_cast<int>(i));
  }
  return out;
}

}  // namespace fusionkit
