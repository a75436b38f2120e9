#pragma once

#include <string>
#include <vector>

#include "fusionkit/catalog.hpp"
#include "fusionkit/group_ops.hpp"
#include "fusionkit/permutation.hpp"
#include "oracles.hpp"

namespace testing_helpers {

using namespace fusionkit;
using Cycles = std::vector<std::vector<std::uint32_t>>;

inline Elem el(GroupPtr const& t, Cycles const& cycles) {
  auto idx = t->index_of(perm::from_cycles(t->degree(), cycles));
  if (!idx) throw std::runtime_error("element not in group");
  return *idx;
}

inline Subgroup gen(GroupPtr const& t, std::vector<Cycles> const& gens) {
  std::vector<Elem> e;
  for (auto const& c : gens) e.push_back(el(t, c));
  return generate_subgroup(t, e);
}

inline Subgroup whole(std::string const& spec) { return Subgroup::whole(build_group(spec)); }

/// Small normal pairs cheap enough for the brute-force oracles.
inline std::vector<std::string> small_pairs() {
  return {"pair:(sym:4,alt:4,2)",
          "pair:(product:(alt:4,cyclic:2),alt:4,2)",
          "pair:(sym:4,klein4,2)",
          "pair:(dihedral:8,cyclic:4,2)",
          "pair:(product:(sym:3,cyclic:3),sym:3,3)",
          "pair:(sym:3,cyclic:3,3)",
          "pair:(sym:4,sym:4,2)"};
}

}  // namespace testing_helpers
