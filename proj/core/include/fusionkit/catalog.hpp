#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fusionkit/caps.hpp"
#include "fusionkit/check.hpp"
#include "fusionkit/fusion_subsystems.hpp"
#include "fusionkit/pair.hpp"
#include "fusionkit/permutation.hpp"

namespace fusionkit {

/// Group specs:
///   sym:n  alt:n  cyclic:n  dihedral:n (order n)  klein4
///   product:(spec,spec,...)   direct product on disjoint point blocks
///   file:path                 group file, see group_io.hpp
///   example:weakly-normal     the group S X of order 576 on 12 points
/// Pair specs: pair:(G-spec,H-spec,p).  H is embedded into G by its
/// permutations, padded with fixed points.
struct GroupRecipe {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
};

GroupRecipe group_recipe(std::string_view spec, Caps const& caps = {});
GroupPtr build_group(std::string_view spec, Caps const& caps = {});

struct PairSpec {
  std::string G;
  std::string H;
  unsigned p = 0;

  std::string to_string() const;
};

PairSpec parse_pair_spec(std::string_view spec);
RealizedPair build_pair(PairSpec const& spec, Caps const& caps = {});
RealizedPair build_pair(std::string_view spec, Caps const& caps = {});

/// A_4 x A_4 x A_4 on the blocks {1..4}, {5..8}, {9..12}, with S_i the
/// Klein four-group of block i, x_i the 3-cycle on the first three points
/// of block i, X = <x1 x2, x1 x3>, G = S X, F = F_S(G),
/// F1 = F_{S1 S2}(<S1, S2, x1 x2>), F2 = F_{S1 S3}(<S1, S3, x1 x3>) and
/// E = F1 n F2 on S1.
struct WeaklyNormalExample {
  Subgroup ambient;
  Subgroup G;
  Subgroup S;
  Subgroup S1, S2, S3;
  Subgroup H1;
  Subgroup X;
  Elem x1 = 0, x2 = 0, x3 = 0;
  FusionSystem F;
  FusionSystem F1;
  FusionSystem F2;
  FusionSystem E;
};

WeaklyNormalExample example_weakly_normal(Caps const& caps = {});

struct ExampleRegression {
  std::vector<Check> checks;
  NormalityReport normality;
  CentralizerSet centralizing_set;

  bool passed() const { return all_passed(checks); }
};

ExampleRegression regression_example_weakly_normal(Caps const& caps = {});

struct CatalogGroup {
  std::string spec;
  unsigned p = 0;
};

/// Groups (with a prime) used by the group-level suites.
std::vector<CatalogGroup> const& default_groups();
/// Normal pairs used by the pair-level suites.
std::vector<std::string> const& default_pairs();

}  // namespace fusionkit
