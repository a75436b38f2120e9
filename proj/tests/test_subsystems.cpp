#include <gtest/gtest.h>

#include "fusionkit/error.hpp"
#include "fusionkit/fusion_checks.hpp"
#include "fusionkit/fusion_subsystems.hpp"
#include "fusionkit/pair.hpp"
#include "helpers.hpp"

using namespace testing_helpers;

namespace {

struct Realized {
  Subgroup G;
  Subgroup S;
  FusionSystem F;
};

Realized realize(std::string const& spec, unsigned p) {
  auto G = whole(spec);
  auto S = sylow_subgroup(G, p);
  return {G, S, FusionSystem::realized(G, S, p)};
}

std::vector<std::pair<std::string, unsigned>> systems() {
  return {{"sym:4", 2}, {"alt:4", 2}, {"dihedral:8", 2}, {"sym:5", 2},
          {"product:(alt:4,cyclic:2)", 2}, {"product:(sym:3,cyclic:3)", 3},
          {"product:(sym:3,sym:3)", 3}, {"sym:6", 2}};
}

Subgroup from_members(GroupPtr const& t, std::vector<Elem> const& m) { return generate_subgroup(t, m); }

/// {g in N_G(R) : c_g|R in K}
Subgroup k_normalizer_group(Subgroup const& G, Subgroup const& R, std::vector<Morphism> const& K) {
  std::vector<Elem> out;
  auto const N = normalizer(G, R);
  for (Elem g : N.members()) {
    if (std::find(K.begin(), K.end(), Morphism::conjugation(R, g)) != K.end()) out.push_back(g);
  }
  return from_members(G.parent(), out);
}

TEST(CentralizerSystem, MatchesRealizedCentralizer) {
  std::size_t compared = 0;
  for (auto const& [spec, p] : systems()) {
    auto r = realize(spec, p);
    for (auto const& X : r.F.lattice()->all()) {
      auto cs = centralizer_system(r.F, X);
      EXPECT_EQ(cs.substitution.has_value(), cs.X != X);
      auto const CG = centralizer(r.G, cs.X);
      auto const CS = centralizer(r.S, cs.X);
      ASSERT_EQ(cs.system.S(), CS);
      auto oracle = FusionSystem::realized(CG, cs.system.lattice());
      EXPECT_TRUE(cs.system.same_morphisms(oracle)) << spec << " " << X.to_string();
      ++compared;
    }
  }
  EXPECT_GE(compared, 5u);
}

TEST(CentralizerSystem, SubstitutionIsFullyCentralized) {
  auto r = realize("sym:5", 2);
  bool substituted = false;
  for (std::size_t id = 0; id < r.F.lattice()->size(); ++id) {
    auto const& X = r.F.subgroup(static_cast<int>(id));
    auto cs = centralizer_system(r.F, X);
    EXPECT_TRUE(is_fully_centralized(r.F, r.F.id(cs.X)));
    if (cs.substitution) {
      substituted = true;
      EXPECT_EQ(cs.substitution->source(), X);
      EXPECT_EQ(cs.substitution->image(), cs.X);
      EXPECT_TRUE(r.F.contains(*cs.substitution));
    }
  }
  EXPECT_TRUE(substituted);
}

TEST(CentralizerSystem, TrivialAndCentralSubgroups) {
  auto r = realize("dihedral:8", 2);
  auto one = centralizer_system(r.F, Subgroup::trivial(r.G.parent()));
  EXPECT_TRUE(one.system.same_morphisms(r.F));
  auto z = centralizer_system(r.F, center(r.S));
  EXPECT_TRUE(z.system.same_morphisms(r.F));
}

TEST(KNormalizer, Specializations) {
  for (auto const& [spec, p] : systems()) {
    auto r = realize(spec, p);
    for (std::size_t id = 0; id < r.F.lattice()->size(); ++id) {
      if (!is_fully_normalized(r.F, static_cast<int>(id))) continue;
      auto const& R = r.F.subgroup(static_cast<int>(id));
      auto C = k_normalizer_system(r.F, R, {Morphism::identity(R)});
      EXPECT_TRUE(C.same_morphisms(centralizer_system(r.F, R).system)) << spec;
      auto all = r.F.automorphisms(static_cast<int>(id));
      auto N = k_normalizer_system(r.F, R, all);
      EXPECT_TRUE(N.same_morphisms(normalizer_system(r.F, R))) << spec;
      EXPECT_EQ(N.S(), normalizer(r.S, R));
    }
  }
}

TEST(KNormalizer, MatchesRealizedKNormalizer) {
  for (auto const& [spec, p] : systems()) {
    auto r = realize(spec, p);
    for (std::size_t id = 0; id < r.F.lattice()->size(); ++id) {
      if (!is_fully_normalized(r.F, static_cast<int>(id))) continue;
      auto const& R = r.F.subgroup(static_cast<int>(id));
      auto autos = r.F.automorphisms(static_cast<int>(id));
      for (auto const& K : {std::vector<Morphism>{Morphism::identity(R)}, autos,
                            op_residual(autos, p)}) {
        auto N = k_normalizer_system(r.F, R, K);
        auto NG = k_normalizer_group(r.G, R, K);
        EXPECT_EQ(N.S(), intersection(NG, r.S));
        auto oracle = FusionSystem::realized(NG, N.lattice());
        EXPECT_TRUE(N.same_morphisms(oracle)) << spec << " " << R.to_string();
        EXPECT_TRUE(is_saturated(N).saturated);
      }
    }
  }
}

TEST(KNormalizer, RejectsNonGroup) {
  auto r = realize("sym:4", 2);
  auto V4 = gen(r.G.parent(), {{{1, 2}, {3, 4}}, {{1, 3}, {2, 4}}});
  auto autos = r.F.automorphisms(V4);
  ASSERT_EQ(autos.size(), 6u);
  std::vector<Morphism> K;
  for (auto const& a : autos) {
    if (morphism_order(a) == 3) K.push_back(a);
  }
  ASSERT_EQ(K.size(), 2u);
  EXPECT_THROW(k_normalizer_system(r.F, V4, K), InvalidInput);
}

TEST(Intersection, Examples) {
  auto r = realize("sym:4", 2);
  EXPECT_TRUE(intersect_fusion_systems(r.F, r.F).same_morphisms(r.F));
  auto inner = FusionSystem::inner(r.F.lattice());
  EXPECT_TRUE(intersect_fusion_systems(r.F, inner).same_morphisms(inner));
  auto pr = build_pair("pair:(sym:4,alt:4,2)");
  auto innerT = FusionSystem::inner(pr.E.lattice());
  EXPECT_TRUE(intersect_fusion_systems(pr.E, innerT).same_morphisms(innerT));
  EXPECT_THROW(intersect_fusion_systems(pr.F, pr.E), InvalidInput);
}

TEST(Intersection, MorphismsAreCommon) {
  auto ex = example_weakly_normal();
  EXPECT_TRUE(ex.E.contained_in(ex.F1));
  EXPECT_TRUE(ex.E.contained_in(ex.F2));
  for (std::size_t id = 0; id < ex.E.lattice()->size(); ++id) {
    for (auto const& m : ex.E.homs(static_cast<int>(id))) {
      EXPECT_TRUE(ex.F1.contains(m));
      EXPECT_TRUE(ex.F2.contains(m));
    }
  }
}

TEST(PPowerIndex, WholeGroupGivesF) {
  for (auto const& [spec, p] : systems()) {
    auto r = realize(spec, p);
    EXPECT_TRUE(p_power_index_subsystem(r.F, r.S).same_morphisms(r.F)) << spec;
  }
}

TEST(PPowerIndex, S4OnV4IsA4) {
  auto r = realize("sym:4", 2);
  auto V4 = gen(r.G.parent(), {{{1, 2}, {3, 4}}, {{1, 3}, {2, 4}}});
  auto sub = p_power_index_subsystem(r.F, V4);
  auto A4 = gen(r.G.parent(), {{{1, 2, 3}}, {{2, 3, 4}}});
  auto oracle = FusionSystem::realized(A4, sub.lattice());
  EXPECT_TRUE(sub.same_morphisms(oracle));
  EXPECT_EQ(sub.automorphisms(V4).size(), 3u);
}

TEST(PPowerIndex, MatchesOpForRealizedSystems) {
  // F_{S n O^p(G)}(O^p(G)) is the minimal subsystem of p-power index
  for (auto const& [spec, p] : systems()) {
    auto r = realize(spec, p);
    auto Op = residual_subgroup(r.G, p, Residual::O_upper_p);
    auto R = intersection(Op, r.S);
    auto sub = p_power_index_subsystem(r.F, R);
    auto oracle = FusionSystem::realized(Op, sub.lattice());
    EXPECT_TRUE(sub.same_morphisms(oracle)) << spec;
    EXPECT_EQ(hyperfocal(r.F), R) << spec;
  }
}

TEST(PPowerIndex, RejectsSubgroupMissingHyperfocal) {
  auto r = realize("sym:4", 2);
  EXPECT_THROW(p_power_index_subsystem(r.F, Subgroup::trivial(r.G.parent())), InvalidInput);
}

TEST(Hyperfocal, MatchesBruteForce) {
  for (auto const& [spec, p] : systems()) {
    auto r = realize(spec, p);
    auto brute = oracle::op_upper(r.G, p);
    std::vector<Elem> meet;
    std::set_intersection(brute.begin(), brute.end(), r.S.members().begin(), r.S.members().end(),
                          std::back_inserter(meet));
    EXPECT_EQ(oracle::members(hyperfocal(r.F)), meet) << spec;
  }
}

TEST(Hyperfocal, Examples) {
  EXPECT_EQ(hyperfocal(realize("sym:4", 2).F).order(), 4u);
  EXPECT_EQ(hyperfocal(realize("alt:4", 2).F).order(), 4u);
  EXPECT_EQ(hyperfocal(realize("dihedral:8", 2).F).order(), 1u);
  EXPECT_EQ(hyperfocal(realize("sym:3", 3).F).order(), 3u);
  EXPECT_EQ(hyperfocal(realize("cyclic:6", 2).F).order(), 1u);
}

TEST(CenterOfFusionSystem, Examples) {
  EXPECT_EQ(center_of_fusion_system(realize("sym:4", 2).F).order(), 1u);
  EXPECT_EQ(center_of_fusion_system(realize("dihedral:8", 2).F).order(), 2u);
  EXPECT_EQ(center_of_fusion_system(realize("product:(alt:4,cyclic:2)", 2).F).order(), 2u);
  EXPECT_EQ(center_of_fusion_system(realize("klein4", 2).F).order(), 4u);
}

TEST(CenterOfFusionSystem, MatchesBruteForce) {
  for (auto const& [spec, p] : systems()) {
    if (spec == "sym:6") continue;
    auto r = realize(spec, p);
    auto brute = oracle::centralizer_direct(r.G, r.G, r.S, r.S);
    EXPECT_EQ(oracle::members(center_of_fusion_system(r.F)), brute) << spec;
  }
}

TEST(CentralizerSet, MatchesBruteForceOnSmallPairs) {
  for (auto const& spec : small_pairs()) {
    auto pr = build_pair(spec);
    auto set = centralizer_subgroup_direct(pr.F, pr.E);
    auto brute = oracle::centralizer_direct(pr.G, pr.H, pr.S, pr.T);
    EXPECT_EQ(set.members, brute) << spec;
    EXPECT_TRUE(set.is_subgroup) << spec;
    ASSERT_TRUE(set.subgroup.has_value());
    EXPECT_TRUE(set.strongly_closed.value_or(false)) << spec;
  }
}

TEST(CentralizerSet, Examples) {
  EXPECT_EQ(centralizer_subgroup_direct(build_pair("pair:(sym:4,alt:4,2)").F,
                                        build_pair("pair:(sym:4,alt:4,2)").E).members.size(), 1u);
  auto pr = build_pair("pair:(product:(alt:4,cyclic:2),alt:4,2)");
  EXPECT_EQ(centralizer_subgroup_direct(pr.F, pr.E).members.size(), 2u);
  auto d8 = build_pair("pair:(dihedral:8,cyclic:4,2)");
  EXPECT_EQ(centralizer_subgroup_direct(d8.F, d8.E).members.size(), 4u);
}

TEST(ExtendsFixing, BasicCases) {
  auto r = realize("dihedral:8", 2);
  auto Z = center(r.S);
  for (std::size_t id = 0; id < r.F.lattice()->size(); ++id) {
    auto const& P = r.F.subgroup(static_cast<int>(id));
    for (auto const& m : r.F.homs(static_cast<int>(id))) {
      EXPECT_TRUE(extends_fixing(r.F, m, Z));
      EXPECT_TRUE(extends_fixing(r.F, m, Subgroup::trivial(r.G.parent())));
    }
    (void)P;
  }
  EXPECT_TRUE(centralized_by(r.F, r.F, Z));
}

}  // namespace
