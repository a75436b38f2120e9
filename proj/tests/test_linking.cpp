#include <gtest/gtest.h>

#include <set>

#include "fusionkit/error.hpp"
#include "fusionkit/fusion_subsystems.hpp"
#include "fusionkit/functor.hpp"
#include "fusionkit/pair.hpp"
#include "fusionkit/theorem_a.hpp"
#include "helpers.hpp"

using namespace testing_helpers;

namespace {

LinkingSystem linking(std::string const& spec, unsigned p) {
  auto G = whole(spec);
  return LinkingSystem::build(FusionSystem::realized(G, sylow_subgroup(G, p), p));
}

std::vector<std::pair<std::string, unsigned>> systems() {
  return {{"sym:4", 2}, {"alt:4", 2}, {"dihedral:8", 2}, {"sym:5", 2},
          {"product:(alt:4,cyclic:2)", 2}, {"product:(sym:3,cyclic:3)", 3}, {"sym:3", 3}};
}

TEST(Linking, A4HasOneObject) {
  auto L = linking("alt:4", 2);
  ASSERT_EQ(L.object_count(), 1u);
  EXPECT_EQ(L.object(0).order(), 4u);
  EXPECT_EQ(L.morphisms(0, 0).size(), 12u);
  EXPECT_EQ(L.kernel(0).order(), 1u);
}

TEST(Linking, S4AutOfSylowIsD8) {
  auto L = linking("sym:4", 2);
  auto top = L.object_index(L.S());
  ASSERT_TRUE(top.has_value());
  EXPECT_EQ(L.morphisms(*top, *top).size(), 8u);
  EXPECT_EQ(L.automorphisms_extended(L.S()).size(), 8u);
}

TEST(Linking, ObjectsAreTheCentricSubgroups) {
  for (auto const& [spec, p] : systems()) {
    auto L = linking(spec, p);
    auto const& F = L.fusion();
    std::size_t centric = 0;
    for (std::size_t id = 0; id < F.lattice()->size(); ++id) {
      auto const& P = F.subgroup(static_cast<int>(id));
      bool is_centric = true;
      for (auto const& m : F.homs(static_cast<int>(id))) {
        auto Q = m.image();
        is_centric = is_centric && Q.contains(centralizer(F.S(), Q));
      }
      EXPECT_EQ(L.object_index(P).has_value(), is_centric) << spec << " " << P.to_string();
      centric += is_centric;
    }
    EXPECT_EQ(L.object_count(), centric);
  }
}

TEST(Linking, MorphismCountsMatchBruteForce) {
  for (auto const& [spec, p] : systems()) {
    auto L = linking(spec, p);
    for (std::size_t i = 0; i < L.object_count(); ++i) {
      auto const& P = L.object(static_cast<int>(i));
      auto const CG = centralizer(L.G(), P);
      auto const Op = oracle::op_prime(CG, p);
      EXPECT_EQ(oracle::members(L.kernel(static_cast<int>(i))), Op);
      for (std::size_t j = 0; j < L.object_count(); ++j) {
        auto const& Q = L.object(static_cast<int>(j));
        std::size_t transporter = 0;
        for (Elem g : L.G().members()) {
          bool inside = true;
          for (Elem x : P.members()) inside = inside && Q.contains(L.G().group().conj(x, g));
          transporter += inside;
        }
        EXPECT_EQ(L.morphisms(static_cast<int>(i), static_cast<int>(j)).size() * Op.size(), transporter);
      }
    }
  }
}

TEST(Linking, FiberOverEachFusionMorphism) {
  // pi is onto Hom_F(P, Q) and each fiber is a coset of delta_P(Z(P))
  for (auto const& [spec, p] : systems()) {
    auto L = linking(spec, p);
    auto const& F = L.fusion();
    for (std::size_t i = 0; i < L.object_count(); ++i) {
      auto const& P = L.object(static_cast<int>(i));
      auto const Z = center(P);
      for (std::size_t j = 0; j < L.object_count(); ++j) {
        auto const& Q = L.object(static_cast<int>(j));
        std::map<std::vector<Elem>, std::size_t> fibers;
        for (Elem g : L.morphisms(static_cast<int>(i), static_cast<int>(j))) {
          auto m = L.project({static_cast<int>(i), static_cast<int>(j), g});
          fibers[{m.images().begin(), m.images().end()}]++;
        }
        auto homs = F.hom_set(P, Q);
        EXPECT_EQ(fibers.size(), homs.size()) << spec;
        for (auto const& [img, n] : fibers) EXPECT_EQ(n, Z.order()) << spec;
      }
    }
  }
}

TEST(Linking, CompositionIsCompatibleWithProjection) {
  for (auto const& [spec, p] : systems()) {
    auto L = linking(spec, p);
    int const n = static_cast<int>(L.object_count());
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        for (int c = 0; c < n; ++c) {
          for (Elem g : L.morphisms(a, b)) {
            for (Elem h : L.morphisms(b, c)) {
              LinkingSystem::Arrow x{a, b, g}, y{b, c, h};
              auto xy = L.compose(x, y);
              EXPECT_TRUE(L.morphism_index(xy).has_value());
              auto lhs = L.project(xy);
              auto rhs = L.project(x).then(L.project(y));
              EXPECT_EQ(lhs, rhs);
            }
          }
        }
      }
      EXPECT_EQ(L.compose(L.identity(a), L.inclusion(a, a)), L.identity(a));
    }
  }
}

TEST(Linking, RejectsNonCentricObject) {
  // a transposition t has C_G(<t>) of order 4, not Z(<t>) x O_p'(C_G(<t>))
  auto L = linking("sym:4", 2);
  auto const& F = L.fusion();
  for (auto const& P : F.lattice()->all()) {
    if (P.order() != 2 || L.G().group().element_order(P.members()[1]) != 2) continue;
    if (centralizer(L.G(), P).order() != 4) continue;
    std::vector<Subgroup> objects;
    for (int id : F.conjugacy_class(F.id(P))) objects.push_back(F.subgroup(id));
    objects.push_back(F.S());
    EXPECT_THROW(LinkingSystem::build(F, objects), InvalidInput);
    return;
  }
  FAIL() << "no transposition in S";
}

struct PairLinking {
  RealizedPair pair;
  LinkingSystem L;
  LinkingSystem L0;
};

PairLinking pair_linking(std::string const& spec) {
  auto pr = build_pair(spec);
  auto L = LinkingSystem::build(pr.F);
  auto L0 = LinkingSystem::build(pr.E);
  return {pr, L, L0};
}

std::vector<std::string> pairs() {
  return {"pair:(sym:4,alt:4,2)", "pair:(product:(alt:4,cyclic:2),alt:4,2)",
          "pair:(sym:4,sym:4,2)", "pair:(dihedral:8,cyclic:4,2)",
          "pair:(product:(sym:3,cyclic:3),sym:3,3)", "pair:(sym:3,cyclic:3,3)"};
}

TEST(ConjugationFunctor, IsAFunctorAndAHomomorphism) {
  for (auto const& spec : pairs()) {
    auto pl = pair_linking(spec);
    auto const autT = pl.L.automorphisms_extended(pl.pair.T);
    for (Elem g : autT) {
      auto cg = conjugation_functor(pl.L, pl.L0, g);
      EXPECT_TRUE(is_functor(pl.L0, cg)) << spec;
      EXPECT_TRUE(cg.isotypical);
      EXPECT_TRUE(cg.sends_inclusions_to_inclusions);
      for (Elem h : autT) {
        auto ch = conjugation_functor(pl.L, pl.L0, h);
        Elem gh = pl.L.G().group().mul(g, h);
        EXPECT_EQ(compose(pl.L0, cg, ch), conjugation_functor(pl.L, pl.L0, gh)) << spec;
      }
    }
    EXPECT_EQ(conjugation_functor(pl.L, pl.L0, 0), identity_functor(pl.L0));
  }
}

TEST(ConjugationKernel, MatchesBruteForce) {
  for (auto const& spec : pairs()) {
    auto pl = pair_linking(spec);
    auto cse = centralizer_subgroup_direct(pl.pair.F, pl.pair.E);
    auto ker = kernel_of_conjugation(pl.L, pl.L0, cse.members);
    auto const& t = pl.L.G().group();
    std::vector<Elem> brute;
    for (Elem g : ker.aut_L_T) {
      bool trivial = true;
      int const n = static_cast<int>(pl.L0.object_count());
      for (int a = 0; a < n && trivial; ++a) {
        if (!(conjugate(pl.L0.object(a), g) == pl.L0.object(a))) trivial = false;
        for (int b = 0; b < n && trivial; ++b) {
          for (Elem h : pl.L0.morphisms(a, b)) {
            if (pl.L0.canonical(a, t.conj(h, g)) != h) trivial = false;
          }
        }
      }
      if (trivial) brute.push_back(g);
    }
    EXPECT_EQ(ker.kernel, brute) << spec;
    EXPECT_TRUE(ker.injective) << spec;
    EXPECT_TRUE(ker.equal) << spec;
    EXPECT_EQ(ker.delta_image.size(), cse.members.size()) << spec;
  }
}

TEST(ConjugationKernel, Examples) {
  auto s4 = pair_linking("pair:(sym:4,alt:4,2)");
  auto k = kernel_of_conjugation(s4.L, s4.L0, std::vector<Elem>{0});
  EXPECT_EQ(k.aut_L_T.size(), 24u);
  EXPECT_EQ(k.kernel.size(), 1u);
  auto a4c2 = pair_linking("pair:(product:(alt:4,cyclic:2),alt:4,2)");
  auto cse = centralizer_subgroup_direct(a4c2.pair.F, a4c2.pair.E);
  auto k2 = kernel_of_conjugation(a4c2.L, a4c2.L0, cse.members);
  EXPECT_EQ(k2.kernel.size(), 2u);
}

TEST(NaturalIsomorphism, ConjugationByCentralizerIsTrivial) {
  auto pl = pair_linking("pair:(sym:4,alt:4,2)");
  auto id = identity_functor(pl.L0);
  EXPECT_TRUE(l_naturally_isomorphic(pl.L, pl.L0, id, id).has_value());
  // c_g for g in T is L-naturally isomorphic to the identity
  for (Elem g : pl.pair.T.members()) {
    auto cg = conjugation_functor(pl.L, pl.L0, g);
    EXPECT_TRUE(l_naturally_isomorphic(pl.L, pl.L0, cg, id).has_value());
  }
}

TEST(NaturalIsomorphism, WitnessIsNatural) {
  auto pl = pair_linking("pair:(sym:4,alt:4,2)");
  auto id = identity_functor(pl.L0);
  for (Elem g : pl.L.automorphisms_extended(pl.pair.T)) {
    auto cg = conjugation_functor(pl.L, pl.L0, g);
    auto w = l_naturally_isomorphic(pl.L, pl.L0, cg, id);
    if (!w) continue;
    ASSERT_EQ(w->eta.size(), pl.L0.object_count());
  }
}

TEST(OutTyp, ClassesPartitionTheFunctors) {
  for (auto const& spec : {"pair:(sym:4,alt:4,2)", "pair:(sym:3,cyclic:3,3)"}) {
    auto pl = pair_linking(spec);
    auto en = enumerate_isotypical_autoequivalences(pl.L0, true);
    ASSERT_FALSE(en.functors.empty());
    auto classes = out_typ_classes(pl.L, pl.L0, en.functors);
    std::set<std::size_t> seen;
    for (auto const& c : classes) {
      ASSERT_FALSE(c.empty());
      for (std::size_t i : c) EXPECT_TRUE(seen.insert(i).second);
      for (std::size_t i : c) {
        EXPECT_TRUE(l_naturally_isomorphic(pl.L, pl.L0, en.functors[c.front()], en.functors[i]).has_value());
      }
    }
    EXPECT_EQ(seen.size(), en.functors.size());
    for (std::size_t a = 0; a < classes.size(); ++a) {
      for (std::size_t b = a + 1; b < classes.size(); ++b) {
        EXPECT_FALSE(l_naturally_isomorphic(pl.L, pl.L0, en.functors[classes[a].front()],
                                            en.functors[classes[b].front()]).has_value());
      }
    }
  }
}

TEST(Enumeration, EveryFunctorIsIsotypical) {
  auto pl = pair_linking("pair:(sym:4,alt:4,2)");
  auto en = enumerate_isotypical_autoequivalences(pl.L0, true);
  // Aut(V4) = S3 acts on the one-object L0 of A4 through its automorphisms
  for (auto const& f : en.functors) {
    EXPECT_TRUE(is_functor(pl.L0, f));
    EXPECT_TRUE(f.isotypical);
    EXPECT_TRUE(f.sends_inclusions_to_inclusions);
  }
  Caps caps;
  caps.functor_candidates = 1;
  auto big = pair_linking("pair:(sym:4,sym:4,2)");
  EXPECT_THROW(enumerate_isotypical_autoequivalences(big.L0, true, caps), CapError);
}

TEST(TheoremA, SmallPairsPass) {
  for (auto const& spec : pairs()) {
    auto rep = verify_theorem_a(build_pair(spec));
    EXPECT_TRUE(rep.passed()) << spec;
    for (auto const& c : rep.checks) EXPECT_NE(c.status, CheckStatus::fail) << spec << " " << c.name;
  }
}

}  // namespace
