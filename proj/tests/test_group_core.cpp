#include <gtest/gtest.h>

#include "fusionkit/error.hpp"
#include "fusionkit/group_io.hpp"
#include "helpers.hpp"

using namespace testing_helpers;

namespace {

TEST(GenerateSubgroup, Examples) {
  auto s4 = build_group("sym:4");
  EXPECT_EQ(gen(s4, {{{1, 2, 3, 4}}, {{1, 3}}}).order(), 8u);
  EXPECT_EQ(generate_subgroup(s4, std::vector<Elem>{}).order(), 1u);
  auto a4 = build_group("alt:4");
  EXPECT_EQ(gen(a4, {{{1, 2}, {3, 4}}, {{1, 3}, {2, 4}}}).order(), 4u);
}

TEST(GenerateSubgroup, MatchesPermutationClosure) {
  for (auto const& g : default_groups()) {
    if (g.spec == "example:weakly-normal") continue;
    auto r = group_recipe(g.spec);
    auto t = build_group(g.spec);
    auto brute = oracle::closure(r.degree, r.generators);
    ASSERT_EQ(brute.size(), t->order()) << g.spec;
    // lexicographic numbering
    std::size_t i = 0;
    for (auto const& pm : brute) EXPECT_EQ(t->permutation(static_cast<Elem>(i++)), pm);
  }
}

TEST(GroupTable, AxiomsOnCatalog) {
  for (auto const& g : default_groups()) {
    auto t = build_group(g.spec);
    EXPECT_NO_THROW(t->verify()) << g.spec;
    EXPECT_EQ(t->permutation(0), perm::identity(t->degree()));
  }
}

TEST(GroupTable, RejectsNonGroupTable) {
  EXPECT_THROW(GroupTable::from_table({{0, 1}, {1, 1}}), InvalidInput);
  auto t = GroupTable::from_table({{0, 1}, {1, 0}});
  EXPECT_EQ(t->order(), 2u);
}

TEST(GroupTable, CapIsEnforced) {
  Caps caps;
  caps.max_group_order = 100;
  EXPECT_THROW(build_group("sym:5", caps), CapError);
}

TEST(LocalSubgroup, Examples) {
  auto s3 = whole("sym:3");
  auto a3 = gen(s3.parent(), {{{1, 2, 3}}});
  EXPECT_EQ(local_subgroup(s3, a3, LocalKind::centralizer), a3);
  EXPECT_EQ(centralizer(s3, Subgroup::trivial(s3.parent())), s3);

  auto s4 = whole("sym:4");
  auto D8 = sylow_subgroup(s4, 2);
  auto V4 = gen(s4.parent(), {{{1, 2}, {3, 4}}, {{1, 3}, {2, 4}}});
  ASSERT_TRUE(D8.contains(V4));
  EXPECT_EQ(centralizer(D8, V4), V4);
}

TEST(LocalSubgroup, MatchesBruteForce) {
  auto G = whole("sym:5");
  auto S = sylow_subgroup(G, 2);
  for (auto const& P : oracle::all_subgroups(S)) {
    Subgroup const sub(G.parent(), P);
    EXPECT_EQ(oracle::members(centralizer(G, sub)), oracle::centralizer(G, P));
    EXPECT_EQ(oracle::members(normalizer(G, sub)), oracle::normalizer(G, P));
  }
}

TEST(Sylow, Examples) {
  EXPECT_EQ(sylow_subgroup(whole("sym:4"), 2).order(), 8u);
  EXPECT_EQ(sylow_subgroup(whole("cyclic:5"), 2).order(), 1u);
  EXPECT_EQ(sylow_subgroup(whole("alt:6"), 2).order(), 8u);
}

TEST(Sylow, OrderIsFullPPart) {
  for (auto const& g : default_groups()) {
    auto G = whole(g.spec);
    for (unsigned p : {2u, 3u, 5u}) {
      auto S = sylow_subgroup(G, p);
      EXPECT_EQ(S.order(), p_part(G.order(), p)) << g.spec << " p=" << p;
      EXPECT_TRUE(is_p_group(S, p));
      EXPECT_TRUE(G.contains(S));
    }
  }
}

TEST(Residual, Examples) {
  auto s4 = whole("sym:4");
  EXPECT_EQ(residual_subgroup(s4, 2, Residual::O_upper_p),
            gen(s4.parent(), {{{1, 2, 3}}, {{2, 3, 4}}}));
  auto s3 = whole("sym:3");
  EXPECT_EQ(residual_subgroup(s3, 2, Residual::O_p_prime), gen(s3.parent(), {{{1, 2, 3}}}));
  EXPECT_EQ(residual_subgroup(whole("cyclic:5"), 2, Residual::O_p).order(), 1u);
}

TEST(Residual, MatchesBruteForce) {
  for (auto const& g : default_groups()) {
    if (g.spec == "example:weakly-normal" || g.spec == "sym:6") continue;
    auto G = whole(g.spec);
    auto S = sylow_subgroup(G, g.p);
    EXPECT_EQ(oracle::members(residual_subgroup(G, g.p, Residual::O_upper_p)),
              oracle::op_upper(G, g.p))
        << g.spec;
    EXPECT_EQ(oracle::members(residual_subgroup(G, g.p, Residual::O_p)),
              oracle::op_lower(G, oracle::members(S)))
        << g.spec;
    EXPECT_EQ(oracle::members(residual_subgroup(G, g.p, Residual::O_p_prime)),
              oracle::op_prime(G, g.p))
        << g.spec;
  }
}

TEST(Residual, Duality) {
  for (auto const& g : default_groups()) {
    auto G = whole(g.spec);
    auto S = sylow_subgroup(G, g.p);
    auto up = residual_subgroup(G, g.p, Residual::O_upper_p);
    auto low = residual_subgroup(G, g.p, Residual::O_p);
    EXPECT_TRUE(S.contains(low)) << g.spec;
    EXPECT_TRUE(is_normal_in(up, G));
    EXPECT_TRUE(is_p_power(G.order() / up.order(), g.p));
    // O^p'(G) has p'-index and is generated by p-elements
    auto upp = residual_subgroup(G, g.p, Residual::O_upper_p_prime);
    EXPECT_NE((G.order() / upp.order()) % g.p, 0u) << g.spec;
    oracle::Set p_elements;
    for (Elem x : G.members()) {
      if (is_p_power(G.group().element_order(x), g.p)) p_elements.push_back(x);
    }
    EXPECT_EQ(oracle::members(upp), oracle::close(G.group(), p_elements)) << g.spec;
  }
}

TEST(Quotient, Examples) {
  auto s4 = whole("sym:4");
  auto V4 = gen(s4.parent(), {{{1, 2}, {3, 4}}, {{1, 3}, {2, 4}}});
  auto q = quotient_group(s4, V4);
  auto Q = Subgroup::whole(q.table);
  EXPECT_EQ(Q.order(), 6u);
  EXPECT_EQ(center(Q).order(), 1u);  // S_3, not C_6
  auto a4 = whole("alt:4");
  auto V = gen(a4.parent(), {{{1, 2}, {3, 4}}, {{1, 3}, {2, 4}}});
  EXPECT_EQ(quotient_group(a4, V).table->order(), 3u);
  EXPECT_EQ(quotient_group(s4, Subgroup::trivial(s4.parent())).table->order(), 24u);
  EXPECT_THROW(quotient_group(s4, gen(s4.parent(), {{{1, 2}}})), InvalidInput);
}

TEST(Quotient, ProjectionIsSurjectiveHomomorphismWithKernel) {
  auto G = whole("product:(sym:4,cyclic:2)");
  for (auto const& N : {residual_subgroup(G, 2, Residual::O_upper_p), center(G),
                        residual_subgroup(G, 2, Residual::O_p)}) {
    auto q = quotient_group(G, N);
    auto const& t = G.group();
    std::set<Elem> image;
    for (Elem a : G.members()) {
      image.insert(q(a));
      EXPECT_EQ(q(a) == 0, N.contains(a));
      for (Elem b : G.members()) EXPECT_EQ(q(t.mul(a, b)), q.table->mul(q(a), q(b)));
    }
    EXPECT_EQ(image.size(), q.table->order());
  }
}

TEST(Automorphisms, Examples) {
  EXPECT_EQ(automorphism_group(whole("klein4")).table->order(), 6u);
  EXPECT_EQ(automorphism_group(whole("cyclic:2")).table->order(), 1u);
  EXPECT_EQ(automorphism_group(whole("sym:3")).table->order(), 6u);
}

TEST(Automorphisms, MatchBruteForceCount) {
  for (auto spec : {"klein4", "sym:3", "dihedral:8", "cyclic:6", "alt:4", "dihedral:12", "sym:4"}) {
    auto G = whole(spec);
    auto A = automorphism_group(G);
    EXPECT_EQ(A.table->order(), oracle::automorphism_count(G, generating_set(G))) << spec;
  }
}

TEST(Automorphisms, ClosedUnderComposition) {
  auto G = whole("dihedral:8");
  auto A = automorphism_group(G);
  for (Elem a = 0; a < A.table->order(); ++a) {
    auto const ma = A.as_morphism(a);
    EXPECT_TRUE(ma.is_homomorphism());
    for (Elem b = 0; b < A.table->order(); ++b) {
      auto composed = ma.then(A.as_morphism(b));
      EXPECT_EQ(composed, A.as_morphism(A.table->mul(a, b)));
    }
  }
}

TEST(Automorphisms, CapError) {
  EXPECT_THROW(automorphism_group(whole("sym:6")), CapError);
}

TEST(StructurePredicates, Examples) {
  EXPECT_TRUE(structure_predicates(whole("sym:3"), 2).has_normal_p_complement);
  auto s4 = structure_predicates(whole("sym:4"), 2);
  EXPECT_TRUE(s4.O_p_prime_trivial);
  EXPECT_EQ(s4.p_constrained, true);
  auto p = structure_predicates(whole("dihedral:8"), 2);
  EXPECT_TRUE(p.has_normal_p_complement);
  EXPECT_TRUE(p.O_p_prime_trivial);
  EXPECT_EQ(p.p_constrained, true);
  EXPECT_EQ(structure_predicates(whole("alt:5"), 2).p_constrained, false);
  EXPECT_FALSE(structure_predicates(whole("sym:3"), 2).p_constrained.has_value());
}

TEST(GroupIo, ParsesGeneratorsAndTables) {
  auto t = parse_group_json(R"({"degree": 4, "generators": [[[1,2,3,4]], [[1,3]]]})");
  EXPECT_EQ(t->order(), 8u);
  auto c3 = parse_group_json(R"({"table": [[0,1,2],[1,2,0],[2,0,1]]})");
  EXPECT_EQ(c3->order(), 3u);
  EXPECT_THROW(parse_group_json("{"), ParseError);
  EXPECT_THROW(parse_group_json(R"({"degree": 3, "generators": [[[1,4]]]})"), ParseError);
  EXPECT_THROW(parse_group_json(R"({"foo": 1})"), ParseError);
}

}  // namespace
