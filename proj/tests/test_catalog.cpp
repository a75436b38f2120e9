#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "fusionkit/error.hpp"
#include "fusionkit/fusion_checks.hpp"
#include "helpers.hpp"

using namespace testing_helpers;

namespace {

TEST(GroupSpecs, Orders) {
  std::vector<std::pair<std::string, std::size_t>> const cases = {
      {"sym:1", 1},   {"sym:3", 6},         {"sym:5", 120},       {"alt:4", 12},
      {"alt:5", 60},  {"cyclic:1", 1},      {"cyclic:6", 6},      {"dihedral:2", 2},
      {"dihedral:4", 4}, {"dihedral:8", 8}, {"dihedral:12", 12},  {"klein4", 4},
      {"product:(alt:4,cyclic:2)", 24},     {"product:(sym:3,sym:3)", 36},
      {"product:(cyclic:2,product:(cyclic:2,cyclic:2))", 8}};
  for (auto const& [spec, order] : cases) EXPECT_EQ(build_group(spec)->order(), order) << spec;
}

TEST(GroupSpecs, Structure) {
  auto d8 = whole("dihedral:8");
  EXPECT_EQ(center(d8).order(), 2u);
  auto k = whole("klein4");
  EXPECT_EQ(center(k).order(), 4u);
  auto c6 = whole("cyclic:6");
  EXPECT_EQ(center(c6).order(), 6u);
  EXPECT_EQ(generating_set(c6).size(), 1u);
  auto a4 = whole("alt:4");
  EXPECT_EQ(residual_subgroup(a4, 2, Residual::O_p).order(), 4u);
}

TEST(GroupSpecs, IdentityIsElementZero) {
  for (auto const& spec : {"sym:4", "dihedral:12", "product:(sym:3,cyclic:3)"}) {
    auto t = build_group(spec);
    for (Elem x = 0; x < t->order(); ++x) EXPECT_EQ(t->mul(0, x), x);
  }
}

TEST(GroupSpecs, ParseErrors) {
  for (auto const& bad : {"", "sym", "sym:", "sym:x", "sym:-1", "foo:3", "product:(sym:3",
                          "product:()", "dihedral:7", "file:"}) {
    EXPECT_THROW(build_group(bad), Error) << bad;
  }
  EXPECT_THROW(build_group("sym:x"), ParseError);
}

TEST(GroupSpecs, CapOnOrder) {
  Caps caps;
  caps.max_group_order = 100;
  EXPECT_THROW(build_group("sym:5", caps), CapError);
  EXPECT_NO_THROW(build_group("alt:5", caps));
}

TEST(GroupSpecs, FileGenerators) {
  auto path = std::string(::testing::TempDir()) + "fusionkit_s3.json";
  {
    std::ofstream out(path);
    out << R"({"degree": 3, "generators": [[[1, 2]], [[1, 2, 3]]]})";
  }
  EXPECT_EQ(build_group("file:" + path)->order(), 6u);
  {
    std::ofstream out(path);
    out << R"({"table": [[0, 1, 2], [1, 2, 0], [2, 0, 1]]})";
  }
  auto c3 = build_group("file:" + path);
  EXPECT_EQ(c3->order(), 3u);
  EXPECT_EQ(center(Subgroup::whole(c3)).order(), 3u);
  {
    std::ofstream out(path);
    out << R"({"table": [[0, 1], [1, 1]]})";
  }
  EXPECT_THROW(build_group("file:" + path), Error);
  std::remove(path.c_str());
  EXPECT_THROW(build_group("file:/nonexistent/group.json"), Error);
}

TEST(PairSpecs, RoundTrip) {
  auto ps = parse_pair_spec("pair:(product:(alt:4,cyclic:2),alt:4,2)");
  EXPECT_EQ(ps.G, "product:(alt:4,cyclic:2)");
  EXPECT_EQ(ps.H, "alt:4");
  EXPECT_EQ(ps.p, 2u);
  EXPECT_EQ(ps.to_string(), "pair:(product:(alt:4,cyclic:2),alt:4,2)");
  EXPECT_EQ(parse_pair_spec(ps.to_string()).to_string(), ps.to_string());
}

TEST(PairSpecs, Errors) {
  for (auto const& bad : {"pair:(sym:4,alt:4)", "pair:(sym:4,alt:4,4)", "pair:sym:4,alt:4,2",
                          "pair:(sym:4,alt:4,2", "(sym:4,alt:4,2)", "pair:(sym:4,alt:4,x)"}) {
    EXPECT_THROW(parse_pair_spec(bad), Error) << bad;
  }
  // S3 on {1,2,3} is not normal in S4
  EXPECT_THROW(build_pair("pair:(sym:4,sym:3,2)"), InvalidInput);
  // A5 does not embed in S4
  EXPECT_THROW(build_pair("pair:(sym:4,alt:5,2)"), InvalidInput);
}

TEST(PairSpecs, Shapes) {
  for (auto const& spec : default_pairs()) {
    auto pr = build_pair(spec);
    EXPECT_TRUE(is_normal_in(pr.H, pr.G)) << spec;
    EXPECT_EQ(pr.S.order(), p_part(pr.G.order(), pr.p)) << spec;
    EXPECT_EQ(pr.T, intersection(pr.S, pr.H)) << spec;
    EXPECT_EQ(pr.T.order(), p_part(pr.H.order(), pr.p)) << spec;
    EXPECT_EQ(pr.F.S(), pr.S);
    EXPECT_EQ(pr.E.S(), pr.T);
  }
}

TEST(Catalog, DefaultsBuild) {
  EXPECT_GE(default_groups().size(), 10u);
  EXPECT_GE(default_pairs().size(), 6u);
  for (auto const& g : default_groups()) {
    EXPECT_TRUE(is_prime(g.p));
    EXPECT_NO_THROW(build_group(g.spec)) << g.spec;
  }
}

TEST(WeaklyNormalExample, Structure) {
  auto ex = example_weakly_normal();
  EXPECT_EQ(ex.G.order(), 576u);
  EXPECT_EQ(ex.S.order(), 64u);
  EXPECT_EQ(ex.S1.order(), 4u);
  EXPECT_EQ(ex.X.order(), 9u);
  EXPECT_EQ(ex.E.S(), ex.S1);
  EXPECT_TRUE(is_saturated(ex.E).saturated);
}

TEST(WeaklyNormalExample, RegressionVerdicts) {
  auto reg = regression_example_weakly_normal();
  for (auto const& c : reg.checks) EXPECT_EQ(c.status, CheckStatus::pass) << c.name << ": " << c.detail;
  EXPECT_TRUE(reg.passed());
  EXPECT_EQ(reg.normality.level, NormalityLevel::weakly_normal);
  EXPECT_EQ(reg.centralizing_set.members.size(), 7u);
  EXPECT_FALSE(reg.centralizing_set.is_subgroup);
}

TEST(WeaklyNormalExample, CentralizingSetMatchesBruteForce) {
  auto ex = example_weakly_normal();
  auto reg = regression_example_weakly_normal();
  auto const& t = ex.G.group();
  // g centralizes S1 and the order-3 automorphism of S1 in E extends to
  // an element of G fixing g
  std::vector<Elem> brute;
  auto const CS = centralizer(ex.S, ex.S1);
  for (Elem g : CS.members()) {
    bool ok = true;
    for (std::size_t id = 0; id < ex.E.lattice()->size() && ok; ++id) {
      auto const& P = ex.E.subgroup(static_cast<int>(id));
      for (auto const& m : ex.E.homs(static_cast<int>(id))) {
        bool found = false;
        for (Elem x : ex.G.members()) {
          if (t.conj(g, x) != g) continue;
          bool agrees = true;
          for (std::size_t i = 0; i < P.order() && agrees; ++i) {
            agrees = t.conj(P.members()[i], x) == m.images()[i];
          }
          if (agrees) {
            found = true;
            break;
          }
        }
        if (!found) ok = false;
      }
    }
    if (ok) brute.push_back(g);
  }
  EXPECT_EQ(reg.centralizing_set.members, brute);
}

}  // namespace
