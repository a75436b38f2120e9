#include "fusionkit/catalog.hpp"

#include <algorithm>
#include <charconv>

#include "fusionkit/error.hpp"
#include "fusionkit/fusion_checks.hpp"
#include "fusionkit/group_io.hpp"
#include "fusionkit/group_ops.hpp"

namespace fusionkit {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::size_t parse_count(std::string_view s, std::string_view spec) {
  std::size_t n = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError("bad number in spec '" + std::string(spec) + "'");
  }
  return n;
}

/// Splits "(a,b,(c,d))" into its top-level parts.
std::vector<std::string_view> split_arguments(std::string_view s, std::string_view spec) {
  s = trim(s);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') {
    throw ParseError("expected a parenthesized list in '" + std::string(spec) + "'");
  }
  s = s.substr(1, s.size() - 2);
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')' && --depth < 0) break;
    if (s[i] == ',' && depth == 0) {
      parts.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (depth != 0) throw ParseError("unbalanced parentheses in '" + std::string(spec) + "'");
  parts.push_back(trim(s.substr(start)));
  if (std::any_of(parts.begin(), parts.end(), [](auto p) { return p.empty(); })) {
    throw ParseError("empty argument in '" + std::string(spec) + "'");
  }
  return parts;
}

Permutation cycle_on(std::size_t degree, std::vector<std::uint32_t> points) {
  return perm::from_cycles(degree, {std::move(points)});
}

GroupRecipe symmetric(std::size_t n) {
  GroupRecipe r{std::max<std::size_t>(n, 1), {}};
  if (n < 2) return r;
  std::vector<std::uint32_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<std::uint32_t>(i + 1);
  r.generators.push_back(cycle_on(n, {1, 2}));
  if (n > 2) r.generators.push_back(cycle_on(n, all));
  return r;
}

GroupRecipe alternating(std::size_t n) {
  GroupRecipe r{std::max<std::size_t>(n, 1), {}};
  for (std::uint32_t k = 3; k <= n; ++k) r.generators.push_back(cycle_on(n, {1, 2, k}));
  return r;
}

GroupRecipe cyclic(std::size_t n) {
  GroupRecipe r{std::max<std::size_t>(n, 1), {}};
  if (n < 2) return r;
  std::vector<std::uint32_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<std::uint32_t>(i + 1);
  r.generators.push_back(cycle_on(n, all));
  return r;
}

GroupRecipe klein4() {
  return {4, {perm::from_cycles(4, {{1, 2}, {3, 4}}), perm::from_cycles(4, {{1, 3}, {2, 4}})}};
}

GroupRecipe dihedral(std::size_t n, std::string_view spec) {
  if (n < 2 || n % 2 != 0) {
    throw ParseError("dihedral order must be even and positive in '" + std::string(spec) + "'");
  }
  if (n == 2) return cyclic(2);
  if (n == 4) return klein4();
  std::size_t const m = n / 2;
  GroupRecipe r = cyclic(m);
  std::vector<std::vector<std::uint32_t>> refl;
  for (std::uint32_t i = 1; i < m + 1 - i; ++i) {
    refl.push_back({i, static_cast<std::uint32_t>(m + 1 - i)});
  }
  r.generators.push_back(perm::from_cycles(m, refl));
  return r;
}

GroupRecipe direct_product(std::vector<GroupRecipe> const& factors) {
  GroupRecipe r;
  for (auto const& f : factors) r.degree += f.degree;
  std::size_t offset = 0;
  for (auto const& f : factors) {
    for (auto const& g : f.generators) {
      r.generators.push_back(perm::shift(g, offset, r.degree));
    }
    offset += f.degree;
  }
  return r;
}

GroupRecipe from_file(std::string const& path, Caps const& caps) {
  auto table = load_group_file(path, caps);
  Subgroup const G = Subgroup::whole(table);
  auto gens = generating_set(G);
  GroupRecipe r;
  if (table->has_permutations()) {
    r.degree = table->degree();
    for (Elem g : gens) r.generators.push_back(table->permutation(g));
    return r;
  }
  // right regular representation
  r.degree = table->order();
  for (Elem g : gens) {
    Permutation pm(table->order());
    for (Elem x = 0; x < table->order(); ++x) pm[x] = table->mul(x, g);
    r.generators.push_back(std::move(pm));
  }
  return r;
}

constexpr std::size_t kBlock = 4;

Permutation on_block(std::size_t block, std::vector<std::vector<std::uint32_t>> cycles) {
  for (auto& c : cycles) {
    for (auto& x : c) x += static_cast<std::uint32_t>(block * kBlock);
  }
  return perm::from_cycles(3 * kBlock, cycles);
}

Permutation klein_a(std::size_t b) { return on_block(b, {{1, 2}, {3, 4}}); }
Permutation klein_b(std::size_t b) { return on_block(b, {{1, 3}, {2, 4}}); }
Permutation three_cycle(std::size_t b) { return on_block(b, {{1, 2, 3}}); }

GroupRecipe example_recipe() {
  GroupRecipe r{3 * kBlock, {}};
  for (std::size_t b = 0; b < 3; ++b) {
    r.generators.push_back(klein_a(b));
    r.generators.push_back(klein_b(b));
  }
  r.generators.push_back(perm::compose(three_cycle(0), three_cycle(1)));
  r.generators.push_back(perm::compose(three_cycle(0), three_cycle(2)));
  return r;
}

}  // namespace

GroupRecipe group_recipe(std::string_view spec, Caps const& caps) {
  std::string_view const s = trim(spec);
  auto colon = s.find(':');
  std::string_view const head = s.substr(0, colon);
  std::string_view const arg = colon == std::string_view::npos ? std::string_view{} : trim(s.substr(colon + 1));
  if (head == "klein4" && colon == std::string_view::npos) return klein4();
  if (colon == std::string_view::npos || arg.empty()) {
    throw ParseError("unknown group spec '" + std::string(spec) + "'");
  }
  if (head == "sym") return symmetric(parse_count(arg, spec));
  if (head == "alt") return alternating(parse_count(arg, spec));
  if (head == "cyclic") return cyclic(parse_count(arg, spec));
  if (head == "dihedral") return dihedral(parse_count(arg, spec), spec);
  if (head == "product") {
    std::vector<GroupRecipe> factors;
    for (auto part : split_arguments(arg, spec)) factors.push_back(group_recipe(part, caps));
    return direct_product(factors);
  }
  if (head == "file") return from_file(std::string(arg), caps);
  if (head == "example" && arg == "weakly-normal") return example_recipe();
  throw ParseError("unknown group spec '" + std::string(spec) + "'");
}

GroupPtr build_group(std::string_view spec, Caps const& caps) {
  auto r = group_recipe(spec, caps);
  return GroupTable::from_generators(r.degree, r.generators, caps);
}

std::string PairSpec::to_string() const {
  return "pair:(" + G + "," + H + "," + std::to_string(p) + ")";
}

PairSpec parse_pair_spec(std::string_view spec) {
  std::string_view const s = trim(spec);
  if (!s.starts_with("pair:")) throw ParseError("pair spec must start with 'pair:'");
  auto parts = split_arguments(s.substr(5), spec);
  if (parts.size() != 3) throw ParseError("pair spec needs (G, H, p): '" + std::string(spec) + "'");
  auto p = parse_count(parts[2], spec);
  if (!is_prime(p)) throw ParseError("not a prime in '" + std::string(spec) + "'");
  return PairSpec{std::string(parts[0]), std::string(parts[1]), static_cast<unsigned>(p)};
}

RealizedPair build_pair(PairSpec const& spec, Caps const& caps) {
  auto rg = group_recipe(spec.G, caps);
  auto rh = group_recipe(spec.H, caps);
  if (rh.degree > rg.degree) {
    throw InvalidInput("H acts on more points than G in " + spec.to_string());
  }
  auto table = GroupTable::from_generators(rg.degree, rg.generators, caps);
  std::vector<Elem> gens;
  for (auto const& h : rh.generators) {
    auto idx = table->index_of(perm::extend(h, rg.degree));
    if (!idx) throw InvalidInput("H is not a subgroup of G in " + spec.to_string());
    gens.push_back(*idx);
  }
  return RealizedPair::make(Subgroup::whole(table), generate_subgroup(table, gens), spec.p, caps);
}

RealizedPair build_pair(std::string_view spec, Caps const& caps) {
  return build_pair(parse_pair_spec(spec), caps);
}

WeaklyNormalExample example_weakly_normal(Caps const& caps) {
  std::vector<Permutation> all;
  for (std::size_t b = 0; b < 3; ++b) {
    all.push_back(klein_a(b));
    all.push_back(klein_b(b));
    all.push_back(three_cycle(b));
  }
  auto table = GroupTable::from_generators(3 * kBlock, all, caps);
  auto idx = [&](Permutation const& pm) { return *table->index_of(pm); };
  auto klein = [&](std::size_t b) {
    return generate_subgroup(table, std::vector<Elem>{idx(klein_a(b)), idx(klein_b(b))});
  };
  Subgroup const S1 = klein(0), S2 = klein(1), S3 = klein(2);
  Elem const x1 = idx(three_cycle(0)), x2 = idx(three_cycle(1)), x3 = idx(three_cycle(2));
  Elem const y2 = table->mul(x1, x2);
  Elem const y3 = table->mul(x1, x3);
  Subgroup const S = join(join(S1, S2), S3);
  Subgroup const X = generate_subgroup(table, std::vector<Elem>{y2, y3});
  Subgroup const G = join(S, X);
  Subgroup const S12 = join(S1, S2);
  Subgroup const S13 = join(S1, S3);
  Subgroup const G1 = join(S12, std::vector<Elem>{y2});
  Subgroup const G2 = join(S13, std::vector<Elem>{y3});

  auto lattice = SubgroupLattice::enumerate(S, 2, caps);
  // the morphisms of F1 and F2 between subgroups of S1
  auto on_S1 = lattice->restricted_to(S1);
  auto E = intersect_fusion_systems(FusionSystem::realized(G1, on_S1),
                                    FusionSystem::realized(G2, on_S1));
  return WeaklyNormalExample{Subgroup::whole(table),
                             G,
                             S,
                             S1,
                             S2,
                             S3,
                             join(S1, std::vector<Elem>{x1}),
                             X,
                             x1,
                             x2,
                             x3,
                             FusionSystem::realized(G, lattice),
                             FusionSystem::realized(G1, lattice->restricted_to(S12)),
                             FusionSystem::realized(G2, lattice->restricted_to(S13)),
                             std::move(E)};
}

ExampleRegression regression_example_weakly_normal(Caps const& caps) {
  auto ex = example_weakly_normal(caps);
  ExampleRegression r;
  auto& c = r.checks;
  c.push_back(Check::of("orders", ex.G.order() == 576 && ex.S.order() == 64,
                        "|G| = " + std::to_string(ex.G.order()) + ", |S| = " +
                            std::to_string(ex.S.order())));
  auto const EH1 = FusionSystem::realized(ex.H1, ex.E.lattice());
  c.push_back(Check::of("E = F_S1(H1)", ex.E.same_morphisms(EH1),
                        std::to_string(ex.E.morphism_count()) + " morphisms"));
  c.push_back(Check::of("E saturated", is_saturated(ex.E).saturated));

  r.normality = invariance_and_normality(ex.F, ex.E);
  c.push_back(Check::of("E F-invariant", r.normality.strongly_invariant &&
                                             r.normality.level >= NormalityLevel::invariant,
                        to_string(r.normality.level)));
  bool const not_normal = r.normality.level == NormalityLevel::weakly_normal &&
                          !r.normality.extension_condition;
  c.push_back(Check::of("E not normal", not_normal,
                        r.normality.failed + (r.normality.witness.empty() ? "" : ": " + r.normality.witness)));

  // c_{x1 x2} restricts to c_{x1} on S1 and moves S = C_S(S1) outside Z(S1)
  auto const& table = ex.G.group();
  Elem const y2 = table.mul(ex.x1, ex.x2);
  Morphism const phi1 = Morphism::conjugation(ex.S, y2);
  bool const extends = phi1.restrict(ex.S1) == Morphism::conjugation(ex.S1, ex.x1);
  bool moves = false;
  for (Elem s : ex.S.members()) {
    if (!ex.S1.contains(table.mul(table.inv(s), phi1(s)))) moves = true;
  }
  c.push_back(Check::of("witness c_{x1x2}", extends && moves,
                        "c_{x1x2} extends c_{x1} and acts nontrivially on S/S1"));

  c.push_back(Check::of("E <= C_F(S2)", centralized_by(ex.F, ex.E, ex.S2)));
  c.push_back(Check::of("E <= C_F(S3)", centralized_by(ex.F, ex.E, ex.S3)));
  c.push_back(Check::of("E not <= C_F(S2 S3)", !centralized_by(ex.F, ex.E, join(ex.S2, ex.S3))));

  r.centralizing_set = centralizer_subgroup_direct(ex.F, ex.E);
  c.push_back({"centralizing set", CheckStatus::pass,
               std::to_string(r.centralizing_set.members.size()) + " elements, " +
                   (r.centralizing_set.is_subgroup ? "a subgroup" : "not a subgroup")});
  return r;
}

std::vector<CatalogGroup> const& default_groups() {
  static std::vector<CatalogGroup> const groups{
      {"sym:3", 2},
      {"sym:3", 3},
      {"alt:4", 2},
      {"sym:4", 2},
      {"sym:4", 3},
      {"alt:5", 2},
      {"sym:5", 2},
      {"dihedral:8", 2},
      {"dihedral:12", 2},
      {"cyclic:6", 2},
      {"klein4", 2},
      {"product:(alt:4,cyclic:2)", 2},
      {"product:(sym:3,cyclic:3)", 3},
      {"product:(sym:3,sym:3)", 3},
      {"product:(sym:4,cyclic:2)", 2},
      {"sym:6", 2},
      {"example:weakly-normal", 2},
  };
  return groups;
}

std::vector<std::string> const& default_pairs() {
  static std::vector<std::string> const pairs{
      "pair:(sym:4,alt:4,2)",
      "pair:(product:(alt:4,cyclic:2),alt:4,2)",
      "pair:(sym:4,sym:4,2)",
      "pair:(sym:4,klein4,2)",
      "pair:(alt:4,klein4,2)",
      "pair:(dihedral:8,cyclic:4,2)",
      "pair:(sym:5,alt:5,2)",
      "pair:(product:(sym:4,cyclic:2),sym:4,2)",
      "pair:(product:(sym:3,cyclic:3),sym:3,3)",
      "pair:(sym:3,cyclic:3,3)",
      "pair:(sym:6,alt:6,2)",
  };
  return pairs;
}

}  // namespace fusionkit
