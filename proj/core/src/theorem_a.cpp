#include "fusionkit/theorem_a.hpp"

#include <algorithm>

#include "fusionkit/error.hpp"
#include "fusionkit/functor.hpp"
#include "fusionkit/fusion_subsystems.hpp"
#include "fusionkit/linking_system.hpp"

namespace fusionkit {

namespace {

std::string elem_list(GroupTable const& G, std::vector<Elem> const& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ", ";
    s += G.label(xs[i]);
  }
  return s + "}";
}

}  // namespace

TheoremAReport verify_theorem_a(RealizedPair const& pair, Caps const& caps) {
  TheoremAReport r;
  auto const& G = pair.S.group();
  auto cse = centralizer_subgroup_direct(pair.F, pair.E);
  r.centralizer = cse.members;

  auto L = LinkingSystem::build(pair.F);
  auto L0 = LinkingSystem::build(pair.E);
  r.L_objects = L.object_count();
  r.L0_objects = L0.object_count();

  auto ker = kernel_of_conjugation(L, L0, cse.members);
  r.aut_L_T_order = ker.aut_L_T.size();
  r.aut_L_T_extended = ker.extended;
  r.kernel_order = ker.kernel.size();

  r.checks.push_back(Check::of("injectivity", ker.injective,
                               "delta_T on C_S(E) = " + elem_list(G, cse.members)));
  r.checks.push_back(Check::of("kernel", ker.equal,
                               "ker c = " + elem_list(G, ker.kernel) +
                                   ", delta_T(C_S(E)) = " + elem_list(G, ker.delta_image)));

  try {
    auto en = enumerate_isotypical_autoequivalences(L0, true, caps);
    r.functors = en.functors.size();
    auto const id = identity_functor(L0);
    std::vector<IsotypicalFunctor> trivial;
    for (auto const& f : en.functors) {
      if (l_naturally_isomorphic(L, L0, f, id, caps)) trivial.push_back(f);
    }
    r.l_trivial_functors = trivial.size();
    std::vector<IsotypicalFunctor> image;
    for (Elem g : ker.aut_L_T) {
      auto c = conjugation_functor(L, L0, g);
      if (std::find(image.begin(), image.end(), c) == image.end()) image.push_back(c);
    }
    r.conjugation_image = image.size();
    bool same = image.size() == trivial.size() &&
                std::all_of(image.begin(), image.end(), [&](IsotypicalFunctor const& c) {
                  return std::find(trivial.begin(), trivial.end(), c) != trivial.end();
                });
    r.checks.push_back(Check::of(
        "image", same,
        std::to_string(image.size()) + " conjugation functors, " +
            std::to_string(trivial.size()) + " of " + std::to_string(en.functors.size()) +
            " isotypical autoequivalences L-naturally isomorphic to the identity"));
  } catch (CapError const& e) {
    r.checks.push_back({"image", CheckStatus::skipped, e.what()});
  }

  bool closed = cse.is_subgroup && cse.strongly_closed.value_or(false);
  r.checks.push_back(Check::of("strong-closure", closed,
                               cse.is_subgroup ? "C_S(E) is a subgroup"
                                               : "C_S(E) is not a subgroup"));
  return r;
}

}  // namespace fusionkit
