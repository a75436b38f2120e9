#include "fusionkit/experiments.hpp"

#include <algorithm>
#include <iterator>

#include "fusionkit/error.hpp"
#include "fusionkit/fusion_subsystems.hpp"
#include "fusionkit/group_ops.hpp"

namespace fusionkit {

char const* to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "HOLDS";
    case Verdict::fails: return "FAILS";
    case Verdict::skipped: return "SKIPPED";
  }
  return "?";
}

namespace {

bool op_prime_trivial(Subgroup const& H, unsigned p) {
  return residual_subgroup(H, p, Residual::O_p_prime).order() == 1;
}

}  // namespace

Conjecture52Result run_conjecture_52(RealizedPair const& pair) {
  Conjecture52Result r;
  r.C_S_H = intersection(centralizer(pair.G, pair.H), pair.S);
  if (!op_prime_trivial(pair.H, pair.p)) {
    r.reason = "O_p'(H) is not trivial";
    return r;
  }
  r.centralizer = centralizer_subgroup_direct(pair.F, pair.E).members;
  auto const rhs = r.C_S_H.members();
  std::set_difference(r.centralizer.begin(), r.centralizer.end(), rhs.begin(), rhs.end(),
                      std::back_inserter(r.only_centralizer));
  std::set_difference(rhs.begin(), rhs.end(), r.centralizer.begin(), r.centralizer.end(),
                      std::back_inserter(r.only_C_S_H));
  bool const same = r.only_centralizer.empty() && r.only_C_S_H.empty();
  r.verdict = same ? Verdict::holds : Verdict::fails;
  return r;
}

Conjecture53Result run_conjecture_53(RealizedPair const& pair) {
  Conjecture53Result r;
  unsigned const p = pair.p;
  Subgroup const CGH = centralizer(pair.G, pair.H);
  r.C_S_H = intersection(CGH, pair.S);
  if (!op_prime_trivial(pair.H, p)) {
    r.reason = "O_p'(H) is not trivial";
    return r;
  }
  FusionSystem const CFT = centralizer_system(pair.F, pair.T).system;
  auto const lattice = CFT.lattice()->restricted_to(r.C_S_H);
  auto const candidate = FusionSystem::realized(CGH, lattice);
  r.candidate_morphisms = candidate.morphism_count();

  Subgroup const hyp = hyperfocal(CFT);
  bool index = r.C_S_H.contains(hyp) && candidate.contained_in(CFT);
  if (!index) r.witness = "hyp(C_F(T)) or a morphism of the candidate lies outside";
  for (std::size_t id = 0; index && id < lattice->size(); ++id) {
    Subgroup const& P = lattice->at(static_cast<int>(id));
    auto const autos = CFT.automorphisms(P);
    for (auto const& a : op_residual(autos, p)) {
      if (!candidate.find(candidate.id(P), a.images())) {
        index = false;
        r.witness = "O^p(Aut_{C_F(T)}(P)) not in the candidate at P = " + P.to_string();
        break;
      }
    }
  }
  r.p_power_index = index;

  auto cse = centralizer_subgroup_direct(pair.F, pair.E);
  if (!cse.is_subgroup) {
    r.verdict = Verdict::fails;
    r.witness = "C_S(E) is not a subgroup";
    return r;
  }
  if (!(*cse.subgroup == r.C_S_H)) {
    r.verdict = Verdict::fails;
    r.witness = "C_S(E) = " + cse.subgroup->to_string() + " differs from C_S(H) = " +
                r.C_S_H.to_string();
    return r;
  }
  try {
    auto const CFE = p_power_index_subsystem(CFT, *cse.subgroup);
    r.subsystem_morphisms = CFE.morphism_count();
    bool const same = CFE.same_morphisms(candidate);
    r.verdict = same ? Verdict::holds : Verdict::fails;
    if (!same) r.witness = "hom-sets of C_F(E) and F_{C_S(H)}(C_G(H)) differ";
  } catch (VerificationError const& e) {
    r.verdict = Verdict::fails;
    r.witness = std::string("C_F(E) could not be constructed: ") + e.what();
  }
  return r;
}

Check verify_hyperfocal_oracle(Subgroup const& G, unsigned p, Caps const& caps) {
  Subgroup const S = sylow_subgroup(G, p);
  auto const F = FusionSystem::realized(G, S, p, caps);
  Subgroup const hyp = hyperfocal(F);
  Subgroup const oracle = intersection(S, residual_subgroup(G, p, Residual::O_upper_p));
  return Check::of("hyp(F_S(G)) = S n O^p(G)", hyp == oracle,
                   "hyp order " + std::to_string(hyp.order()) + ", S n O^p(G) order " +
                       std::to_string(oracle.order()));
}

Check verify_zstar(Subgroup const& G, unsigned p, Caps const& caps) {
  if (!op_prime_trivial(G, p)) {
    return {"Z(F_S(G)) = Z(G)", CheckStatus::skipped, "O_p'(G) is not trivial"};
  }
  Subgroup const S = sylow_subgroup(G, p);
  auto const F = FusionSystem::realized(G, S, p, caps);
  Subgroup const ZF = center_of_fusion_system(F);
  Subgroup const ZG = center(G);
  return Check::of("Z(F_S(G)) = Z(G)", ZF == ZG,
                   "Z(F) order " + std::to_string(ZF.order()) + ", Z(G) order " +
                       std::to_string(ZG.order()));
}

}  // namespace fusionkit
