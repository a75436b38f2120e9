#include "fusionkit/local_analysis.hpp"

#include <algorithm>
#include <unordered_map>

#include "fusionkit/error.hpp"
#include "fusionkit/fusion_checks.hpp"
#include "fusionkit/fusion_subsystems.hpp"

namespace fusionkit {

namespace {

bool widened_centric(FusionSystem const& F, int id, Subgroup const& T) {
  for (int q : F.conjugacy_class(id)) {
    Subgroup const& Q = F.subgroup(q);
    if (!Q.contains(centralizer(T, Q))) return false;
  }
  return true;
}

/// Hom-set equality of a system D (in the parent table) with the realized
/// system of a model group, transported along the quotient map q, which
/// must be injective on D.S().
std::string compare_fusion(FusionSystem const& D, Quotient const& q,
                           Subgroup const& model_group, Subgroup const& model_sylow,
                           unsigned p) {
  auto lattice = SubgroupLattice::enumerate(model_sylow, p);
  auto Fm = FusionSystem::realized(model_group, lattice);
  auto const& L = *D.lattice();
  if (L.size() != lattice->size()) {
    return "subgroup counts differ: " + std::to_string(L.size()) + " vs " +
           std::to_string(lattice->size());
  }
  for (std::size_t id = 0; id < L.size(); ++id) {
    Subgroup const& P = L.at(static_cast<int>(id));
    Subgroup const Pm = q.image(P);
    int const mid = Fm.id(Pm);
    if (Fm.homs(mid).size() != D.homs(static_cast<int>(id)).size()) {
      return "hom-set size differs on " + P.to_string();
    }
    for (auto const& phi : D.homs(static_cast<int>(id))) {
      std::vector<std::pair<Elem, Elem>> pairs;
      for (std::size_t i = 0; i < P.order(); ++i) {
        pairs.emplace_back(q(P.members()[i]), q(phi.images()[i]));
      }
      std::sort(pairs.begin(), pairs.end());
      std::vector<Elem> imgs;
      for (auto const& pr : pairs) imgs.push_back(pr.second);
      if (!Fm.find(mid, imgs)) return "morphism missing in the model: " + phi.to_string();
    }
  }
  return {};
}

}  // namespace

LocalDatum local_datum(NormalPairDescriptor const& pair, Subgroup const& U,
                       Subgroup const& X, bool widen) {
  FusionSystem const& F = pair.F;
  Subgroup const& S = F.S();
  Subgroup const& T = pair.E.S();
  if (!(widen ? S : T).contains(U)) {
    throw InvalidInput("U is not contained in " + std::string(widen ? "S" : "T"));
  }
  int const uid = F.id(U);
  bool const centric = widen ? widened_centric(F, uid, T) : is_T_centric(F, uid, T);
  if (!centric) throw InvalidInput("U is not T-centric: " + U.to_string());
  if (!is_fully_normalized(F, uid)) {
    throw InvalidInput("U is not fully F-normalized: " + U.to_string());
  }
  Subgroup const CT = centralizer(S, T);
  if (!CT.contains(X)) throw InvalidInput("X is not contained in C_S(T)");

  Subgroup Xu = X;
  Subgroup UX = join(U, X);
  std::optional<Morphism> replacement;
  FusionSystem const NU = normalizer_system(F, U);
  int const uxid = NU.id(UX);
  if (!is_fully_normalized(NU, uxid)) {
    int const rep = fully_normalized_representative(NU, uxid);
    auto phi = isomorphism_between(NU, uxid, rep);
    Subgroup const X2 = phi->restrict(X).image();
    if (!CT.contains(X2)) {
      throw InvalidInput("no admissible conjugate of X with UX fully N_F(U)-normalized");
    }
    replacement = phi;
    Xu = X2;
    UX = join(U, Xu);
  }
  Subgroup const U_X = join(UX, centralizer(S, UX));
  std::vector<Morphism> K;
  for (auto const& a : F.automorphisms(U_X)) {
    if (a.restrict(UX).image() == UX) K.push_back(a);
  }
  FusionSystem D = k_normalizer_system(F, U_X, K);
  return LocalDatum{U, Xu, UX, U_X, std::move(K), std::move(D), std::move(replacement)};
}

LocalModel local_model(LocalDatum const& datum, RealizedPair const& pair) {
  unsigned const p = pair.p;
  Subgroup const N = normalizer(normalizer(pair.G, datum.U_X), datum.UX);
  Subgroup const core = residual_subgroup(N, p, Residual::O_p_prime);
  Quotient q = quotient_group(N, core);
  Subgroup const Gm = Subgroup::whole(q.table);
  Subgroup const Hm = q.image(intersection(N, pair.H));
  Subgroup const NS = normalizer(pair.S, datum.UX);
  Subgroup const NT = normalizer(pair.T, datum.U);
  Subgroup const Sm = q.image(NS);
  Subgroup const Tm = q.image(NT);

  std::vector<Check> v;
  auto require = [&](std::string name, bool ok, std::string detail = {}) {
    v.push_back(Check::of(name, ok, detail));
    if (!ok) throw VerificationError("local model: " + name, detail.empty() ? datum.U.to_string() : detail);
  };
  require("p'-core trivial", residual_subgroup(Gm, p, Residual::O_p_prime).order() == 1);
  Subgroup const Op = residual_subgroup(Gm, p, Residual::O_p);
  require("constrained", Op.contains(centralizer(Gm, Op)));
  require("Sylow", Sm.order() == NS.order() && Sm.order() == p_part(Gm.order(), p));
  require("D realized", datum.D.S() == NS, "D lives on " + datum.D.S().to_string());
  auto diff = compare_fusion(datum.D, q, Gm, Sm, p);
  require("fusion equals D", diff.empty(), diff);
  require("H normal", is_normal_in(Hm, Gm));
  require("T Sylow in H", Hm.contains(Tm) && Tm.order() == NT.order() &&
                              Tm.order() == p_part(Hm.order(), p));
  if (pair.T.contains(datum.U)) {
    FusionSystem const NE = normalizer_system(pair.E, datum.U);
    auto diffE = compare_fusion(NE, q, Hm, Tm, p);
    require("fusion equals N_E(U)", diffE.empty(), diffE);
  } else {
    v.push_back({"fusion equals N_E(U)", CheckStatus::skipped, "U is not inside T"});
  }
  return LocalModel{N, std::move(q), Gm, Hm, Sm, Tm, std::move(v)};
}

LocalKGroups local_k_groups(LocalModel const& model, LocalDatum const& datum,
                            RealizedPair const& pair) {
  LocalKGroups out{centralizer(model.Gmodel, model.T_model), Subgroup{}, std::nullopt};
  out.K = residual_subgroup(out.C, pair.p, Residual::O_upper_p);
  if (!(datum.U == pair.T)) return out;

  FusionSystem const CFT = centralizer_system(pair.F, pair.T).system;
  auto const lhs = op_residual(CFT.automorphisms(datum.X), pair.p);
  std::vector<std::vector<Elem>> left;
  for (auto const& a : lhs) left.emplace_back(a.images().begin(), a.images().end());

  auto const& Qt = *model.quotient.table;
  Subgroup const Xm = model.embed(datum.X);
  std::unordered_map<Elem, Elem> back;
  for (Elem x : datum.X.members()) back[model.quotient(x)] = x;
  std::vector<std::vector<Elem>> right;
  for (Elem k : out.K.members()) {
    bool normalizes = true;
    std::vector<Elem> imgs;
    for (Elem x : datum.X.members()) {
      Elem y = Qt.conj(model.quotient(x), k);
      if (!Xm.contains(y)) {
        normalizes = false;
        break;
      }
      imgs.push_back(back.at(y));
    }
    if (normalizes) right.push_back(std::move(imgs));
  }
  std::sort(left.begin(), left.end());
  std::sort(right.begin(), right.end());
  right.erase(std::unique(right.begin(), right.end()), right.end());
  out.identity_holds = left == right;
  return out;
}

Subgroup model_centralizer(LocalModel const& model, LocalDatum const& datum) {
  auto const& Qt = *model.quotient.table;
  Subgroup const NS = normalizer(datum.D.S(), datum.UX);
  auto gens = generating_set(model.Hmodel);
  std::vector<Elem> members;
  for (Elem s : NS.members()) {
    Elem sm = model.quotient(s);
    bool central = std::all_of(gens.begin(), gens.end(),
                               [&](Elem h) { return Qt.mul(sm, h) == Qt.mul(h, sm); });
    if (central) members.push_back(s);
  }
  return Subgroup(NS.parent(), std::move(members));
}

std::optional<Chain> strongly_normalized_chain(NormalPairDescriptor const& pair,
                                               Subgroup const& U, Subgroup const& X) {
  FusionSystem const& F = pair.F;
  Subgroup const& T = pair.E.S();
  // precondition filter; throws on failure
  auto datum = local_datum(pair, U, X);
  if (datum.replacement) {
    throw InvalidInput("UX is not fully N_F(U)-normalized");
  }
  Subgroup const CT = centralizer(F.S(), T);
  Subgroup const UX = join(U, X);
  for (auto const& alpha : F.homs(F.id(UX))) {
    Subgroup const U0 = alpha.restrict(U).image();
    Subgroup const X0 = alpha.restrict(X).image();
    if (!T.contains(U0) || !CT.contains(X0)) continue;
    std::vector<Subgroup> chain{U0};
    bool ok = true;
    while (ok) {
      Subgroup const& Ui = chain.back();
      int const id = F.id(Ui);
      if (!is_fully_normalized(F, id)) {
        ok = false;
        break;
      }
      if (Ui == T) break;
      FusionSystem const NU = normalizer_system(F, Ui);
      if (!is_fully_normalized(NU, NU.id(join(Ui, X0)))) {
        ok = false;
        break;
      }
      chain.push_back(normalizer(T, Ui));
    }
    if (ok) return Chain{std::move(chain), X0, alpha};
  }
  return std::nullopt;
}

std::vector<Subgroup> centric_family(NormalPairDescriptor const& pair, bool widen) {
  FusionSystem const& F = pair.F;
  Subgroup const& T = pair.E.S();
  std::vector<Subgroup> out;
  auto const& L = *F.lattice();
  for (std::size_t id = 0; id < L.size(); ++id) {
    int const i = static_cast<int>(id);
    Subgroup const& U = L.at(i);
    if (!widen && !T.contains(U)) continue;
    bool const centric = widen ? widened_centric(F, i, T) : is_T_centric(F, i, T);
    if (centric && is_fully_normalized(F, i)) out.push_back(U);
  }
  return out;
}

LocalCentralizerReport centralizer_subgroup_local(RealizedPair const& pair, bool widen) {
  auto const desc = NormalPairDescriptor{pair.F, pair.E, {}};
  Subgroup const& S = pair.S;
  Subgroup const trivial = Subgroup::trivial(S.parent());
  LocalCentralizerReport r{{}, S, S, {}, false};
  for (auto const& U : centric_family(desc, widen)) {
    auto datum = local_datum(desc, U, trivial, widen);
    auto model = local_model(datum, pair);
    LocalTerm term{U, model.N.order(), model.quotient.kernel.order(),
                   model.Gmodel.order(), model.Hmodel.order(),
                   model_centralizer(model, datum)};
    r.intersection = intersection(r.intersection, term.centralizer);
    r.terms.push_back(std::move(term));
  }
  Subgroup const TC = join(pair.T, centralizer(S, pair.T));
  if (!TC.contains(r.intersection)) {
    throw VerificationError("local centralizer", "intersection not inside T C_S(T)");
  }
  r.result = r.intersection;
  for (auto const& phi : pair.F.automorphisms(TC)) {
    r.result = intersection(r.result, phi.restrict(r.intersection).image());
  }
  r.direct = centralizer_subgroup_direct(pair.F, pair.E).members;
  r.matches_direct = std::equal(r.direct.begin(), r.direct.end(),
                                r.result.members().begin(), r.result.members().end());
  return r;
}

OpContainment op_containment(RealizedPair const& pair) {
  OpContainment out;
  auto fG = structure_predicates(pair.G, pair.p);
  auto fH = structure_predicates(pair.H, pair.p);
  if (!fG.O_p_prime_trivial) {
    out.reason = "O_p'(G) is not trivial";
    return out;
  }
  if (!fG.p_constrained.value_or(false) || !fH.p_constrained.value_or(false)) {
    out.reason = "G or H is not p-constrained";
    return out;
  }
  out.applicable = true;
  Subgroup const CGT = centralizer(pair.G, pair.T);
  out.lhs = intersection(residual_subgroup(CGT, pair.p, Residual::O_upper_p), pair.S);
  out.holds = centralizer(pair.G, pair.H).contains(out.lhs);
  return out;
}

HypContainmentReport verify_prop_hyp_containment(RealizedPair const& pair) {
  HypContainmentReport r;
  auto const desc = NormalPairDescriptor{pair.F, pair.E, {}};
  FusionSystem const CFT = centralizer_system(pair.F, pair.T).system;
  Subgroup const CGT = centralizer(pair.G, pair.T);
  auto const realized = FusionSystem::realized(CGT, CFT.lattice());
  r.checks.push_back(Check::of("C_F(T) realized by C_G(T)", realized.same_morphisms(CFT)));
  r.hyp = hyperfocal(CFT);
  Subgroup const trivial = Subgroup::trivial(pair.S.parent());
  for (auto const& U : centric_family(desc)) {
    auto datum = local_datum(desc, U, trivial);
    auto model = local_model(datum, pair);
    Subgroup const C = model_centralizer(model, datum);
    r.checks.push_back(Check::of("hyp <= C_N_S(U)(H(U)) at U = " + U.to_string(),
                                 C.contains(r.hyp), "C = " + C.to_string()));
  }
  auto op = op_containment(pair);
  if (op.applicable) {
    r.checks.push_back(Check::of("O^p(C_G(T)) n S <= C_G(H)", op.holds,
                                 "O^p(C_G(T)) n S = " + op.lhs.to_string()));
  } else {
    r.checks.push_back({"O^p(C_G(T)) n S <= C_G(H)", CheckStatus::skipped, op.reason});
  }
  return r;
}

GrossReport verify_gross(Subgroup const& G, unsigned p, Caps const& caps) {
  GrossReport r;
  auto flags = structure_predicates(G, p);
  if (!flags.O_p_prime_trivial) {
    r.reason = "O_p'(G) is not trivial";
    return r;
  }
  if (!flags.p_constrained.value_or(false)) {
    r.reason = "G is not p-constrained";
    return r;
  }
  r.applicable = true;
  Subgroup const S = sylow_subgroup(G, p);
  auto A = automorphism_group(G, caps, &S);
  Subgroup const C = Subgroup::whole(A.table);
  r.C_order = C.order();
  Subgroup const up = residual_subgroup(C, p, Residual::O_upper_p);
  Subgroup const low = residual_subgroup(C, p, Residual::O_p_prime);
  r.O_upper_p_order = up.order();
  r.O_p_prime_order = low.order();
  r.holds = up == low;
  return r;
}

TheoremBReport verify_theorem_b(NormalPairDescriptor const& pair) {
  FusionSystem const& F = pair.F;
  Subgroup const& S = F.S();
  Subgroup const& T = pair.E.S();
  TheoremBReport r;
  r.checks.push_back(Check::of("normal pair", pair.level() == NormalityLevel::normal,
                               to_string(pair.level())));
  r.C_S_T = centralizer(S, T);
  FusionSystem const CFT = centralizer_system(F, T).system;
  r.hyp = hyperfocal(CFT);
  auto cse = centralizer_subgroup_direct(F, pair.E);
  r.checks.push_back(Check::of("C_S(E) is a subgroup", cse.is_subgroup));
  if (!cse.is_subgroup) return r;
  r.centralizer = *cse.subgroup;
  bool const lower = r.centralizer.contains(r.hyp);
  r.checks.push_back(Check::of("hyp(C_F(T)) <= C_S(E)", lower,
                               "hyp = " + r.hyp.to_string()));
  r.checks.push_back(Check::of("C_S(E) <= C_S(T)", r.C_S_T.contains(r.centralizer)));
  if (!lower) return r;
  try {
    auto CFE = p_power_index_subsystem(CFT, r.centralizer);
    r.subsystem_morphisms = CFE.morphism_count();
    r.checks.push_back(Check::of("C_F(E) saturated", is_saturated(CFE).saturated));
    r.checks.push_back(Check::of("C_F(E) inside C_F(T)", CFE.contained_in(CFT)));
  } catch (VerificationError const& e) {
    r.checks.push_back(Check::of("C_F(E) saturated", false, e.what()));
  }
  return r;
}

}  // namespace fusionkit
