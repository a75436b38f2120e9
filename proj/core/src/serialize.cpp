#include "fusionkit/serialize.hpp"

#include "fusionkit/group_ops.hpp"

namespace fusionkit {

Json elements_json(GroupTable const& group, std::span<Elem const> elems) {
  Json out = Json::array();
  for (Elem x : elems) out.push_back(group.label(x));
  return out;
}

Json to_json(Subgroup const& sub) {
  if (!sub.valid()) return nullptr;
  auto gens = generating_set(sub);
  return Json{{"order", sub.order()},
              {"members", std::vector<Elem>(sub.members().begin(), sub.members().end())},
              {"generators", elements_json(sub.group(), gens)}};
}

Json to_json(Morphism const& phi) {
  auto const& g = phi.source().group();
  Json map = Json::array();
  auto src = phi.source().members();
  for (std::size_t i = 0; i < src.size(); ++i) {
    map.push_back({g.label(src[i]), g.label(phi.images()[i])});
  }
  return Json{{"source", std::vector<Elem>(src.begin(), src.end())},
              {"images", std::vector<Elem>(phi.images().begin(), phi.images().end())},
              {"map", std::move(map)}};
}

Json to_json(FusionSystem const& F) {
  auto const& L = *F.lattice();
  Json objects = Json::array();
  for (std::size_t id = 0; id < L.size(); ++id) {
    Subgroup const& P = L.at(static_cast<int>(id));
    Json homs = Json::array();
    for (auto const& phi : F.homs(static_cast<int>(id))) {
      homs.push_back(std::vector<Elem>(phi.images().begin(), phi.images().end()));
    }
    objects.push_back({{"members", std::vector<Elem>(P.members().begin(), P.members().end())},
                       {"homs", std::move(homs)}});
  }
  return Json{{"S", to_json(F.S())},
              {"morphisms", F.morphism_count()},
              {"classes", F.class_count()},
              {"objects", std::move(objects)}};
}

Json to_json(Check const& check) {
  Json j{{"name", check.name}, {"status", to_string(check.status)}};
  if (!check.detail.empty()) j["detail"] = check.detail;
  return j;
}

Json to_json(std::vector<Check> const& checks) {
  Json out = Json::array();
  for (auto const& c : checks) out.push_back(to_json(c));
  return out;
}

Json to_json(NormalityReport const& r) {
  Json j{{"level", to_string(r.level)},
         {"contained", r.contained},
         {"strongly_closed", r.strongly_closed},
         {"strongly_invariant", r.strongly_invariant},
         {"saturated", r.saturated},
         {"extension_condition", r.extension_condition}};
  if (!r.failed.empty()) j["failed"] = r.failed;
  if (!r.witness.empty()) j["witness"] = r.witness;
  if (r.unextendable) j["unextendable"] = to_json(*r.unextendable);
  if (!r.rejected_extensions.empty()) {
    Json rej = Json::array();
    for (auto const& m : r.rejected_extensions) rej.push_back(to_json(m));
    j["rejected_extensions"] = std::move(rej);
  }
  return j;
}

Json to_json(CentralizerSet const& c) {
  Json j{{"members", c.members}, {"is_subgroup", c.is_subgroup}};
  if (c.strongly_closed) j["strongly_closed"] = *c.strongly_closed;
  if (!c.not_fully_centralized.empty()) j["not_fully_centralized"] = c.not_fully_centralized;
  return j;
}

Json to_json(TheoremAReport const& r) {
  return Json{{"centralizer", r.centralizer},
              {"aut_L_T_order", r.aut_L_T_order},
              {"aut_L_T_extended", r.aut_L_T_extended},
              {"L_objects", r.L_objects},
              {"L0_objects", r.L0_objects},
              {"kernel_order", r.kernel_order},
              {"functors", r.functors},
              {"l_trivial_functors", r.l_trivial_functors},
              {"conjugation_image", r.conjugation_image},
              {"checks", to_json(r.checks)}};
}

Json to_json(TheoremBReport const& r) {
  return Json{{"hyp", to_json(r.hyp)},
              {"centralizer", to_json(r.centralizer)},
              {"C_S_T", to_json(r.C_S_T)},
              {"subsystem_morphisms", r.subsystem_morphisms},
              {"checks", to_json(r.checks)}};
}

Json to_json(HypContainmentReport const& r) {
  return Json{{"hyp", to_json(r.hyp)}, {"checks", to_json(r.checks)}};
}

Json to_json(LocalCentralizerReport const& r) {
  Json terms = Json::array();
  for (auto const& t : r.terms) {
    terms.push_back({{"U", to_json(t.U)},
                     {"N_order", t.N_order},
                     {"core_order", t.core_order},
                     {"G_model_order", t.G_model_order},
                     {"H_model_order", t.H_model_order},
                     {"centralizer", to_json(t.centralizer)}});
  }
  return Json{{"terms", std::move(terms)},
              {"intersection", to_json(r.intersection)},
              {"result", to_json(r.result)},
              {"direct", r.direct},
              {"matches_direct", r.matches_direct}};
}

Json to_json(OpContainment const& r) {
  Json j{{"applicable", r.applicable}};
  if (!r.applicable) {
    j["reason"] = r.reason;
    return j;
  }
  j["lhs"] = to_json(r.lhs);
  j["holds"] = r.holds;
  return j;
}

Json to_json(GrossReport const& r) {
  Json j{{"applicable", r.applicable}};
  if (!r.applicable) {
    j["reason"] = r.reason;
    return j;
  }
  j["C_order"] = r.C_order;
  j["O_upper_p_order"] = r.O_upper_p_order;
  j["O_p_prime_order"] = r.O_p_prime_order;
  j["holds"] = r.holds;
  return j;
}

Json to_json(Chain const& c) {
  Json subs = Json::array();
  for (auto const& s : c.subgroups) subs.push_back(to_json(s));
  return Json{{"subgroups", std::move(subs)}, {"X", to_json(c.X)}, {"alpha", to_json(c.alpha)}};
}

Json to_json(ExampleRegression const& r) {
  return Json{{"checks", to_json(r.checks)},
              {"normality", to_json(r.normality)},
              {"centralizing_set", to_json(r.centralizing_set)}};
}

Json to_json(Conjecture52Result const& r) {
  Json j{{"verdict", to_string(r.verdict)}, {"C_S_H", to_json(r.C_S_H)}};
  if (!r.reason.empty()) j["reason"] = r.reason;
  if (r.verdict == Verdict::skipped) return j;
  j["centralizer"] = r.centralizer;
  if (r.verdict == Verdict::fails) {
    j["only_centralizer"] = r.only_centralizer;
    j["only_C_S_H"] = r.only_C_S_H;
  }
  return j;
}

Json to_json(Conjecture53Result const& r) {
  Json j{{"verdict", to_string(r.verdict)}, {"C_S_H", to_json(r.C_S_H)}};
  if (!r.reason.empty()) j["reason"] = r.reason;
  if (r.verdict == Verdict::skipped) return j;
  j["candidate_morphisms"] = r.candidate_morphisms;
  j["subsystem_morphisms"] = r.subsystem_morphisms;
  if (r.p_power_index) j["p_power_index"] = *r.p_power_index;
  if (!r.witness.empty()) j["witness"] = r.witness;
  return j;
}

}  // namespace fusionkit
