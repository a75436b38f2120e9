#include "fusionkit/fusion_checks.hpp"

#include <algorithm>
#include <unordered_set>

#include "fusionkit/error.hpp"
#include "fusionkit/group_ops.hpp"

namespace fusionkit {

namespace {

struct VecHash {
  std::size_t operator()(std::vector<Elem> const& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (Elem x : v) h = (h ^ x) * 0x100000001b3ull;
    return h;
  }
};

bool restricts_to(Morphism const& psi, Morphism const& phi) {
  auto src = phi.source().members();
  auto img = phi.images();
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (psi(src[i]) != img[i]) return false;
  }
  return true;
}

std::size_t aut_S_order(FusionSystem const& F, int id) {
  auto const& L = *F.lattice();
  return L.normalizer_order(id) / L.centralizer_order(id);
}

/// x -> (x phi^-1)^g phi on the image of phi.
std::vector<Elem> twisted_conjugation(Morphism const& phi, Morphism const& phi_inv,
                                      Elem g) {
  auto const& G = phi.source().group();
  auto target = phi_inv.source().members();
  std::vector<Elem> out;
  out.reserve(target.size());
  for (Elem y : target) out.push_back(phi(G.conj(phi_inv(y), g)));
  return out;
}

}  // namespace

bool is_fully_normalized(FusionSystem const& F, int id) {
  auto const& L = *F.lattice();
  auto n = L.normalizer_order(id);
  for (int q : F.conjugacy_class(id)) {
    if (L.normalizer_order(q) > n) return false;
  }
  return true;
}

bool is_fully_centralized(FusionSystem const& F, int id) {
  auto const& L = *F.lattice();
  auto n = L.centralizer_order(id);
  for (int q : F.conjugacy_class(id)) {
    if (L.centralizer_order(q) > n) return false;
  }
  return true;
}

bool is_fully_automized(FusionSystem const& F, int id) {
  std::size_t const aut = F.automorphisms(id).size();
  return aut_S_order(F, id) == p_part(aut, F.p());
}

bool is_receptive(FusionSystem const& F, int id) {
  auto const& L = *F.lattice();
  Subgroup const& P = L.at(id);
  Subgroup const N = normalizer(F.S(), P);
  std::unordered_set<std::vector<Elem>, VecHash> aut_S;
  for (Elem s : N.members()) {
    Morphism const c = Morphism::conjugation(P, s);
    aut_S.emplace(c.images().begin(), c.images().end());
  }
  for (int q : F.conjugacy_class(id)) {
    Subgroup const& Q = L.at(q);
    Subgroup const NQ = normalizer(F.S(), Q);
    auto maps = F.homs(q);
    for (std::size_t k = 0; k < maps.size(); ++k) {
      if (F.image_id(q, k) != id) continue;
      Morphism const& phi = maps[k];
      Morphism const phi_inv = phi.inverse();
      std::vector<Elem> gens;
      for (Elem g : NQ.members()) {
        if (Q.contains(g)) continue;
        if (aut_S.count(twisted_conjugation(phi, phi_inv, g))) gens.push_back(g);
      }
      if (gens.empty()) continue;
      Subgroup const N_phi = join(Q, gens);
      int const nid = L.id_of(N_phi);
      bool extended = false;
      for (auto const& psi : F.homs(nid)) {
        if (restricts_to(psi, phi)) {
          extended = true;
          break;
        }
      }
      if (!extended) return false;
    }
  }
  return true;
}

bool is_F_centric(FusionSystem const& F, int id) {
  auto const& L = *F.lattice();
  for (int q : F.conjugacy_class(id)) {
    if (L.centralizer_order(q) > L.at(q).order()) return false;
    if (!L.at(q).contains(centralizer(F.S(), L.at(q)))) return false;
  }
  return true;
}

bool is_T_centric(FusionSystem const& F, int id, Subgroup const& T) {
  auto const& L = *F.lattice();
  for (int q : F.conjugacy_class(id)) {
    Subgroup const& Q = L.at(q);
    if (!T.contains(Q)) continue;
    if (!Q.contains(centralizer(T, Q))) return false;
  }
  return true;
}

SubgroupStatus classify_subgroup(FusionSystem const& F, int id, Subgroup const* T) {
  SubgroupStatus st;
  st.fully_normalized = is_fully_normalized(F, id);
  st.fully_centralized = is_fully_centralized(F, id);
  st.fully_automized = is_fully_automized(F, id);
  st.receptive = is_receptive(F, id);
  st.F_centric = is_F_centric(F, id);
  if (T) st.T_centric = is_T_centric(F, id, *T);
  return st;
}

int fully_normalized_representative(FusionSystem const& F, int id) {
  auto const& L = *F.lattice();
  int best = -1;
  for (int q : F.conjugacy_class(id)) {
    if (best < 0 || L.normalizer_order(q) > L.normalizer_order(best)) best = q;
  }
  return best;
}

int fully_centralized_representative(FusionSystem const& F, int id) {
  auto const& L = *F.lattice();
  int best = -1;
  for (int q : F.conjugacy_class(id)) {
    if (best < 0 || L.centralizer_order(q) > L.centralizer_order(best)) best = q;
  }
  return best;
}

std::optional<Morphism> isomorphism_between(FusionSystem const& F, int from, int to) {
  auto maps = F.homs(from);
  for (std::size_t k = 0; k < maps.size(); ++k) {
    if (F.image_id(from, k) == to) return maps[k];
  }
  return std::nullopt;
}

SaturationCertificate is_saturated(FusionSystem const& F) {
  SaturationCertificate cert;
  cert.saturated = true;
  cert.witnesses.assign(F.class_count(), -1);
  auto const& L = *F.lattice();
  for (std::size_t c = 0; c < F.class_count(); ++c) {
    std::vector<int> members(F.class_members(c).begin(), F.class_members(c).end());
    // fully automized members are the ones with largest Aut_S(P); try the
    // most normalized first
    std::stable_sort(members.begin(), members.end(), [&](int a, int b) {
      return L.normalizer_order(a) > L.normalizer_order(b);
    });
    for (int q : members) {
      if (is_fully_automized(F, q) && is_receptive(F, q)) {
        cert.witnesses[c] = q;
        break;
      }
    }
    if (cert.witnesses[c] < 0 && cert.saturated) {
      cert.saturated = false;
      cert.failing_class = c;
    }
  }
  return cert;
}

bool is_strongly_closed(FusionSystem const& F, Subgroup const& X) {
  if (!F.S().contains(X)) throw InvalidInput("subgroup is not contained in S");
  auto const& L = *F.lattice();
  for (Elem x : X.members()) {
    Elem gen[] = {x};
    int const cid = L.id_of(generate_subgroup(X.parent(), gen));
    for (std::size_t k = 0; k < F.homs(cid).size(); ++k) {
      if (!X.contains(F.homs(cid)[k](x))) return false;
    }
  }
  return true;
}

char const* to_string(NormalityLevel level) {
  switch (level) {
    case NormalityLevel::none: return "none";
    case NormalityLevel::invariant: return "invariant";
    case NormalityLevel::weakly_normal: return "weakly-normal";
    case NormalityLevel::normal: return "normal";
  }
  return "none";
}

NormalityReport invariance_and_normality(FusionSystem const& F,
                                         FusionSystem const& E) {
  NormalityReport r;
  Subgroup const& S = F.S();
  Subgroup const& T = E.S();
  auto const& LF = *F.lattice();
  auto const& LE = *E.lattice();
  auto const& G = S.group();

  r.contained = E.contained_in(F);
  if (!r.contained) {
    r.failed = "E is not a subsystem of F";
    return r;
  }

  for (Elem x : T.members()) {
    Elem gen[] = {x};
    int const cid = LF.id_of(generate_subgroup(T.parent(), gen));
    for (auto const& m : F.homs(cid)) {
      if (!T.contains(m(x))) {
        r.failed = "T is not strongly F-closed";
        r.witness = G.label(x) + " -> " + G.label(m(x)) + " via " + m.to_string();
        return r;
      }
    }
  }
  r.strongly_closed = true;

  for (std::size_t pid = 0; pid < LE.size(); ++pid) {
    Subgroup const& P = LE.at(static_cast<int>(pid));
    for (auto const& phi : E.homs(static_cast<int>(pid))) {
      Subgroup const Q = join(P, phi.image());
      int const qid = LF.id_of(Q);
      auto psis = F.homs(qid);
      for (std::size_t k = 0; k < psis.size(); ++k) {
        Morphism const& psi = psis[k];
        if (!T.contains(LF.at(F.image_id(qid, k)))) continue;
        std::vector<std::pair<Elem, Elem>> pairs;
        pairs.reserve(P.order());
        for (Elem x : P.members()) pairs.emplace_back(psi(x), psi(phi(x)));
        std::sort(pairs.begin(), pairs.end());
        std::vector<Elem> dom, img;
        for (auto [a, b] : pairs) {
          dom.push_back(a);
          img.push_back(b);
        }
        Subgroup const Ppsi(T.parent(), dom);
        auto eid = LE.find(Ppsi);
        if (!eid || !E.find(*eid, img)) {
          r.failed = "E is not strongly F-invariant";
          r.witness = "phi = " + phi.to_string() + ", psi = " + psi.to_string();
          return r;
        }
      }
    }
  }
  r.strongly_invariant = true;
  r.level = NormalityLevel::invariant;

  r.saturated = is_saturated(E).saturated;
  if (!r.saturated) {
    r.failed = "E is not saturated";
    return r;
  }
  r.level = NormalityLevel::weakly_normal;

  Subgroup const C = centralizer(S, T);
  Subgroup const TC = join(T, C);
  Subgroup const Z = center(T);
  int const tc_id = LF.id_of(TC);
  auto const exts = F.automorphisms(tc_id);
  for (auto const& alpha : E.automorphisms(E.lattice()->top_id())) {
    bool ok = false;
    std::vector<Morphism> rejected;
    for (auto const& ext : exts) {
      if (!restricts_to(ext, alpha)) continue;
      bool central = true;
      for (Elem c : C.members()) {
        if (!Z.contains(G.mul(G.inv(c), ext(c)))) {
          central = false;
          break;
        }
      }
      if (central) {
        ok = true;
        break;
      }
      rejected.push_back(ext);
    }
    if (!ok) {
      r.failed = "extension condition";
      r.witness = alpha.to_string();
      r.unextendable = alpha;
      r.rejected_extensions = std::move(rejected);
      return r;
    }
  }
  r.extension_condition = true;
  r.level = NormalityLevel::normal;
  return r;
}

}  // namespace fusionkit
