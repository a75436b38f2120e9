#include "fusionkit/fusion_subsystems.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

#include "fusionkit/error.hpp"
#include "fusionkit/fusion_checks.hpp"
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

std::vector<Elem> as_vector(std::span<Elem const> s) { return {s.begin(), s.end()}; }

bool fixes(Morphism const& psi, Subgroup const& X) {
  for (Elem x : X.members()) {
    if (psi(x) != x) return false;
  }
  return true;
}

std::vector<Elem> restricted_images(Morphism const& psi, Subgroup const& P) {
  std::vector<Elem> out;
  out.reserve(P.order());
  for (Elem x : P.members()) out.push_back(psi(x));
  return out;
}

std::vector<std::vector<Morphism>> empty_table(SubgroupLattice const& L) {
  return std::vector<std::vector<Morphism>>(L.size());
}

}  // namespace

std::size_t morphism_order(Morphism const& alpha) {
  auto src = alpha.source().members();
  std::vector<Elem> cur(src.begin(), src.end());
  std::size_t k = 0;
  do {
    for (auto& y : cur) y = alpha(y);
    ++k;
  } while (!std::equal(cur.begin(), cur.end(), src.begin()));
  return k;
}

std::vector<Morphism> p_prime_elements(std::span<Morphism const> autos, unsigned p) {
  std::vector<Morphism> out;
  for (auto const& a : autos) {
    if (morphism_order(a) % p != 0) out.push_back(a);
  }
  return out;
}

std::vector<Morphism> op_residual(std::span<Morphism const> autos, unsigned p) {
  if (autos.empty()) return {};
  auto gens = p_prime_elements(autos, p);
  std::set<std::vector<Elem>> seen;
  std::vector<Morphism> out;
  std::deque<Morphism> work;
  Morphism id = Morphism::identity(autos.front().source());
  seen.insert(as_vector(id.images()));
  out.push_back(id);
  work.push_back(id);
  while (!work.empty()) {
    Morphism a = work.front();
    work.pop_front();
    for (auto const& g : gens) {
      Morphism b = a.then(g);
      if (seen.insert(as_vector(b.images())).second) {
        out.push_back(b);
        work.push_back(b);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](Morphism const& a, Morphism const& b) {
    return std::lexicographical_compare(a.images().begin(), a.images().end(),
                                        b.images().begin(), b.images().end());
  });
  return out;
}

bool extends_fixing(FusionSystem const& F, Morphism const& phi, Subgroup const& X) {
  Subgroup const& P = phi.source();
  Subgroup const PX = join(P, X);
  int const id = F.id(PX);
  for (auto const& psi : F.homs(id)) {
    if (!fixes(psi, X)) continue;
    bool same = true;
    auto src = P.members();
    for (std::size_t i = 0; i < src.size() && same; ++i) {
      same = psi(src[i]) == phi.images()[i];
    }
    if (same) return true;
  }
  return false;
}

bool centralized_by(FusionSystem const& F, FusionSystem const& E, Subgroup const& X) {
  auto const& LE = *E.lattice();
  auto const C = centralizer(F.S(), X);
  if (!C.contains(E.S())) return false;
  for (std::size_t id = 0; id < LE.size(); ++id) {
    Subgroup const& P = LE.at(static_cast<int>(id));
    int const pxid = F.id(join(P, X));
    std::unordered_set<std::vector<Elem>, VecHash> allowed;
    for (auto const& psi : F.homs(pxid)) {
      if (fixes(psi, X)) allowed.insert(restricted_images(psi, P));
    }
    for (auto const& phi : E.homs(static_cast<int>(id))) {
      if (!allowed.count(as_vector(phi.images()))) return false;
    }
  }
  return true;
}

CentralizerSystem centralizer_system(FusionSystem const& F, Subgroup const& X) {
  if (!F.S().contains(X)) throw InvalidInput("X is not contained in S");
  int const xid = F.id(X);
  int const rep = fully_centralized_representative(F, xid);
  CentralizerSystem out{F, X, std::nullopt};
  if (!is_fully_centralized(F, xid)) {
    out.substitution = isomorphism_between(F, xid, rep);
    out.X = F.subgroup(rep);
  }
  Subgroup const& Y = out.X;
  Subgroup const C = centralizer(F.S(), Y);
  auto LC = F.lattice()->restricted_to(C);
  auto homs = empty_table(*LC);
  for (std::size_t id = 0; id < LC->size(); ++id) {
    Subgroup const& P = LC->at(static_cast<int>(id));
    int const pxid = F.id(join(P, Y));
    std::unordered_set<std::vector<Elem>, VecHash> seen;
    for (auto const& psi : F.homs(pxid)) {
      if (!fixes(psi, Y)) continue;
      auto imgs = restricted_images(psi, P);
      if (seen.insert(imgs).second) homs[id].emplace_back(P, std::move(imgs));
    }
  }
  out.system = FusionSystem::from_homs(LC, std::move(homs), FusionSystem::Verify::none);
  return out;
}

FusionSystem k_normalizer_system(FusionSystem const& F, Subgroup const& R,
                                 std::vector<Morphism> const& K) {
  if (!F.S().contains(R)) throw InvalidInput("R is not contained in S");
  int const rid = F.id(R);
  std::unordered_set<std::vector<Elem>, VecHash> Kset;
  for (auto const& k : K) {
    if (!(k.source() == R)) throw InvalidInput("K contains a map not defined on R");
    if (!F.find(rid, k.images()) || !(k.image() == R)) {
      throw InvalidInput("K contains a map outside Aut_F(R): " + k.to_string());
    }
    Kset.insert(as_vector(k.images()));
  }
  for (auto const& a : K) {
    for (auto const& b : K) {
      if (!Kset.count(as_vector(a.then(b).images()))) {
        throw InvalidInput("K is not closed under composition");
      }
    }
  }
  if (!Kset.count(as_vector(Morphism::identity(R).images()))) {
    throw InvalidInput("K does not contain the identity");
  }

  Subgroup const N = normalizer(F.S(), R);
  std::vector<Elem> members;
  for (Elem s : N.members()) {
    if (Kset.count(as_vector(Morphism::conjugation(R, s).images()))) members.push_back(s);
  }
  Subgroup const NK(F.S().parent(), members);
  auto LN = F.lattice()->restricted_to(NK);
  auto homs = empty_table(*LN);
  for (std::size_t id = 0; id < LN->size(); ++id) {
    Subgroup const& P = LN->at(static_cast<int>(id));
    Subgroup const PR = join(P, R);
    int const prid = F.id(PR);
    std::unordered_set<std::vector<Elem>, VecHash> seen;
    for (auto const& psi : F.homs(prid)) {
      if (!Kset.count(restricted_images(psi, R))) continue;
      auto imgs = restricted_images(psi, P);
      if (!std::all_of(imgs.begin(), imgs.end(), [&](Elem y) { return NK.contains(y); })) {
        continue;
      }
      if (seen.insert(imgs).second) homs[id].emplace_back(P, std::move(imgs));
    }
  }
  return FusionSystem::from_homs(LN, std::move(homs), FusionSystem::Verify::none);
}

FusionSystem normalizer_system(FusionSystem const& F, Subgroup const& R) {
  return k_normalizer_system(F, R, F.automorphisms(R));
}

FusionSystem intersect_fusion_systems(FusionSystem const& F1, FusionSystem const& F2) {
  if (!(F1.S() == F2.S())) {
    throw InvalidInput("intersection of fusion systems on different groups");
  }
  auto const& L = *F1.lattice();
  auto homs = empty_table(L);
  for (std::size_t id = 0; id < L.size(); ++id) {
    int const id2 = F2.id(L.at(static_cast<int>(id)));
    for (auto const& m : F1.homs(static_cast<int>(id))) {
      if (F2.find(id2, m.images())) homs[id].push_back(m);
    }
  }
  return FusionSystem::from_homs(F1.lattice(), std::move(homs));
}

Subgroup hyperfocal(FusionSystem const& F) {
  auto const& L = *F.lattice();
  auto const& G = F.S().group();
  std::set<Elem> gens;
  for (std::size_t id = 0; id < L.size(); ++id) {
    Subgroup const& P = L.at(static_cast<int>(id));
    auto autos = F.automorphisms(static_cast<int>(id));
    for (auto const& a : p_prime_elements(autos, F.p())) {
      for (Elem g : P.members()) gens.insert(G.mul(G.inv(g), a(g)));
    }
  }
  std::vector<Elem> list(gens.begin(), gens.end());
  return generate_subgroup(F.S().parent(), list);
}

FusionSystem p_power_index_subsystem(FusionSystem const& F, Subgroup const& R) {
  if (!F.S().contains(R)) throw InvalidInput("R is not contained in S");
  Subgroup const hyp = hyperfocal(F);
  if (!R.contains(hyp)) {
    throw InvalidInput("R does not contain the hyperfocal subgroup");
  }
  auto const& L = *F.lattice();
  auto LR = L.restricted_to(R);
  std::vector<Morphism> seeds;
  for (std::size_t id = 0; id < L.size(); ++id) {
    Subgroup const& P = L.at(static_cast<int>(id));
    auto autos = F.automorphisms(static_cast<int>(id));
    auto gens = p_prime_elements(autos, F.p());
    if (gens.empty()) continue;
    Subgroup const PR = intersection(P, R);
    for (auto const& a : gens) seeds.push_back(a.restrict(PR));
  }
  FusionSystem FR = FusionSystem::generated(LR, seeds);

  if (!FR.contained_in(F)) {
    throw VerificationError("p-power index subsystem", "not contained in F");
  }
  auto cert = is_saturated(FR);
  if (!cert.saturated) {
    throw VerificationError("p-power index subsystem",
                            "generated subsystem is not saturated");
  }
  for (std::size_t id = 0; id < LR->size(); ++id) {
    Subgroup const& P = LR->at(static_cast<int>(id));
    auto autos = F.automorphisms(P);
    for (auto const& a : p_prime_elements(autos, F.p())) {
      if (!FR.find(static_cast<int>(id), a.images())) {
        throw VerificationError("p-power index subsystem",
                                "O^p(Aut_F(P)) missing on " + P.to_string());
      }
    }
  }
  return FR;
}

CentralizerSet centralizer_subgroup_direct(FusionSystem const& F,
                                           FusionSystem const& E) {
  Subgroup const& S = F.S();
  Subgroup const& T = E.S();
  auto const& LE = *E.lattice();
  CentralizerSet out;
  Subgroup const C = centralizer(S, T);
  for (Elem g : C.members()) {
    Elem gen[] = {g};
    Subgroup const X = generate_subgroup(S.parent(), gen);
    bool ok = true;
    for (std::size_t id = 0; id < LE.size() && ok; ++id) {
      Subgroup const& P = LE.at(static_cast<int>(id));
      int const pxid = F.id(join(P, X));
      std::unordered_set<std::vector<Elem>, VecHash> allowed;
      for (auto const& psi : F.homs(pxid)) {
        if (psi(g) == g) allowed.insert(restricted_images(psi, P));
      }
      for (auto const& phi : E.homs(static_cast<int>(id))) {
        if (!allowed.count(as_vector(phi.images()))) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    out.members.push_back(g);
    if (!is_fully_centralized(F, F.id(X))) out.not_fully_centralized.push_back(g);
  }
  out.is_subgroup = is_closed(S.group(), out.members);
  if (out.is_subgroup) {
    out.subgroup = Subgroup(S.parent(), out.members);
    out.strongly_closed = is_strongly_closed(F, *out.subgroup);
  }
  return out;
}

Subgroup center_of_fusion_system(FusionSystem const& F) {
  auto set = centralizer_subgroup_direct(F, F);
  if (!set.is_subgroup) {
    throw VerificationError("center of fusion system", "C_S(F) is not a subgroup");
  }
  return *set.subgroup;
}

}  // namespace fusionkit
