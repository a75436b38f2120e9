#include "fusionkit/fusion_system.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "fusionkit/error.hpp"
#include "fusionkit/group_ops.hpp"

namespace fusionkit {

namespace {

std::vector<Elem> conj_images(Subgroup const& P, Elem g) {
  auto const& G = P.group();
  std::vector<Elem> out;
  out.reserve(P.order());
  for (Elem x : P.members()) out.push_back(G.conj(x, g));
  return out;
}

std::vector<Elem> compose_images(Morphism const& first, Morphism const& second) {
  std::vector<Elem> out;
  out.reserve(first.images().size());
  for (Elem y : first.images()) out.push_back(second(y));
  return out;
}

}  // namespace

FusionSystem FusionSystem::finish(std::shared_ptr<Data> d) {
  auto const& L = *d->lattice;
  std::size_t const n = L.size();
  bool const has_witness = !d->witnesses.empty();
  d->image_ids.assign(n, {});
  d->lookup.assign(n, {});

  for (std::size_t id = 0; id < n; ++id) {
    auto& maps = d->homs[id];
    std::vector<std::size_t> order(maps.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      auto ia = maps[a].images();
      auto ib = maps[b].images();
      return std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(), ib.end());
    });
    std::vector<Morphism> sorted;
    std::vector<Elem> wit;
    for (std::size_t k : order) {
      if (!sorted.empty() && std::equal(sorted.back().images().begin(),
                                        sorted.back().images().end(),
                                        maps[k].images().begin(),
                                        maps[k].images().end())) {
        continue;
      }
      sorted.push_back(maps[k]);
      if (has_witness) wit.push_back(d->witnesses[id][k]);
    }
    maps = std::move(sorted);
    if (has_witness) d->witnesses[id] = std::move(wit);

    for (std::size_t k = 0; k < maps.size(); ++k) {
      auto img = maps[k].image();
      auto found = L.find(img);
      if (!found) {
        throw VerificationError("morphism image outside S",
                                maps[k].to_string());
      }
      d->image_ids[id].push_back(*found);
      auto imgs = maps[k].images();
      d->lookup[id].emplace(std::vector<Elem>(imgs.begin(), imgs.end()), k);
    }
  }

  // F-conjugacy classes: P ~ image of any map out of P.
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t id = 0; id < n; ++id) {
    for (int j : d->image_ids[id]) {
      auto a = root(id);
      auto b = root(static_cast<std::size_t>(j));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  d->class_of.assign(n, 0);
  std::vector<long> class_for_root(n, -1);
  for (std::size_t id = 0; id < n; ++id) {
    auto r = root(id);
    if (class_for_root[r] < 0) {
      class_for_root[r] = static_cast<long>(d->classes.size());
      d->classes.emplace_back();
    }
    d->class_of[id] = static_cast<std::size_t>(class_for_root[r]);
    d->classes[d->class_of[id]].push_back(static_cast<int>(id));
  }
  return FusionSystem(std::move(d));
}

FusionSystem FusionSystem::realized(Subgroup const& G, Subgroup const& S,
                                    unsigned p, Caps const& caps) {
  return realized(G, SubgroupLattice::enumerate(S, p, caps));
}

FusionSystem FusionSystem::realized(Subgroup const& G, LatticePtr lattice) {
  auto const& L = *lattice;
  Subgroup const& S = L.top();
  if (!G.contains(S)) throw InvalidInput("S is not contained in the realizing group");
  auto const& table = G.group();
  auto d = std::make_shared<Data>();
  d->lattice = lattice;
  d->ambient = G;
  d->homs.resize(L.size());
  d->witnesses.resize(L.size());
  for (std::size_t id = 0; id < L.size(); ++id) {
    Subgroup const& P = L.at(static_cast<int>(id));
    auto gens = generating_set(P);
    std::unordered_set<std::vector<Elem>, ImagesHash> seen;
    for (Elem g : G.members()) {
      bool inside = true;
      for (Elem x : gens) {
        if (!S.contains(table.conj(x, g))) {
          inside = false;
          break;
        }
      }
      if (!inside) continue;
      auto imgs = conj_images(P, g);
      if (!seen.insert(imgs).second) continue;
      d->homs[id].emplace_back(P, std::move(imgs));
      d->witnesses[id].push_back(g);
    }
  }
  return finish(std::move(d));
}

FusionSystem FusionSystem::inner(LatticePtr lattice) {
  Subgroup S = lattice->top();
  return realized(S, std::move(lattice));
}

FusionSystem FusionSystem::from_homs(LatticePtr lattice,
                                     std::vector<std::vector<Morphism>> homs,
                                     Verify verify) {
  auto const& L = *lattice;
  if (homs.size() != L.size()) {
    throw InvalidInput("hom table size does not match the subgroup lattice");
  }
  for (std::size_t id = 0; id < L.size(); ++id) {
    for (auto const& m : homs[id]) {
      if (!(m.source() == L.at(static_cast<int>(id)))) {
        throw VerificationError("morphism source mismatch", m.to_string());
      }
    }
  }
  auto d = std::make_shared<Data>();
  d->lattice = lattice;
  d->homs = std::move(homs);
  FusionSystem F = finish(std::move(d));
  if (verify == Verify::none) return F;

  Subgroup const& S = L.top();
  auto const& table = S.group();
  for (std::size_t id = 0; id < L.size(); ++id) {
    int const pid = static_cast<int>(id);
    Subgroup const& P = L.at(pid);
    auto gens = generating_set(P);
    for (auto const& m : F.homs(pid)) {
      if (!m.is_injective()) {
        throw VerificationError("morphism not injective", m.to_string());
      }
      for (std::size_t i = 0; i < P.order(); ++i) {
        for (Elem g : gens) {
          Elem x = P.members()[i];
          if (m(table.mul(x, g)) != table.mul(m.images()[i], m(g))) {
            throw VerificationError("morphism not a homomorphism", m.to_string());
          }
        }
      }
    }
    for (Elem s : S.members()) {
      if (!F.find(pid, conj_images(P, s))) {
        throw VerificationError("inner map missing",
                                "c_" + table.label(s) + " on " + P.to_string());
      }
    }
    for (std::size_t k = 0; k < F.homs(pid).size(); ++k) {
      auto const& m = F.homs(pid)[k];
      for (int mx : L.maximal_subgroups(pid)) {
        auto r = m.restrict(L.at(mx));
        if (!F.find(mx, r.images())) {
          throw VerificationError("not closed under restriction", r.to_string());
        }
      }
      int const j = F.image_id(pid, k);
      auto inv = m.inverse();
      if (!F.find(j, inv.images())) {
        throw VerificationError("inverse of isomorphism missing", inv.to_string());
      }
      for (auto const& next : F.homs(j)) {
        auto c = compose_images(m, next);
        if (!F.find(pid, c)) {
          throw VerificationError("not closed under composition",
                                  m.to_string() + " then " + next.to_string());
        }
      }
    }
  }
  return F;
}

FusionSystem FusionSystem::generated(LatticePtr lattice,
                                     std::vector<Morphism> const& seeds) {
  auto const& L = *lattice;
  Subgroup const& S = L.top();
  std::size_t const n = L.size();
  std::vector<std::vector<Morphism>> homs(n);
  std::vector<std::vector<int>> image_of(n);
  std::vector<std::unordered_set<std::vector<Elem>, ImagesHash>> seen(n);
  std::vector<std::vector<std::pair<int, std::size_t>>> into(n);
  std::deque<std::pair<int, std::size_t>> work;

  auto add = [&](int id, std::vector<Elem> images) {
    auto& bucket = seen[static_cast<std::size_t>(id)];
    if (!bucket.insert(images).second) return;
    Morphism m(L.at(id), std::move(images));
    auto j = L.find(m.image());
    if (!j) throw VerificationError("generated map leaves S", m.to_string());
    auto k = homs[static_cast<std::size_t>(id)].size();
    homs[static_cast<std::size_t>(id)].push_back(std::move(m));
    image_of[static_cast<std::size_t>(id)].push_back(*j);
    into[static_cast<std::size_t>(*j)].emplace_back(id, k);
    work.emplace_back(id, k);
  };

  for (std::size_t id = 0; id < n; ++id) {
    Subgroup const& P = L.at(static_cast<int>(id));
    for (Elem s : S.members()) add(static_cast<int>(id), conj_images(P, s));
  }
  for (auto const& m : seeds) {
    auto id = L.find(m.source());
    if (!id) throw InvalidInput("seed morphism source outside S: " + m.to_string());
    if (!m.is_injective() || !m.is_homomorphism()) {
      throw InvalidInput("seed is not an injective homomorphism: " + m.to_string());
    }
    auto imgs = m.images();
    add(*id, std::vector<Elem>(imgs.begin(), imgs.end()));
  }

  while (!work.empty()) {
    auto [id, k] = work.front();
    work.pop_front();
    Morphism const phi = homs[static_cast<std::size_t>(id)][k];
    int const j = image_of[static_cast<std::size_t>(id)][k];
    for (int mx : L.maximal_subgroups(id)) {
      auto r = phi.restrict(L.at(mx));
      add(mx, std::vector<Elem>(r.images().begin(), r.images().end()));
    }
    {
      auto inv = phi.inverse();
      add(j, std::vector<Elem>(inv.images().begin(), inv.images().end()));
    }
    for (std::size_t t = 0; t < homs[static_cast<std::size_t>(j)].size(); ++t) {
      Morphism const next = homs[static_cast<std::size_t>(j)][t];
      add(id, compose_images(phi, next));
    }
    auto const incoming = into[static_cast<std::size_t>(id)];
    for (auto [src, t] : incoming) {
      Morphism const prev = homs[static_cast<std::size_t>(src)][t];
      add(src, compose_images(prev, phi));
    }
  }
  return from_homs(std::move(lattice), std::move(homs), Verify::none);
}

Subgroup const& FusionSystem::ambient() const {
  if (!d_->ambient) throw InvalidInput("fusion system is not realized");
  return *d_->ambient;
}

Elem FusionSystem::witness(int id, std::size_t k) const {
  if (d_->witnesses.empty()) throw InvalidInput("fusion system is not realized");
  return d_->witnesses.at(static_cast<std::size_t>(id)).at(k);
}

std::optional<std::size_t> FusionSystem::find(int id, std::span<Elem const> images) const {
  auto const& m = d_->lookup.at(static_cast<std::size_t>(id));
  auto it = m.find(std::vector<Elem>(images.begin(), images.end()));
  if (it == m.end()) return std::nullopt;
  return it->second;
}

bool FusionSystem::contains(Morphism const& m) const {
  auto id = d_->lattice->find(m.source());
  if (!id) return false;
  return find(*id, m.images()).has_value();
}

std::vector<Morphism> FusionSystem::hom_set(Subgroup const& P, Subgroup const& Q) const {
  int const pid = id(P);
  std::vector<Morphism> out;
  auto const& maps = d_->homs[static_cast<std::size_t>(pid)];
  for (std::size_t k = 0; k < maps.size(); ++k) {
    if (Q.contains(subgroup(image_id(pid, k)))) out.push_back(maps[k]);
  }
  return out;
}

std::vector<Morphism> FusionSystem::automorphisms(int pid) const {
  std::vector<Morphism> out;
  auto const& maps = d_->homs.at(static_cast<std::size_t>(pid));
  for (std::size_t k = 0; k < maps.size(); ++k) {
    if (image_id(pid, k) == pid) out.push_back(maps[k]);
  }
  return out;
}

std::span<int const> FusionSystem::conjugacy_class(int id) const {
  return d_->classes.at(class_index(id));
}

std::size_t FusionSystem::morphism_count() const {
  std::size_t total = 0;
  for (auto const& h : d_->homs) total += h.size();
  return total;
}

bool FusionSystem::same_morphisms(FusionSystem const& other) const {
  if (!(S() == other.S())) return false;
  return contained_in(other) && other.contained_in(*this);
}

bool FusionSystem::contained_in(FusionSystem const& other) const {
  if (!other.S().contains(S())) return false;
  auto const& L = *d_->lattice;
  for (std::size_t id = 0; id < L.size(); ++id) {
    auto oid = other.lattice()->find(L.at(static_cast<int>(id)));
    if (!oid) return false;
    for (auto const& m : homs(static_cast<int>(id))) {
      if (!other.find(*oid, m.images())) return false;
    }
  }
  return true;
}

}  // namespace fusionkit
