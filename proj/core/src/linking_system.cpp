#include "fusionkit/linking_system.hpp"

#include <algorithm>

#include "fusionkit/error.hpp"
#include "fusionkit/fusion_checks.hpp"
#include "fusionkit/group_ops.hpp"

namespace fusionkit {

namespace {

Elem least_in_coset(Subgroup const& K, Elem g) {
  auto const& G = K.group();
  Elem best = G.mul(K.members().front(), g);
  for (Elem k : K.members()) best = std::min(best, G.mul(k, g));
  return best;
}

std::vector<Elem> coset_reps(Subgroup const& K, std::vector<Elem> const& elems) {
  std::vector<Elem> out;
  out.reserve(elems.size() / K.order() + 1);
  for (Elem g : elems) out.push_back(least_in_coset(K, g));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Subgroup p_prime_core_of_centralizer(Subgroup const& G, Subgroup const& P, unsigned p) {
  return residual_subgroup(centralizer(G, P), p, Residual::O_p_prime);
}

}  // namespace

LinkingSystem LinkingSystem::build(FusionSystem const& F,
                                   std::optional<std::vector<Subgroup>> objects) {
  if (!F.is_realized()) throw InvalidInput("linking systems need a realized fusion system");
  auto const& L = *F.lattice();
  Subgroup const& G = F.ambient();
  auto const& table = G.group();
  unsigned const p = F.p();

  std::vector<int> ids;
  if (objects) {
    for (auto const& P : *objects) {
      auto id = L.find(P);
      if (!id) throw InvalidInput("object is not a subgroup of S: " + P.to_string());
      ids.push_back(*id);
    }
  } else {
    for (std::size_t id = 0; id < L.size(); ++id) {
      if (is_F_centric(F, static_cast<int>(id))) ids.push_back(static_cast<int>(id));
    }
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  for (int id : ids) {
    for (int q : F.conjugacy_class(id)) {
      if (!std::binary_search(ids.begin(), ids.end(), q)) {
        throw InvalidInput("object set is not closed under F-conjugacy: " +
                           L.at(q).to_string() + " missing");
      }
    }
  }

  auto d = std::make_shared<Data>(Data{F, {}, {}, {}});
  for (int id : ids) {
    Subgroup const& P = L.at(id);
    Subgroup const C = centralizer(G, P);
    Subgroup const K = residual_subgroup(C, p, Residual::O_p_prime);
    if (C.order() != center(P).order() * K.order()) {
      throw InvalidInput("object is not p-centric: " + P.to_string());
    }
    d->objects.push_back(P);
    d->kernels.push_back(K);
  }
  std::size_t const n = d->objects.size();
  d->mor.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto tr = transporter(G, d->objects[i], d->objects[j]);
      auto reps = coset_reps(d->kernels[i], tr);
      for (Elem g : reps) {
        for (Elem k : d->kernels[j].members()) {
          if (!d->kernels[i].contains(table.mul(table.mul(g, k), table.inv(g)))) {
            throw VerificationError(
                "composition not well defined",
                "[" + table.label(g) + "] : " + d->objects[i].to_string() + " -> " +
                    d->objects[j].to_string() + " with " + table.label(k));
          }
        }
        for (Elem x : d->objects[i].members()) {
          // axiom (C): [x][g] = [g][x^g]
          Elem lhs = least_in_coset(d->kernels[i], table.mul(x, g));
          Elem rhs = least_in_coset(d->kernels[i], table.mul(g, table.conj(x, g)));
          if (lhs != rhs) {
            throw VerificationError("axiom (C)", table.label(g) + ", " + table.label(x));
          }
        }
      }
      d->mor[i * n + j] = std::move(reps);
    }
  }
  return LinkingSystem(std::move(d));
}

std::optional<int> LinkingSystem::object_index(Subgroup const& P) const {
  for (std::size_t i = 0; i < d_->objects.size(); ++i) {
    if (d_->objects[i] == P) return static_cast<int>(i);
  }
  return std::nullopt;
}

std::optional<std::size_t> LinkingSystem::morphism_index(Arrow const& a) const {
  auto m = morphisms(a.source, a.target);
  auto it = std::lower_bound(m.begin(), m.end(), a.rep);
  if (it == m.end() || *it != a.rep) return std::nullopt;
  return static_cast<std::size_t>(it - m.begin());
}

std::size_t LinkingSystem::morphism_count() const {
  std::size_t total = 0;
  for (auto const& m : d_->mor) total += m.size();
  return total;
}

Elem LinkingSystem::canonical(int P, Elem g) const { return least_in_coset(kernel(P), g); }

LinkingSystem::Arrow LinkingSystem::compose(Arrow const& a, Arrow const& b) const {
  if (a.target != b.source) throw InvalidInput("arrows are not composable");
  auto const& G = S().group();
  return {a.source, b.target, canonical(a.source, G.mul(a.rep, b.rep))};
}

LinkingSystem::Arrow LinkingSystem::inclusion(int P, int Q) const {
  if (!object(Q).contains(object(P))) throw InvalidInput("inclusion between non-nested objects");
  return {P, Q, canonical(P, GroupTable::identity())};
}

int LinkingSystem::image_object(int P, Elem g) const {
  auto idx = object_index(conjugate(object(P), g));
  if (!idx) throw InvalidInput("conjugate of an object is not an object");
  return *idx;
}

bool LinkingSystem::is_isomorphism(Arrow const& a) const {
  return object(a.source).order() == object(a.target).order();
}

Morphism LinkingSystem::project(Arrow const& a) const {
  return Morphism::conjugation(object(a.source), a.rep);
}

Subgroup LinkingSystem::kernel_extended(Subgroup const& P) const {
  if (auto i = object_index(P)) return kernel(*i);
  return p_prime_core_of_centralizer(G(), P, fusion().p());
}

Elem LinkingSystem::canonical_extended(Subgroup const& P, Elem g) const {
  return least_in_coset(kernel_extended(P), g);
}

std::vector<Elem> LinkingSystem::morphisms_extended(Subgroup const& P,
                                                    Subgroup const& Q) const {
  auto i = object_index(P);
  auto j = object_index(Q);
  if (i && j) {
    auto m = morphisms(*i, *j);
    return {m.begin(), m.end()};
  }
  return coset_reps(kernel_extended(P), transporter(G(), P, Q));
}

std::string LinkingSystem::arrow_string(Arrow const& a) const {
  return "[" + S().group().label(a.rep) + "] : " + object(a.source).to_string() +
         " -> " + object(a.target).to_string();
}

}  // namespace fusionkit
