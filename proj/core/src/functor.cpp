#include "fusionkit/functor.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "fusionkit/error.hpp"
#include "fusionkit/group_ops.hpp"

namespace fusionkit {

using Arrow = LinkingSystem::Arrow;

namespace {

std::size_t pair_index(LinkingSystem const& L0, int P, int Q) {
  return static_cast<std::size_t>(P) * L0.object_count() + static_cast<std::size_t>(Q);
}

Arrow arrow_at(LinkingSystem const& L0, int P, int Q, std::size_t k) {
  return {P, Q, L0.morphisms(P, Q)[k]};
}

Arrow inverse_iso(LinkingSystem const& L0, Arrow const& a) {
  auto const& G = L0.S().group();
  return {a.target, a.source, L0.canonical(a.target, G.inv(a.rep))};
}

std::set<Elem> delta_set(LinkingSystem const& L0, int P) {
  std::set<Elem> out;
  for (Elem x : L0.object(P).members()) out.insert(L0.canonical(P, x));
  return out;
}

}  // namespace

Arrow IsotypicalFunctor::apply(LinkingSystem const& L0, Arrow const& a) const {
  auto idx = L0.morphism_index(a);
  if (!idx) throw InvalidInput("arrow is not a morphism of L0");
  int const P = object_map.at(static_cast<std::size_t>(a.source));
  int const Q = object_map.at(static_cast<std::size_t>(a.target));
  auto k = arrow_map.at(pair_index(L0, a.source, a.target)).at(*idx);
  return arrow_at(L0, P, Q, k);
}

IsotypicalFunctor identity_functor(LinkingSystem const& L0) {
  std::size_t const n = L0.object_count();
  IsotypicalFunctor f;
  f.object_map.resize(n);
  std::iota(f.object_map.begin(), f.object_map.end(), 0);
  f.arrow_map.resize(n * n);
  for (std::size_t P = 0; P < n; ++P) {
    for (std::size_t Q = 0; Q < n; ++Q) {
      auto& m = f.arrow_map[P * n + Q];
      m.resize(L0.morphisms(static_cast<int>(P), static_cast<int>(Q)).size());
      std::iota(m.begin(), m.end(), 0u);
    }
  }
  f.sends_inclusions_to_inclusions = true;
  f.isotypical = true;
  return f;
}

IsotypicalFunctor compose(LinkingSystem const& L0, IsotypicalFunctor const& a,
                          IsotypicalFunctor const& b) {
  std::size_t const n = L0.object_count();
  IsotypicalFunctor f;
  f.object_map.resize(n);
  f.arrow_map.resize(n * n);
  for (std::size_t P = 0; P < n; ++P) {
    f.object_map[P] = b.object_map[static_cast<std::size_t>(a.object_map[P])];
  }
  for (std::size_t P = 0; P < n; ++P) {
    for (std::size_t Q = 0; Q < n; ++Q) {
      auto const& am = a.arrow_map[P * n + Q];
      auto const& bm = b.arrow_map[pair_index(L0, a.object_map[P], a.object_map[Q])];
      auto& m = f.arrow_map[P * n + Q];
      for (auto k : am) m.push_back(bm.at(k));
    }
  }
  evaluate_flags(L0, f);
  return f;
}

bool is_functor(LinkingSystem const& L0, IsotypicalFunctor const& f) {
  std::size_t const n = L0.object_count();
  if (f.object_map.size() != n || f.arrow_map.size() != n * n) return false;
  std::vector<bool> hit(n, false);
  for (int x : f.object_map) {
    if (x < 0 || static_cast<std::size_t>(x) >= n || hit[static_cast<std::size_t>(x)]) return false;
    hit[static_cast<std::size_t>(x)] = true;
  }
  for (std::size_t P = 0; P < n; ++P) {
    for (std::size_t Q = 0; Q < n; ++Q) {
      auto const& m = f.arrow_map[P * n + Q];
      auto target = L0.morphisms(f.object_map[P], f.object_map[Q]).size();
      if (m.size() != L0.morphisms(static_cast<int>(P), static_cast<int>(Q)).size() ||
          m.size() != target) {
        return false;
      }
      std::vector<bool> seen(target, false);
      for (auto k : m) {
        if (k >= target || seen[k]) return false;
        seen[k] = true;
      }
    }
    int const Pi = static_cast<int>(P);
    if (!(f.apply(L0, L0.identity(Pi)) == L0.identity(f.object_map[P]))) return false;
  }
  for (std::size_t P = 0; P < n; ++P) {
    for (std::size_t Q = 0; Q < n; ++Q) {
      auto mPQ = L0.morphisms(static_cast<int>(P), static_cast<int>(Q));
      if (mPQ.empty()) continue;
      for (std::size_t R = 0; R < n; ++R) {
        auto mQR = L0.morphisms(static_cast<int>(Q), static_cast<int>(R));
        for (Elem a : mPQ) {
          Arrow const x{static_cast<int>(P), static_cast<int>(Q), a};
          Arrow const fx = f.apply(L0, x);
          for (Elem b : mQR) {
            Arrow const y{static_cast<int>(Q), static_cast<int>(R), b};
            if (!(f.apply(L0, L0.compose(x, y)) == L0.compose(fx, f.apply(L0, y)))) {
              return false;
            }
          }
        }
      }
    }
  }
  return true;
}

void evaluate_flags(LinkingSystem const& L0, IsotypicalFunctor& f) {
  std::size_t const n = L0.object_count();
  f.sends_inclusions_to_inclusions = true;
  f.isotypical = true;
  for (std::size_t P = 0; P < n; ++P) {
    int const Pi = static_cast<int>(P);
    int const fP = f.object_map[P];
    for (std::size_t Q = 0; Q < n && f.sends_inclusions_to_inclusions; ++Q) {
      int const Qi = static_cast<int>(Q);
      if (!L0.object(Qi).contains(L0.object(Pi))) continue;
      int const fQ = f.object_map[Q];
      if (!L0.object(fQ).contains(L0.object(fP)) ||
          !(f.apply(L0, L0.inclusion(Pi, Qi)) == L0.inclusion(fP, fQ))) {
        f.sends_inclusions_to_inclusions = false;
      }
    }
    std::set<Elem> img;
    for (Elem x : L0.object(Pi).members()) img.insert(f.apply(L0, L0.delta(Pi, x)).rep);
    if (img != delta_set(L0, fP)) f.isotypical = false;
  }
}

IsotypicalFunctor conjugation_functor(LinkingSystem const& L, LinkingSystem const& L0,
                                      Elem g) {
  Subgroup const& T = L0.S();
  auto const& G = T.group();
  if (!(conjugate(T, g) == T)) throw InvalidInput("element does not normalize T");
  if (!L.G().contains(g)) throw InvalidInput("element outside the ambient group");
  std::size_t const n = L0.object_count();
  IsotypicalFunctor f;
  f.object_map.resize(n);
  for (std::size_t P = 0; P < n; ++P) {
    auto idx = L0.object_index(conjugate(L0.object(static_cast<int>(P)), g));
    if (!idx) {
      throw InvalidInput("conjugation by " + G.label(g) +
                         " does not stabilize the objects of L0");
    }
    f.object_map[P] = *idx;
  }
  f.arrow_map.resize(n * n);
  Elem const gi = G.inv(g);
  for (std::size_t P = 0; P < n; ++P) {
    for (std::size_t Q = 0; Q < n; ++Q) {
      int const fP = f.object_map[P];
      int const fQ = f.object_map[Q];
      for (Elem h : L0.morphisms(static_cast<int>(P), static_cast<int>(Q))) {
        Arrow const img{fP, fQ, L0.canonical(fP, G.mul(G.mul(gi, h), g))};
        auto k = L0.morphism_index(img);
        if (!k) throw VerificationError("conjugation functor", L0.arrow_string(img));
        f.arrow_map[P * n + Q].push_back(static_cast<std::uint32_t>(*k));
      }
    }
  }
  evaluate_flags(L0, f);
  return f;
}

ConjugationKernel kernel_of_conjugation(LinkingSystem const& L, LinkingSystem const& L0,
                                        std::span<Elem const> centralizer_members) {
  Subgroup const& T = L0.S();
  ConjugationKernel out;
  out.extended = !L.object_index(T).has_value();
  out.aut_L_T = L.automorphisms_extended(T);
  auto const id = identity_functor(L0);
  for (Elem g : out.aut_L_T) {
    if (conjugation_functor(L, L0, g) == id) out.kernel.push_back(g);
  }
  for (Elem a : centralizer_members) out.delta_image.push_back(L.canonical_extended(T, a));
  std::sort(out.delta_image.begin(), out.delta_image.end());
  auto last = std::unique(out.delta_image.begin(), out.delta_image.end());
  out.injective = last == out.delta_image.end();
  out.delta_image.erase(last, out.delta_image.end());
  out.equal = out.kernel == out.delta_image;
  return out;
}

namespace {

/// Automorphism group of one object as an indexed group of arrows.
struct AutGroup {
  std::vector<Elem> reps;
  std::vector<std::vector<std::uint32_t>> mult;
  std::vector<std::size_t> order;
};

AutGroup make_aut_group(LinkingSystem const& L0, int P) {
  AutGroup A;
  auto m = L0.morphisms(P, P);
  A.reps.assign(m.begin(), m.end());
  std::size_t const k = A.reps.size();
  A.mult.assign(k, std::vector<std::uint32_t>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      auto c = L0.compose({P, P, A.reps[i]}, {P, P, A.reps[j]});
      A.mult[i][j] = static_cast<std::uint32_t>(*L0.morphism_index(c));
    }
  }
  A.order.assign(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t x = i, o = 1;
    while (x != 0) {
      x = A.mult[x][i];
      ++o;
    }
    A.order[i] = o;
  }
  return A;
}

std::vector<std::uint32_t> greedy_generators(AutGroup const& A) {
  std::vector<std::uint32_t> gens;
  std::vector<bool> in(A.reps.size(), false);
  in[0] = true;
  std::size_t count = 1;
  for (std::uint32_t x = 0; x < A.reps.size() && count < A.reps.size(); ++x) {
    if (in[x]) continue;
    gens.push_back(x);
    std::deque<std::uint32_t> work;
    for (std::uint32_t y = 0; y < A.reps.size(); ++y) {
      if (in[y]) work.push_back(y);
    }
    while (!work.empty()) {
      auto y = work.front();
      work.pop_front();
      for (auto s : gens) {
        auto z = A.mult[y][s];
        if (!in[z]) {
          in[z] = true;
          ++count;
          work.push_back(z);
        }
      }
    }
  }
  return gens;
}

/// Extends generator images to a bijective homomorphism, or returns empty.
std::vector<std::uint32_t> extend_hom(AutGroup const& A, AutGroup const& B,
                                      std::vector<std::uint32_t> const& gens,
                                      std::vector<std::uint32_t> const& imgs) {
  std::size_t const k = A.reps.size();
  std::vector<std::uint32_t> map(k, UINT32_MAX);
  map[0] = 0;
  std::deque<std::uint32_t> work{0};
  while (!work.empty()) {
    auto x = work.front();
    work.pop_front();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      auto y = A.mult[x][gens[i]];
      auto fy = B.mult[map[x]][imgs[i]];
      if (map[y] == UINT32_MAX) {
        map[y] = fy;
        work.push_back(y);
      } else if (map[y] != fy) {
        return {};
      }
    }
  }
  std::vector<bool> hit(k, false);
  for (auto v : map) {
    if (v == UINT32_MAX || hit[v]) return {};
    hit[v] = true;
  }
  return map;
}

class Enumerator {
 public:
  Enumerator(LinkingSystem const& L0, bool require, Caps const& caps)
      : L0_(L0), require_(require), caps_(caps), n_(L0.object_count()) {
    for (std::size_t P = 0; P < n_; ++P) auts_.push_back(make_aut_group(L0, static_cast<int>(P)));
    class_rep_.assign(n_, -1);
    for (std::size_t P = 0; P < n_; ++P) {
      if (class_rep_[P] >= 0) continue;
      class_rep_[P] = static_cast<int>(P);
      reps_.push_back(static_cast<int>(P));
      for (std::size_t Q = P + 1; Q < n_; ++Q) {
        if (class_rep_[Q] < 0 && iso_exists(static_cast<int>(P), static_cast<int>(Q))) {
          class_rep_[Q] = static_cast<int>(P);
        }
      }
    }
    for (int P0 : reps_) gens_[P0] = greedy_generators(auts_[static_cast<std::size_t>(P0)]);
    for (std::size_t P = 0; P < n_; ++P) {
      int const P0 = class_rep_[P];
      if (P0 == static_cast<int>(P)) continue;
      transported_.push_back(static_cast<int>(P));
    }
    for (std::size_t P = 0; P < n_; ++P) {
      for (std::size_t Q = 0; Q < n_; ++Q) {
        if (P == Q || !contains(static_cast<int>(Q), static_cast<int>(P))) continue;
        bool covering = true;
        for (std::size_t R = 0; R < n_ && covering; ++R) {
          if (R != P && R != Q && contains(static_cast<int>(R), static_cast<int>(P)) &&
              contains(static_cast<int>(Q), static_cast<int>(R))) {
            covering = false;
          }
        }
        if (covering) covers_.emplace_back(static_cast<int>(P), static_cast<int>(Q));
      }
    }
  }

  FunctorEnumeration run() {
    sigma_.assign(n_, -1);
    used_.assign(n_, false);
    assign_object(0);
    return std::move(result_);
  }

 private:
  bool contains(int Q, int P) const { return L0_.object(Q).contains(L0_.object(P)); }
  bool iso_exists(int P, int Q) const {
    return L0_.object(P).order() == L0_.object(Q).order() && !L0_.morphisms(P, Q).empty();
  }

  void assign_object(std::size_t P) {
    if (P == n_) {
      assign_generators(0);
      return;
    }
    for (std::size_t c = 0; c < n_; ++c) {
      if (used_[c]) continue;
      if (L0_.object(static_cast<int>(c)).order() != L0_.object(static_cast<int>(P)).order()) continue;
      if (auts_[c].reps.size() != auts_[P].reps.size()) continue;
      bool ok = true;
      for (std::size_t Q = 0; Q < P && ok; ++Q) {
        int const sQ = sigma_[Q];
        ok = L0_.morphisms(static_cast<int>(P), static_cast<int>(Q)).size() ==
                 L0_.morphisms(static_cast<int>(c), sQ).size() &&
             L0_.morphisms(static_cast<int>(Q), static_cast<int>(P)).size() ==
                 L0_.morphisms(sQ, static_cast<int>(c)).size();
        if (ok && require_) {
          ok = contains(static_cast<int>(Q), static_cast<int>(P)) == contains(sQ, static_cast<int>(c)) &&
               contains(static_cast<int>(P), static_cast<int>(Q)) == contains(static_cast<int>(c), sQ);
        }
      }
      if (!ok) continue;
      sigma_[P] = static_cast<int>(c);
      used_[c] = true;
      assign_object(P + 1);
      used_[c] = false;
      sigma_[P] = -1;
    }
  }

  void assign_generators(std::size_t r) {
    if (r == reps_.size()) {
      transport_images_.assign(n_, 0);
      assign_transport(0);
      return;
    }
    int const P0 = reps_[r];
    auto const& A = auts_[static_cast<std::size_t>(P0)];
    auto const& B = auts_[static_cast<std::size_t>(sigma_[static_cast<std::size_t>(P0)])];
    auto const& gens = gens_[P0];
    auto const dA = delta_indices(P0);
    auto const dB = delta_indices(sigma_[static_cast<std::size_t>(P0)]);
    std::vector<std::uint32_t> imgs(gens.size());
    std::function<void(std::size_t)> pick = [&](std::size_t i) {
      if (i == gens.size()) {
        auto map = extend_hom(A, B, gens, imgs);
        if (map.empty()) return;
        std::set<std::uint32_t> img;
        for (auto x : dA) img.insert(map[x]);
        if (img != dB) return;
        aut_maps_[P0] = std::move(map);
        assign_generators(r + 1);
        return;
      }
      for (std::uint32_t c = 0; c < B.reps.size(); ++c) {
        if (B.order[c] != A.order[gens[i]]) continue;
        imgs[i] = c;
        pick(i + 1);
      }
    };
    pick(0);
  }

  std::set<std::uint32_t> delta_indices(int P) const {
    std::set<std::uint32_t> out;
    for (Elem x : L0_.object(P).members()) {
      out.insert(static_cast<std::uint32_t>(*L0_.morphism_index(L0_.delta(P, x))));
    }
    return out;
  }

  void assign_transport(std::size_t t) {
    if (t == transported_.size()) {
      cover_images_.assign(covers_.size(), 0);
      assign_covers(0);
      return;
    }
    int const P = transported_[t];
    int const P0 = class_rep_[static_cast<std::size_t>(P)];
    auto count = L0_.morphisms(sigma_[static_cast<std::size_t>(P0)], sigma_[static_cast<std::size_t>(P)]).size();
    for (std::size_t k = 0; k < count; ++k) {
      transport_images_[static_cast<std::size_t>(P)] = k;
      assign_transport(t + 1);
    }
  }

  void assign_covers(std::size_t c) {
    if (require_ || c == covers_.size()) {
      leaf();
      return;
    }
    auto [P, Q] = covers_[c];
    auto count = L0_.morphisms(sigma_[static_cast<std::size_t>(P)], sigma_[static_cast<std::size_t>(Q)]).size();
    for (std::size_t k = 0; k < count; ++k) {
      cover_images_[c] = k;
      assign_covers(c + 1);
    }
  }

  Arrow transport(int P) const {
    int const P0 = class_rep_[static_cast<std::size_t>(P)];
    if (P0 == P) return L0_.identity(P);
    return arrow_at(L0_, P0, P, 0);
  }

  Arrow transport_image(int P) const {
    int const P0 = class_rep_[static_cast<std::size_t>(P)];
    int const s0 = sigma_[static_cast<std::size_t>(P0)];
    int const s = sigma_[static_cast<std::size_t>(P)];
    if (P0 == P) return L0_.identity(s);
    return arrow_at(L0_, s0, s, transport_images_[static_cast<std::size_t>(P)]);
  }

  std::optional<Arrow> inclusion_image(int P, int Q) const {
    int const sP = sigma_[static_cast<std::size_t>(P)];
    if (P == Q) return L0_.identity(sP);
    if (require_) {
      int const sQ = sigma_[static_cast<std::size_t>(Q)];
      if (!contains(sQ, sP)) return std::nullopt;
      return L0_.inclusion(sP, sQ);
    }
    for (std::size_t c = 0; c < covers_.size(); ++c) {
      auto [A, B] = covers_[c];
      if (A != P || !contains(Q, B)) continue;
      auto rest = inclusion_image(B, Q);
      if (!rest) return std::nullopt;
      Arrow first = arrow_at(L0_, sP, sigma_[static_cast<std::size_t>(B)], cover_images_[c]);
      return L0_.compose(first, *rest);
    }
    return std::nullopt;
  }

  void leaf() {
    if (++result_.candidates > caps_.functor_candidates) {
      throw CapError("functor enumeration explored " +
                     std::to_string(result_.candidates - 1) + " candidates (" +
                     std::to_string(result_.functors.size()) +
                     " functors found) before reaching the cap");
    }
    IsotypicalFunctor f;
    f.object_map = sigma_;
    f.arrow_map.resize(n_ * n_);
    for (std::size_t P = 0; P < n_; ++P) {
      int const Pi = static_cast<int>(P);
      int const P0 = class_rep_[P];
      Arrow const tP = transport(Pi);
      Arrow const ftP_inv = inverse_iso(L0_, transport_image(Pi));
      for (std::size_t Q = 0; Q < n_; ++Q) {
        int const Qi = static_cast<int>(Q);
        for (Elem h : L0_.morphisms(Pi, Qi)) {
          int const P1 = L0_.image_object(Pi, h);
          Arrow const iso{Pi, P1, h};
          Arrow const a = L0_.compose(L0_.compose(tP, iso), inverse_iso(L0_, transport(P1)));
          auto ai = *L0_.morphism_index(a);
          auto const& map = aut_maps_.at(P0);
          int const s0 = sigma_[static_cast<std::size_t>(P0)];
          Arrow const fa = arrow_at(L0_, s0, s0, map[ai]);
          auto incl = inclusion_image(P1, Qi);
          if (!incl) return;
          Arrow img = L0_.compose(L0_.compose(L0_.compose(ftP_inv, fa), transport_image(P1)), *incl);
          auto k = L0_.morphism_index(img);
          if (!k) return;
          f.arrow_map[P * n_ + Q].push_back(static_cast<std::uint32_t>(*k));
        }
      }
    }
    if (!is_functor(L0_, f)) return;
    evaluate_flags(L0_, f);
    if (!f.isotypical) return;
    if (require_ && !f.sends_inclusions_to_inclusions) return;
    result_.functors.push_back(std::move(f));
  }

  LinkingSystem const& L0_;
  bool require_;
  Caps caps_;
  std::size_t n_;
  std::vector<AutGroup> auts_;
  std::vector<int> class_rep_;
  std::vector<int> reps_;
  std::map<int, std::vector<std::uint32_t>> gens_;
  std::vector<int> transported_;
  std::vector<std::pair<int, int>> covers_;

  std::vector<int> sigma_;
  std::vector<bool> used_;
  std::map<int, std::vector<std::uint32_t>> aut_maps_;
  std::vector<std::size_t> transport_images_;
  std::vector<std::size_t> cover_images_;
  FunctorEnumeration result_;
};

}  // namespace

FunctorEnumeration enumerate_isotypical_autoequivalences(LinkingSystem const& L0,
                                                        bool require_inclusions,
                                                        Caps const& caps) {
  if (L0.object_count() > caps.functor_objects) {
    throw CapError("functor enumeration needs " + std::to_string(L0.object_count()) +
                   " objects, cap is " + std::to_string(caps.functor_objects));
  }
  Enumerator e(L0, require_inclusions, caps);
  auto out = e.run();
  std::sort(out.functors.begin(), out.functors.end(),
            [](IsotypicalFunctor const& a, IsotypicalFunctor const& b) {
              return std::tie(a.object_map, a.arrow_map) < std::tie(b.object_map, b.arrow_map);
            });
  return out;
}

std::optional<LNaturalWitness> l_naturally_isomorphic(LinkingSystem const& L,
                                                      LinkingSystem const& L0,
                                                      IsotypicalFunctor const& alpha,
                                                      IsotypicalFunctor const& beta,
                                                      Caps const& caps) {
  std::size_t const n = L0.object_count();
  auto const& G = L0.S().group();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return L0.object(a).order() > L0.object(b).order();
  });
  std::vector<Subgroup> kernels;
  std::vector<std::vector<Elem>> candidates;
  for (std::size_t R = 0; R < n; ++R) {
    Subgroup const& aR = L0.object(alpha.object_map[R]);
    Subgroup const& bR = L0.object(beta.object_map[R]);
    kernels.push_back(L.kernel_extended(aR));
    candidates.push_back(L.morphisms_extended(aR, bR));
  }
  auto canon = [&](std::size_t R, Elem x) {
    Elem best = G.mul(kernels[R].members().front(), x);
    for (Elem k : kernels[R].members()) best = std::min(best, G.mul(k, x));
    return best;
  };
  std::vector<Elem> eta(n, 0);
  std::vector<bool> assigned(n, false);
  std::size_t nodes = 0;

  auto consistent = [&](std::size_t R) {
    for (std::size_t R2 = 0; R2 < n; ++R2) {
      if (!assigned[R2]) continue;
      for (int dir = 0; dir < 2; ++dir) {
        std::size_t const A = dir == 0 ? R : R2;
        std::size_t const B = dir == 0 ? R2 : R;
        if (dir == 1 && A == B) continue;
        for (Elem h : L0.morphisms(static_cast<int>(A), static_cast<int>(B))) {
          Arrow const phi{static_cast<int>(A), static_cast<int>(B), h};
          Elem const a = alpha.apply(L0, phi).rep;
          Elem const b = beta.apply(L0, phi).rep;
          if (canon(A, G.mul(a, eta[B])) != canon(A, G.mul(eta[A], b))) return false;
        }
      }
    }
    return true;
  };

  std::function<bool(std::size_t)> search = [&](std::size_t i) {
    if (i == n) return true;
    std::size_t const R = static_cast<std::size_t>(order[i]);
    for (Elem e : candidates[R]) {
      if (++nodes > caps.natural_iso_nodes) {
        throw CapError("natural isomorphism search exceeded " +
                       std::to_string(caps.natural_iso_nodes) + " nodes");
      }
      eta[R] = e;
      assigned[R] = true;
      if (consistent(R) && search(i + 1)) return true;
      assigned[R] = false;
    }
    return false;
  };
  if (!search(0)) return std::nullopt;
  return LNaturalWitness{eta};
}

std::vector<std::vector<std::size_t>> out_typ_classes(LinkingSystem const& L,
                                                      LinkingSystem const& L0,
                                                      std::span<IsotypicalFunctor const> functors,
                                                      Caps const& caps) {
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < functors.size(); ++i) {
    auto it = std::find_if(classes.begin(), classes.end(), [&](auto const& c) {
      return l_naturally_isomorphic(L, L0, functors[c.front()], functors[i], caps).has_value();
    });
    if (it == classes.end()) {
      classes.push_back({i});
    } else {
      it->push_back(i);
    }
  }
  return classes;
}

}  // namespace fusionkit
