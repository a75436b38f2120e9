#include "fusionkit/group_ops.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "fusionkit/error.hpp"

namespace fusionkit {

// ---------------------------------------------------------------------------
// Arithmetic
// ---------------------------------------------------------------------------

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) noexcept {
  std::uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool is_p_power(std::uint64_t n, std::uint64_t p) noexcept {
  return n >= 1 && p_part(n, p) == n;
}

// ---------------------------------------------------------------------------
// Construction
// ---------------------------------------------------------------------------

namespace {

/// Closure of `start` (assumed to contain the identity) under right
/// multiplication by `gens`.
std::vector<Elem> close_right(GroupTable const& G, std::vector<Elem> start,
                              std::span<Elem const> gens) {
  std::vector<bool> in(G.order(), false);
  std::vector<Elem> out;
  out.reserve(start.size());
  for (Elem x : start) {
    if (!in[x]) {
      in[x] = true;
      out.push_back(x);
    }
  }
  if (!in[0]) {
    in[0] = true;
    out.push_back(0);
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (Elem g : gens) {
      Elem y = G.mul(out[i], g);
      if (!in[y]) {
        in[y] = true;
        out.push_back(y);
      }
    }
  }
  return out;
}

}  // namespace

Subgroup generate_subgroup(GroupPtr const& parent,
                           std::span<Elem const> generators) {
  for (Elem g : generators) {
    if (g >= parent->order()) throw InvalidInput("generator index out of range");
  }
  return Subgroup(parent, close_right(*parent, {0}, generators));
}

std::vector<Elem> generating_set(Subgroup const& sub) {
  auto const& G = sub.group();
  std::vector<Elem> candidates(sub.members().begin(), sub.members().end());
  std::stable_sort(candidates.begin(), candidates.end(), [&](Elem a, Elem b) {
    return G.element_order(a) > G.element_order(b);
  });
  std::vector<Elem> gens;
  std::vector<bool> in(G.order(), false);
  std::vector<Elem> reached{0};
  in[0] = true;
  for (Elem x : candidates) {
    if (reached.size() == sub.order()) break;
    if (in[x]) continue;
    gens.push_back(x);
    for (std::size_t i = 0; i < reached.size(); ++i) {
      for (Elem g : gens) {
        Elem y = G.mul(reached[i], g);
        if (!in[y]) {
          in[y] = true;
          reached.push_back(y);
        }
      }
    }
  }
  return gens;
}

Subgroup join(Subgroup const& base, std::span<Elem const> extra) {
  std::vector<Elem> gens = generating_set(base);
  gens.insert(gens.end(), extra.begin(), extra.end());
  return generate_subgroup(base.parent(), gens);
}

Subgroup join(Subgroup const& a, Subgroup const& b) {
  auto gb = generating_set(b);
  return join(a, gb);
}

Subgroup intersection(Subgroup const& a, Subgroup const& b) {
  std::vector<Elem> out;
  for (Elem x : a.members()) {
    if (b.contains(x)) out.push_back(x);
  }
  return Subgroup(a.parent(), std::move(out));
}

Subgroup conjugate(Subgroup const& sub, Elem g) {
  auto const& G = sub.group();
  std::vector<Elem> out;
  out.reserve(sub.order());
  for (Elem x : sub.members()) out.push_back(G.conj(x, g));
  return Subgroup(sub.parent(), std::move(out));
}

bool is_closed(GroupTable const& G, std::span<Elem const> members) {
  std::vector<bool> in(G.order(), false);
  for (Elem x : members) in[x] = true;
  if (!in[0]) return false;
  for (Elem x : members) {
    if (!in[G.inv(x)]) return false;
    for (Elem y : members) {
      if (!in[G.mul(x, y)]) return false;
    }
  }
  return true;
}

bool is_normal_in(Subgroup const& normal, Subgroup const& ambient) {
  if (!ambient.contains(normal)) return false;
  auto const& G = normal.group();
  auto ng = generating_set(normal);
  for (Elem g : generating_set(ambient)) {
    for (Elem x : ng) {
      if (!normal.contains(G.conj(x, g))) return false;
    }
  }
  return true;
}

bool is_p_group(Subgroup const& sub, unsigned p) {
  return is_p_power(sub.order(), p);
}

std::optional<Subgroup> product(Subgroup const& a, Subgroup const& b) {
  auto const& G = a.group();
  std::unordered_set<Elem> ab;
  std::unordered_set<Elem> ba;
  for (Elem x : a.members()) {
    for (Elem y : b.members()) {
      ab.insert(G.mul(x, y));
      ba.insert(G.mul(y, x));
    }
  }
  if (ab != ba) return std::nullopt;
  return Subgroup(a.parent(), std::vector<Elem>(ab.begin(), ab.end()));
}

// ---------------------------------------------------------------------------
// Local subgroups
// ---------------------------------------------------------------------------

Subgroup local_subgroup(Subgroup const& ambient, Subgroup const& target,
                        LocalKind kind) {
  auto const& G = ambient.group();
  auto gens = generating_set(target);
  std::vector<Elem> out;
  for (Elem a : ambient.members()) {
    bool ok = true;
    for (Elem x : gens) {
      Elem c = G.conj(x, a);
      ok = kind == LocalKind::centralizer ? c == x : target.contains(c);
      if (!ok) break;
    }
    if (ok) out.push_back(a);
  }
  return Subgroup(ambient.parent(), std::move(out));
}

Subgroup centralizer(Subgroup const& ambient, Subgroup const& target) {
  return local_subgroup(ambient, target, LocalKind::centralizer);
}

Subgroup normalizer(Subgroup const& ambient, Subgroup const& target) {
  return local_subgroup(ambient, target, LocalKind::normalizer);
}

Subgroup center(Subgroup const& group) { return centralizer(group, group); }

std::vector<Elem> transporter(Subgroup const& ambient, Subgroup const& from,
                              Subgroup const& to) {
  auto const& G = ambient.group();
  std::vector<Elem> out;
  if (from.order() > to.order()) return out;
  auto gens = generating_set(from);
  for (Elem a : ambient.members()) {
    bool ok = true;
    for (Elem x : gens) {
      if (!to.contains(G.conj(x, a))) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(a);
  }
  return out;
}

std::vector<std::vector<Elem>> conjugacy_classes(Subgroup const& group) {
  auto const& G = group.group();
  auto gens = generating_set(group);
  std::vector<bool> done(G.order(), false);
  std::vector<std::vector<Elem>> classes;
  for (Elem x : group.members()) {
    if (done[x]) continue;
    std::vector<Elem> cls{x};
    done[x] = true;
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (Elem g : gens) {
        Elem y = G.conj(cls[i], g);
        if (!done[y]) {
          done[y] = true;
          cls.push_back(y);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

Subgroup normal_closure(Subgroup const& ambient,
                        std::span<Elem const> elements) {
  auto const& G = ambient.group();
  auto gens = generating_set(ambient);
  std::vector<bool> in(G.order(), false);
  std::vector<Elem> orbit;
  for (Elem x : elements) {
    if (!in[x]) {
      in[x] = true;
      orbit.push_back(x);
    }
  }
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (Elem g : gens) {
      Elem y = G.conj(orbit[i], g);
      if (!in[y]) {
        in[y] = true;
        orbit.push_back(y);
      }
    }
  }
  return generate_subgroup(ambient.parent(), orbit);
}

Subgroup normal_core(Subgroup const& ambient, Subgroup const& sub) {
  auto const& G = ambient.group();
  std::vector<Elem> core(sub.members().begin(), sub.members().end());
  for (Elem g : ambient.members()) {
    if (core.size() == 1) break;
    Subgroup conj = conjugate(sub, g);
    std::erase_if(core, [&](Elem x) { return !conj.contains(x); });
  }
  (void)G;
  return Subgroup(ambient.parent(), std::move(core));
}

// ---------------------------------------------------------------------------
// Sylow and residual subgroups
// ---------------------------------------------------------------------------

Subgroup sylow_subgroup(Subgroup const& group, unsigned p) {
  if (!is_prime(p)) throw InvalidInput("p must be prime");
  auto const& G = group.group();
  std::uint64_t const target = p_part(group.order(), p);
  Subgroup P = Subgroup::trivial(group.parent());
  while (P.order() < target) {
    Subgroup N = normalizer(group, P);
    std::optional<Elem> pick;
    for (Elem x : N.members()) {
      if (!P.contains(x) && P.contains(G.pow(x, p))) {
        pick = x;
        break;
      }
    }
    if (!pick) {
      throw VerificationError("Sylow climbing stalled",
                              "no element of order p modulo " + P.to_string());
    }
    std::vector<Elem> members;
    members.reserve(P.order() * p);
    Elem power = 0;
    for (unsigned i = 0; i < p; ++i) {
      for (Elem y : P.members()) members.push_back(G.mul(y, power));
      power = G.mul(power, *pick);
    }
    P = Subgroup(group.parent(), std::move(members));
  }
  return P;
}

namespace {

/// Subgroup generated by `elements`, adding a generator only when the
/// element is not already covered.
Subgroup generate_incremental(GroupPtr const& parent,
                              std::span<Elem const> elements) {
  std::vector<Elem> gens;
  Subgroup H = Subgroup::trivial(parent);
  for (Elem x : elements) {
    if (H.contains(x)) continue;
    gens.push_back(x);
    H = generate_subgroup(parent, gens);
  }
  return H;
}

}  // namespace

Subgroup residual_subgroup(Subgroup const& group, unsigned p, Residual kind) {
  if (!is_prime(p)) throw InvalidInput("p must be prime");
  auto const& G = group.group();
  switch (kind) {
    case Residual::O_p:
      return normal_core(group, sylow_subgroup(group, p));
    case Residual::O_p_prime: {
      std::vector<Elem> covered;
      for (auto const& cls : conjugacy_classes(group)) {
        if (G.element_order(cls.front()) % p == 0) continue;
        Subgroup ncl = generate_subgroup(group.parent(), cls);
        if (ncl.order() % p != 0) {
          covered.insert(covered.end(), cls.begin(), cls.end());
        }
      }
      return generate_incremental(group.parent(), covered);
    }
    case Residual::O_upper_p: {
      std::vector<Elem> p_prime;
      for (Elem x : group.members()) {
        if (G.element_order(x) % p != 0) p_prime.push_back(x);
      }
      return generate_incremental(group.parent(), p_prime);
    }
    case Residual::O_upper_p_prime: {
      std::vector<Elem> p_elems;
      for (Elem x : group.members()) {
        if (is_p_power(G.element_order(x), p)) p_elems.push_back(x);
      }
      return generate_incremental(group.parent(), p_elems);
    }
  }
  throw InvalidInput("unknown residual kind");
}

// ---------------------------------------------------------------------------
// Quotients
// ---------------------------------------------------------------------------

Subgroup Quotient::image(Subgroup const& sub) const {
  std::vector<Elem> out;
  for (Elem x : sub.members()) {
    Elem c = projection.at(x);
    if (c == none) throw InvalidInput("element outside the quotiented group");
    out.push_back(c);
  }
  return Subgroup(table, std::move(out));
}

std::vector<Elem> Quotient::preimage(Subgroup const& sub) const {
  std::vector<Elem> out;
  for (std::size_t x = 0; x < projection.size(); ++x) {
    if (projection[x] != none && sub.contains(projection[x])) {
      out.push_back(static_cast<Elem>(x));
    }
  }
  return out;
}

Quotient quotient_group(Subgroup const& ambient, Subgroup const& normal) {
  if (!is_normal_in(normal, ambient)) {
    throw InvalidInput("quotient by a subgroup that is not normal");
  }
  auto const& G = ambient.group();
  Quotient q;
  q.kernel = normal;
  q.projection.assign(G.order(), Quotient::none);
  for (Elem x : ambient.members()) {
    if (q.projection[x] != Quotient::none) continue;
    auto id = static_cast<Elem>(q.representatives.size());
    q.representatives.push_back(x);
    for (Elem n : normal.members()) q.projection[G.mul(n, x)] = id;
  }
  std::size_t const m = q.representatives.size();
  std::vector<std::vector<Elem>> rows(m, std::vector<Elem>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      rows[i][j] = q.projection[G.mul(q.representatives[i], q.representatives[j])];
    }
  }
  Caps caps;
  caps.max_group_order = std::max(caps.max_group_order, m);
  q.table = GroupTable::from_table(rows, caps);
  return q;
}

// ---------------------------------------------------------------------------
// Automorphisms
// ---------------------------------------------------------------------------

Elem AutomorphismGroup::apply(Elem a, Elem x) const {
  auto const& p = table->permutation(a);
  return domain.members()[p[domain.position(x)]];
}

Morphism AutomorphismGroup::as_morphism(Elem a) const {
  auto const& p = table->permutation(a);
  std::vector<Elem> images;
  for (std::size_t i = 0; i < p.size(); ++i) images.push_back(domain.members()[p[i]]);
  return Morphism(domain, std::move(images));
}

AutomorphismGroup automorphism_group(Subgroup const& group, Caps const& caps,
                                     Subgroup const* fixed) {
  if (group.order() > caps.max_automorphism_domain) {
    throw CapError("automorphism search refuses groups above order " +
                   std::to_string(caps.max_automorphism_domain));
  }
  auto const& G = group.group();
  std::size_t const m = group.order();
  auto members = group.members();
  auto pos = [&](Elem x) { return group.position(x); };

  // Generators: those of `fixed` first (forced to map to themselves), then
  // greedy completion.
  std::vector<Elem> gens;
  std::size_t forced = 0;
  if (fixed) {
    gens = generating_set(*fixed);
    forced = gens.size();
  }
  {
    Subgroup H = generate_subgroup(group.parent(), gens);
    std::vector<Elem> candidates(members.begin(), members.end());
    std::stable_sort(candidates.begin(), candidates.end(), [&](Elem a, Elem b) {
      return G.element_order(a) > G.element_order(b);
    });
    for (Elem x : candidates) {
      if (H.order() == m) break;
      if (H.contains(x)) continue;
      gens.push_back(x);
      H = generate_subgroup(group.parent(), gens);
    }
  }
  std::size_t const k = gens.size();

  std::vector<Elem> images(k, 0);
  std::vector<Permutation> found;
  std::size_t const limit = std::min(caps.max_automorphisms, caps.max_group_order);

  // Partial homomorphism on <gens[0..depth]>; returns false on conflict.
  constexpr Elem kUnset = static_cast<Elem>(-1);
  std::vector<Elem> map(m, kUnset);
  auto extend = [&](std::size_t depth) -> bool {
    std::fill(map.begin(), map.end(), kUnset);
    std::vector<bool> used(G.order(), false);
    std::vector<Elem> reached{0};
    map[pos(0)] = 0;
    used[0] = true;
    for (std::size_t i = 0; i < reached.size(); ++i) {
      Elem x = reached[i];
      Elem fx = map[pos(x)];
      for (std::size_t j = 0; j <= depth; ++j) {
        Elem y = G.mul(x, gens[j]);
        Elem fy = G.mul(fx, images[j]);
        if (!group.contains(fy)) return false;
        Elem& slot = map[pos(y)];
        if (slot == kUnset) {
          if (used[fy]) return false;
          used[fy] = true;
          slot = fy;
          reached.push_back(y);
        } else if (slot != fy) {
          return false;
        }
      }
    }
    return true;
  };

  auto recurse = [&](auto&& self, std::size_t depth) -> void {
    if (depth == k) {
      // map holds the extension computed for depth k - 1
      Permutation p(m);
      for (std::size_t i = 0; i < m; ++i) {
        p[i] = static_cast<std::uint32_t>(k == 0 ? i : pos(map[i]));
      }
      found.push_back(std::move(p));
      if (found.size() > limit) {
        throw CapError("automorphism count exceeds cap of " + std::to_string(limit));
      }
      return;
    }
    if (depth < forced) {
      images[depth] = gens[depth];
      if (extend(depth)) self(self, depth + 1);
      return;
    }
    for (Elem y : members) {
      if (G.element_order(y) != G.element_order(gens[depth])) continue;
      images[depth] = y;
      if (extend(depth)) self(self, depth + 1);
    }
  };
  recurse(recurse, 0);

  // Pick a generating subset so the table build stays linear in the
  // number of automorphisms.
  std::sort(found.begin(), found.end());
  std::unordered_set<Permutation, perm::Hash> reach{perm::identity(m)};
  std::vector<Permutation> reach_list{perm::identity(m)};
  std::vector<Permutation> aut_gens;
  for (auto const& a : found) {
    if (reach.count(a)) continue;
    aut_gens.push_back(a);
    for (std::size_t i = 0; i < reach_list.size(); ++i) {
      for (auto const& g : aut_gens) {
        Permutation c = perm::compose(reach_list[i], g);
        if (reach.insert(c).second) reach_list.push_back(std::move(c));
      }
    }
  }
  AutomorphismGroup out;
  out.domain = group;
  out.table = GroupTable::from_generators(m, aut_gens, caps);
  return out;
}

StructureFlags structure_predicates(Subgroup const& group, unsigned p) {
  StructureFlags flags;
  Subgroup op_prime = residual_subgroup(group, p, Residual::O_p_prime);
  Subgroup upper = residual_subgroup(group, p, Residual::O_upper_p);
  flags.has_normal_p_complement = upper == op_prime;
  flags.O_p_prime_trivial = op_prime.order() == 1;
  if (flags.O_p_prime_trivial) {
    Subgroup op = residual_subgroup(group, p, Residual::O_p);
    flags.p_constrained = op.contains(centralizer(group, op));
  }
  return flags;
}

}  // namespace fusionkit
