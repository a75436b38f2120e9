#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fusionkit/caps.hpp"
#include "fusionkit/morphism.hpp"
#include "fusionkit/subgroup.hpp"

namespace fusionkit {

// ---------------------------------------------------------------------------
// Arithmetic helpers
// ---------------------------------------------------------------------------

bool is_prime(std::uint64_t n) noexcept;
/// Largest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p) noexcept;
/// Prime factorization as (prime, exponent) pairs in increasing order.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);
bool is_p_power(std::uint64_t n, std::uint64_t p) noexcept;

// ---------------------------------------------------------------------------
// Subgroup construction
// ---------------------------------------------------------------------------

/// Closure of `generators` under multiplication; the empty list yields the
/// trivial subgroup.
Subgroup generate_subgroup(GroupPtr const& parent,
                           std::span<Elem const> generators);

/// Subgroup generated by `base` together with `extra`.
Subgroup join(Subgroup const& base, std::span<Elem const> extra);
Subgroup join(Subgroup const& a, Subgroup const& b);

Subgroup intersection(Subgroup const& a, Subgroup const& b);
/// P^g = g^-1 P g.
Subgroup conjugate(Subgroup const& sub, Elem g);

/// True when the member set is closed under products and inverses and
/// contains the identity.
bool is_closed(GroupTable const& group, std::span<Elem const> members);

bool is_normal_in(Subgroup const& normal, Subgroup const& ambient);
bool is_p_group(Subgroup const& sub, unsigned p);

/// A*B when it is a subgroup, otherwise nullopt.
std::optional<Subgroup> product(Subgroup const& a, Subgroup const& b);

/// A small generating set, chosen greedily (largest element order first,
/// then smallest index).
std::vector<Elem> generating_set(Subgroup const& sub);

enum class LocalKind { centralizer, normalizer };

/// {a in ambient : a centralizes / normalizes target}.
Subgroup local_subgroup(Subgroup const& ambient, Subgroup const& target,
                        LocalKind kind);
Subgroup centralizer(Subgroup const& ambient, Subgroup const& target);
Subgroup normalizer(Subgroup const& ambient, Subgroup const& target);
Subgroup center(Subgroup const& group);
/// Elements of `ambient` conjugating `from` into `to`.
std::vector<Elem> transporter(Subgroup const& ambient, Subgroup const& from,
                              Subgroup const& to);

/// Conjugacy classes of `group` (each sorted, ordered by least member).
std::vector<std::vector<Elem>> conjugacy_classes(Subgroup const& group);

/// Smallest normal subgroup of `ambient` containing `elements`.
Subgroup normal_closure(Subgroup const& ambient,
                        std::span<Elem const> elements);

/// Intersection of all ambient-conjugates of `sub`.
Subgroup normal_core(Subgroup const& ambient, Subgroup const& sub);

// ---------------------------------------------------------------------------
// Sylow subgroups and residuals
// ---------------------------------------------------------------------------

/// A Sylow p-subgroup found by normalizer climbing: starting from the
/// trivial group, repeatedly adjoin the smallest-index x in N(P) \ P with
/// x^p in P.  Deterministic given the table.
Subgroup sylow_subgroup(Subgroup const& group, unsigned p);

enum class Residual { O_p, O_p_prime, O_upper_p, O_upper_p_prime };

/// O_p / O_p': largest normal p- / p'-subgroup.
/// O^p / O^p': smallest normal subgroup with p- / p'-quotient.
Subgroup residual_subgroup(Subgroup const& group, unsigned p, Residual kind);

// ---------------------------------------------------------------------------
// Quotients and automorphisms
// ---------------------------------------------------------------------------

struct Quotient {
  GroupPtr table;
  Subgroup kernel;
  /// projection[x] is the coset index of x for members x of the ambient
  /// group, and Quotient::none for other elements of the parent table.
  std::vector<Elem> projection;
  /// Least member of each coset, indexed by coset.
  std::vector<Elem> representatives;

  static constexpr Elem none = static_cast<Elem>(-1);
  Elem operator()(Elem x) const { return projection.at(x); }
  /// Image of a subgroup of the ambient group.
  Subgroup image(Subgroup const& sub) const;
  /// Preimage (inside the ambient group) of a subgroup of the quotient.
  std::vector<Elem> preimage(Subgroup const& sub) const;
};

/// Coset table of ambient / normal, cosets ordered by least member.
/// Throws InvalidInput when `normal` is not normal in `ambient`.
Quotient quotient_group(Subgroup const& ambient, Subgroup const& normal);

struct AutomorphismGroup {
  /// The automorphisms as permutations of positions in domain.members();
  /// element 0 is the identity automorphism.
  GroupPtr table;
  Subgroup domain;

  /// Image of a domain member under automorphism `a`.
  Elem apply(Elem a, Elem x) const;
  Morphism as_morphism(Elem a) const;
};

/// All automorphisms of `group` (restricted to those fixing `fixed`
/// pointwise when given), found by backtracking over generator images.
/// Throws CapError when |group| > caps.max_automorphism_domain or the
/// automorphism count exceeds caps.max_automorphisms.
AutomorphismGroup automorphism_group(Subgroup const& group,
                                     Caps const& caps = {},
                                     Subgroup const* fixed = nullptr);

/// Exact evaluation of the three structural predicates.  `p_constrained`
/// is only evaluated when O_p'(G) = 1 and is nullopt otherwise.
struct StructureFlags {
  bool has_normal_p_complement = false;
  bool O_p_prime_trivial = false;
  std::optional<bool> p_constrained;
};
StructureFlags structure_predicates(Subgroup const& group, unsigned p);

}  // namespace fusionkit
