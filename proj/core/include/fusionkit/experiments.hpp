#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fusionkit/caps.hpp"
#include "fusionkit/check.hpp"
#include "fusionkit/pair.hpp"

namespace fusionkit {

enum class Verdict { holds, fails, skipped };
char const* to_string(Verdict v);

/// C_S(E) = C_G(H) n S.
struct Conjecture52Result {
  Verdict verdict = Verdict::skipped;
  std::string reason;
  std::vector<Elem> centralizer;  // C_S(E)
  Subgroup C_S_H;                 // C_G(H) n S
  /// Elements in exactly one of the two sets.
  std::vector<Elem> only_centralizer;
  std::vector<Elem> only_C_S_H;
};

/// Skipped when O_p'(H) != 1.
Conjecture52Result run_conjecture_52(RealizedPair const& pair);

/// C_F(E) = F_{C_S(H)}(C_G(H)), where C_F(E) is the subsystem of p-power
/// index in C_F(T) on C_S(E).
struct Conjecture53Result {
  Verdict verdict = Verdict::skipped;
  std::string reason;
  Subgroup C_S_H;
  std::size_t candidate_morphisms = 0;  // F_{C_S(H)}(C_G(H))
  std::size_t subsystem_morphisms = 0;  // C_F(E)
  /// Whether F_{C_S(H)}(C_G(H)) has p-power index in C_F(T).
  std::optional<bool> p_power_index;
  std::string witness;
};

Conjecture53Result run_conjecture_53(RealizedPair const& pair);

/// hyp(F_S(G)) = S n O^p(G).
Check verify_hyperfocal_oracle(Subgroup const& G, unsigned p, Caps const& caps = {});
/// Z(F_S(G)) = Z(G), skipped unless O_p'(G) = 1.
Check verify_zstar(Subgroup const& G, unsigned p, Caps const& caps = {});

}  // namespace fusionkit
