#pragma once

#include <vector>

#include "fusionkit/caps.hpp"
#include "fusionkit/check.hpp"
#include "fusionkit/pair.hpp"

namespace fusionkit {

struct TheoremAReport {
  std::vector<Elem> centralizer;  // C_S(E)
  std::size_t aut_L_T_order = 0;
  bool aut_L_T_extended = false;
  std::size_t L_objects = 0;
  std::size_t L0_objects = 0;
  std::size_t kernel_order = 0;
  /// Filled when check (iii) ran.
  std::size_t functors = 0;
  std::size_t l_trivial_functors = 0;
  std::size_t conjugation_image = 0;
  /// (i) injectivity, (ii) kernel equality, (iii) image, (iv) strong closure.
  std::vector<Check> checks;

  bool passed() const { return all_passed(checks); }
};

/// Exactness of 1 -> C_S(E) -> Aut_L(T) -> Aut_typ^I(L0) -> Out_typ^L(L0)
/// for a realized pair.  Check (iii) is reported as skipped when the
/// functor enumeration or natural-isomorphism search hits a cap.
TheoremAReport verify_theorem_a(RealizedPair const& pair, Caps const& caps = {});

}  // namespace fusionkit
