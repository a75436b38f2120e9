#pragma once

#include <cstddef>

namespace fusionkit {

/// Resource limits shared by all enumeration routines.  Every limit is
/// overridable; exceeding one raises CapError.
struct Caps {
  std::size_t max_group_order = 10000;
  std::size_t max_p_group_order = 256;
  std::size_t max_subgroups = 50000;
  // automorphism_group() refuses groups larger than this
  std::size_t max_automorphism_domain = 256;
  std::size_t max_automorphisms = 200000;
  std::size_t functor_objects = 12;
  std::size_t functor_candidates = 10000;
  std::size_t natural_iso_nodes = 1000000;
};

}  // namespace fusionkit
