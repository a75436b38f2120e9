#include "fusionkit/permutation.hpp"

#include <numeric>
#include <sstream>

#include "fusionkit/error.hpp"

namespace fusionkit::perm {

Permutation identity(std::size_t degree) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

Permutation compose(Permutation const& a, Permutation const& b) {
  Permutation r(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) r[x] = b[a[x]];
  return r;
}

Permutation inverse(Permutation const& a) {
  Permutation r(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) r[a[x]] = static_cast<std::uint32_t>(x);
  return r;
}

bool is_valid(Permutation const& a) {
  std::vector<bool> seen(a.size(), false);
  for (auto v : a) {
    if (v >= a.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Permutation from_cycles(std::size_t degree,
                        std::vector<std::vector<std::uint32_t>> const& cycles) {
  Permutation p = identity(degree);
  std::vector<bool> used(degree, false);
  for (auto const& cycle : cycles) {
    for (auto pt : cycle) {
      if (pt < 1 || pt > degree) {
        throw ParseError("cycle point " + std::to_string(pt) +
                         " outside 1.." + std::to_string(degree));
      }
      if (used[pt - 1]) {
        throw ParseError("point " + std::to_string(pt) +
                         " repeated in cycle list");
      }
      used[pt - 1] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      p[cycle[i] - 1] = cycle[(i + 1) % cycle.size()] - 1;
    }
  }
  return p;
}

Permutation extend(Permutation const& a, std::size_t degree) {
  Permutation r = identity(degree);
  for (std::size_t x = 0; x < a.size(); ++x) r[x] = a[x];
  return r;
}

Permutation shift(Permutation const& a, std::size_t offset,
                  std::size_t degree) {
  Permutation r = identity(degree);
  for (std::size_t x = 0; x < a.size(); ++x) {
    r[x + offset] = static_cast<std::uint32_t>(a[x] + offset);
  }
  return r;
}

std::string to_cycle_string(Permutation const& a) {
  std::ostringstream out;
  std::vector<bool> seen(a.size(), false);
  bool any = false;
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (seen[x] || a[x] == x) continue;
    any = true;
    out << '(';
    std::size_t y = x;
    bool first = true;
    while (!seen[y]) {
      seen[y] = true;
      if (!first) out << ',';
      out << (y + 1);
      first = false;
      y = a[y];
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

std::size_t Hash::operator()(Permutation const& a) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto v : a) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace fusionkit::perm
