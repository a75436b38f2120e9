#pragma once

// Brute-force reference computations used only by the tests.  Nothing here
// calls the library's algorithms beyond reading multiplication tables.

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <vector>

#include "fusionkit/group_table.hpp"
#include "fusionkit/permutation.hpp"
#include "fusionkit/subgroup.hpp"

namespace oracle {

using fusionkit::Elem;
using fusionkit::GroupTable;
using fusionkit::Permutation;
using fusionkit::Subgroup;
using Set = std::vector<Elem>;

inline std::set<Permutation> closure(std::size_t degree, std::vector<Permutation> const& gens) {
  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0u);
  std::set<Permutation> seen{id};
  std::deque<Permutation> todo{id};
  while (!todo.empty()) {
    auto a = todo.front();
    todo.pop_front();
    for (auto const& g : gens) {
      Permutation b(degree);
      for (std::size_t i = 0; i < degree; ++i) b[i] = g[a[i]];
      if (seen.insert(b).second) todo.push_back(b);
    }
  }
  return seen;
}

/// Closure of a set of elements under multiplication, sorted.
inline Set close(GroupTable const& t, Set gens) {
  std::vector<bool> in(t.order(), false);
  Set out{0};
  in[0] = true;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (Elem g : gens) {
      Elem y = t.mul(out[i], g);
      if (!in[y]) {
        in[y] = true;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline Set members(Subgroup const& s) { return {s.members().begin(), s.members().end()}; }

/// Every subgroup of `top`, found by repeatedly adjoining single elements.
inline std::set<Set> all_subgroups(Subgroup const& top) {
  auto const& t = top.group();
  std::set<Set> found{{0}};
  std::deque<Set> todo{{0}};
  while (!todo.empty()) {
    Set s = todo.front();
    todo.pop_front();
    for (Elem x : top.members()) {
      if (std::binary_search(s.begin(), s.end(), x)) continue;
      Set gens = s;
      gens.push_back(x);
      Set c = close(t, gens);
      if (found.insert(c).second) todo.push_back(c);
    }
  }
  return found;
}

inline bool contains(Set const& s, Elem x) { return std::binary_search(s.begin(), s.end(), x); }

/// Hom-set of the realized system as image tables over the sorted members of P.
inline std::set<Set> hom_set(Subgroup const& G, Set const& P, Set const& Q) {
  auto const& t = G.group();
  std::set<Set> out;
  for (Elem g : G.members()) {
    Set img;
    bool ok = true;
    for (Elem x : P) {
      Elem y = t.conj(x, g);
      if (!contains(Q, y)) {
        ok = false;
        break;
      }
      img.push_back(y);
    }
    if (ok) out.insert(img);
  }
  return out;
}

inline bool coprime_to(std::size_t n, unsigned p) { return n % p != 0; }

/// O^p(G): generated by the p'-elements.
inline Set op_upper(Subgroup const& G, unsigned p) {
  Set gens;
  for (Elem x : G.members()) {
    if (coprime_to(G.group().element_order(x), p)) gens.push_back(x);
  }
  return close(G.group(), gens);
}

inline Set conjugate(GroupTable const& t, Set const& s, Elem g) {
  Set out;
  for (Elem x : s) out.push_back(t.conj(x, g));
  std::sort(out.begin(), out.end());
  return out;
}

inline Set normal_closure(Subgroup const& G, Set const& gens) {
  Set all;
  for (Elem g : G.members()) {
    for (Elem x : gens) all.push_back(G.group().conj(x, g));
  }
  return close(G.group(), all);
}

/// O_p(G): intersection of the conjugates of a Sylow p-subgroup.
inline Set op_lower(Subgroup const& G, Set const& sylow) {
  Set cur = sylow;
  for (Elem g : G.members()) {
    Set c = conjugate(G.group(), sylow, g);
    Set meet;
    std::set_intersection(cur.begin(), cur.end(), c.begin(), c.end(), std::back_inserter(meet));
    cur = meet;
  }
  return cur;
}

/// O_p'(G): generated by the elements whose normal closure has p'-order.
inline Set op_prime(Subgroup const& G, unsigned p) {
  Set gens;
  for (Elem x : G.members()) {
    if (coprime_to(normal_closure(G, {x}).size(), p)) gens.push_back(x);
  }
  return close(G.group(), gens);
}

inline Set centralizer(Subgroup const& A, Set const& X) {
  Set out;
  for (Elem a : A.members()) {
    bool ok = std::all_of(X.begin(), X.end(), [&](Elem x) {
      return A.group().mul(a, x) == A.group().mul(x, a);
    });
    if (ok) out.push_back(a);
  }
  return out;
}

inline Set normalizer(Subgroup const& A, Set const& X) {
  Set out;
  for (Elem a : A.members()) {
    if (conjugate(A.group(), X, a) == X) out.push_back(a);
  }
  return out;
}

/// Number of automorphisms of a group generated by `gens`: every
/// assignment of images to the generators is tried and extended along
/// words.
inline std::size_t automorphism_count(Subgroup const& G, Set const& gens) {
  auto const& t = G.group();
  std::size_t const n = G.order();
  std::size_t count = 0;
  std::vector<std::size_t> choice(gens.size(), 0);
  auto const mem = members(G);
  while (true) {
    // build the map by BFS over words in the generators
    std::vector<Elem> image(t.order(), static_cast<Elem>(-1));
    image[0] = 0;
    std::vector<Elem> queue{0};
    bool ok = true;
    for (std::size_t i = 0; i < queue.size() && ok; ++i) {
      Elem x = queue[i];
      for (std::size_t k = 0; k < gens.size(); ++k) {
        Elem y = t.mul(x, gens[k]);
        Elem iy = t.mul(image[x], mem[choice[k]]);
        if (image[y] == static_cast<Elem>(-1)) {
          image[y] = iy;
          queue.push_back(y);
        } else if (image[y] != iy) {
          ok = false;
          break;
        }
      }
    }
    if (ok) {
      std::set<Elem> imgs;
      for (Elem x : mem) imgs.insert(image[x]);
      if (imgs.size() == n) {
        for (Elem a : mem) {
          for (Elem b : mem) {
            if (image[t.mul(a, b)] != t.mul(image[a], image[b])) ok = false;
          }
        }
        if (ok) ++count;
      }
    }
    std::size_t k = 0;
    while (k < choice.size() && ++choice[k] == n) choice[k++] = 0;
    if (k == choice.size()) break;
  }
  return count;
}

/// {g in C_S(T) : every E-morphism c_h|P (h in H, P <= T, P^h <= T) agrees on P
/// with some c_x, x in G, fixing g and mapping P<g> into S}.
inline Set centralizer_direct(Subgroup const& G, Subgroup const& H, Subgroup const& S,
                              Subgroup const& T) {
  auto const& t = G.group();
  auto const subs = all_subgroups(T);
  auto const Sm = members(S);
  auto const Tm = members(T);
  Set out;
  for (Elem g : S.members()) {
    bool member = std::all_of(Tm.begin(), Tm.end(), [&](Elem y) { return t.mul(g, y) == t.mul(y, g); });
    for (auto const& P : subs) {
      if (!member) break;
      for (auto const& img : hom_set(H, P, Tm)) {
        bool found = false;
        for (Elem x : G.members()) {
          if (t.conj(g, x) != g) continue;
          bool agrees = true;
          for (std::size_t i = 0; i < P.size() && agrees; ++i) {
            agrees = t.conj(P[i], x) == img[i];
          }
          if (!agrees) continue;
          Set gens = P;
          gens.push_back(g);
          Set PG = close(t, gens);
          bool inside = std::all_of(PG.begin(), PG.end(),
                                    [&](Elem y) { return contains(Sm, t.conj(y, x)); });
          if (inside) {
            found = true;
            break;
          }
        }
        if (!found) {
          member = false;
          break;
        }
      }
    }
    if (member) out.push_back(g);
  }
  return out;
}

}  // namespace oracle
