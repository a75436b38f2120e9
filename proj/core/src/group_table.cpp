#include "fusionkit/group_table.hpp"

#include <algorithm>
#include <deque>

#include "fusionkit/error.hpp"

namespace fusionkit {

namespace {

constexpr std::size_t kMaxStorableOrder = 65535;

void check_order_cap(std::size_t order, Caps const& caps) {
  if (order > caps.max_group_order || order > kMaxStorableOrder) {
    throw CapError("group order exceeds cap of " +
                   std::to_string(std::min(caps.max_group_order,
                                           kMaxStorableOrder)));
  }
}

}  // namespace

GroupPtr GroupTable::from_generators(std::size_t degree,
                                     std::vector<Permutation> const& generators,
                                     Caps const& caps) {
  for (auto const& g : generators) {
    if (g.size() != degree || !perm::is_valid(g)) {
      throw InvalidInput("generator is not a permutation of degree " +
                         std::to_string(degree));
    }
  }

  // Enumerate the closure under right multiplication by generators.
  std::vector<Permutation> elements{perm::identity(degree)};
  std::unordered_map<Permutation, Elem, perm::Hash> seen;
  seen.emplace(elements.front(), 0);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (auto const& g : generators) {
      Permutation next = perm::compose(elements[i], g);
      if (seen.find(next) == seen.end()) {
        seen.emplace(next, static_cast<Elem>(elements.size()));
        elements.push_back(std::move(next));
        check_order_cap(elements.size(), caps);
      }
    }
  }

  std::sort(elements.begin(), elements.end());
  auto table = std::shared_ptr<GroupTable>(new GroupTable());
  GroupTable& t = *table;
  t.order_ = elements.size();
  t.degree_ = degree;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    t.perm_index_.emplace(elements[i], static_cast<Elem>(i));
  }
  t.perms_ = std::move(elements);

  std::size_t const n = t.order_;
  std::vector<Elem> gen_index;
  for (auto const& g : generators) gen_index.push_back(t.perm_index_.at(g));

  // right[k][a] = a * gen_k
  std::vector<std::vector<Elem>> right(gen_index.size(), std::vector<Elem>(n));
  for (std::size_t k = 0; k < gen_index.size(); ++k) {
    auto const& g = t.perms_[gen_index[k]];
    for (std::size_t a = 0; a < n; ++a) {
      right[k][a] = t.perm_index_.at(perm::compose(t.perms_[a], g));
    }
  }

  // Spanning tree of the right Cayley graph; column b of the table is
  // column parent(b) followed by the generator edge.
  t.table_.assign(n * n, 0);
  std::vector<bool> reached(n, false);
  std::deque<Elem> queue{0};
  reached[0] = true;
  for (std::size_t a = 0; a < n; ++a) t.table_[a] = static_cast<std::uint16_t>(a);
  while (!queue.empty()) {
    Elem b = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < gen_index.size(); ++k) {
      Elem c = right[k][b];
      if (reached[c]) continue;
      reached[c] = true;
      auto const* src = &t.table_[static_cast<std::size_t>(b) * n];
      auto* dst = &t.table_[static_cast<std::size_t>(c) * n];
      for (std::size_t a = 0; a < n; ++a) {
        dst[a] = static_cast<std::uint16_t>(right[k][src[a]]);
      }
      queue.push_back(c);
    }
  }

  t.inverse_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    t.inverse_[a] = t.perm_index_.at(perm::inverse(t.perms_[a]));
  }
  t.finish();
  return table;
}

GroupPtr GroupTable::from_table(std::vector<std::vector<Elem>> const& rows,
                                Caps const& caps) {
  std::size_t const n = rows.size();
  if (n == 0) throw InvalidInput("empty multiplication table");
  check_order_cap(n, caps);
  for (auto const& row : rows) {
    if (row.size() != n) throw InvalidInput("multiplication table is not square");
    std::vector<bool> seen(n, false);
    for (auto v : row) {
      if (v >= n || seen[v]) {
        throw InvalidInput("table row is not a permutation of the elements");
      }
      seen[v] = true;
    }
  }
  for (std::size_t b = 0; b < n; ++b) {
    std::vector<bool> seen(n, false);
    for (std::size_t a = 0; a < n; ++a) {
      if (seen[rows[a][b]]) {
        throw InvalidInput("table column is not a permutation of the elements");
      }
      seen[rows[a][b]] = true;
    }
  }

  std::optional<Elem> e;
  for (std::size_t a = 0; a < n && !e; ++a) {
    bool ok = true;
    for (std::size_t b = 0; b < n && ok; ++b) {
      ok = rows[a][b] == b && rows[b][a] == b;
    }
    if (ok) e = static_cast<Elem>(a);
  }
  if (!e) throw InvalidInput("table has no identity element");

  // Swap labels 0 and e so the identity is element 0.
  auto relabel = [&](Elem x) -> Elem {
    if (x == *e) return 0;
    if (x == 0) return *e;
    return x;
  };

  auto table = std::shared_ptr<GroupTable>(new GroupTable());
  GroupTable& t = *table;
  t.order_ = n;
  t.table_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      Elem ra = relabel(static_cast<Elem>(a));
      Elem rb = relabel(static_cast<Elem>(b));
      t.table_[static_cast<std::size_t>(rb) * n + ra] =
          static_cast<std::uint16_t>(relabel(rows[a][b]));
    }
  }
  t.inverse_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (t.mul(static_cast<Elem>(a), static_cast<Elem>(b)) == 0) {
        t.inverse_[a] = static_cast<Elem>(b);
        break;
      }
    }
  }
  t.finish();
  t.verify();
  return table;
}

void GroupTable::finish() {
  elem_order_.assign(order_, 0);
  for (std::size_t a = 0; a < order_; ++a) {
    std::uint32_t k = 1;
    Elem x = static_cast<Elem>(a);
    while (x != 0) {
      x = mul(x, static_cast<Elem>(a));
      ++k;
      if (k > order_) throw InvalidInput("element of infinite order in table");
    }
    elem_order_[a] = k;
  }
}

Elem GroupTable::pow(Elem a, std::int64_t k) const noexcept {
  std::int64_t const ord = elem_order_[a];
  k %= ord;
  if (k < 0) k += ord;
  Elem r = 0;
  for (std::int64_t i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

std::optional<Elem> GroupTable::index_of(Permutation const& p) const {
  auto it = perm_index_.find(p);
  if (it == perm_index_.end()) return std::nullopt;
  return it->second;
}

std::string GroupTable::label(Elem a) const {
  if (has_permutations()) return perm::to_cycle_string(perms_[a]);
  if (a == 0) return "e";
  return "g" + std::to_string(a);
}

void GroupTable::verify() const {
  std::size_t const n = order_;
  for (std::size_t a = 0; a < n; ++a) {
    auto x = static_cast<Elem>(a);
    if (mul(0, x) != x || mul(x, 0) != x) {
      throw VerificationError("identity law", label(x));
    }
    if (mul(x, inv(x)) != 0 || mul(inv(x), x) != 0) {
      throw VerificationError("inverse law", label(x));
    }
  }

  // Generators such that every element is a left-bracketed product of
  // them, grown greedily with a breadth-first closure.
  std::vector<Elem> gens;
  std::vector<bool> in(n, false);
  std::vector<Elem> reached{0};
  in[0] = true;
  for (std::size_t a = 0; a < n; ++a) {
    if (in[a]) continue;
    gens.push_back(static_cast<Elem>(a));
    for (std::size_t i = 0; i < reached.size(); ++i) {
      for (Elem g : gens) {
        Elem c = mul(reached[i], g);
        if (!in[c]) {
          in[c] = true;
          reached.push_back(c);
        }
      }
    }
  }

  // If (xy)g = x(yg) holds for all x, y and every g in a generating set, it
  // holds for all products of generators.
  for (Elem g : gens) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        auto x = static_cast<Elem>(a);
        auto y = static_cast<Elem>(b);
        if (mul(mul(x, y), g) != mul(x, mul(y, g))) {
          throw VerificationError("associativity",
                                  label(x) + ", " + label(y) + ", " + label(g));
        }
      }
    }
  }

  if (has_permutations()) {
    for (std::size_t a = 0; a < n; ++a) {
      for (Elem g : gens) {
        auto x = static_cast<Elem>(a);
        if (perm::compose(perms_[x], perms_[g]) != perms_[mul(x, g)]) {
          throw VerificationError("permutation realization is not a homomorphism",
                                  label(x) + " * " + label(g));
        }
      }
    }
  }
}

}  // namespace fusionkit
