#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cdkit/errors.hpp"
#include "cdkit/perm.hpp"

namespace cdkit {

// Groups larger than this are rejected by every construction path. The CLI
// can override it via CDKIT_ELEMENT_CAP.
inline constexpr int kDefaultElementCap = 2000;

// Full multiplication tables are materialized up to this order; larger
// groups compute products on demand.
inline constexpr int kTableThreshold = 512;

// Ingested Cayley tables are associativity-checked exhaustively up to this
// order, and by seeded random sampling beyond it.
inline constexpr int kExhaustiveAssocBound = 256;

// An immutable finite group on element indices 0..order-1, identity at 0.
// Copies share the underlying representation and are safe to hand across
// threads read-only.
class Group {
 public:
  Group() = default;

  int order() const { return d_->n; }

  int mult(int a, int b) const {
    const Data& d = *d_;
    if (!d.table.empty()) return d.table[static_cast<std::size_t>(a) * d.n + b];
    return d.fn(a, b);
  }

  int inverse(int a) const { return d_->inv[a]; }

  int element_order(int a) const { return d_->elem_order[a]; }

  // Size of the conjugacy class of element a.
  int class_size(int a) const { return d_->class_size[a]; }

  // A small generating set, computed greedily at construction.
  const std::vector<int>& generators() const { return d_->gens; }

  bool is_abelian() const { return d_->abelian; }

  const std::string& label() const { return d_->label; }
  const std::string& construction() const { return d_->construction; }

  // False only for large ingested tables whose associativity was sampled.
  bool multiplication_fully_verified() const { return d_->assoc_fully_checked; }

  // Identity of representation: two Group values are the same group object
  // iff they share internals. Used for parent checks on subgroups.
  bool same_object(const Group& o) const { return d_ == o.d_; }

  // Direct pointer to the flattened table, or nullptr for on-demand groups.
  const std::int32_t* table_data() const {
    return d_->table.empty() ? nullptr : d_->table.data();
  }

  Group with_label(std::string label) const {
    auto d = std::make_shared<Data>(*d_);
    d->label = std::move(label);
    Group g;
    g.d_ = std::move(d);
    return g;
  }

  struct Data {
    int n = 1;
    std::string label;
    std::string construction;
    bool assoc_fully_checked = true;
    std::vector<std::int32_t> table;      // flattened n*n, empty for on-demand
    std::function<int(int, int)> fn;      // set iff table is empty
    std::vector<int> inv;
    std::vector<int> elem_order;
    std::vector<int> class_size;
    std::vector<int> gens;
    bool abelian = true;
  };

  static Group from_data(std::shared_ptr<const Data> d) {
    Group g;
    g.d_ = std::move(d);
    return g;
  }

 private:
  std::shared_ptr<const Data> d_;
};

namespace detail {

// Finishes a Group::Data whose n, label, construction and raw multiplication
// (table or fn) are filled in: derives inverses, element orders, class
// sizes, a small generating set and the abelian flag.
inline Group finish_group(std::shared_ptr<Group::Data> d) {
  const int n = d->n;
  auto mult = [&](int a, int b) -> int {
    if (!d->table.empty()) return d->table[static_cast<std::size_t>(a) * n + b];
    return d->fn(a, b);
  };

  d->inv.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    if (d->inv[a] != -1) continue;
    for (int b = 0; b < n; ++b) {
      if (mult(a, b) == 0) {
        d->inv[a] = b;
        if (d->inv[b] == -1 && mult(b, a) == 0) d->inv[b] = a;
        break;
      }
    }
    if (d->inv[a] == -1)
      throw NotAGroup("inverse", {a, -1, -1},
                      "element " + std::to_string(a) + " has no inverse");
  }

  d->elem_order.assign(n, 0);
  d->elem_order[0] = 1;
  for (int a = 1; a < n; ++a) {
    int k = 1, x = a;
    while (x != 0) {
      x = mult(x, a);
      ++k;
    }
    d->elem_order[a] = k;
  }

  // Greedy small generating set: scan elements in index order, adding any
  // element outside the subgroup generated so far.
  {
    std::vector<char> in(n, 0);
    in[0] = 1;
    std::vector<int> members{0};
    for (int x = 1; x < n; ++x) {
      if (in[x]) continue;
      d->gens.push_back(x);
      // reclose from scratch with the extended generator list
      std::fill(in.begin(), in.end(), 0);
      in[0] = 1;
      members.assign(1, 0);
      for (std::size_t i = 0; i < members.size(); ++i)
        for (int g : d->gens) {
          int y = mult(members[i], g);
          if (!in[y]) {
            in[y] = 1;
            members.push_back(y);
          }
        }
    }
  }

  d->abelian = true;
  for (std::size_t i = 0; i < d->gens.size() && d->abelian; ++i)
    for (std::size_t j = i + 1; j < d->gens.size(); ++j)
      if (mult(d->gens[i], d->gens[j]) != mult(d->gens[j], d->gens[i])) {
        d->abelian = false;
        break;
      }

  // Conjugacy class sizes via orbits of x -> g x g^-1 over the generators.
  d->class_size.assign(n, 0);
  {
    std::vector<int> cls(n, -1);
    for (int x = 0; x < n; ++x) {
      if (cls[x] != -1) continue;
      std::vector<int> orbit{x};
      cls[x] = x;
      for (std::size_t i = 0; i < orbit.size(); ++i)
        for (int g : d->gens) {
          int y = mult(mult(g, orbit[i]), d->inv[g]);
          if (cls[y] == -1) {
            cls[y] = x;
            orbit.push_back(y);
          }
        }
      for (int y : orbit) d->class_size[y] = static_cast<int>(orbit.size());
    }
  }

  return Group::from_data(std::move(d));
}

// Builds a group from an arbitrary index-level multiplication closure.
// The caller guarantees fn is a group law with identity at index 0.
inline Group build_group(int n, std::string label, std::string construction,
                         std::function<int(int, int)> fn, int cap) {
  if (n > cap)
    throw CapExceeded("group of order " + std::to_string(n) +
                      " exceeds element cap " + std::to_string(cap));
  auto d = std::make_shared<Group::Data>();
  d->n = n;
  d->label = std::move(label);
  d->construction = std::move(construction);
  if (n <= kTableThreshold) {
    d->table.resize(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) d->table[static_cast<std::size_t>(a) * n + b] = fn(a, b);
  } else {
    d->fn = std::move(fn);
  }
  return finish_group(std::move(d));
}

}  // namespace detail

// Closes a generator list under composition. Element indexing is the BFS
// discovery order with the identity at 0, so it is construction-deterministic.
inline Group group_from_generators(const std::vector<Permutation>& gens,
                                   int cap = kDefaultElementCap,
                                   const std::string& label = "",
                                   const std::string& construction = "generators") {
  if (cap < 1) throw InvalidParameters("cap must be >= 1");
  int degree = gens.empty() ? 1 : gens[0].degree();
  for (const auto& g : gens)
    if (g.degree() != degree)
      throw DegreeMismatch("generators have degrees " + std::to_string(degree) +
                           " and " + std::to_string(g.degree()));

  auto elems = std::make_shared<std::vector<Permutation>>();
  std::unordered_map<Permutation, int, PermutationHash> index;
  elems->push_back(Permutation::identity(degree));
  index.emplace((*elems)[0], 0);
  for (std::size_t i = 0; i < elems->size(); ++i) {
    for (const auto& g : gens) {
      Permutation p = (*elems)[i].compose(g);
      if (index.emplace(p, static_cast<int>(elems->size())).second) {
        elems->push_back(std::move(p));
        if (static_cast<int>(elems->size()) > cap)
          throw CapExceeded("closure exceeded element cap " + std::to_string(cap));
      }
    }
  }

  int n = static_cast<int>(elems->size());
  auto lookup = std::make_shared<std::unordered_map<Permutation, int, PermutationHash>>(
      std::move(index));
  auto fn = [elems, lookup](int a, int b) {
    return lookup->at((*elems)[a].compose((*elems)[b]));
  };
  return detail::build_group(n, label.empty() ? "G" + std::to_string(n) : label,
                             construction, fn, cap);
}

// Validates an ingested Cayley table: identity at 0, inverses, closure and
// associativity (exhaustive up to kExhaustiveAssocBound, sampled beyond).
inline Group group_from_cayley_table(const std::vector<std::vector<int>>& table,
                                     int cap = kDefaultElementCap,
                                     const std::string& label = "",
                                     const std::string& construction = "cayley") {
  int n = static_cast<int>(table.size());
  if (n < 1) throw InvalidParameters("empty multiplication table");
  if (n > cap)
    throw CapExceeded("table of order " + std::to_string(n) +
                      " exceeds element cap " + std::to_string(cap));
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table[a].size()) != n)
      throw NotAGroup("closure", {a, -1, -1}, "row " + std::to_string(a) + " has wrong length");
    for (int b = 0; b < n; ++b)
      if (table[a][b] < 0 || table[a][b] >= n)
        throw NotAGroup("closure", {a, b, -1},
                        "entry out of range at (" + std::to_string(a) + "," +
                            std::to_string(b) + ")");
  }
  for (int a = 0; a < n; ++a) {
    if (table[0][a] != a)
      throw NotAGroup("identity", {0, a, -1}, "index 0 is not a left identity");
    if (table[a][0] != a)
      throw NotAGroup("identity", {a, 0, -1}, "index 0 is not a right identity");
  }
  for (int a = 0; a < n; ++a) {
    bool has_inv = false;
    for (int b = 0; b < n && !has_inv; ++b)
      has_inv = table[a][b] == 0 && table[b][a] == 0;
    if (!has_inv)
      throw NotAGroup("inverse", {a, -1, -1},
                      "element " + std::to_string(a) + " has no two-sided inverse");
  }

  bool fully_checked = true;
  auto check_triple = [&](int a, int b, int c) {
    if (table[table[a][b]][c] != table[a][table[b][c]])
      throw NotAGroup("associativity", {a, b, c},
                      "(" + std::to_string(a) + "*" + std::to_string(b) + ")*" +
                          std::to_string(c) + " != " + std::to_string(a) + "*(" +
                          std::to_string(b) + "*" + std::to_string(c) + ")");
  };
  if (n <= kExhaustiveAssocBound) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) check_triple(a, b, c);
  } else {
    // Seeded sampling keeps ingestion of large tables tractable; the group
    // is flagged as partially verified.
    fully_checked = false;
    std::uint64_t state = 0x9e3779b97f4a7c15ull;
    auto next = [&]() {
      state ^= state << 13;
      state ^= state >> 7;
      state ^= state << 17;
      return state;
    };
    long long samples = 10LL * n * n;
    for (long long s = 0; s < samples; ++s) {
      int a = static_cast<int>(next() % n);
      int b = static_cast<int>(next() % n);
      int c = static_cast<int>(next() % n);
      check_triple(a, b, c);
    }
  }

  auto d = std::make_shared<Group::Data>();
  d->n = n;
  d->label = label.empty() ? "G" + std::to_string(n) : label;
  d->construction = construction + (fully_checked ? "" : " (associativity partially verified)");
  d->assoc_fully_checked = fully_checked;
  if (n <= kTableThreshold) {
    d->table.resize(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) d->table[static_cast<std::size_t>(a) * n + b] = table[a][b];
  } else {
    auto rows = std::make_shared<std::vector<std::vector<int>>>(table);
    d->fn = [rows](int a, int b) { return (*rows)[a][b]; };
  }
  return detail::finish_group(std::move(d));
}

// Multiset of element orders, ascending.
inline std::vector<int> element_orders(const Group& g) {
  std::vector<int> out(g.order());
  for (int a = 0; a < g.order(); ++a) out[a] = g.element_order(a);
  std::sort(out.begin(), out.end());
  return out;
}

// Histogram of element orders as (order, count) pairs, ascending by order.
inline std::vector<std::pair<int, long long>> order_histogram(const Group& g) {
  std::map<int, long long> h;
  for (int a = 0; a < g.order(); ++a) ++h[g.element_order(a)];
  return {h.begin(), h.end()};
}

inline long long exponent(const Group& g) {
  long long e = 1;
  for (int a = 0; a < g.order(); ++a) e = std::lcm(e, static_cast<long long>(g.element_order(a)));
  return e;
}

inline bool is_abelian(const Group& g) { return g.is_abelian(); }

}  // namespace cdkit
