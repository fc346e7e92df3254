#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cdkit/classify.hpp"
#include "cdkit/constructors.hpp"
#include "cdkit/iso.hpp"

namespace cdkit {

// Cheap isomorphism invariants. Equal fingerprints do not prove isomorphism,
// but different fingerprints disprove it.
struct Fingerprint {
  int order = 1;
  bool abelian = true;
  int center_order = 1;
  std::vector<std::pair<int, long long>> order_histogram;
  std::vector<int> class_sizes;                // sorted multiset
  std::optional<long long> subgroup_count;     // filled lazily when available

  bool equivalent(const Fingerprint& o) const {
    if (order != o.order || abelian != o.abelian || center_order != o.center_order)
      return false;
    if (order_histogram != o.order_histogram || class_sizes != o.class_sizes)
      return false;
    if (subgroup_count && o.subgroup_count && *subgroup_count != *o.subgroup_count)
      return false;
    return true;
  }
};

inline Fingerprint fingerprint(const Group& g) {
  Fingerprint fp;
  fp.order = g.order();
  fp.abelian = g.is_abelian();
  fp.order_histogram = order_histogram(g);
  fp.class_sizes.resize(g.order());
  fp.center_order = 0;
  for (int x = 0; x < g.order(); ++x) {
    fp.class_sizes[x] = g.class_size(x);
    if (g.class_size(x) == 1) ++fp.center_order;
  }
  std::sort(fp.class_sizes.begin(), fp.class_sizes.end());
  return fp;
}

struct CatalogEntry {
  Group group;
  Fingerprint fp;
};

struct Catalog {
  int max_order = 0;
  std::vector<CatalogEntry> entries;             // sorted by order, generation order within
  std::vector<std::pair<int, bool>> coverage;    // (order, exhaustive), ascending

  std::vector<Group> groups() const {
    std::vector<Group> out;
    out.reserve(entries.size());
    for (const auto& e : entries) out.push_back(e.group);
    return out;
  }
};

namespace detail {

// Partitions of a in descending-part form, enumerated in a fixed order
// (largest first part first).
inline std::vector<std::vector<int>> partitions_of(int a) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int maxpart) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = std::min(rest, maxpart); part >= 1; --part) {
      cur.push_back(part);
      self(self, rest - part, part);
      cur.pop_back();
    }
  };
  rec(rec, a, a);
  return out;
}

// Canonical ascending invariant-factor lists of all abelian groups of
// order n, in a deterministic order.
inline std::vector<std::vector<long long>> abelian_types(long long n) {
  auto fact = factorize(n);
  std::vector<std::vector<std::vector<int>>> per_prime;
  for (auto [p, a] : fact) per_prime.push_back(partitions_of(a));

  std::vector<std::vector<long long>> out;
  std::vector<std::size_t> pick(fact.size(), 0);
  while (true) {
    std::size_t len = 0;
    for (std::size_t i = 0; i < fact.size(); ++i)
      len = std::max(len, per_prime[i][pick[i]].size());
    std::vector<long long> factors;
    for (std::size_t j = 0; j < len; ++j) {
      long long d = 1;
      for (std::size_t i = 0; i < fact.size(); ++i) {
        const auto& part = per_prime[i][pick[i]];
        if (j < part.size()) d *= ipow(fact[i].first, part[j]);
      }
      factors.push_back(d);
    }
    std::reverse(factors.begin(), factors.end());
    if (factors.empty()) factors.push_back(1);
    out.push_back(std::move(factors));

    std::size_t i = 0;
    for (; i < fact.size(); ++i) {
      if (++pick[i] < per_prime[i].size()) break;
      pick[i] = 0;
    }
    if (i == fact.size()) break;
  }
  return out;
}

}  // namespace detail

// Deterministic deduplicated collection of constructed groups: all abelian
// groups of each order, the dihedral/dicyclic/symmetric/alternating/
// Heisenberg/modular families, the faithful split metacyclic groups, and
// pairwise direct products, each reduced modulo isomorphism. Coverage marks
// orders p, p^2, p^3 and pq as exhaustive (the constructors realize every
// isomorphism class there) and everything else as partial.
inline Catalog builtin_catalog(int max_order) {
  if (max_order < 1 || max_order > 200)
    throw InvalidParameters("builtin_catalog: max_order must be in 1..200");

  Catalog cat;
  cat.max_order = max_order;
  std::map<int, std::vector<int>> by_order;  // order -> entry indices

  auto add = [&](const Group& g) {
    Fingerprint fp = fingerprint(g);
    for (int idx : by_order[g.order()]) {
      if (!cat.entries[idx].fp.equivalent(fp)) continue;
      if (is_isomorphic(g, cat.entries[idx].group) == IsoResult::Yes) return;
    }
    by_order[g.order()].push_back(static_cast<int>(cat.entries.size()));
    cat.entries.push_back({g, std::move(fp)});
  };

  for (int n = 1; n <= max_order; ++n)
    for (const auto& type : detail::abelian_types(n)) add(abelian_from_invariants(type));

  for (int n = 2; 2 * n <= max_order; ++n) add(dihedral(n));
  for (int m = 2; 4 * m <= max_order; ++m) add(dicyclic(m));
  if (6 <= max_order) add(symmetric(3));
  if (24 <= max_order) add(symmetric(4));
  if (12 <= max_order) add(alternating4());
  for (int p = 2; p * p * p <= max_order; ++p)
    if (is_prime(p)) add(heisenberg(p));
  for (int p = 3; p * p * p <= max_order; ++p)
    if (is_prime(p)) add(modular_group(p, 3));

  // Faithful split metacyclic groups; for fixed (m, k) the isomorphism type
  // depends only on the subgroup <t> of (Z/m)*, so only the least generator
  // of each such subgroup is constructed.
  for (int m = 2; 2 * m <= max_order; ++m) {
    for (int k = 2; m * k <= max_order; ++k) {
      for (int t = 2; t < m; ++t) {
        if (multiplicative_order(t, m) != k) continue;
        bool canonical = true;
        // elements of <t> with order exactly k, looking for one below t
        long long u = t;
        do {
          if (u < t && multiplicative_order(u, m) == k) {
            canonical = false;
            break;
          }
          u = u * t % m;
        } while (u != t);
        if (canonical) add(metacyclic(m, k, t));
      }
    }
  }

  // Pairwise direct products, closed under further products within the
  // bound. Scanning j over the growing list reaches iterated products.
  for (std::size_t j = 0; j < cat.entries.size(); ++j) {
    for (std::size_t i = 0; i <= j; ++i) {
      long long o = static_cast<long long>(cat.entries[i].group.order()) *
                    cat.entries[j].group.order();
      if (cat.entries[i].group.order() < 2 || cat.entries[j].group.order() < 2) continue;
      if (o > max_order) continue;
      add(direct_product(cat.entries[i].group, cat.entries[j].group));
    }
  }

  std::stable_sort(cat.entries.begin(), cat.entries.end(),
                   [](const CatalogEntry& a, const CatalogEntry& b) {
                     return a.group.order() < b.group.order();
                   });

  for (int n = 1; n <= max_order; ++n) {
    auto f = factorize(n);
    bool exhaustive = false;
    if (f.size() == 1 && f[0].second <= 3) exhaustive = true;              // p, p^2, p^3
    if (f.size() == 2 && f[0].second == 1 && f[1].second == 1) exhaustive = true;  // pq
    cat.coverage.emplace_back(n, exhaustive);
  }
  return cat;
}

}  // namespace cdkit
