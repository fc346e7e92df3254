#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cdkit/numeric.hpp"
#include "cdkit/subgroup.hpp"

namespace cdkit {

inline constexpr long long kDefaultSubgroupBudget = 100000;

// The complete subgroup lattice of a group: all subgroups in a deterministic
// order (by order, then lexicographic membership bit-vector), partitioned
// into conjugacy classes. Class representatives are the least-indexed
// members. Immutable once built.
struct SubgroupLattice {
  Group group;
  std::vector<SubgroupSet> subgroups;
  std::vector<std::vector<int>> classes;  // ascending member indices per class
  std::vector<int> class_of;              // subgroup index -> class id
  std::vector<bool> normal_flags;         // class is a singleton

  int size() const { return static_cast<int>(subgroups.size()); }

  int index_of(const Bitset& members) const {
    auto it = index_.find(members);
    return it == index_.end() ? -1 : it->second;
  }

  std::unordered_map<Bitset, int, BitsetHash> index_;
};

// Enumerates every subgroup: all cyclic subgroups first, then closure under
// joining with cyclic subgroups until a fixed point. Every subgroup is a
// join of cyclic subgroups, so the fixed point is the full lattice.
inline SubgroupLattice all_subgroups(const Group& g,
                                     long long budget = kDefaultSubgroupBudget) {
  const int n = g.order();
  struct Entry {
    Bitset bits;
    std::vector<int> gens;
  };
  std::vector<Entry> found;
  std::unordered_map<Bitset, int, BitsetHash> seen;

  auto add = [&](Bitset bits, std::vector<int> gens) -> bool {
    auto [it, fresh] = seen.emplace(bits, static_cast<int>(found.size()));
    if (!fresh) return false;
    found.push_back({std::move(bits), std::move(gens)});
    if (static_cast<long long>(found.size()) > budget)
      throw CapExceeded("subgroup count exceeds budget " + std::to_string(budget));
    return true;
  };

  {
    Bitset triv(n);
    triv.set(0);
    add(std::move(triv), {});
  }

  // Distinct cyclic subgroups, keyed by their least generator.
  std::vector<std::pair<int, Bitset>> cyclics;
  for (int x = 1; x < n; ++x) {
    Bitset c(n);
    c.set(0);
    int y = x;
    while (y != 0) {
      c.set(y);
      y = g.mult(y, x);
    }
    if (add(c, {x})) cyclics.emplace_back(x, std::move(c));
  }

  for (std::size_t i = 0; i < found.size(); ++i) {
    for (const auto& [cgen, cbits] : cyclics) {
      if (cbits.is_subset_of(found[i].bits)) continue;
      std::vector<int> gens = found[i].gens;
      gens.push_back(cgen);
      Bitset joined = detail::close_generators(g, gens);
      add(std::move(joined), std::move(gens));
    }
  }

  // Deterministic order: by subgroup order, then lexicographic bit-vector.
  std::vector<int> perm(found.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> counts(found.size());
  for (std::size_t i = 0; i < found.size(); ++i) counts[i] = found[i].bits.count();
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    if (counts[a] != counts[b]) return counts[a] < counts[b];
    return found[a].bits.lex_less(found[b].bits);
  });

  SubgroupLattice lat;
  lat.group = g;
  lat.subgroups.reserve(found.size());
  for (std::size_t k = 0; k < perm.size(); ++k) {
    Entry& e = found[perm[k]];
    lat.index_[e.bits] = static_cast<int>(k);
    lat.subgroups.emplace_back(g, std::move(e.bits), std::move(e.gens));
  }

  // Conjugacy classes as orbits of H -> gHg^-1 over the group's generators.
  const int s = lat.size();
  lat.class_of.assign(s, -1);
  for (int i = 0; i < s; ++i) {
    if (lat.class_of[i] != -1) continue;
    int cid = static_cast<int>(lat.classes.size());
    std::vector<int> orbit{i};
    lat.class_of[i] = cid;
    for (std::size_t pos = 0; pos < orbit.size(); ++pos) {
      for (int gen : g.generators()) {
        Bitset cb = conjugate_members(g, lat.subgroups[orbit[pos]].members(), gen);
        int j = lat.index_of(cb);
        if (j < 0)
          throw std::logic_error("conjugate of an enumerated subgroup is missing");
        if (lat.class_of[j] == -1) {
          lat.class_of[j] = cid;
          orbit.push_back(j);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    lat.classes.push_back(std::move(orbit));
  }
  lat.normal_flags.assign(s, false);
  for (int i = 0; i < s; ++i)
    lat.normal_flags[i] = lat.classes[lat.class_of[i]].size() == 1;
  return lat;
}

inline SubgroupSet meet(const SubgroupSet& h, const SubgroupSet& k) {
  if (!h.parent().same_object(k.parent()))
    throw ParentMismatch("meet: subgroups of different groups");
  return SubgroupSet::from_members(h.parent(), h.members() & k.members());
}

inline SubgroupSet join(const Group& g, const SubgroupSet& h, const SubgroupSet& k) {
  require_same_parent(g, h);
  require_same_parent(g, k);
  std::vector<int> gens = h.generators();
  gens.insert(gens.end(), k.generators().begin(), k.generators().end());
  return SubgroupSet::generated(g, gens);
}

// The partition of subgroup indices into conjugacy classes.
inline const std::vector<std::vector<int>>& conjugacy_classes_of_subgroups(
    const SubgroupLattice& lat) {
  return lat.classes;
}

// First enumerated subgroup of order p^a where p^a fully divides |G|.
inline const SubgroupSet& sylow_subgroup(const SubgroupLattice& lat, long long p) {
  long long n = lat.group.order();
  if (p < 2 || n % p != 0)
    throw NoSuchPrime("no Sylow subgroup: " + std::to_string(p) +
                      " does not divide " + std::to_string(n));
  long long pa = 1;
  while (n % p == 0) {
    pa *= p;
    n /= p;
  }
  for (const auto& h : lat.subgroups)
    if (h.order() == pa) return h;
  throw std::logic_error("complete lattice has no Sylow subgroup");
}

// Covering pairs (h, k): H < K with nothing strictly between.
inline std::vector<std::pair<int, int>> hasse_diagram(const SubgroupLattice& lat) {
  const int s = lat.size();
  std::vector<std::pair<int, int>> edges;
  std::vector<int> contained;
  for (int k = 0; k < s; ++k) {
    contained.clear();
    const Bitset& kb = lat.subgroups[k].members();
    int korder = lat.subgroups[k].order();
    for (int h = 0; h < s && lat.subgroups[h].order() < korder; ++h)
      if (lat.subgroups[h].members().is_subset_of(kb)) contained.push_back(h);
    for (std::size_t hi = 0; hi < contained.size(); ++hi) {
      int h = contained[hi];
      int horder = lat.subgroups[h].order();
      bool covering = true;
      for (std::size_t li = hi + 1; li < contained.size() && covering; ++li) {
        int l = contained[li];
        if (lat.subgroups[l].order() == horder) continue;
        if (lat.subgroups[h].members().is_subset_of(lat.subgroups[l].members()))
          covering = false;
      }
      if (covering) edges.emplace_back(h, k);
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

// A finite group is nilpotent iff each of its Sylow subgroups is normal.
inline bool is_nilpotent(const Group& g, const SubgroupLattice& lat) {
  long long n = g.order();
  for (auto [p, e] : factorize(n)) {
    Bitset sy = sylow_subgroup(lat, p).members();
    int idx = lat.index_of(sy);
    if (!lat.normal_flags[idx]) return false;
  }
  return true;
}

inline bool is_nilpotent(const Group& g) {
  if (g.order() == 1 || g.is_abelian()) return true;
  if (prime_power(g.order()).first != 0) return true;  // p-groups are nilpotent
  SubgroupLattice lat = all_subgroups(g);
  return is_nilpotent(g, lat);
}

}  // namespace cdkit
