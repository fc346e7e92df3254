#pragma once

#include <span>
#include <utility>
#include <vector>

#include "cdkit/bitset.hpp"
#include "cdkit/group.hpp"

namespace cdkit {

namespace detail {

// Right-multiplication closure of the identity under gens, i.e. <gens>.
inline Bitset close_generators(const Group& g, std::span<const int> gens) {
  Bitset members(g.order());
  members.set(0);
  std::vector<int> list{0};
  for (std::size_t i = 0; i < list.size(); ++i)
    for (int s : gens) {
      int y = g.mult(list[i], s);
      if (!members.test(y)) {
        members.set(y);
        list.push_back(y);
      }
    }
  return members;
}

// Greedy small generating set of a subgroup given by its membership set.
inline std::vector<int> small_generating_set(const Group& g, const Bitset& members) {
  std::vector<int> gens;
  Bitset sofar(g.order());
  sofar.set(0);
  for (int x : members.bits()) {
    if (sofar.test(x)) continue;
    gens.push_back(x);
    sofar = close_generators(g, gens);
  }
  return gens;
}

}  // namespace detail

// A subgroup of a fixed parent group, stored as a membership bit-vector with
// a cached small generating set. Immutable once built.
class SubgroupSet {
 public:
  SubgroupSet(Group parent, Bitset members, std::vector<int> gens)
      : parent_(std::move(parent)),
        members_(std::move(members)),
        gens_(std::move(gens)),
        order_(members_.count()) {}

  // Subgroup generated by the given element indices.
  static SubgroupSet generated(const Group& g, std::span<const int> gens) {
    Bitset m = detail::close_generators(g, gens);
    return SubgroupSet(g, std::move(m), std::vector<int>(gens.begin(), gens.end()));
  }

  static SubgroupSet generated(const Group& g, std::initializer_list<int> gens) {
    return generated(g, std::span<const int>(gens.begin(), gens.size()));
  }

  // Subgroup from a known-closed membership set; generators recomputed.
  static SubgroupSet from_members(const Group& g, Bitset members) {
    auto gens = detail::small_generating_set(g, members);
    return SubgroupSet(g, std::move(members), std::move(gens));
  }

  static SubgroupSet trivial(const Group& g) { return generated(g, std::span<const int>{}); }

  static SubgroupSet full(const Group& g) {
    Bitset m(g.order());
    for (int i = 0; i < g.order(); ++i) m.set(i);
    return SubgroupSet(g, std::move(m), g.generators());
  }

  const Group& parent() const { return parent_; }
  const Bitset& members() const { return members_; }
  const std::vector<int>& generators() const { return gens_; }
  int order() const { return order_; }
  bool contains(int x) const { return members_.test(x); }
  std::vector<int> elements() const { return members_.bits(); }

  bool operator==(const SubgroupSet& o) const {
    return parent_.same_object(o.parent_) && members_ == o.members_;
  }

 private:
  Group parent_;
  Bitset members_;
  std::vector<int> gens_;
  int order_;
};

inline void require_same_parent(const Group& g, const SubgroupSet& h) {
  if (!g.same_object(h.parent()))
    throw ParentMismatch("subgroup does not belong to this group");
}

// Centralizer of a set of elements: everything commuting with each of them.
inline SubgroupSet centralizer(const Group& g, std::span<const int> elems) {
  Bitset m(g.order());
  for (int x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (int s : elems)
      if (g.mult(x, s) != g.mult(s, x)) {
        ok = false;
        break;
      }
    if (ok) m.set(x);
  }
  return SubgroupSet::from_members(g, std::move(m));
}

// Centralizer of a subgroup; it is determined by any generating set.
inline SubgroupSet centralizer(const Group& g, const SubgroupSet& h) {
  require_same_parent(g, h);
  return centralizer(g, std::span<const int>(h.generators()));
}

inline SubgroupSet center(const Group& g) {
  return centralizer(g, std::span<const int>(g.generators()));
}

// g H g^-1 as a membership set.
inline Bitset conjugate_members(const Group& g, const Bitset& members, int by) {
  Bitset out(g.order());
  int binv = g.inverse(by);
  for (int h : members.bits()) out.set(g.mult(g.mult(by, h), binv));
  return out;
}

// True iff every generator of the parent normalizes h.
inline bool is_normal(const Group& g, const SubgroupSet& h) {
  require_same_parent(g, h);
  for (int gen : g.generators())
    if (conjugate_members(g, h.members(), gen) != h.members()) return false;
  return true;
}

}  // namespace cdkit
