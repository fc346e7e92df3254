#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cdkit/iso.hpp"
#include "cdkit/lattice.hpp"

namespace cdkit {

// Chermak-Delgado measures are exact integers; |H||C_G(H)| <= |G|^2 always
// fits comfortably below 2^64 at the supported group sizes.
using Measure = unsigned long long;

inline constexpr long long kModularTripleBudget = 1'000'000;
inline constexpr int kCharacteristicCheckBound = 64;

// m_G(H) = |H| * |C_G(H)|.
inline Measure measure(const Group& g, const SubgroupSet& h) {
  require_same_parent(g, h);
  return static_cast<Measure>(h.order()) * centralizer(g, h).order();
}

namespace detail {

// Measures and centralizers of every lattice member, computed from cached
// per-element centralizer bitsets. centralizer_index[i] is the lattice index
// of C_G(H_i); it always exists because the lattice is complete.
struct MeasuredLattice {
  std::vector<Measure> measures;
  std::vector<Bitset> centralizers;
  std::vector<int> centralizer_index;
  Bitset center;
};

class ElementCentralizers {
 public:
  explicit ElementCentralizers(const Group& g) : g_(g), cache_(g.order()) {}

  const Bitset& of(int x) {
    Bitset& b = cache_[x];
    if (b.size() == 0) {
      b = Bitset(g_.order());
      for (int y = 0; y < g_.order(); ++y)
        if (g_.mult(x, y) == g_.mult(y, x)) b.set(y);
    }
    return b;
  }

  Bitset of_generators(const std::vector<int>& gens) {
    Bitset out(g_.order());
    if (gens.empty()) {
      for (int y = 0; y < g_.order(); ++y) out.set(y);
      return out;
    }
    out = of(gens[0]);
    for (std::size_t i = 1; i < gens.size(); ++i) out = out & of(gens[i]);
    return out;
  }

 private:
  const Group& g_;
  std::vector<Bitset> cache_;
};

inline MeasuredLattice measure_all(const Group& g, const SubgroupLattice& lat) {
  MeasuredLattice out;
  ElementCentralizers ec(g);
  const int s = lat.size();
  out.measures.resize(s);
  out.centralizers.resize(s);
  out.centralizer_index.resize(s);
  for (int i = 0; i < s; ++i) {
    Bitset c = ec.of_generators(lat.subgroups[i].generators());
    out.measures[i] =
        static_cast<Measure>(lat.subgroups[i].order()) * c.count();
    int ci = lat.index_of(c);
    if (ci < 0) throw std::logic_error("centralizer missing from complete lattice");
    out.centralizer_index[i] = ci;
    out.centralizers[i] = std::move(c);
  }
  out.center = ec.of_generators(g.generators());
  return out;
}

}  // namespace detail

enum class TriState { False, True, Skipped };

// Everything the CD lattice determines for one group: the maximum measure,
// its attaining subgroups, the measure image, the counts of subgroups and
// of conjugacy classes outside the CD lattice, and the structural flags of
// the CD lattice and its minimal member.
struct CDReport {
  std::string label;
  int order = 1;
  Measure m_star = 1;
  std::vector<int> cd_members;   // ascending lattice indices
  std::vector<Measure> image;    // sorted distinct measures
  long long delta = 0;
  long long v = 0;
  int min_member = 0;
  bool min_unique = true;
  bool is_sublattice = true;
  bool is_modular = true;
  bool modular_check_complete = true;
  bool is_self_dual = true;
  bool min_abelian = true;
  bool min_normal = true;
  bool min_contains_center = true;
  TriState min_characteristic = TriState::Skipped;
  std::vector<Measure> measures;  // per lattice index
};

namespace detail {

inline bool subgroup_is_abelian(const Group& g, const SubgroupSet& h) {
  const auto& gens = h.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (g.mult(gens[i], gens[j]) != g.mult(gens[j], gens[i])) return false;
  return true;
}

inline TriState check_min_characteristic(const Group& g, const Bitset& min_members) {
  if (g.order() > kCharacteristicCheckBound) return TriState::Skipped;
  // A bijection always fixes the whole group and the trivial subgroup.
  if (min_members.count() == g.order() || min_members.count() == 1)
    return TriState::True;
  bool preserved = true;
  auto status = for_each_automorphism(g, [&](const std::vector<int>& phi) {
    Bitset image(g.order());
    for (int x : min_members.bits()) image.set(phi[x]);
    if (image != min_members) {
      preserved = false;
      return false;
    }
    return true;
  });
  if (status == SearchStatus::BudgetExceeded) return TriState::Skipped;
  return preserved ? TriState::True : TriState::False;
}

}  // namespace detail

inline CDReport cd_report(const Group& g, const SubgroupLattice& lat) {
  auto ml = detail::measure_all(g, lat);
  const int s = lat.size();

  CDReport rep;
  rep.label = g.label();
  rep.order = g.order();
  rep.measures = ml.measures;
  rep.m_star = *std::max_element(ml.measures.begin(), ml.measures.end());

  std::vector<char> in_cd(s, 0);
  for (int i = 0; i < s; ++i)
    if (ml.measures[i] == rep.m_star) {
      in_cd[i] = 1;
      rep.cd_members.push_back(i);
    }

  rep.image = ml.measures;
  std::sort(rep.image.begin(), rep.image.end());
  rep.image.erase(std::unique(rep.image.begin(), rep.image.end()), rep.image.end());

  rep.delta = s - static_cast<long long>(rep.cd_members.size());

  // Conjugate subgroups have equal measure, so every class lies entirely
  // inside or outside the CD lattice; anything else is an implementation bug.
  rep.v = 0;
  for (const auto& cls : lat.classes) {
    int inside = 0;
    for (int i : cls) inside += in_cd[i];
    if (inside != 0 && inside != static_cast<int>(cls.size()))
      throw std::logic_error("conjugacy class splits across the CD boundary");
    if (inside == 0) ++rep.v;
  }

  // Minimal member: the least-order CD member; uniqueness means it is
  // contained in every other member.
  rep.min_member = rep.cd_members[0];
  for (int i : rep.cd_members)
    if (lat.subgroups[i].order() < lat.subgroups[rep.min_member].order())
      rep.min_member = i;
  const Bitset& min_bits = lat.subgroups[rep.min_member].members();
  for (int i : rep.cd_members)
    if (!min_bits.is_subset_of(lat.subgroups[i].members())) rep.min_unique = false;

  // Closure of the CD set under meet and join.
  const auto& cd = rep.cd_members;
  const int m = static_cast<int>(cd.size());
  std::vector<int> join_table(static_cast<std::size_t>(m) * m),
      meet_table(static_cast<std::size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = a; b < m; ++b) {
      Bitset mt = lat.subgroups[cd[a]].members() & lat.subgroups[cd[b]].members();
      int mi = lat.index_of(mt);
      std::vector<int> gens = lat.subgroups[cd[a]].generators();
      const auto& gb = lat.subgroups[cd[b]].generators();
      gens.insert(gens.end(), gb.begin(), gb.end());
      int ji = lat.index_of(detail::close_generators(g, gens));
      if (mi < 0 || ji < 0) throw std::logic_error("meet/join missing from lattice");
      if (!in_cd[mi] || !in_cd[ji]) rep.is_sublattice = false;
      meet_table[static_cast<std::size_t>(a) * m + b] = mi;
      meet_table[static_cast<std::size_t>(b) * m + a] = mi;
      join_table[static_cast<std::size_t>(a) * m + b] = ji;
      join_table[static_cast<std::size_t>(b) * m + a] = ji;
    }

  // Modular law x <= z  =>  x v (y ^ z) = (x v y) ^ z over CD triples,
  // evaluated up to a fixed triple budget.
  {
    long long triples = 0;
    std::vector<int> pos_in_cd(s, -1);
    for (int a = 0; a < m; ++a) pos_in_cd[cd[a]] = a;
    for (int xa = 0; xa < m && rep.modular_check_complete; ++xa)
      for (int za = 0; za < m && rep.modular_check_complete; ++za) {
        if (!lat.subgroups[cd[xa]].members().is_subset_of(lat.subgroups[cd[za]].members()))
          continue;
        for (int ya = 0; ya < m; ++ya) {
          if (++triples > kModularTripleBudget) {
            rep.modular_check_complete = false;
            break;
          }
          int yz = meet_table[static_cast<std::size_t>(ya) * m + za];
          int xy = join_table[static_cast<std::size_t>(xa) * m + ya];
          if (pos_in_cd[yz] < 0 || pos_in_cd[xy] < 0) continue;  // only when not closed
          int lhs = join_table[static_cast<std::size_t>(xa) * m + pos_in_cd[yz]];
          int rhs = meet_table[static_cast<std::size_t>(pos_in_cd[xy]) * m + za];
          if (lhs != rhs) {
            rep.is_modular = false;
            break;
          }
        }
      }
  }

  // Self-duality: H -> C_G(H) maps CD onto CD as an order-reversing involution.
  for (int a = 0; a < m; ++a) {
    int ci = ml.centralizer_index[cd[a]];
    if (!in_cd[ci] || ml.centralizer_index[ci] != cd[a]) rep.is_self_dual = false;
  }
  for (int a = 0; a < m && rep.is_self_dual; ++a)
    for (int b = 0; b < m; ++b) {
      if (!lat.subgroups[cd[a]].members().is_subset_of(lat.subgroups[cd[b]].members()))
        continue;
      int ca = ml.centralizer_index[cd[a]], cb = ml.centralizer_index[cd[b]];
      if (!lat.subgroups[cb].members().is_subset_of(lat.subgroups[ca].members())) {
        rep.is_self_dual = false;
        break;
      }
    }

  rep.min_abelian = detail::subgroup_is_abelian(g, lat.subgroups[rep.min_member]);
  rep.min_normal = lat.normal_flags[rep.min_member];
  rep.min_contains_center = ml.center.is_subset_of(min_bits);
  rep.min_characteristic = detail::check_min_characteristic(g, min_bits);
  return rep;
}

// Outcome of one structural check: passed, or a counterexample witness given
// by lattice indices plus a short description.
struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
  std::vector<int> witness_subgroups;

  static CheckResult pass(std::string name) { return {std::move(name), true, "", {}}; }
  static CheckResult fail(std::string name, std::string detail, std::vector<int> witness) {
    return {std::move(name), false, std::move(detail), std::move(witness)};
  }
};

// For every subgroup H: m(H) <= m(C(H)); equal measures force C(C(H)) = H;
// and for CD members, C(H) is again a CD member with C(C(H)) = H.
inline CheckResult check_centralizer_duality(const Group& g, const SubgroupLattice& lat) {
  const char* name = "centralizer_duality";
  auto ml = detail::measure_all(g, lat);
  Measure m_star = *std::max_element(ml.measures.begin(), ml.measures.end());
  for (int i = 0; i < lat.size(); ++i) {
    int ci = ml.centralizer_index[i];
    if (ml.measures[i] > ml.measures[ci])
      return CheckResult::fail(name, "m(H) > m(C(H)) at subgroup " + std::to_string(i),
                               {i, ci});
    if (ml.measures[i] == ml.measures[ci] && ml.centralizer_index[ci] != i)
      return CheckResult::fail(
          name, "equal measures but C(C(H)) != H at subgroup " + std::to_string(i),
          {i, ci});
    if (ml.measures[i] == m_star) {
      if (ml.measures[ci] != m_star)
        return CheckResult::fail(name, "C(H) of a CD member is not in CD", {i, ci});
      if (ml.centralizer_index[ci] != i)
        return CheckResult::fail(name, "C(C(H)) != H for CD member", {i, ci});
    }
  }
  return CheckResult::pass(name);
}

// If every measure divides |G| the group must be trivial; if |G| divides
// every measure the group must be nilpotent; and CD(G) = L(G) only for the
// trivial group.
inline CheckResult check_measure_divisibility(const Group& g, const SubgroupLattice& lat) {
  const char* name = "measure_divisibility";
  auto ml = detail::measure_all(g, lat);
  const Measure n = static_cast<Measure>(g.order());

  bool all_divide_order = true;
  bool order_divides_all = true;
  for (auto m : ml.measures) {
    if (n % m != 0) all_divide_order = false;
    if (m % n != 0) order_divides_all = false;
  }
  if (all_divide_order && g.order() != 1)
    return CheckResult::fail(name, "all measures divide |G| but G is nontrivial", {});
  if (order_divides_all && !is_nilpotent(g, lat))
    return CheckResult::fail(name, "|G| divides all measures but G is not nilpotent", {});

  Measure m_star = *std::max_element(ml.measures.begin(), ml.measures.end());
  bool cd_is_everything = true;
  for (auto m : ml.measures)
    if (m != m_star) {
      cd_is_everything = false;
      break;
    }
  if (cd_is_everything && g.order() != 1)
    return CheckResult::fail(name, "CD(G) equals the full lattice for nontrivial G", {});
  return CheckResult::pass(name);
}

// A nontrivial group never has an image of consecutive integers.
inline CheckResult check_consecutive_image(const Group& g, const SubgroupLattice& lat) {
  const char* name = "consecutive_image";
  auto ml = detail::measure_all(g, lat);
  std::vector<Measure> image = ml.measures;
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  bool consecutive = image.back() - image.front() + 1 == image.size();
  if (consecutive && g.order() != 1)
    return CheckResult::fail(name, "Im(m_G) is consecutive for a nontrivial group", {});
  return CheckResult::pass(name);
}

// Three conditions that hold or fail together: measures divide along
// subgroup chains; m(H) = m(H n Z(G)) for every H; and the CD lattice is
// exactly the subgroups above the center.
inline CheckResult check_center_equivalences(const Group& g, const SubgroupLattice& lat) {
  const char* name = "center_equivalences";
  auto ml = detail::measure_all(g, lat);
  detail::ElementCentralizers ec(g);
  const int s = lat.size();

  bool chain_divides = true;
  for (int i = 0; i < s && chain_divides; ++i)
    for (int j = 0; j < s; ++j) {
      if (i == j) continue;
      if (!lat.subgroups[i].members().is_subset_of(lat.subgroups[j].members())) continue;
      if (ml.measures[j] % ml.measures[i] != 0) {
        chain_divides = false;
        break;
      }
    }

  bool center_slice = true;
  for (int i = 0; i < s && center_slice; ++i) {
    Bitset hz = lat.subgroups[i].members() & ml.center;
    auto gens = detail::small_generating_set(g, hz);
    Measure mz = static_cast<Measure>(hz.count()) * ec.of_generators(gens).count();
    if (mz != ml.measures[i]) center_slice = false;
  }

  Measure m_star = *std::max_element(ml.measures.begin(), ml.measures.end());
  bool cd_above_center = true;
  for (int i = 0; i < s && cd_above_center; ++i) {
    bool in_cd = ml.measures[i] == m_star;
    bool above = ml.center.is_subset_of(lat.subgroups[i].members());
    if (in_cd != above) cd_above_center = false;
  }

  if (chain_divides != center_slice || center_slice != cd_above_center)
    return CheckResult::fail(
        name,
        "equivalent conditions disagree: chain_divides=" + std::to_string(chain_divides) +
            " center_slice=" + std::to_string(center_slice) +
            " cd_above_center=" + std::to_string(cd_above_center),
        {});
  return CheckResult::pass(name);
}

// |Im(m_G)| >= 1 + sum_p n_p where |Z(P)| = p^(n_p) over one Sylow subgroup
// per prime. All Sylow p-subgroups are conjugate, so their center orders are
// cross-checked for agreement.
inline CheckResult check_image_lower_bound(const Group& g, const SubgroupLattice& lat) {
  const char* name = "image_lower_bound";
  auto ml = detail::measure_all(g, lat);
  std::vector<Measure> image = ml.measures;
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());

  long long bound = 1;
  for (auto [p, e] : factorize(g.order())) {
    long long pa = ipow(p, e);
    long long zsize = -1;
    for (int i = 0; i < lat.size(); ++i) {
      if (lat.subgroups[i].order() != pa) continue;
      Bitset zp = lat.subgroups[i].members() & ml.centralizers[i];
      long long z = zp.count();
      if (zsize == -1)
        zsize = z;
      else if (zsize != z)
        return CheckResult::fail(name, "conjugate Sylow subgroups report different |Z(P)|",
                                 {i});
    }
    int np = 0;
    while (zsize > 1) {
      zsize /= p;
      ++np;
    }
    bound += np;
  }
  if (static_cast<long long>(image.size()) < bound)
    return CheckResult::fail(name,
                             "|Im(m_G)| = " + std::to_string(image.size()) +
                                 " below bound " + std::to_string(bound),
                             {});
  return CheckResult::pass(name);
}

}  // namespace cdkit
