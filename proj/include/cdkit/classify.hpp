#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "cdkit/constructors.hpp"
#include "cdkit/measure.hpp"

namespace cdkit {

// Recognized structure of a group, with enough evidence to re-validate the
// claim (a generator, an involution, or a full isomorphism map).
struct StructureTag {
  enum class Kind {
    Cyclic,                // params {n}
    ElementaryAbelian,     // params {p, k}
    AbelianInvariants,     // params = invariant factors, ascending divisibility
    GeneralizedQuaternion, // params {2^n}
    ModularGroup,          // params {p, n}
    NonabelianPQ,          // params {p, q}, p < q
    Other
  };

  Kind kind = Kind::Other;
  std::vector<long long> params;
  std::vector<int> certificate;  // Cyclic: generator; GQ: the involution;
                                 // ModularGroup: isomorphism map; PQ: witnesses

  std::string to_string() const {
    auto with = [&](const char* name) {
      std::string s = name;
      s += "(";
      for (std::size_t i = 0; i < params.size(); ++i)
        s += (i ? "," : "") + std::to_string(params[i]);
      return s + ")";
    };
    switch (kind) {
      case Kind::Cyclic: return with("Cyclic");
      case Kind::ElementaryAbelian: return with("ElementaryAbelian");
      case Kind::AbelianInvariants: return with("AbelianInvariants");
      case Kind::GeneralizedQuaternion: return with("GeneralizedQuaternion");
      case Kind::ModularGroup: return with("ModularGroup");
      case Kind::NonabelianPQ: return with("NonabelianPQ");
      case Kind::Other: return "Other";
    }
    return "Other";
  }

  bool operator==(const StructureTag& o) const {
    return kind == o.kind && params == o.params;
  }
};

// Invariant factors of an abelian group, derived from its element-order
// counts: for each prime, the number of solutions of x^(p^k) = 1 determines
// the partition of the Sylow subgroup.
inline std::vector<long long> abelian_invariant_factors(const Group& g) {
  std::vector<std::vector<int>> partitions;  // per prime, parts descending
  std::vector<long long> primes;
  for (auto [p, a] : factorize(g.order())) {
    std::vector<long long> ssum{0};  // ssum[k] = log_p #{x : order(x) divides p^k}
    for (int k = 1; k <= a; ++k) {
      long long pk = ipow(p, k);
      long long cnt = 0;
      for (int x = 0; x < g.order(); ++x)
        if (pk % g.element_order(x) == 0) ++cnt;
      int lg = 0;
      while (cnt > 1) {
        cnt /= p;
        ++lg;
      }
      ssum.push_back(lg);
      if (lg == a) break;
    }
    std::vector<int> parts_ge;  // parts_ge[k] = number of parts >= k
    for (std::size_t k = 1; k < ssum.size(); ++k)
      parts_ge.push_back(static_cast<int>(ssum[k] - ssum[k - 1]));
    std::vector<int> partition;
    for (int i = 1; i <= (parts_ge.empty() ? 0 : parts_ge[0]); ++i) {
      int part = 0;
      for (std::size_t k = 0; k < parts_ge.size(); ++k)
        if (parts_ge[k] >= i) part = static_cast<int>(k) + 1;
      partition.push_back(part);
    }
    partitions.push_back(std::move(partition));
    primes.push_back(p);
  }

  std::size_t len = 0;
  for (const auto& part : partitions) len = std::max(len, part.size());
  std::vector<long long> factors;  // descending first, then reversed
  for (std::size_t j = 0; j < len; ++j) {
    long long d = 1;
    for (std::size_t pi = 0; pi < partitions.size(); ++pi)
      if (j < partitions[pi].size()) d *= ipow(primes[pi], partitions[pi][j]);
    factors.push_back(d);
  }
  std::reverse(factors.begin(), factors.end());
  if (factors.empty()) factors.push_back(1);
  return factors;
}

inline StructureTag recognize(const Group& g) {
  const long long n = g.order();
  StructureTag tag;

  for (int x = 0; x < n; ++x)
    if (g.element_order(x) == n) {
      tag.kind = StructureTag::Kind::Cyclic;
      tag.params = {n};
      tag.certificate = {x};
      return tag;
    }

  if (g.is_abelian()) {
    auto inv = abelian_invariant_factors(g);
    bool elementary = inv.size() >= 2 && is_prime(inv[0]);
    for (long long d : inv)
      if (d != inv[0]) elementary = false;
    if (elementary) {
      tag.kind = StructureTag::Kind::ElementaryAbelian;
      tag.params = {inv[0], static_cast<long long>(inv.size())};
    } else {
      tag.kind = StructureTag::Kind::AbelianInvariants;
      tag.params = inv;
    }
    return tag;
  }

  auto [p, k] = prime_power(n);
  if (p == 2 && k >= 3) {
    int involutions = 0, witness = -1;
    for (int x = 1; x < n; ++x)
      if (g.element_order(x) == 2) {
        ++involutions;
        witness = x;
      }
    if (involutions == 1) {
      // A 2-group with a unique involution is cyclic or generalized
      // quaternion; nonabelian leaves only the latter.
      tag.kind = StructureTag::Kind::GeneralizedQuaternion;
      tag.params = {n};
      tag.certificate = {witness};
      return tag;
    }
  }

  if (p >= 2 && k >= 3 && (p > 2 || k >= 4)) {
    if (exponent(g) == ipow(p, k - 1) && center(g).order() == ipow(p, k - 2)) {
      auto iso = is_isomorphic_map(g, modular_group(static_cast<int>(p), k));
      if (iso.result == IsoResult::Yes) {
        tag.kind = StructureTag::Kind::ModularGroup;
        tag.params = {p, k};
        tag.certificate = iso.map;
        return tag;
      }
    }
  }

  auto f = factorize(n);
  if (f.size() == 2 && f[0].second == 1 && f[1].second == 1) {
    tag.kind = StructureTag::Kind::NonabelianPQ;
    tag.params = {f[0].first, f[1].first};
    for (auto [q, e] : f)
      for (int x = 0; x < n; ++x)
        if (g.element_order(x) == q) {
          tag.certificate.push_back(x);
          break;
        }
    return tag;
  }

  return tag;  // Other
}

namespace detail {

inline bool cyclic_of_prime(const StructureTag& t) {
  return t.kind == StructureTag::Kind::Cyclic && is_prime(t.params[0]);
}

inline bool cyclic_prime_power(const StructureTag& t, int exp) {
  if (t.kind != StructureTag::Kind::Cyclic) return false;
  auto [p, k] = prime_power(t.params[0]);
  return p != 0 && k == exp;
}

inline bool cyclic_squarefree_pq(const StructureTag& t) {
  if (t.kind != StructureTag::Kind::Cyclic) return false;
  auto f = factorize(t.params[0]);
  return f.size() == 2 && f[0].second == 1 && f[1].second == 1;
}

inline bool quaternion8(const StructureTag& t) {
  return t.kind == StructureTag::Kind::GeneralizedQuaternion && t.params[0] == 8;
}

}  // namespace detail

// The delta classification: delta = 1..4 exactly for the named structures.
// Empty string when consistent, otherwise a description of the violation.
inline std::string delta_classification_violation(const StructureTag& tag,
                                                  long long delta) {
  using detail::cyclic_of_prime;
  using detail::cyclic_prime_power;
  using detail::cyclic_squarefree_pq;
  using detail::quaternion8;
  const bool in1 = cyclic_of_prime(tag) || quaternion8(tag);
  const bool in2 = cyclic_prime_power(tag, 2);
  const bool in3 = cyclic_squarefree_pq(tag) || cyclic_prime_power(tag, 3);
  const bool in4 = cyclic_prime_power(tag, 4) ||
                   (tag.kind == StructureTag::Kind::ElementaryAbelian &&
                    tag.params[0] == 2 && tag.params[1] == 2) ||
                   (tag.kind == StructureTag::Kind::ModularGroup &&
                    tag.params[0] == 3 && tag.params[1] == 3);
  const bool lists[4] = {in1, in2, in3, in4};
  for (int k = 1; k <= 4; ++k) {
    if ((delta == k) != lists[k - 1])
      return "delta = " + std::to_string(delta) + " inconsistent with structure " +
             tag.to_string() + " at class " + std::to_string(k);
  }
  return "";
}

// The v classification; the v = 3 clause applies only to non-nilpotent
// groups. Returns empty when consistent.
inline std::string v_classification_violation(const StructureTag& tag, long long v,
                                              bool nilpotent) {
  using detail::cyclic_of_prime;
  using detail::cyclic_prime_power;
  using detail::quaternion8;
  const bool in1 = cyclic_of_prime(tag) || quaternion8(tag);
  if ((v == 1) != in1)
    return "v = " + std::to_string(v) + " inconsistent with structure " +
           tag.to_string() + " at class 1";
  const bool in2 = cyclic_prime_power(tag, 2) ||
                   (tag.kind == StructureTag::Kind::ModularGroup &&
                    tag.params[0] > 2 && tag.params[1] == 3);
  if ((v == 2) != in2)
    return "v = " + std::to_string(v) + " inconsistent with structure " +
           tag.to_string() + " at class 2";
  if (!nilpotent) {
    const bool in3 = tag.kind == StructureTag::Kind::NonabelianPQ;
    if ((v == 3) != in3)
      return "v = " + std::to_string(v) + " inconsistent with structure " +
             tag.to_string() + " at class 3 (non-nilpotent)";
  }
  return "";
}

struct GroupVerdict {
  std::string label;
  int order = 1;
  long long delta = 0;
  long long v = 0;
  bool nilpotent = true;
  StructureTag tag;
  std::vector<CheckResult> checks;
};

struct VerificationReport {
  std::vector<GroupVerdict> groups;
  long long counterexamples = 0;
  std::vector<std::string> nilpotent_v3;  // informational: outside the theorem
};

namespace detail {

inline GroupVerdict basic_verdict(const Group& g, const SubgroupLattice& lat,
                                  const CDReport& rep) {
  GroupVerdict gv;
  gv.label = g.label();
  gv.order = g.order();
  gv.delta = rep.delta;
  gv.v = rep.v;
  gv.nilpotent = is_nilpotent(g, lat);
  gv.tag = recognize(g);
  return gv;
}

}  // namespace detail

inline VerificationReport verify_delta_classification(const std::vector<Group>& groups) {
  VerificationReport out;
  for (const auto& g : groups) {
    auto lat = all_subgroups(g);
    auto rep = cd_report(g, lat);
    GroupVerdict gv = detail::basic_verdict(g, lat, rep);
    std::string err = delta_classification_violation(gv.tag, gv.delta);
    gv.checks.push_back(err.empty() ? CheckResult::pass("delta_classification")
                                    : CheckResult::fail("delta_classification", err, {}));
    if (!err.empty()) ++out.counterexamples;
    out.groups.push_back(std::move(gv));
  }
  return out;
}

inline VerificationReport verify_v_classification(const std::vector<Group>& groups) {
  VerificationReport out;
  for (const auto& g : groups) {
    auto lat = all_subgroups(g);
    auto rep = cd_report(g, lat);
    GroupVerdict gv = detail::basic_verdict(g, lat, rep);
    std::string err = v_classification_violation(gv.tag, gv.v, gv.nilpotent);
    gv.checks.push_back(err.empty() ? CheckResult::pass("v_classification")
                                    : CheckResult::fail("v_classification", err, {}));
    if (!err.empty()) ++out.counterexamples;
    if (gv.nilpotent && gv.v == 3) out.nilpotent_v3.push_back(gv.label);
    out.groups.push_back(std::move(gv));
  }
  return out;
}

}  // namespace cdkit
