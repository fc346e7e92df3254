#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "cdkit/group.hpp"
#include "cdkit/numeric.hpp"

namespace cdkit {

namespace detail {

inline std::string join_ints(const std::vector<long long>& xs, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(xs[i]);
  }
  return s;
}

}  // namespace detail

inline Group cyclic(int n, int cap = kDefaultElementCap) {
  if (n < 1) throw InvalidParameters("cyclic: n must be >= 1");
  return detail::build_group(
      n, "C" + std::to_string(n), "cyclic(" + std::to_string(n) + ")",
      [n](int a, int b) { return (a + b) % n; }, cap);
}

// Direct product of cyclic groups Z_{ns[0]} x Z_{ns[1]} x ...; indices are
// mixed-radix little-endian with the identity tuple at 0.
inline Group abelian_from_invariants(const std::vector<long long>& ns,
                                     int cap = kDefaultElementCap) {
  long long order = 1;
  for (long long k : ns) {
    if (k < 1) throw InvalidParameters("abelian_from_invariants: moduli must be >= 1");
    order *= k;
    if (order > cap)
      throw CapExceeded("abelian group order exceeds element cap");
  }
  std::vector<long long> radix(ns.begin(), ns.end());
  auto fn = [radix](int a, int b) {
    int out = 0;
    long long place = 1;
    for (long long m : radix) {
      long long ca = (a / place) % m, cb = (b / place) % m;
      out += static_cast<int>((ca + cb) % m * place);
      a -= static_cast<int>(ca * place);
      b -= static_cast<int>(cb * place);
      place *= m;
    }
    return out;
  };
  std::string lbl;
  for (std::size_t i = 0; i < ns.size(); ++i)
    lbl += (i ? "x" : "") + std::string("C") + std::to_string(ns[i]);
  if (ns.empty()) lbl = "C1";
  return detail::build_group(static_cast<int>(order), lbl,
                             "abelian_from_invariants(" + detail::join_ints(ns, ",") + ")",
                             fn, cap);
}

// Dihedral group of order 2n: pairs (rotation, flip), index = i + n*s.
inline Group dihedral(int n, int cap = kDefaultElementCap) {
  if (n < 1) throw InvalidParameters("dihedral: n must be >= 1");
  auto fn = [n](int a, int b) {
    int i = a % n, s = a / n, j = b % n, t = b / n;
    int rot = s ? (i - j % n + n) % n : (i + j) % n;
    return rot + n * (s ^ t);
  };
  return detail::build_group(2 * n, "D" + std::to_string(n),
                             "dihedral(" + std::to_string(n) + ")", fn, cap);
}

// Dicyclic group of order 4m: a has order 2m, b^2 = a^m, b a b^-1 = a^-1.
// Element a^i b^j is index i + 2m*j. dicyclic(2^(n-2)) is the generalized
// quaternion group of order 2^n.
inline Group dicyclic(int m, int cap = kDefaultElementCap) {
  if (m < 2) throw InvalidParameters("dicyclic: m must be >= 2");
  const int c = 2 * m;
  auto fn = [m, c](int a, int b) {
    int i = a % c, j = a / c, i2 = b % c, j2 = b / c;
    if (j == 0) return (i + i2) % c + c * j2;
    if (j2 == 0) return (i - i2 + c) % c + c;
    return (i - i2 + m + c) % c;
  };
  int order = 4 * m;
  std::string lbl = (order & (order - 1)) == 0 ? "Q" + std::to_string(order)
                                               : "Dic" + std::to_string(m);
  return detail::build_group(order, lbl, "dicyclic(" + std::to_string(m) + ")", fn, cap);
}

inline Group symmetric(int n, int cap = kDefaultElementCap) {
  if (n < 1) throw InvalidParameters("symmetric: n must be >= 1");
  std::vector<Permutation> gens;
  if (n >= 2) {
    std::vector<int> tr(n), cyc(n);
    for (int i = 0; i < n; ++i) {
      tr[i] = i;
      cyc[i] = (i + 1) % n;
    }
    tr[0] = 1;
    tr[1] = 0;
    gens.emplace_back(std::move(tr));
    gens.emplace_back(std::move(cyc));
  }
  return group_from_generators(gens, cap, "S" + std::to_string(n),
                               "symmetric(" + std::to_string(n) + ")");
}

inline Group alternating4(int cap = kDefaultElementCap) {
  std::vector<Permutation> gens{Permutation({1, 2, 0, 3}), Permutation({0, 2, 3, 1})};
  return group_from_generators(gens, cap, "A4", "alternating(4)");
}

// Upper unitriangular 3x3 matrices over F_p, as triples (x, y, z) with
// index x + p*y + p^2*z. Nonabelian of order p^3; exponent p when p is odd.
inline Group heisenberg(int p, int cap = kDefaultElementCap) {
  if (!is_prime(p)) throw InvalidParameters("heisenberg: p must be prime");
  long long order = static_cast<long long>(p) * p * p;
  if (order > cap) throw CapExceeded("heisenberg group order exceeds element cap");
  auto fn = [p](int a, int b) {
    int x = a % p, y = (a / p) % p, z = a / (p * p);
    int x2 = b % p, y2 = (b / p) % p, z2 = b / (p * p);
    int x3 = (x + x2) % p, y3 = (y + y2) % p, z3 = (z + z2 + x * y2) % p;
    return x3 + p * y3 + p * p * z3;
  };
  return detail::build_group(static_cast<int>(order), "Heis" + std::to_string(p),
                             "heisenberg(" + std::to_string(p) + ")", fn, cap);
}

// Split metacyclic group Z_m x| Z_k with the generator of Z_k acting as
// multiplication by t: (i, j)(i', j') = (i + i'*t^j mod m, j + j' mod k).
// Element a^i b^j is index i + m*j. Requires t^k = 1 mod m.
inline Group metacyclic(int m, int k, long long t, int cap = kDefaultElementCap,
                        const std::string& label_override = "",
                        const std::string& construction_override = "") {
  if (m < 1 || k < 1) throw InvalidParameters("metacyclic: m and k must be >= 1");
  t = ((t % m) + m) % m;
  if (m > 1 && mod_pow(t, k, m) != 1)
    throw InvalidParameters("metacyclic: t^k != 1 mod m (t=" + std::to_string(t) +
                            ", k=" + std::to_string(k) + ", m=" + std::to_string(m) + ")");
  long long order = static_cast<long long>(m) * k;
  if (order > cap) throw CapExceeded("metacyclic group order exceeds element cap");
  std::vector<int> tpow(k);
  tpow[0] = m == 1 ? 0 : 1;
  for (int j = 1; j < k; ++j) tpow[j] = static_cast<int>(tpow[j - 1] * t % m);
  auto fn = [m, k, tpow](int a, int b) {
    int i = a % m, j = a / m, i2 = b % m, j2 = b / m;
    int i3 = static_cast<int>((i + static_cast<long long>(i2) * tpow[j]) % m);
    return i3 + m * ((j + j2) % k);
  };
  std::string cons = construction_override.empty()
                         ? "metacyclic(" + std::to_string(m) + "," + std::to_string(k) +
                               "," + std::to_string(t) + ")"
                         : construction_override;
  std::string lbl = label_override.empty() ? cons : label_override;
  return detail::build_group(static_cast<int>(order), lbl, cons, fn, cap);
}

// Modular group of order p^n: <a, b | a^(p^(n-1)) = b^p = 1,
// b^-1 a b = a^(p^(n-2)+1)>. Requires p prime and n >= 3, with n >= 4 when
// p = 2 (the p = 2, n = 3 parameters would give the dihedral group).
inline Group modular_group(int p, int n, int cap = kDefaultElementCap) {
  if (!is_prime(p)) throw InvalidParameters("modular_group: p must be prime");
  if (n < 3) throw InvalidParameters("modular_group: n must be >= 3");
  if (p == 2 && n < 4) throw InvalidParameters("modular_group: p = 2 requires n >= 4");
  long long order = ipow(p, n);
  if (order > cap) throw CapExceeded("modular group order exceeds element cap");
  long long m = ipow(p, n - 1);
  long long t = ipow(p, n - 2) + 1;
  return metacyclic(static_cast<int>(m), p, t, cap, "M" + std::to_string(order),
                    "modular_group(" + std::to_string(p) + "," + std::to_string(n) + ")");
}

inline Group direct_product(const Group& g, const Group& h, int cap = kDefaultElementCap) {
  long long order = static_cast<long long>(g.order()) * h.order();
  if (order > cap) throw CapExceeded("direct product order exceeds element cap");
  const int ng = g.order();
  auto fn = [g, h, ng](int a, int b) {
    int ga = a % ng, ha = a / ng, gb = b % ng, hb = b / ng;
    return g.mult(ga, gb) + ng * h.mult(ha, hb);
  };
  return detail::build_group(static_cast<int>(order), g.label() + "x" + h.label(),
                             "direct_product(" + g.label() + "," + h.label() + ")", fn, cap);
}

}  // namespace cdkit
