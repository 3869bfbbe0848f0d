#pragma once

// Test-only helpers and brute-force oracles. Nothing here calls into the
// library code paths that the oracles are compared against.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "mvsr/mv_algebra.hpp"
#include "mvsr/rational.hpp"
#include "mvsr/semimodule.hpp"
#include "mvsr/semiring.hpp"

namespace mvsr::testing {

inline SemiringPtr vee_odot(std::size_t k) {
  return make_semiring(reduct_vee_odot(lukasiewicz_chain(k)));
}
inline SemiringPtr wedge_oplus(std::size_t k) {
  return make_semiring(reduct_wedge_oplus(lukasiewicz_chain(k)));
}
inline SemiringPtr boolean() { return make_semiring(boolean_semiring()); }

/// Submodule of the regular module on the given members.
inline FiniteSemimodule regular_sub(const SemiringPtr& s, std::vector<Elem> members) {
  return submodule_on(regular_module(s), members).module;
}

/// Element of Ł_k with value num/den, by direct search of the values.
inline Elem chain_elem(const MvAlgebra& a, long num, long den) {
  const auto e = a.find_value(Rational(num, den));
  if (!e) throw std::logic_error("value not in chain");
  return *e;
}

/// Eight semiring laws by plain loops.
inline bool brute_semiring(const FiniteSemiring& s) {
  const auto n = static_cast<Elem>(s.size());
  for (Elem a = 0; a < n; ++a) {
    if (s.add(a, s.zero()) != a || s.add(s.zero(), a) != a) return false;
    if (s.mul(a, s.one()) != a || s.mul(s.one(), a) != a) return false;
    if (s.mul(a, s.zero()) != s.zero() || s.mul(s.zero(), a) != s.zero()) return false;
    for (Elem b = 0; b < n; ++b) {
      if (s.add(a, b) != s.add(b, a)) return false;
      for (Elem c = 0; c < n; ++c) {
        if (s.add(s.add(a, b), c) != s.add(a, s.add(b, c))) return false;
        if (s.mul(s.mul(a, b), c) != s.mul(a, s.mul(b, c))) return false;
        if (s.mul(a, s.add(b, c)) != s.add(s.mul(a, b), s.mul(a, c))) return false;
        if (s.mul(s.add(a, b), c) != s.add(s.mul(a, c), s.mul(b, c))) return false;
      }
    }
  }
  return true;
}

inline bool brute_is_hom(const FiniteSemimodule& m, const FiniteSemimodule& n,
                         const std::vector<Elem>& f) {
  if (f[m.zero()] != n.zero()) return false;
  for (Elem x = 0; x < m.size(); ++x) {
    for (Elem y = 0; y < m.size(); ++y)
      if (f[m.add(x, y)] != n.add(f[x], f[y])) return false;
    for (Elem a = 0; a < m.scalars().size(); ++a)
      if (f[m.act(a, x)] != n.act(a, f[x])) return false;
  }
  return true;
}

/// Every map M -> N tried; only for |N|^|M| small.
inline std::vector<std::vector<Elem>> brute_homs(const FiniteSemimodule& m,
                                                 const FiniteSemimodule& n) {
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> f(m.size(), 0);
  for (;;) {
    if (brute_is_hom(m, n, f)) out.push_back(f);
    std::size_t i = 0;
    while (i < f.size() && ++f[i] == n.size()) f[i++] = 0;
    if (i == f.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

using IntMat = std::vector<std::vector<BigInt>>;

/// Cofactor expansion along the first row.
inline BigInt cofactor_det(const IntMat& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  BigInt total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    IntMat minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<BigInt> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    const BigInt term = m[0][c] * cofactor_det(minor);
    total += c % 2 == 0 ? term : BigInt(-term);
  }
  return total;
}

inline BigInt big_gcd(BigInt a, BigInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    BigInt t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline void k_subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                      std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    k_subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

/// Invariant factors as d_k / d_{k-1}, d_k the gcd of the k x k minors.
inline std::vector<BigInt> gcd_of_minors(const IntMat& m, std::size_t cols) {
  const std::size_t rows = m.size();
  std::vector<BigInt> out;
  BigInt prev = 1;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    k_subsets(rows, k, 0, cur, rs);
    k_subsets(cols, k, 0, cur, cs);
    BigInt g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        IntMat sub;
        for (std::size_t i : r) {
          std::vector<BigInt> row;
          for (std::size_t j : c) row.push_back(m[i][j]);
          sub.push_back(std::move(row));
        }
        g = big_gcd(g, cofactor_det(sub));
      }
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

}  // namespace mvsr::testing
