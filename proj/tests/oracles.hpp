#pragma once

// Reference computations that share no code with the library: integer
// matrices for the modular group and determinantal divisors for abelian
// invariants.

#include <array>
#include <cstdlib>
#include <numeric>
#include <vector>

#include "qm/amalgam.hpp"

namespace oracle {

using Mat2 = std::array<long long, 4>;  // row-major 2x2

inline Mat2 mul(const Mat2& x, const Mat2& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
          x[2] * y[1] + x[3] * y[3]};
}

inline constexpr Mat2 kIdentity{1, 0, 0, 1};
inline constexpr Mat2 kS{0, -1, 1, 0};  // order 4
inline constexpr Mat2 kU{0, -1, 1, 1};  // order 6, U^3 = -I = S^2

inline Mat2 power(const Mat2& m, int k) {
  Mat2 out = kIdentity;
  for (int i = 0; i < k; ++i) out = mul(out, m);
  return out;
}

/// Z6 *_{Z2} Z4 -> SL(2, Z): A:k -> U^k, B:k -> S^k. This is an isomorphism.
inline Mat2 sl2z_image(const qm::AWord& w) {
  Mat2 out = kIdentity;
  for (const auto& l : w) out = mul(out, power(l.side == qm::Side::A ? kU : kS, l.value));
  return out;
}

/// Z3 * Z2 -> PSL(2, Z) with the same matrices, compared up to sign.
inline Mat2 psl2z_image(const qm::AWord& w) { return sl2z_image(w); }

inline bool equal_up_to_sign(const Mat2& x, const Mat2& y) {
  return x == y || (x[0] == -y[0] && x[1] == -y[1] && x[2] == -y[2] && x[3] == -y[3]);
}

/// Determinant by cofactor expansion; fine for the tiny matrices used here.
inline long long det(const std::vector<std::vector<long long>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  long long total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<long long>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<long long> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    total += (c % 2 ? -1 : 1) * m[0][c] * det(minor);
  }
  return total;
}

/// Invariant factors of Z^rank / rowspan(rel) from determinantal divisors:
/// d_k = D_k / D_{k-1}, D_k the gcd of all k x k minors. Zero factors mark
/// free summands.
inline std::vector<long long> determinantal_invariants(const std::vector<std::vector<long long>>& rel, int rank) {
  const int rows = static_cast<int>(rel.size());
  std::vector<long long> divisors{1};  // D_0
  for (int k = 1; k <= std::min(rows, rank); ++k) {
    long long g = 0;
    std::vector<int> rs(k), cs(k);
    // Enumerate k-subsets of rows and columns.
    auto next = [](std::vector<int>& s, int n) {
      int i = static_cast<int>(s.size()) - 1;
      while (i >= 0 && s[i] == n - static_cast<int>(s.size()) + i) --i;
      if (i < 0) return false;
      ++s[i];
      for (int j = i + 1; j < static_cast<int>(s.size()); ++j) s[j] = s[j - 1] + 1;
      return true;
    };
    std::iota(rs.begin(), rs.end(), 0);
    do {
      std::iota(cs.begin(), cs.end(), 0);
      do {
        std::vector<std::vector<long long>> m(k, std::vector<long long>(k));
        for (int a = 0; a < k; ++a)
          for (int b = 0; b < k; ++b) m[a][b] = rel[rs[a]][cs[b]];
        g = std::gcd(g, std::llabs(det(m)));
      } while (next(cs, rank));
    } while (next(rs, rows));
    if (g == 0) break;
    divisors.push_back(g);
  }
  std::vector<long long> out;
  for (std::size_t k = 1; k < divisors.size(); ++k) out.push_back(divisors[k] / divisors[k - 1]);
  while (static_cast<int>(out.size()) < rank) out.push_back(0);
  return out;
}

}  // namespace oracle
