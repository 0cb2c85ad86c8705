#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "flipeq/exact_int.hpp"

namespace flipeq {

// Counts of ordered rooted binary trees: C_0 = 1,
// C_n = sum_{k=0}^{n-1} C_{n-1-k} C_k.
class catalan_table {
 public:
  explicit catalan_table(int nmax) {
    if (nmax < 0) throw usage_error("catalan_table: negative nmax");
    c_.reserve(nmax + 1);
    c_.push_back(1);
    for (int n = 1; n <= nmax; ++n) {
      ExactInt s = 0;
      // symmetric fold of the convolution: pair k with n-1-k
      for (int k = 0; 2 * k < n - 1; ++k) s += c_[k] * c_[n - 1 - k];
      s *= 2;
      if ((n - 1) % 2 == 0) s += c_[(n - 1) / 2] * c_[(n - 1) / 2];
      c_.push_back(std::move(s));
    }
  }

  int nmax() const { return int(c_.size()) - 1; }

  const ExactInt& at(int n) const {
    if (n < 0 || n > nmax()) throw usage_error("catalan_table: index out of range");
    return c_[n];
  }

 private:
  std::vector<ExactInt> c_;
};

inline ExactInt catalan(int n) {
  if (n < 0) throw usage_error("catalan: negative n");
  return catalan_table(n).at(n);
}

// Counts of flip-equivalence classes of n-node trees (root labeled):
// B_0 = B_1 = 1, then
//   B_{2n}   = (1/2) sum_{k=0}^{2n-1} B_{2n-k-1} B_k
//   B_{2n+1} = (1/2) ( sum_{k=0}^{2n} B_{2n-k} B_k + B_n )
class wedderburn_table {
 public:
  explicit wedderburn_table(int nmax) {
    if (nmax < 0) throw usage_error("wedderburn_table: negative nmax");
    b_.reserve(nmax + 1);
    for (int n = 0; n <= nmax; ++n) {
      if (n <= 1) {
        b_.push_back(1);
        continue;
      }
      ExactInt s = 0;
      for (int k = 0; k <= n - 1; ++k) s += b_[n - 1 - k] * b_[k];
      if (n % 2 == 1) s += b_[(n - 1) / 2];
      b_.push_back(halve_exact(s, "wedderburn B_" + std::to_string(n)));
    }
  }

  int nmax() const { return int(b_.size()) - 1; }

  const ExactInt& at(int n) const {
    if (n < 0 || n > nmax()) throw usage_error("wedderburn_table: index out of range");
    return b_[n];
  }

 private:
  std::vector<ExactInt> b_;
};

inline ExactInt wedderburn(int n) {
  if (n < 0) throw usage_error("wedderburn: negative n");
  return wedderburn_table(n).at(n);
}

// Inner-summation strategy for the K_{n,l} table. `bounded` clips the index
// ranges to the region where both factors can be nonzero; `plain` runs the
// full ranges and relies on out-of-region reads being zero. Both must agree
// cell for cell.
enum class k2_strategy { bounded, plain };

// K_{n,l}: number of flip-equivalence classes of n-node trees whose class
// has cardinality 2^l (l = number of non-isomorphic sibling pairs).
//
// Base cases take precedence over the recurrence:
//   K_{n,0} = 1 iff n = 2^r - 1 (r >= 0), else 0
//   K_{s,t} = 0 for t >= s > 0
//   K_{s,s-1} = 1 for s > 1
// All three recursive cases share one convolution
//   T(N,L) = sum_{k=0}^{N-1} sum_{v=0}^{L-1} K_{k,v} K_{N-1-k,L-1-v}
// with N even: K = T/2; N odd, L even: K = K_{n,l} + T/2;
// N odd, L odd: K = (T - K_{n,l})/2, where n = N/2, l = L/2 (floor).
class k2_table {
 public:
  explicit k2_table(int nmax, k2_strategy strategy = k2_strategy::bounded)
      : strategy_(strategy) {
    if (nmax < 0) throw usage_error("k2_table: negative nmax");
    rows_.reserve(nmax + 1);
    for (int n = 0; n <= nmax; ++n) {
      rows_.emplace_back(n + 1);
      for (int l = 0; l <= n; ++l) rows_[n][l] = compute(n, l);
    }
  }

  int nmax() const { return int(rows_.size()) - 1; }

  // Out-of-region indices read as 0 (the recurrences probe them freely).
  ExactInt at(long long n, long long l) const {
    if (n < 0 || l < 0 || l > n) return 0;
    if (n > nmax()) throw usage_error("k2_table: n beyond computed range");
    return rows_[size_t(n)][size_t(l)];
  }

 private:
  k2_strategy strategy_;
  std::vector<std::vector<ExactInt>> rows_;

  ExactInt convolution(int N, int L) const {
    ExactInt t = 0;
    for (int k = 0; k <= N - 1; ++k) {
      int vlo = 0, vhi = L - 1;
      if (strategy_ == k2_strategy::bounded) {
        vlo = std::max(0, (L - 1) - (N - 1 - k));
        vhi = std::min(L - 1, k);
      }
      for (int v = vlo; v <= vhi; ++v) t += at(k, v) * at(N - 1 - k, L - 1 - v);
    }
    return t;
  }

  ExactInt compute(int n, int l) const {
    if (l == 0) return is_pow2_minus_1(n) ? 1 : 0;
    if (l >= n && n > 0) return 0;
    if (l == n - 1 && n > 1) return 1;
    const std::string where = "K_{" + std::to_string(n) + "," + std::to_string(l) + "}";
    ExactInt t = convolution(n, l);
    if (n % 2 == 0) return halve_exact(t, where);
    if (l % 2 == 0) return at(n / 2, l / 2) + halve_exact(t, where);
    return halve_exact(t - at(n / 2, l / 2), where);
  }
};

inline ExactInt k2(long long n, long long l) {
  if (n < 0 || l < 0 || l > n) return 0;
  return k2_table(int(n)).at(n, l);
}

// B_{n,k}: 2-colored flip-equivalence classes with n nodes, k of them black.
//
// Bases: B_{0,0} = B_{1,0} = B_{1,1} = 1; B_{n,0} = B_n for n > 1;
// zero for k < 0 or k > n. The three recursive cases (root black / root
// white) share the convolution
//   T(N,K) = sum_{r=0}^{1} sum_{l=0}^{N-1} sum_{m} B_{l,m} B_{N-1-l,K-r-m}
// with N even: B = T/2; N odd: B = (T + B_{n,floor(K/2)})/2.
class bcolor_table {
 public:
  explicit bcolor_table(int nmax) : wedderburn_(nmax < 0 ? 0 : nmax) {
    if (nmax < 0) throw usage_error("bcolor_table: negative nmax");
    rows_.reserve(nmax + 1);
    for (int n = 0; n <= nmax; ++n) {
      rows_.emplace_back(n + 1);
      for (int k = 0; k <= n; ++k) rows_[n][k] = compute(n, k);
    }
  }

  int nmax() const { return int(rows_.size()) - 1; }

  ExactInt at(long long n, long long k) const {
    if (n < 0 || k < 0 || k > n) return 0;
    if (n > nmax()) throw usage_error("bcolor_table: n beyond computed range");
    return rows_[size_t(n)][size_t(k)];
  }

 private:
  wedderburn_table wedderburn_;
  std::vector<std::vector<ExactInt>> rows_;

  ExactInt convolution(int N, int K) const {
    ExactInt t = 0;
    for (int r = 0; r <= 1; ++r) {
      if (K - r < 0) continue;
      for (int l = 0; l <= N - 1; ++l) {
        const int mlo = std::max(0, (K - r) - (N - 1 - l));
        const int mhi = std::min(K - r, l);
        for (int m = mlo; m <= mhi; ++m) t += at(l, m) * at(N - 1 - l, K - r - m);
      }
    }
    return t;
  }

  ExactInt compute(int n, int k) const {
    if (n == 0) return k == 0 ? 1 : 0;
    if (n == 1) return k <= 1 ? 1 : 0;
    if (k == 0) return wedderburn_.at(n);
    const std::string where = "B_{" + std::to_string(n) + "," + std::to_string(k) + "}";
    ExactInt t = convolution(n, k);
    if (n % 2 == 0) return halve_exact(t, where);
    return halve_exact(t + at(n / 2, k / 2), where);
  }
};

inline ExactInt bcolor(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  return bcolor_table(int(n)).at(n, k);
}

// K_{n,l,c}: 2-colored flip-equivalence classes with n nodes, c black nodes,
// class cardinality 2^l. Unified recurrence over parities (p,q,r) of
// (n,l,c):
//   K_{2n+p,2l+q,2c+r} = p (-1/2)^q K_{n,l,c} + T/2
//   T = sum_{d=0}^{1} sum_{k=0}^{N-1} sum_{v=0}^{L-1} sum_{m=0}^{C-d}
//         K_{k,v,m} K_{N-1-k,L-1-v,C-d-m}        (d-term absent when C < d)
// Base cases take precedence, applied in order:
//   K_{0,0,0} = 1
//   0 when l >= n > 0 (l < 0, c < 0, c > n are out of region)
//   binom(n, c) when l = n - 1
//   1 when n = 2^r - 1 (r >= 1), l = 0, 0 <= c <= n; else 0 when l = 0
class k3_table {
 public:
  explicit k3_table(int nmax) {
    if (nmax < 0) throw usage_error("k3_table: negative nmax");
    rows_.reserve(nmax + 1);
    for (int n = 0; n <= nmax; ++n) {
      rows_.emplace_back(size_t(n + 1), std::vector<ExactInt>(size_t(n + 1)));
      for (int l = 0; l <= n; ++l)
        for (int c = 0; c <= n; ++c) rows_[n][l][c] = compute(n, l, c);
    }
  }

  int nmax() const { return int(rows_.size()) - 1; }

  ExactInt at(long long n, long long l, long long c) const {
    if (n < 0 || l < 0 || c < 0 || l > n || c > n) return 0;
    if (n > nmax()) throw usage_error("k3_table: n beyond computed range");
    return rows_[size_t(n)][size_t(l)][size_t(c)];
  }

 private:
  std::vector<std::vector<std::vector<ExactInt>>> rows_;

  ExactInt convolution(int N, int L, int C) const {
    ExactInt t = 0;
    for (int d = 0; d <= 1; ++d) {
      if (C - d < 0) continue;
      for (int k = 0; k <= N - 1; ++k) {
        const int vlo = std::max(0, (L - 1) - (N - 1 - k));
        const int vhi = std::min(L - 1, k);
        const int mlo = std::max(0, (C - d) - (N - 1 - k));
        const int mhi = std::min(C - d, k);
        for (int v = vlo; v <= vhi; ++v) {
          for (int m = mlo; m <= mhi; ++m) {
            t += at(k, v, m) * at(N - 1 - k, L - 1 - v, C - d - m);
          }
        }
      }
    }
    return t;
  }

  ExactInt compute(int n, int l, int c) const {
    if (n == 0) return (l == 0 && c == 0) ? 1 : 0;
    if (l >= n) return 0;
    if (l == n - 1) return binomial(n, c);
    if (l == 0) return is_pow2_minus_1(n) ? 1 : 0;
    const std::string where =
        "K_{" + std::to_string(n) + "," + std::to_string(l) + "," + std::to_string(c) + "}";
    ExactInt t = convolution(n, l, c);
    if (n % 2 == 0) return halve_exact(t, where);
    if (l % 2 == 0) return at(n / 2, l / 2, c / 2) + halve_exact(t, where);
    return halve_exact(t - at(n / 2, l / 2, c / 2), where);
  }
};

inline ExactInt k3(long long n, long long l, long long c) {
  if (n < 0 || l < 0 || c < 0 || l > n || c > n) return 0;
  return k3_table(int(n)).at(n, l, c);
}

}  // namespace flipeq
