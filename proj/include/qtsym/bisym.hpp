#pragma once
// The bisymmetric rational function F(u;x,y;t), its omega variant, and the
// W / V / Omega kernels obtained by principal specialization.  Evaluators are
// templated on the coefficient field so the same code runs over exact
// rational points (BigRat) and over formal q,t,u,z (RationalFnQT).

#include <algorithm>
#include <array>
#include <vector>

#include "qtsym/partition.hpp"
#include "qtsym/rational.hpp"

namespace qtsym {

template <class K>
struct field_ops;

template <>
struct field_ops<BigRat> {
  static bool is_zero(const BigRat& v) { return v == 0; }
  static BigRat from_long(long v) { return BigRat(v); }
};

template <>
struct field_ops<RationalFnQT> {
  static bool is_zero(const RationalFnQT& v) { return v.is_zero(); }
  static RationalFnQT from_long(long v) { return RationalFnQT(v); }
};

template <class K>
K field_div(const K& a, const K& b) {
  if (field_ops<K>::is_zero(b)) throw pole_error("division by zero at evaluation point");
  return a / b;
}

template <class K>
K field_pow(const K& base, long k) {
  if (k < 0) return field_div(field_ops<K>::from_long(1), field_pow(base, -k));
  K r = field_ops<K>::from_long(1);
  for (long i = 0; i < k; ++i) r = r * base;
  return r;
}

// (t;t)_k as a field value.
template <class K>
K tt_poch(const K& t, int k) {
  K r = field_ops<K>::from_long(1);
  K p = field_ops<K>::from_long(1);
  for (int i = 1; i <= k; ++i) {
    p = p * t;
    r = r * K(field_ops<K>::from_long(1) - p);
  }
  return r;
}

// F(u;x,y;t) as the subset sum over I of [m].
template <class K>
K F_subset(const K& u, const std::vector<K>& x, const std::vector<K>& y, const K& t) {
  const int m = static_cast<int>(x.size());
  const K one = field_ops<K>::from_long(1);
  K acc = field_ops<K>::from_long(0);
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    int r = __builtin_popcount(mask);
    K term = field_pow(K(field_ops<K>::from_long(0) - u), r) * field_pow(t, long(r) * (r - 1) / 2);
    for (int i = 0; i < m; ++i) {
      if (!(mask >> i & 1)) continue;
      for (int j = 0; j < m; ++j) {
        if (mask >> j & 1) continue;
        term = term * field_div(K(t * x[i] - x[j]), K(x[i] - x[j]));
      }
      for (const K& yj : y)
        term = term * field_div(K(one - x[i] * yj), K(one - t * x[i] * yj));
    }
    acc = acc + term;
  }
  return acc;
}

// Image of F under the y-alphabet homomorphism p_r -> (1-a^r)/(1-t^r),
// reduced to a subset sum over x alone.  term() exposes one subset's
// contribution so termwise symmetries can be tested.
template <class K>
K F_eps_term(const K& u, const std::vector<K>& x, const K& a, const K& t, unsigned mask) {
  const int m = static_cast<int>(x.size());
  const K one = field_ops<K>::from_long(1);
  int r = __builtin_popcount(mask);
  K term = field_pow(K(field_ops<K>::from_long(0) - u), r) * field_pow(t, long(r) * (r - 1) / 2);
  for (int i = 0; i < m; ++i) {
    if (!(mask >> i & 1)) continue;
    for (int j = 0; j < m; ++j) {
      if (mask >> j & 1) continue;
      term = term * field_div(K(t * x[i] - x[j]), K(x[i] - x[j]));
    }
    term = term * field_div(K(one - x[i]), K(one - a * x[i]));
  }
  return term;
}

template <class K>
K F_eps_subset(const K& u, const std::vector<K>& x, const K& a, const K& t) {
  const int m = static_cast<int>(x.size());
  K acc = field_ops<K>::from_long(0);
  for (unsigned mask = 0; mask < (1u << m); ++mask) acc = acc + F_eps_term(u, x, a, t, mask);
  return acc;
}

// omega(x,y;t) as the subset sum.
template <class K>
K omega_subset(const std::vector<K>& x, const std::vector<K>& y, const K& t) {
  const int m = static_cast<int>(x.size());
  K acc = field_ops<K>::from_long(0);
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    int r = __builtin_popcount(mask);
    K term = field_pow(field_ops<K>::from_long(-1), r) * field_pow(t, long(r) * (r - 1) / 2);
    for (int i = 0; i < m; ++i) {
      if (!(mask >> i & 1)) continue;
      for (int j = 0; j < m; ++j) {
        if (mask >> j & 1) continue;
        term = term * field_div(K(x[i] - t * x[j]), K(x[i] - x[j]));
      }
      for (const K& yj : y)
        term = term * field_div(K(x[i] - yj), K(x[i] - t * yj));
    }
    acc = acc + term;
  }
  return acc;
}

// One-variable-at-a-time recursion (delete x_m, sum over deleted y_l).
template <class K>
K omega_recursive(const std::vector<K>& x, const std::vector<K>& y, const K& t) {
  const int m = static_cast<int>(x.size()), n = static_cast<int>(y.size());
  if (m == 0) return field_ops<K>::from_long(1);
  const int k = m - 1;  // 0-based index of x_m
  K acc = field_ops<K>::from_long(0);
  for (int l = 0; l < n; ++l) {
    std::vector<K> x2(x.begin(), x.end() - 1), y2;
    for (int i = 0; i < n; ++i)
      if (i != l) y2.push_back(y[i]);
    K term = omega_recursive(x2, y2, t) * field_div(y[l], K(x[k] - t * y[l]));
    for (int i = 0; i < m; ++i)
      if (i != k) term = term * field_div(K(x[i] - y[l]), K(x[i] - t * y[l]));
    for (int i = 0; i < n; ++i)
      if (i != l) term = term * field_div(K(y[i] - t * y[l]), K(y[i] - y[l]));
    acc = acc + term;
  }
  return acc * field_pow(t, m - n) * K(field_ops<K>::from_long(1) - t);
}

// Multisum over injective (l_1..l_m) into [n].
template <class K>
K omega_multisum(const std::vector<K>& x, const std::vector<K>& y, const K& t) {
  const int m = static_cast<int>(x.size()), n = static_cast<int>(y.size());
  const K one = field_ops<K>::from_long(1);
  K acc = field_ops<K>::from_long(0);
  std::vector<int> l(m);
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == m) {
      K term = one;
      for (int i = 0; i < m; ++i) term = term * field_div(y[l[i]], K(x[i] - t * y[l[i]]));
      for (int i = 0; i < n; ++i) {
        if (used[i]) continue;
        for (int j = 0; j < m; ++j)
          term = term * field_div(K(y[i] - t * y[l[j]]), K(y[i] - y[l[j]]));
      }
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
          term = term * field_div(K(x[i] - y[l[j]]), K(x[i] - t * y[l[j]]));
          term = term * field_div(K(y[l[i]] - t * y[l[j]]), K(y[l[i]] - y[l[j]]));
        }
      acc = acc + term;
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      used[v] = true;
      l[depth] = v;
      self(self, depth + 1);
      used[v] = false;
    }
  };
  rec(rec, 0);
  return acc * field_pow(t, long(m) * (m - n)) * field_pow(K(one - t), m);
}

template <class K, class F>
void for_each_permutation_pair(int m, int n, F&& body) {
  std::vector<int> px(m), py(n);
  for (int i = 0; i < m; ++i) px[i] = i;
  do {
    for (int j = 0; j < n; ++j) py[j] = j;
    do {
      body(px, py);
    } while (std::next_permutation(py.begin(), py.end()));
  } while (std::next_permutation(px.begin(), px.end()));
}

// Fully symmetrized form over S_x x S_y.
template <class K>
K omega_symmetrized(const std::vector<K>& x, const std::vector<K>& y, const K& t) {
  const int m = static_cast<int>(x.size()), n = static_cast<int>(y.size());
  const K one = field_ops<K>::from_long(1);
  K acc = field_ops<K>::from_long(0);
  for_each_permutation_pair<K>(m, n, [&](const std::vector<int>& px, const std::vector<int>& py) {
    K term = one;
    for (int i = 0; i < m; ++i) {
      const K& yi = y[py[i + n - m]];
      term = term * field_div(yi, K(x[px[i]] - t * yi));
    }
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        term = term * field_div(K(y[py[i]] - t * y[py[j]]), K(y[py[i]] - y[py[j]]));
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        term = term * field_div(K(x[px[i]] - y[py[j + n - m]]), K(x[px[i]] - t * y[py[j + n - m]]));
        term = term * field_div(K(x[px[i]] - t * x[px[j]]), K(x[px[i]] - x[px[j]]));
      }
    acc = acc + term;
  });
  K pref = field_pow(t, long(m) * (m - n)) * field_pow(K(one - t), n + m);
  pref = field_div(pref, K(tt_poch(t, n - m) * tt_poch(t, m)));
  return acc * pref;
}

// t -> 1 limit h(x,y) as the injective multisum.
template <class K>
K h_multisum(const std::vector<K>& x, const std::vector<K>& y) {
  const int m = static_cast<int>(x.size()), n = static_cast<int>(y.size());
  K acc = field_ops<K>::from_long(0);
  std::vector<int> l(m);
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == m) {
      K term = field_ops<K>::from_long(1);
      for (int i = 0; i < m; ++i) term = term * field_div(y[l[i]], K(y[l[i]] - x[i]));
      acc = acc + term;
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      used[v] = true;
      l[depth] = v;
      self(self, depth + 1);
      used[v] = false;
    }
  };
  rec(rec, 0);
  long fac = 1;
  for (int i = 2; i <= n; ++i) fac *= i;  // n!
  long fac2 = 1;
  for (int i = 2; i <= n - m; ++i) fac2 *= i;  // (n-m)!
  return field_div(K(acc * field_ops<K>::from_long(fac2)), field_ops<K>::from_long(fac));
}

// Same limit, fully symmetrized.
template <class K>
K h_symmetrized(const std::vector<K>& x, const std::vector<K>& y) {
  const int m = static_cast<int>(x.size()), n = static_cast<int>(y.size());
  K acc = field_ops<K>::from_long(0);
  for_each_permutation_pair<K>(m, n, [&](const std::vector<int>& px, const std::vector<int>& py) {
    K term = field_ops<K>::from_long(1);
    for (int i = 0; i < m; ++i) {
      const K& yi = y[py[i + n - m]];
      term = term * field_div(yi, K(yi - x[px[i]]));
    }
    acc = acc + term;
  });
  long fac = 1;
  for (int i = 2; i <= m; ++i) fac *= i;
  for (int i = 2; i <= n; ++i) fac *= i;
  return field_div(acc, field_ops<K>::from_long(fac));
}

// Determinant over permutations (n <= 6 or so).
template <class K>
K small_det(const std::vector<std::vector<K>>& a) {
  const int n = static_cast<int>(a.size());
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  K acc = field_ops<K>::from_long(0);
  do {
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inv;
    K term = field_ops<K>::from_long(inv % 2 ? -1 : 1);
    for (int i = 0; i < n; ++i) term = term * a[i][perm[i]];
    acc = acc + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

// Izergin-Korepin determinant form of F(t;x,y;t), m = n.
template <class K>
K ik_determinant(const std::vector<K>& x, const std::vector<K>& y, const K& t) {
  const int n = static_cast<int>(x.size());
  if (static_cast<int>(y.size()) != n) throw domain_error("ik_determinant requires m = n");
  const K one = field_ops<K>::from_long(1);
  std::vector<std::vector<K>> a(n, std::vector<K>(n, one));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      a[i][j] = field_div(one, K((one - x[i] * y[j]) * (one - t * x[i] * y[j])));
  K pref = field_pow(K(one - t), n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) pref = pref * (one - x[i] * y[j]);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      pref = field_div(field_div(pref, K(x[i] - x[j])), K(y[i] - y[j]));
  return small_det(a) * pref;
}

// Alternating sign matrices with the statistics used by the omega expansion.
struct ASM {
  int n;
  std::vector<std::vector<int>> a;  // entries in {-1, 0, 1}

  int minus_count() const;          // N(A)
  int minus_in_row(int i) const;    // N_i(A), 0-based
  int minus_in_col(int j) const;    // N^j(A)
  long inversions() const;          // I(A)
  // alpha_{ij} is t when the j-prefix of row i and the i-prefix of column j
  // have equal sums (only queried where a[i][j] == 0).
  bool alpha_is_t(int i, int j) const;
};

std::vector<ASM> enumerate_asm(int n);  // cached; throws above the size cap
void set_asm_size_cap(int cap);         // default 4

// ASM expansion of omega for m = n.
template <class K>
K asm_expansion(const std::vector<K>& x, const std::vector<K>& y, const K& t) {
  const int n = static_cast<int>(x.size());
  if (static_cast<int>(y.size()) != n) throw domain_error("asm_expansion requires m = n");
  const K one = field_ops<K>::from_long(1);
  K acc = field_ops<K>::from_long(0);
  for (const ASM& A : enumerate_asm(n)) {
    K term = field_pow(K(one - t), 2 * A.minus_count()) *
             field_pow(t, long(n) * (n - 1) / 2 - A.inversions());
    for (int i = 0; i < n; ++i) {
      term = term * field_pow(y[i], A.minus_in_row(i));
      term = term * field_pow(x[i], A.minus_in_col(i));
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (A.a[i][j] != 0) continue;
        K alpha = A.alpha_is_t(i, j) ? t : one;
        term = term * (alpha * y[i] - x[j]);
      }
    acc = acc + term;
  }
  K pref = field_pow(K(one - t), n);
  for (int i = 0; i < n; ++i) pref = pref * y[i];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) pref = field_div(pref, K(x[i] - t * y[j]));
  return acc * pref;
}

// Exact t -> 1 limit of (-1)^m (n-m)!/n! * omega/(1-t)^m at a rational point,
// computed in Q(t) with univariate cancellation.  Must equal h_multisum.
BigRat h_limit(const std::vector<BigRat>& x, const std::vector<BigRat>& y);

// ---- principal-specialization kernels ----

// Explicit subset sums (formal q,t; u and z as rational functions).
RationalFnQT W_explicit(const Partition& lam, const Partition& mu, int m, int n,
                        const RationalFnQT& u, const RationalFnQT& z);
RationalFnQT V_explicit(const Partition& lam, const Partition& mu, int m, int n,
                        const RationalFnQT& u, const RationalFnQT& z);
// Same values through the specialization of F (the defining route).
RationalFnQT W_via_F(const Partition& lam, const Partition& mu, int m, int n,
                     const RationalFnQT& u, const RationalFnQT& z);
RationalFnQT V_via_F(const Partition& lam, const Partition& mu, int m, int n,
                     const RationalFnQT& u, const RationalFnQT& z);

// sigma = 0: V(1,1).  sigma = 1: q^{-|lambda|} V(t^{n-m+1}, 1).
RationalFnQT V_typed(int sigma, const Partition& lam, const Partition& mu, int m, int n);

// Omega_{lambda mu} = V_typed * (q t^{m-1};q,t)_lam * double Pochhammer ratio.
// ExtVal because the ratio vanishes (through an infinite denominator) when the
// interlacing condition fails.
ExtVal Omega_kernel(int sigma, const Partition& lam, const Partition& mu, int m, int n);

}  // namespace qtsym
