#include "qtsym/bisym.hpp"

#include <map>
#include <mutex>

namespace qtsym {

int ASM::minus_count() const {
  int c = 0;
  for (const auto& row : a)
    for (int v : row) c += v < 0;
  return c;
}

int ASM::minus_in_row(int i) const {
  int c = 0;
  for (int v : a[i]) c += v < 0;
  return c;
}

int ASM::minus_in_col(int j) const {
  int c = 0;
  for (int i = 0; i < n; ++i) c += a[i][j] < 0;
  return c;
}

long ASM::inversions() const {
  long s = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!a[i][j]) continue;
      for (int i2 = 0; i2 < i; ++i2)
        for (int j2 = j + 1; j2 < n; ++j2) s += a[i][j] * a[i2][j2];
    }
  return s;
}

bool ASM::alpha_is_t(int i, int j) const {
  int row = 0, col = 0;
  for (int k = 0; k <= j; ++k) row += a[i][k];
  for (int k = 0; k <= i; ++k) col += a[k][j];
  return row == col;
}

namespace {

int g_asm_cap = 4;
std::mutex g_asm_mutex;
std::map<int, std::vector<ASM>> g_asm_cache;

// Cell-by-cell backtracking; prefix sums of every row and column stay in
// {0,1} and full sums are 1, which characterizes alternating sign matrices.
void asm_rec(int n, std::vector<std::vector<int>>& a, std::vector<int>& colsum, int i, int j,
             int rowsum, std::vector<ASM>& out) {
  if (j == n) {
    if (rowsum != 1) return;
    if (i == n - 1) {
      for (int c : colsum)
        if (c != 1) return;
      out.push_back(ASM{n, a});
    } else {
      asm_rec(n, a, colsum, i + 1, 0, 0, out);
    }
    return;
  }
  for (int v = -1; v <= 1; ++v) {
    int nr = rowsum + v, nc = colsum[j] + v;
    if (nr < 0 || nr > 1 || nc < 0 || nc > 1) continue;
    a[i][j] = v;
    colsum[j] = nc;
    asm_rec(n, a, colsum, i, j + 1, nr, out);
    colsum[j] = nc - v;
  }
  a[i][j] = 0;
}

}  // namespace

void set_asm_size_cap(int cap) {
  std::lock_guard<std::mutex> lk(g_asm_mutex);
  g_asm_cap = cap;
}

std::vector<ASM> enumerate_asm(int n) {
  if (n < 0) throw domain_error("negative matrix size");
  std::lock_guard<std::mutex> lk(g_asm_mutex);
  if (n > g_asm_cap) throw domain_error("alternating sign matrix size above cap");
  auto it = g_asm_cache.find(n);
  if (it != g_asm_cache.end()) return it->second;
  std::vector<ASM> out;
  if (n == 0) {
    out.push_back(ASM{0, {}});
  } else {
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    std::vector<int> colsum(n, 0);
    asm_rec(n, a, colsum, 0, 0, 0, out);
  }
  g_asm_cache[n] = out;
  return out;
}

BigRat h_limit(const std::vector<BigRat>& x, const std::vector<BigRat>& y) {
  const int m = static_cast<int>(x.size()), n = static_cast<int>(y.size());
  if (m > n) throw domain_error("h_limit requires no more x than y variables");
  std::vector<RationalFnQT> xs, ys;
  for (const BigRat& v : x) xs.emplace_back(v);
  for (const BigRat& v : y) ys.emplace_back(v);
  const RationalFnQT t = RationalFnQT::var(VT);
  RationalFnQT r = omega_subset(xs, ys, t);
  r /= (RationalFnQT(1L) - t).pow(m);
  mpz_class nu = 1, de = 1;
  for (int i = 2; i <= n - m; ++i) nu *= i;
  for (int i = 2; i <= n; ++i) de *= i;
  BigRat scale(nu, de);
  scale.canonicalize();
  if (m % 2) scale = -scale;
  r *= RationalFnQT(scale);
  r = r.normalized();
  std::vector<BigRat> vals(NVARS, BigRat(0));
  vals[VT] = 1;
  return r.eval(vals);
}

RationalFnQT W_explicit(const Partition& lam, const Partition& mu, int m, int n,
                        const RationalFnQT& u, const RationalFnQT& z) {
  if (lam.length() > m || mu.length() > n) throw domain_error("partition longer than alphabet");
  const RationalFnQT one(1L);
  RationalFnQT acc(0L);
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    int r = __builtin_popcount(mask);
    RationalFnQT term = (-u).pow(r) * qt_mono(0, r * (r - 1) / 2);
    for (int i = 1; i <= m; ++i) {
      if (!(mask >> (i - 1) & 1)) continue;
      for (int j = 1; j <= m; ++j) {
        if (mask >> (j - 1) & 1) continue;
        int d = lam.part(i) - lam.part(j);
        term *= (one - qt_mono(d, j - i + 1)) / (one - qt_mono(d, j - i));
      }
      for (int j = 1; j <= n; ++j) {
        int d = lam.part(i) + mu.part(j);
        term *= (one - z * qt_mono(d, m + n - i - j)) / (one - z * qt_mono(d, m + n - i - j + 1));
      }
    }
    acc += term;
  }
  return acc;
}

RationalFnQT V_explicit(const Partition& lam, const Partition& mu, int m, int n,
                        const RationalFnQT& u, const RationalFnQT& z) {
  if (lam.length() > m || mu.length() > n) throw domain_error("partition longer than alphabet");
  const RationalFnQT one(1L);
  RationalFnQT acc(0L);
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    int r = __builtin_popcount(mask);
    RationalFnQT term = (-u).pow(r) * qt_mono(0, r * (r - 1) / 2 - long(n) * r);
    for (int i = 1; i <= m; ++i) {
      if (!(mask >> (i - 1) & 1)) continue;
      for (int j = 1; j <= m; ++j) {
        if (mask >> (j - 1) & 1) continue;
        int d = lam.part(j) - lam.part(i);
        term *= (one - qt_mono(d, i - j + 1)) / (one - qt_mono(d, i - j));
      }
      for (int j = 1; j <= n; ++j) {
        int d = lam.part(i) - mu.part(j);
        term *= (one - z * qt_mono(d, j - i + m - n)) / (one - z * qt_mono(d, j - i + m - n - 1));
      }
    }
    acc += term;
  }
  return acc;
}

RationalFnQT W_via_F(const Partition& lam, const Partition& mu, int m, int n,
                     const RationalFnQT& u, const RationalFnQT& z) {
  if (lam.length() > m || mu.length() > n) throw domain_error("partition longer than alphabet");
  std::vector<RationalFnQT> xs, ys;
  for (int i = 1; i <= m; ++i) xs.push_back(z * qt_mono(lam.part(i), m - i));
  for (int j = 1; j <= n; ++j) ys.push_back(qt_mono(mu.part(j), n - j));
  return F_subset(u, xs, ys, RationalFnQT::var(VT));
}

RationalFnQT V_via_F(const Partition& lam, const Partition& mu, int m, int n,
                     const RationalFnQT& u, const RationalFnQT& z) {
  if (lam.length() > m || mu.length() > n) throw domain_error("partition longer than alphabet");
  std::vector<RationalFnQT> xs, ys;
  for (int i = 1; i <= m; ++i) xs.push_back((z * qt_mono(lam.part(i), m - i)).reciprocal());
  for (int j = 1; j <= n; ++j) ys.push_back(qt_mono(mu.part(j), n - j));
  return F_subset(u, xs, ys, RationalFnQT::var(VT));
}

RationalFnQT V_typed(int sigma, const Partition& lam, const Partition& mu, int m, int n) {
  if (sigma != 0 && sigma != 1) throw domain_error("series type must be 0 or 1");
  // z is kept formal through the sum so poles of individual terms cancel
  // before the substitution z = 1.
  RationalFnQT u = sigma == 0 ? RationalFnQT(1L) : qt_mono(0, n - m + 1);
  RationalFnQT v = V_explicit(lam, mu, m, n, u, RationalFnQT::var(VZ)).subst(VZ, BigRat(1));
  if (sigma == 1) v *= qt_mono(-lam.weight(), 0);
  return v;
}

ExtVal Omega_kernel(int sigma, const Partition& lam, const Partition& mu, int m, int n) {
  ExtVal r = ExtVal::from(V_typed(sigma, lam, mu, m, n));
  r *= ExtVal::from(gen_poch(qt_mono(1, m - 1), lam));
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) {
      int d = lam.part(i) - mu.part(j);
      r *= qpoch_ext(qt_mono(1, j - i + m - n - 1), d);
      r /= qpoch_ext(qt_mono(1, j - i + m - n), d);
    }
  return r;
}

}  // namespace qtsym
