#include "qtsym/sympoly.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace qtsym {

bool SymPoly::is_zero() const {
  for (auto& [p, v] : c)
    if (!v.is_zero()) return false;
  return true;
}

int SymPoly::max_weight() const {
  int w = 0;
  for (auto& [p, v] : c)
    if (!v.is_zero()) w = std::max(w, p.weight());
  return w;
}

RationalFnQT SymPoly::coeff(const Partition& lam) const {
  auto it = c.find(lam);
  return it == c.end() ? RationalFnQT(0L) : it->second;
}

void SymPoly::add_term(const Partition& lam, const RationalFnQT& v) {
  if (lam.length() > m || v.is_zero()) return;
  auto it = c.find(lam);
  if (it == c.end()) {
    c.emplace(lam, v);
  } else {
    it->second += v;
    if (it->second.is_zero()) c.erase(it);
  }
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
  if (m != o.m) throw domain_error("SymPoly alphabet mismatch");
  for (auto& [p, v] : o.c) add_term(p, v);
  return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) {
  if (m != o.m) throw domain_error("SymPoly alphabet mismatch");
  for (auto& [p, v] : o.c) add_term(p, RationalFnQT(0L) - v);
  return *this;
}

SymPoly& SymPoly::operator*=(const RationalFnQT& s) {
  if (s.is_zero()) {
    c.clear();
    return *this;
  }
  for (auto& [p, v] : c) v *= s;
  return *this;
}

std::vector<std::vector<int>> distinct_permutations(const Partition& lam, int m) {
  std::vector<std::vector<int>> out;
  if (lam.length() > m) return out;
  std::vector<int> v(m, 0);
  for (int i = 0; i < lam.length(); ++i) v[i] = lam.parts()[i];
  std::sort(v.begin(), v.end());
  do {
    out.push_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::map<Mono, RationalFnQT, MonoLess> SymPoly::to_xpoly() const {
  std::map<Mono, RationalFnQT, MonoLess> xp;
  for (auto& [lam, v] : c) {
    for (auto& perm : distinct_permutations(lam, m)) {
      Mono mono;
      for (int i = 0; i < m; ++i)
        if (perm[i]) mono = mono * Mono::var(vx(i), perm[i]);
      auto it = xp.find(mono);
      if (it == xp.end()) xp.emplace(mono, v);
      else it->second += v;
    }
  }
  return xp;
}

SymPoly SymPoly::from_xpoly(int m, const std::map<Mono, RationalFnQT, MonoLess>& xp) {
  SymPoly f(m);
  for (auto& [mono, v] : xp) {
    std::vector<int> e(m, 0);
    for (auto& [var, k] : mono.e) {
      int i = var - VX0;
      if (i < 0 || i >= m) throw domain_error("from_xpoly: foreign variable");
      e[i] = k;
    }
    bool sorted = true;
    for (int i = 1; i < m; ++i)
      if (e[i] > e[i - 1]) sorted = false;
    if (!sorted) continue;  // only the dominant rearrangement carries m_nu
    f.add_term(Partition(e), v);
  }
  return f;
}

SymPoly operator*(const SymPoly& a, const SymPoly& b) {
  if (a.m != b.m) throw domain_error("SymPoly alphabet mismatch");
  auto xa = a.to_xpoly();
  auto xb = b.to_xpoly();
  std::map<Mono, RationalFnQT, MonoLess> prod;
  for (auto& [ma, va] : xa)
    for (auto& [mb, vb] : xb) {
      Mono mono = ma * mb;
      // only weakly-decreasing exponent vectors are read back; skip the rest
      // (vars must be contiguous from x1 with weakly decreasing exponents)
      bool sorted = true;
      int expect = VX0;
      int32_t prev = INT32_MAX;
      for (auto& [var, k] : mono.e) {
        if (var != expect || k > prev) {
          sorted = false;
          break;
        }
        prev = k;
        ++expect;
      }
      if (!sorted) continue;
      auto it = prod.find(mono);
      if (it == prod.end()) prod.emplace(mono, va * vb);
      else it->second += va * vb;
    }
  return SymPoly::from_xpoly(a.m, prod);
}

std::string SymPoly::str() const {
  std::vector<const Partition*> keys;
  for (auto& [p, v] : c)
    if (!v.is_zero()) keys.push_back(&p);
  if (keys.empty()) return "0";
  std::sort(keys.begin(), keys.end(),
            [](const Partition* a, const Partition* b) { return *b < *a; });
  std::ostringstream os;
  bool first = true;
  for (auto* p : keys) {
    if (!first) os << " + ";
    first = false;
    RationalFnQT v = coeff(*p);
    if (v.is_one()) {
      os << "m[" << p->str() << "]";
    } else {
      os << "(" << v.str() << ")*m[" << p->str() << "]";
    }
  }
  return os.str();
}

RationalFnQT SymPoly::eval_at(const std::vector<RationalFnQT>& xs) const {
  if (static_cast<int>(xs.size()) != m) throw domain_error("eval_at: alphabet mismatch");
  RationalFnQT acc(0L);
  for (auto& [lam, v] : c) {
    RationalFnQT s(0L);
    for (auto& perm : distinct_permutations(lam, m)) {
      RationalFnQT term(1L);
      for (int i = 0; i < m; ++i)
        if (perm[i]) term *= xs[i].pow(perm[i]);
      s += term;
    }
    acc += v * s;
  }
  return acc;
}

TruncSeries SymPoly::to_series(const std::vector<std::pair<RationalFnQT, Mono>>& entries,
                               std::vector<uint8_t> vars, int cap) const {
  if (static_cast<int>(entries.size()) != m) throw domain_error("to_series: alphabet mismatch");
  TruncSeries s(vars, cap);
  for (auto& [lam, v] : c) {
    TruncSeries part(vars, cap);
    for (auto& perm : distinct_permutations(lam, m)) {
      RationalFnQT coeff(1L);
      Mono mono;
      bool zero = false;
      for (int i = 0; i < m && !zero; ++i) {
        if (!perm[i]) continue;
        if (entries[i].first.is_zero()) {
          zero = true;
          break;
        }
        coeff *= entries[i].first.pow(perm[i]);
        for (int rep = 0; rep < perm[i]; ++rep) mono = mono * entries[i].second;
      }
      if (!zero && mono.degree() <= cap) part.add_term(mono, coeff);
    }
    part *= v;
    s += part;
  }
  return s;
}

SymPoly sym_monomial(const Partition& lam, int m) {
  SymPoly f(m);
  f.add_term(lam, RationalFnQT(1L));
  return f;
}

SymPoly sym_powersum(int r, int m) {
  if (r < 1) throw domain_error("power sum index must be >= 1");
  return sym_monomial(Partition({r}), m);
}

SymPoly sym_powersum(const Partition& rho, int m) {
  SymPoly f = sym_monomial(Partition(), m);  // 1
  for (int x : rho.parts()) f = f * sym_powersum(x, m);
  return f;
}

SymPoly sym_elementary(int r, int m) {
  if (r == 0) return sym_monomial(Partition(), m);
  return sym_monomial(Partition(std::vector<int>(r, 1)), m);
}

SymPoly sym_schur(const Partition& lam, int m) {
  if (lam.length() > m) return SymPoly(m);
  // det(x_i^{lam_j + m - j}) / det(x_i^{m - j}) via permutation expansion and
  // exact polynomial division by the Vandermonde determinant.
  std::vector<int> exps(m);
  for (int j = 1; j <= m; ++j) exps[j - 1] = lam.part(j) + m - j;
  MPoly det;
  std::vector<int> perm(m);
  for (int i = 0; i < m; ++i) perm[i] = i;
  do {
    int inv = 0;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if (perm[i] > perm[j]) ++inv;
    Mono mono;
    for (int i = 0; i < m; ++i)
      if (exps[perm[i]]) mono = mono * Mono::var(vx(i), exps[perm[i]]);
    det += MPoly::term(BigRat(inv % 2 ? -1 : 1), mono);
  } while (std::next_permutation(perm.begin(), perm.end()));
  MPoly vand(1L);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      vand *= MPoly::var(vx(i)) - MPoly::var(vx(j));
  auto quot = MPoly::exact_divide(det, vand);
  if (!quot) throw internal_error("schur: vandermonde does not divide");
  std::map<Mono, RationalFnQT, MonoLess> xp;
  for (auto& [mono, cc] : quot->t) xp.emplace(mono, RationalFnQT(MPoly::term(cc, Mono{})));
  // direct from_xpoly keeps only dominant rearrangements, which is all we need
  return SymPoly::from_xpoly(m, xp);
}

const PMTable& pm_table(int d) {
  static std::mutex mu;
  static std::map<int, PMTable> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;

  PMTable tab;
  tab.parts = partitions_of(d, d);
  int n = static_cast<int>(tab.parts.size());
  for (int i = 0; i < n; ++i) tab.index[tab.parts[i]] = i;
  // p_rho over alphabet d is faithful for weight d
  tab.p_in_m.assign(n, std::vector<BigRat>(n, BigRat(0)));
  for (int r = 0; r < n; ++r) {
    SymPoly p = sym_powersum(tab.parts[r], d);
    for (auto& [nu, v] : p.c) {
      if (!v.den_trivial() || !v.num.is_constant())
        throw internal_error("pm_table: nonconstant transition entry");
      tab.p_in_m[r][tab.index.at(nu)] = v.num.constant_value();
    }
  }
  // invert by Gaussian elimination over Q
  int nn = n;
  std::vector<std::vector<BigRat>> a = tab.p_in_m, inv(nn, std::vector<BigRat>(nn, BigRat(0)));
  for (int i = 0; i < nn; ++i) inv[i][i] = 1;
  for (int col = 0; col < nn; ++col) {
    int piv = -1;
    for (int r = col; r < nn; ++r)
      if (a[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw internal_error("pm_table: singular transition matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    BigRat d0 = a[col][col];
    for (int j = 0; j < nn; ++j) {
      a[col][j] /= d0;
      inv[col][j] /= d0;
    }
    for (int r = 0; r < nn; ++r) {
      if (r == col || a[r][col] == 0) continue;
      BigRat f = a[r][col];
      for (int j = 0; j < nn; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  // p_in_m is R with rows rho; m_nu = sum_rho (R^{-1})[nu][rho]... note
  // p = R m  =>  m = R^{-1} p, so S[nu][rho] = inv[nu][rho].
  tab.m_in_p = std::move(inv);
  auto [pos, ok] = cache.emplace(d, std::move(tab));
  return pos->second;
}

std::map<Partition, RationalFnQT> to_powersum_basis(const SymPoly& f) {
  std::map<Partition, RationalFnQT> out;
  for (auto& [lam, v] : f.c) {
    if (v.is_zero()) continue;
    int d = lam.weight();
    if (f.m < d)
      throw domain_error("power-sum conversion requires alphabet >= degree");
    const PMTable& tab = pm_table(d);
    int nu = tab.index.at(lam);
    for (int rho = 0; rho < static_cast<int>(tab.parts.size()); ++rho) {
      const BigRat& s = tab.m_in_p[nu][rho];
      if (s == 0) continue;
      auto it = out.find(tab.parts[rho]);
      RationalFnQT add = v * RationalFnQT(s);
      if (it == out.end()) out.emplace(tab.parts[rho], add);
      else it->second += add;
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second.is_zero()) it = out.erase(it);
    else ++it;
  }
  return out;
}

}  // namespace qtsym
