#include "qtsym/macdonald.hpp"

#include <algorithm>
#include <mutex>

namespace qtsym {

RationalFnQT scalar_qt(const SymPoly& f, const SymPoly& g) {
  auto fp = to_powersum_basis(f);
  auto gp = to_powersum_basis(g);
  RationalFnQT acc(0L);
  for (auto& [rho, cf] : fp) {
    auto it = gp.find(rho);
    if (it == gp.end()) continue;
    RationalFnQT w(BigRat(z_stat(rho)));
    for (int r : rho.parts())
      w *= (RationalFnQT(1L) - RationalFnQT::var(VQ, r)) /
           (RationalFnQT(1L) - RationalFnQT::var(VT, r));
    acc += cf * it->second * w;
  }
  return acc;
}

namespace {

// Monomial-basis coefficients of every weight-d P_lambda with l(lambda) <= m.
// Solved from the triangular action of the first q-difference operator:
// with D m_mu = sum_{nu <= mu} A_{mu nu} m_nu and P_lam = sum psi_nu m_nu,
// the eigenvalue equation gives psi_nu = (sum_{mu > nu} psi_mu A_{mu nu}) /
// (ev_lam - ev_nu).  Divisions only ever introduce eigenvalue differences,
// which stay small and factored; this is what keeps large weights tractable.
struct MBlock {
  std::vector<Partition> parts;  // ascending; linearly extends dominance
  std::vector<std::map<Partition, RationalFnQT>> coeffs;
};

const MBlock& mblock(int m, int d) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, MBlock> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(m, d);
  auto hit = cache.find(key);
  if (hit != cache.end()) return hit->second;

  MBlock blk;
  if (d == 0) {
    blk.parts = {Partition()};
    blk.coeffs = {{{Partition(), RationalFnQT(1L)}}};
    auto [pos0, ok0] = cache.emplace(key, std::move(blk));
    return pos0->second;
  }
  blk.parts = partitions_of(d, std::min(m, d));
  const int n = static_cast<int>(blk.parts.size());
  std::map<Partition, int> idx;
  for (int i = 0; i < n; ++i) idx.emplace(blk.parts[i], i);

  std::vector<RationalFnQT> ev(static_cast<size_t>(n), RationalFnQT(0L));
  for (int i = 0; i < n; ++i)
    for (int k = 1; k <= m; ++k) ev[i] += qt_mono(blk.parts[i].part(k), m - k);

  // action[i]: strictly-below-diagonal entries A_{parts[i], nu}
  std::vector<std::vector<std::pair<int, RationalFnQT>>> action(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    SymPoly di = macdonald_operator(1, sym_monomial(blk.parts[i], m));
    bool saw_diag = false;
    for (const auto& [nu, v] : di.c) {
      if (v.is_zero()) continue;
      if (!blk.parts[i].dominates(nu))
        throw internal_error("mblock: operator action outside dominance");
      if (nu == blk.parts[i]) {
        if (v != ev[i]) throw internal_error("mblock: diagonal is not the eigenvalue");
        saw_diag = true;
      } else {
        action[i].emplace_back(idx.at(nu), v);
      }
    }
    if (!saw_diag && d > 0) throw internal_error("mblock: missing diagonal action");
  }

  for (int l = 0; l < n; ++l) {
    std::vector<RationalFnQT> acc(static_cast<size_t>(l), RationalFnQT(0L));
    std::vector<RationalFnQT> psi(static_cast<size_t>(l) + 1, RationalFnQT(0L));
    psi[l] = RationalFnQT(1L);
    for (int i = l; i >= 0; --i) {
      if (i < l) {
        if (acc[i].is_zero()) continue;
        psi[i] = acc[i] / (ev[l] - ev[i]);
      }
      for (const auto& [j, a] : action[i])
        if (j < l) acc[j] += psi[i] * a;
    }
    std::map<Partition, RationalFnQT> P;
    for (int i = 0; i <= l; ++i)
      if (!psi[i].is_zero()) P.emplace(blk.parts[i], psi[i]);
    blk.coeffs.push_back(std::move(P));
  }
  auto [pos, ok] = cache.emplace(key, std::move(blk));
  return pos->second;
}

const std::map<Partition, RationalFnQT>& mblock_coeffs(int m, const Partition& lam) {
  const MBlock& blk = mblock(m, lam.weight());
  for (int i = 0; i < static_cast<int>(blk.parts.size()); ++i)
    if (blk.parts[i] == lam) return blk.coeffs[i];
  throw internal_error("mblock_coeffs: partition not found");
}

}  // namespace

const std::map<Partition, RationalFnQT>& macdonald_coeffs(const Partition& lam) {
  // the weight-sized alphabet is faithful for every monomial that can occur
  return mblock_coeffs(lam.weight(), lam);
}

SymPoly macdonald_P(const Partition& lam, int m) {
  SymPoly f(m);
  if (lam.length() > m) return f;  // P vanishes for alphabets shorter than l(lam)
  for (auto& [nu, v] : mblock_coeffs(std::min(m, lam.weight()), lam)) f.add_term(nu, v);
  return f;
}

const std::map<Partition, RationalFnQT>& lr_expand(const Partition& mu, const Partition& nu) {
  static std::mutex lock;
  static std::map<std::pair<Partition, Partition>, std::map<Partition, RationalFnQT>> cache;
  std::lock_guard<std::mutex> guard(lock);
  auto key = std::make_pair(mu, nu);
  auto hit = cache.find(key);
  if (hit != cache.end()) return hit->second;

  // l(lambda) <= l(mu) + l(nu) on the support, so this alphabet is faithful
  int N = std::max(mu.length() + nu.length(), 1);
  SymPoly prod = macdonald_P(mu, N) * macdonald_P(nu, N);
  // peel off P_lambda from the top of dominance order
  std::map<Partition, RationalFnQT> out;
  auto parts = partitions_of(mu.weight() + nu.weight(), N);
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
    RationalFnQT f = prod.coeff(*it);
    if (f.is_zero()) continue;
    out.emplace(*it, f);
    SymPoly sub = macdonald_P(*it, N);
    sub *= f;
    prod -= sub;
  }
  if (!prod.is_zero()) throw internal_error("lr_expand: residue after peeling");
  auto [pos, ok] = cache.emplace(std::move(key), std::move(out));
  return pos->second;
}

RationalFnQT lr_coeff(const Partition& mu, const Partition& nu, const Partition& lam, int m) {
  if (m < mu.length() + nu.length())
    throw domain_error("lr_coeff: alphabet shorter than l(mu) + l(nu)");
  if (lam.weight() != mu.weight() + nu.weight()) return RationalFnQT(0L);
  if (!lam.contains(mu) || !lam.contains(nu)) return RationalFnQT(0L);
  const auto& exp = lr_expand(mu, nu);
  auto it = exp.find(lam);
  return it == exp.end() ? RationalFnQT(0L) : it->second;
}

SymPoly skew_P(const Partition& lam, const Partition& mu, int m) {
  SymPoly f(m);
  if (!lam.contains(mu)) return f;
  int d = lam.weight() - mu.weight();
  for (auto& nu : partitions_of(d, std::min(m, d == 0 ? 0 : d))) {
    if (nu.length() > m) continue;
    RationalFnQT c = lr_coeff(mu, nu, lam, mu.length() + nu.length());
    if (c.is_zero()) continue;
    // b-factors convert the P-product structure constants into the skew
    // expansion that makes P_lam(x, y) = sum_mu P_{lam/mu}(x) P_mu(y) hold.
    c *= hook_b(mu) * hook_b(nu) / hook_b(lam);
    SymPoly p = macdonald_P(nu, m);
    p *= c;
    f += p;
  }
  return f;
}

RationalFnQT eval_u(const SymPoly& f, const Partition& lam, const RationalFnQT& z, int n) {
  if (f.m != n) throw domain_error("eval_u: alphabet mismatch");
  std::vector<RationalFnQT> xs;
  for (int i = 1; i <= n; ++i) xs.push_back(z * qt_mono(lam.part(i), n - i));
  return f.eval_at(xs);
}

RationalFnQT eps_hom(const SymPoly& f, const RationalFnQT& b) {
  auto fp = to_powersum_basis(f);
  RationalFnQT acc(0L);
  for (auto& [rho, cf] : fp) {
    RationalFnQT w(1L);
    for (int r : rho.parts())
      w *= (RationalFnQT(1L) - b.pow(r)) /
           (RationalFnQT(1L) - RationalFnQT::var(VT, r));
    acc += cf * w;
  }
  return acc;
}

namespace {

// f as a single rational function of x (and q,t,...).
RationalFnQT sympoly_to_rf(const SymPoly& f) {
  RationalFnQT acc(0L);
  for (auto& [mono, v] : f.to_xpoly()) acc += v * RationalFnQT(MPoly::term(BigRat(1), mono));
  return acc;
}

// Split a denominator-free rational function back into x-monomial -> coeff.
SymPoly rf_to_sympoly(const RationalFnQT& f, int m) {
  for (auto& [fac, k] : f.den)
    for (int i = 0; i < m; ++i)
      if (fac.depends_on(vx(i)))
        throw internal_error("operator result is not polynomial in x");
  std::map<Mono, RationalFnQT, MonoLess> xp;
  RationalFnQT den_inv = RationalFnQT(1L);
  for (auto& [fac, k] : f.den) den_inv /= RationalFnQT(fac).pow(k);
  for (auto& [mono, cc] : f.num.t) {
    Mono xpart, rest;
    for (auto& [v, k] : mono.e) {
      bool isx = v >= VX0 && v < VX0 + NXMAX;
      (isx ? xpart : rest) = (isx ? xpart : rest) * Mono::var(v, k);
    }
    RationalFnQT add = RationalFnQT(MPoly::term(cc, rest)) * den_inv;
    auto it = xp.find(xpart);
    if (it == xp.end()) xp.emplace(xpart, add);
    else it->second += add;
  }
  return SymPoly::from_xpoly(m, xp);
}

}  // namespace

SymPoly macdonald_operator(int r, const SymPoly& f) {
  int m = f.m;
  if (r < 0 || r > m) throw domain_error("macdonald_operator: order out of range");
  if (r == 0) return f;
  auto xp = f.to_xpoly();
  const RationalFnQT t = RationalFnQT::var(VT);
  RationalFnQT acc(0L);
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    if (__builtin_popcount(mask) != r) continue;
    RationalFnQT pref = qt_mono(0, r * (r - 1) / 2);
    for (int i = 0; i < m; ++i) {
      if (!(mask >> i & 1)) continue;
      for (int j = 0; j < m; ++j) {
        if (mask >> j & 1) continue;
        pref *= (t * RationalFnQT::var(vx(i)) - RationalFnQT::var(vx(j))) /
                (RationalFnQT::var(vx(i)) - RationalFnQT::var(vx(j)));
      }
    }
    // T_{q,x_i} for i in mask: multiply each coefficient by q^{deg_i}
    RationalFnQT shifted(0L);
    for (auto& [mono, v] : xp) {
      int qshift = 0;
      for (auto& [var, k] : mono.e)
        if (mask >> (var - VX0) & 1) qshift += k;
      shifted += v * qt_mono(qshift, 0) * RationalFnQT(MPoly::term(BigRat(1), mono));
    }
    acc += pref * shifted;
  }
  return rf_to_sympoly(acc, m);
}

SymPoly macdonald_operator_series(const RationalFnQT& u, const SymPoly& f) {
  SymPoly acc(f.m);
  for (int r = 0; r <= f.m; ++r) {
    SymPoly d = macdonald_operator(r, f);
    RationalFnQT s = (RationalFnQT(0L) - u).pow(r);
    d *= s;
    acc += d;
  }
  return acc;
}

RationalFnQT macdonald_eigenvalue(const RationalFnQT& u, const Partition& lam, int m) {
  RationalFnQT g(1L);
  for (int i = 1; i <= m; ++i)
    g *= RationalFnQT(1L) - u * qt_mono(lam.part(i), m - i);
  return g;
}

}  // namespace qtsym
