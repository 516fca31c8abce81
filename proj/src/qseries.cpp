#include "qtsym/qseries.hpp"

#include <sstream>

namespace qtsym {

std::vector<AlphaEntry> alphabet_formal_x(int m) {
  std::vector<AlphaEntry> a;
  for (int i = 0; i < m; ++i) a.push_back({RationalFnQT(1L), Mono::var(vx(i))});
  return a;
}

std::vector<AlphaEntry> alphabet_formal_y(int n) {
  std::vector<AlphaEntry> a;
  for (int j = 0; j < n; ++j) a.push_back({RationalFnQT(1L), Mono::var(vy(j))});
  return a;
}

std::vector<AlphaEntry> alphabet_principal_z(int n) {
  std::vector<AlphaEntry> a;
  for (int j = 0; j < n; ++j) a.push_back({qt_mono(0, j), Mono::var(VZ)});
  return a;
}

std::vector<AlphaEntry> alphabet_zero(int n) {
  return std::vector<AlphaEntry>(n, {RationalFnQT(0L), Mono{}});
}

std::vector<AlphaEntry> scale_alphabet(std::vector<AlphaEntry> a, const RationalFnQT& s) {
  for (auto& e : a) e.first *= s;
  return a;
}

RationalFnQT poch_ratio(const SeriesParams& p, const Partition& mu) {
  RationalFnQT r(1L);
  for (const RationalFnQT& a : p.upper) r *= gen_poch(a, mu);
  for (const RationalFnQT& b : p.lower) {
    RationalFnQT g = gen_poch(b, mu);
    if (g.is_zero())
      throw domain_error("lower series parameter vanishes at partition " + mu.str());
    r /= g;
  }
  return r;
}

TruncSeries series_poch_prod(std::vector<uint8_t> vars, int cap,
                             const std::vector<AlphaEntry>& num_args,
                             const std::vector<AlphaEntry>& den_args) {
  TruncSeries s = TruncSeries::constant(vars, cap, RationalFnQT(1L));
  for (const auto& [cf, mono] : num_args) {
    if (cf.is_zero()) continue;
    s *= series_pochhammer(series_term(vars, cap, cf, mono));
  }
  for (const auto& [cf, mono] : den_args) {
    if (cf.is_zero()) continue;
    s *= series_inv_pochhammer(series_term(vars, cap, cf, mono));
  }
  return s;
}

TruncSeries sl2_series(const SeriesParams& p, const std::vector<AlphaEntry>& x,
                       std::vector<uint8_t> vars, int cap) {
  if (p.lower.size() + 1 != p.upper.size())
    throw domain_error("series needs one more upper than lower parameter");
  const int m = static_cast<int>(x.size());
  TruncSeries acc(vars, cap);
  for (int w = 0; w <= cap; ++w)
    for (const Partition& lam : partitions_of(w, m)) {
      RationalFnQT coeff =
          qt_mono(0, lam.n_stat()) * poch_ratio(p, lam) / hook_cprime(lam);
      if (coeff.is_zero()) continue;
      TruncSeries term = macdonald_P(lam, m).to_series(x, vars, cap);
      term *= coeff;
      acc += term;
    }
  return acc;
}

bool interlaces(const Partition& lam, const Partition& mu, int m, int n) {
  if (lam.length() > m || mu.length() > n) return false;
  for (int i = 1; i <= m; ++i)
    if (lam.part(i) < mu.part(i + n - m)) return false;
  return true;
}

std::vector<std::pair<Partition, Partition>> interlaced_pairs(int m, int n, int wcap) {
  std::vector<std::pair<Partition, Partition>> out;
  for (int wl = 0; wl <= wcap; ++wl)
    for (const Partition& lam : partitions_of(wl, m))
      for (int wm = 0; wm + wl <= wcap; ++wm)
        for (const Partition& mu : partitions_of(wm, n))
          if (interlaces(lam, mu, m, n)) out.push_back({lam, mu});
  return out;
}

TruncSeries sl3_series(const SeriesParams& p, int m, int n, const std::vector<AlphaEntry>& x,
                       const std::vector<AlphaEntry>& y, std::vector<uint8_t> vars, int cap) {
  if (p.lower.size() + 1 != p.upper.size())
    throw domain_error("series needs one more upper than lower parameter");
  if (m > n || m < 0) throw domain_error("alphabet sizes must satisfy 0 <= m <= n");
  if (static_cast<int>(x.size()) != m || static_cast<int>(y.size()) != n)
    throw domain_error("alphabet size mismatch");

  std::vector<AlphaEntry> shifted;
  for (const auto& e : x) shifted.push_back({e.first * qt_mono(0, m - n - 1), e.second});
  TruncSeries pref = series_poch_prod(vars, cap, x, shifted);

  TruncSeries acc(vars, cap);
  for (const auto& [lam, mu] : interlaced_pairs(m, n, cap)) {
    if (!interlaces(lam, mu, m, n)) throw internal_error("invalid pair emitted");
    ExtVal om = Omega_kernel(p.sigma, lam, mu, m, n);
    if (om.is_zero()) continue;
    RationalFnQT coeff = qt_mono(0, lam.n_stat() + mu.n_stat()) * poch_ratio(p, mu) *
                         om.value() / (hook_cprime(lam) * hook_cprime(mu));
    if (coeff.is_zero()) continue;
    TruncSeries term = macdonald_P(lam, m).to_series(x, vars, cap);
    term *= macdonald_P(mu, n).to_series(y, vars, cap);
    term *= coeff;
    acc += term;
  }
  return pref * acc;
}

VerifyResult compare_series(const TruncSeries& lhs, const TruncSeries& rhs) {
  VerifyResult r;
  if (auto d = TruncSeries::first_difference(lhs, rhs)) {
    std::ostringstream os;
    os << "coefficient of ";
    if (d->empty()) {
      os << "1";
    } else {
      bool first = true;
      for (auto& [v, k] : d->e) {
        if (!first) os << "*";
        first = false;
        os << var_name(v);
        if (k != 1) os << "^" << k;
      }
    }
    os << ": lhs = " << lhs.coeff(*d).str() << ", rhs = " << rhs.coeff(*d).str();
    r.ok = false;
    r.detail = os.str();
  }
  return r;
}

namespace {

VerifyResult compare_rational(const RationalFnQT& lhs, const RationalFnQT& rhs) {
  VerifyResult r;
  if (!(lhs == rhs)) {
    r.ok = false;
    r.detail = "lhs = " + lhs.str() + ", rhs = " + rhs.str();
  }
  return r;
}

// V_{lam mu}(u, 1) with u formal; z kept formal through the subset sum so
// term poles at z = 1 cancel before substituting.
RationalFnQT V_u_z1(const Partition& lam, const Partition& mu, int m, int n) {
  return V_explicit(lam, mu, m, n, RationalFnQT::var(VU), RationalFnQT::var(VZ))
      .subst(VZ, BigRat(1));
}

RationalFnQT u0_P(const Partition& mu, int n) {
  return eval_u(macdonald_P(mu, n), Partition(), RationalFnQT(1L), n);
}

std::vector<uint8_t> var_list_x(int m, bool with_z) {
  std::vector<uint8_t> v;
  if (with_z) v.push_back(VZ);
  for (int i = 0; i < m; ++i) v.push_back(static_cast<uint8_t>(vx(i)));
  return v;
}

std::vector<uint8_t> var_list_xy(int m, int n) {
  std::vector<uint8_t> v;
  for (int i = 0; i < m; ++i) v.push_back(static_cast<uint8_t>(vx(i)));
  for (int j = 0; j < n; ++j) v.push_back(static_cast<uint8_t>(vy(j)));
  return v;
}

std::vector<uint8_t> var_list_y(int n, bool with_z) {
  std::vector<uint8_t> v;
  if (with_z) v.push_back(VZ);
  for (int j = 0; j < n; ++j) v.push_back(static_cast<uint8_t>(vy(j)));
  return v;
}

// Generic 2-parameter upper/lower data used where the identity holds for
// arbitrary parameters: a stays formal, the rest are generic rationals.
SeriesParams generic_2phi1(int sigma) {
  return SeriesParams({RationalFnQT::var(VA), RationalFnQT(BigRat(2))},
                      {RationalFnQT(BigRat(1, 3))}, sigma);
}

}  // namespace

VerifyResult verify_lr_kernel_identity(const Partition& lam, const Partition& mu, int m, int n) {
  if (lam.length() > m || mu.length() > n || m > n)
    throw domain_error("invalid partition/alphabet data");

  RationalFnQT lhs(0L);
  for (const Partition& om : partitions_in_box(lam.length(), lam.empty() ? 0 : lam.part(1))) {
    if (!lam.contains(om) || !mu.contains(om)) continue;
    RationalFnQT skew = eval_u(skew_P(mu, om, n - m), Partition(), RationalFnQT(1L), n - m);
    if (skew.is_zero()) continue;
    for (const Partition& nu : partitions_of(lam.weight() - om.weight(), m)) {
      if (!lam.contains(nu)) continue;
      const auto& exp = lr_expand(om, nu);
      auto it = exp.find(lam);
      if (it == exp.end() || it->second.is_zero()) continue;
      RationalFnQT term = qt_mono(0, nu.n_stat()) * qt_mono(0, -om.weight()) * it->second;
      term *= V_u_z1(nu, Partition(), m, n) * skew;
      term *= gen_poch(qt_mono(1, m - n - 1), nu) / hook_cprime(nu);
      lhs += term;
    }
  }

  ExtVal rhs = ExtVal::from(qt_mono(0, lam.n_stat() - long(m) * mu.weight()));
  rhs *= ExtVal::from(V_u_z1(lam, mu, m, n));
  rhs *= ExtVal::from(u0_P(mu, n));
  rhs *= ExtVal::from(gen_poch(qt_mono(1, m - 1), lam) / hook_cprime(lam));
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) {
      int d = lam.part(i) - mu.part(j);
      rhs *= qpoch_ext(qt_mono(1, j - i + m - n - 1), d);
      rhs /= qpoch_ext(qt_mono(1, j - i + m - n), d);
    }
  RationalFnQT rhs_val = rhs.is_zero() ? RationalFnQT(0L) : rhs.value();

  VerifyResult r = compare_rational(lhs, rhs_val);
  if (r.ok && !interlaces(lam, mu, m, n) && !(lhs.is_zero() && rhs_val.is_zero())) {
    r.ok = false;
    r.detail = "sides nonzero although the interlacing condition fails";
  }
  return r;
}

VerifyResult verify_qbinomial_first(int m, int n, int sigma, int cap) {
  SeriesParams p({RationalFnQT::var(VA)}, {}, sigma);
  auto vars = var_list_x(m, true);
  TruncSeries lhs =
      sl3_series(p, m, n, alphabet_formal_x(m), alphabet_principal_z(n), vars, cap);

  const RationalFnQT a = RationalFnQT::var(VA);
  std::vector<AlphaEntry> num, den;
  for (int i = 0; i < m; ++i) {
    Mono zx = Mono::var(VZ) * Mono::var(vx(i));
    num.push_back({a * qt_mono(-sigma, m - 1), zx});
    den.push_back({qt_mono(-sigma, m - 1), zx});
  }
  for (int i = 1; i <= n - m; ++i) {
    num.push_back({a * qt_mono(0, n - i), Mono::var(VZ)});
    den.push_back({qt_mono(0, n - i), Mono::var(VZ)});
  }
  TruncSeries rhs = series_poch_prod(vars, cap, num, den);
  return compare_series(lhs, rhs);
}

VerifyResult verify_qbinomial_second(int n, int sigma, int cap) {
  SeriesParams p({RationalFnQT::var(VA)}, {}, sigma);
  auto vars = var_list_y(n, true);
  TruncSeries lhs =
      sl3_series(p, n, n, alphabet_principal_z(n), alphabet_formal_y(n), vars, cap);

  const RationalFnQT a = RationalFnQT::var(VA);
  std::vector<AlphaEntry> num, den;
  for (int i = 0; i < n; ++i) {
    Mono zy = Mono::var(VZ) * Mono::var(vy(i));
    num.push_back({a * qt_mono(-sigma, n - 1), zy});
    den.push_back({qt_mono(-sigma, n - 1), zy});
  }
  TruncSeries rhs = series_poch_prod(vars, cap, num, den);
  return compare_series(lhs, rhs);
}

VerifyResult verify_prop_yX(int m, int n, int sigma, int cap) {
  SeriesParams p = generic_2phi1(sigma);
  auto vars = var_list_xy(m, n);
  TruncSeries lhs = sl3_series(p, m, n, alphabet_formal_x(m), alphabet_formal_y(n), vars, cap);

  std::vector<AlphaEntry> X;
  for (int i = 0; i < m; ++i) X.push_back({qt_mono(-sigma, -1), Mono::var(vx(i))});
  for (int i = m + 1; i <= n; ++i) X.push_back({qt_mono(0, n - i), Mono{}});

  TruncSeries rhs(vars, cap);
  for (int w = 0; w <= cap; ++w)
    for (const Partition& mu : partitions_of(w, n)) {
      RationalFnQT coeff = qt_mono(0, mu.n_stat() + long(m) * mu.weight()) *
                           poch_ratio(p, mu) / (hook_cprime(mu) * u0_P(mu, n));
      TruncSeries term = macdonald_P(mu, n).to_series(alphabet_formal_y(n), vars, cap);
      term *= macdonald_P(mu, n).to_series(X, vars, cap);
      term *= coeff;
      rhs += term;
    }
  return compare_series(lhs, rhs);
}

VerifyResult verify_principal_collapse(const SeriesParams& p, int m, int n, int cap) {
  auto vars = var_list_x(m, true);
  TruncSeries lhs =
      sl3_series(p, m, n, alphabet_formal_x(m), alphabet_principal_z(n), vars, cap);

  // z t^m X as series alphabet entries
  std::vector<AlphaEntry> ztX;
  for (int i = 0; i < m; ++i)
    ztX.push_back({qt_mono(-p.sigma, m - 1), Mono::var(VZ) * Mono::var(vx(i))});
  for (int i = m + 1; i <= n; ++i) ztX.push_back({qt_mono(0, m + n - i), Mono::var(VZ)});
  TruncSeries rhs = sl2_series(p, ztX, vars, cap);
  return compare_series(lhs, rhs);
}

VerifyResult verify_swap_symmetry(int n, int sigma, int cap) {
  SeriesParams p = generic_2phi1(sigma);
  auto vars = var_list_xy(n, n);
  TruncSeries s1 = sl3_series(p, n, n, alphabet_formal_x(n), alphabet_formal_y(n), vars, cap);
  TruncSeries s2 = sl3_series(p, n, n, alphabet_formal_y(n), alphabet_formal_x(n), vars, cap);
  return compare_series(s1, s2);
}

VerifyResult verify_euler_transform(const RationalFnQT& a, const RationalFnQT& b,
                                    const RationalFnQT& c, int m, int n, int sigma, int cap) {
  auto vars = var_list_x(m, true);
  SeriesParams p1({a, b}, {c}, sigma);
  TruncSeries lhs =
      sl3_series(p1, m, n, alphabet_formal_x(m), alphabet_principal_z(n), vars, cap);

  SeriesParams p2({c / a, c / b}, {c}, sigma);
  const RationalFnQT abc = a * b / c;
  TruncSeries rhs = sl3_series(p2, m, n, alphabet_formal_x(m),
                               scale_alphabet(alphabet_principal_z(n), abc), vars, cap);
  std::vector<AlphaEntry> num, den;
  for (int i = 0; i < m; ++i) {
    Mono zx = Mono::var(VZ) * Mono::var(vx(i));
    num.push_back({abc * qt_mono(-sigma, m - 1), zx});
    den.push_back({qt_mono(-sigma, m - 1), zx});
  }
  for (int i = 1; i <= n - m; ++i) {
    num.push_back({abc * qt_mono(0, n - i), Mono::var(VZ)});
    den.push_back({qt_mono(0, n - i), Mono::var(VZ)});
  }
  rhs *= series_poch_prod(vars, cap, num, den);
  return compare_series(lhs, rhs);
}

VerifyResult verify_generalized_2phi1(int m, const RationalFnQT& a, const RationalFnQT& u,
                                      int cap) {
  auto vars = var_list_x(m, false);
  const RationalFnQT q = RationalFnQT::var(VQ);
  SeriesParams p({a, u * q * qt_mono(0, m - 1)}, {u * qt_mono(0, m - 1)}, 0);
  TruncSeries lhs = sl2_series(p, alphabet_formal_x(m), vars, cap);
  RationalFnQT g0(1L);
  for (int i = 1; i <= m; ++i) g0 *= RationalFnQT(1L) - u * qt_mono(0, m - i);
  lhs *= g0;

  std::vector<AlphaEntry> num, den;
  for (int i = 0; i < m; ++i) {
    num.push_back({a, Mono::var(vx(i))});
    den.push_back({RationalFnQT(1L), Mono::var(vx(i))});
  }
  TruncSeries rhs = series_poch_prod(vars, cap, num, den);
  std::vector<RationalFnQT> xs;
  for (int i = 0; i < m; ++i) xs.push_back(RationalFnQT::var(vx(i)));
  rhs *= series_from_rational(F_eps_subset(u, xs, a, RationalFnQT::var(VT)), vars, cap);
  return compare_series(lhs, rhs);
}

VerifyResult verify_y_zero(int m, int n, int sigma, int cap) {
  SeriesParams p = generic_2phi1(sigma);
  auto vars = var_list_x(m, false);
  TruncSeries s = sl3_series(p, m, n, alphabet_formal_x(m), alphabet_zero(n), vars, cap);
  return compare_series(s, TruncSeries::constant(vars, cap, RationalFnQT(1L)));
}

VerifyResult verify_a1_one(int m, int n, int sigma, int cap) {
  SeriesParams p({RationalFnQT(1L), RationalFnQT::var(VA)}, {RationalFnQT(BigRat(1, 3))},
                 sigma);
  auto vars = var_list_xy(m, n);
  TruncSeries s = sl3_series(p, m, n, alphabet_formal_x(m), alphabet_formal_y(n), vars, cap);
  return compare_series(s, TruncSeries::constant(vars, cap, RationalFnQT(1L)));
}

VerifyResult verify_stability1(int m, int n, int sigma, int cap) {
  if (m < 1 || n < 2) throw domain_error("stability needs m >= 1, n >= 2");
  SeriesParams p = generic_2phi1(sigma);
  auto vars = var_list_x(m - 1, true);
  std::vector<AlphaEntry> x = alphabet_formal_x(m - 1);
  x.push_back({RationalFnQT(0L), Mono{}});
  // left: y_j = z t^{n-j}; right: (m-1, n-1) alphabets with y_j = tz t^{n-1-j}
  std::vector<AlphaEntry> yl;
  for (int j = 1; j <= n; ++j) yl.push_back({qt_mono(0, n - j), Mono::var(VZ)});
  TruncSeries lhs = sl3_series(p, m, n, x, yl, vars, cap);
  std::vector<AlphaEntry> yr;
  for (int j = 1; j <= n - 1; ++j) yr.push_back({qt_mono(0, n - j), Mono::var(VZ)});
  TruncSeries rhs = sl3_series(p, m - 1, n - 1, alphabet_formal_x(m - 1), yr, vars, cap);
  return compare_series(lhs, rhs);
}

VerifyResult verify_stability2(int m, int n, int sigma, int cap) {
  if (m < 1 || n < 2) throw domain_error("stability needs m >= 1, n >= 2");
  SeriesParams p = generic_2phi1(sigma);
  auto vars = var_list_xy(m - 1, n - 1);
  std::vector<AlphaEntry> x = alphabet_formal_x(m - 1);
  x.push_back({RationalFnQT(0L), Mono{}});
  std::vector<AlphaEntry> y = alphabet_formal_y(n - 1);
  y.push_back({RationalFnQT(0L), Mono{}});
  TruncSeries lhs = sl3_series(p, m, n, x, y, vars, cap);

  SeriesParams p2 = p;
  p2.upper.insert(p2.upper.begin(), qt_mono(0, n - 1));
  p2.lower.insert(p2.lower.begin(), qt_mono(0, n));
  TruncSeries rhs =
      sl3_series(p2, m - 1, n - 1, alphabet_formal_x(m - 1),
                 scale_alphabet(alphabet_formal_y(n - 1), qt_mono(0, 1)), vars, cap);
  return compare_series(lhs, rhs);
}

VerifyResult verify_stability_iterated1(int m, int n, int sigma, int cap) {
  SeriesParams p = generic_2phi1(sigma);
  std::vector<uint8_t> vars{VZ};
  std::vector<AlphaEntry> yl;
  for (int j = 1; j <= n; ++j) yl.push_back({qt_mono(0, n - j), Mono::var(VZ)});
  TruncSeries lhs = sl3_series(p, m, n, alphabet_zero(m), yl, vars, cap);
  std::vector<AlphaEntry> yr;
  for (int j = 1; j <= n - m; ++j) yr.push_back({qt_mono(0, n - j), Mono::var(VZ)});
  TruncSeries rhs = sl2_series(p, yr, vars, cap);
  return compare_series(lhs, rhs);
}

VerifyResult verify_stability_iterated2(int m, int n, int sigma, int cap) {
  SeriesParams p = generic_2phi1(sigma);
  auto vars = var_list_y(n - m, false);
  std::vector<AlphaEntry> y = alphabet_formal_y(n - m);
  for (int i = 0; i < m; ++i) y.push_back({RationalFnQT(0L), Mono{}});
  TruncSeries lhs = sl3_series(p, m, n, alphabet_zero(m), y, vars, cap);

  SeriesParams p2 = p;
  p2.upper.insert(p2.upper.begin(), qt_mono(0, n - m));
  p2.lower.insert(p2.lower.begin(), qt_mono(0, n));
  TruncSeries rhs = sl2_series(
      p2, scale_alphabet(alphabet_formal_y(n - m), qt_mono(0, m)), vars, cap);
  return compare_series(lhs, rhs);
}

}  // namespace qtsym
