#include "qtsym/series.hpp"

#include <algorithm>
#include <sstream>

namespace qtsym {

TruncSeries TruncSeries::constant(std::vector<uint8_t> vs, int cap, const RationalFnQT& v) {
  TruncSeries s(std::move(vs), cap);
  if (!v.is_zero()) s.c[Mono{}] = v;
  return s;
}

bool TruncSeries::in_scope(const Mono& m) const {
  if (m.degree() > cap) return false;
  for (auto& [v, k] : m.e)
    if (!std::binary_search(vars.begin(), vars.end(), v)) return false;
  return true;
}

void TruncSeries::add_term(const Mono& m, const RationalFnQT& v) {
  if (m.degree() > cap || v.is_zero()) return;
  auto it = c.find(m);
  if (it == c.end()) {
    c.emplace(m, v);
  } else {
    it->second += v;
    if (it->second.is_zero()) c.erase(it);
  }
}

RationalFnQT TruncSeries::coeff(const Mono& m) const {
  auto it = c.find(m);
  return it == c.end() ? RationalFnQT(0L) : it->second;
}

bool TruncSeries::is_zero() const {
  for (auto& [m, v] : c)
    if (!v.is_zero()) return false;
  return true;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
  for (auto& [m, v] : o.c) add_term(m, v);
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
  for (auto& [m, v] : o.c) add_term(m, RationalFnQT(0L) - v);
  return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  TruncSeries r(a.vars, std::min(a.cap, b.cap));
  for (auto& [ma, va] : a.c) {
    if (ma.degree() > r.cap) continue;
    for (auto& [mb, vb] : b.c) {
      if (ma.degree() + mb.degree() > r.cap) continue;
      r.add_term(ma * mb, va * vb);
    }
  }
  return r;
}

TruncSeries& TruncSeries::operator*=(const RationalFnQT& s) {
  if (s.is_zero()) {
    c.clear();
    return *this;
  }
  for (auto& [m, v] : c) v *= s;
  return *this;
}

TruncSeries TruncSeries::pow(int k) const {
  if (k < 0) throw domain_error("TruncSeries::pow negative");
  TruncSeries r = TruncSeries::constant(vars, cap, RationalFnQT(1L));
  TruncSeries base = *this;
  while (k) {
    if (k & 1) r = r * base;
    if (k >>= 1) base = base * base;
  }
  return r;
}

TruncSeries TruncSeries::inverse() const {
  RationalFnQT c0 = coeff(Mono{});
  if (c0.is_zero()) throw pole_error("series inverse: zero constant term");
  // this = c0 (1 - g), g has positive degree
  TruncSeries g(vars, cap);
  RationalFnQT inv_c0 = RationalFnQT(1L) / c0;
  for (auto& [m, v] : c) {
    if (m.empty()) continue;
    g.add_term(m, RationalFnQT(0L) - v * inv_c0);
  }
  TruncSeries acc = TruncSeries::constant(vars, cap, RationalFnQT(1L));
  TruncSeries p = TruncSeries::constant(vars, cap, RationalFnQT(1L));
  for (int k = 1; k <= cap; ++k) {
    p = p * g;
    if (p.c.empty()) break;
    acc += p;
  }
  acc *= inv_c0;
  return acc;
}

std::optional<Mono> TruncSeries::first_difference(const TruncSeries& a, const TruncSeries& b) {
  int cap = std::min(a.cap, b.cap);
  std::vector<Mono> keys;
  for (auto& [m, v] : a.c)
    if (m.degree() <= cap) keys.push_back(m);
  for (auto& [m, v] : b.c)
    if (m.degree() <= cap && a.c.find(m) == a.c.end()) keys.push_back(m);
  std::sort(keys.begin(), keys.end(), mono_less);
  for (auto& m : keys)
    if (!(a.coeff(m) == b.coeff(m))) return m;
  return std::nullopt;
}

std::string TruncSeries::str() const {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, v] : c) {
    if (!first) os << " + ";
    first = false;
    os << "(" << v.str() << ")";
    for (auto& [var, k] : m.e) {
      os << "*" << var_name(var);
      if (k != 1) os << "^" << k;
    }
  }
  return os.str();
}

static TruncSeries poly_to_series(const MPoly& p, const std::vector<uint8_t>& vars, int cap) {
  TruncSeries s(vars, cap);
  for (auto& [m, cc] : p.t) {
    Mono expansion, param;
    for (auto& [v, k] : m.e) {
      if (std::binary_search(vars.begin(), vars.end(), v))
        expansion = expansion * Mono::var(v, k);
      else
        param = param * Mono::var(v, k);
    }
    if (expansion.degree() > cap) continue;
    s.add_term(expansion, RationalFnQT(MPoly::term(cc, param)));
  }
  return s;
}

TruncSeries series_from_rational(const RationalFnQT& f, std::vector<uint8_t> vars, int cap) {
  TruncSeries num = poly_to_series(f.num, vars, cap);
  TruncSeries den = TruncSeries::constant(vars, cap, RationalFnQT(1L));
  for (auto& [fac, k] : f.den) {
    TruncSeries fs = poly_to_series(fac, vars, cap);
    for (int i = 0; i < k; ++i) den = den * fs;
  }
  return num * den.inverse();
}

static void require_no_constant(const TruncSeries& arg) {
  if (!arg.coeff(Mono{}).is_zero())
    throw domain_error("series argument must have zero constant term");
}

TruncSeries series_pochhammer(const TruncSeries& arg) {
  require_no_constant(arg);
  TruncSeries acc = TruncSeries::constant(arg.vars, arg.cap, RationalFnQT(1L));
  TruncSeries p = acc;
  RationalFnQT qq(1L);
  for (int k = 1; k <= arg.cap; ++k) {
    p = p * arg;
    if (p.c.empty()) break;
    qq *= RationalFnQT(1L) - RationalFnQT::var(VQ, k);  // (q;q)_k
    RationalFnQT coeff = qt_mono(k * (k - 1) / 2, 0) / qq;
    if (k % 2) coeff = RationalFnQT(0L) - coeff;
    TruncSeries term = p;
    term *= coeff;
    acc += term;
  }
  return acc;
}

TruncSeries series_inv_pochhammer(const TruncSeries& arg) {
  require_no_constant(arg);
  TruncSeries acc = TruncSeries::constant(arg.vars, arg.cap, RationalFnQT(1L));
  TruncSeries p = acc;
  RationalFnQT qq(1L);
  for (int k = 1; k <= arg.cap; ++k) {
    p = p * arg;
    if (p.c.empty()) break;
    qq *= RationalFnQT(1L) - RationalFnQT::var(VQ, k);
    TruncSeries term = p;
    term *= RationalFnQT(1L) / qq;
    acc += term;
  }
  return acc;
}

TruncSeries series_geometric(const TruncSeries& arg) {
  require_no_constant(arg);
  TruncSeries acc = TruncSeries::constant(arg.vars, arg.cap, RationalFnQT(1L));
  TruncSeries p = acc;
  for (int k = 1; k <= arg.cap; ++k) {
    p = p * arg;
    if (p.c.empty()) break;
    acc += p;
  }
  return acc;
}

TruncSeries series_term(std::vector<uint8_t> vars, int cap, const RationalFnQT& coeff,
                        const Mono& m) {
  TruncSeries s(std::move(vars), cap);
  s.add_term(m, coeff);
  return s;
}

}  // namespace qtsym
