#include "qtsym/rational.hpp"

#include <algorithm>
#include <sstream>

namespace qtsym {

std::string var_name(int v) {
  if (v == VQ) return "q";
  if (v == VT) return "t";
  if (v == VU) return "u";
  if (v == VZ) return "z";
  if (v == VA) return "a";
  if (v >= VX0 && v < VX0 + NXMAX) return "x" + std::to_string(v - VX0 + 1);
  if (v >= VY0 && v < VY0 + NYMAX) return "y" + std::to_string(v - VY0 + 1);
  throw domain_error("bad variable id");
}

Mono operator*(const Mono& a, const Mono& b) {
  Mono r;
  r.e.reserve(a.e.size() + b.e.size());
  size_t i = 0, j = 0;
  while (i < a.e.size() || j < b.e.size()) {
    if (j == b.e.size() || (i < a.e.size() && a.e[i].first < b.e[j].first)) {
      r.e.push_back(a.e[i++]);
    } else if (i == a.e.size() || b.e[j].first < a.e[i].first) {
      r.e.push_back(b.e[j++]);
    } else {
      int32_t k = a.e[i].second + b.e[j].second;
      if (k != 0) r.e.push_back({a.e[i].first, k});
      ++i, ++j;
    }
  }
  return r;
}

std::optional<Mono> Mono::quotient(const Mono& a, const Mono& b) {
  Mono r;
  size_t i = 0, j = 0;
  while (j < b.e.size()) {
    if (i == a.e.size()) return std::nullopt;
    if (a.e[i].first < b.e[j].first) {
      r.e.push_back(a.e[i++]);
    } else if (a.e[i].first > b.e[j].first) {
      return std::nullopt;
    } else {
      int32_t k = a.e[i].second - b.e[j].second;
      if (k < 0) return std::nullopt;
      if (k > 0) r.e.push_back({a.e[i].first, k});
      ++i, ++j;
    }
  }
  while (i < a.e.size()) r.e.push_back(a.e[i++]);
  return r;
}

bool mono_less(const Mono& a, const Mono& b) {
  int64_t da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  size_t i = 0, j = 0;
  while (i < a.e.size() || j < b.e.size()) {
    int va = i < a.e.size() ? a.e[i].first : 255;
    int vb = j < b.e.size() ? b.e[j].first : 255;
    if (va < vb) return false;  // a has the earlier variable: a is lex-greater
    if (vb < va) return true;
    if (a.e[i].second != b.e[j].second) return a.e[i].second < b.e[j].second;
    ++i, ++j;
  }
  return false;
}

BigRat MPoly::constant_value() const {
  if (t.empty()) return BigRat(0);
  if (!is_constant()) throw internal_error("constant_value on non-constant");
  return t.begin()->second;
}

int64_t MPoly::degree_in(int v) const {
  int64_t d = 0;
  for (auto& [m, c] : t) d = std::max<int64_t>(d, m.exponent(v));
  return d;
}

int64_t MPoly::low_degree_in(int v) const {
  if (t.empty()) return -1;
  int64_t d = INT64_MAX;
  for (auto& [m, c] : t) d = std::min<int64_t>(d, m.exponent(v));
  return d;
}

int MPoly::single_var() const {
  int found = -1;
  for (auto& [m, c] : t)
    for (auto& [v, k] : m.e) {
      if (found == -1) found = v;
      else if (found != v) return -2;
    }
  return found;
}

bool MPoly::depends_on(int v) const {
  for (auto& [m, c] : t)
    if (m.exponent(v) != 0) return true;
  return false;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (auto& [m, c] : o.t) {
    auto it = t.find(m);
    if (it == t.end()) {
      t.emplace(m, c);
    } else {
      it->second += c;
      if (it->second == 0) t.erase(it);
    }
  }
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (auto& [m, c] : o.t) {
    auto it = t.find(m);
    if (it == t.end()) {
      t.emplace(m, -c);
    } else {
      it->second -= c;
      if (it->second == 0) t.erase(it);
    }
  }
  return *this;
}

MPoly operator-(const MPoly& a) {
  MPoly r;
  for (auto& [m, c] : a.t) r.t.emplace(m, -c);
  return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r;
  if (a.t.empty() || b.t.empty()) return r;
  const MPoly& small = a.t.size() <= b.t.size() ? a : b;
  const MPoly& big = a.t.size() <= b.t.size() ? b : a;
  for (auto& [ms, cs] : small.t) {
    for (auto& [mb, cb] : big.t) {
      Mono m = ms * mb;
      auto it = r.t.find(m);
      if (it == r.t.end()) {
        BigRat c = cs * cb;
        if (c != 0) r.t.emplace(std::move(m), std::move(c));
      } else {
        it->second += cs * cb;
        if (it->second == 0) r.t.erase(it);
      }
    }
  }
  return r;
}

MPoly& MPoly::operator*=(const BigRat& c) {
  if (c == 0) {
    t.clear();
    return *this;
  }
  for (auto& [m, v] : t) v *= c;
  return *this;
}

MPoly MPoly::mul_term(const BigRat& c, const Mono& m) const {
  MPoly r;
  if (c == 0) return r;
  for (auto& [mm, cc] : t) r.t.emplace(mm * m, cc * c);
  return r;
}

MPoly MPoly::pow(int64_t k) const {
  if (k < 0) throw domain_error("MPoly::pow negative");
  MPoly r(1L);
  MPoly base = *this;
  while (k) {
    if (k & 1) r = r * base;
    base = (k >>= 1) ? base * base : base;
  }
  return r;
}

std::optional<MPoly> MPoly::exact_divide(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) throw domain_error("division by zero polynomial");
  MPoly rem = a, quot;
  const Mono& ltb = b.t.rbegin()->first;
  const BigRat& lcb = b.t.rbegin()->second;
  while (!rem.is_zero()) {
    const Mono& lta = rem.t.rbegin()->first;
    auto qm = Mono::quotient(lta, ltb);
    if (!qm) return std::nullopt;
    BigRat qc = rem.t.rbegin()->second / lcb;
    quot.t.emplace(*qm, qc);
    rem -= b.mul_term(qc, *qm);
  }
  return quot;
}

MPoly MPoly::rename_var(int from, int to) const {
  MPoly r;
  for (auto& [m, c] : t) {
    Mono nm;
    int32_t moved = 0;
    for (auto& [v, k] : m.e) {
      if (v == from) moved = k;
      else nm = nm * Mono::var(v, k);
    }
    if (moved) nm = nm * Mono::var(to, moved);
    r += MPoly::term(c, nm);
  }
  return r;
}

MPoly MPoly::subst(int v, const BigRat& val) const {
  MPoly r;
  for (auto& [m, c] : t) {
    Mono nm;
    int32_t k = 0;
    for (auto& [w, e] : m.e) {
      if (w == v) k = e;
      else nm = nm * Mono::var(w, e);
    }
    BigRat c2 = c;
    for (int32_t i = 0; i < k; ++i) c2 *= val;
    r += MPoly::term(c2, nm);
  }
  return r;
}

BigRat MPoly::eval(const std::vector<BigRat>& vals) const {
  BigRat acc(0);
  for (auto& [m, c] : t) {
    BigRat term = c;
    for (auto& [v, k] : m.e) {
      if (v >= vals.size()) throw domain_error("eval: missing value for " + var_name(v));
      BigRat p(1);
      BigRat base = vals[v];
      for (int32_t i = 0; i < k; ++i) p *= base;
      term *= p;
    }
    acc += term;
  }
  return acc;
}

BigRat MPoly::make_primitive() {
  if (t.empty()) return BigRat(1);
  mpz_class num_gcd(0), den_lcm(1);
  for (auto& [m, c] : t) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  BigRat s(num_gcd, den_lcm);
  s.canonicalize();
  if (t.rbegin()->second < 0) s = -s;
  BigRat inv = 1 / s;
  for (auto& [m, c] : t) c *= inv;
  return s;
}

std::string MPoly::str() const {
  if (t.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = t.rbegin(); it != t.rend(); ++it) {
    BigRat c = it->second;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    bool need_coeff = (c != 1) || it->first.empty();
    if (need_coeff) os << c.get_str();
    bool started = !need_coeff ? false : true;
    for (auto& [v, k] : it->first.e) {
      if (started) os << "*";
      os << var_name(v);
      if (k != 1) os << "^" << k;
      started = true;
    }
  }
  return os.str();
}

bool poly_less(const MPoly& a, const MPoly& b) {
  auto ia = a.t.begin(), ib = b.t.begin();
  for (; ia != a.t.end() && ib != b.t.end(); ++ia, ++ib) {
    if (mono_less(ia->first, ib->first)) return true;
    if (mono_less(ib->first, ia->first)) return false;
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return ia == a.t.end() && ib != b.t.end();
}

MPoly gcd_univariate(MPoly a, MPoly b) {
  int va = a.single_var(), vb = b.single_var();
  if (va == -2 || vb == -2 || (va >= 0 && vb >= 0 && va != vb))
    throw domain_error("gcd_univariate: not univariate in a common variable");
  auto lead = [](const MPoly& p) { return p.t.rbegin(); };
  while (!b.is_zero()) {
    // remainder of a by b
    MPoly r = a;
    int64_t db = b.degree();
    while (!r.is_zero() && r.degree() >= db) {
      auto qm = Mono::quotient(lead(r)->first, lead(b)->first);
      if (!qm) break;  // can only happen via different vars; guarded above
      BigRat qc = lead(r)->second / lead(b)->second;
      r -= b.mul_term(qc, *qm);
    }
    a = b;
    b = r;
  }
  a.make_primitive();
  return a;
}

RationalFnQT RationalFnQT::var(int v, int32_t k) {
  RationalFnQT r(1L);
  if (k >= 0) {
    r.num = MPoly::var(v, k);
  } else {
    r.num = MPoly(1L);
    r.push_den_factor(MPoly::var(v, -k), 1);
  }
  return r;
}

RationalFnQT::RationalFnQT(const MPoly& n, const MPoly& d) {
  if (d.is_zero()) throw domain_error("rational function with zero denominator");
  num = n;
  MPoly dd = d;
  BigRat s = dd.make_primitive();
  num *= 1 / s;
  if (!dd.is_constant()) push_den_factor(std::move(dd), 1);
  reduce();
}

void RationalFnQT::push_den_factor(MPoly f, int k) {
  if (k == 0) return;
  BigRat s = f.make_primitive();
  if (f.is_constant()) {
    BigRat v = f.constant_value() * s;
    BigRat inv(1);
    for (int i = 0; i < k; ++i) inv *= v;
    num *= 1 / inv;
    return;
  }
  BigRat inv(1);
  for (int i = 0; i < k; ++i) inv *= s;
  num *= 1 / inv;
  den[std::move(f)] += k;
}

void RationalFnQT::reduce() {
  if (num.is_zero()) {
    den.clear();
    return;
  }
  for (auto it = den.begin(); it != den.end();) {
    while (it->second > 0 && num.degree() >= it->first.degree()) {
      auto q = MPoly::exact_divide(num, it->first);
      if (!q) break;
      num = std::move(*q);
      --it->second;
    }
    if (it->second == 0) it = den.erase(it);
    else ++it;
  }
}

bool RationalFnQT::is_one() const {
  return den.empty() && num.is_constant() && !num.is_zero() && num.constant_value() == 1;
}

MPoly RationalFnQT::den_expanded() const {
  MPoly d(1L);
  for (auto& [f, k] : den)
    for (int i = 0; i < k; ++i) d = d * f;
  return d;
}

RationalFnQT& RationalFnQT::operator*=(const RationalFnQT& o) {
  num = num * o.num;
  for (auto& [f, k] : o.den) den[f] += k;
  reduce();
  return *this;
}

RationalFnQT& RationalFnQT::operator+=(const RationalFnQT& o) {
  // common denominator: per-factor max multiplicity
  MPoly extra_this(1L), extra_o(1L);
  std::map<MPoly, int, PolyLess> newden = den;
  for (auto& [f, k] : o.den) {
    int& cur = newden[f];
    cur = std::max(cur, k);
  }
  for (auto& [f, k] : newden) {
    int ka = 0, kb = 0;
    if (auto it = den.find(f); it != den.end()) ka = it->second;
    if (auto it = o.den.find(f); it != o.den.end()) kb = it->second;
    for (int i = 0; i < k - ka; ++i) extra_this = extra_this * f;
    for (int i = 0; i < k - kb; ++i) extra_o = extra_o * f;
  }
  num = num * extra_this + o.num * extra_o;
  den = std::move(newden);
  reduce();
  return *this;
}

RationalFnQT& RationalFnQT::operator-=(const RationalFnQT& o) { return *this += -o; }

RationalFnQT operator-(const RationalFnQT& a) {
  RationalFnQT r = a;
  r.num = -r.num;
  return r;
}

RationalFnQT RationalFnQT::reciprocal() const {
  if (num.is_zero()) throw domain_error("reciprocal of zero");
  RationalFnQT r;
  r.num = den_expanded();
  MPoly n = num;
  BigRat s = n.make_primitive();
  r.num *= 1 / s;
  if (!n.is_constant()) r.push_den_factor(std::move(n), 1);
  else r.num *= 1 / n.constant_value();
  r.reduce();
  return r;
}

RationalFnQT& RationalFnQT::operator/=(const RationalFnQT& o) {
  if (o.num.is_zero()) throw domain_error("division by zero rational function");
  return *this *= o.reciprocal();
}

RationalFnQT RationalFnQT::pow(int64_t k) const {
  if (k < 0) return reciprocal().pow(-k);
  RationalFnQT r(1L), base = *this;
  while (k) {
    if (k & 1) r *= base;
    if (k >>= 1) base *= base;
  }
  return r;
}

bool RationalFnQT::operator==(const RationalFnQT& o) const {
  if (num.is_zero()) return o.num.is_zero();
  if (o.num.is_zero()) return false;
  if (num == o.num && den == o.den) return true;
  // cancel the shared denominator factors, then cross-multiply
  MPoly ea(1L), eb(1L);
  for (auto& [f, k] : den) {
    int ko = 0;
    if (auto it = o.den.find(f); it != o.den.end()) ko = it->second;
    for (int i = 0; i < k - ko; ++i) eb = eb * f;  // unmatched part multiplies the other side
  }
  for (auto& [f, k] : o.den) {
    int ks = 0;
    if (auto it = den.find(f); it != den.end()) ks = it->second;
    for (int i = 0; i < k - ks; ++i) ea = ea * f;
  }
  return num * ea == o.num * eb;
}

RationalFnQT RationalFnQT::rename_var(int from, int to) const {
  RationalFnQT r;
  r.num = num.rename_var(from, to);
  for (auto& [f, k] : den) r.push_den_factor(f.rename_var(from, to), k);
  r.reduce();
  return r;
}

RationalFnQT RationalFnQT::subst(int v, const BigRat& val) const {
  RationalFnQT r;
  r.num = num.subst(v, val);
  for (auto& [f, k] : den) {
    MPoly fs = f.subst(v, val);
    if (fs.is_zero()) throw pole_error("substitution hits a pole");
    r.push_den_factor(std::move(fs), k);
  }
  r.reduce();
  return r;
}

BigRat RationalFnQT::eval(const std::vector<BigRat>& vals) const {
  BigRat d(1);
  for (auto& [f, k] : den) {
    BigRat fv = f.eval(vals);
    if (fv == 0) throw pole_error("evaluation at a pole");
    for (int i = 0; i < k; ++i) d *= fv;
  }
  return num.eval(vals) / d;
}

RationalFnQT RationalFnQT::normalized() const {
  RationalFnQT r = *this;
  r.reduce();
  if (r.den.empty() || r.num.is_zero()) return r;
  // univariate case: full GCD cancellation
  MPoly d = r.den_expanded();
  int vn = r.num.single_var(), vd = d.single_var();
  if (vn >= -1 && vd >= 0 && (vn == -1 || vn == vd)) {
    MPoly g = gcd_univariate(r.num, d);
    if (g.degree() > 0) {
      MPoly n2 = *MPoly::exact_divide(r.num, g);
      MPoly d2 = *MPoly::exact_divide(d, g);
      RationalFnQT out;
      out.num = std::move(n2);
      BigRat s = d2.make_primitive();
      out.num *= 1 / s;
      if (!d2.is_constant()) out.push_den_factor(std::move(d2), 1);
      else out.num *= 1 / d2.constant_value();
      out.reduce();
      return out;
    }
  }
  return r;
}

std::string render_poly_integer(const MPoly& p) { return p.str(); }

std::string RationalFnQT::str() const {
  MPoly n = num, d = den_expanded();
  if (n.is_zero()) return "0";
  // joint scale to coprime integer coefficients, denominator leading coeff > 0
  mpz_class num_gcd(0), den_lcm(1);
  auto scan = [&](const MPoly& p) {
    for (auto& [m, c] : p.t) {
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
  };
  scan(n);
  scan(d);
  BigRat s(den_lcm, num_gcd);
  s.canonicalize();
  if (d.t.rbegin()->second * s < 0) s = -s;
  n *= s;
  d *= s;
  if (d.is_constant() && d.constant_value() == 1) return n.str();
  std::string ns = n.t.size() > 1 ? "(" + n.str() + ")" : n.str();
  std::string ds = d.t.size() > 1 ? "(" + d.str() + ")" : d.str();
  return ns + "/" + ds;
}

}  // namespace qtsym
