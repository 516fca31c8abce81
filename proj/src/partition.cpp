#include "qtsym/partition.hpp"

#include <algorithm>
#include <sstream>

namespace qtsym {

Partition::Partition(std::vector<int> parts) : p_(std::move(parts)) {
  while (!p_.empty() && p_.back() == 0) p_.pop_back();
  for (size_t i = 0; i < p_.size(); ++i) {
    if (p_[i] <= 0) throw domain_error("partition parts must be positive");
    if (i && p_[i] > p_[i - 1]) throw domain_error("partition parts must be weakly decreasing");
  }
}

Partition Partition::parse(const std::string& s) {
  std::string v = s;
  v.erase(std::remove_if(v.begin(), v.end(), [](char c) { return c == ' '; }), v.end());
  if (v == "0" || v == "()" || v.empty()) return Partition();
  if (v.front() != '(' || v.back() != ')') throw domain_error("bad partition literal: " + s);
  std::vector<int> parts;
  std::stringstream ss(v.substr(1, v.size() - 2));
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw domain_error("bad partition literal: " + s);
    parts.push_back(std::stoi(tok));
  }
  return Partition(parts);
}

int Partition::weight() const {
  int w = 0;
  for (int x : p_) w += x;
  return w;
}

Partition Partition::conjugate() const {
  if (p_.empty()) return Partition();
  std::vector<int> c(p_[0], 0);
  for (int x : p_)
    for (int j = 0; j < x; ++j) ++c[j];
  return Partition(c);
}

long Partition::n_stat() const {
  long n1 = 0;
  for (int i = 1; i <= length(); ++i) n1 += static_cast<long>(i - 1) * p_[i - 1];
  long n2 = 0;
  const Partition conj = conjugate();  // keep alive: parts() is a reference
  for (int cp : conj.parts()) n2 += static_cast<long>(cp) * (cp - 1) / 2;
  if (n1 != n2) throw internal_error("n_stat cross-check failed");
  return n1;
}

std::vector<Square> Partition::squares() const {
  std::vector<Square> out;
  for (int i = 1; i <= length(); ++i)
    for (int j = 1; j <= p_[i - 1]; ++j) out.push_back({i, j});
  return out;
}

bool Partition::contains(const Partition& mu) const {
  if (mu.length() > length()) return false;
  for (int i = 1; i <= mu.length(); ++i)
    if (mu.part(i) > part(i)) return false;
  return true;
}

bool Partition::dominates(const Partition& mu) const {
  if (weight() != mu.weight())
    throw domain_error("dominance comparison requires equal weights");
  long s1 = 0, s2 = 0;
  int n = std::max(length(), mu.length());
  for (int i = 1; i <= n; ++i) {
    s1 += part(i);
    s2 += mu.part(i);
    if (s1 < s2) return false;
  }
  return true;
}

Partition Partition::complement(int m, int N) const {
  if (length() > m || (length() > 0 && p_[0] > N))
    throw domain_error("partition does not fit in the m x N box");
  std::vector<int> out;
  for (int i = 1; i <= m; ++i) out.push_back(N - part(m + 1 - i));
  return Partition(out);
}

std::string Partition::str() const {
  if (p_.empty()) return "0";
  std::string s = "(";
  for (size_t i = 0; i < p_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p_[i]);
  }
  return s + ")";
}

bool Partition::operator<(const Partition& o) const {
  int w1 = weight(), w2 = o.weight();
  if (w1 != w2) return w1 < w2;
  return p_ < o.p_;  // lex; dominance-compatible within fixed weight
}

static void gen_parts(int w, int maxlen, int maxpart, std::vector<int>& cur,
                      std::vector<Partition>& out) {
  if (w == 0) {
    out.push_back(Partition(cur));
    return;
  }
  if (maxlen == 0) return;
  int hi = std::min(w, maxpart);
  int lo = (w + maxlen - 1) / maxlen;  // smallest feasible next part
  for (int p = hi; p >= lo && p >= 1; --p) {
    cur.push_back(p);
    gen_parts(w - p, maxlen - 1, p, cur, out);
    cur.pop_back();
  }
}

std::vector<Partition> partitions_of(int w, int maxlen, int maxpart) {
  std::vector<Partition> out;
  std::vector<int> cur;
  if (w == 0) {
    out.push_back(Partition());
    return out;
  }
  gen_parts(w, maxlen, maxpart, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> partitions_in_box(int maxlen, int maxpart) {
  std::vector<Partition> out;
  for (int w = 0; w <= maxlen * maxpart; ++w) {
    auto part = partitions_of(w, maxlen, maxpart);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

mpz_class z_stat(const Partition& lam) {
  mpz_class z(1);
  int run = 0;
  const auto& p = lam.parts();
  for (size_t i = 0; i < p.size(); ++i) {
    ++run;
    bool endrun = (i + 1 == p.size()) || p[i + 1] != p[i];
    mpz_class part(p[i]);
    z *= part;
    if (endrun) {
      mpz_class f;
      mpz_fac_ui(f.get_mpz_t(), run);
      z *= f;
      run = 0;
    }
  }
  return z;
}

RationalFnQT ExtVal::value() const {
  if (zeros > 0) return RationalFnQT(0L);
  if (zeros < 0) throw domain_error("infinite q-Pochhammer value");
  return v;
}

ExtVal& ExtVal::operator*=(const ExtVal& o) {
  v *= o.v;
  zeros += o.zeros;
  return *this;
}

ExtVal& ExtVal::operator/=(const ExtVal& o) {
  v /= o.v;
  zeros -= o.zeros;
  return *this;
}

ExtVal ExtVal::from(const RationalFnQT& r) {
  ExtVal e;
  if (r.is_zero()) {
    e.zeros = 1;
  } else {
    e.v = r;
  }
  return e;
}

ExtVal qpoch_ext(const RationalFnQT& b, int N, int base_var) {
  ExtVal acc;
  if (N >= 0) {
    for (int k = 0; k < N; ++k) {
      RationalFnQT f = RationalFnQT(1L) - b * RationalFnQT::var(base_var, k);
      acc *= ExtVal::from(f);
    }
  } else {
    ExtVal denom = qpoch_ext(b * RationalFnQT::var(base_var, N), -N, base_var);
    acc /= denom;
  }
  return acc;
}

RationalFnQT qpoch(const RationalFnQT& b, int N, int base_var) {
  return qpoch_ext(b, N, base_var).value();
}

ExtVal gen_poch_ext(const RationalFnQT& b, const Partition& lam) {
  ExtVal sq;
  for (const Square& s : lam.squares()) {
    RationalFnQT f =
        RationalFnQT(1L) - b * qt_mono(lam.arm_co(s), -lam.leg_co(s));
    sq *= ExtVal::from(f);
  }
  ExtVal rows;
  for (int i = 1; i <= lam.length(); ++i)
    rows *= qpoch_ext(b * qt_mono(0, 1 - i), lam.part(i), VQ);
  if (sq.zeros != rows.zeros || (sq.zeros == 0 && !(sq.v == rows.v)))
    throw internal_error("gen_poch square/row forms disagree");
  return sq;
}

RationalFnQT gen_poch(const RationalFnQT& b, const Partition& lam) {
  return gen_poch_ext(b, lam).value();
}

// c with n rows: (t^n;q,t)_lam * prod_{i<j<=n} (t^{j-i};q)_{l_i-l_j} / (t^{j-i+1};q)_{l_i-l_j}
static RationalFnQT hook_c_rows(const Partition& lam, int n) {
  RationalFnQT r = gen_poch(RationalFnQT::var(VT, n), lam);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      int d = lam.part(i) - lam.part(j);
      r *= qpoch(qt_mono(0, j - i), d) / qpoch(qt_mono(0, j - i + 1), d);
    }
  return r;
}

static RationalFnQT hook_cprime_rows(const Partition& lam, int n) {
  RationalFnQT r = gen_poch(qt_mono(1, n - 1), lam);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      int d = lam.part(i) - lam.part(j);
      r *= qpoch(qt_mono(1, j - i - 1), d) / qpoch(qt_mono(1, j - i), d);
    }
  return r;
}

RationalFnQT hook_c(const Partition& lam) {
  RationalFnQT sq(1L);
  for (const Square& s : lam.squares())
    sq *= RationalFnQT(1L) - qt_mono(lam.arm(s), lam.leg(s) + 1);
  int l = lam.length();
  if (!(hook_c_rows(lam, l) == sq) || !(hook_c_rows(lam, l + 2) == sq))
    throw internal_error("hook_c row form disagrees with square form");
  return sq;
}

RationalFnQT hook_cprime(const Partition& lam) {
  RationalFnQT sq(1L);
  for (const Square& s : lam.squares())
    sq *= RationalFnQT(1L) - qt_mono(lam.arm(s) + 1, lam.leg(s));
  int l = lam.length();
  if (!(hook_cprime_rows(lam, l) == sq) || !(hook_cprime_rows(lam, l + 2) == sq))
    throw internal_error("hook_cprime row form disagrees with square form");
  return sq;
}

RationalFnQT hook_b(const Partition& lam) { return hook_c(lam) / hook_cprime(lam); }

RationalFnQT qbinom(int N, int k) {
  if (k < 0) return RationalFnQT(0L);
  if (N >= 0 && k > N) return RationalFnQT(0L);
  return qpoch(RationalFnQT::var(VQ, N - k + 1), k) / qpoch(RationalFnQT::var(VQ), k);
}

RationalFnQT qt_mono(int a, int b) {
  return RationalFnQT::var(VQ, a) * RationalFnQT::var(VT, b);
}

}  // namespace qtsym
