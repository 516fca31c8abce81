#pragma once
// Integer partitions with the hook / Pochhammer machinery used throughout.

#include <string>
#include <vector>

#include "qtsym/rational.hpp"

namespace qtsym {

struct Square {  // 1-based cell (i=row, j=column)
  int i, j;
};

class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);  // validates weakly decreasing > 0
  static Partition parse(const std::string& s);  // "(3,1,1)" or "0"

  const std::vector<int>& parts() const { return p_; }
  int length() const { return static_cast<int>(p_.size()); }
  int weight() const;
  int part(int i) const { return i >= 1 && i <= length() ? p_[i - 1] : 0; }  // 1-based
  bool empty() const { return p_.empty(); }

  Partition conjugate() const;
  long n_stat() const;           // sum (i-1) lambda_i; cross-checked internally
  int arm(const Square& s) const { return part(s.i) - s.j; }
  int leg(const Square& s) const { return conjugate().part(s.j) - s.i; }
  int arm_co(const Square& s) const { return s.j - 1; }
  int leg_co(const Square& s) const { return s.i - 1; }
  std::vector<Square> squares() const;

  bool contains(const Partition& mu) const;     // mu_i <= lambda_i for all i
  bool dominates(const Partition& mu) const;    // throws on unequal weights
  Partition complement(int m, int N) const;     // hat: N - lambda_{m+1-i}; requires fit

  std::string str() const;  // "(3,1,1)", empty partition is "0"
  bool operator==(const Partition& o) const { return p_ == o.p_; }
  bool operator!=(const Partition& o) const { return p_ != o.p_; }
  // Total order: weight, then lex.  Within a weight this linearly extends
  // dominance (dominating partition compares larger).
  bool operator<(const Partition& o) const;

 private:
  std::vector<int> p_;
};

// All partitions of weight w with length <= maxlen and parts <= maxpart.
std::vector<Partition> partitions_of(int w, int maxlen, int maxpart = 1 << 29);
// All partitions contained in the box (maxpart^maxlen), any weight.
std::vector<Partition> partitions_in_box(int maxlen, int maxpart);

mpz_class z_stat(const Partition& lam);  // prod_i m_i! * i^{m_i}

// q-shifted factorial (b;base)_N for any integer N, base a variable id
// (VQ or VT).  Negative N uses (b;q)_{-N} = 1/(b q^{-N};q)_N, which can be an
// identically-infinite expression (e.g. (q;q)_{-N}); such values are
// representable through ExtVal below.  The plain qpoch throws domain_error on
// an infinite value.
RationalFnQT qpoch(const RationalFnQT& b, int N, int base_var = VQ);

// Value v * 0^zeros with v a nonzero rational function: tracks identically
// zero (or infinite) factors through products so expressions like
// 1/(q;q)_{-N} = 0 come out right.
struct ExtVal {
  RationalFnQT v = RationalFnQT(1L);
  int zeros = 0;

  bool is_zero() const { return zeros > 0; }
  bool is_finite() const { return zeros >= 0; }
  RationalFnQT value() const;  // throws domain_error if not finite / collapses zero
  ExtVal& operator*=(const ExtVal& o);
  ExtVal& operator/=(const ExtVal& o);
  friend ExtVal operator*(ExtVal a, const ExtVal& b) { return a *= b; }
  friend ExtVal operator/(ExtVal a, const ExtVal& b) { return a /= b; }
  static ExtVal from(const RationalFnQT& r);
};

ExtVal qpoch_ext(const RationalFnQT& b, int N, int base_var = VQ);

// Partition-indexed (b;q,t)_lambda.  Computed both as the product over squares
// of (1 - b q^{arm'} t^{-leg'}) and as prod_i (b t^{1-i}; q)_{lambda_i}; the
// two must agree.
RationalFnQT gen_poch(const RationalFnQT& b, const Partition& lam);
ExtVal gen_poch_ext(const RationalFnQT& b, const Partition& lam);

// Hook normalizations c, c', b = c/c'.  Square products cross-checked against
// the row reformulations at n = l(lambda) and n = l(lambda)+2.
RationalFnQT hook_c(const Partition& lam);
RationalFnQT hook_cprime(const Partition& lam);
RationalFnQT hook_b(const Partition& lam);

// Gaussian binomial [N over k]_q = (q^{N-k+1};q)_k / (q;q)_k.
RationalFnQT qbinom(int N, int k);

// q^a t^b with arbitrary integer exponents.
RationalFnQT qt_mono(int a, int b);

}  // namespace qtsym
