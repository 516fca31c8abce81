#pragma once
// Exact multivariate polynomial and rational-function arithmetic over Q.
//
// Variable universe is fixed: q, t, u, z, a, then x1..x8, then y1..y6.
// Monomial order everywhere (maps, rendering, division) is graded lex with
// q > t > u > z > a > x1 > ... > y6.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qtsym {

using BigRat = mpq_class;

struct domain_error : std::runtime_error {
  explicit domain_error(const std::string& w) : std::runtime_error(w) {}
};
struct pole_error : std::runtime_error {
  explicit pole_error(const std::string& w) : std::runtime_error(w) {}
};
struct internal_error : std::logic_error {
  explicit internal_error(const std::string& w) : std::logic_error(w) {}
};

// Variable ids.  vx/vy give the i-th alphabet slot (0-based).
inline constexpr int VQ = 0, VT = 1, VU = 2, VZ = 3, VA = 4;
inline constexpr int VX0 = 5, NXMAX = 8;
inline constexpr int VY0 = VX0 + NXMAX, NYMAX = 6;
inline constexpr int NVARS = VY0 + NYMAX;
inline int vx(int i) {
  if (i < 0 || i >= NXMAX) throw domain_error("x variable index out of range");
  return VX0 + i;
}
inline int vy(int j) {
  if (j < 0 || j >= NYMAX) throw domain_error("y variable index out of range");
  return VY0 + j;
}
std::string var_name(int v);

// Sparse exponent vector: (var, exp) pairs sorted by var, exps nonzero, >= 0.
struct Mono {
  std::vector<std::pair<uint8_t, int32_t>> e;

  Mono() = default;
  static Mono var(int v, int32_t k = 1) {
    Mono m;
    if (k != 0) m.e.push_back({static_cast<uint8_t>(v), k});
    return m;
  }
  int64_t degree() const {
    int64_t d = 0;
    for (auto& [v, k] : e) d += k;
    return d;
  }
  int32_t exponent(int v) const {
    for (auto& [w, k] : e)
      if (w == v) return k;
    return 0;
  }
  bool empty() const { return e.empty(); }
  friend Mono operator*(const Mono& a, const Mono& b);
  // nullopt unless b | a componentwise.
  static std::optional<Mono> quotient(const Mono& a, const Mono& b);
  bool operator==(const Mono& o) const { return e == o.e; }
};

// Graded lex: total degree first, ties broken by first variable (in the fixed
// order) with a larger exponent being the larger monomial.
bool mono_less(const Mono& a, const Mono& b);
struct MonoLess {
  bool operator()(const Mono& a, const Mono& b) const { return mono_less(a, b); }
};

class MPoly {
 public:
  std::map<Mono, BigRat, MonoLess> t;

  MPoly() = default;
  explicit MPoly(const BigRat& c) {
    if (c != 0) t[Mono{}] = c;
  }
  explicit MPoly(long c) : MPoly(BigRat(c)) {}
  static MPoly var(int v, int32_t k = 1) {
    MPoly p;
    p.t[Mono::var(v, k)] = 1;
    return p;
  }
  static MPoly term(const BigRat& c, const Mono& m) {
    MPoly p;
    if (c != 0) p.t[m] = c;
    return p;
  }

  bool is_zero() const { return t.empty(); }
  bool is_constant() const { return t.empty() || (t.size() == 1 && t.begin()->first.empty()); }
  BigRat constant_value() const;  // requires is_constant()
  int64_t degree() const { return t.empty() ? -1 : t.rbegin()->first.degree(); }
  int64_t degree_in(int v) const;
  int64_t low_degree_in(int v) const;  // min exponent of v over terms; -1 if zero poly
  // The unique variable occurring, or -1 if constant, or -2 if several.
  int single_var() const;
  bool depends_on(int v) const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a);
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  MPoly& operator*=(const BigRat& c);
  bool operator==(const MPoly& o) const { return t == o.t; }

  MPoly mul_term(const BigRat& c, const Mono& m) const;
  MPoly pow(int64_t k) const;  // k >= 0

  // Exact division: nullopt if b does not divide a (b must be nonzero).
  static std::optional<MPoly> exact_divide(const MPoly& a, const MPoly& b);

  // Rename variable (exponents merge).  Target may already occur.
  MPoly rename_var(int from, int to) const;
  // Substitute a rational value for one variable.
  MPoly subst(int v, const BigRat& val) const;
  // Full evaluation; vals indexed by variable id.
  BigRat eval(const std::vector<BigRat>& vals) const;

  // Scale so coefficients are coprime integers and the leading (graded-lex
  // greatest) coefficient is positive.  Returns the factor s with
  // *this(old) == s * *this(new).  Zero polynomial returns 1.
  BigRat make_primitive();

  std::string str() const;
};

// Total order on polynomials (for use as map keys); consistent with ==.
bool poly_less(const MPoly& a, const MPoly& b);
struct PolyLess {
  bool operator()(const MPoly& a, const MPoly& b) const { return poly_less(a, b); }
};

// One-variable polynomial GCD over Q (both args univariate in the same
// variable or constant).  Result is primitive with positive leading coeff.
MPoly gcd_univariate(MPoly a, MPoly b);

// Rational function num / prod(den_i^k_i).  Denominator factors are
// non-constant, primitive, positive leading coefficient.  Numerator carries
// all scalars.  Construction and every arithmetic op try to cancel each
// denominator factor into the numerator by exact division, so in the
// product-of-small-factors regime the representation stays reduced.
class RationalFnQT {
 public:
  MPoly num;
  std::map<MPoly, int, PolyLess> den;

  RationalFnQT() = default;
  /*implicit*/ RationalFnQT(long c) : num(c) {}
  /*implicit*/ RationalFnQT(const BigRat& c) : num(c) {}
  /*implicit*/ RationalFnQT(const MPoly& p) : num(p) {}
  RationalFnQT(const MPoly& n, const MPoly& d);  // throws domain_error if d == 0
  static RationalFnQT var(int v, int32_t k = 1);  // k may be negative

  bool is_zero() const { return num.is_zero(); }
  bool is_one() const;
  bool den_trivial() const { return den.empty(); }
  MPoly den_expanded() const;

  RationalFnQT& operator+=(const RationalFnQT& o);
  RationalFnQT& operator-=(const RationalFnQT& o);
  RationalFnQT& operator*=(const RationalFnQT& o);
  RationalFnQT& operator/=(const RationalFnQT& o);  // throws domain_error on /0
  friend RationalFnQT operator+(RationalFnQT a, const RationalFnQT& b) { return a += b; }
  friend RationalFnQT operator-(RationalFnQT a, const RationalFnQT& b) { return a -= b; }
  friend RationalFnQT operator*(RationalFnQT a, const RationalFnQT& b) { return a *= b; }
  friend RationalFnQT operator/(RationalFnQT a, const RationalFnQT& b) { return a /= b; }
  friend RationalFnQT operator-(const RationalFnQT& a);
  RationalFnQT reciprocal() const;
  RationalFnQT pow(int64_t k) const;  // any sign

  bool operator==(const RationalFnQT& o) const;  // cross-multiplication fallback
  bool operator!=(const RationalFnQT& o) const { return !(*this == o); }

  RationalFnQT rename_var(int from, int to) const;
  RationalFnQT subst(int v, const BigRat& val) const;  // throws pole_error if den dies
  BigRat eval(const std::vector<BigRat>& vals) const;  // throws pole_error

  // Content removal plus univariate GCD cancellation where applicable.
  RationalFnQT normalized() const;

  // Canonical rendering: expanded integer-coefficient numerator, '/',
  // expanded denominator (omitted when 1), graded-lex monomials, leading
  // denominator coefficient positive.
  std::string str() const;

 private:
  void reduce();
  void push_den_factor(MPoly f, int k);
};

std::string render_poly_integer(const MPoly& p);  // integer coeffs assumed

}  // namespace qtsym
