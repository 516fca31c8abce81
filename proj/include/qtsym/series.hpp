#pragma once
// Multivariate power series truncated at a joint total degree in a designated
// set of expansion variables.  Coefficients are rational functions in the
// remaining variables (q, t, a, ...).

#include <map>
#include <string>
#include <vector>

#include "qtsym/partition.hpp"
#include "qtsym/rational.hpp"

namespace qtsym {

class TruncSeries {
 public:
  std::vector<uint8_t> vars;  // expansion variable ids, strictly increasing
  int cap = 0;
  std::map<Mono, RationalFnQT, MonoLess> c;  // keys use expansion vars only

  TruncSeries() = default;
  TruncSeries(std::vector<uint8_t> vs, int cap_) : vars(std::move(vs)), cap(cap_) {}
  static TruncSeries constant(std::vector<uint8_t> vs, int cap, const RationalFnQT& v);

  bool in_scope(const Mono& m) const;  // uses only expansion vars, degree <= cap
  void add_term(const Mono& m, const RationalFnQT& v);
  RationalFnQT coeff(const Mono& m) const;
  bool is_zero() const;

  TruncSeries& operator+=(const TruncSeries& o);
  TruncSeries& operator-=(const TruncSeries& o);
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }
  TruncSeries& operator*=(const RationalFnQT& s);
  TruncSeries pow(int k) const;  // k >= 0

  // 1/series; constant term must be a nonzero rational function.
  TruncSeries inverse() const;

  // First differing coefficient, or nullopt when equal through min(cap).
  static std::optional<Mono> first_difference(const TruncSeries& a, const TruncSeries& b);
  bool operator==(const TruncSeries& o) const { return !first_difference(*this, o); }

  std::string str() const;
};

// Expand an exact rational function as a series: denominator (w.r.t. the
// expansion vars) must have an invertible constant term, else pole_error.
TruncSeries series_from_rational(const RationalFnQT& f, std::vector<uint8_t> vars, int cap);

// Euler expansions.  arg must have zero constant term in the expansion vars.
//   series_pochhammer:      (arg; q)_inf  = sum_k (-1)^k q^{k(k-1)/2} arg^k / (q;q)_k
//   series_inv_pochhammer:  1/(arg;q)_inf = sum_k arg^k / (q;q)_k
TruncSeries series_pochhammer(const TruncSeries& arg);
TruncSeries series_inv_pochhammer(const TruncSeries& arg);
// Geometric series 1/(1 - arg).
TruncSeries series_geometric(const TruncSeries& arg);

// Single term c * m as a series.
TruncSeries series_term(std::vector<uint8_t> vars, int cap, const RationalFnQT& coeff,
                        const Mono& m);

}  // namespace qtsym
