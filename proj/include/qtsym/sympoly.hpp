#pragma once
// Symmetric polynomials in a finite alphabet x1..xm, stored by monomial
// symmetric function coefficients keyed by partition.

#include <map>
#include <string>
#include <vector>

#include "qtsym/partition.hpp"
#include "qtsym/rational.hpp"
#include "qtsym/series.hpp"

namespace qtsym {

class SymPoly {
 public:
  int m = 0;  // alphabet size
  std::map<Partition, RationalFnQT> c;

  SymPoly() = default;
  explicit SymPoly(int alphabet) : m(alphabet) {}

  bool is_zero() const;
  int max_weight() const;
  RationalFnQT coeff(const Partition& lam) const;
  void add_term(const Partition& lam, const RationalFnQT& v);  // drops l > m

  SymPoly& operator+=(const SymPoly& o);
  SymPoly& operator-=(const SymPoly& o);
  friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
  friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
  SymPoly& operator*=(const RationalFnQT& s);
  friend SymPoly operator*(const SymPoly& a, const SymPoly& b);  // same alphabet
  // semantic equality within one alphabet (stored zeros are immaterial)
  bool operator==(const SymPoly& o) const { return m == o.m && (*this - o).is_zero(); }
  bool operator!=(const SymPoly& o) const { return !(*this == o); }

  // Expansion into x-monomials (exponent vectors over vx(0..m-1)).
  std::map<Mono, RationalFnQT, MonoLess> to_xpoly() const;
  static SymPoly from_xpoly(int m, const std::map<Mono, RationalFnQT, MonoLess>& xp);

  // "c1 * m[(...)] + ..." with partitions in decreasing key order.
  std::string str() const;

  // Evaluate each x_i at the given rational-function value.
  RationalFnQT eval_at(const std::vector<RationalFnQT>& xs) const;

  // Substitute x_i -> values[i] where each value is coeff * mono (series
  // entries); result truncated.
  TruncSeries to_series(const std::vector<std::pair<RationalFnQT, Mono>>& entries,
                        std::vector<uint8_t> vars, int cap) const;
};

SymPoly sym_monomial(const Partition& lam, int m);
SymPoly sym_powersum(int r, int m);                      // p_r = m_(r), all r >= 1
SymPoly sym_powersum(const Partition& rho, int m);       // product of p_{rho_i}
SymPoly sym_elementary(int r, int m);                    // e_r = m_(1^r)
SymPoly sym_schur(const Partition& lam, int m);          // bialternant quotient

// Distinct rearrangements of lam padded to m entries.
std::vector<std::vector<int>> distinct_permutations(const Partition& lam, int m);

// Weight-d transition data between the monomial and power-sum bases
// (rational, alphabet-independent once the alphabet is faithful).
struct PMTable {
  std::vector<Partition> parts;                 // partitions of d, ascending
  std::map<Partition, int> index;
  std::vector<std::vector<BigRat>> p_in_m;      // p_rho = sum_nu R[rho][nu] m_nu
  std::vector<std::vector<BigRat>> m_in_p;      // m_nu = sum_rho S[nu][rho] p_rho
};
const PMTable& pm_table(int d);  // cached, thread-safe

// Coefficients of f in the power-sum basis, per weight (keys are partitions).
std::map<Partition, RationalFnQT> to_powersum_basis(const SymPoly& f);

}  // namespace qtsym
