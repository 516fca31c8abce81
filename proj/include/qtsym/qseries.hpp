#pragma once
// Basic hypergeometric series with one (Kaneko-Macdonald) and two (paired,
// interlaced) Macdonald polynomial arguments, as truncated power series, plus
// exact verifiers for the summation and transformation identities they
// satisfy.

#include <string>
#include <utility>
#include <vector>

#include "qtsym/bisym.hpp"
#include "qtsym/macdonald.hpp"
#include "qtsym/series.hpp"

namespace qtsym {

// One alphabet slot: value = coeff * mono, mono over expansion vars only.
using AlphaEntry = std::pair<RationalFnQT, Mono>;

std::vector<AlphaEntry> alphabet_formal_x(int m);     // x_1..x_m
std::vector<AlphaEntry> alphabet_formal_y(int n);     // y_1..y_n
std::vector<AlphaEntry> alphabet_principal_z(int n);  // z * (1, t, ..., t^{n-1})
std::vector<AlphaEntry> alphabet_zero(int n);
std::vector<AlphaEntry> scale_alphabet(std::vector<AlphaEntry> a, const RationalFnQT& s);

struct SeriesParams {
  std::vector<RationalFnQT> upper;  // a_1 .. a_{r+1}
  std::vector<RationalFnQT> lower;  // b_1 .. b_r
  int sigma = 0;                    // series type: 0 or 1

  SeriesParams() = default;
  SeriesParams(std::vector<RationalFnQT> up, std::vector<RationalFnQT> lo, int sg = 0)
      : upper(std::move(up)), lower(std::move(lo)), sigma(sg) {}
};

// prod (a_i;q,t)_mu / prod (b_j;q,t)_mu; throws domain_error when a lower
// parameter makes its Pochhammer symbol vanish (non-generic parameters).
RationalFnQT poch_ratio(const SeriesParams& p, const Partition& mu);

// prod over num_args of (arg;q)_inf divided by the same product over
// den_args, expanded as a series; each arg is coeff * mono.
TruncSeries series_poch_prod(std::vector<uint8_t> vars, int cap,
                             const std::vector<AlphaEntry>& num_args,
                             const std::vector<AlphaEntry>& den_args);

// Single-alphabet series: sum over l(lam) <= |x|, |lam| <= cap of
// t^{n(lam)} P_lam(x) / c'_lam * upper/lower Pochhammer ratio.
TruncSeries sl2_series(const SeriesParams& p, const std::vector<AlphaEntry>& x,
                       std::vector<uint8_t> vars, int cap);

// Pairs (lam, mu) with l(lam) <= m, l(mu) <= n, |lam|+|mu| <= wcap and
// lam_i >= mu_{i+n-m} for 1 <= i <= m.
bool interlaces(const Partition& lam, const Partition& mu, int m, int n);
std::vector<std::pair<Partition, Partition>> interlaced_pairs(int m, int n, int wcap);

// Two-alphabet series: infinite-product prefactor in x times the sum over
// interlaced pairs of t^{n(lam)+n(mu)} P_lam(x) P_mu(y) / (c'_lam c'_mu)
// times the upper/lower ratio at mu times the coupling kernel.
TruncSeries sl3_series(const SeriesParams& p, int m, int n, const std::vector<AlphaEntry>& x,
                       const std::vector<AlphaEntry>& y, std::vector<uint8_t> vars, int cap);

struct VerifyResult {
  bool ok = true;
  std::string detail;  // empty when ok, else the first discrepancy
};

VerifyResult compare_series(const TruncSeries& lhs, const TruncSeries& rhs);

// Identity of skew-expansion type relating the q,t-Littlewood-Richardson
// coefficients to the principally specialized kernels; u kept formal.
// Also usable on pairs violating the interlacing condition, where both
// sides must vanish.
VerifyResult verify_lr_kernel_identity(const Partition& lam, const Partition& mu, int m, int n);

// q-binomial theorem, y principally specialized.
VerifyResult verify_qbinomial_first(int m, int n, int sigma, int cap);
// q-binomial theorem for m = n, x principally specialized.
VerifyResult verify_qbinomial_second(int n, int sigma, int cap);
// Reduction of the two-alphabet series to a single sum over the composite
// alphabet X.
VerifyResult verify_prop_yX(int m, int n, int sigma, int cap);
// Principal specialization of the y alphabet collapses the series to a
// single-alphabet series at z t^m X.
VerifyResult verify_principal_collapse(const SeriesParams& p, int m, int n, int cap);
// Interchange symmetry at m = n.
VerifyResult verify_swap_symmetry(int n, int sigma, int cap);
// Euler (Heine-type) transformation, y principally specialized.
VerifyResult verify_euler_transform(const RationalFnQT& a, const RationalFnQT& b,
                                    const RationalFnQT& c, int m, int n, int sigma, int cap);
// Two-parameter extension of the q-binomial theorem whose right-hand side is
// an infinite product times a finite subset sum.
VerifyResult verify_generalized_2phi1(int m, const RationalFnQT& a, const RationalFnQT& u,
                                      int cap);

// Elementary degenerations.
VerifyResult verify_y_zero(int m, int n, int sigma, int cap);   // y = (0^n) -> 1
VerifyResult verify_a1_one(int m, int n, int sigma, int cap);   // a_1 = 1 -> 1
// Stability in (m,n) -> (m-1,n-1).
VerifyResult verify_stability1(int m, int n, int sigma, int cap);
VerifyResult verify_stability2(int m, int n, int sigma, int cap);
// Iterated stability down to a single-alphabet series.
VerifyResult verify_stability_iterated1(int m, int n, int sigma, int cap);
VerifyResult verify_stability_iterated2(int m, int n, int sigma, int cap);

}  // namespace qtsym
