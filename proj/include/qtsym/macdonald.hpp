#pragma once
// Macdonald symmetric polynomials P_lambda(x; q, t) and their specializations.

#include <map>
#include <vector>

#include "qtsym/partition.hpp"
#include "qtsym/rational.hpp"
#include "qtsym/sympoly.hpp"

namespace qtsym {

// q,t scalar product: <p_lam, p_mu> = delta * z_lam * prod (1-q^{l_i})/(1-t^{l_i}).
// Alphabet of both arguments must be >= their degree (faithful range).
RationalFnQT scalar_qt(const SymPoly& f, const SymPoly& g);

// P_lambda in m variables; zero when l(lambda) > m.  Monomial-basis
// coefficients come from Gram-Schmidt over the dominance-ordered weight-|lambda|
// graded piece (concurrent-safe memo cache, keyed by lambda).
SymPoly macdonald_P(const Partition& lam, int m);

// Universal expansion coefficients u_{lambda mu} (alphabet-independent).
const std::map<Partition, RationalFnQT>& macdonald_coeffs(const Partition& lam);

// q,t-Littlewood-Richardson coefficient f^lambda_{mu nu}.
// Requires m >= l(mu) + l(nu); computed internally in a faithful alphabet.
RationalFnQT lr_coeff(const Partition& mu, const Partition& nu, const Partition& lam, int m);
// All lambda with nonzero f^lambda_{mu nu} (cached per (mu, nu)).
const std::map<Partition, RationalFnQT>& lr_expand(const Partition& mu, const Partition& nu);

// Skew polynomial P_{lambda/mu} in m variables, normalized by the branching
// rule P_lambda(x, y) = sum_mu P_{lambda/mu}(x) P_mu(y).  Expansion:
// sum_nu (b_mu b_nu / b_lambda) f^lambda_{mu nu} P_nu.  Zero unless mu is
// contained in lambda.
SymPoly skew_P(const Partition& lam, const Partition& mu, int m);

// Evaluation x_i = z q^{lambda_i} t^{n-i} for i = 1..n (alphabet must be n).
// z is any rational function (use RationalFnQT::var(VZ) for formal z, 1 for
// the plain principal specialization).
RationalFnQT eval_u(const SymPoly& f, const Partition& lam, const RationalFnQT& z, int n);

// epsilon_{b,t}: the homomorphism p_r -> (1 - b^r)/(1 - t^r).
RationalFnQT eps_hom(const SymPoly& f, const RationalFnQT& b);

// Macdonald q-difference operator D_r on symmetric polynomials in m = f.m
// variables.  D_0 = identity.
SymPoly macdonald_operator(int r, const SymPoly& f);
// D(u) f = sum_{r=0}^m (-u)^r D_r f.
SymPoly macdonald_operator_series(const RationalFnQT& u, const SymPoly& f);
// Eigenvalue prod_i (1 - u t^{m-i} q^{lambda_i}).
RationalFnQT macdonald_eigenvalue(const RationalFnQT& u, const Partition& lam, int m);

}  // namespace qtsym
