#pragma once

#include <vector>

#include "qtsym/rational.hpp"

namespace qtsym {

// Gap assignment interleaving the x alphabet into the ordered y chain:
// nondecreasing M with 1 <= M(i) <= n-m+i, and x_i in [y_{M(i)-1}, y_{M(i)}].
struct ChainMap {
    int m = 0, n = 0;
    std::vector<int> gap;  // gap[i] = M(i+1), values 1..n
};

std::vector<ChainMap> enumerate_chain_maps(int m, int n);
long chain_map_count(int m, int n);  // (n-m+1)/(n+1) * binom(m+n, m)

// Product of sine ratios weighting region M inside the integration chain.
double chain_weight(const ChainMap& M, double gamma);

// log|Gamma(x)| together with the sign of Gamma(x); negative arguments are
// routed through the reflection formula rather than recursion.
struct SignedLog {
    double log_abs = 0;
    int sign = 1;
};
SignedLog log_gamma_signed(double x);

double rising_poch(double a, int k);  // a(a+1)...(a+k-1)

// Two-alphabet beta-type integral over the weighted chain of regions.
struct SelbergSpec {
    int m = 0;
    int n = 1;
    double alpha = 1;
    double beta1 = 1;
    double beta2 = 1;
    double gamma = -0.25;
    int er = 0;  // elementary symmetric insertion e_r(x), 0 for none
    double rel_tol = 1e-4;
    double time_budget_s = 60.0;
};

// Convergence domain: alpha, beta1, beta2 positive and
// -min{1/n, alpha/(n-1), beta1/(m-1), beta2/(n-m-1), (beta1+beta2)/(m-2)}
// < gamma < 0, ratios with nonpositive denominator read as +infinity.
bool selberg_params_valid(const SelbergSpec& s);

// Closed-form value of the integral; er picks the column insertion (1^er).
double selberg_rhs(const SelbergSpec& s);
// Same value written with indicator-shifted gamma arguments and a binomial
// prefactor; kept as an independent transcription of the closed form.
double selberg_rhs_indicator(const SelbergSpec& s);

// Interaction factor: (n-m)!/n! * sum over injective l of prod y_{l_i}/(y_{l_i}-x_i).
double h_selberg(const std::vector<double>& x, const std::vector<double>& y);

double elem_sym(const std::vector<double>& x, int r);

double integrand_value(const SelbergSpec& s, const std::vector<double>& x,
                       const std::vector<double>& y);

struct QuadResult {
    double value = 0;
    double err_est = 0;  // relative change between the last two refinement levels
    long long evals = 0;
    int regions = 0;
    int level = 0;
};

QuadResult integrate_selberg(const SelbergSpec& s, bool parallel = true);

}  // namespace qtsym
