#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>

#include "qtsym/bisym.hpp"
#include "qtsym/sampler.hpp"

using namespace qtsym;

namespace {
const RationalFnQT Q = RationalFnQT::var(VQ);
const RationalFnQT T = RationalFnQT::var(VT);
Partition P(const std::string& s) { return Partition::parse(s); }

// y = (t^{n-1}, ..., t, 1) at a rational t
std::vector<BigRat> principal_y(int n, const BigRat& t) {
  std::vector<BigRat> y;
  for (int j = 1; j <= n; ++j) {
    BigRat p = 1;
    for (int k = 0; k < n - j; ++k) p *= t;
    y.push_back(p);
  }
  return y;
}

BigRat bpow(BigRat b, int k) {
  BigRat r = 1;
  for (int i = 0; i < k; ++i) r *= b;
  if (k < 0)
    for (int i = 0; i < -k; ++i) r /= b;
  return r;
}
}  // namespace

TEST_CASE("empty alphabets") {
  RatSampler smp(1);
  BigRat t = smp.next(), u = smp.next();
  std::vector<BigRat> none;
  CHECK(F_subset(u, none, principal_y(2, t), t) == 1);
  CHECK(omega_subset(none, principal_y(3, t), t) == 1);
  // with no y alphabet the subset sum telescopes to a finite product
  for (int m = 1; m <= 3; ++m) {
    auto xs = smp.tuple(m);
    BigRat rhs = 1;
    for (int i = 1; i <= m; ++i) rhs *= 1 - u * bpow(t, m - i);
    CHECK(F_subset(u, xs, none, t) == rhs);
  }
}

TEST_CASE("representations agree at random points") {
  RatSampler smp(2);
  for (int m = 0; m <= 2; ++m)
    for (int n = std::max(m, 1); n <= 3; ++n)
      for (int p = 0; p < 3; ++p) {
        auto xs = smp.tuple(m);
        auto ys = smp.tuple(n);
        BigRat t = smp.next();
        BigRat ref = omega_subset(xs, ys, t);
        CHECK(omega_recursive(xs, ys, t) == ref);
        CHECK(omega_multisum(xs, ys, t) == ref);
        CHECK(omega_symmetrized(xs, ys, t) == ref);
      }
}

TEST_CASE("determinant form matches the subset sum") {
  RatSampler smp(3);
  for (int n = 1; n <= 3; ++n)
    for (int p = 0; p < 3; ++p) {
      auto xs = smp.tuple(n);
      auto ys = smp.tuple(n);
      BigRat t = smp.next();
      CHECK(ik_determinant(xs, ys, t) == F_subset(t, xs, ys, t));
    }
  // 1x1 closed form
  BigRat x(2, 3), y(5, 7), t(1, 2);
  std::vector<BigRat> vx1{x}, vy1{y}, vy2{y, y};
  CHECK(ik_determinant(vx1, vy1, t) == BigRat(BigRat(1 - t) / BigRat(1 - t * x * y)));
  CHECK_THROWS_AS(ik_determinant(vx1, vy2, t), domain_error);
}

TEST_CASE("alternating sign matrix expansion") {
  CHECK(enumerate_asm(1).size() == 1);
  CHECK(enumerate_asm(2).size() == 2);
  CHECK(enumerate_asm(3).size() == 7);
  CHECK(enumerate_asm(4).size() == 42);
  CHECK_THROWS_AS(enumerate_asm(5), domain_error);  // above the default size cap
  RatSampler smp(4);
  for (int n = 1; n <= 3; ++n)
    for (int p = 0; p < 3; ++p) {
      auto xs = smp.tuple(n);
      auto ys = smp.tuple(n);
      BigRat t = smp.next();
      CHECK(asm_expansion(xs, ys, t) == omega_subset(xs, ys, t));
    }
}

TEST_CASE("asm statistics on known matrices") {
  // the unique 3x3 matrix with a -1
  ASM a{3, {{0, 1, 0}, {1, -1, 1}, {0, 1, 0}}};
  CHECK(a.minus_count() == 1);
  CHECK(a.minus_in_row(1) == 1);
  CHECK(a.minus_in_row(0) == 0);
  CHECK(a.minus_in_col(1) == 1);
  CHECK(a.inversions() == 2);
  // permutation matrices: inversions match the permutation statistic
  ASM id{3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  ASM w0{3, {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}};
  CHECK(id.inversions() == 0);
  CHECK(w0.inversions() == 3);
  int with_minus = 0;
  for (const ASM& b : enumerate_asm(3)) with_minus += b.minus_count() > 0 ? 1 : 0;
  CHECK(with_minus == 1);
}

TEST_CASE("aligned parameter product") {
  // sum with a = u t^{m-1} collapses to a closed product
  RatSampler smp(5);
  for (int m = 1; m <= 4; ++m)
    for (int p = 0; p < 3; ++p) {
      auto xs = smp.tuple(m);
      BigRat u = smp.next(), t = smp.next();
      BigRat a = BigRat(u * bpow(t, m - 1));
      BigRat rhs = 1;
      for (int i = 1; i <= m; ++i)
        rhs *= BigRat(BigRat(1) - u * bpow(t, m - i)) / BigRat(BigRat(1) - a * xs[i - 1]);
      CHECK(F_eps_subset(u, xs, a, t) == rhs);
    }
}

TEST_CASE("u equal one product") {
  RatSampler smp(6);
  for (int m = 1; m <= 4; ++m)
    for (int p = 0; p < 3; ++p) {
      auto xs = smp.tuple(m);
      BigRat a = smp.next(), t = smp.next();
      BigRat rhs = bpow(t, m * (m - 1) / 2);
      for (const BigRat& x : xs) rhs *= x;
      for (int i = 1; i <= m; ++i)
        rhs *= BigRat(BigRat(1) - a * bpow(t, 1 - i)) / BigRat(BigRat(1) - a * xs[i - 1]);
      CHECK(F_eps_subset(BigRat(1), xs, a, t) == rhs);
    }
}

TEST_CASE("the two product formulas map to each other termwise") {
  // substituting u -> a t^{1-m}, x_i -> 1/(a x_i) and complementing the
  // subset carries each term of one sum to a term of the other, up to the
  // factor t^binom(m,2) prod -(1-x_i)/(1-a x_i)
  RatSampler smp(7);
  for (int m = 1; m <= 3; ++m) {
    auto xs = smp.tuple(m);
    BigRat a = smp.next(), t = smp.next();
    BigRat u = BigRat(a * bpow(t, 1 - m));
    std::vector<BigRat> xinv;
    for (const BigRat& x : xs) xinv.push_back(BigRat(1) / BigRat(a * x));
    BigRat pref = bpow(t, m * (m - 1) / 2);
    for (const BigRat& x : xs) pref *= BigRat(0) - BigRat(BigRat(1) - x) / BigRat(BigRat(1) - a * x);
    unsigned full = (1u << m) - 1;
    for (unsigned mask = 0; mask <= full; ++mask)
      CHECK(F_eps_term(BigRat(1), xs, a, t, mask) ==
            pref * F_eps_term(u, xinv, a, t, full ^ mask));
  }
}

TEST_CASE("y-homomorphism at a principal power matches direct substitution") {
  RatSampler smp(8);
  for (int m = 1; m <= 3; ++m)
    for (int N = 1; N <= 3; ++N) {
      auto xs = smp.tuple(m);
      BigRat u = smp.next(), t = smp.next();
      CHECK(F_eps_subset(u, xs, bpow(t, N), t) == F_subset(u, xs, principal_y(N, t), t));
    }
}

TEST_CASE("principal specialization of the y alphabet") {
  RatSampler smp(9);
  for (int m = 1; m <= 3; ++m)
    for (int n = m; n <= 4; ++n)
      for (int p = 0; p < 2; ++p) {
        auto xs = smp.tuple(m);
        BigRat t = smp.next();
        auto ys = principal_y(n, t);
        BigRat prod = 1;
        for (int i = 1; i <= m; ++i)
          prod *= BigRat(BigRat(1) - bpow(t, i + n - m)) / BigRat(BigRat(1) - bpow(t, n) * xs[i - 1]);
        CHECK(F_subset(bpow(t, n - m + 1), xs, ys, t) == prod);
        BigRat xprod = bpow(t, m * (m - 1) / 2);
        for (const BigRat& x : xs) xprod *= x;
        CHECK(F_subset(BigRat(1), xs, ys, t) == xprod * prod);
      }
}

TEST_CASE("removing the last variables") {
  RatSampler smp(10);
  for (int m = 1; m <= 3; ++m)
    for (int n = m; n <= 4; ++n)
      for (int p = 0; p < 3; ++p) {
        auto xs = smp.tuple(m);
        auto ys = smp.tuple(n);
        BigRat u = smp.next(), t = smp.next();
        std::vector<BigRat> xr(xs.begin(), xs.end() - 1), yr(ys.begin(), ys.end() - 1);
        // pinning x_m y_n = 1 drops both variables
        xs.back() = BigRat(1) / ys.back();
        CHECK(F_subset(u, xs, ys, t) == F_subset(u, xr, yr, t));
        // zeroing x_m and y_n factors out 1 - u and shifts u -> ut
        xs.back() = 0;
        ys.back() = 0;
        CHECK(F_subset(u, xs, ys, t) ==
              BigRat(BigRat(1) - u) * F_subset(BigRat(u * t), xr, yr, t));
      }
}

TEST_CASE("inversion of all variables") {
  RatSampler smp(11);
  for (int m = 0; m <= 3; ++m)
    for (int n = std::max(1, m); n <= 3; ++n)
      for (int p = 0; p < 3; ++p) {
        auto xs = smp.tuple(m);
        auto ys = smp.tuple(n);
        BigRat u = smp.next(), t = smp.next();
        std::vector<BigRat> xi, yi;
        for (const BigRat& x : xs) xi.push_back(BigRat(1) / x);
        for (const BigRat& y : ys) yi.push_back(BigRat(1) / y);
        CHECK(F_subset(u, xs, ys, t) ==
              F_subset(BigRat(u * bpow(t, m - n - 1)), xi, yi, BigRat(BigRat(1) / t)));
      }
}

TEST_CASE("u shift at equal alphabet sizes") {
  RatSampler smp(12);
  for (int n = 1; n <= 3; ++n)
    for (int p = 0; p < 3; ++p) {
      auto xs = smp.tuple(n);
      auto ys = smp.tuple(n);
      BigRat t = smp.next();
      BigRat prod = 1;
      for (int i = 0; i < n; ++i) prod *= xs[i] * ys[i];
      CHECK(F_subset(BigRat(1), xs, ys, t) == prod * F_subset(t, xs, ys, t));
    }
}

TEST_CASE("interaction factor routes") {
  // m=1, n=2 closed form
  BigRat x(1, 3), y1(2, 3), y2(4, 5);
  BigRat expect = (y1 / BigRat(y1 - x) + y2 / BigRat(y2 - x)) / 2;
  std::vector<BigRat> hx{x}, hy{y1, y2};
  CHECK(h_multisum(hx, hy) == expect);
  RatSampler smp(13);
  for (int m = 1; m <= 2; ++m)
    for (int n = m; n <= 3; ++n)
      for (int p = 0; p < 3; ++p) {
        auto xs = smp.tuple(m);
        auto ys = smp.tuple(n);
        BigRat ref = h_multisum(xs, ys);
        CHECK(h_symmetrized(xs, ys) == ref);
        CHECK(h_limit(xs, ys) == ref);
      }
}

TEST_CASE("symmetrization collapses to one alphabet") {
  // sum over both alphabets of the coupled product reduces to a single sum
  RatSampler smp(14);
  auto sym_value = [](const std::vector<BigRat>& us, const std::vector<BigRat>& vs,
                      const BigRat& t, bool both) {
    int n = static_cast<int>(us.size());
    std::vector<int> pu(n), pv(n);
    for (int i = 0; i < n; ++i) pu[i] = pv[i] = i;
    BigRat acc = 0;
    auto term = [&](const std::vector<int>& a, const std::vector<int>& b) {
      BigRat r = 1;
      for (int i = 0; i < n; ++i) r /= BigRat(us[a[i]] - t * vs[b[i]]);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          if (both)
            r *= BigRat(us[a[i]] - t * us[a[j]]) / BigRat(us[a[i]] - us[a[j]]);
          r *= BigRat(us[a[i]] - vs[b[j]]) / BigRat(us[a[i]] - t * vs[b[j]]);
          r *= BigRat(vs[b[i]] - t * vs[b[j]]) / BigRat(vs[b[i]] - vs[b[j]]);
        }
      return r;
    };
    do {
      if (both) {
        std::vector<int> pu2(pu);
        do {
          acc += term(pu2, pv);
        } while (std::next_permutation(pu2.begin(), pu2.end()));
      } else {
        std::vector<int> idn(n);
        for (int i = 0; i < n; ++i) idn[i] = i;
        acc += term(idn, pv);
      }
    } while (std::next_permutation(pv.begin(), pv.end()));
    return acc;
  };
  for (int n = 1; n <= 3; ++n)
    for (int p = 0; p < 2; ++p) {
      auto us = smp.tuple(n);
      auto vs = smp.tuple(n);
      BigRat t = smp.next();
      BigRat tt = 1;  // (t;t)_n / (1-t)^n = prod (1-t^i)/(1-t)
      for (int i = 1; i <= n; ++i) tt *= BigRat(BigRat(1) - bpow(t, i)) / BigRat(BigRat(1) - t);
      CHECK(sym_value(us, vs, t, true) == tt * sym_value(us, vs, t, false));
    }
}

TEST_CASE("symmetrized vandermonde ratio sum") {
  RatSampler smp(15);
  for (int n = 1; n <= 4; ++n)
    for (int p = 0; p < 2; ++p) {
      auto us = smp.tuple(n);
      BigRat t = smp.next();
      std::vector<int> perm(n);
      for (int i = 0; i < n; ++i) perm[i] = i;
      BigRat acc = 0;
      do {
        BigRat r = 1;
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j)
            r *= BigRat(us[perm[i]] - t * us[perm[j]]) / BigRat(us[perm[i]] - us[perm[j]]);
        acc += r;
      } while (std::next_permutation(perm.begin(), perm.end()));
      BigRat rhs = 1;
      for (int i = 1; i <= n; ++i) rhs *= BigRat(BigRat(1) - bpow(t, i)) / BigRat(BigRat(1) - t);
      CHECK(acc == rhs);
    }
}

TEST_CASE("kernel dual routes agree with u and z formal") {
  RationalFnQT u = RationalFnQT::var(VU), z = RationalFnQT::var(VZ);
  for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 2}}) {
    for (const Partition& lam : partitions_in_box(std::min(m, 2), 2))
      for (const Partition& mu : partitions_in_box(std::min(n, 2), 2)) {
        if (lam.length() > m || mu.length() > n) continue;
        CHECK(W_explicit(lam, mu, m, n, u, z) == W_via_F(lam, mu, m, n, u, z));
        CHECK(V_explicit(lam, mu, m, n, u, z) == V_via_F(lam, mu, m, n, u, z));
      }
  }
}

TEST_CASE("kernel principal products at empty mu") {
  RationalFnQT z = RationalFnQT::var(VZ);
  for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 2}, {2, 3}}) {
    for (const Partition& lam : partitions_in_box(m, 2)) {
      RationalFnQT prod(1);
      for (int i = 1; i <= m; ++i)
        prod *= (1 - qt_mono(0, m - n - i)) / (1 - z * qt_mono(lam.part(i), m - n - i));
      CHECK(V_explicit(lam, P("0"), m, n, qt_mono(0, n - m + 1), z) ==
            qt_mono(lam.weight(), 0) * z.pow(m) * prod);
      CHECK(V_explicit(lam, P("0"), m, n, RationalFnQT(1), z) == prod);
      // both series types give the same z = 1 value
      RationalFnQT vp = gen_poch(qt_mono(0, m - n - 1), lam) / gen_poch(qt_mono(1, m - n - 1), lam);
      CHECK(V_typed(0, lam, P("0"), m, n) == vp);
      CHECK(V_typed(1, lam, P("0"), m, n) == vp);
      // and the combined kernel telescopes to a single shifted factorial
      for (int sigma : {0, 1})
        CHECK(Omega_kernel(sigma, lam, P("0"), m, n).value() ==
              gen_poch(qt_mono(0, m - n - 1), lam));
    }
  }
}

TEST_CASE("kernels only depend on the alphabet size difference") {
  // V^{(m,n)} = V^{(m-1,n-1)} follows from pinning the last x and y variables
  // to reciprocal values.  That argument needs the z -> 1 specialization to be
  // regular term by term; when lam_i = mu_{i+n-m+1} with mu_{i+n-m} > lam_i the
  // cross factor is singular and the reduction genuinely fails, so those
  // boundary pairs are checked for inequality instead.  The combined kernel
  // carries a vanishing product factor that kills exactly those pairs, so its
  // size-shift relation holds on the whole grid.
  const int m = 2, n = 3;
  auto boundary = [&](const Partition& lam, const Partition& mu) {
    for (int i = 1; i <= m - 1; ++i)
      if (lam.part(i) == mu.part(i + n - m + 1) && mu.part(i + n - m) > lam.part(i))
        return true;
    return false;
  };
  for (const Partition& lam : partitions_in_box(1, 2))
    for (const Partition& mu : partitions_in_box(2, 2))
      for (int sigma : {0, 1}) {
        if (boundary(lam, mu))
          CHECK_FALSE(V_typed(sigma, lam, mu, m, n) == V_typed(sigma, lam, mu, m - 1, n - 1));
        else
          CHECK(V_typed(sigma, lam, mu, m, n) == V_typed(sigma, lam, mu, m - 1, n - 1));
        ExtVal big = Omega_kernel(sigma, lam, mu, m, n);
        ExtVal small = Omega_kernel(sigma, lam, mu, m - 1, n - 1);
        RationalFnQT shift = qt_mono(0, mu.weight()) * gen_poch(qt_mono(0, n - 1), mu) /
                             gen_poch(qt_mono(0, n), mu);
        CHECK(big.value() == small.value() * shift);
        // the combined kernel vanishes exactly off the interlaced pairs
        bool interlaced = true;
        for (int i = 1; i <= m; ++i)
          if (lam.part(i) < mu.part(i + n - m)) interlaced = false;
        CHECK(big.is_zero() == !interlaced);
      }
}

TEST_CASE("coupled alphabets near one") {
  // with x = q^v, y = q^u, t = q^gamma the subset sum approaches the
  // termwise limit of the multisum as q -> 1 (checked loosely at q close to 1)
  const BigRat q(9999, 10000);
  const int gamma = 2;
  std::vector<int> v{3}, w{0, 5};
  const int m = 1, n = 2;
  std::vector<BigRat> xs, ys;
  for (int vi : v) xs.push_back(bpow(q, vi));
  for (int wi : w) ys.push_back(bpow(q, wi));
  BigRat t = bpow(q, gamma);
  BigRat omega = omega_subset(xs, ys, t);
  // exact limit, summed over injective maps l
  BigRat lim = 0;
  for (int l0 = 0; l0 < n; ++l0) {
    BigRat term = BigRat(-gamma) / BigRat(v[0] - w[l0] - gamma);
    for (int i = 0; i < n; ++i)
      if (i != l0) term *= BigRat(w[i] - w[l0] - gamma) / BigRat(w[i] - w[l0]);
    lim += term;
  }
  REQUIRE(m == 1);
  BigRat rel = omega / lim - 1;
  if (rel < 0) rel = -rel;
  CHECK(rel < BigRat(1, 100));
}
