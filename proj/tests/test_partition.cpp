#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qtsym/partition.hpp"

using namespace qtsym;

namespace {
RationalFnQT qv() { return RationalFnQT::var(VQ); }
RationalFnQT tv() { return RationalFnQT::var(VT); }
}  // namespace

TEST_CASE("parse and render") {
  Partition p = Partition::parse("(3,1,1)");
  CHECK(p.parts() == std::vector<int>{3, 1, 1});
  CHECK(p.str() == "(3,1,1)");
  CHECK(Partition::parse("0").empty());
  CHECK(Partition::parse("0").str() == "0");
  CHECK(p.weight() == 5);
  CHECK(p.length() == 3);
  CHECK(p.part(1) == 3);
  CHECK(p.part(4) == 0);  // out of range reads as zero
  CHECK_THROWS_AS(Partition::parse("(1,3)"), domain_error);
}

TEST_CASE("conjugate is an involution") {
  Partition p = Partition::parse("(4,2,1)");
  CHECK(p.conjugate() == Partition::parse("(3,2,1,1)"));
  for (int w = 0; w <= 6; ++w)
    for (const Partition& lam : partitions_of(w, w))
      CHECK(lam.conjugate().conjugate() == lam);
}

TEST_CASE("n statistic matches the conjugate binomial form") {
  for (int w = 0; w <= 6; ++w)
    for (const Partition& lam : partitions_of(w, w)) {
      long n2 = 0;
      const Partition conj = lam.conjugate();
      for (int part : conj.parts()) n2 += static_cast<long>(part) * (part - 1) / 2;
      CHECK(lam.n_stat() == n2);
    }
}

TEST_CASE("arms and legs") {
  Partition p = Partition::parse("(3,2)");
  Square s{1, 1};
  CHECK(p.arm(s) == 2);
  CHECK(p.leg(s) == 1);
  CHECK(p.arm_co(s) == 0);
  CHECK(p.leg_co(s) == 0);
  CHECK(p.squares().size() == 5);
  // per-square identities: arm + arm_co + 1 = row length, leg + leg_co + 1 = column length
  for (const Square& sq : p.squares()) {
    CHECK(p.arm(sq) + p.arm_co(sq) + 1 == p.part(sq.i));
    CHECK(p.leg(sq) + p.leg_co(sq) + 1 == p.conjugate().part(sq.j));
  }
}

TEST_CASE("containment and dominance") {
  Partition a = Partition::parse("(3,1)"), b = Partition::parse("(2,1)");
  CHECK(a.contains(b));
  CHECK(!b.contains(a));
  CHECK(Partition::parse("(4)").dominates(Partition::parse("(2,2)")));
  CHECK(!Partition::parse("(2,2)").dominates(Partition::parse("(3,1)")));
  CHECK_THROWS_AS(a.dominates(b), domain_error);  // unequal weights
  // dominance is reflexive and the total order extends it within a weight
  for (const Partition& lam : partitions_of(5, 5))
    for (const Partition& mu : partitions_of(5, 5))
      if (lam.dominates(mu) && lam != mu) CHECK(mu < lam);
}

TEST_CASE("complement in a box") {
  Partition lam = Partition::parse("(2,1)");
  CHECK(lam.complement(2, 3) == Partition::parse("(2,1)"));
  CHECK(lam.complement(3, 2) == Partition::parse("(2,1)"));
  CHECK(Partition().complement(2, 2) == Partition::parse("(2,2)"));
  for (const Partition& mu : partitions_in_box(2, 3))
    CHECK(mu.complement(2, 3).complement(2, 3) == mu);
  CHECK_THROWS_AS(Partition::parse("(4)").complement(1, 3), domain_error);
}

TEST_CASE("partition enumeration") {
  CHECK(partitions_of(0, 0).size() == 1);  // just the empty partition
  CHECK(partitions_of(5, 5).size() == 7);
  CHECK(partitions_of(6, 6).size() == 11);
  CHECK(partitions_of(5, 2).size() == 3);     // length at most 2
  CHECK(partitions_of(5, 5, 2).size() == 3);  // parts at most 2
  CHECK(partitions_in_box(2, 3).size() == 10);  // binom(5,2)
  CHECK(partitions_in_box(3, 3).size() == 20);
}

TEST_CASE("z statistic") {
  CHECK(z_stat(Partition()) == 1);
  CHECK(z_stat(Partition::parse("(1,1,1)")) == 6);
  CHECK(z_stat(Partition::parse("(3)")) == 3);
  CHECK(z_stat(Partition::parse("(2,1)")) == 2);
  // sum over partitions of w of 1/z_lambda = 1 (exponential formula sanity)
  for (int w = 1; w <= 6; ++w) {
    BigRat s = 0;
    for (const Partition& lam : partitions_of(w, w)) s += BigRat(1) / BigRat(z_stat(lam));
    CHECK(s == 1);
  }
}

TEST_CASE("q-shifted factorial") {
  RationalFnQT b = RationalFnQT::var(VA);
  CHECK(qpoch(b, 0).is_one());
  CHECK(qpoch(b, 2) == (1 - b) * (1 - b * qv()));
  CHECK(qpoch(b, 2, VT) == (1 - b) * (1 - b * tv()));
  // (b;q)_{-N} = 1/(b q^{-N};q)_N
  CHECK(qpoch(b, -2) == 1 / (qpoch(b * qv().pow(-2), 2)));
  // (b;q)_{N+M} = (b;q)_N (b q^N;q)_M
  CHECK(qpoch(b, 5) == qpoch(b, 2) * qpoch(b * qv().pow(2), 3));
  CHECK_THROWS_AS(qpoch(qv(), -1), domain_error);  // (q;q)_{-1} is infinite
}

TEST_CASE("extended values track zeros and infinities") {
  ExtVal inf = qpoch_ext(qv(), -1);
  CHECK(!inf.is_finite());
  CHECK_THROWS_AS(inf.value(), domain_error);
  // 1/(q;q)_{-1} = 0
  ExtVal z = ExtVal::from(RationalFnQT(1)) / inf;
  CHECK(z.is_zero());
  CHECK(z.value().is_zero());
  // zero times infinity of matching order is finite
  ExtVal f = z * inf;
  CHECK(f.is_finite());
  CHECK(!f.is_zero());
  CHECK(qpoch_ext(RationalFnQT::var(VA), 3).value() == qpoch(RationalFnQT::var(VA), 3));
}

TEST_CASE("partition-indexed shifted factorial") {
  RationalFnQT b = RationalFnQT::var(VA);
  CHECK(gen_poch(b, Partition()).is_one());
  // row form: prod_i (b t^{1-i}; q)_{lambda_i}
  Partition lam = Partition::parse("(2,1)");
  CHECK(gen_poch(b, lam) == qpoch(b, 2) * qpoch(b / tv(), 1));
  CHECK(gen_poch_ext(b, lam).value() == gen_poch(b, lam));
  // (q t^{-1};q,t)_{(1,1)} contains the factor (1 - q t^{-1} t^{-1} q^0)... none vanish generically
  CHECK(!gen_poch(qv() / tv(), Partition::parse("(1,1)")).is_zero());
  // (t;q,t)_lambda vanishes iff l(lambda) > 1? no: (t t^{1-2};q)_{lambda_2} = (t^{-1} t;q) ... check the known zero
  CHECK(gen_poch(RationalFnQT(1), Partition::parse("(1)")).is_zero());
}

TEST_CASE("hook normalizations") {
  Partition lam = Partition::parse("(2,1)");
  RationalFnQT q = qv(), t = tv();
  // c = prod (1 - q^arm t^{leg+1}), c' = prod (1 - q^{arm+1} t^leg)
  RationalFnQT c = (1 - q * t.pow(2)) * (1 - t) * (1 - t);
  RationalFnQT cp = (1 - q.pow(2) * t) * (1 - q) * (1 - q);
  CHECK(hook_c(lam) == c);
  CHECK(hook_cprime(lam) == cp);
  CHECK(hook_b(lam) == c / cp);
  for (int w = 0; w <= 4; ++w)
    for (const Partition& p : partitions_of(w, w)) {
      CHECK(hook_b(p) == hook_c(p) / hook_cprime(p));
      // conjugation swaps the two hook products with q and t interchanged
      RationalFnQT swapped =
          hook_cprime(p.conjugate()).rename_var(VQ, VZ).rename_var(VT, VQ).rename_var(VZ, VT);
      CHECK(hook_c(p) == swapped);
    }
}

TEST_CASE("gaussian binomial") {
  CHECK(qbinom(4, 0).is_one());
  CHECK(qbinom(4, 4).is_one());
  RationalFnQT q = qv();
  CHECK(qbinom(4, 2) == 1 + q + q.pow(2) * 2 + q.pow(3) + q.pow(4));
  // symmetry and Pascal recurrence
  for (int N = 1; N <= 6; ++N)
    for (int k = 0; k <= N; ++k) {
      CHECK(qbinom(N, k) == qbinom(N, N - k));
      if (k >= 1)
        CHECK(qbinom(N, k) == qbinom(N - 1, k - 1) + qbinom(N - 1, k) * q.pow(k));
    }
}

TEST_CASE("qt monomial") {
  CHECK(qt_mono(0, 0).is_one());
  CHECK(qt_mono(2, -1) == qv().pow(2) / tv());
  CHECK(qt_mono(1, 1) == qv() * tv());
}
