#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qtsym/rational.hpp"

namespace qtsym {

// Deterministic stream of small rationals in (0,1) for checking exact
// identities at random points.  Numerators and denominators come from
// disjoint ranges, so samples are nonzero and tuples rarely collide.
class RatSampler {
 public:
  explicit RatSampler(std::uint64_t seed) : rng_(seed) {}

  BigRat next() {
    long num = static_cast<long>(rng_() % 60) + 1;
    long den = static_cast<long>(rng_() % 67) + 61;
    BigRat r(num, den);
    r.canonicalize();
    return r;
  }

  std::vector<BigRat> tuple(int k) {  // pairwise distinct
    std::vector<BigRat> out;
    while (static_cast<int>(out.size()) < k) {
      BigRat c = next();
      bool dup = false;
      for (const BigRat& b : out) dup = dup || b == c;
      if (!dup) out.push_back(c);
    }
    return out;
  }

 private:
  std::mt19937_64 rng_;
};

// A sampled point occasionally lands on a removable singularity of one
// evaluation route; rerun the check on fresh samples when that happens.
template <class F>
auto with_resample(F&& f) -> decltype(f()) {
  for (int attempt = 0;; ++attempt) {
    try {
      return f();
    } catch (const pole_error&) {
      if (attempt >= 19) throw;
    }
  }
}

}  // namespace qtsym
