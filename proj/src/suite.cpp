#include "qtsym/suite.hpp"

#include <algorithm>
#include <chrono>

#include "json.hpp"
#include "qtsym/bisym.hpp"
#include "qtsym/macdonald.hpp"
#include "qtsym/sampler.hpp"

namespace qtsym {

namespace {

std::string mn_str(int m, int n) {
  return "(m,n)=(" + std::to_string(m) + "," + std::to_string(n) + ")";
}

// ---------------------------------------------------------------- macdonald

VerifyResult check_orthogonality(int dmax) {
  for (int d = 1; d <= dmax; ++d) {
    auto parts = partitions_of(d, d);
    std::vector<SymPoly> polys;
    for (const Partition& lam : parts) polys.push_back(macdonald_P(lam, d));
    for (size_t i = 0; i < parts.size(); ++i)
      for (size_t j = 0; j < parts.size(); ++j) {
        RationalFnQT s = scalar_qt(polys[i], polys[j]);
        if (i == j) {
          if (s * hook_b(parts[i]) != RationalFnQT(1L))
            return {false, "norm mismatch at " + parts[i].str()};
        } else if (!s.is_zero()) {
          return {false,
                  "nonzero product " + parts[i].str() + ", " + parts[j].str()};
        }
      }
  }
  return {};
}

VerifyResult check_triangularity(int dmax) {
  for (int d = 1; d <= dmax; ++d)
    for (const Partition& lam : partitions_of(d, d)) {
      const auto& co = macdonald_coeffs(lam);
      auto self = co.find(lam);
      if (self == co.end() || self->second != RationalFnQT(1L))
        return {false, "leading coefficient not 1 at " + lam.str()};
      for (const auto& [mu, c] : co) {
        if (c.is_zero()) continue;
        if (mu.weight() != d) return {false, "weight leak at " + lam.str()};
        if (!lam.dominates(mu))
          return {false, lam.str() + " has term outside dominance at " + mu.str()};
      }
    }
  return {};
}

VerifyResult check_schur_degeneration(int dmax, std::uint64_t seed) {
  RatSampler smp(seed);
  std::vector<BigRat> samples;
  for (int k = 0; k < 3; ++k) samples.push_back(smp.next());
  for (int d = 1; d <= dmax; ++d)
    for (const Partition& lam : partitions_of(d, d)) {
      const auto& co = macdonald_coeffs(lam);
      SymPoly schur = sym_schur(lam, d);
      auto keys = schur.c;
      for (const auto& [mu, c] : co) keys.emplace(mu, RationalFnQT(0L));
      for (const BigRat& r : samples) {
        std::vector<BigRat> vals(NVARS, BigRat(0));
        vals[VQ] = r;
        vals[VT] = r;
        for (const auto& [mu, unused] : keys) {
          auto it = co.find(mu);
          BigRat lhs = it == co.end() ? BigRat(0) : it->second.eval(vals);
          BigRat rhs = schur.coeff(mu).eval(vals);
          if (lhs != rhs)
            return {false, "q=t coefficient differs at " + lam.str() + " / " + mu.str()};
        }
      }
    }
  return {};
}

VerifyResult check_stability(int dmax) {
  for (int d = 1; d <= dmax; ++d)
    for (const Partition& lam : partitions_of(d, d)) {
      const auto& uni = macdonald_coeffs(lam);
      for (int m = lam.length(); m <= d; ++m) {
        SymPoly p = macdonald_P(lam, m);
        for (const auto& [mu, c] : uni) {
          RationalFnQT want = mu.length() <= m ? c : RationalFnQT(0L);
          if (p.coeff(mu) != want)
            return {false, "truncation mismatch at " + lam.str() + ", m=" +
                               std::to_string(m)};
        }
      }
    }
  return {};
}

VerifyResult check_principal(int dmax, int nmax) {
  const RationalFnQT one(1L);
  for (int n = 1; n <= nmax; ++n)
    for (int d = 0; d <= dmax; ++d)
      for (const Partition& lam : partitions_of(d, d)) {
        RationalFnQT lhs = eval_u(macdonald_P(lam, n), Partition(), one, n);
        RationalFnQT rhs = qt_mono(0, static_cast<int>(lam.n_stat())) *
                           gen_poch(qt_mono(0, n), lam) / hook_c(lam);
        if (lhs != rhs)
          return {false, "specialized value differs at " + lam.str() +
                             ", n=" + std::to_string(n)};
      }
  return {};
}

VerifyResult check_eigen(int dmax, int mmax) {
  RationalFnQT u = RationalFnQT::var(VU);
  for (int m = 1; m <= mmax; ++m)
    for (int d = 0; d <= dmax; ++d)
      for (const Partition& lam : partitions_of(d, m)) {
        SymPoly p = macdonald_P(lam, m);
        SymPoly lhs = macdonald_operator_series(u, p);
        SymPoly rhs = p;
        rhs *= macdonald_eigenvalue(u, lam, m);
        if (!(lhs - rhs).is_zero())
          return {false, "operator eigenvalue fails at " + lam.str() +
                             ", m=" + std::to_string(m)};
      }
  return {};
}

VerifyResult check_cauchy(int cap) {
  const int m = 2;
  std::vector<uint8_t> vars = {static_cast<uint8_t>(vx(0)), static_cast<uint8_t>(vx(1)),
                               static_cast<uint8_t>(vy(0)), static_cast<uint8_t>(vy(1))};
  auto ax = alphabet_formal_x(m);
  auto ay = alphabet_formal_y(m);
  TruncSeries lhs = TruncSeries::constant(vars, cap, RationalFnQT(0L));
  for (int d = 0; d <= cap; ++d)
    for (const Partition& lam : partitions_of(d, m)) {
      SymPoly p = macdonald_P(lam, m);
      TruncSeries term = p.to_series(ax, vars, cap) * p.to_series(ay, vars, cap);
      term *= hook_b(lam);
      lhs += term;
    }
  std::vector<AlphaEntry> num, den;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Mono xy = Mono::var(vx(i)) * Mono::var(vy(j));
      num.push_back({RationalFnQT::var(VT), xy});
      den.push_back({RationalFnQT(1L), xy});
    }
  return compare_series(lhs, series_poch_prod(vars, cap, num, den));
}

VerifyResult check_qbinomial_sum(int cap) {
  const int m = 2;
  std::vector<uint8_t> vars = {static_cast<uint8_t>(vx(0)), static_cast<uint8_t>(vx(1))};
  SeriesParams p({RationalFnQT::var(VA)}, {});
  TruncSeries lhs = sl2_series(p, alphabet_formal_x(m), vars, cap);
  std::vector<AlphaEntry> num, den;
  for (int i = 0; i < m; ++i) {
    num.push_back({RationalFnQT::var(VA), Mono::var(vx(i))});
    den.push_back({RationalFnQT(1L), Mono::var(vx(i))});
  }
  return compare_series(lhs, series_poch_prod(vars, cap, num, den));
}

// -------------------------------------------------------------------- bisym

VerifyResult check_five_way(int m, int n, int points, std::uint64_t seed) {
  RatSampler smp(seed);
  for (int p = 0; p < points; ++p) {
    VerifyResult r = with_resample([&]() -> VerifyResult {
      auto xs = smp.tuple(m);
      auto ys = smp.tuple(n);
      BigRat t = smp.next();
      BigRat v1 = omega_subset(xs, ys, t);
      std::string tag = " at " + mn_str(m, n) + " point " + std::to_string(p);
      if (omega_recursive(xs, ys, t) != v1)
        return {false, "recursion route differs" + tag};
      if (omega_multisum(xs, ys, t) != v1)
        return {false, "multisum route differs" + tag};
      if (omega_symmetrized(xs, ys, t) != v1)
        return {false, "symmetrized route differs" + tag};
      return {};
    });
    if (!r.ok) return r;
  }
  return {};
}

VerifyResult check_ik(int nmax, int points, std::uint64_t seed) {
  RatSampler smp(seed);
  for (int n = 1; n <= nmax; ++n)
    for (int p = 0; p < points; ++p) {
      VerifyResult r = with_resample([&]() -> VerifyResult {
        auto xs = smp.tuple(n);
        auto ys = smp.tuple(n);
        BigRat t = smp.next();
        if (F_subset(t, xs, ys, t) != ik_determinant(xs, ys, t))
          return {false, "determinant differs at n=" + std::to_string(n) +
                             " point " + std::to_string(p)};
        return {};
      });
      if (!r.ok) return r;
    }
  return {};
}

VerifyResult check_asm_expansion(int nmax, int points, std::uint64_t seed) {
  RatSampler smp(seed);
  for (int n = 1; n <= nmax; ++n)
    for (int p = 0; p < points; ++p) {
      VerifyResult r = with_resample([&]() -> VerifyResult {
        auto xs = smp.tuple(n);
        auto ys = smp.tuple(n);
        BigRat t = smp.next();
        if (asm_expansion(xs, ys, t) != omega_subset(xs, ys, t))
          return {false, "sign-matrix sum differs at n=" + std::to_string(n) +
                             " point " + std::to_string(p)};
        return {};
      });
      if (!r.ok) return r;
    }
  return {};
}

VerifyResult check_asm_counts() {
  const long want[] = {1, 2, 7, 42};
  for (int n = 1; n <= 4; ++n)
    if (static_cast<long>(enumerate_asm(n).size()) != want[n - 1])
      return {false, "matrix count wrong at n=" + std::to_string(n)};
  return {};
}

VerifyResult check_eps_product(int mmax, int points, std::uint64_t seed) {
  RatSampler smp(seed);
  for (int m = 1; m <= mmax; ++m)
    for (int p = 0; p < points; ++p) {
      VerifyResult r = with_resample([&]() -> VerifyResult {
        auto xs = smp.tuple(m);
        BigRat u = smp.next(), t = smp.next();
        BigRat a = BigRat(u * field_pow(t, m - 1));
        BigRat rhs(1);
        for (int i = 1; i <= m; ++i)
          rhs *= field_div(BigRat(BigRat(1) - u * field_pow(t, m - i)),
                           BigRat(BigRat(1) - a * xs[i - 1]));
        if (F_eps_subset(u, xs, a, t) != rhs)
          return {false, "aligned-parameter product differs at m=" +
                             std::to_string(m) + " point " + std::to_string(p)};
        return {};
      });
      if (!r.ok) return r;
    }
  return {};
}

VerifyResult check_eps_top(int mmax, int points, std::uint64_t seed) {
  RatSampler smp(seed);
  for (int m = 1; m <= mmax; ++m)
    for (int p = 0; p < points; ++p) {
      VerifyResult r = with_resample([&]() -> VerifyResult {
        auto xs = smp.tuple(m);
        BigRat a = smp.next(), t = smp.next();
        BigRat rhs = field_pow(t, m * (m - 1) / 2);
        for (const BigRat& x : xs) rhs *= x;
        for (int i = 1; i <= m; ++i)
          rhs *= field_div(BigRat(BigRat(1) - a * field_pow(t, 1 - i)),
                           BigRat(BigRat(1) - a * xs[i - 1]));
        if (F_eps_subset(BigRat(1), xs, a, t) != rhs)
          return {false, "u=1 product differs at m=" + std::to_string(m) +
                             " point " + std::to_string(p)};
        return {};
      });
      if (!r.ok) return r;
    }
  return {};
}

VerifyResult check_inversion(int points, std::uint64_t seed) {
  RatSampler smp(seed);
  const int grid[][2] = {{1, 1}, {1, 2}, {2, 2}, {2, 3}};
  for (auto [m, n] : grid)
    for (int p = 0; p < points; ++p) {
      VerifyResult r = with_resample([&]() -> VerifyResult {
        auto xs = smp.tuple(m);
        auto ys = smp.tuple(n);
        BigRat u = smp.next(), t = smp.next();
        std::vector<BigRat> xi, yi;
        for (const BigRat& x : xs) xi.push_back(field_div(BigRat(1), x));
        for (const BigRat& y : ys) yi.push_back(field_div(BigRat(1), y));
        BigRat lhs = F_subset(u, xs, ys, t);
        BigRat rhs = F_subset(BigRat(u * field_pow(t, m - n - 1)), xi, yi,
                              field_div(BigRat(1), t));
        if (lhs != rhs)
          return {false, "inverted-alphabet value differs at " + mn_str(m, n) +
                             " point " + std::to_string(p)};
        return {};
      });
      if (!r.ok) return r;
    }
  return {};
}

VerifyResult check_h_routes(int points, std::uint64_t seed) {
  RatSampler smp(seed);
  const int grid[][2] = {{1, 1}, {1, 2}, {2, 2}, {2, 3}};
  for (auto [m, n] : grid)
    for (int p = 0; p < points; ++p) {
      VerifyResult r = with_resample([&]() -> VerifyResult {
        auto xs = smp.tuple(m);
        auto ys = smp.tuple(n);
        BigRat v = h_multisum(xs, ys);
        std::string tag = " at " + mn_str(m, n) + " point " + std::to_string(p);
        if (h_symmetrized(xs, ys) != v)
          return {false, "symmetrized interaction factor differs" + tag};
        if (h_limit(xs, ys) != v)
          return {false, "t->1 limit route differs" + tag};
        return {};
      });
      if (!r.ok) return r;
    }
  return {};
}

VerifyResult check_kernel_routes(int box) {
  RationalFnQT u = RationalFnQT::var(VU), z = RationalFnQT::var(VZ);
  const int grid[][2] = {{1, 1}, {1, 2}, {2, 2}, {2, 3}};
  for (auto [m, n] : grid)
    for (const Partition& lam : partitions_in_box(m, box))
      for (const Partition& mu : partitions_in_box(n, box)) {
        std::string tag = " at " + mn_str(m, n) + " " + lam.str() + "/" + mu.str();
        if (W_explicit(lam, mu, m, n, u, z) != W_via_F(lam, mu, m, n, u, z))
          return {false, "type-two kernel routes differ" + tag};
        if (V_explicit(lam, mu, m, n, u, z) != V_via_F(lam, mu, m, n, u, z))
          return {false, "type-one kernel routes differ" + tag};
      }
  return {};
}

// ----------------------------------------------------------------- lrkernel

VerifyResult check_lr_kernel(int m, int n, int box) {
  for (const Partition& lam : partitions_in_box(std::min(m, 2), box))
    for (const Partition& mu : partitions_in_box(std::min(n, 3), box)) {
      VerifyResult r = verify_lr_kernel_identity(lam, mu, m, n);
      if (!r.ok) {
        r.detail += " at " + mn_str(m, n) + " " + lam.str() + "/" + mu.str();
        return r;
      }
    }
  return {};
}

// ------------------------------------------------------------------- runner

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

void add_case(std::vector<SuiteCase>& out, std::string id, std::string params,
              int cap, std::function<VerifyResult()> fn) {
  out.push_back({std::move(id), std::move(params), cap, std::move(fn)});
}

std::vector<SuiteCase> macdonald_cases(std::uint64_t seed, int cap) {
  std::vector<SuiteCase> cs;
  add_case(cs, "macdonald-orthogonality", "weight<=4, universal alphabet", 4,
           [] { return check_orthogonality(4); });
  add_case(cs, "macdonald-unitriangularity", "weight<=5", 5,
           [] { return check_triangularity(5); });
  add_case(cs, "macdonald-schur-degeneration", "weight<=4, q=t at 3 points", 4,
           [seed] { return check_schur_degeneration(4, seed + 11); });
  add_case(cs, "macdonald-stability", "weight<=4, all alphabets", 4,
           [] { return check_stability(4); });
  add_case(cs, "macdonald-principal", "weight<=4, n<=3", 4,
           [] { return check_principal(4, 3); });
  add_case(cs, "macdonald-operator-eigenvalue", "weight<=3, m<=3", 3,
           [] { return check_eigen(3, 3); });
  add_case(cs, "macdonald-cauchy-kernel", "m=n=2", std::max(cap, 4),
           [cap] { return check_cauchy(std::max(cap, 4)); });
  add_case(cs, "macdonald-qbinomial-sum", "m=2, formal a", std::max(cap, 4),
           [cap] { return check_qbinomial_sum(std::max(cap, 4)); });
  return cs;
}

std::vector<SuiteCase> bisym_cases(std::uint64_t seed, int /*cap*/) {
  std::vector<SuiteCase> cs;
  const int grid[][2] = {{1, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 3}, {3, 4}};
  int salt = 100;
  for (auto [m, n] : grid) {
    std::uint64_t s = seed + salt++;
    add_case(cs, "bisym-five-way", mn_str(m, n) + ", 5 points", 0,
             [=] { return check_five_way(m, n, 5, s); });
  }
  add_case(cs, "bisym-determinant", "m=n<=3, 3 points", 0,
           [seed] { return check_ik(3, 3, seed + 201); });
  add_case(cs, "bisym-sign-matrix-expansion", "m=n<=3, 3 points", 0,
           [seed] { return check_asm_expansion(3, 3, seed + 202); });
  add_case(cs, "bisym-sign-matrix-count", "n<=4", 0, [] { return check_asm_counts(); });
  add_case(cs, "bisym-eps-aligned", "m<=3, 5 points", 0,
           [seed] { return check_eps_product(3, 5, seed + 203); });
  add_case(cs, "bisym-eps-u1", "m<=3, 5 points", 0,
           [seed] { return check_eps_top(3, 5, seed + 204); });
  add_case(cs, "bisym-inversion", "m<=2, n<=3, 3 points", 0,
           [seed] { return check_inversion(3, seed + 205); });
  add_case(cs, "bisym-h-routes", "m<=2, n<=3, 3 points", 0,
           [seed] { return check_h_routes(3, seed + 206); });
  add_case(cs, "bisym-kernel-routes", "boxes (2^m)/(2^n), formal u,z", 2,
           [] { return check_kernel_routes(2); });
  return cs;
}

std::vector<SuiteCase> lrkernel_cases(std::uint64_t, int cap) {
  std::vector<SuiteCase> cs;
  const int grid[][2] = {{1, 1}, {1, 2}, {2, 2}, {2, 3}};
  for (auto [m, n] : grid) {
    std::string box = "lambda<=(" + std::to_string(cap) + "^2), mu<=(" +
                      std::to_string(cap) + "^3)";
    add_case(cs, "lrkernel-identity", mn_str(m, n) + ", " + box, cap,
             [=] { return check_lr_kernel(m, n, cap); });
  }
  return cs;
}

std::vector<SuiteCase> qbinomial_cases(std::uint64_t, int cap) {
  std::vector<SuiteCase> cs;
  for (int m = 0; m <= 2; ++m)
    for (int n = std::max(m, 1); n <= 3; ++n)
      for (int sg = 0; sg <= 1; ++sg) {
        std::string params = mn_str(m, n) + ", sigma=" + std::to_string(sg);
        add_case(cs, "qbinomial-first", params, cap,
                 [=] { return verify_qbinomial_first(m, n, sg, cap); });
        add_case(cs, "series-yx-reduction", params, cap,
                 [=] { return verify_prop_yX(m, n, sg, cap); });
        add_case(cs, "series-principal-collapse", params, cap, [=] {
          SeriesParams p({RationalFnQT::var(VA), RationalFnQT(BigRat(2))},
                         {RationalFnQT(BigRat(1, 3))}, sg);
          return verify_principal_collapse(p, m, n, cap);
        });
        add_case(cs, "series-y-zero", params, cap,
                 [=] { return verify_y_zero(m, n, sg, cap); });
        add_case(cs, "series-a1-one", params, cap,
                 [=] { return verify_a1_one(m, n, sg, cap); });
        if (m >= 1 && n >= 2) {
          add_case(cs, "series-stability-x", params, cap,
                   [=] { return verify_stability1(m, n, sg, cap); });
          add_case(cs, "series-stability-xy", params, cap,
                   [=] { return verify_stability2(m, n, sg, cap); });
        }
        if (m >= 1) {
          add_case(cs, "series-iterated-x", params, cap,
                   [=] { return verify_stability_iterated1(m, n, sg, cap); });
          add_case(cs, "series-iterated-xy", params, cap,
                   [=] { return verify_stability_iterated2(m, n, sg, cap); });
        }
      }
  for (int n = 1; n <= 3; ++n)
    for (int sg = 0; sg <= 1; ++sg) {
      std::string params = "n=" + std::to_string(n) + ", sigma=" + std::to_string(sg);
      add_case(cs, "qbinomial-second", params, cap,
               [=] { return verify_qbinomial_second(n, sg, cap); });
      add_case(cs, "series-swap-symmetry", params, cap,
               [=] { return verify_swap_symmetry(n, sg, cap); });
    }
  return cs;
}

std::vector<SuiteCase> euler_cases(std::uint64_t, int cap) {
  std::vector<SuiteCase> cs;
  RationalFnQT a(BigRat(2)), b(BigRat(1, 3)), c(BigRat(2, 7));
  for (int m = 0; m <= 2; ++m)
    for (int n = std::max(m, 1); n <= 3; ++n)
      for (int sg = 0; sg <= 1; ++sg) {
        std::string params = mn_str(m, n) + ", sigma=" + std::to_string(sg) +
                             ", (a,b,c)=(2,1/3,2/7)";
        add_case(cs, "euler-transform", params, cap,
                 [=] { return verify_euler_transform(a, b, c, m, n, sg, cap); });
      }
  add_case(cs, "euler-transform-degenerate", "(m,n)=(1,2), sigma=0, b=c", cap, [=] {
    return verify_euler_transform(a, b, b, 1, 2, 0, cap);
  });
  for (int m = 0; m <= 2; ++m)
    add_case(cs, "euler-2phi1-generalized", "m=" + std::to_string(m) + ", formal a,u",
             cap, [=] {
               return verify_generalized_2phi1(m, RationalFnQT::var(VA),
                                               RationalFnQT::var(VU), cap);
             });
  return cs;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"macdonald", "bisym", "lrkernel", "qbinomial", "euler"};
}

std::vector<SuiteCase> build_suite(const std::string& name, std::uint64_t seed, int cap) {
  if (name == "macdonald") return macdonald_cases(seed, cap);
  if (name == "bisym") return bisym_cases(seed, cap);
  if (name == "lrkernel") return lrkernel_cases(seed, cap);
  if (name == "qbinomial") return qbinomial_cases(seed, cap);
  if (name == "euler") return euler_cases(seed, cap);
  if (name == "all") {
    std::vector<SuiteCase> cs;
    for (const std::string& s : suite_names())
      for (SuiteCase& c : build_suite(s, seed, cap)) cs.push_back(std::move(c));
    return cs;
  }
  throw domain_error("unknown suite: " + name);
}

SuiteReport run_suite(const std::string& name, std::uint64_t seed, int cap,
                      bool parallel) {
  auto cases = build_suite(name, seed, cap);
  const int N = static_cast<int>(cases.size());
  std::vector<CaseResult> res(cases.size());
  auto exec = [&](int i) {
    auto t0 = std::chrono::steady_clock::now();
    VerifyResult v;
    try {
      v = cases[i].run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    res[i] = {cases[i].identity, cases[i].parameters, cases[i].cap,
              v.ok,              ms_since(t0),        v.ok ? "" : v.detail};
  };
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (int i = 0; i < N; ++i) exec(i);
  } else {
    for (int i = 0; i < N; ++i) exec(i);
  }
  std::sort(res.begin(), res.end(), [](const CaseResult& a, const CaseResult& b) {
    return std::tie(a.identity, a.parameters) < std::tie(b.identity, b.parameters);
  });
  SuiteReport rep;
  rep.suite = name;
  rep.cases = std::move(res);
  for (const CaseResult& c : rep.cases) rep.all_pass = rep.all_pass && c.pass;
  return rep;
}

std::string report_json(const SuiteReport& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["all_pass"] = r.all_pass;
  j["cases"] = nlohmann::ordered_json::array();
  for (const CaseResult& c : r.cases) {
    nlohmann::ordered_json e;
    e["identity"] = c.identity;
    e["parameters"] = c.parameters;
    e["cap"] = c.cap;
    e["verdict"] = c.pass ? "pass" : "fail";
    e["elapsed_ms"] = c.elapsed_ms;
    if (!c.pass) e["failing_coefficient"] = c.failing_coefficient;
    j["cases"].push_back(std::move(e));
  }
  return j.dump(2) + "\n";
}

std::string report_summary(const SuiteReport& r) {
  std::string out;
  int passed = 0;
  for (const CaseResult& c : r.cases) {
    out += (c.pass ? "PASS " : "FAIL ") + c.identity + " [" + c.parameters + "]";
    if (!c.pass) out += ": " + c.failing_coefficient;
    out += "\n";
    passed += c.pass ? 1 : 0;
  }
  out += "suite " + r.suite + ": " + std::to_string(passed) + "/" +
         std::to_string(r.cases.size()) + (r.all_pass ? " passed\n" : " passed, FAIL\n");
  return out;
}

}  // namespace qtsym
