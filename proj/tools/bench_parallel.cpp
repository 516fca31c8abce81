// Benchmarks the two work-splitting surfaces (verification suite runner and
// region-decomposed integration) in serial and parallel mode, and checks that
// both modes produce identical results.

#include <chrono>
#include <cstdio>

#include "qtsym/selberg.hpp"
#include "qtsym/suite.hpp"

using namespace qtsym;

namespace {

double seconds(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
  int status = 0;

  {
    auto t0 = std::chrono::steady_clock::now();
    SuiteReport ser = run_suite("bisym", 0, 2, false);
    double ts = seconds(t0);
    t0 = std::chrono::steady_clock::now();
    SuiteReport par = run_suite("bisym", 0, 2, true);
    double tp = seconds(t0);
    bool same = ser.cases.size() == par.cases.size() && ser.all_pass == par.all_pass;
    for (size_t i = 0; same && i < ser.cases.size(); ++i)
      same = ser.cases[i].identity == par.cases[i].identity &&
             ser.cases[i].parameters == par.cases[i].parameters &&
             ser.cases[i].pass == par.cases[i].pass;
    std::printf("suite runner:     serial %6.2fs  parallel %6.2fs  results %s\n",
                ts, tp, same ? "identical" : "DIFFER");
    if (!same) status = 1;
  }

  {
    SelbergSpec spec;
    spec.m = 1;
    spec.n = 2;
    spec.alpha = 2;
    spec.beta1 = 3;
    spec.beta2 = 1;
    spec.gamma = -0.25;
    auto t0 = std::chrono::steady_clock::now();
    QuadResult ser = integrate_selberg(spec, false);
    double ts = seconds(t0);
    t0 = std::chrono::steady_clock::now();
    QuadResult par = integrate_selberg(spec, true);
    double tp = seconds(t0);
    bool same = ser.value == par.value && ser.evals == par.evals;
    std::printf("region integrals: serial %6.2fs  parallel %6.2fs  values %s\n",
                ts, tp, same ? "bit-identical" : "DIFFER");
    if (!same) status = 1;
  }
  return status;
}
