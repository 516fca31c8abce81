// Command-line driver: render Macdonald polynomials and structure constants,
// evaluate the bisymmetric kernels at exact rational points, run the identity
// verification suites, and compare the numeric integral against its closed
// form.  JSON goes to stdout, human-readable summaries to stderr.
// Exit codes: 0 pass, 1 verification failure, 2 usage or parameter error.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qtsym/bisym.hpp"
#include "qtsym/macdonald.hpp"
#include "qtsym/selberg.hpp"
#include "qtsym/suite.hpp"

namespace {

qtsym::BigRat parse_rat(const std::string& s) {
  try {
    qtsym::BigRat r(s);
    if (r.get_den() == 0) throw qtsym::domain_error("zero denominator: " + s);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw qtsym::domain_error("bad rational: " + s);
  }
}

std::vector<qtsym::BigRat> parse_rat_list(const std::string& s) {
  std::vector<qtsym::BigRat> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(parse_rat(tok));
  return out;
}

// accepts "0", "1", or "1^r"
int parse_column_nu(const std::string& s) {
  if (s == "0") return 0;
  if (s == "1") return 1;
  if (s.rfind("1^", 0) == 0) {
    size_t pos = 0;
    int r = std::stoi(s.substr(2), &pos);
    if (pos == s.size() - 2 && r >= 0) return r;
  }
  throw qtsym::domain_error("bad --nu, expected 0 or 1^r: " + s);
}

int run_macdonald(const std::string& lambda, int m) {
  qtsym::Partition lam = qtsym::Partition::parse(lambda);
  std::cout << qtsym::macdonald_P(lam, m).str() << "\n";
  return 0;
}

int run_lrcoef(const std::string& mu_s, const std::string& nu_s,
               const std::string& lambda_s, int m) {
  qtsym::Partition mu = qtsym::Partition::parse(mu_s);
  qtsym::Partition nu = qtsym::Partition::parse(nu_s);
  qtsym::Partition lam = qtsym::Partition::parse(lambda_s);
  if (m == 0) m = mu.length() + nu.length();
  std::cout << qtsym::lr_coeff(mu, nu, lam, m).str() << "\n";
  return 0;
}

int run_bisym(const std::string& repr, const std::string& u_s, const std::string& x_s,
              const std::string& y_s, const std::string& t_s) {
  using qtsym::BigRat;
  BigRat u = parse_rat(u_s), t = parse_rat(t_s);
  std::vector<BigRat> x = parse_rat_list(x_s), y = parse_rat_list(y_s);
  const int m = static_cast<int>(x.size()), n = static_cast<int>(y.size());
  if (repr != "subset" && u != 1)
    throw qtsym::domain_error("--u is only meaningful for --repr subset");
  BigRat v;
  if (repr == "subset") {
    v = qtsym::F_subset(u, x, y, t);
  } else if (repr == "recursive") {
    v = qtsym::omega_recursive(x, y, t);
  } else if (repr == "multisum") {
    v = qtsym::omega_multisum(x, y, t);
  } else if (repr == "symmetrized") {
    v = qtsym::omega_symmetrized(x, y, t);
  } else if (repr == "determinant") {
    if (m != n) throw qtsym::domain_error("--repr determinant needs |x| = |y|");
    // omega(x,y;t) = det-form of F(t; 1/x, y; t) times prod y_i / x_i
    std::vector<BigRat> xi;
    for (const BigRat& c : x) xi.push_back(qtsym::field_div(BigRat(1), c));
    v = qtsym::ik_determinant(xi, y, t);
    for (int i = 0; i < n; ++i) v *= qtsym::field_div(y[i], x[i]);
  } else if (repr == "asm") {
    if (m != n) throw qtsym::domain_error("--repr asm needs |x| = |y|");
    v = qtsym::asm_expansion(x, y, t);
  } else {
    throw qtsym::domain_error("unknown repr: " + repr);
  }
  std::cout << v.get_str() << "\n";
  return 0;
}

int run_verify(const std::string& suite, std::uint64_t seed, int cap, bool serial) {
  qtsym::SuiteReport rep = qtsym::run_suite(suite, seed, cap, !serial);
  std::cout << qtsym::report_json(rep);
  std::cerr << qtsym::report_summary(rep);
  return rep.all_pass ? 0 : 1;
}

int run_selberg(const qtsym::SelbergSpec& spec) {
  if (!qtsym::selberg_params_valid(spec)) {
    std::cerr << "parameters outside the convergence domain\n";
    return 2;
  }
  qtsym::QuadResult q = qtsym::integrate_selberg(spec);
  double rhs = qtsym::selberg_rhs(spec);
  double rel = std::fabs(q.value - rhs) / std::max(std::fabs(rhs), 1e-300);
  nlohmann::ordered_json j;
  j["lhs"] = q.value;
  j["rhs"] = rhs;
  j["rel_err"] = rel;
  j["regions"] = q.regions;
  j["evals"] = q.evals;
  std::cout << j.dump(2) << "\n";
  bool pass = rel < spec.rel_tol;
  std::cerr << (pass ? "PASS" : "FAIL") << " integral vs closed form, rel_err="
            << rel << "\n";
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Macdonald polynomial kernels, bisymmetric functions and their "
               "identity suites"};
  app.require_subcommand(1);

  auto* cmd_mac = app.add_subcommand("macdonald", "render a Macdonald polynomial");
  std::string lambda = "0";
  int mac_m = 1;
  cmd_mac->add_option("--lambda", lambda, "partition, e.g. \"(2,1)\" or \"0\"")
      ->required();
  cmd_mac->add_option("--m", mac_m, "alphabet size")->required();

  auto* cmd_lr = app.add_subcommand("lrcoef", "q,t structure constant f^lambda_{mu nu}");
  std::string lr_mu, lr_nu, lr_lam;
  int lr_m = 0;
  cmd_lr->add_option("--mu", lr_mu)->required();
  cmd_lr->add_option("--nu", lr_nu)->required();
  cmd_lr->add_option("--lambda", lr_lam)->required();
  cmd_lr->add_option("--m", lr_m, "alphabet size (default: faithful)");

  auto* cmd_bi = app.add_subcommand("bisym", "evaluate the bisymmetric function");
  std::string repr = "subset", bi_u = "1", bi_x, bi_y, bi_t;
  cmd_bi->add_option("--repr", repr, "subset|recursive|multisum|symmetrized|determinant|asm");
  cmd_bi->add_option("--u", bi_u, "parameter u (subset repr only)");
  cmd_bi->add_option("--x", bi_x, "comma-separated rationals")->required();
  cmd_bi->add_option("--y", bi_y, "comma-separated rationals")->required();
  cmd_bi->add_option("--t", bi_t, "parameter t")->required();

  auto* cmd_ver = app.add_subcommand("verify", "run an identity suite");
  std::string suite = "all";
  std::uint64_t seed = 0;
  int cap = 3;
  bool serial = false;
  cmd_ver->add_option("--suite", suite, "macdonald|bisym|lrkernel|qbinomial|euler|all");
  cmd_ver->add_option("--seed", seed, "sampler seed (default 0)");
  cmd_ver->add_option("--cap", cap, "series truncation / box bound");
  cmd_ver->add_flag("--serial", serial, "disable the parallel case runner");

  auto* cmd_sel = app.add_subcommand("selberg", "numeric integral vs closed form");
  qtsym::SelbergSpec spec;
  std::string nu_s = "0";
  cmd_sel->add_option("--m", spec.m)->required();
  cmd_sel->add_option("--n", spec.n)->required();
  cmd_sel->add_option("--alpha", spec.alpha)->required();
  cmd_sel->add_option("--beta1", spec.beta1)->required();
  cmd_sel->add_option("--beta2", spec.beta2)->required();
  cmd_sel->add_option("--gamma", spec.gamma)->required();
  cmd_sel->add_option("--nu", nu_s, "column insertion, 0 or 1^r");
  cmd_sel->add_option("--rel-tol", spec.rel_tol, "relative tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (cmd_mac->parsed()) return run_macdonald(lambda, mac_m);
    if (cmd_lr->parsed()) return run_lrcoef(lr_mu, lr_nu, lr_lam, lr_m);
    if (cmd_bi->parsed()) return run_bisym(repr, bi_u, bi_x, bi_y, bi_t);
    if (cmd_ver->parsed()) return run_verify(suite, seed, cap, serial);
    if (cmd_sel->parsed()) {
      spec.er = parse_column_nu(nu_s);
      return run_selberg(spec);
    }
  } catch (const qtsym::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
