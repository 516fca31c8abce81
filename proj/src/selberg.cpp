#include "qtsym/selberg.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>

namespace qtsym {

namespace {

constexpr double kPi = std::numbers::pi;

void extend_maps(int m, int n, std::vector<int>& gap, std::vector<ChainMap>& out) {
    int i = static_cast<int>(gap.size());
    if (i == m) {
        out.push_back(ChainMap{m, n, gap});
        return;
    }
    int lo = gap.empty() ? 1 : gap.back();
    int hi = n - m + i + 1;
    for (int g = lo; g <= hi; ++g) {
        gap.push_back(g);
        extend_maps(m, n, gap, out);
        gap.pop_back();
    }
}

}  // namespace

std::vector<ChainMap> enumerate_chain_maps(int m, int n) {
    if (m < 0 || n < m) throw domain_error("enumerate_chain_maps: need 0 <= m <= n");
    std::vector<ChainMap> out;
    std::vector<int> gap;
    extend_maps(m, n, gap, out);
    return out;
}

long chain_map_count(int m, int n) {
    if (m < 0 || n < m) throw domain_error("chain_map_count: need 0 <= m <= n");
    long b = 1;
    for (int i = 1; i <= m; ++i) b = b * (n + i) / i;  // running binomial, exact
    long num = b * (n - m + 1);
    if (num % (n + 1) != 0) throw internal_error("chain_map_count: inexact division");
    return num / (n + 1);
}

double chain_weight(const ChainMap& M, double gamma) {
    double w = 1;
    for (int i = 1; i <= M.m; ++i) {
        int a = i + M.n - M.m - M.gap[i - 1] + 1;
        int b = i + M.n - M.m;
        w *= std::sin(kPi * a * gamma) / std::sin(kPi * b * gamma);
    }
    return w;
}

SignedLog log_gamma_signed(double x) {
    if (x > 0) return {std::lgamma(x), 1};
    double s = std::sin(kPi * x);
    if (s == 0 || x == std::floor(x))
        throw domain_error("log_gamma_signed: pole at nonpositive integer");
    // Gamma(x) = pi / (sin(pi x) Gamma(1-x)) for x < 0
    return {std::log(kPi) - std::log(std::fabs(s)) - std::lgamma(1 - x),
            s > 0 ? 1 : -1};
}

double rising_poch(double a, int k) {
    double p = 1;
    for (int i = 0; i < k; ++i) p *= a + i;
    return p;
}

bool selberg_params_valid(const SelbergSpec& s) {
    if (s.m < 0 || s.n < 1 || s.m > s.n) return false;
    if (s.alpha <= 0 || s.beta1 <= 0 || s.beta2 <= 0) return false;
    double lim = 1.0 / s.n;
    auto cap = [&lim](double num, int den) {
        if (den > 0) lim = std::min(lim, num / den);
    };
    cap(s.alpha, s.n - 1);
    cap(s.beta1, s.m - 1);
    cap(s.beta2, s.n - s.m - 1);
    cap(s.beta1 + s.beta2, s.m - 2);
    return -lim < s.gamma && s.gamma < 0;
}

namespace {

struct LogProd {
    double lg = 0;
    int sign = 1;
    void mul(SignedLog s) {
        lg += s.log_abs;
        sign *= s.sign;
    }
    void div(SignedLog s) {
        lg -= s.log_abs;
        sign *= s.sign;
    }
    double value() const { return sign * std::exp(lg); }
};

}  // namespace

double selberg_rhs(const SelbergSpec& s) {
    const double a = s.alpha, b1 = s.beta1, b2 = s.beta2, g = s.gamma;
    const int m = s.m, n = s.n;
    std::vector<int> nu(static_cast<size_t>(std::max(m, 1)), 0);
    for (int i = 0; i < s.er; ++i) nu[i] = 1;
    double front = 1;
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) {
            int d = nu[i - 1] - nu[j - 1];
            front *= rising_poch((j - i + 1) * g, d) / rising_poch((j - i) * g, d);
        }
    LogProd p;
    for (int i = 1; i <= n; ++i) {
        p.mul(log_gamma_signed(a + (i - 1) * g));
        p.mul(log_gamma_signed(i * g));
        p.div(log_gamma_signed(g));
    }
    for (int i = 1; i <= n - m; ++i) {
        p.mul(log_gamma_signed(b2 + (i - 1) * g));
        p.div(log_gamma_signed(a + b2 + (i + n - 2) * g));
    }
    for (int i = 1; i <= m; ++i) {
        p.mul(log_gamma_signed(b1 + (m - i) * g + nu[i - 1]));
        p.mul(log_gamma_signed(b1 + b2 + (m - i - 1) * g + nu[i - 1]));
        p.mul(log_gamma_signed((i - n - 1) * g));
        p.mul(log_gamma_signed(i * g));
        p.div(log_gamma_signed(b1 + (2 * m - n - i - 1) * g + nu[i - 1]));
        p.div(log_gamma_signed(a + b1 + b2 + (m + n - i - 2) * g + nu[i - 1]));
        p.div(log_gamma_signed(g));
    }
    return front * p.value();
}

double selberg_rhs_indicator(const SelbergSpec& s) {
    const double a = s.alpha, b1 = s.beta1, b2 = s.beta2, g = s.gamma;
    const int m = s.m, n = s.n, r = s.er;
    double front = 1;  // binom(m, r)
    for (int i = 1; i <= r; ++i) front = front * (m - i + 1) / i;
    LogProd p;
    for (int i = 1; i <= n; ++i) {
        p.mul(log_gamma_signed(a + (i - 1) * g));
        p.mul(log_gamma_signed(i * g));
        p.div(log_gamma_signed(g));
    }
    for (int i = 1; i <= n - m; ++i) {
        p.mul(log_gamma_signed(b2 + (i - 1) * g));
        p.div(log_gamma_signed(a + b2 + (i + n - 2) * g));
    }
    for (int i = 1; i <= m; ++i) {
        int chi = i <= r ? 1 : 0;
        p.mul(log_gamma_signed(b1 + (m - i) * g + chi));
        p.mul(log_gamma_signed(b1 + b2 + (m - i - 1) * g + chi));
        p.mul(log_gamma_signed((i - n - 1) * g));
        p.mul(log_gamma_signed(i * g));
        p.div(log_gamma_signed(b1 + (2 * m - n - i - 1) * g + chi));
        p.div(log_gamma_signed(a + b1 + b2 + (m + n - i - 2) * g + chi));
        p.div(log_gamma_signed(g));
    }
    return front * p.value();
}

namespace {

double h_rec(const std::vector<double>& x, const std::vector<double>& y,
             unsigned used, size_t i) {
    if (i == x.size()) return 1;
    double s = 0;
    for (size_t l = 0; l < y.size(); ++l)
        if (!(used >> l & 1u))
            s += y[l] / (y[l] - x[i]) * h_rec(x, y, used | 1u << l, i + 1);
    return s;
}

}  // namespace

double h_selberg(const std::vector<double>& x, const std::vector<double>& y) {
    double scale = 1;  // (n-m)!/n!
    for (size_t k = y.size() - x.size() + 1; k <= y.size(); ++k) scale /= static_cast<double>(k);
    return scale * h_rec(x, y, 0, 0);
}

double elem_sym(const std::vector<double>& x, int r) {
    if (r < 0 || r > static_cast<int>(x.size())) return 0;
    std::vector<double> e(static_cast<size_t>(r) + 1, 0.0);
    e[0] = 1;
    for (double xi : x)
        for (int k = std::min<int>(r, static_cast<int>(x.size())); k >= 1; --k)
            e[k] += e[k - 1] * xi;
    return e[r];
}

double integrand_value(const SelbergSpec& s, const std::vector<double>& x,
                       const std::vector<double>& y) {
    double f = h_selberg(x, y);
    if (s.er > 0) f *= elem_sym(x, s.er);
    for (double xi : x) f *= std::pow(xi, s.beta1 - 1);
    for (double yi : y) f *= std::pow(1 - yi, s.alpha - 1) * std::pow(yi, s.beta2 - 1);
    for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = i + 1; j < x.size(); ++j)
            f *= std::pow(std::fabs(x[i] - x[j]), 2 * s.gamma);
    for (size_t i = 0; i < y.size(); ++i)
        for (size_t j = i + 1; j < y.size(); ++j)
            f *= std::pow(std::fabs(y[i] - y[j]), 2 * s.gamma);
    for (double xi : x)
        for (double yj : y) f *= std::pow(std::fabs(xi - yj), -s.gamma);
    return f;
}

namespace {

struct Slot {
    bool is_x;
    int idx;
};

// Total coordinate order of region M: x_i sits just before y_{M(i)}.
std::vector<Slot> region_slots(const ChainMap& M) {
    std::vector<Slot> s;
    int i = 0;
    for (int j = 1; j <= M.n; ++j) {
        while (i < M.m && M.gap[i] == j) s.push_back({true, i++});
        s.push_back({false, j - 1});
    }
    return s;
}

struct TSRule {
    std::vector<double> node, weight;
};

// tanh-sinh nodes on (-1,1); double-exponential weight decay absorbs the
// power-law blowups the integrand has at coinciding coordinates.
TSRule ts_rule(int level) {
    TSRule r;
    double h = std::ldexp(1.0, -level);
    int K = static_cast<int>(std::ceil(4.0 / h));
    for (int k = -K; k <= K; ++k) {
        double u = k * h;
        double sh = std::sinh(u);
        double q = std::tanh(kPi / 2 * sh);
        double ch = std::cosh(kPi / 2 * sh);
        double w = h * kPi / 2 * std::cosh(u) / (ch * ch);
        if (1 - std::fabs(q) < 1e-15 || w < 1e-290) continue;
        r.node.push_back(q);
        r.weight.push_back(w);
    }
    return r;
}

double nested_integral(const SelbergSpec& sp, const std::vector<Slot>& slots,
                       const TSRule& rule, std::vector<double>& x,
                       std::vector<double>& y, int k, double upper,
                       long long& evals) {
    double sum = 0;
    for (size_t t = 0; t < rule.node.size(); ++t) {
        double c = upper * 0.5 * (1 + rule.node[t]);
        if (slots[k].is_x)
            x[slots[k].idx] = c;
        else
            y[slots[k].idx] = c;
        double f;
        if (k == 0) {
            f = integrand_value(sp, x, y);
            ++evals;
        } else {
            f = nested_integral(sp, slots, rule, x, y, k - 1, c, evals);
        }
        sum += rule.weight[t] * upper * 0.5 * f;
    }
    return sum;
}

}  // namespace

QuadResult integrate_selberg(const SelbergSpec& s, bool parallel) {
    if (s.m < 0 || s.n < 1 || s.m > s.n)
        throw domain_error("integrate_selberg: need 0 <= m <= n, n >= 1");
    auto maps = enumerate_chain_maps(s.m, s.n);
    const int R = static_cast<int>(maps.size());
    std::vector<std::vector<Slot>> slots(maps.size());
    std::vector<double> weights(maps.size());
    for (int r = 0; r < R; ++r) {
        slots[r] = region_slots(maps[r]);
        weights[r] = chain_weight(maps[r], s.gamma);
    }
    const int dims = s.m + s.n;

    QuadResult out;
    out.regions = R;
    out.err_est = std::numeric_limits<double>::infinity();
    auto t0 = std::chrono::steady_clock::now();
    double prev = std::numeric_limits<double>::quiet_NaN();
    for (int level = 2; level <= 7; ++level) {
        TSRule rule = ts_rule(level);
        std::vector<double> vals(maps.size(), 0.0);
        std::vector<long long> evals(maps.size(), 0);
        if (parallel) {
#pragma omp parallel for schedule(dynamic, 1)
            for (int r = 0; r < R; ++r) {
                std::vector<double> x(static_cast<size_t>(s.m)), y(static_cast<size_t>(s.n));
                vals[r] = weights[r] * nested_integral(s, slots[r], rule, x, y,
                                                       dims - 1, 1.0, evals[r]);
            }
        } else {
            for (int r = 0; r < R; ++r) {
                std::vector<double> x(static_cast<size_t>(s.m)), y(static_cast<size_t>(s.n));
                vals[r] = weights[r] * nested_integral(s, slots[r], rule, x, y,
                                                       dims - 1, 1.0, evals[r]);
            }
        }
        double total = 0;  // fixed order: region index
        for (int r = 0; r < R; ++r) total += vals[r];
        for (int r = 0; r < R; ++r) out.evals += evals[r];
        out.value = total;
        out.level = level;
        if (!std::isnan(prev)) {
            double scale = std::max(std::fabs(total), 1e-300);
            out.err_est = std::fabs(total - prev) / scale;
            if (out.err_est < s.rel_tol * 0.1) break;
        }
        prev = total;
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (elapsed > s.time_budget_s) break;
    }
    return out;
}

}  // namespace qtsym
