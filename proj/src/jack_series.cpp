#include "specsing/jack_series.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "specsing/errors.hpp"

namespace specsing {

namespace {

void extend(std::vector<std::vector<Partition>>& by_weight, Partition& prefix, int rem, int cap, int m,
            int w) {
    by_weight[w].push_back(prefix);
    if (int(prefix.size()) == m) return;
    for (int v = std::min(rem, cap); v >= 1; --v) {
        prefix.push_back(v);
        extend(by_weight, prefix, rem - v, v, m, w + v);
        prefix.pop_back();
    }
}

Partition conjugate(const Partition& k) {
    if (k.empty()) return {};
    Partition c(k.front(), 0);
    for (int part : k)
        for (int j = 0; j < part; ++j) ++c[j];
    return c;
}

// C_k(1^m) / |k|!, i.e. prod over cells of alpha (m - (i-1) + alpha (j-1)) / (h^* h_*)
double principal_over_factorial(const Partition& k, double alpha, int m) {
    const Partition kc = conjugate(k);
    double r = 1.0;
    for (std::size_t i = 0; i < k.size(); ++i) {
        for (int j = 0; j < k[i]; ++j) {
            const double arm = k[i] - j - 1;
            const double leg = kc[j] - int(i) - 1;
            const double upper = leg + alpha * (arm + 1.0);
            const double lower = leg + 1.0 + alpha * arm;
            r *= alpha * (m - double(i) + alpha * j) / (upper * lower);
        }
    }
    return r;
}

bool nonpositive_integer(cplx a, int* n) {
    if (a.imag() != 0.0 || a.real() > 0.0 || a.real() != std::round(a.real())) return false;
    *n = int(-a.real());
    return true;
}

}  // namespace

int weight(const Partition& k) { return std::accumulate(k.begin(), k.end(), 0); }

std::vector<Partition> partitions_up_to(int m, int max_weight, int max_part) {
    if (m < 1) throw ValidationError("partitions_up_to: m must be >= 1");
    if (max_weight < 0) throw ValidationError("partitions_up_to: max_weight must be >= 0");
    std::vector<std::vector<Partition>> by_weight(max_weight + 1);
    Partition prefix;
    extend(by_weight, prefix, max_weight, max_part < 0 ? max_weight : max_part, m, 0);
    std::vector<Partition> out;
    for (auto& shell : by_weight)
        for (auto& k : shell) out.push_back(std::move(k));
    return out;
}

cplx gen_pochhammer(cplx a, const Partition& k, double alpha) {
    if (!(alpha > 0.0)) throw ValidationError("gen_pochhammer: alpha must be positive");
    cplx r = 1.0;
    for (std::size_t j = 0; j < k.size(); ++j) r *= pochhammer(a - double(j) / alpha, k[j]);
    return r;
}

cplx jack_principal(const Partition& k, double alpha, int m, cplx x) {
    if (int(k.size()) > m) return 0.0;
    double r = principal_over_factorial(k, alpha, m);
    const int n = weight(k);
    for (int i = 2; i <= n; ++i) r *= i;
    return r * std::pow(x, n);
}

cplx hyper_pfq_alpha(const std::vector<cplx>& a_list, const std::vector<cplx>& b_list, double alpha,
                     int m, cplx x, const PfqControl& ctrl) {
    if (!(alpha > 0.0)) throw ValidationError("hyper_pfq_alpha: alpha must be positive");
    if (m < 1) throw ValidationError("hyper_pfq_alpha: m must be >= 1");
    if (x == 0.0) return 1.0;

    int max_part = -1;
    for (const cplx& a : a_list) {
        int n;
        if (nonpositive_integer(a, &n)) max_part = (max_part < 0) ? n : std::min(max_part, n);
    }
    const bool terminating = max_part >= 0;
    const int top = terminating ? max_part * m : ctrl.max_weight;

    const std::vector<Partition> parts = partitions_up_to(m, top, max_part);
    CompensatedSum total;
    CompensatedSum shell;
    int shell_weight = 0;
    int quiet = 0;
    double last_shell = 0.0;
    auto close_shell = [&]() -> bool {
        const cplx s = shell.value();
        total.add(s);
        last_shell = std::abs(s);
        shell = CompensatedSum();
        if (shell_weight > 0 && last_shell <= ctrl.rel_tol * std::abs(total.value()))
            ++quiet;
        else
            quiet = 0;
        return !terminating && quiet >= ctrl.quiet_shells;
    };
    for (const Partition& k : parts) {
        const int w = weight(k);
        if (w != shell_weight) {
            if (close_shell()) return total.value();
            shell_weight = w;
        }
        cplx t = principal_over_factorial(k, alpha, m) * std::pow(x, w);
        for (const cplx& a : a_list) t *= gen_pochhammer(a, k, alpha);
        for (const cplx& b : b_list) {
            const cplx d = gen_pochhammer(b, k, alpha);
            if (d == 0.0) throw PoleError("hyper_pfq_alpha: vanishing lower parameter");
            t /= d;
        }
        shell.add(t);
    }
    const bool done = close_shell();
    if (!terminating && !done)
        throw ConvergenceError("hyper_pfq_alpha: not converged at weight " + std::to_string(top) +
                               ", last shell magnitude " + std::to_string(last_shell));
    return total.value();
}

cplx duality_ratio_2f1(int n, cplx b, cplx c, double alpha, int m, cplx t) {
    if (n < 0) throw ValidationError("duality_ratio_2f1: n must be >= 0");
    if (n == 0) return 1.0;
    const cplx a(-double(n), 0.0);
    const cplx cp = a + b + 1.0 + double(m - 1) / alpha - c;
    const cplx num = hyper_pfq_alpha({a, b}, {cp}, alpha, m, 1.0 - t);
    const cplx den = hyper_pfq_alpha({a, b}, {cp}, alpha, m, 1.0);
    if (den == 0.0) throw PoleError("duality_ratio_2f1: vanishing normalisation");
    return num / den;
}

}  // namespace specsing
