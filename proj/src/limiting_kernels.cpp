#include "specsing/limiting_kernels.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "specsing/errors.hpp"
#include "specsing/quadrature.hpp"

namespace specsing {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI{0.0, 1.0};
constexpr double kDiag = 1e-6;

bool on_diagonal(double X, double Y) { return std::abs(X - Y) < kDiag * (1.0 + std::abs(X)); }

// C̃ as a sum of coef * X^power * Ã(j).
struct Term {
    cplx coef;
    int power;
    int j;
};

std::vector<Term> c_terms(int order, int k, double p, double q) {
    const cplx w(q, k);
    std::vector<Term> c1 = {{-2.0, 2, 1}, {2.0, 2, 2}, {-2.0 * kI * double(k), 1, 1}, {w, 1, 0}};
    if (order == 0) return {{1.0, 0, 0}};
    if (order == 1) return c1;
    if (order != 2) throw ValidationError("c_tilde: order must be 0, 1 or 2");
    const cplx c3 = -8.0 * kI / 6.0;
    const double kk = k;
    std::vector<Term> t = {
        {2.0, 4, 2}, {-4.0, 4, 3}, {2.0, 4, 4},
        {c3, 3, 1}, {c3 * (-3.0 * (kk + 1.0)), 3, 2}, {c3 * (3.0 * kk + 2.0), 3, 3},
        {2.0 * kk, 2, 1}, {-2.0 * kk * (kk + 1.0), 2, 2},
    };
    for (const Term& c : c1) t.push_back({w * c.coef, c.power + 1, c.j});
    t.push_back({-w * w + w * w / 2.0 - (p + k) / 6.0, 2, 0});
    return t;
}

// Ã(0..5) at one X, shared by every C̃ of the same block.
struct BlockValues {
    std::array<cplx, 6> a;
    double p, q, X;
    int k;

    BlockValues(double p_, double q_, int k_, double X_, int jmax) : p(p_), q(q_), X(X_), k(k_) {
        const ConfluentBlock b{p, q, k};
        b.validate();
        for (int j = 0; j <= jmax; ++j) a[j] = a_confluent(j, b, X);
    }

    cplx c(int order) const {
        cplx s = 0.0;
        for (const Term& t : c_terms(order, k, p, q)) s += t.coef * std::pow(X, t.power) * a[t.j];
        return s;
    }

    cplx dc(int order) const {
        cplx s = 0.0;
        for (const Term& t : c_terms(order, k, p, q)) {
            if (t.power > 0) s += t.coef * double(t.power) * std::pow(X, t.power - 1) * a[t.j];
            s += t.coef * std::pow(X, t.power) * 2.0 * kI * a[t.j + 1];
        }
        return s;
    }
};

int jmax_for(int order) { return order == 0 ? 1 : (order == 1 ? 3 : 5); }

// J_n / (X - Y), n = 0..order; closed limit on the diagonal.
std::array<cplx, 3> divided_j(int order, int k, double p, double q, double X, double Y) {
    std::array<cplx, 3> out{};
    const int jm = jmax_for(order);
    if (on_diagonal(X, Y)) {
        const BlockValues a(p, q, k + 1, X, jm), b(p, q, k, X, jm);
        for (int n = 0; n <= order; ++n) {
            cplx s = 0.0;
            for (int i = 0; i <= n; ++i)
                s += a.c(i) * b.c(n - i) + X * (a.dc(i) * b.c(n - i) - a.c(i) * b.dc(n - i));
            out[n] = s;
        }
        return out;
    }
    const BlockValues ax(p, q, k + 1, X, jm), by(p, q, k, Y, jm);
    const BlockValues ay(p, q, k + 1, Y, jm), bx(p, q, k, X, jm);
    for (int n = 0; n <= order; ++n) {
        cplx s = 0.0;
        for (int i = 0; i <= n; ++i) s += X * ax.c(i) * by.c(n - i) - Y * ay.c(i) * bx.c(n - i);
        out[n] = s / (X - Y);
    }
    return out;
}

double q1(double p, int k) { return p * (2.0 * p + 2.0 * k + 1.0); }

double q2(double p, int k, double X, double Y) {
    const double pk = p + k;
    return -X * Y / 3.0 + pk * (2.0 * p + 2.0 * k + 1.0) * (6.0 * p * p - p - k - 1.0) / 6.0;
}

// hcoef(p+k+1,q) e^{-i(X+Y) - qπ} (XY)^{p+k+1} / X^2
cplx f2_prefactor(double p, double q, int k, double X, double Y) {
    const double e = p + k + 1.0;
    return hcoef(e, q) * std::exp(-kI * (X + Y) - q * kPi) * std::exp(e * std::log(X * Y)) / (X * X);
}

void require_positive(double X, double Y) {
    if (!(X > 0.0 && Y > 0.0)) throw ValidationError("limiting kernels need X, Y > 0");
}

cplx cb(int j, int k, double p, double q, double X) { return c_tilde(j, k, 2.0 * p, q, 2.0 * X); }

}  // namespace

void ConfluentBlock::validate() const {
    if (k < 0) throw ValidationError("ConfluentBlock: k must be >= 0");
    if (!(p + k >= 0.0)) throw ValidationError("ConfluentBlock: p + k must be >= 0");
    if (p + k == 0.0 && q_eff != 0.0) throw PoleError("ConfluentBlock: p + k = 0 requires q = 0");
}

cplx a_confluent(int j, const ConfluentBlock& block, double X) {
    block.validate();
    if (j < 0) throw ValidationError("a_confluent: j must be >= 0");
    const double pk = block.p + block.k;
    if (pk == 0.0) {
        // limits of (p)_j/(2p)_j 1F1(p + j; 2p + j; z) as p -> 0
        const cplx ez = std::exp(cplx(0.0, 2.0 * X));
        return j == 0 ? 0.5 * (1.0 + ez) : 0.5 * ez;
    }
    const cplx a(pk, -block.q_eff);
    const cplx pref = pochhammer(a, j) / pochhammer(cplx(2.0 * pk), j);
    return pref * hyp1f1(a + double(j), cplx(2.0 * pk + j), cplx(0.0, 2.0 * X));
}

cplx c_tilde(int order, int k, double p, double q_eff, double X) {
    return BlockValues(p, q_eff, k, X, jmax_for(order)).c(order);
}

cplx c_tilde_deriv(int order, int k, double p, double q_eff, double X) {
    return BlockValues(p, q_eff, k, X, jmax_for(order)).dc(order);
}

JBlocks j_blocks(int k, double p, double q_eff, double X, double Y) {
    const BlockValues ax(p, q_eff, k + 1, X, 4), by(p, q_eff, k, Y, 4);
    const BlockValues ay(p, q_eff, k + 1, Y, 4), bx(p, q_eff, k, X, 4);
    std::array<cplx, 3> J{};
    for (int n = 0; n <= 2; ++n)
        for (int i = 0; i <= n; ++i) J[n] += X * ax.c(i) * by.c(n - i) - Y * ay.c(i) * bx.c(n - i);
    return {J[0], J[1], J[2], q1(p, k), q2(p, k, X, Y)};
}

double hcoef(double a, double q) {
    const double lg = (2.0 * a - 2.0) * std::log(2.0) + 2.0 * log_gamma(cplx(a, -q)).real() -
                      std::log(kPi) - log_gamma(2.0 * a) - log_gamma(2.0 * a - 1.0);
    return std::exp(lg);
}

double eta1(double p, double q) {
    const double lg = log_gamma(p + 2.0) + log_gamma(p + 2.5) -
                      2.0 * log_gamma(cplx((p + 3.0) / 2.0, q)).real();
    return 2.0 * std::sqrt(kPi) * std::exp(lg);
}

double eta2(double p, double q) { return -(p + 1.0) * std::exp(-q * kPi) * hcoef(p + 2.0, 2.0 * q); }

cplx j_o(const std::function<cplx(double)>& f, double X, double p, double q) {
    if (X <= 0.0) return 0.0;
    auto g = [&](double s, double, double) -> cplx {
        if (s <= 0.0) return 0.0;
        return std::exp(-kI * s) * std::exp((p + 1.0) * std::log(s)) * f(s);
    };
    return std::exp(-q * kPi) * integrate_adaptive(g, 0.0, X, 1e-12);
}

cplx j_s(const std::function<cplx(double)>& f, double X, double Y, double p, double q) {
    if (X <= 0.0) return 0.0;
    auto g = [&](double s, double, double) -> cplx {
        if (s <= 0.0) return 0.0;
        return std::exp(-2.0 * kI * s) * std::exp(2.0 * p * std::log(s)) * f(s);
    };
    const cplx pref = p * hcoef(2.0 * p + 1.0, q) * std::exp(-q * kPi - 2.0 * kI * Y) *
                      std::exp((2.0 * p + 1.0) * std::log(Y));
    return pref * integrate_adaptive(g, 0.0, X, 1e-12);
}

cplx k2_block(double p, double q_eff, int k, double X, double Y) {
    require_positive(X, Y);
    return f2_prefactor(p, q_eff, k, X, Y) * divided_j(0, k, p, q_eff, X, Y)[0];
}

cplx l12_block(double p, double q_eff, int k, double X, double Y) {
    require_positive(X, Y);
    const auto d = divided_j(1, k, p, q_eff, X, Y);
    return f2_prefactor(p, q_eff, k, X, Y) * (d[1] + q1(p, k) * d[0]);
}

cplx l22_block(double p, double q_eff, double X, double Y) {
    require_positive(X, Y);
    const auto d = divided_j(2, 0, p, q_eff, X, Y);
    return f2_prefactor(p, q_eff, 0, X, Y) *
           (d[2] + q1(p, 0) * d[1] + (q2(p, 0, X, Y) + X * X / 3.0) * d[0]);
}

namespace {

cplx k1(double p, double q, double X, double Y) {
    const double q2q = 2.0 * q;
    const cplx jo = j_o([&](double s) { return c_tilde(0, 2, p, q2q, s); }, X, p, q);
    return (Y / X) * k2_block(p, q2q, 1, X, Y) +
           eta2(p, q) / (X * X) * std::exp(-kI * Y) * std::pow(Y, p + 2.0) * c_tilde(0, 1, p, q2q, Y) *
               (jo - eta1(p, q) / 2.0);
}

cplx l11(double p, double q, double X, double Y) {
    const double q2q = 2.0 * q;
    const double e1 = eta1(p, q);
    const cplx jo0 = j_o([&](double s) { return c_tilde(0, 2, p, q2q, s); }, X, p, q);
    const cplx jo1 = j_o([&](double s) { return c_tilde(1, 2, p, q2q, s); }, X, p, q);
    const cplx c0y = c_tilde(0, 1, p, q2q, Y);
    const cplx c1y = c_tilde(1, 1, p, q2q, Y);
    return (Y / X) * l12_block(p, q2q, 1, X, Y) +
           eta2(p, q) / (X * X) * std::exp(-kI * Y) * std::pow(Y, p + 2.0) *
               (c0y * (jo1 + p * (p + 2.0) * e1 / 2.0) + (c1y + p * (2.0 * p + 3.0) * c0y) * (jo0 - e1 / 2.0));
}

cplx js0(double p, double q, double X, double Y) {
    const cplx c0y = cb(0, 0, p, q, Y);
    return j_s([&](double s) { return c0y * cb(0, 1, p, q, s); }, X, Y, p, q);
}

cplx js1_raw(double p, double q, double X, double Y) {
    const cplx c0y = cb(0, 0, p, q, Y), c1y = cb(1, 0, p, q, Y);
    return j_s([&](double s) { return c1y * cb(0, 1, p, q, s) + c0y * cb(1, 1, p, q, s); }, X, Y, p, q);
}

cplx k4(double p, double q, double X, double Y) {
    return (Y / X) * k2_block(2.0 * p, q, 0, 2.0 * X, 2.0 * Y) -
           std::pow(2.0, 4.0 * p + 1.0) * js0(p, q, X, Y) / (X * X);
}

cplx l14(double p, double q, double X, double Y) {
    const cplx s1 = js1_raw(p, q, X, Y) + 2.0 * p * (4.0 * p + 1.0) * js0(p, q, X, Y);
    return (Y / (2.0 * X)) * l12_block(2.0 * p, q, 0, 2.0 * X, 2.0 * Y) - std::pow(2.0, 4.0 * p) * s1 / (X * X);
}

cplx l24(double p, double q, double X, double Y) {
    const double a = 2.0 * p * (4.0 * p + 1.0);
    const double b = 2.0 * p * (4.0 * p + 1.0) * (24.0 * p * p - 2.0 * p - 1.0) / 6.0;
    const cplx c0y = cb(0, 0, p, q, Y), c1y = cb(1, 0, p, q, Y), c2y = cb(2, 0, p, q, Y);
    std::array<cplx, 4> acc{};
    for (int m = 0; m < 4; ++m) {
        acc[m] = j_s(
            [&, m](double s) -> cplx {
                const BlockValues bs(2.0 * p, q, 1, 2.0 * s, m == 0 ? 4 : (m == 1 ? 2 : 0));
                const cplx b0 = bs.c(0);
                switch (m) {
                    case 0: return c2y * b0 + c1y * bs.c(1) + c0y * bs.c(2);
                    case 1: return c1y * b0 + c0y * bs.c(1);
                    case 2: return c0y * b0;
                    default: return s * s / 6.0 * c0y * b0;
                }
            },
            X, Y, p, q);
    }
    const cplx first = (Y / X) * (l22_block(2.0 * p, q, 2.0 * X, 2.0 * Y) / 4.0 +
                                  (X * X - Y * Y) / 6.0 * k2_block(2.0 * p, q, 0, 2.0 * X, 2.0 * Y));
    const cplx second = -std::pow(2.0, 4.0 * p + 1.0) / (X * X) *
                        ((acc[0] + a * acc[1] + b * acc[2]) / 4.0 + (X * X / 3.0 - Y * Y / 6.0) * acc[2] + acc[3]);
    return first + second;
}

void require_beta(int beta) {
    if (beta != 1 && beta != 2 && beta != 4) throw ValidationError("beta must be 1, 2 or 4");
}

}  // namespace

cplx k_limit(int beta, double X, double Y, double p, double q) {
    require_beta(beta);
    require_positive(X, Y);
    switch (beta) {
        case 1: return k1(p, q, X, Y);
        case 2: return k2_block(p, q, 0, X, Y);
        default: return k4(p, q, X, Y);
    }
}

cplx l1(int beta, double X, double Y, double p, double q) {
    require_beta(beta);
    require_positive(X, Y);
    switch (beta) {
        case 1: return l11(p, q, X, Y);
        case 2: return l12_block(p, q, 0, X, Y);
        default: return l14(p, q, X, Y);
    }
}

cplx l2(int beta, double X, double Y, double p, double q) {
    require_positive(X, Y);
    if (beta == 2) return l22_block(p, q, X, Y);
    if (beta == 4) return l24(p, q, X, Y);
    throw ValidationError("l2: beta must be 2 or 4");
}

KernelExpansion kernel_expansion(int beta, double X, double Y, double p, double q, bool with_l2) {
    KernelExpansion out;
    out.X = X;
    out.Y = Y;
    out.K_inf = k_limit(beta, X, Y, p, q);
    out.L1 = l1(beta, X, Y, p, q);
    if (with_l2 && beta != 1) out.L2 = l2(beta, X, Y, p, q);
    return out;
}

double derivative_identity_residual(int beta, double X, double Y, double p, double q, double h) {
    require_beta(beta);
    if (!(h > 0.0)) throw ValidationError("derivative_identity_residual: h must be positive");
    const double hx = h * X, hy = h * Y;
    if (!(X - 2.0 * hx > 0.0 && Y - 2.0 * hy > 0.0))
        throw ValidationError("derivative_identity_residual: stencil leaves the domain");
    auto K = [&](double x, double y) { return k_limit(beta, x, y, p, q); };
    const cplx dX = (K(X - 2 * hx, Y) - 8.0 * K(X - hx, Y) + 8.0 * K(X + hx, Y) - K(X + 2 * hx, Y)) / (12.0 * hx);
    const cplx dY = (K(X, Y - 2 * hy) - 8.0 * K(X, Y - hy) + 8.0 * K(X, Y + hy) - K(X, Y + 2 * hy)) / (12.0 * hy);
    const cplx L = l1(beta, X, Y, p, q);
    const cplx rhs = p * (X * dX + Y * dY + K(X, Y));
    return std::abs(L - rhs) / (std::abs(L) + 1e-300);
}

namespace {

// J_nu for nu > -1, negative orders by reflection through Y_{-nu}
double bessel_j(double nu, double x) {
    if (nu >= 0.0) return std::cyl_bessel_j(nu, x);
    const double m = -nu;
    return std::cos(m * kPi) * std::cyl_bessel_j(m, x) - std::sin(m * kPi) * std::cyl_neumann(m, x);
}

}  // namespace

double jker_bessel(double X, double Y, double p) {
    if (!(X > 0.0 && Y > 0.0)) throw ValidationError("jker_bessel: X, Y must be positive");
    if (X == Y) throw ValidationError("jker_bessel: needs X != Y");
    if (p < 0.0) throw ValidationError("jker_bessel: p must be >= 0");
    const double up = p + 0.5, dn = p - 0.5;
    return std::sqrt(X * Y) * (bessel_j(up, X) * bessel_j(dn, Y) - bessel_j(dn, X) * bessel_j(up, Y)) /
           (2.0 * (X - Y));
}

}  // namespace specsing
