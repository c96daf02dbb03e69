#pragma once

#include <functional>
#include <optional>

#include "specsing/special_fns.hpp"

namespace specsing {

struct ConfluentBlock {
    double p = 1.0;
    double q_eff = 0.0;
    int k = 0;

    void validate() const;  // k >= 0, p + k >= 0; p + k = 0 only with q_eff = 0
};

struct KernelExpansion {
    cplx K_inf;
    cplx L1;
    std::optional<cplx> L2;
    double X = 0.0;
    double Y = 0.0;
};

// Ã^{(p+k,q)}(j;X) = (p+k-iq)_j/(2p+2k)_j 1F1(p+k+j-iq; 2p+2k+j; 2iX)
cplx a_confluent(int j, const ConfluentBlock& block, double X);

// C̃_order^{(p,q_eff,k)}(X), order 0..2, and its X-derivative.
cplx c_tilde(int order, int k, double p, double q_eff, double X);
cplx c_tilde_deriv(int order, int k, double p, double q_eff, double X);

struct JBlocks {
    cplx J0, J1, J2;
    double Q1 = 0.0;
    double Q2 = 0.0;
};

// J_n = X sum_i C̃_i^{(k+1)}(X) C̃_{n-i}^{(k)}(Y) - (X <-> Y)
JBlocks j_blocks(int k, double p, double q_eff, double X, double Y);

// 2^{2a-2} |Γ(a - iq)|^2 / (π Γ(2a) Γ(2a-1))
double hcoef(double a, double q);

double eta1(double p, double q);
double eta2(double p, double q);

// ∫_0^X e^{-is - qπ} s^{p+1} f(s) ds
cplx j_o(const std::function<cplx(double)>& f, double X, double p, double q);
// p h^{(2p+1,q)} e^{-qπ - 2iY} Y^{2p+1} ∫_0^X e^{-2is} s^{2p} f(s) ds
cplx j_s(const std::function<cplx(double)>& f, double X, double Y, double p, double q);

// beta=2 shaped blocks with a general shift k; diagonal handled in closed form.
cplx k2_block(double p, double q_eff, int k, double X, double Y);
cplx l12_block(double p, double q_eff, int k, double X, double Y);
cplx l22_block(double p, double q_eff, double X, double Y);

// q is the ensemble parameter; the beta=1 blocks use 2q internally.
cplx k_limit(int beta, double X, double Y, double p, double q);
cplx l1(int beta, double X, double Y, double p, double q);
cplx l2(int beta, double X, double Y, double p, double q);  // beta in {2,4}

KernelExpansion kernel_expansion(int beta, double X, double Y, double p, double q, bool with_l2 = true);

// Bessel form of (X/Y) K̂∞,2 at q = 0, X != Y:
// (XY)^{1/2} (J_{p+1/2}(X) J_{p-1/2}(Y) - J_{p-1/2}(X) J_{p+1/2}(Y)) / (2 (X - Y))
double jker_bessel(double X, double Y, double p);

// |L1 - p (X d/dX + Y d/dY + 1) K| / (|L1| + eps), 5-point stencils with steps hX, hY.
double derivative_identity_residual(int beta, double X, double Y, double p, double q, double h);

}  // namespace specsing
