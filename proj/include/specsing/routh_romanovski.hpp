#pragma once

#include <complex>

#include "specsing/quadrature.hpp"
#include "specsing/special_fns.hpp"

namespace specsing {

struct EnsembleParams {
    int beta = 2;
    int N = 1;
    double p = 1.0;
    double q = 0.0;

    // beta in {1,2,4} or any positive even integer; N >= 1; p >= 0.
    // p = 0 is only usable together with q = 0 where a block has p + k = 0.
    void validate() const;
    // c_beta = -beta (N + p - 1)/2 - 1 + i q
    cplx c_beta() const;
};

// Exponent c of the Cauchy weight (1 - ix)^c (1 + ix)^conj(c).
struct CauchyWeightParams {
    cplx c;

    // The identification used by the kernels:
    //   beta=2: c = -N - p + i q
    //   beta=1: c = -N - p + 2 i q
    //   beta=4: c = -2N - 2p + i q
    static CauchyWeightParams for_kernel(const EnsembleParams& e);
};

// x = i (1 + e^{i theta}) / (1 - e^{i theta}) = -cot(theta / 2)
double cayley_to_circle(double x);
double circle_to_cayley(double theta);

struct PointMap {
    double z;
    double jacobian;  // dz/dX
};

// z(X) = -cot(X / scale), dz/dX = csc^2(X / scale) / scale
PointMap scaled_point_map(double X, double scale);

double weight_cauchy(double x, const CauchyWeightParams& w);
double weight_tilde1(double x, const CauchyWeightParams& w);  // sqrt(w2 / (1 + x^2))
double weight_tilde4(double x, const CauchyWeightParams& w);  // w2 (1 + x^2)

// sqrt(w2(z(X))) = sin(X/N)^{-Re c} exp(Im c (X/N - pi/2)), in log space.
double weight_circle_scaled(double X, int N, const CauchyWeightParams& w);
double weight_circle_scaled(double X, const EnsembleParams& e);

// Monic Routh-Romanovski polynomial of degree n.
cplx rr_poly(int n, cplx c, double x);

// 2F1(-M + k, p + k - i qc; 2p + 2k; 1 - e^{2iS/M}). With c = -M - p + i qc this
// equals ((1 - e^{2iS/M})/(2i))^{M-k} I_{M-k}(-cot(S/M)).
cplx rr_hyper_scaled(int M, int k, double p, double qc, double S);

// d/dS of rr_hyper_scaled
cplx rr_hyper_scaled_deriv(int M, int k, double p, double qc, double S);

// The prefactored form of I_{N-k} at z(X) for the beta=2 identification.
// n_minus_k must equal N - k.
cplx rr_scaled(int n_minus_k, int k, double X, const EnsembleParams& e);

// sqrt(w2) * I_{M-k} at z = -cot(S/M), c = -M - p + i qc:
// (-1)^{M-k} sin^{p+k}(S/M) e^{qc (S/M - pi/2)} e^{-iS(1-k/M)} rr_hyper_scaled
cplx rr_weighted_scaled(int M, int k, double p, double qc, double S);
cplx rr_weighted_scaled_deriv(int M, int k, double p, double qc, double S);

// Squared norm h_n.
double rr_norm(int n, cplx c);

// |<I_n, I_m>_{w2} - h_n delta_nm| / h_n, integrated on the circle.
double orthogonality_check(int n, int m, const EnsembleParams& e, const QuadratureRule& rule);
double orthogonality_check(int n, int m, const EnsembleParams& e);

}  // namespace specsing
