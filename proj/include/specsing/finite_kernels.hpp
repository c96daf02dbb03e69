#pragma once

#include <vector>

#include "specsing/routh_romanovski.hpp"

namespace specsing {

enum class Parity { even, odd };

struct SkewConstants {
    std::vector<double> gamma_j;  // gamma_j = (-Re c - 1 - j) / h_j
    double eta1 = 0.0;
    double eta2 = 0.0;
    std::vector<double> s_tilde;  // (1/2) int w1 I_k, filled for beta = 1

    static SkewConstants build(const EnsembleParams& e);
};

// Diagonal switch: |X - Y| < kDiagonalSwitch (1 + |X|)
inline constexpr double kDiagonalSwitch = 1e-6;

// S_{M-k,2}(z(X), z(Y)) dz/dX with z = -cot(X/M), weight c = -M - p + i qc.
double kernel_s2_general(int M, int k, double p, double qc, double X, double Y);

// S_{N,2}(x, y) in line variables.
double kernel_s2(double x, double y, const EnsembleParams& e);

// S_{N,2}(z(X), z(Y)) dz/dX; z built with `scale` (0 means N, N + p is the tuned map).
double kernel_s2_scaled(double X, double Y, const EnsembleParams& e, double scale = 0.0);

double kernel_s1(double x, double y, const EnsembleParams& e, Parity parity);
double kernel_s1_scaled(double X, double Y, const EnsembleParams& e, double scale = 0.0);

double kernel_s4(double x, double y, const EnsembleParams& e);
double kernel_s4_scaled(double X, double Y, const EnsembleParams& e, double scale = 0.0);

// int_{-inf}^{z(upper_X)} I_degree(t) w1(t) dt for the beta=1 (c = -N - p + 2iq)
// or beta=4 (c = -2N - 2p + iq) identification, via the circle substitution.
cplx tail_integral(int degree, double upper_X, const EnsembleParams& e, double tol = 1e-12);

// Closed form of int w1 over the line, beta=1 identification.
double w1_integral_closed(const EnsembleParams& e);

// Closed form of int I_{N-2} w1 over the line, beta=1, N even.
double w1_moment_closed(const EnsembleParams& e);

// det[S_{N,2}(x_m, x_n)]
double correlation_det(const std::vector<double>& points, const EnsembleParams& e);

}  // namespace specsing
