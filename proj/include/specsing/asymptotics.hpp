#pragma once

#include <string>
#include <vector>

#include "specsing/routh_romanovski.hpp"

namespace specsing {

enum class FitStatus { fitted, floor, inconclusive };

struct ResidualReport {
    std::vector<int> N_values;
    std::vector<double> residuals;
    double fitted_slope = 0.0;  // NaN unless status == fitted or inconclusive
    double fit_r2 = 0.0;
    cplx extrapolated_limit;  // two-point Richardson on the last two N
    cplx limit;               // K̂∞ at (X, Y)
    FitStatus status = FitStatus::fitted;
    bool dropped_first = false;
};

std::string to_string(FitStatus s);

// |S_N(X, Y) - Σ_{j<=order} L̂_j / N^j| over N_list (params.N is ignored).
// Slope fits need r2 >= 0.98; residuals below 1e3 eps |K̂∞| report a floor.
ResidualReport kernel_residual_scan(int beta, double X, double Y, const EnsembleParams& params,
                                    const std::vector<int>& N_list, int order);

// Order-0 residual with the map built on N + p instead of N.
ResidualReport tuned_scaling_residual(int beta, double X, double Y, const EnsembleParams& params,
                                      const std::vector<int>& N_list);

enum class ExpansionKind { poc, weight, polynomial, norm, sine_ratio, icc, tail_b1, icc4, gamma2N };

const std::vector<ExpansionKind>& all_expansion_kinds();
std::string to_string(ExpansionKind k);
ExpansionKind expansion_kind_from_string(const std::string& s);

struct ExpansionOptions {
    int k = 2;         // shift k (poc, polynomial, norm, icc)
    int alpha = 3;     // Pochhammer length (poc)
    double Y = 0.0;    // second point for sine_ratio; 0 means 2X
};

// Scaled residual N^s |LHS - truncated RHS|, s = the order of the first
// dropped term (0 for the exact weight identity). Uses params.p, params.q;
// params.N and params.beta are ignored.
double intermediate_expansion_check(ExpansionKind kind, int N, double X, const EnsembleParams& params,
                                    const ExpansionOptions& opt = {});

// Power s used by intermediate_expansion_check for this kind.
int residual_scale_power(ExpansionKind kind);

struct BoundednessResult {
    ExpansionKind kind;
    int N1 = 0, N2 = 0;
    double r1 = 0.0, r2 = 0.0;
    bool pass = false;
};

// Exact kinds pass when both residuals are <= 1e-12; the others when both are
// finite and r2/r1 lies in [0.5, 2].
BoundednessResult intermediate_boundedness(ExpansionKind kind, int N1, int N2, double X,
                                           const EnsembleParams& params, const ExpansionOptions& opt = {});

// |2F1(-n, b; c; t/n) - 1F1(b; c; -t)|
double confluent_limit_residual(int n, cplx b, cplx c, double t);

}  // namespace specsing
