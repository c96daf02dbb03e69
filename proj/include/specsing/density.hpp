#pragma once

#include <functional>
#include <vector>

#include "specsing/quadrature.hpp"
#include "specsing/routh_romanovski.hpp"

namespace specsing {

// For the density functions EnsembleParams::q is the circle-weight parameter
// q̃ of e^{-q̃(θ-π)} |1 - e^{iθ}|^{βp}, and N is the number of eigenvalues.

class DensityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct MorrisParams {
    cplx a;
    cplx b;
    double lambda = 1.0;
    int N = 1;
};

struct DensityTilde {
    double a_tilde = 0.0;  // 2p + 2/β - 1
    cplx b_tilde;          // -p - 1 + 2iq̃/β

    static DensityTilde from(const EnsembleParams& e);
};

cplx morris_closed(const MorrisParams& m);

// Direct N-fold integral on [-1/2, 1/2]^N (N <= 3). The base rule must live
// on [0, 1]; it is mapped onto each nested interval of the ordered sector.
cplx morris_quadrature(const MorrisParams& m, const QuadratureRule& base);
cplx morris_quadrature(const MorrisParams& m, int level = 6);
// Levels 2, 3, ... until two successive values agree to tol (relative).
cplx morris_quadrature_converged(const MorrisParams& m, double tol = 1e-10, int max_level = 7);

enum class IKind { finite_N, weighted, infinity };
enum class Moment { one, sum_exp, sum_exp2, sum_inv };  // 1, Σe^{iθ_j}, Σe^{2iθ_j}, Σ1/(1+e^{iθ_j})

struct IntegralControl {
    int start_level = 2;
    int max_level = 6;
    double tol = 1e-8;  // agreement of two successive levels, relative
};

// β-dimensional integrals over [-π, π]^β (β ∈ {2, 4}):
//   finite_N: I_N(θ) with exponent N - 1, normalised by (2π)^β M_β(ã, b̃, 2/β)
//   weighted: 𝓘[f](θ), unnormalised
//   infinity: I∞(θ) = 𝓘[1](θ)
cplx i_integral(IKind kind, double theta, const EnsembleParams& e, Moment f = Moment::one,
                const IntegralControl& ctrl = {});

enum class DensityPath { integral, jack };

// ρ_{N,β}(θ), θ ∈ (0, 2π). Throws DensityError if the value is not real and
// nonnegative to tolerance.
double rho_finite(double theta, const EnsembleParams& e, DensityPath path);

// ρ∞,β(θ) = e^{q̃π} C_β e^{iβθ/2} θ^{pβ} 1F1^{(β/2)}(p + 1 - 2iq̃/β; 2p + 2; (-iθ) 1_β)
double rho_limit(double theta, const EnsembleParams& e, DensityPath path);
double c_beta_constant(const EnsembleParams& e);

struct DensityExpansion {
    std::vector<int> N_values;
    std::vector<double> scaled;        // ρ_N(θ/N)/N
    std::vector<double> scaled_tuned;  // ρ_N(θ/(N+p))/(N+p)
    double rho_inf = 0.0;
    double l1_predicted = 0.0;  // p d/dθ[θ ρ∞(θ)]
    double l1_measured = 0.0;   // N (ρ_N(θ/N)/N - ρ∞) at the largest N
    std::vector<double> l1_gap;  // |N (ρ_N(θ/N)/N - ρ∞) - l1_predicted| per N
    double slope_after_l1 = 0.0;
    double slope_tuned = 0.0;
    double r2_after_l1 = 0.0;
    double r2_tuned = 0.0;
};

DensityExpansion density_expansion_check(double theta, const EnsembleParams& e, const std::vector<int>& N_list,
                                         DensityPath path = DensityPath::integral);

}  // namespace specsing
