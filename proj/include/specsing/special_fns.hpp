#pragma once

#include <complex>

namespace specsing {

using cplx = std::complex<double>;

struct SeriesControl {
    double rel_tol = 1e-15;
    int max_terms = 200;
    bool compensated = true;

    // Defaults used for degree-n terminating sums: max_terms = 10n + 200.
    static SeriesControl for_degree(int n);
};

// Neumaier summation applied to real and imaginary parts separately.
class CompensatedSum {
public:
    explicit CompensatedSum(bool enabled = true) : enabled_(enabled) {}
    void add(cplx v);
    cplx value() const { return {re_ + cre_, im_ + cim_}; }

private:
    static void step(double& s, double& c, double v);
    bool enabled_;
    double re_ = 0.0, im_ = 0.0, cre_ = 0.0, cim_ = 0.0;
};

// Principal branch of log Gamma(z). Throws PoleError at z = 0, -1, -2, ...
cplx log_gamma(cplx z);
double log_gamma(double x);

cplx pochhammer(cplx a, int n);

// 2F1(-n, b; c; z), summed to termination or until terms drop below
// ctrl.rel_tol of the running sum. term_mass receives sum |term_k|.
cplx hyp2f1_terminating(int n, cplx b, cplx c, cplx z, const SeriesControl& ctrl,
                        double* term_mass = nullptr);
cplx hyp2f1_terminating(int n, cplx b, cplx c, cplx z);

// Tries, in order, the series in long double, the large-|z| expansion
// (|z| > 8) and the series in 113-bit floating point, returning the first
// whose error estimate is within 1e-13 relative. Throws ConvergenceError
// otherwise.
cplx hyp1f1(cplx a, cplx c, cplx z, const SeriesControl& ctrl);
cplx hyp1f1(cplx a, cplx c, cplx z);

// Gamma(z+a)/Gamma(z+b) ~ z^(a-b) (1 + c1/z + c2/z^2), truncated at `order`.
cplx gamma_ratio_expansion(cplx z, cplx a, cplx b, int order);

}  // namespace specsing
