#pragma once

#include <vector>

#include "specsing/special_fns.hpp"

namespace specsing {

// Weakly decreasing positive parts; the empty partition has weight 0.
using Partition = std::vector<int>;

int weight(const Partition& k);

// Partitions with at most m parts, weight <= max_weight and every part
// <= max_part (max_part < 0: no bound), in order of increasing weight.
std::vector<Partition> partitions_up_to(int m, int max_weight, int max_part = -1);

// [a]_k^{(alpha)} = prod_j (a - (j-1)/alpha)_{k_j}
cplx gen_pochhammer(cplx a, const Partition& k, double alpha);

// C_k^{(alpha)}(x, ..., x) with m equal arguments; normalised so that
// sum_{|k| = n} C_k(x_1..x_m) = (x_1 + ... + x_m)^n.
cplx jack_principal(const Partition& k, double alpha, int m, cplx x);

struct PfqControl {
    int max_weight = 40;
    double rel_tol = 1e-15;
    int quiet_shells = 3;
};

// pFq^{(alpha)}(a; b; x 1_m). A nonpositive integer in a_list makes the series
// terminate and it is summed exactly; otherwise shells of fixed weight are
// added until quiet_shells consecutive shells fall below rel_tol.
cplx hyper_pfq_alpha(const std::vector<cplx>& a_list, const std::vector<cplx>& b_list, double alpha,
                     int m, cplx x, const PfqControl& ctrl = {});

// 2F1(-n, b; c'; (1 - t) 1_m) / 2F1(-n, b; c'; 1_m), c' = -n + b + 1 + (m-1)/alpha - c.
// Equals 2F1^{(alpha)}(-n, b; c; t 1_m). Both series cancel heavily when
// Re c < 0, and the ratio then keeps only ~6 digits at m = 4.
cplx duality_ratio_2f1(int n, cplx b, cplx c, double alpha, int m, cplx t);

}  // namespace specsing
