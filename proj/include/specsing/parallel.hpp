#pragma once

#include <complex>
#include <cstddef>
#include <exception>
#include <functional>
#include <vector>

namespace specsing {

// Worker count: explicit setting if > 0, else SPECSING_THREADS, else 1.
int thread_count();
void set_thread_count(int n);

// Runs fn(i) for i in [0, n). Each index owns its output slot, so results
// do not depend on the number of threads. The first exception (lowest
// index) is rethrown after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

template <class T, class F>
std::vector<T> parallel_map(std::size_t n, F&& fn) {
    std::vector<T> out(n);
    parallel_for(n, [&](std::size_t i) { out[i] = fn(i); });
    return out;
}

// Fixed-tree pairwise reduction.
std::complex<double> pairwise_sum(const std::vector<std::complex<double>>& v);
double pairwise_sum(const std::vector<double>& v);

}  // namespace specsing
