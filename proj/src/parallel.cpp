#include "specsing/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>

namespace specsing {

namespace {
std::atomic<int> g_threads{0};

template <class T>
T pairwise(const std::vector<T>& v, std::size_t lo, std::size_t hi) {
    if (hi - lo == 0) return T{};
    if (hi - lo == 1) return v[lo];
    const std::size_t mid = lo + (hi - lo) / 2;
    return pairwise(v, lo, mid) + pairwise(v, mid, hi);
}
}  // namespace

int thread_count() {
    const int n = g_threads.load();
    if (n > 0) return n;
    if (const char* env = std::getenv("SPECSING_THREADS")) {
        try {
            const int e = std::stoi(env);
            if (e > 0) return e;
        } catch (...) {
        }
    }
    return 1;
}

void set_thread_count(int n) { g_threads.store(n > 0 ? n : 0); }

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    const std::size_t workers = std::min<std::size_t>(std::size_t(thread_count()), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(n);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) {
                try {
                    fn(i);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

std::complex<double> pairwise_sum(const std::vector<std::complex<double>>& v) {
    return pairwise(v, 0, v.size());
}

double pairwise_sum(const std::vector<double>& v) { return pairwise(v, 0, v.size()); }

}  // namespace specsing
