// sweep.hpp: index-parallel evaluation of independent grid points.
//
// Every kernel that fills a grid takes an Execution argument. The serial path
// is the reference; the OpenMP path must reproduce it bit for bit, which holds
// because each index writes only its own slot and reductions happen afterwards
// in index order.

#pragma once

#include <cstddef>
#include <exception>

namespace clausius {

enum class Execution { serial, parallel };

/// Sets the OpenMP team size for subsequent parallel sweeps (n <= 0: runtime default).
void set_sweep_threads(int n);
int sweep_threads();

template <class F>
void for_each_index(std::size_t n, F&& f, Execution ex) {
    if (ex == Execution::serial) {
        for (std::size_t i = 0; i < n; ++i) {
            f(i);
        }
        return;
    }
    std::exception_ptr failure;
    const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) {
        try {
            f(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(clausius_sweep_failure)
            if (!failure) {
                failure = std::current_exception();
            }
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

} // namespace clausius
