#include "clausius/sweep.hpp"

#include <omp.h>

namespace clausius {

void set_sweep_threads(int n) {
    if (n > 0) {
        omp_set_num_threads(n);
    }
}

int sweep_threads() {
    return omp_get_max_threads();
}

} // namespace clausius
