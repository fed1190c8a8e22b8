#pragma once

#include <atomic>
#include <exception>

#include "qrep/exec.hpp"

namespace qrep::detail {

// Runs body(k) for k in [0, count), in order or across OpenMP threads.
// The first exception thrown by any iteration is rethrown afterwards;
// remaining iterations are skipped once one has failed.
template <class Body>
void for_each_index(long count, Exec exec, Body&& body) {
    if (exec == Exec::serial) {
        for (long k = 0; k < count; ++k) body(k);
        return;
    }
    std::exception_ptr error;
    std::atomic<bool> failed{false};
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < count; ++k) {
        if (failed.load(std::memory_order_relaxed)) continue;
        try {
            body(k);
        } catch (...) {
#pragma omp critical(qrep_for_each_error)
            if (!error) error = std::current_exception();
            failed.store(true, std::memory_order_relaxed);
        }
    }
    if (error) std::rethrow_exception(error);
}

}  // namespace qrep::detail
