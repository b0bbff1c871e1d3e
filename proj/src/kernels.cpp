#include "locmult/kernels.hpp"

#include <omp.h>

#include <atomic>

namespace locmult {

int parallel_width() { return omp_get_max_threads(); }

namespace {

// Nested regions run on the calling thread.
bool serial(Execution exec) { return exec == Execution::kSerial || omp_in_parallel(); }

}  // namespace

namespace detail {

void run_batch(std::size_t begin, std::size_t end, const std::function<void(std::size_t)>& body,
               Execution exec) {
  if (serial(exec)) {
    for (std::size_t i = begin; i < end; ++i) body(i);
    return;
  }
  const auto first = static_cast<long long>(begin);
  const auto last = static_cast<long long>(end);
#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = first; i < last; ++i) {
    body(static_cast<std::size_t>(i));
  }
}

}  // namespace detail

bool all_of_indices(std::size_t count, const std::function<bool(std::size_t)>& pred,
                    Execution exec) {
  if (serial(exec)) {
    for (std::size_t i = 0; i < count; ++i) {
      if (!pred(i)) return false;
    }
    return true;
  }
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = 0; i < n; ++i) {
    if (failed.load(std::memory_order_relaxed)) continue;
    try {
      if (!pred(static_cast<std::size_t>(i))) failed.store(true, std::memory_order_relaxed);
    } catch (...) {
#pragma omp critical(locmult_all_of_error)
      if (!error) error = std::current_exception();
    }
  }
  if (failed.load()) return false;
  if (error) std::rethrow_exception(error);
  return true;
}

}  // namespace locmult
