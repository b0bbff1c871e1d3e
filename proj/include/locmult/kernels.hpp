#pragma once

// Data-parallel loops used by the certification layers. Each kernel has a
// serial reference path and an OpenMP path that must agree on every result.

#include <cstddef>
#include <exception>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace locmult {

enum class Execution {
  kSerial,
  kParallel,
};

int parallel_width();

/// True iff pred(i) holds for all i in [0, count). The serial path stops at
/// the first failure; the parallel path skips remaining work once any
/// failure is seen. An exception is rethrown only when no failure was seen.
bool all_of_indices(std::size_t count, const std::function<bool(std::size_t)>& pred,
                    Execution exec);

/// Evaluates `attempt(i)` for i = 0, 1, ... and returns the lowest index
/// that produced a value, so the parallel path (batches of parallel_width())
/// picks the same winner as the serial one.
template <typename T>
std::optional<std::pair<std::size_t, T>> first_success(
    std::size_t count, const std::function<std::optional<T>(std::size_t)>& attempt,
    Execution exec);

/// Maps f over [0, count) and returns results in index order.
template <typename T>
std::vector<T> map_indices(std::size_t count, const std::function<T(std::size_t)>& f,
                           Execution exec);

namespace detail {
void run_batch(std::size_t begin, std::size_t end, const std::function<void(std::size_t)>& body,
               Execution exec);
}

template <typename T>
std::optional<std::pair<std::size_t, T>> first_success(
    std::size_t count, const std::function<std::optional<T>(std::size_t)>& attempt,
    Execution exec) {
  if (exec == Execution::kSerial) {
    for (std::size_t i = 0; i < count; ++i) {
      if (auto v = attempt(i)) return std::make_pair(i, std::move(*v));
    }
    return std::nullopt;
  }
  const auto width = static_cast<std::size_t>(parallel_width());
  for (std::size_t begin = 0; begin < count; begin += width) {
    const std::size_t end = std::min(count, begin + width);
    std::vector<std::optional<T>> results(end - begin);
    std::vector<std::exception_ptr> errors(end - begin);
    detail::run_batch(begin, end, [&](std::size_t i) {
      try {
        results[i - begin] = attempt(i);
      } catch (...) {
        errors[i - begin] = std::current_exception();
      }
    }, exec);
    for (std::size_t k = 0; k < results.size(); ++k) {
      if (errors[k]) std::rethrow_exception(errors[k]);
      if (results[k]) return std::make_pair(begin + k, std::move(*results[k]));
    }
  }
  return std::nullopt;
}

template <typename T>
std::vector<T> map_indices(std::size_t count, const std::function<T(std::size_t)>& f,
                           Execution exec) {
  std::vector<std::optional<T>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  detail::run_batch(0, count, [&](std::size_t i) {
    try {
      slots[i] = f(i);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }, exec);
  std::vector<T> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

}  // namespace locmult
