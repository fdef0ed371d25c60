#pragma once

// Indexed map over [0, n): the data-parallel kernel behind grid sweeps and the
// self-check sample loops. `serial::map_indexed` is the reference the OpenMP
// version is tested against; both return results in index order, and both
// rethrow the exception of the lowest failing index.

#include <cstddef>
#include <exception>
#include <type_traits>
#include <vector>

namespace noneuclid {

enum class Execution { kSerial, kParallel };

namespace serial {

template <class Fn>
auto map_indexed(std::size_t n, Fn&& fn) -> std::vector<std::invoke_result_t<Fn&, std::size_t>> {
  std::vector<std::invoke_result_t<Fn&, std::size_t>> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(fn(i));
  return out;
}

}  // namespace serial

namespace parallel {

template <class Fn>
auto map_indexed(std::size_t n, Fn&& fn) -> std::vector<std::invoke_result_t<Fn&, std::size_t>> {
  using R = std::invoke_result_t<Fn&, std::size_t>;
  static_assert(std::is_default_constructible_v<R>, "parallel map needs default-constructible results");
  std::vector<R> out(n);
  std::vector<std::exception_ptr> errors(n);
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace parallel

template <class Fn>
auto map_indexed(std::size_t n, Fn&& fn, Execution exec) {
  return exec == Execution::kParallel ? parallel::map_indexed(n, fn) : serial::map_indexed(n, fn);
}

}  // namespace noneuclid
