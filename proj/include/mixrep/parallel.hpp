#pragma once

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace mixrep {

/// Worker cap from WORKBENCH_THREADS; 1 when unset or invalid.
inline std::size_t worker_count_from_env() {
  const char* v = std::getenv("WORKBENCH_THREADS");
  if (v == nullptr) return 1;
  try {
    const long n = std::stol(v);
    return n > 0 ? static_cast<std::size_t>(n) : 1;
  } catch (const std::exception&) {
    return 1;
  }
}

/// out[k] = fn(k) for k in [0, count). Work is split into contiguous blocks;
/// results are always returned in index order. The first exception thrown by
/// any worker is rethrown on the calling thread.
template <class R, class Fn>
std::vector<R> parallel_map(std::size_t count, std::size_t threads, Fn&& fn) {
  std::vector<R> out(count);
  threads = std::max<std::size_t>(1, std::min(threads, count));
  if (threads == 1) {
    for (std::size_t k = 0; k < count; ++k) out[k] = fn(k);
    return out;
  }
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  const std::size_t block = (count + threads - 1) / threads;
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        const std::size_t end = std::min(count, (t + 1) * block);
        for (std::size_t k = t * block; k < end; ++k) out[k] = fn(k);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace mixrep
