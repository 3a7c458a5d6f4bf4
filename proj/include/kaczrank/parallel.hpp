#pragma once

#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace kaczrank {

/// Runs fn(0..count-1) across worker threads. Trials are independent by
/// construction (each derives its own stream from base seed + index), so
/// scheduling order cannot affect results. The first exception raised by
/// any index is rethrown on the caller.
inline void parallel_for(int count, const std::function<void(int)>& fn) {
  const unsigned hw = std::thread::hardware_concurrency();
  const int workers = static_cast<int>(hw == 0 ? 1 : hw);
  if (workers <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (int i = w; i < count; i += workers) fn(i);
      } catch (...) {
        errors[static_cast<std::size_t>(w)] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }
}

}  // namespace kaczrank
