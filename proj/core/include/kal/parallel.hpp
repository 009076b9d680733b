#ifndef KAL_PARALLEL_HPP
#define KAL_PARALLEL_HPP

#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace kal {

/// Runs fn over [0, count) split into contiguous chunks, one per worker.
/// Workers share read-only inputs and write disjoint output slots, so results
/// are deterministic regardless of scheduling. jobs ≤ 1 runs inline.
inline void parallel_for(std::size_t count, int jobs,
                         const std::function<void(std::size_t, std::size_t)>& fn) {
  if (count == 0) return;
  if (jobs <= 1 || count == 1) {
    fn(0, count);
    return;
  }
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
  const std::size_t chunk = (count + workers - 1) / workers;
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(workers);
  threads.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(count, begin + chunk);
    if (begin >= end) break;
    threads.emplace_back([&, w, begin, end] {
      try {
        fn(begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

} // namespace kal

#endif // KAL_PARALLEL_HPP
